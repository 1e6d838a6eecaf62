/*
   Copyright 2026 The prange authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "prange/numth.hpp"

#include <algorithm>
#include <stdexcept>

#include "prange/errors.hpp"

namespace prange {

Int euler_phi(std::uint64_t i) {
  if (i == 0) throw std::invalid_argument("euler_phi: i must be >= 1");
  std::uint64_t result = i;
  std::uint64_t x = i;
  for (std::uint64_t d = 2; d * d <= x; ++d) {
    if (x % d == 0) {
      while (x % d == 0) x /= d;
      result -= result / d;
    }
  }
  if (x > 1) result -= result / x;
  return Int(static_cast<unsigned long>(result));
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("divisors: n must be >= 1");
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d != n / d) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

Int binomial(std::uint64_t n, std::uint64_t k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

Int factorial(std::uint64_t n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

bool is_integral(const Rat& r) { return r.get_den() == 1; }

Int to_int(const Rat& r) {
  if (!is_integral(r)) {
    throw IntegrityError("expected integral value, got " + r.get_str());
  }
  return r.get_num();
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool prime_power(std::uint64_t q, std::uint64_t& p, std::uint32_t& n) {
  if (q < 2) return false;
  std::uint64_t base = q;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      base = d;
      break;
    }
  }
  std::uint64_t x = q;
  std::uint32_t e = 0;
  while (x % base == 0) {
    x /= base;
    ++e;
  }
  if (x != 1) return false;
  p = base;
  n = e;
  return true;
}

}  // namespace prange
