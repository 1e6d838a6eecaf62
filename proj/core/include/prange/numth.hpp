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

#ifndef PRANGE_NUMTH_HPP
#define PRANGE_NUMTH_HPP

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace prange {

// Every bound formula in this project is evaluated exactly; intermediate
// quantities like (q-1)...(q-m+1)/m! are only integral in aggregate, so
// they flow through Rat and are converted back with an integrality check.
using Int = mpz_class;
using Rat = mpq_class;

// Euler's totient. Throws std::invalid_argument for i == 0.
Int euler_phi(std::uint64_t i);

// All positive divisors of n, ascending. n >= 1.
std::vector<std::uint64_t> divisors(std::uint64_t n);

// Exact binomial coefficient; k > n yields 0.
Int binomial(std::uint64_t n, std::uint64_t k);

// n! as an exact integer.
Int factorial(std::uint64_t n);

// Reduced rational num/den (den > 0 after canonicalization).
Rat make_rat(const Int& num, const Int& den);

bool is_integral(const Rat& r);

// Converts an integral rational to Int; throws IntegrityError otherwise.
Int to_int(const Rat& r);

bool is_prime(std::uint64_t n);

// Factors q as p^n with p prime, n >= 1. Returns false if q is not a
// prime power (or q < 2).
bool prime_power(std::uint64_t q, std::uint64_t& p, std::uint32_t& n);

}  // namespace prange

#endif
