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

#include "prange/gf.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "prange/numth.hpp"

namespace prange {

namespace {

constexpr std::uint32_t kMaxQ = 1u << 16;
constexpr std::uint32_t kMulTableMaxQ = 1u << 12;
constexpr std::uint32_t kAddTableMaxQ = 1u << 9;

// ---- polynomial arithmetic over F_p (dense, ascending coefficients) ----
// Used for modulus validation and for extension-field arithmetic above
// the table threshold.

using FpPoly = std::vector<std::uint32_t>;

void trim(FpPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

FpPoly mul_mod(const FpPoly& a, const FpPoly& b, const FpPoly& mod,
               std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  FpPoly prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      prod[i + j] = (prod[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p;
    }
  }
  // reduce modulo the monic polynomial `mod`
  const std::size_t deg_mod = mod.size() - 1;
  for (std::size_t i = prod.size(); i-- > deg_mod;) {
    std::uint32_t c = prod[i];
    if (c == 0) continue;
    prod[i] = 0;
    for (std::size_t j = 0; j < deg_mod; ++j) {
      std::uint64_t sub = static_cast<std::uint64_t>(c) * mod[j] % p;
      prod[i - deg_mod + j] = (prod[i - deg_mod + j] + p - sub) % p;
    }
  }
  prod.resize(deg_mod);
  trim(prod);
  return prod;
}

FpPoly poly_mod(FpPoly a, const FpPoly& mod, std::uint32_t p) {
  trim(a);
  const std::size_t deg_mod = mod.size() - 1;
  // requires mod monic
  for (std::size_t i = a.size(); i-- > deg_mod;) {
    std::uint32_t c = a[i];
    if (c == 0) continue;
    a[i] = 0;
    for (std::size_t j = 0; j < deg_mod; ++j) {
      std::uint64_t sub = static_cast<std::uint64_t>(c) * mod[j] % p;
      a[i - deg_mod + j] = (a[i - deg_mod + j] + p - sub) % p;
    }
  }
  if (a.size() > deg_mod) a.resize(deg_mod);
  trim(a);
  return a;
}

FpPoly poly_gcd(FpPoly a, FpPoly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    // make b monic before reducing
    std::uint32_t lead = b.back();
    if (lead != 1) {
      std::uint64_t inv = 1, base = lead, e = p - 2;
      while (e) {
        if (e & 1) inv = inv * base % p;
        base = base * base % p;
        e >>= 1;
      }
      for (auto& c : b) c = static_cast<std::uint32_t>(c * inv % p);
    }
    a = poly_mod(std::move(a), b, p);
    std::swap(a, b);
  }
  return a;
}

// x^(p^k) mod f, computed by iterating the Frobenius map.
FpPoly frobenius_power(std::uint32_t k, const FpPoly& f, std::uint32_t p) {
  FpPoly t = {0, 1};  // x
  t = poly_mod(std::move(t), f, p);
  for (std::uint32_t step = 0; step < k; ++step) {
    // t <- t^p mod f by square-and-multiply
    FpPoly base = t;
    FpPoly acc = {1};
    std::uint32_t e = p;
    while (e) {
      if (e & 1) acc = mul_mod(acc, base, f, p);
      base = mul_mod(base, base, f, p);
      e >>= 1;
    }
    t = std::move(acc);
  }
  return t;
}

bool is_irreducible(const FpPoly& f, std::uint32_t p) {
  const std::size_t n = f.size() - 1;
  if (n == 0) return false;
  if (n == 1) return true;
  // f (monic, degree n >= 2) is irreducible over F_p iff it shares no
  // factor with x^(p^k) - x for any 1 <= k < n; for k = 1 this is the
  // no-roots check.
  for (std::uint32_t k = 1; k < n; ++k) {
    FpPoly t = frobenius_power(k, f, p);  // x^(p^k) mod f
    // t - x
    if (t.size() < 2) t.resize(2, 0);
    t[1] = (t[1] + p - 1) % p;
    trim(t);
    if (t.empty()) return false;  // x^(p^k) == x mod f: f splits over F_{p^k}
    FpPoly g = poly_gcd(f, t, p);
    if (g.size() != 1) return false;
  }
  return true;
}

}  // namespace

std::optional<std::vector<std::uint16_t>> Field::builtin_modulus(
    std::uint32_t p, std::uint32_t n) {
  // Ascending coefficients, monic. Each entry is re-verified irreducible
  // whenever a Field is constructed from it.
  static const ModulusTable table = {
      {{2, 2}, {1, 1, 1}},        // x^2 + x + 1
      {{2, 3}, {1, 1, 0, 1}},     // x^3 + x + 1
      {{2, 4}, {1, 1, 0, 0, 1}},  // x^4 + x + 1
      {{3, 2}, {1, 0, 1}},        // x^2 + 1
      {{3, 3}, {1, 2, 0, 1}},     // x^3 + 2x + 1
      {{5, 2}, {2, 0, 1}},        // x^2 + 2
      {{5, 3}, {1, 1, 0, 1}},     // x^3 + x + 1
      {{7, 2}, {1, 0, 1}},        // x^2 + 1
      {{7, 3}, {2, 0, 0, 1}},     // x^3 + 2
      {{11, 2}, {1, 0, 1}},       // x^2 + 1
      {{11, 3}, {4, 1, 0, 1}},    // x^3 + x + 4
      {{13, 2}, {2, 0, 1}},       // x^2 + 2
      {{13, 3}, {2, 0, 0, 1}},    // x^3 + 2
  };
  auto it = table.find({p, n});
  if (it == table.end()) return std::nullopt;
  return it->second;
}

Field::Field(std::uint32_t p, std::uint32_t n, const ModulusTable* overrides)
    : p_(p), n_(n) {
  if (n_ >= 2) {
    if (overrides != nullptr) {
      auto it = overrides->find({p, n});
      if (it != overrides->end()) modulus_ = it->second;
    }
    if (modulus_.empty()) {
      auto built_in = builtin_modulus(p, n);
      if (!built_in) {
        throw std::invalid_argument(
            "no built-in modulus for p=" + std::to_string(p) +
            " n=" + std::to_string(n) + "; supply one explicitly");
      }
      modulus_ = *built_in;
    }
  }
  init();
}

Field::Field(std::uint32_t p, std::uint32_t n, std::vector<std::uint16_t> modulus)
    : p_(p), n_(n), modulus_(std::move(modulus)) {
  if (n_ == 1) modulus_.clear();
  init();
}

void Field::init() {
  if (!is_prime(p_)) {
    throw std::invalid_argument("p=" + std::to_string(p_) + " is not prime");
  }
  if (n_ == 0) throw std::invalid_argument("n must be >= 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < n_; ++i) {
    q *= p_;
    if (q > kMaxQ) {
      throw std::invalid_argument("q = p^n exceeds 2^16");
    }
  }
  q_ = static_cast<std::uint32_t>(q);

  if (n_ >= 2) {
    if (modulus_.size() != n_ + 1) {
      throw std::invalid_argument("modulus must have n+1 coefficients");
    }
    if (modulus_.back() != 1) {
      throw std::invalid_argument("modulus must be monic");
    }
    for (auto c : modulus_) {
      if (c >= p_) throw std::invalid_argument("modulus coefficient >= p");
    }
    FpPoly f(modulus_.begin(), modulus_.end());
    if (!is_irreducible(f, p_)) {
      throw std::invalid_argument("modulus is reducible over F_p");
    }
  } else {
    modulus_.clear();
  }

  // find a generator of F_q^* using formula arithmetic
  const std::uint32_t qm1 = q_ - 1;
  std::vector<std::uint64_t> prime_factors;
  {
    std::uint64_t x = qm1;
    for (std::uint64_t d = 2; d * d <= x; ++d) {
      if (x % d == 0) {
        prime_factors.push_back(d);
        while (x % d == 0) x /= d;
      }
    }
    if (x > 1) prime_factors.push_back(x);
  }
  auto pow_formula = [this](Elem a, std::uint64_t e) {
    Elem r{1}, base = a;
    while (e) {
      if (e & 1) r = mul_formula(r, base);
      base = mul_formula(base, base);
      e >>= 1;
    }
    return r;
  };
  generator_ = Elem{1};
  for (std::uint32_t cand = (q_ > 2) ? 2 : 1; cand < q_; ++cand) {
    bool ok = true;
    for (auto r : prime_factors) {
      if (pow_formula(Elem{static_cast<std::uint16_t>(cand)}, qm1 / r).idx == 1) {
        ok = false;
        break;
      }
    }
    if (ok) {
      generator_ = Elem{static_cast<std::uint16_t>(cand)};
      break;
    }
  }

  if (q_ <= kMulTableMaxQ) {
    tables_ = true;
    exp_.assign(2 * qm1, 0);
    log_.assign(q_, 0);
    Elem g = generator_, acc{1};
    for (std::uint32_t k = 0; k < qm1; ++k) {
      exp_[k] = acc.idx;
      exp_[k + qm1] = acc.idx;
      log_[acc.idx] = static_cast<std::uint16_t>(k);
      acc = mul_formula(acc, g);
    }
  }
  if (n_ >= 2 && q_ <= kAddTableMaxQ) {
    add_tab_.assign(static_cast<std::size_t>(q_) * q_, 0);
    for (std::uint32_t a = 0; a < q_; ++a) {
      for (std::uint32_t b = 0; b <= a; ++b) {
        Elem s = add_formula(Elem{static_cast<std::uint16_t>(a)},
                             Elem{static_cast<std::uint16_t>(b)});
        add_tab_[static_cast<std::size_t>(a) * q_ + b] = s.idx;
        add_tab_[static_cast<std::size_t>(b) * q_ + a] = s.idx;
      }
    }
  }
}

Elem Field::elem(std::uint32_t idx) const {
  if (idx >= q_) {
    throw std::invalid_argument("element index " + std::to_string(idx) +
                                " out of range for q=" + std::to_string(q_));
  }
  return Elem{static_cast<std::uint16_t>(idx)};
}

Elem Field::add_formula(Elem a, Elem b) const {
  if (n_ == 1) {
    std::uint32_t s = a.idx + b.idx;
    if (s >= q_) s -= q_;
    return Elem{static_cast<std::uint16_t>(s)};
  }
  if (p_ == 2) return Elem{static_cast<std::uint16_t>(a.idx ^ b.idx)};
  std::uint32_t x = a.idx, y = b.idx, out = 0, shift = 1;
  for (std::uint32_t k = 0; k < n_; ++k) {
    std::uint32_t d = x % p_ + y % p_;
    if (d >= p_) d -= p_;
    out += d * shift;
    x /= p_;
    y /= p_;
    shift *= p_;
  }
  return Elem{static_cast<std::uint16_t>(out)};
}

Elem Field::neg_formula(Elem a) const {
  if (n_ == 1) {
    return Elem{static_cast<std::uint16_t>(a.idx == 0 ? 0 : q_ - a.idx)};
  }
  if (p_ == 2) return a;
  std::uint32_t x = a.idx, out = 0, shift = 1;
  for (std::uint32_t k = 0; k < n_; ++k) {
    std::uint32_t d = x % p_;
    out += (d == 0 ? 0 : p_ - d) * shift;
    x /= p_;
    shift *= p_;
  }
  return Elem{static_cast<std::uint16_t>(out)};
}

Elem Field::mul_formula(Elem a, Elem b) const {
  if (a.idx == 0 || b.idx == 0) return Elem{0};
  if (n_ == 1) {
    return Elem{static_cast<std::uint16_t>(
        static_cast<std::uint64_t>(a.idx) * b.idx % p_)};
  }
  FpPoly pa, pb;
  for (std::uint32_t x = a.idx; x != 0; x /= p_) pa.push_back(x % p_);
  for (std::uint32_t x = b.idx; x != 0; x /= p_) pb.push_back(x % p_);
  FpPoly mod(modulus_.begin(), modulus_.end());
  FpPoly prod = mul_mod(pa, pb, mod, p_);
  std::uint32_t out = 0, shift = 1;
  for (std::size_t k = 0; k < prod.size(); ++k) {
    out += prod[k] * shift;
    shift *= p_;
  }
  return Elem{static_cast<std::uint16_t>(out)};
}

Elem Field::add(Elem a, Elem b) const {
  if (!add_tab_.empty()) {
    return Elem{add_tab_[static_cast<std::size_t>(a.idx) * q_ + b.idx]};
  }
  return add_formula(a, b);
}

Elem Field::neg(Elem a) const { return neg_formula(a); }

Elem Field::sub(Elem a, Elem b) const { return add(a, neg_formula(b)); }

Elem Field::mul(Elem a, Elem b) const {
  if (tables_) {
    if (a.idx == 0 || b.idx == 0) return Elem{0};
    return Elem{exp_[log_[a.idx] + log_[b.idx]]};
  }
  return mul_formula(a, b);
}

Elem Field::inv(Elem a) const {
  if (a.idx == 0) throw std::domain_error("division by zero in F_q");
  if (tables_) {
    const std::uint32_t qm1 = q_ - 1;
    return Elem{exp_[(qm1 - log_[a.idx]) % qm1]};
  }
  return pow(a, q_ - 2);
}

Elem Field::pow(Elem a, std::uint64_t e) const {
  if (tables_ && a.idx != 0) {
    const std::uint32_t qm1 = q_ - 1;
    std::uint64_t k = static_cast<std::uint64_t>(log_[a.idx]) * (e % qm1) % qm1;
    return Elem{exp_[k]};
  }
  Elem r{1}, base = a;
  while (e) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

std::uint32_t Field::order(Elem c) const {
  if (c.idx == 0) throw std::domain_error("order of zero is undefined");
  std::uint32_t ord = q_ - 1;
  for (auto d : divisors(q_ - 1)) {
    if (pow(c, d).idx == 1) {
      ord = static_cast<std::uint32_t>(d);
      break;
    }
  }
  return ord;
}

std::vector<std::uint16_t> Field::digits(Elem a) const {
  std::vector<std::uint16_t> d(n_, 0);
  std::uint32_t x = a.idx;
  for (std::uint32_t k = 0; k < n_; ++k) {
    d[k] = static_cast<std::uint16_t>(x % p_);
    x /= p_;
  }
  return d;
}

Elem Field::from_digits(const std::vector<std::uint16_t>& d) const {
  if (d.size() > n_) throw std::invalid_argument("too many digits");
  std::uint32_t out = 0, shift = 1;
  for (std::size_t k = 0; k < d.size(); ++k) {
    if (d[k] >= p_) throw std::invalid_argument("digit >= p");
    out += d[k] * shift;
    shift *= p_;
  }
  return elem(out);
}

std::uint64_t Field::digest() const {
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a
  auto mix = [&h](std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (8 * i)) & 0xff;
      h *= 1099511628211ull;
    }
  };
  mix(p_);
  mix(n_);
  for (auto c : modulus_) mix(c);
  return h;
}

ModulusTable parse_modulus_config(const std::string& text) {
  ModulusTable table;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first) || first[0] == '#') continue;
    std::uint32_t p = 0, n = 0;
    try {
      p = static_cast<std::uint32_t>(std::stoul(first));
    } catch (const std::exception&) {
      throw std::invalid_argument("modulus config line " +
                                  std::to_string(lineno) + ": bad p");
    }
    if (!(ls >> n)) {
      throw std::invalid_argument("modulus config line " +
                                  std::to_string(lineno) + ": missing n");
    }
    std::vector<std::uint16_t> coeffs;
    std::uint32_t c;
    while (ls >> c) coeffs.push_back(static_cast<std::uint16_t>(c));
    if (coeffs.size() != n + 1) {
      throw std::invalid_argument(
          "modulus config line " + std::to_string(lineno) + ": expected " +
          std::to_string(n + 1) + " coefficients, got " +
          std::to_string(coeffs.size()));
    }
    table[{p, n}] = std::move(coeffs);
  }
  return table;
}

ModulusTable load_modulus_config(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot open modulus config: " + path);
  std::ostringstream buf;
  buf << f.rdbuf();
  return parse_modulus_config(buf.str());
}

Field field_for_q(std::uint32_t q, const ModulusTable* overrides) {
  std::uint64_t p = 0;
  std::uint32_t n = 0;
  if (!prime_power(q, p, n)) {
    throw std::invalid_argument("q=" + std::to_string(q) +
                                " is not a prime power");
  }
  return Field(static_cast<std::uint32_t>(p), n, overrides);
}

}  // namespace prange
