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

#ifndef PRANGE_GF_HPP
#define PRANGE_GF_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace prange {

// An element of F_q, identified by its index in [0, q). The base-p digits
// of the index are the coefficients of the residue polynomial (for prime
// fields the index is the residue itself). Index 0 is the additive
// identity, index 1 the multiplicative identity. The encoding is canonical
// and order-stable, which makes sets and multisets of elements cheap to
// deduplicate and compare.
struct Elem {
  std::uint16_t idx = 0;
  friend auto operator<=>(const Elem&, const Elem&) = default;
};

// Optional override table for extension-field moduli, keyed by (p, n).
// Coefficients are ascending-degree, length n+1, monic.
using ModulusTable = std::map<std::pair<std::uint32_t, std::uint32_t>,
                              std::vector<std::uint16_t>>;

// Parses a modulus config file: one entry per line, `p n c_0 c_1 ... c_n`
// with coefficients in ascending degree order. Blank lines and lines
// starting with '#' are skipped. Throws std::invalid_argument on parse
// errors; entries are validated for irreducibility when a Field is built.
ModulusTable load_modulus_config(const std::string& path);
ModulusTable parse_modulus_config(const std::string& text);

/// Arithmetic in F_q, q = p^n <= 2^16, exact throughout. Prime fields use
/// modular arithmetic; extension fields reduce modulo a monic irreducible
/// polynomial over F_p, either supplied by the caller, taken from the
/// built-in table, or from an override table. Irreducibility is verified
/// at construction (gcd(x^{p^k} - x, modulus) = 1 for all 1 <= k < n).
///
/// Instances are immutable after construction and safe to share across
/// threads; all operations are pure.
class Field {
 public:
  // Prime field (n = 1) or extension field with a built-in / override
  // modulus. Throws std::invalid_argument when p is not prime, q exceeds
  // 2^16, or no modulus is known for (p, n).
  explicit Field(std::uint32_t p, std::uint32_t n = 1,
                 const ModulusTable* overrides = nullptr);

  // Extension field with an explicit modulus (ascending coefficients,
  // length n+1, monic, irreducible over F_p; ignored when n = 1).
  Field(std::uint32_t p, std::uint32_t n, std::vector<std::uint16_t> modulus);

  std::uint32_t p() const { return p_; }
  std::uint32_t n() const { return n_; }
  std::uint32_t q() const { return q_; }
  // Empty for prime fields.
  const std::vector<std::uint16_t>& modulus() const { return modulus_; }

  Elem zero() const { return Elem{0}; }
  Elem one() const { return Elem{1}; }
  // Bounds-checked construction from an index.
  Elem elem(std::uint32_t idx) const;

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  // Multiplicative inverse; throws std::domain_error for 0.
  Elem inv(Elem a) const;
  // a^e with 0^0 = 1.
  Elem pow(Elem a, std::uint64_t e) const;
  // Order of c in F_q^*; throws std::domain_error for 0. Divides q-1.
  std::uint32_t order(Elem c) const;
  // A fixed generator of the cyclic group F_q^*.
  Elem generator() const { return generator_; }

  // Base-p digits of the residue polynomial, ascending degree, length n.
  std::vector<std::uint16_t> digits(Elem a) const;
  Elem from_digits(const std::vector<std::uint16_t>& d) const;

  // Content digest over (p, n, modulus); used as a cache key.
  std::uint64_t digest() const;

  // Built-in modulus for (p, n), if any. Covers p in {2,3,5,7,11,13} for
  // n in {2,3}, plus (2,4); every entry is verified irreducible by the
  // constructor.
  static std::optional<std::vector<std::uint16_t>> builtin_modulus(
      std::uint32_t p, std::uint32_t n);

 private:
  void init();

  std::uint32_t p_ = 0, n_ = 0, q_ = 0;
  std::vector<std::uint16_t> modulus_;  // empty when n == 1
  Elem generator_{0};

  // Multiplicative log/exp tables, built when q <= 2^12; above that
  // threshold multiplication reduces the product polynomial on the fly.
  bool tables_ = false;
  std::vector<std::uint16_t> exp_;  // exp_[k] = g^k, k in [0, 2(q-1))
  std::vector<std::uint16_t> log_;  // log_[a] for a != 0

  // Full addition table for small fields (q <= 2^9); the enumeration hot
  // loops only ever touch fields of that size.
  std::vector<std::uint16_t> add_tab_;

  Elem mul_formula(Elem a, Elem b) const;
  Elem add_formula(Elem a, Elem b) const;
  Elem neg_formula(Elem a) const;
};

// Builds the field of order q = p^n from q alone (built-in or override
// modulus for extension fields). Throws when q is not a prime power.
Field field_for_q(std::uint32_t q, const ModulusTable* overrides = nullptr);

}  // namespace prange

#endif
