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

#ifndef PRANGE_POLYRANGE_HPP
#define PRANGE_POLYRANGE_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "prange/gf.hpp"

namespace prange {

// Degree of the zero polynomial. Kept distinct from 0 (the degree of a
// nonzero constant) so that degree comparisons against thresholds are
// well-typed; -1 compares below every admissible degree.
inline constexpr int kZeroPolyDegree = -1;

// Dense polynomial over F_q, ascending coefficients, no trailing zeros.
// A mapping F_q -> F_q has a unique representative of degree <= q-1
// (its reduced form); everything this library produces is reduced.
struct Poly {
  std::vector<Elem> coeffs;

  int degree() const {
    return coeffs.empty() ? kZeroPolyDegree
                          : static_cast<int>(coeffs.size()) - 1;
  }
  bool is_zero() const { return coeffs.empty(); }
  Elem leading() const { return coeffs.empty() ? Elem{0} : coeffs.back(); }

  static Poly zero() { return {}; }
  static Poly constant(Elem c) {
    Poly f;
    if (c.idx != 0) f.coeffs = {c};
    return f;
  }
  // Trims trailing zeros.
  static Poly from_coeffs(std::vector<Elem> coeffs);

  friend bool operator==(const Poly&, const Poly&) = default;
};

// Set of m distinct support points, strictly ascending. 2 <= m <= q.
struct SupportSet {
  std::vector<Elem> elems;

  std::size_t m() const { return elems.size(); }
  bool contains(Elem x) const;

  // Sorts, validates distinctness and the size bounds.
  static SupportSet checked(std::vector<Elem> elems, const Field& fq);

  friend auto operator<=>(const SupportSet&, const SupportSet&) = default;
};

// A support set T together with a nonzero leading scalar: the data that
// pins down the least-degree polynomial vanishing exactly off T.
struct PointedSupport {
  Elem lambda;
  SupportSet support;

  friend auto operator<=>(const PointedSupport&, const PointedSupport&) = default;
};

// Value multiset of a mapping F_q -> F_q: counts[v] = #preimages of v,
// summing to q. The count vector itself is the canonical form.
struct RangeMultiset {
  std::vector<std::uint16_t> counts;

  std::uint32_t q() const { return static_cast<std::uint32_t>(counts.size()); }

  friend auto operator<=>(const RangeMultiset&, const RangeMultiset&) = default;
};

// Horner evaluation.
Elem eval(const Poly& f, Elem x, const Field& fq);

// Value multiset of f over all of F_q (values with multiplicities).
RangeMultiset range_of(const Poly& f, const Field& fq);

// The least-degree polynomial that is nonzero exactly on T:
//   f(x) = lambda * prod_{s not in T} (x - s),
// expanded by incremental convolution. Degree is exactly ell = q - m and
// the roots are exactly the complement of T. Requires 2 <= m <= q-1 and
// lambda != 0.
Poly minimal_poly(const PointedSupport& ps, const Field& fq);

// Values of minimal_poly(ps) on T only, without expanding the product:
//   f(s^) = -lambda * (prod_{s in T, s != s^} (s^ - s))^{-1},
// one inversion and m-1 multiplications per point. Returned in the order
// of ps.support.elems. Defined only on T.
std::vector<Elem> fast_values(const PointedSupport& ps, const Field& fq);

// Unique reduced polynomial (degree <= q-1) through q points whose x
// coordinates are exactly F_q, each once. Throws std::invalid_argument
// on duplicate or missing x.
Poly interpolate(const std::vector<std::pair<Elem, Elem>>& points,
                 const Field& fq);

// Convenience: f * g and f + g over F_q (used by interpolation and tests).
Poly poly_mul(const Poly& f, const Poly& g, const Field& fq);
Poly poly_add(const Poly& f, const Poly& g, const Field& fq);

}  // namespace prange

#endif
