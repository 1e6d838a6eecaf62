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

#ifndef PRANGE_ACTION_HPP
#define PRANGE_ACTION_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "prange/gf.hpp"
#include "prange/numth.hpp"
#include "prange/polyrange.hpp"

namespace prange {

// Invertible affine map x -> c*x + b over F_q. These form a group under
// composition, and the group acts on scalar/support pairs by
//   (c*x + b) . (lambda, T) = (c^{m-1} * lambda, c*T + b),
// which leaves the value multiset of the associated least-degree
// polynomial unchanged.
struct AffineMap {
  Elem c{1};  // != 0
  Elem b{0};

  friend auto operator<=>(const AffineMap&, const AffineMap&) = default;
};

inline AffineMap affine_identity() { return AffineMap{Elem{1}, Elem{0}}; }
Elem apply(const AffineMap& g, Elem x, const Field& fq);
// (g_outer . g_inner)(x) = g_outer(g_inner(x)).
AffineMap compose(const AffineMap& outer, const AffineMap& inner,
                  const Field& fq);
AffineMap affine_inverse(const AffineMap& g, const Field& fq);

// Group action on scalar/support pairs; the support is re-sorted.
PointedSupport act(const AffineMap& g, const PointedSupport& ps,
                   const Field& fq);

// Full orbit of ps under all q(q-1) affine maps, deduplicated and sorted.
// Its size divides q(q-1).
std::vector<PointedSupport> orbit_of(const PointedSupport& ps,
                                     const Field& fq);

struct DivisorTerm {
  std::uint64_t i;  // divisor of gcd(q-1, m-1), i > 1
  Int phi;          // Euler phi(i)
  Int term;         // phi(i) * binom((q-1)/i, (m-1)/i)
};

// Orbit count of the affine action on F_q^* x {m-subsets}, computed
// symbolically from (q, m) alone via Burnside's lemma:
//   N = (q-1)(q-2)...(q-m+1)/m! + sum_{i | d, i>1} phi(i) binom((q-1)/i, (m-1)/i)
// with d = gcd(q-1, m-1). The derivation assumes no m-subset is a union
// of char-p translation cycles, which holds exactly when p does not
// divide m; p | m raises IntegrityError (the count would silently
// undercount), as does a non-integral total. `hypothesis_ok` records the
// stricter m < sqrt(p)+1 regime.
struct OrbitCountReport {
  std::uint32_t q = 0, m = 0;
  std::uint64_t p = 0;  // characteristic (q = p^n)
  std::uint64_t d = 0;  // gcd(q-1, m-1)
  Rat leading_term;     // (q-1)...(q-m+1)/m!
  std::vector<DivisorTerm> per_divisor_terms;
  Int burnside_n;
  bool hypothesis_ok = false;             // (m-1)^2 < p, i.e. m < sqrt(p)+1
  std::optional<Int> enumerated_orbits;   // filled in by callers that enumerate
};

OrbitCountReport burnside_orbit_count(std::uint32_t q, std::uint32_t m);

// Exact orbit count by a union-find sweep over all (lambda, T) pairs,
// independent of the Burnside formula. Guard:
// (q-1) * binom(q, m) <= max_pairs.
Int count_orbits_enumerated(std::uint32_t m, const Field& fq,
                            std::uint64_t max_pairs = 10'000'000);

// Formula report with enumerated_orbits filled in from the union-find
// sweep; the two counts must agree whenever m < p.
OrbitCountReport orbit_count_with_enumeration(
    std::uint32_t m, const Field& fq, std::uint64_t max_pairs = 10'000'000);

// Number of (lambda, T) pairs fixed by g, by the per-case analysis:
//   identity                  -> (q-1) * binom(q, m)
//   c != 1, ord(c) | m-1      -> (q-1) * binom((q-1)/ord(c), (m-1)/ord(c))
//   c != 1, ord(c) | m        -> 0   (the scalar condition c^{m-1}=1 fails)
//   c != 1, neither           -> 0   (no invariant support exists)
//   c == 1, b != 0            -> 0   (requires m < p)
// Requires m < p so that no m-subset is a union of translation cycles.
Int fixed_points(const AffineMap& g, std::uint32_t m, const Field& fq);

}  // namespace prange

#endif
