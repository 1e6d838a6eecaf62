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

#ifndef PRANGE_MSETS_HPP
#define PRANGE_MSETS_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "prange/gf.hpp"
#include "prange/numth.hpp"
#include "prange/polyrange.hpp"

namespace prange {

// The nonzero part of an admissible value multiset: m elements of F_q^*
// (with repetition, stored non-decreasing) whose field sum is zero. A
// full multiset is recovered by pairing it with ell = q - m zeros; when
// ell > m the zero count strictly dominates every multiplicity.
struct NonzeroMultiset {
  std::vector<Elem> values;  // non-decreasing, all nonzero

  std::uint32_t m() const { return static_cast<std::uint32_t>(values.size()); }
  std::uint32_t max_multiplicity() const;
  std::uint32_t distinct_count() const;
  // (element, multiplicity) pairs, ascending by element.
  std::vector<std::pair<std::uint16_t, std::uint16_t>> entries() const;

  // Validates: sorted, nonzero, in range, field sum zero.
  static NonzeroMultiset checked(std::vector<Elem> values, const Field& fq);

  friend auto operator<=>(const NonzeroMultiset&, const NonzeroMultiset&) = default;
};

// Field sum of all values (with multiplicity).
Elem multiset_sum(const NonzeroMultiset& ms, const Field& fq);

// Full count-vector form: ell = q - m zeros plus the nonzero values.
RangeMultiset to_range_multiset(const NonzeroMultiset& ms, const Field& fq);
// Inverse; requires counts[0] consistent with q - m.
NonzeroMultiset nonzero_part(const RangeMultiset& rm);

// Streams every size-m multiset over F_q^* with zero field sum, each
// exactly once, in ascending canonical order. The last entry of each
// multiset is forced by the sum constraint, so no deduplication pass is
// needed. Guard: binom(q+m-2, m) <= max_candidates.
void enumerate_M(std::uint32_t m, const Field& fq,
                 const std::function<void(const NonzeroMultiset&)>& visit,
                 std::uint64_t max_candidates = 100'000'000);

std::vector<NonzeroMultiset> collect_M(std::uint32_t m, const Field& fq,
                                       std::uint64_t max_candidates = 100'000'000);

Int count_M_exact(std::uint32_t m, const Field& fq,
                  std::uint64_t max_candidates = 100'000'000);

struct LowerBoundTerm {
  std::uint64_t i;  // 1 < i < m-1, i | gcd(q-1, m-1)
  Rat value;
};

// Exact size of the repeated-multiplicity family with r = (m-1)/i
// distinct elements of multiplicity i plus one forced residual:
//   (q-1)...(q-r+2) * [(q-r+1)(q-r-1) + r] / r!
Rat family_mi_count(std::uint32_t q, std::uint64_t r);

// Proven lower bound on the number of admissible multisets, assembled
// from the constructive families:
//   m >= 6:  |M_0 bound| + sum over i of |M_i| + A(q-1)
//   m  = 5:  (q-1)(q-2)^2(q-3)/5! + A(q-1)
//   m  = 4:  (q-1)(q-2)^2/4!   (the M_0 bound; unconditional in q)
// where A = 1 iff m-1 | q-1. Returned exactly as a rational; the true
// count is an integer above it.
struct LowerBoundReport {
  std::uint32_t q = 0, m = 0;
  int A = 0;
  enum class Case { General, M5, M4WithCubes, M4General } bound_case;
  Rat bound;
  std::vector<LowerBoundTerm> per_i_terms;  // populated for m >= 6
};

LowerBoundReport lower_bound_M(std::uint32_t q, std::uint32_t m);

// Membership of a multiset in the constructive families:
//   M_i (1 < i <= m-1, i | gcd(q-1, m-1)): (m-1)/i distinct elements of
//     multiplicity i plus one residual element, which may merge with one
//     of them; i = m-1 is the "all equal but one" family.
//   M_0: at least m-2 distinct elements (multiplicities <= 3 follows).
// Families may overlap for small m; membership is reported per family.
struct FamilyMembership {
  bool in_m0 = false;
  std::vector<std::uint32_t> in_mi;  // ascending applicable i

  bool other() const { return !in_m0 && in_mi.empty(); }
  // "M_0", "M_3", "M_0&M_2", "other"
  std::string label() const;
};

FamilyMembership classify_family(const NonzeroMultiset& ms, std::uint32_t q,
                                 std::uint32_t m);

}  // namespace prange

#endif
