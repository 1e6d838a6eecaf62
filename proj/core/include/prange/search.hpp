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

#ifndef PRANGE_SEARCH_HPP
#define PRANGE_SEARCH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "prange/action.hpp"
#include "prange/gf.hpp"
#include "prange/msets.hpp"
#include "prange/numth.hpp"
#include "prange/polyrange.hpp"

namespace prange {

struct EnumOptions {
  // With pruning, one (lambda, T) per orbit of the affine action is
  // evaluated (orbit mates have identical ranges); results are identical
  // in both modes.
  bool prune = true;
  unsigned workers = 1;
  std::uint64_t guard_ops = 100'000'000;
};

// Deduplicated image of the family of least-degree polynomials
// f_(lambda,T) over all lambda in F_q^*, |T| = m: each entry is the
// nonzero part of one attainable value multiset (the zero part is always
// exactly ell = q - m). Sorted canonically.
struct RangeFamilyImage {
  std::uint32_t q = 0, m = 0;
  std::uint64_t lambda_count = 0;   // q - 1
  std::uint64_t support_count = 0;  // binom(q, m)
  std::vector<NonzeroMultiset> ranges;

  std::uint64_t size() const { return ranges.size(); }
  bool contains(const NonzeroMultiset& ms) const;
};

RangeFamilyImage enumerate_range_F(std::uint32_t m, const Field& fq,
                                   const EnumOptions& opts = {});

std::vector<RangeMultiset> as_range_multisets(const RangeFamilyImage& image,
                                              const Field& fq);

// Admissible multisets that no polynomial of degree <= ell attains: the
// set difference M \ range(F) in ascending canonical order, truncated at
// `limit` when given. Requires 2 <= m = q - ell < q/2 so that the zero
// count strictly dominates.
std::vector<NonzeroMultiset> find_counterexamples(
    std::uint32_t ell, const Field& fq,
    std::optional<std::uint64_t> limit = std::nullopt,
    const EnumOptions& opts = {});

// Machine-checkable record of one exhaustive search outcome for a single
// multiset: either no (lambda, T) attains it (counterexample: no
// polynomial of degree <= ell has this value multiset), or a witness
// pair attains it.
struct Certificate {
  std::uint32_t p = 0, n = 1;
  std::vector<std::uint16_t> modulus;  // empty for prime fields
  std::uint32_t ell = 0, m = 0;
  NonzeroMultiset multiset;
  std::uint64_t lambda_count = 0, support_count = 0;
  std::uint64_t distinct_ranges_found = 0;
  enum class Verdict { Counterexample, Achieved } verdict = Verdict::Counterexample;
  std::optional<PointedSupport> witness;  // set iff verdict == Achieved
  std::string tool_version;
  std::int64_t elapsed_ms = 0;

  std::uint32_t q() const;
};

// Runs the full enumeration for (q, ell) and records the verdict for M.
// M must be admissible for (q, ell). An already-computed image for the
// same (field, m) may be passed to avoid re-enumerating.
Certificate make_certificate(std::uint32_t ell, const NonzeroMultiset& M,
                             const Field& fq, const EnumOptions& opts = {},
                             const RangeFamilyImage* precomputed = nullptr);

struct VerifyResult {
  bool ok = false;
  std::string reason;  // empty when ok
};

// Re-derives a certificate's verdict from scratch: reconstructs the
// field, revalidates the multiset, re-checks the witness range directly
// (achieved) or re-enumerates and compares (counterexample). Running
// with the opposite pruning mode gives an independent re-check.
VerifyResult verify_certificate(const Certificate& cert,
                                const EnumOptions& opts = {});

// Direct realizations for the two smallest support sizes, valid for any
// zero-sum nonzero inputs:
//   m = 2, (b1, -b1):   T = {b1^{-1}, 0},    lambda = 1
//   m = 3, (b1, b2, b3): T = {b2, -b1, 0},   lambda = b1*b2*b3
// The returned witness is verified by computing the full range.
struct ConstructionWitness {
  std::uint32_t m = 0;
  std::vector<Elem> inputs;
  PointedSupport witness;
  bool verified = false;
};

ConstructionWitness construct_small_m(const std::vector<Elem>& b,
                                      const Field& fq);

// Termwise comparisons between the orbit-count upper bound and the
// family lower bound (m >= 4): (i) leading terms, (ii) each shared
// divisor term with 1 < i < m-1, (iii) the i = m-1 term against q-1.
// Vacuous comparisons hold.
struct TermComparison {
  bool leading = false;
  bool divisor_terms = false;
  bool residual_term = false;
  bool all() const { return leading && divisor_terms && residual_term; }
};

TermComparison compare_bound_terms(std::uint32_t q, std::uint32_t m);

// One row of the bound table: everything the comparison
// |admissible| > |attainable| needs, with optional exact counts from
// enumeration.
struct BoundsReport {
  std::uint32_t q = 0, m = 0;
  std::uint64_t p = 0;
  std::uint32_t n = 1;
  std::uint32_t ell = 0;  // q - m
  std::uint32_t k = 0;    // m - 1
  std::uint64_t d = 0;    // gcd(q-1, m-1)
  Int burnside_n;
  bool hypothesis_ok = false;           // m < sqrt(p)+1
  std::optional<Rat> lower_bound;       // m >= 4 only
  std::optional<Int> exact_m;           // |admissible multisets|
  std::optional<Int> exact_range_f;     // |image of the family|
  std::optional<TermComparison> term_comparison;  // m >= 4 only
  bool theorem_regime = false;          // p > 9 and 4 <= m <= sqrt(p)+1
  bool counterexamples_guaranteed = false;
};

BoundsReport bounds_report(std::uint32_t q, std::uint32_t m,
                           bool with_exact = false,
                           const Field* fq = nullptr,
                           const EnumOptions& opts = {});

}  // namespace prange

#endif
