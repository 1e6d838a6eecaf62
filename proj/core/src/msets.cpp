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

#include "prange/msets.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "prange/errors.hpp"

namespace prange {

std::uint32_t NonzeroMultiset::max_multiplicity() const {
  std::uint32_t best = 0, run = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    run = (i > 0 && values[i] == values[i - 1]) ? run + 1 : 1;
    best = std::max(best, run);
  }
  return best;
}

std::uint32_t NonzeroMultiset::distinct_count() const {
  std::uint32_t d = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i == 0 || values[i] != values[i - 1]) ++d;
  }
  return d;
}

std::vector<std::pair<std::uint16_t, std::uint16_t>> NonzeroMultiset::entries()
    const {
  std::vector<std::pair<std::uint16_t, std::uint16_t>> out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i == 0 || values[i] != values[i - 1]) {
      out.emplace_back(values[i].idx, 1);
    } else {
      ++out.back().second;
    }
  }
  return out;
}

Elem multiset_sum(const NonzeroMultiset& ms, const Field& fq) {
  Elem s{0};
  for (Elem v : ms.values) s = fq.add(s, v);
  return s;
}

NonzeroMultiset NonzeroMultiset::checked(std::vector<Elem> values,
                                         const Field& fq) {
  std::sort(values.begin(), values.end());
  if (values.empty()) throw std::invalid_argument("empty multiset");
  for (Elem v : values) {
    if (v.idx == 0) throw std::invalid_argument("multiset contains zero");
    if (v.idx >= fq.q()) throw std::invalid_argument("multiset element >= q");
  }
  NonzeroMultiset ms{std::move(values)};
  if (multiset_sum(ms, fq).idx != 0) {
    throw std::invalid_argument("multiset does not sum to zero");
  }
  return ms;
}

RangeMultiset to_range_multiset(const NonzeroMultiset& ms, const Field& fq) {
  if (ms.m() > fq.q()) throw std::invalid_argument("multiset larger than q");
  RangeMultiset rm;
  rm.counts.assign(fq.q(), 0);
  rm.counts[0] = static_cast<std::uint16_t>(fq.q() - ms.m());
  for (Elem v : ms.values) ++rm.counts[v.idx];
  return rm;
}

NonzeroMultiset nonzero_part(const RangeMultiset& rm) {
  NonzeroMultiset ms;
  for (std::uint32_t v = 1; v < rm.q(); ++v) {
    for (std::uint32_t k = 0; k < rm.counts[v]; ++k) {
      ms.values.push_back(Elem{static_cast<std::uint16_t>(v)});
    }
  }
  return ms;
}

void enumerate_M(std::uint32_t m, const Field& fq,
                 const std::function<void(const NonzeroMultiset&)>& visit,
                 std::uint64_t max_candidates) {
  const std::uint32_t q = fq.q();
  if (m < 2) throw std::invalid_argument("enumerate_M: need m >= 2");
  Int candidates = binomial(q + m - 2, m);
  if (candidates > Int(static_cast<unsigned long>(max_candidates))) {
    throw GuardExceeded("multiset enumeration space " + candidates.get_str() +
                        " exceeds guard " + std::to_string(max_candidates));
  }

  // Non-decreasing prefixes (b_1 <= ... <= b_{m-1}); the final element is
  // forced by the zero-sum constraint and accepted only when it keeps the
  // sequence non-decreasing, so each multiset appears exactly once.
  NonzeroMultiset ms;
  ms.values.resize(m);
  auto rec = [&](auto&& self, std::uint32_t depth, std::uint32_t start,
                 Elem partial) -> void {
    if (depth == m - 1) {
      Elem last = fq.neg(partial);
      if (last.idx != 0 && last.idx >= start) {
        ms.values[m - 1] = last;
        visit(ms);
      }
      return;
    }
    for (std::uint32_t v = start; v < q; ++v) {
      Elem ve{static_cast<std::uint16_t>(v)};
      ms.values[depth] = ve;
      self(self, depth + 1, v, fq.add(partial, ve));
    }
  };
  rec(rec, 0, 1, Elem{0});
}

std::vector<NonzeroMultiset> collect_M(std::uint32_t m, const Field& fq,
                                       std::uint64_t max_candidates) {
  std::vector<NonzeroMultiset> out;
  enumerate_M(m, fq, [&out](const NonzeroMultiset& ms) { out.push_back(ms); },
              max_candidates);
  return out;
}

Int count_M_exact(std::uint32_t m, const Field& fq,
                  std::uint64_t max_candidates) {
  std::uint64_t n = 0;
  enumerate_M(m, fq, [&n](const NonzeroMultiset&) { ++n; }, max_candidates);
  return Int(static_cast<unsigned long>(n));
}

Rat family_mi_count(std::uint32_t q, std::uint64_t r) {
  if (r < 2 || r >= q) throw std::invalid_argument("need 2 <= r < q");
  // Ordered tuples: (q-1)...(q-r+2) * [(q-r+1)(q-r-1) + r], divided by
  // the r! orderings of the distinct elements.
  Int prefix = 1;
  for (std::uint64_t j = 1; j + 1 < r; ++j) prefix *= (q - j);
  Int tail = Int(static_cast<unsigned long>(q - r + 1)) *
                 Int(static_cast<unsigned long>(q - r - 1)) +
             Int(static_cast<unsigned long>(r));
  return make_rat(prefix * tail, factorial(r));
}

LowerBoundReport lower_bound_M(std::uint32_t q, std::uint32_t m) {
  if (m < 4) throw std::invalid_argument("lower_bound_M: need m >= 4");
  if (q <= m) throw std::invalid_argument("lower_bound_M: need q > m");
  LowerBoundReport rep;
  rep.q = q;
  rep.m = m;
  rep.A = ((q - 1) % (m - 1) == 0) ? 1 : 0;

  auto m0_bound = [&](std::uint32_t hi) {
    // (q-1)...(q-m+2)(q-2) / m!
    Int num = Int(q) - 2;
    for (std::uint32_t j = 1; j <= hi; ++j) num *= (q - j);
    return make_rat(num, factorial(m));
  };

  if (m == 4) {
    rep.bound_case = ((q - 1) % 3 == 0) ? LowerBoundReport::Case::M4WithCubes
                                        : LowerBoundReport::Case::M4General;
    // (q-1)(q-2)^2 / 4!; the M_0 count alone, valid for any q
    rep.bound = m0_bound(2);
    return rep;
  }
  if (m == 5) {
    rep.bound_case = LowerBoundReport::Case::M5;
    rep.bound = m0_bound(3) + Rat(rep.A * static_cast<long>(q - 1));
    return rep;
  }

  rep.bound_case = LowerBoundReport::Case::General;
  Rat total = m0_bound(m - 2);
  const std::uint64_t d = std::gcd<std::uint64_t>(q - 1, m - 1);
  for (std::uint64_t i : divisors(d)) {
    if (i == 1 || i == static_cast<std::uint64_t>(m - 1)) continue;
    LowerBoundTerm t;
    t.i = i;
    t.value = family_mi_count(q, (m - 1) / i);
    total += t.value;
    rep.per_i_terms.push_back(std::move(t));
  }
  total += Rat(rep.A * static_cast<long>(q - 1));
  rep.bound = total;
  return rep;
}

std::string FamilyMembership::label() const {
  if (other()) return "other";
  std::string out;
  if (in_m0) out = "M_0";
  for (auto i : in_mi) {
    if (!out.empty()) out += "&";
    out += "M_" + std::to_string(i);
  }
  return out;
}

FamilyMembership classify_family(const NonzeroMultiset& ms, std::uint32_t q,
                                 std::uint32_t m) {
  if (ms.m() != m) throw std::invalid_argument("multiset size != m");
  FamilyMembership fam;
  fam.in_m0 = ms.distinct_count() + 2 >= m;

  auto mults = ms.entries();
  std::vector<std::uint32_t> pattern;
  for (auto& [e, c] : mults) pattern.push_back(c);
  std::sort(pattern.begin(), pattern.end());

  const std::uint64_t d = std::gcd<std::uint64_t>(q - 1, m - 1);
  for (std::uint64_t i : divisors(d)) {
    if (i == 1) continue;
    const std::uint64_t r = (m - 1) / i;
    // either r elements of multiplicity i plus a residual of
    // multiplicity 1, or the residual merged into one of them
    std::vector<std::uint32_t> split;   // {1, i, i, ..., i}
    std::vector<std::uint32_t> merged;  // {i, ..., i, i+1}
    split.push_back(1);
    for (std::uint64_t k = 0; k < r; ++k) split.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t k = 0; k + 1 < r; ++k) merged.push_back(static_cast<std::uint32_t>(i));
    merged.push_back(static_cast<std::uint32_t>(i) + 1);
    std::sort(split.begin(), split.end());
    std::sort(merged.begin(), merged.end());
    if (pattern == split || pattern == merged) {
      fam.in_mi.push_back(static_cast<std::uint32_t>(i));
    }
  }
  return fam;
}

}  // namespace prange
