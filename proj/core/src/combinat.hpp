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

// Internal helpers for iterating m-subsets of [0, q) in lexicographic
// order, with ranking/unranking so enumeration ranges can be partitioned
// across workers. Not installed.

#ifndef PRANGE_SRC_COMBINAT_HPP
#define PRANGE_SRC_COMBINAT_HPP

#include <cstdint>
#include <vector>

namespace prange::detail {

// C(n, k) clamped into uint64 range; callers stay within enumeration
// guards (~1e8), far below overflow.
inline std::uint64_t binom_u64(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r / i * (n - k + i) + r % i * (n - k + i) / i;
  }
  return r;
}

inline void first_combination(std::uint32_t m, std::vector<std::uint16_t>& c) {
  c.resize(m);
  for (std::uint32_t i = 0; i < m; ++i) c[i] = static_cast<std::uint16_t>(i);
}

// Advances to the next m-subset of [0, q) in lex order; false at the end.
inline bool next_combination(std::vector<std::uint16_t>& c, std::uint32_t q) {
  const std::size_t m = c.size();
  std::size_t i = m;
  while (i-- > 0) {
    if (c[i] + 1 <= q - (m - i)) {
      ++c[i];
      for (std::size_t j = i + 1; j < m; ++j) {
        c[j] = static_cast<std::uint16_t>(c[j - 1] + 1);
      }
      return true;
    }
  }
  return false;
}

inline std::uint64_t rank_combination(const std::vector<std::uint16_t>& c,
                                      std::uint32_t q) {
  const std::size_t m = c.size();
  std::uint64_t rank = 0;
  std::uint32_t prev = 0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::uint32_t v = prev; v < c[i]; ++v) {
      rank += binom_u64(q - 1 - v, m - 1 - i);
    }
    prev = c[i] + 1;
  }
  return rank;
}

inline void unrank_combination(std::uint64_t rank, std::uint32_t q,
                               std::uint32_t m, std::vector<std::uint16_t>& c) {
  c.resize(m);
  std::uint32_t v = 0;
  for (std::uint32_t i = 0; i < m; ++i) {
    for (;; ++v) {
      std::uint64_t block = binom_u64(q - 1 - v, m - 1 - i);
      if (rank < block) break;
      rank -= block;
    }
    c[i] = static_cast<std::uint16_t>(v);
    ++v;
  }
}

}  // namespace prange::detail

#endif
