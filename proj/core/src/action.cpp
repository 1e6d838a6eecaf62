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

#include "prange/action.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "combinat.hpp"
#include "prange/errors.hpp"

namespace prange {

Elem apply(const AffineMap& g, Elem x, const Field& fq) {
  return fq.add(fq.mul(g.c, x), g.b);
}

AffineMap compose(const AffineMap& outer, const AffineMap& inner,
                  const Field& fq) {
  // outer(inner(x)) = (c1*c2) x + (c1*b2 + b1)
  return AffineMap{fq.mul(outer.c, inner.c),
                   fq.add(fq.mul(outer.c, inner.b), outer.b)};
}

AffineMap affine_inverse(const AffineMap& g, const Field& fq) {
  Elem ci = fq.inv(g.c);
  return AffineMap{ci, fq.neg(fq.mul(ci, g.b))};
}

PointedSupport act(const AffineMap& g, const PointedSupport& ps,
                   const Field& fq) {
  if (g.c.idx == 0) throw std::invalid_argument("affine map needs c != 0");
  const std::size_t m = ps.support.m();
  PointedSupport out;
  out.lambda = fq.mul(fq.pow(g.c, m - 1), ps.lambda);
  out.support.elems.reserve(m);
  for (Elem s : ps.support.elems) {
    out.support.elems.push_back(apply(g, s, fq));
  }
  std::sort(out.support.elems.begin(), out.support.elems.end());
  return out;
}

std::vector<PointedSupport> orbit_of(const PointedSupport& ps,
                                     const Field& fq) {
  std::set<PointedSupport> orbit;
  for (std::uint32_t c = 1; c < fq.q(); ++c) {
    for (std::uint32_t b = 0; b < fq.q(); ++b) {
      AffineMap g{Elem{static_cast<std::uint16_t>(c)},
                  Elem{static_cast<std::uint16_t>(b)}};
      orbit.insert(act(g, ps, fq));
    }
  }
  return {orbit.begin(), orbit.end()};
}

OrbitCountReport burnside_orbit_count(std::uint32_t q, std::uint32_t m) {
  std::uint64_t p = 0;
  std::uint32_t n = 0;
  if (!prime_power(q, p, n)) {
    throw std::invalid_argument("q=" + std::to_string(q) +
                                " is not a prime power");
  }
  if (m < 2 || m > q - 1) {
    throw std::invalid_argument("orbit count needs 2 <= m <= q-1");
  }
  if (m % p == 0) {
    // translations x -> x+b then fix (q-1)^2 * binom(q/p, m/p) pairs that
    // the formula omits, so it undercounts whenever p | m
    throw IntegrityError("orbit-count formula is invalid for q=" +
                         std::to_string(q) + ", m=" + std::to_string(m) +
                         ": p | m, supports can be unions of translation "
                         "cycles");
  }
  OrbitCountReport rep;
  rep.q = q;
  rep.m = m;
  rep.p = p;
  rep.d = std::gcd<std::uint64_t>(q - 1, m - 1);
  rep.hypothesis_ok =
      static_cast<std::uint64_t>(m - 1) * (m - 1) < p;  // m < sqrt(p)+1

  Int falling = 1;
  for (std::uint32_t j = 1; j < m; ++j) falling *= (q - j);
  rep.leading_term = make_rat(falling, factorial(m));

  Rat total = rep.leading_term;
  for (std::uint64_t i : divisors(rep.d)) {
    if (i == 1) continue;
    DivisorTerm t;
    t.i = i;
    t.phi = euler_phi(i);
    t.term = t.phi * binomial((q - 1) / i, (m - 1) / i);
    total += Rat(t.term);
    rep.per_divisor_terms.push_back(std::move(t));
  }
  if (!is_integral(total)) {
    throw IntegrityError(
        "Burnside count is non-integral for q=" + std::to_string(q) +
        ", m=" + std::to_string(m) + " (" + total.get_str() +
        "); the fixed-point analysis does not apply here (p | m)");
  }
  rep.burnside_n = to_int(total);
  return rep;
}

Int count_orbits_enumerated(std::uint32_t m, const Field& fq,
                            std::uint64_t max_pairs) {
  const std::uint32_t q = fq.q();
  if (m < 2 || m > q - 1) {
    throw std::invalid_argument("orbit enumeration needs 2 <= m <= q-1");
  }
  Int total_pairs = Int(q - 1) * binomial(q, m);
  if (total_pairs > Int(static_cast<unsigned long>(max_pairs))) {
    throw GuardExceeded("orbit enumeration needs " + total_pairs.get_str() +
                        " pairs, guard is " + std::to_string(max_pairs));
  }
  const std::uint64_t num_t = detail::binom_u64(q, m);
  const std::uint64_t num_pairs = static_cast<std::uint64_t>(q - 1) * num_t;

  std::vector<std::uint32_t> parent(num_pairs);
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&parent](std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  auto unite = [&](std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[a] = b;
  };

  // The affine group is generated by multiplication by a generator of
  // F_q^* together with translations by the base-p basis elements.
  std::vector<AffineMap> gens;
  gens.push_back(AffineMap{fq.generator(), Elem{0}});
  for (std::uint32_t k = 0, e = 1; k < fq.n(); ++k, e *= fq.p()) {
    gens.push_back(AffineMap{Elem{1}, fq.elem(e)});
  }

  std::vector<std::uint16_t> comb;
  detail::first_combination(m, comb);
  std::uint64_t t_rank = 0;
  PointedSupport ps;
  do {
    ps.support.elems.assign(comb.size(), Elem{0});
    for (std::size_t i = 0; i < comb.size(); ++i) {
      ps.support.elems[i] = Elem{comb[i]};
    }
    for (std::uint32_t lam = 1; lam < q; ++lam) {
      ps.lambda = Elem{static_cast<std::uint16_t>(lam)};
      std::uint32_t self =
          static_cast<std::uint32_t>((lam - 1) * num_t + t_rank);
      for (const auto& g : gens) {
        PointedSupport im = act(g, ps, fq);
        std::vector<std::uint16_t> ic(im.support.elems.size());
        for (std::size_t i = 0; i < ic.size(); ++i) {
          ic[i] = im.support.elems[i].idx;
        }
        std::uint64_t ir = detail::rank_combination(ic, q);
        std::uint32_t image = static_cast<std::uint32_t>(
            (im.lambda.idx - 1) * num_t + ir);
        unite(self, image);
      }
    }
    ++t_rank;
  } while (detail::next_combination(comb, q));

  std::uint64_t roots = 0;
  for (std::uint32_t i = 0; i < num_pairs; ++i) {
    if (find(i) == i) ++roots;
  }
  return Int(static_cast<unsigned long>(roots));
}

OrbitCountReport orbit_count_with_enumeration(std::uint32_t m, const Field& fq,
                                              std::uint64_t max_pairs) {
  OrbitCountReport rep = burnside_orbit_count(fq.q(), m);
  rep.enumerated_orbits = count_orbits_enumerated(m, fq, max_pairs);
  if (m < fq.p() && *rep.enumerated_orbits != rep.burnside_n) {
    throw IntegrityError("orbit enumeration disagrees with the formula at q=" +
                         std::to_string(fq.q()) + ", m=" + std::to_string(m));
  }
  return rep;
}

Int fixed_points(const AffineMap& g, std::uint32_t m, const Field& fq) {
  const std::uint32_t q = fq.q();
  if (m >= fq.p()) {
    throw std::invalid_argument(
        "fixed-point analysis requires m < p (supports could be unions of "
        "translation cycles otherwise)");
  }
  if (m < 2 || m > q - 1) {
    throw std::invalid_argument("fixed_points needs 2 <= m <= q-1");
  }
  if (g.c.idx == 0) throw std::invalid_argument("affine map needs c != 0");

  if (g.c.idx == 1) {
    // translations: only the identity fixes anything (m < p rules out
    // supports made of p-cycles)
    if (g.b.idx == 0) return Int(q - 1) * binomial(q, m);
    return 0;
  }
  const std::uint32_t i = fq.order(g.c);
  // Any c != 1 fixes exactly one point and splits the rest of F_q into
  // (q-1)/i cycles of length i. An invariant m-subset either contains the
  // fixed point plus (m-1)/i cycles, or m/i cycles without it; the scalar
  // condition c^{m-1} = 1 additionally forces i | m-1.
  if ((m - 1) % i == 0) {
    return Int(q - 1) * binomial((q - 1) / i, (m - 1) / i);
  }
  return 0;
}

}  // namespace prange
