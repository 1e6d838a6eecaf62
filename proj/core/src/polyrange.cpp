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

#include "prange/polyrange.hpp"

#include <algorithm>
#include <stdexcept>

namespace prange {

Poly Poly::from_coeffs(std::vector<Elem> coeffs) {
  while (!coeffs.empty() && coeffs.back().idx == 0) coeffs.pop_back();
  return Poly{std::move(coeffs)};
}

bool SupportSet::contains(Elem x) const {
  return std::binary_search(elems.begin(), elems.end(), x);
}

SupportSet SupportSet::checked(std::vector<Elem> elems, const Field& fq) {
  std::sort(elems.begin(), elems.end());
  if (std::adjacent_find(elems.begin(), elems.end()) != elems.end()) {
    throw std::invalid_argument("support set has repeated elements");
  }
  if (elems.size() < 2 || elems.size() > fq.q()) {
    throw std::invalid_argument("support set size must be in [2, q]");
  }
  for (Elem e : elems) {
    if (e.idx >= fq.q()) throw std::invalid_argument("support element >= q");
  }
  return SupportSet{std::move(elems)};
}

Elem eval(const Poly& f, Elem x, const Field& fq) {
  Elem acc{0};
  for (std::size_t i = f.coeffs.size(); i-- > 0;) {
    acc = fq.add(fq.mul(acc, x), f.coeffs[i]);
  }
  return acc;
}

RangeMultiset range_of(const Poly& f, const Field& fq) {
  RangeMultiset r;
  r.counts.assign(fq.q(), 0);
  for (std::uint32_t x = 0; x < fq.q(); ++x) {
    ++r.counts[eval(f, Elem{static_cast<std::uint16_t>(x)}, fq).idx];
  }
  return r;
}

Poly minimal_poly(const PointedSupport& ps, const Field& fq) {
  if (ps.lambda.idx == 0) {
    throw std::domain_error("minimal_poly: lambda must be nonzero");
  }
  const std::size_t m = ps.support.m();
  if (m < 2 || m > fq.q() - 1) {
    throw std::invalid_argument("minimal_poly: need 2 <= |T| <= q-1");
  }
  // lambda * prod_{s not in T} (x - s), one linear factor at a time
  std::vector<Elem> coeffs{ps.lambda};
  coeffs.reserve(fq.q() - m + 1);
  for (std::uint32_t s = 0; s < fq.q(); ++s) {
    Elem se{static_cast<std::uint16_t>(s)};
    if (ps.support.contains(se)) continue;
    Elem neg_s = fq.neg(se);
    coeffs.push_back(Elem{0});
    for (std::size_t i = coeffs.size() - 1; i-- > 0;) {
      Elem keep = fq.mul(coeffs[i], neg_s);
      coeffs[i + 1] = fq.add(coeffs[i + 1], coeffs[i]);
      coeffs[i] = keep;
    }
  }
  return Poly::from_coeffs(std::move(coeffs));
}

std::vector<Elem> fast_values(const PointedSupport& ps, const Field& fq) {
  const auto& t = ps.support.elems;
  if (t.size() < 2) throw std::invalid_argument("fast_values: need |T| >= 2");
  std::vector<Elem> out(t.size());
  Elem neg_lambda = fq.neg(ps.lambda);
  for (std::size_t i = 0; i < t.size(); ++i) {
    Elem prod{1};
    for (std::size_t j = 0; j < t.size(); ++j) {
      if (j == i) continue;
      prod = fq.mul(prod, fq.sub(t[i], t[j]));
    }
    out[i] = fq.mul(neg_lambda, fq.inv(prod));
  }
  return out;
}

Poly poly_mul(const Poly& f, const Poly& g, const Field& fq) {
  if (f.is_zero() || g.is_zero()) return Poly::zero();
  std::vector<Elem> out(f.coeffs.size() + g.coeffs.size() - 1, Elem{0});
  for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
    if (f.coeffs[i].idx == 0) continue;
    for (std::size_t j = 0; j < g.coeffs.size(); ++j) {
      out[i + j] = fq.add(out[i + j], fq.mul(f.coeffs[i], g.coeffs[j]));
    }
  }
  return Poly::from_coeffs(std::move(out));
}

Poly poly_add(const Poly& f, const Poly& g, const Field& fq) {
  std::vector<Elem> out(std::max(f.coeffs.size(), g.coeffs.size()), Elem{0});
  for (std::size_t i = 0; i < out.size(); ++i) {
    Elem a = i < f.coeffs.size() ? f.coeffs[i] : Elem{0};
    Elem b = i < g.coeffs.size() ? g.coeffs[i] : Elem{0};
    out[i] = fq.add(a, b);
  }
  return Poly::from_coeffs(std::move(out));
}

Poly interpolate(const std::vector<std::pair<Elem, Elem>>& points,
                 const Field& fq) {
  const std::uint32_t q = fq.q();
  if (points.size() != q) {
    throw std::invalid_argument("interpolate: need exactly q points");
  }
  std::vector<char> seen(q, 0);
  for (const auto& [x, y] : points) {
    if (x.idx >= q || seen[x.idx]) {
      throw std::invalid_argument("interpolate: x values must cover F_q once");
    }
    seen[x.idx] = 1;
  }

  // master = prod (x - x_i); per point divide out the linear factor
  // synthetically, then scale by y_i / N_i(x_i).
  std::vector<Elem> master{Elem{1}};
  master.reserve(q + 1);
  for (const auto& [x, y] : points) {
    Elem neg_x = fq.neg(x);
    master.push_back(Elem{0});
    for (std::size_t i = master.size() - 1; i-- > 0;) {
      Elem keep = fq.mul(master[i], neg_x);
      master[i + 1] = fq.add(master[i + 1], master[i]);
      master[i] = keep;
    }
  }

  std::vector<Elem> acc(q, Elem{0});
  std::vector<Elem> numer(q);
  for (const auto& [xi, yi] : points) {
    if (yi.idx == 0) continue;
    // numer = master / (x - x_i), synthetic division by root x_i
    Elem carry{0};
    for (std::size_t i = q + 1; i-- > 1;) {
      carry = fq.add(master[i], fq.mul(carry, xi));
      numer[i - 1] = carry;
    }
    Elem denom = eval(Poly{numer}, xi, fq);  // prod_{j != i} (x_i - x_j)
    Elem scale = fq.mul(yi, fq.inv(denom));
    for (std::uint32_t i = 0; i < q; ++i) {
      acc[i] = fq.add(acc[i], fq.mul(scale, numer[i]));
    }
  }
  return Poly::from_coeffs(std::move(acc));
}

}  // namespace prange
