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

#include "prange/selftest.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "combinat.hpp"
#include "prange/action.hpp"
#include "prange/certificate_io.hpp"
#include "prange/errors.hpp"
#include "prange/msets.hpp"
#include "prange/numth.hpp"
#include "prange/polyrange.hpp"
#include "prange/search.hpp"

namespace prange {

namespace {

using Clock = std::chrono::steady_clock;

struct Runner {
  const SelftestOptions& opts;
  std::vector<CheckResult> results;

  template <typename F>
  void check(const std::string& name, F&& body) {
    CheckResult r;
    r.name = name;
    auto start = Clock::now();
    try {
      std::string detail = body();  // empty string = pass
      r.passed = detail.empty();
      r.detail = detail;
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.ms = std::chrono::duration<double, std::milli>(Clock::now() - start)
               .count();
    results.push_back(std::move(r));
  }
};

std::vector<std::uint32_t> prime_powers_upto(std::uint32_t max_q) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t q = 2; q <= max_q; ++q) {
    std::uint64_t p;
    std::uint32_t n;
    if (prime_power(q, p, n) &&
        (n == 1 || Field::builtin_modulus(static_cast<std::uint32_t>(p), n))) {
      out.push_back(q);
    }
  }
  return out;
}

Elem rand_elem(std::mt19937_64& rng, std::uint32_t q, bool nonzero = false) {
  std::uniform_int_distribution<std::uint32_t> dist(nonzero ? 1 : 0, q - 1);
  return Elem{static_cast<std::uint16_t>(dist(rng))};
}

SupportSet rand_support(std::mt19937_64& rng, std::uint32_t q,
                        std::uint32_t m) {
  std::vector<std::uint16_t> all(q);
  std::iota(all.begin(), all.end(), 0);
  std::shuffle(all.begin(), all.end(), rng);
  std::vector<Elem> t;
  for (std::uint32_t i = 0; i < m; ++i) t.push_back(Elem{all[i]});
  std::sort(t.begin(), t.end());
  return SupportSet{std::move(t)};
}

std::string fail(const std::string& msg) { return msg; }

// Schoolbook multiply-then-reduce oracle for extension fields, written
// against digit vectors only; independent of Field::mul's table path.
Elem naive_ext_mul(const Field& fq, Elem a, Elem b) {
  auto da = fq.digits(a), db = fq.digits(b);
  const std::uint32_t p = fq.p(), n = fq.n();
  std::vector<std::uint32_t> prod(2 * n, 0);
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = 0; j < n; ++j) {
      prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
    }
  }
  const auto& mod = fq.modulus();
  for (std::size_t i = prod.size(); i-- > n;) {
    std::uint32_t c = prod[i];
    if (c == 0) continue;
    prod[i] = 0;
    for (std::uint32_t j = 0; j < n; ++j) {
      std::uint32_t sub = c * mod[j] % p;
      prod[i - n + j] = (prod[i - n + j] + p - sub) % p;
    }
  }
  std::vector<std::uint16_t> digits(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    digits[i] = static_cast<std::uint16_t>(prod[i]);
  }
  return fq.from_digits(digits);
}

}  // namespace

std::vector<CheckResult> run_selftest(const SelftestOptions& opts) {
  Runner run{opts, {}};
  const auto qs = prime_powers_upto(opts.max_q);
  auto fields = [&]() {
    std::vector<Field> out;
    for (auto q : qs) out.push_back(field_for_q(q, opts.modulus_overrides));
    return out;
  }();

  run.check("gf.modulus_table", [&]() -> std::string {
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u}) {
      for (std::uint32_t n = 2; n <= 3; ++n) {
        Field f(p, n);  // throws if the table entry is invalid
        std::uint32_t want = 1;
        for (std::uint32_t i = 0; i < n; ++i) want *= p;
        if (f.q() != want) return fail("wrong q for builtin field");
      }
    }
    Field f16(2, 4);
    if (f16.q() != 16) return fail("wrong q for GF(16)");
    if (opts.modulus_overrides != nullptr) {
      for (const auto& [key, coeffs] : *opts.modulus_overrides) {
        Field f(key.first, key.second, coeffs);  // throws if reducible
      }
    }
    return {};
  });

  run.check("gf.field_axioms", [&]() -> std::string {
    std::mt19937_64 rng(opts.seed ^ 0x11);
    for (const auto& fq : fields) {
      const std::uint32_t q = fq.q();
      for (int it = 0; it < 10000; ++it) {
        Elem a = rand_elem(rng, q), b = rand_elem(rng, q),
             c = rand_elem(rng, q);
        if (fq.add(fq.add(a, b), c) != fq.add(a, fq.add(b, c))) {
          return fail("additive associativity failed at q=" +
                      std::to_string(q));
        }
        if (fq.mul(fq.mul(a, b), c) != fq.mul(a, fq.mul(b, c))) {
          return fail("multiplicative associativity failed at q=" +
                      std::to_string(q));
        }
        if (fq.mul(a, fq.add(b, c)) != fq.add(fq.mul(a, b), fq.mul(a, c))) {
          return fail("distributivity failed at q=" + std::to_string(q));
        }
        if (fq.add(a, b) != fq.add(b, a) || fq.mul(a, b) != fq.mul(b, a)) {
          return fail("commutativity failed at q=" + std::to_string(q));
        }
        if (fq.add(a, Elem{0}) != a || fq.mul(a, Elem{1}) != a) {
          return fail("identity failed at q=" + std::to_string(q));
        }
        if (fq.add(a, fq.neg(a)).idx != 0) {
          return fail("negation failed at q=" + std::to_string(q));
        }
      }
    }
    return {};
  });

  run.check("gf.unit_group", [&]() -> std::string {
    for (const auto& fq : fields) {
      const std::uint32_t q = fq.q();
      for (std::uint32_t a = 1; a < q; ++a) {
        Elem ae{static_cast<std::uint16_t>(a)};
        if (fq.pow(ae, q - 1).idx != 1) {
          return fail("a^(q-1) != 1 at q=" + std::to_string(q));
        }
        if (fq.inv(ae) != fq.pow(ae, q - 2)) {
          return fail("inv != a^(q-2) at q=" + std::to_string(q));
        }
        if (fq.mul(ae, fq.inv(ae)).idx != 1) {
          return fail("a * inv(a) != 1 at q=" + std::to_string(q));
        }
        if ((q - 1) % fq.order(ae) != 0) {
          return fail("order does not divide q-1 at q=" + std::to_string(q));
        }
      }
    }
    return {};
  });

  run.check("gf.wilson_product", [&]() -> std::string {
    for (const auto& fq : fields) {
      const std::uint32_t q = fq.q();
      if (q > 27) continue;
      Elem minus_one = fq.neg(Elem{1});
      for (std::uint32_t a = 0; a < q; ++a) {
        Elem ae{static_cast<std::uint16_t>(a)}, prod{1};
        for (std::uint32_t s = 0; s < q; ++s) {
          if (s == a) continue;
          prod = fq.mul(prod, fq.sub(ae, Elem{static_cast<std::uint16_t>(s)}));
        }
        if (prod != minus_one) {
          return fail("prod_{s != a}(a - s) != -1 at q=" + std::to_string(q));
        }
      }
    }
    return {};
  });

  run.check("gf.extension_vs_poly", [&]() -> std::string {
    std::mt19937_64 rng(opts.seed ^ 0x22);
    for (const auto& fq : fields) {
      if (fq.n() == 1) continue;
      for (int it = 0; it < 1000; ++it) {
        Elem a = rand_elem(rng, fq.q()), b = rand_elem(rng, fq.q());
        if (fq.mul(a, b) != naive_ext_mul(fq, a, b)) {
          return fail("table product disagrees with polynomial reduction at "
                      "q=" + std::to_string(fq.q()));
        }
      }
    }
    return {};
  });

  run.check("numth.totient_sum", [&]() -> std::string {
    for (std::uint64_t n = 1; n <= 10000; ++n) {
      Int sum = 0;
      for (auto d : divisors(n)) sum += euler_phi(d);
      if (sum != Int(static_cast<unsigned long>(n))) {
        return fail("sum of phi over divisors != n at n=" + std::to_string(n));
      }
    }
    return {};
  });

  run.check("numth.pascal", [&]() -> std::string {
    std::mt19937_64 rng(opts.seed ^ 0x33);
    std::uniform_int_distribution<std::uint64_t> nd(1, 200);
    for (int it = 0; it < 2000; ++it) {
      std::uint64_t n = nd(rng);
      std::uniform_int_distribution<std::uint64_t> kd(0, n + 2);
      std::uint64_t k = kd(rng);
      Int lhs = binomial(n, k);
      Int rhs = binomial(n - 1, k) + (k > 0 ? binomial(n - 1, k - 1) : Int(0));
      if (lhs != rhs) return fail("Pascal identity failed");
    }
    return {};
  });

  run.check("polyrange.eq2_vs_eq1", [&]() -> std::string {
    for (const auto& fq : fields) {
      const std::uint32_t q = fq.q();
      if (q > 13) continue;
      for (std::uint32_t m = 2; m <= std::min(4u, q - 1); ++m) {
        std::vector<std::uint16_t> comb;
        detail::first_combination(m, comb);
        do {
          PointedSupport ps;
          for (auto v : comb) ps.support.elems.push_back(Elem{v});
          for (std::uint32_t lam = 1; lam < q; ++lam) {
            ps.lambda = Elem{static_cast<std::uint16_t>(lam)};
            Poly f = minimal_poly(ps, fq);
            auto fast = fast_values(ps, fq);
            for (std::size_t i = 0; i < ps.support.elems.size(); ++i) {
              if (eval(f, ps.support.elems[i], fq) != fast[i]) {
                return fail("shortcut values disagree with evaluation at q=" +
                            std::to_string(q) + " m=" + std::to_string(m));
              }
            }
          }
          ps.support.elems.clear();
        } while (detail::next_combination(comb, q));
      }
    }
    return {};
  });

  run.check("polyrange.root_structure", [&]() -> std::string {
    std::mt19937_64 rng(opts.seed ^ 0x44);
    for (const auto& fq : fields) {
      const std::uint32_t q = fq.q();
      if (q > 27 || q < 3) continue;
      for (int it = 0; it < 200; ++it) {
        std::uniform_int_distribution<std::uint32_t> md(2, q - 1);
        std::uint32_t m = md(rng);
        PointedSupport ps{rand_elem(rng, q, true), rand_support(rng, q, m)};
        Poly f = minimal_poly(ps, fq);
        if (f.degree() != static_cast<int>(q - m)) {
          return fail("degree != q - m");
        }
        if (f.leading() != ps.lambda) return fail("leading coeff != lambda");
        for (std::uint32_t x = 0; x < q; ++x) {
          Elem xe{static_cast<std::uint16_t>(x)};
          bool zero = eval(f, xe, fq).idx == 0;
          if (zero == ps.support.contains(xe)) {
            return fail("root set is not exactly the complement of T");
          }
        }
      }
    }
    return {};
  });

  run.check("polyrange.range_sum_zero", [&]() -> std::string {
    for (const auto& fq : fields) {
      const std::uint32_t q = fq.q();
      if (q > 13) continue;
      for (std::uint32_t m = 2; m <= std::min(5u, q - 1); ++m) {
        std::vector<std::uint16_t> comb;
        detail::first_combination(m, comb);
        do {
          PointedSupport ps;
          for (auto v : comb) ps.support.elems.push_back(Elem{v});
          ps.lambda = Elem{1};
          RangeMultiset r = range_of(minimal_poly(ps, fq), fq);
          if (r.counts[0] != q - m) return fail("zero count != ell");
          Elem sum{0};
          for (std::uint32_t v = 1; v < q; ++v) {
            for (std::uint32_t k = 0; k < r.counts[v]; ++k) {
              sum = fq.add(sum, Elem{static_cast<std::uint16_t>(v)});
            }
          }
          if (sum.idx != 0) return fail("range does not sum to zero");
        } while (detail::next_combination(comb, q));
      }
    }
    return {};
  });

  run.check("polyrange.interp_roundtrip", [&]() -> std::string {
    std::mt19937_64 rng(opts.seed ^ 0x55);
    for (const auto& fq : fields) {
      const std::uint32_t q = fq.q();
      int iters = q <= 13 ? 1000 : 100;
      for (int it = 0; it < iters; ++it) {
        std::vector<Elem> coeffs(q);
        for (auto& c : coeffs) c = rand_elem(rng, q);
        Poly f = Poly::from_coeffs(coeffs);
        std::vector<std::pair<Elem, Elem>> pts;
        for (std::uint32_t x = 0; x < q; ++x) {
          Elem xe{static_cast<std::uint16_t>(x)};
          pts.emplace_back(xe, eval(f, xe, fq));
        }
        if (interpolate(pts, fq) != f) {
          return fail("interpolation round trip failed at q=" +
                      std::to_string(q));
        }
      }
    }
    return {};
  });

  run.check("action.laws", [&]() -> std::string {
    std::mt19937_64 rng(opts.seed ^ 0x66);
    for (const auto& fq : fields) {
      const std::uint32_t q = fq.q();
      if (q < 4) continue;
      for (int it = 0; it < 500; ++it) {
        std::uniform_int_distribution<std::uint32_t> md(2, q - 1);
        PointedSupport ps{rand_elem(rng, q, true),
                          rand_support(rng, q, md(rng))};
        AffineMap g{rand_elem(rng, q, true), rand_elem(rng, q)};
        AffineMap h{rand_elem(rng, q, true), rand_elem(rng, q)};
        if (act(affine_identity(), ps, fq) != ps) {
          return fail("identity law failed");
        }
        if (act(compose(g, h, fq), ps, fq) != act(g, act(h, ps, fq), fq)) {
          return fail("compatibility law failed");
        }
        if (act(g, act(affine_inverse(g, fq), ps, fq), fq) != ps) {
          return fail("inverse law failed");
        }
      }
    }
    return {};
  });

  run.check("action.equivariance", [&]() -> std::string {
    std::mt19937_64 rng(opts.seed ^ 0x77);
    for (std::uint32_t q : {7u, 11u, 13u, 27u}) {
      if (q > opts.max_q) continue;
      Field fq = field_for_q(q, opts.modulus_overrides);
      for (int it = 0; it < 1000; ++it) {
        std::uniform_int_distribution<std::uint32_t> md(
            2, std::min(6u, q - 2));
        PointedSupport ps{rand_elem(rng, q, true),
                          rand_support(rng, q, md(rng))};
        AffineMap g{rand_elem(rng, q, true), rand_elem(rng, q)};
        RangeMultiset before = range_of(minimal_poly(ps, fq), fq);
        RangeMultiset after = range_of(minimal_poly(act(g, ps, fq), fq), fq);
        if (before != after) {
          return fail("range changed under the affine action at q=" +
                      std::to_string(q));
        }
      }
    }
    return {};
  });

  run.check("action.burnside_vs_enumerated", [&]() -> std::string {
    for (std::uint32_t q : {5u, 7u, 9u, 11u, 13u}) {
      if (q > opts.max_q) continue;
      Field fq = field_for_q(q, opts.modulus_overrides);
      for (std::uint32_t m = 2; m <= std::min(5u, q - 1); ++m) {
        if (m >= fq.p()) continue;
        OrbitCountReport rep = burnside_orbit_count(q, m);
        Int enumerated = count_orbits_enumerated(m, fq);
        if (rep.burnside_n != enumerated) {
          return fail("formula " + rep.burnside_n.get_str() +
                      " != enumerated " + enumerated.get_str() + " at (q,m)=(" +
                      std::to_string(q) + "," + std::to_string(m) + ")");
        }
        // Burnside average over the whole group, from the per-map analysis
        Int fixed_sum = 0;
        for (std::uint32_t c = 1; c < q; ++c) {
          for (std::uint32_t b = 0; b < q; ++b) {
            fixed_sum += fixed_points(
                AffineMap{Elem{static_cast<std::uint16_t>(c)},
                          Elem{static_cast<std::uint16_t>(b)}},
                m, fq);
          }
        }
        if (make_rat(fixed_sum, Int(q) * (q - 1)) != Rat(rep.burnside_n)) {
          return fail("fixed-point average != orbit count at (q,m)=(" +
                      std::to_string(q) + "," + std::to_string(m) + ")");
        }
      }
    }
    return {};
  });

  run.check("action.fixed_points_scan", [&]() -> std::string {
    for (std::uint32_t q : {5u, 7u}) {
      if (q > opts.max_q) continue;
      Field fq = field_for_q(q, opts.modulus_overrides);
      for (std::uint32_t m = 2; m <= std::min(3u, q - 2); ++m) {
        if (m >= fq.p()) continue;
        for (std::uint32_t c = 1; c < q; ++c) {
          for (std::uint32_t b = 0; b < q; ++b) {
            AffineMap g{Elem{static_cast<std::uint16_t>(c)},
                        Elem{static_cast<std::uint16_t>(b)}};
            Int formula = fixed_points(g, m, fq);
            // direct scan of all pairs
            std::uint64_t scan = 0;
            std::vector<std::uint16_t> comb;
            detail::first_combination(m, comb);
            do {
              PointedSupport ps;
              for (auto v : comb) ps.support.elems.push_back(Elem{v});
              for (std::uint32_t lam = 1; lam < q; ++lam) {
                ps.lambda = Elem{static_cast<std::uint16_t>(lam)};
                if (act(g, ps, fq) == ps) ++scan;
              }
            } while (detail::next_combination(comb, q));
            if (formula != Int(static_cast<unsigned long>(scan))) {
              return fail("fixed-point formula disagrees with scan at q=" +
                          std::to_string(q));
            }
          }
        }
      }
    }
    return {};
  });

  run.check("msets.known_counts", [&]() -> std::string {
    struct Known {
      std::uint32_t q, m;
      unsigned long count;
    };
    for (auto [q, m, count] : {Known{7, 2, 3}, Known{7, 3, 8}, Known{13, 4, 105}}) {
      if (q > opts.max_q) continue;
      Field fq = field_for_q(q, opts.modulus_overrides);
      std::uint64_t n = 0;
      std::string bad;
      enumerate_M(m, fq, [&](const NonzeroMultiset& ms) {
        ++n;
        if (multiset_sum(ms, fq).idx != 0) bad = "enumerated multiset has nonzero sum";
        if (!std::is_sorted(ms.values.begin(), ms.values.end())) {
          bad = "enumerated multiset not canonical";
        }
      });
      if (!bad.empty()) return fail(bad);
      if (n != count) {
        return fail("count at (q,m)=(" + std::to_string(q) + "," +
                    std::to_string(m) + ") is " + std::to_string(n) +
                    ", expected " + std::to_string(count));
      }
    }
    return {};
  });

  run.check("msets.bound_vs_exact", [&]() -> std::string {
    for (std::uint32_t q : {11u, 13u, 16u, 17u, 19u, 23u, 25u, 27u}) {
      if (q > opts.max_q) continue;
      Field fq = field_for_q(q, opts.modulus_overrides);
      for (std::uint32_t m : {4u, 5u, 6u}) {
        if (2 * m > q - 1) continue;
        Rat bound = lower_bound_M(q, m).bound;
        Int exact = count_M_exact(m, fq);
        if (!(bound <= Rat(exact))) {
          return fail("lower bound exceeds exact count at (q,m)=(" +
                      std::to_string(q) + "," + std::to_string(m) + ")");
        }
      }
    }
    return {};
  });

  run.check("msets.family_disjoint", [&]() -> std::string {
    for (std::uint32_t q : {13u, 16u, 19u}) {
      if (q > opts.max_q) continue;
      Field fq = field_for_q(q, opts.modulus_overrides);
      const std::uint32_t m = 6;
      std::string bad;
      enumerate_M(m, fq, [&](const NonzeroMultiset& ms) {
        FamilyMembership fam = classify_family(ms, q, m);
        if (fam.in_mi.size() > 1) {
          bad = "multiset in two repeated-multiplicity families at q=" +
                std::to_string(q);
        }
        if (fam.in_m0 && !fam.in_mi.empty()) {
          bad = "M_0 overlaps a repeated-multiplicity family at q=" +
                std::to_string(q) + " (m=6)";
        }
      });
      if (!bad.empty()) return fail(bad);
    }
    return {};
  });

  run.check("msets.m5_overlap", [&]() -> std::string {
    // For m=5 the families M_0 and M_2 overlap in the two-pairs pattern
    // {a,a,b,b,c}, a,b,c distinct. The enumerated overlap is
    // (q-1)(q-5)/2 at these q; the coarser (q-1)(q-3)/2, which the m=5
    // bound subtracts, over-subtracts and therefore stays safe.
    for (std::uint32_t q : {11u, 13u}) {
      if (q > opts.max_q) continue;
      Field fq = field_for_q(q, opts.modulus_overrides);
      std::uint64_t overlap = 0;
      enumerate_M(5, fq, [&](const NonzeroMultiset& ms) {
        FamilyMembership fam = classify_family(ms, q, 5);
        if (fam.in_m0 &&
            std::find(fam.in_mi.begin(), fam.in_mi.end(), 2u) !=
                fam.in_mi.end()) {
          ++overlap;
        }
      });
      if (overlap != static_cast<std::uint64_t>(q - 1) * (q - 5) / 2) {
        return fail("enumerated M_0/M_2 overlap at q=" + std::to_string(q) +
                    " is " + std::to_string(overlap) + ", expected " +
                    std::to_string((q - 1) * (q - 5) / 2));
      }
      if (!(overlap <= static_cast<std::uint64_t>(q - 1) * (q - 3) / 2)) {
        return fail("overlap exceeds the subtracted bound at q=" +
                    std::to_string(q));
      }
    }
    return {};
  });

  run.check("search.range_in_M", [&]() -> std::string {
    for (const auto& fq : fields) {
      const std::uint32_t q = fq.q();
      if (q > 13 || q < 5) continue;
      for (std::uint32_t m = 2; m <= std::min(5u, (q - 1) / 2); ++m) {
        RangeFamilyImage image = enumerate_range_F(m, fq);
        std::set<NonzeroMultiset> admissible;
        enumerate_M(m, fq, [&](const NonzeroMultiset& ms) {
          admissible.insert(ms);
        });
        for (const auto& r : image.ranges) {
          if (r.m() != m) return fail("range has wrong nonzero count");
          if (!admissible.count(r)) {
            return fail("attained range is not admissible at (q,m)=(" +
                        std::to_string(q) + "," + std::to_string(m) + ")");
          }
        }
      }
    }
    return {};
  });

  run.check("search.pruned_eq_unpruned", [&]() -> std::string {
    for (const auto& fq : fields) {
      const std::uint32_t q = fq.q();
      if (q > 11 || q < 4) continue;
      for (std::uint32_t m = 2; m <= q - 1; ++m) {
        EnumOptions pruned{true, 1};
        EnumOptions plain{false, 1};
        auto a = enumerate_range_F(m, fq, pruned);
        auto b = enumerate_range_F(m, fq, plain);
        if (a.ranges != b.ranges) {
          return fail("pruned and unpruned images differ at (q,m)=(" +
                      std::to_string(q) + "," + std::to_string(m) + ")");
        }
      }
    }
    return {};
  });

  run.check("search.range_le_orbits", [&]() -> std::string {
    for (const auto& fq : fields) {
      const std::uint32_t q = fq.q();
      if (q > 13 || q < 5) continue;
      for (std::uint32_t m = 2; m <= std::min(5u, (q - 1) / 2); ++m) {
        if (m >= fq.p()) continue;
        Int n = burnside_orbit_count(q, m).burnside_n;
        Int attained(static_cast<unsigned long>(
            enumerate_range_F(m, fq).size()));
        if (attained > n) {
          return fail("more attained ranges than orbits at (q,m)=(" +
                      std::to_string(q) + "," + std::to_string(m) + ")");
        }
      }
    }
    return {};
  });

  run.check("search.counterexample_degree", [&]() -> std::string {
    if (opts.max_q < 13) return {};
    std::mt19937_64 rng(opts.seed ^ 0x88);
    Field fq = field_for_q(13, opts.modulus_overrides);
    const std::uint32_t ell = 9;
    auto counterexamples = find_counterexamples(ell, fq);
    if (counterexamples.empty()) return fail("expected counterexamples");
    for (const auto& M : counterexamples) {
      std::vector<Elem> values(fq.q() - M.m(), Elem{0});
      values.insert(values.end(), M.values.begin(), M.values.end());
      for (int it = 0; it < 200; ++it) {
        std::shuffle(values.begin(), values.end(), rng);
        std::vector<std::pair<Elem, Elem>> pts;
        for (std::uint32_t x = 0; x < fq.q(); ++x) {
          pts.emplace_back(Elem{static_cast<std::uint16_t>(x)}, values[x]);
        }
        Poly g = interpolate(pts, fq);
        if (!(g.degree() > static_cast<int>(ell))) {
          return fail("an ordering interpolated to degree <= ell");
        }
      }
    }
    return {};
  });

  run.check("search.term_comparisons", [&]() -> std::string {
    const std::uint32_t sweep = std::max(64u, opts.max_q);
    for (std::uint32_t q = 5; q <= sweep; ++q) {
      for (std::uint32_t m = 4; m < q; ++m) {
        TermComparison cmp = compare_bound_terms(q, m);
        if (!cmp.all()) {
          return fail("termwise comparison failed at (q,m)=(" +
                      std::to_string(q) + "," + std::to_string(m) + ")");
        }
      }
    }
    return {};
  });

  run.check("search.constructions", [&]() -> std::string {
    std::mt19937_64 rng(opts.seed ^ 0x99);
    for (std::uint32_t q : {7u, 11u, 13u, 25u, 27u}) {
      if (q > opts.max_q) continue;
      Field fq = field_for_q(q, opts.modulus_overrides);
      for (int it = 0; it < 200; ++it) {
        Elem b1 = rand_elem(rng, q, true);
        auto w2 = construct_small_m({b1, fq.neg(b1)}, fq);
        if (!w2.verified) return fail("m=2 construction failed");
        Elem c1 = rand_elem(rng, q, true), c2 = rand_elem(rng, q, true);
        Elem c3 = fq.neg(fq.add(c1, c2));
        if (c3.idx == 0) continue;
        auto w3 = construct_small_m({c1, c2, c3}, fq);
        if (!w3.verified) return fail("m=3 construction failed");
        Poly f = minimal_poly(w3.witness, fq);
        if (eval(f, c2, fq) != c1 || eval(f, fq.neg(c1), fq) != c2 ||
            eval(f, fq.zero(), fq) != c3) {
          return fail("m=3 displayed values failed");
        }
      }
    }
    return {};
  });

  run.check("search.certificate_roundtrip", [&]() -> std::string {
    if (opts.max_q < 11) return {};
    Field fq = field_for_q(11, opts.modulus_overrides);
    auto cxs = find_counterexamples(7, fq, 1);
    if (cxs.empty()) return fail("expected a counterexample at (11, ell=7)");
    Certificate cert = make_certificate(7, cxs[0], fq);
    Certificate reparsed = certificate_from_json(certificate_to_json(cert));
    for (EnumOptions mode : {EnumOptions{true, 1}, EnumOptions{false, 1}}) {
      VerifyResult v = verify_certificate(reparsed, mode);
      if (!v.ok) return fail("verification failed: " + v.reason);
    }
    Certificate tampered = reparsed;
    tampered.multiset.values[0] = Elem{static_cast<std::uint16_t>(
        tampered.multiset.values[0].idx == 1 ? 2 : 1)};
    if (verify_certificate(tampered).ok) {
      return fail("tampered certificate verified");
    }
    return {};
  });

  return run.results;
}

}  // namespace prange
