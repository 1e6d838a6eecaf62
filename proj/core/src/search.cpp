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

#include "prange/search.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "combinat.hpp"
#include "prange/errors.hpp"
#include "prange/version.hpp"

namespace prange {

namespace {

std::string encode_values(const std::vector<Elem>& sorted_vals) {
  std::string key(sorted_vals.size() * 2, '\0');
  for (std::size_t i = 0; i < sorted_vals.size(); ++i) {
    key[2 * i] = static_cast<char>(sorted_vals[i].idx & 0xff);
    key[2 * i + 1] = static_cast<char>(sorted_vals[i].idx >> 8);
  }
  return key;
}

NonzeroMultiset decode_values(const std::string& key) {
  NonzeroMultiset ms;
  ms.values.resize(key.size() / 2);
  for (std::size_t i = 0; i < ms.values.size(); ++i) {
    ms.values[i].idx = static_cast<std::uint16_t>(
        static_cast<unsigned char>(key[2 * i]) |
        (static_cast<unsigned char>(key[2 * i + 1]) << 8));
  }
  return ms;
}

// A canonical support contains 0 and 1: for every T some affine image
// contains both (the group is sharply 2-transitive), so the lex-least
// sorted image does. Images to compare against are exactly the m(m-1)
// maps sending an ordered pair of T to (0, 1).
bool is_canonical_support(const std::vector<Elem>& t, const Field& fq) {
  const std::size_t m = t.size();
  if (t[0].idx != 0 || t[1].idx != 1) return false;
  std::vector<Elem> image(m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      if (a == b) continue;
      Elem c = fq.inv(fq.sub(t[b], t[a]));
      Elem off = fq.neg(fq.mul(c, t[a]));  // maps t[a] -> 0, t[b] -> 1
      for (std::size_t i = 0; i < m; ++i) {
        image[i] = fq.add(fq.mul(c, t[i]), off);
      }
      std::sort(image.begin(), image.end());
      if (image < t) return false;
    }
  }
  return true;
}

// Scalars c^{m-1} over the setwise stabilizer of a canonical support;
// a subgroup of F_q^*. Orbits of (lambda, T) with this T-component are
// exactly the cosets, so one lambda per coset enumerates one pair per
// group orbit.
std::vector<Elem> stabilizer_scalars(const std::vector<Elem>& t,
                                     const Field& fq) {
  const std::size_t m = t.size();
  std::vector<char> in_h(fq.q(), 0);
  std::vector<Elem> h;
  Elem d01 = fq.inv(fq.sub(t[1], t[0]));
  std::vector<Elem> image(m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      if (a == b) continue;
      // the unique map sending (t[0], t[1]) -> (t[a], t[b])
      Elem c = fq.mul(fq.sub(t[b], t[a]), d01);
      Elem off = fq.sub(t[a], fq.mul(c, t[0]));
      bool fixes = true;
      for (std::size_t i = 0; i < m && fixes; ++i) {
        image[i] = fq.add(fq.mul(c, t[i]), off);
      }
      std::sort(image.begin(), image.end());
      fixes = std::equal(image.begin(), image.end(), t.begin());
      if (fixes) {
        Elem s = fq.pow(c, m - 1);
        if (!in_h[s.idx]) {
          in_h[s.idx] = 1;
          h.push_back(s);
        }
      }
    }
  }
  return h;
}

std::vector<Elem> coset_representatives(const std::vector<Elem>& h,
                                        const Field& fq) {
  std::vector<char> seen(fq.q(), 0);
  std::vector<Elem> reps;
  for (std::uint32_t lam = 1; lam < fq.q(); ++lam) {
    if (seen[lam]) continue;
    Elem le{static_cast<std::uint16_t>(lam)};
    reps.push_back(le);
    for (Elem s : h) seen[fq.mul(s, le).idx] = 1;
  }
  return reps;
}

// Per-support base values u_i = -(prod_{j != i} (t_i - t_j))^{-1}; the
// attained values at lambda are then just lambda * u_i.
void base_values(const std::vector<Elem>& t, const Field& fq,
                 std::vector<Elem>& u) {
  const std::size_t m = t.size();
  u.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    Elem prod{1};
    for (std::size_t j = 0; j < m; ++j) {
      if (j != i) prod = fq.mul(prod, fq.sub(t[i], t[j]));
    }
    u[i] = fq.neg(fq.inv(prod));
  }
}

// Iterates supports with ranks in [t_begin, t_end) and, per support, the
// scalars dictated by the mode; stops early if visit returns false.
// visit(sorted attained values, lambda, support).
template <typename Visit>
void enumerate_pairs(std::uint32_t m, const Field& fq, bool prune,
                     std::uint64_t t_begin, std::uint64_t t_end,
                     Visit&& visit) {
  const std::uint32_t q = fq.q();
  std::vector<std::uint16_t> comb;
  if (t_begin >= t_end) return;
  detail::unrank_combination(t_begin, q, m, comb);
  std::vector<Elem> t(m), u(m), vals(m);
  for (std::uint64_t rank = t_begin; rank < t_end; ++rank) {
    for (std::uint32_t i = 0; i < m; ++i) t[i] = Elem{comb[i]};
    bool take = !prune || is_canonical_support(t, fq);
    if (take) {
      std::vector<Elem> lambdas;
      if (prune) {
        lambdas = coset_representatives(stabilizer_scalars(t, fq), fq);
      } else {
        lambdas.reserve(q - 1);
        for (std::uint32_t lam = 1; lam < q; ++lam) {
          lambdas.push_back(Elem{static_cast<std::uint16_t>(lam)});
        }
      }
      base_values(t, fq, u);
      for (Elem lam : lambdas) {
        for (std::uint32_t i = 0; i < m; ++i) vals[i] = fq.mul(lam, u[i]);
        std::sort(vals.begin(), vals.end());
        if (!visit(vals, lam, t)) return;
      }
    }
    if (!detail::next_combination(comb, q)) break;
  }
}

void check_enum_guard(std::uint32_t m, const Field& fq,
                      const EnumOptions& opts) {
  const std::uint32_t q = fq.q();
  if (m < 2 || m > q - 1) {
    throw std::invalid_argument("range enumeration needs 2 <= m <= q-1");
  }
  Int work = Int(q - 1) * binomial(q, m);
  Int guard = Int(static_cast<unsigned long>(opts.guard_ops));
  if (opts.prune) guard *= Int(q) * (q - 1);
  if (work > guard) {
    throw GuardExceeded("range enumeration needs " + work.get_str() +
                        " pairs, guard is " + guard.get_str());
  }
}

}  // namespace

bool RangeFamilyImage::contains(const NonzeroMultiset& ms) const {
  return std::binary_search(ranges.begin(), ranges.end(), ms);
}

RangeFamilyImage enumerate_range_F(std::uint32_t m, const Field& fq,
                                   const EnumOptions& opts) {
  check_enum_guard(m, fq, opts);
  const std::uint32_t q = fq.q();
  const std::uint64_t num_t = detail::binom_u64(q, m);

  unsigned workers = std::max(1u, opts.workers);
  workers = static_cast<unsigned>(
      std::min<std::uint64_t>(workers, std::max<std::uint64_t>(num_t, 1)));

  std::vector<std::unordered_set<std::string>> partial(workers);
  auto run_chunk = [&](unsigned w) {
    std::uint64_t begin = num_t * w / workers;
    std::uint64_t end = num_t * (w + 1) / workers;
    auto& local = partial[w];
    enumerate_pairs(m, fq, opts.prune, begin, end,
                    [&local](const std::vector<Elem>& vals, Elem,
                             const std::vector<Elem>&) {
                      local.insert(encode_values(vals));
                      return true;
                    });
  };
  if (workers == 1) {
    run_chunk(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run_chunk, w);
    for (auto& th : pool) th.join();
  }

  std::unordered_set<std::string> merged = std::move(partial[0]);
  for (unsigned w = 1; w < workers; ++w) {
    merged.merge(partial[w]);
  }

  RangeFamilyImage image;
  image.q = q;
  image.m = m;
  image.lambda_count = q - 1;
  image.support_count = num_t;
  image.ranges.reserve(merged.size());
  for (const auto& key : merged) image.ranges.push_back(decode_values(key));
  std::sort(image.ranges.begin(), image.ranges.end());
  return image;
}

std::vector<RangeMultiset> as_range_multisets(const RangeFamilyImage& image,
                                              const Field& fq) {
  std::vector<RangeMultiset> out;
  out.reserve(image.ranges.size());
  for (const auto& ms : image.ranges) out.push_back(to_range_multiset(ms, fq));
  return out;
}

std::vector<NonzeroMultiset> find_counterexamples(
    std::uint32_t ell, const Field& fq, std::optional<std::uint64_t> limit,
    const EnumOptions& opts) {
  const std::uint32_t q = fq.q();
  if (ell >= q) throw std::invalid_argument("need ell < q");
  const std::uint32_t m = q - ell;
  if (m < 2 || 2 * m >= q) {
    throw std::invalid_argument(
        "need 2 <= m = q - ell < q/2 so the zero count dominates");
  }
  RangeFamilyImage image = enumerate_range_F(m, fq, opts);
  std::vector<NonzeroMultiset> out;
  struct Done {};
  try {
    enumerate_M(m, fq, [&](const NonzeroMultiset& ms) {
      if (!image.contains(ms)) {
        out.push_back(ms);
        if (limit && out.size() >= *limit) throw Done{};
      }
    });
  } catch (const Done&) {
  }
  return out;
}

std::uint32_t Certificate::q() const {
  std::uint32_t v = 1;
  for (std::uint32_t i = 0; i < n; ++i) v *= p;
  return v;
}

namespace {

std::optional<PointedSupport> find_witness(const NonzeroMultiset& M,
                                           std::uint32_t m, const Field& fq,
                                           bool prune) {
  const std::uint64_t num_t = detail::binom_u64(fq.q(), m);
  std::optional<PointedSupport> found;
  enumerate_pairs(m, fq, prune, 0, num_t,
                  [&](const std::vector<Elem>& vals, Elem lam,
                      const std::vector<Elem>& t) {
                    if (vals == M.values) {
                      found = PointedSupport{lam, SupportSet{t}};
                      return false;
                    }
                    return true;
                  });
  return found;
}

void validate_admissible(const NonzeroMultiset& M, std::uint32_t ell,
                         const Field& fq) {
  const std::uint32_t q = fq.q();
  if (ell >= q || M.m() != q - ell) {
    throw std::invalid_argument("multiset size does not match q - ell");
  }
  if (!std::is_sorted(M.values.begin(), M.values.end())) {
    throw std::invalid_argument("multiset values must be in canonical order");
  }
  NonzeroMultiset::checked(M.values, fq);  // nonzero, zero-sum
  if (M.max_multiplicity() > ell) {
    throw std::invalid_argument(
        "zero multiplicity ell is not the highest in the multiset");
  }
}

}  // namespace

Certificate make_certificate(std::uint32_t ell, const NonzeroMultiset& M,
                             const Field& fq, const EnumOptions& opts,
                             const RangeFamilyImage* precomputed) {
  const auto start = std::chrono::steady_clock::now();
  validate_admissible(M, ell, fq);
  const std::uint32_t m = fq.q() - ell;

  RangeFamilyImage fresh;
  const RangeFamilyImage* image = precomputed;
  if (image == nullptr || image->q != fq.q() || image->m != m) {
    fresh = enumerate_range_F(m, fq, opts);
    image = &fresh;
  }

  Certificate cert;
  cert.p = fq.p();
  cert.n = fq.n();
  cert.modulus = fq.modulus();
  cert.ell = ell;
  cert.m = m;
  cert.multiset = M;
  cert.lambda_count = image->lambda_count;
  cert.support_count = image->support_count;
  cert.distinct_ranges_found = image->size();
  if (image->contains(M)) {
    cert.verdict = Certificate::Verdict::Achieved;
    cert.witness = find_witness(M, m, fq, opts.prune);
    if (!cert.witness) {
      throw IntegrityError("multiset is in the image but no witness found");
    }
  } else {
    cert.verdict = Certificate::Verdict::Counterexample;
  }
  cert.tool_version = kToolVersion;
  cert.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
  return cert;
}

VerifyResult verify_certificate(const Certificate& cert,
                                const EnumOptions& opts) {
  Field fq = cert.n == 1 ? Field(cert.p, 1)
                         : Field(cert.p, cert.n, cert.modulus);
  const std::uint32_t q = fq.q();
  if (cert.ell >= q || cert.m != q - cert.ell) {
    return {false, "ell/m inconsistent with the field"};
  }
  try {
    validate_admissible(cert.multiset, cert.ell, fq);
  } catch (const std::invalid_argument& e) {
    return {false, std::string("multiset not admissible: ") + e.what()};
  }
  if (cert.lambda_count != q - 1 ||
      Int(static_cast<unsigned long>(cert.support_count)) !=
          binomial(q, cert.m)) {
    return {false, "search space counts do not match the field"};
  }

  if (cert.verdict == Certificate::Verdict::Achieved) {
    if (!cert.witness) return {false, "achieved verdict without witness"};
    const auto& w = *cert.witness;
    if (w.lambda.idx == 0 || w.lambda.idx >= q ||
        w.support.m() != cert.m) {
      return {false, "malformed witness"};
    }
    for (Elem s : w.support.elems) {
      if (s.idx >= q) return {false, "malformed witness"};
    }
    std::vector<Elem> vals = fast_values(w, fq);
    std::sort(vals.begin(), vals.end());
    if (vals != cert.multiset.values) {
      return {false, "witness range does not match the multiset"};
    }
    return {true, ""};
  }

  // counterexample: re-run the exhaustion and compare
  if (cert.witness) return {false, "counterexample verdict carries a witness"};
  RangeFamilyImage image = enumerate_range_F(cert.m, fq, opts);
  if (image.size() != cert.distinct_ranges_found) {
    return {false, "distinct range count mismatch: re-enumeration found " +
                       std::to_string(image.size()) + ", certificate says " +
                       std::to_string(cert.distinct_ranges_found)};
  }
  if (image.contains(cert.multiset)) {
    return {false, "multiset is attainable; not a counterexample"};
  }
  return {true, ""};
}

ConstructionWitness construct_small_m(const std::vector<Elem>& b,
                                      const Field& fq) {
  if (b.size() != 2 && b.size() != 3) {
    throw std::invalid_argument("construction covers m = 2 and m = 3 only");
  }
  Elem sum{0};
  for (Elem x : b) {
    if (x.idx == 0) throw std::invalid_argument("inputs must be nonzero");
    if (x.idx >= fq.q()) throw std::invalid_argument("input >= q");
    sum = fq.add(sum, x);
  }
  if (sum.idx != 0) throw std::invalid_argument("inputs must sum to zero");

  ConstructionWitness w;
  w.m = static_cast<std::uint32_t>(b.size());
  w.inputs = b;
  if (b.size() == 2) {
    w.witness.lambda = fq.one();
    w.witness.support = SupportSet::checked({fq.inv(b[0]), fq.zero()}, fq);
  } else {
    w.witness.lambda = fq.mul(fq.mul(b[0], b[1]), b[2]);
    w.witness.support =
        SupportSet::checked({b[1], fq.neg(b[0]), fq.zero()}, fq);
  }

  RangeMultiset got = range_of(minimal_poly(w.witness, fq), fq);
  RangeMultiset want = to_range_multiset(
      NonzeroMultiset::checked(b, fq), fq);
  w.verified = (got == want);
  return w;
}

TermComparison compare_bound_terms(std::uint32_t q, std::uint32_t m) {
  if (m < 4) throw std::invalid_argument("term comparison needs m >= 4");
  if (q <= m) throw std::invalid_argument("term comparison needs q > m");
  TermComparison cmp;
  // Leading terms share the positive factor (q-1)...(q-m+2)/m!, so the
  // comparison reduces to the last factors. (Cross-checked against the
  // full products in the tests.)
  cmp.leading = (q - m + 1) < (q - 2);

  cmp.divisor_terms = true;
  const std::uint64_t d = std::gcd<std::uint64_t>(q - 1, m - 1);
  for (std::uint64_t i : divisors(d)) {
    if (i == 1 || i == static_cast<std::uint64_t>(m - 1)) continue;
    const std::uint64_t r = (m - 1) / i;
    Rat lhs = Rat(euler_phi(i) * binomial((q - 1) / i, r));
    if (!(lhs < family_mi_count(q, r))) {
      cmp.divisor_terms = false;
      break;
    }
  }

  cmp.residual_term = true;
  if ((q - 1) % (m - 1) == 0) {
    cmp.residual_term = euler_phi(m - 1) * Int((q - 1) / (m - 1)) < Int(q - 1);
  }
  return cmp;
}

BoundsReport bounds_report(std::uint32_t q, std::uint32_t m, bool with_exact,
                           const Field* fq, const EnumOptions& opts) {
  OrbitCountReport orbit = burnside_orbit_count(q, m);
  BoundsReport rep;
  rep.q = q;
  rep.m = m;
  rep.p = orbit.p;
  {
    std::uint64_t p = 0;
    std::uint32_t n = 0;
    prime_power(q, p, n);
    rep.n = n;
  }
  rep.ell = q - m;
  rep.k = m - 1;
  rep.d = orbit.d;
  rep.burnside_n = orbit.burnside_n;
  rep.hypothesis_ok = orbit.hypothesis_ok;
  rep.theorem_regime = rep.p > 9 && m >= 4 &&
                       static_cast<std::uint64_t>(m - 1) * (m - 1) <= rep.p;
  if (m >= 4) {
    rep.lower_bound = lower_bound_M(q, m).bound;
    rep.term_comparison = compare_bound_terms(q, m);
  }

  if (with_exact) {
    if (fq == nullptr) {
      throw std::invalid_argument("exact counts need a field");
    }
    if (fq->q() != q) throw std::invalid_argument("field does not match q");
    rep.exact_m = count_M_exact(m, *fq, opts.guard_ops);
    rep.exact_range_f =
        Int(static_cast<unsigned long>(enumerate_range_F(m, *fq, opts).size()));
  }

  Rat upper = rep.exact_range_f ? Rat(*rep.exact_range_f) : Rat(rep.burnside_n);
  if (rep.exact_m) {
    rep.counterexamples_guaranteed = Rat(*rep.exact_m) > upper;
  } else if (rep.lower_bound) {
    rep.counterexamples_guaranteed = *rep.lower_bound > upper;
  }
  return rep;
}

}  // namespace prange
