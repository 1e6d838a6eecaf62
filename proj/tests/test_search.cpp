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

#include <doctest.h>

#include <algorithm>
#include <set>

#include "prange/certificate_io.hpp"
#include "prange/errors.hpp"
#include "prange/gf.hpp"
#include "prange/msets.hpp"
#include "prange/search.hpp"

using namespace prange;

namespace {

NonzeroMultiset ms_of(const Field& fq, std::initializer_list<std::uint32_t> v) {
  std::vector<Elem> values;
  for (auto x : v) values.push_back(fq.elem(x));
  return NonzeroMultiset::checked(std::move(values), fq);
}

}  // namespace

TEST_CASE("image of the family at (7,3) covers every admissible multiset") {
  Field f7(7);
  RangeFamilyImage image = enumerate_range_F(3, f7);
  CHECK(image.size() == 8);
  CHECK(image.support_count == 35);
  CHECK(image.lambda_count == 6);
  auto admissible = collect_M(3, f7);
  REQUIRE(admissible.size() == 8);
  CHECK(image.ranges == admissible);
}

TEST_CASE("image at (7,2) is the three negation pairs") {
  Field f7(7);
  RangeFamilyImage image = enumerate_range_F(2, f7);
  REQUIRE(image.size() == 3);
  for (const auto& ms : image.ranges) {
    REQUIRE(ms.m() == 2);
    CHECK(ms.values[1] == f7.neg(ms.values[0]));
  }
}

TEST_CASE("image size at (13,4) stays under the orbit bound") {
  Field f13(13);
  RangeFamilyImage image = enumerate_range_F(4, f13);
  CHECK(image.size() == 51);  // enumerated; 51 <= 63 = orbit count
  CHECK(Int(static_cast<unsigned long>(image.size())) <=
        burnside_orbit_count(13, 4).burnside_n);
}

TEST_CASE("pruned and unpruned enumerations agree, workers included") {
  for (std::uint32_t q : {7u, 8u, 9u, 11u}) {
    Field fq = field_for_q(q);
    for (std::uint32_t m = 2; m < q; ++m) {
      EnumOptions pruned;
      EnumOptions plain;
      plain.prune = false;
      auto a = enumerate_range_F(m, fq, pruned);
      auto b = enumerate_range_F(m, fq, plain);
      CHECK(a.ranges == b.ranges);
    }
  }
  Field f13(13);
  EnumOptions mt;
  mt.workers = 3;
  CHECK(enumerate_range_F(4, f13, mt).ranges ==
        enumerate_range_F(4, f13).ranges);
  EnumOptions mt_plain;
  mt_plain.prune = false;
  mt_plain.workers = 4;
  CHECK(enumerate_range_F(4, f13, mt_plain).ranges ==
        enumerate_range_F(4, f13).ranges);
}

TEST_CASE("enumeration guard raises") {
  Field f31(31);
  EnumOptions tight;
  tight.prune = false;
  tight.guard_ops = 1000;
  CHECK_THROWS_AS(enumerate_range_F(9, f31, tight), GuardExceeded);
}

TEST_CASE("counterexamples at (13, ell=9)") {
  Field f13(13);
  auto cxs = find_counterexamples(9, f13);
  CHECK(cxs.size() == 54);  // 105 admissible - 51 attained
  CHECK(std::is_sorted(cxs.begin(), cxs.end()));
  SUBCASE("limit returns the canonical prefix") {
    auto three = find_counterexamples(9, f13, 3);
    REQUIRE(three.size() == 3);
    CHECK(std::equal(three.begin(), three.end(), cxs.begin()));
  }
  SUBCASE("every counterexample is admissible but unattained") {
    RangeFamilyImage image = enumerate_range_F(4, f13);
    for (const auto& ms : cxs) {
      CHECK(multiset_sum(ms, f13).idx == 0);
      CHECK(!image.contains(ms));
    }
  }
}

TEST_CASE("no counterexamples at (7, ell=4): m=3 reaches everything") {
  Field f7(7);
  CHECK(find_counterexamples(4, f7).empty());
}

TEST_CASE("counterexamples exist at (11, ell=7)") {
  Field f11(11);
  auto cxs = find_counterexamples(7, f11);
  CHECK(cxs.size() == 35);  // 65 admissible - 30 attained
  CHECK(!cxs.empty());
}

TEST_CASE("find_counterexamples rejects dominated zero counts") {
  Field f13(13);
  CHECK_THROWS_AS(find_counterexamples(6, f13), std::invalid_argument);  // m=7
  CHECK_THROWS_AS(find_counterexamples(13, f13), std::invalid_argument);
  CHECK_THROWS_AS(find_counterexamples(12, f13), std::invalid_argument);  // m=1
}

TEST_CASE("certificates") {
  Field f13(13);
  auto cxs = find_counterexamples(9, f13, 1);
  REQUIRE(!cxs.empty());

  SUBCASE("counterexample certificate round trip") {
    Certificate cert = make_certificate(9, cxs[0], f13);
    CHECK(cert.verdict == Certificate::Verdict::Counterexample);
    CHECK(!cert.witness.has_value());
    CHECK(cert.distinct_ranges_found == 51);
    CHECK(cert.support_count == 715);
    CHECK(cert.lambda_count == 12);

    std::string text = certificate_to_json(cert);
    Certificate back = certificate_from_json(text);
    CHECK(back.multiset == cert.multiset);
    CHECK(verify_certificate(back).ok);
    EnumOptions opposite;
    opposite.prune = false;
    CHECK(verify_certificate(back, opposite).ok);
  }

  SUBCASE("achieved certificate carries a working witness") {
    Field f7(7);
    Certificate cert = make_certificate(4, ms_of(f7, {1, 2, 4}), f7);
    CHECK(cert.verdict == Certificate::Verdict::Achieved);
    REQUIRE(cert.witness.has_value());
    auto vals = fast_values(*cert.witness, f7);
    std::sort(vals.begin(), vals.end());
    CHECK(vals == cert.multiset.values);
    CHECK(verify_certificate(cert).ok);
  }

  SUBCASE("tampered multiset fails verification") {
    Certificate cert = make_certificate(9, cxs[0], f13);
    Certificate bad = cert;
    bad.multiset.values[0] =
        Elem{static_cast<std::uint16_t>(bad.multiset.values[0].idx + 1)};
    CHECK(!verify_certificate(bad).ok);
  }

  SUBCASE("witness with mismatching range fails verification") {
    Field f7(7);
    Certificate cert = make_certificate(4, ms_of(f7, {1, 2, 4}), f7);
    REQUIRE(cert.witness.has_value());
    Certificate bad = cert;
    // scale by a non-residue: {1,2,4} is the square subgroup of F_7^*,
    // so residue multiples would permute it and still verify
    bad.witness->lambda = f7.mul(bad.witness->lambda, f7.elem(3));
    CHECK(!verify_certificate(bad).ok);
  }

  SUBCASE("verdict flipped to achieved without witness fails") {
    Certificate cert = make_certificate(9, cxs[0], f13);
    Certificate bad = cert;
    bad.verdict = Certificate::Verdict::Achieved;
    CHECK(!verify_certificate(bad).ok);
  }

  SUBCASE("wrong distinct-range tally fails") {
    Certificate cert = make_certificate(9, cxs[0], f13);
    Certificate bad = cert;
    bad.distinct_ranges_found += 1;
    CHECK(!verify_certificate(bad).ok);
  }

  SUBCASE("nonzero-sum multiset is rejected outright") {
    NonzeroMultiset bad;
    bad.values = {f13.elem(1), f13.elem(2), f13.elem(3), f13.elem(4)};
    CHECK_THROWS_AS(make_certificate(9, bad, f13), std::invalid_argument);
  }

  SUBCASE("malformed JSON is rejected") {
    CHECK_THROWS_AS(certificate_from_json("{ not json"),
                    std::invalid_argument);
    CHECK_THROWS_AS(certificate_from_json("{}"), std::invalid_argument);
  }

  SUBCASE("precomputed image shortcut matches a fresh run") {
    RangeFamilyImage image = enumerate_range_F(4, f13);
    Certificate a = make_certificate(9, cxs[0], f13, {}, &image);
    Certificate b = make_certificate(9, cxs[0], f13);
    CHECK(a.verdict == b.verdict);
    CHECK(a.distinct_ranges_found == b.distinct_ranges_found);
  }
}

TEST_CASE("certificate JSON schema is stable") {
  Field f7(7);
  Certificate cert = make_certificate(4, ms_of(f7, {1, 2, 4}), f7);
  std::string text = certificate_to_json(cert);
  for (const char* key :
       {"\"field\"", "\"p\"", "\"n\"", "\"modulus\"", "\"ell\"", "\"m\"",
        "\"multiset\"", "\"search_space\"", "\"lambda_count\"",
        "\"support_count\"", "\"distinct_ranges_found\"", "\"verdict\"",
        "\"witness\"", "\"tool_version\"", "\"elapsed_ms\""}) {
    CHECK_MESSAGE(text.find(key) != std::string::npos, key);
  }
  CHECK(text.find("\"achieved\"") != std::string::npos);
}

TEST_CASE("small-m constructions") {
  Field f7(7);
  SUBCASE("m=3 instance from the closing construction") {
    auto w = construct_small_m({f7.elem(1), f7.elem(2), f7.elem(4)}, f7);
    CHECK(w.verified);
    CHECK(w.witness.lambda == f7.one());  // 1*2*4 = 8 = 1
    CHECK(w.witness.support.elems ==
          std::vector<Elem>{f7.zero(), f7.elem(2), f7.elem(6)});
    // the three displayed values
    Poly f = minimal_poly(w.witness, f7);
    CHECK(eval(f, f7.elem(2), f7) == f7.elem(1));       // f(b2) = b1
    CHECK(eval(f, f7.neg(f7.elem(1)), f7) == f7.elem(2));  // f(-b1) = b2
    CHECK(eval(f, f7.zero(), f7) == f7.elem(4));        // f(0) = b3
    CHECK(f.degree() == 4);
  }
  SUBCASE("m=2 instance") {
    auto w = construct_small_m({f7.elem(3), f7.elem(4)}, f7);
    CHECK(w.verified);
    CHECK(w.witness.lambda == f7.one());
    // T = {3^{-1}, 0} = {5, 0}
    CHECK(w.witness.support.elems ==
          std::vector<Elem>{f7.zero(), f7.elem(5)});
  }
  SUBCASE("repeated b_i are fine for m=3") {
    // (1, 1, 5): sum = 7 = 0
    auto w = construct_small_m({f7.elem(1), f7.elem(1), f7.elem(5)}, f7);
    CHECK(w.verified);
  }
  SUBCASE("rejects zero and nonzero-sum inputs") {
    CHECK_THROWS_AS(construct_small_m({f7.elem(1), f7.elem(2), f7.elem(3)}, f7),
                    std::invalid_argument);
    CHECK_THROWS_AS(construct_small_m({f7.zero(), f7.zero()}, f7),
                    std::invalid_argument);
    CHECK_THROWS_AS(construct_small_m({f7.elem(1)}, f7),
                    std::invalid_argument);
  }
  SUBCASE("works in extension fields") {
    Field f27(3, 3);
    Elem b1 = f27.elem(5), b2 = f27.elem(8);
    Elem b3 = f27.neg(f27.add(b1, b2));
    REQUIRE(b3.idx != 0);
    CHECK(construct_small_m({b1, b2, b3}, f27).verified);
    CHECK(construct_small_m({b1, f27.neg(b1)}, f27).verified);
  }
}

TEST_CASE("termwise bound comparisons") {
  SUBCASE("reduced leading comparison matches full products up to q=64") {
    for (std::uint32_t q = 5; q <= 64; ++q) {
      for (std::uint32_t m = 4; m < q; ++m) {
        Int lead_n = 1, lead_m = Int(q) - 2;
        for (std::uint32_t j = 1; j <= m - 1; ++j) lead_n *= (q - j);
        for (std::uint32_t j = 1; j <= m - 2; ++j) lead_m *= (q - j);
        bool full = make_rat(lead_n, factorial(m)) <
                    make_rat(lead_m, factorial(m));
        CHECK(compare_bound_terms(q, m).leading == full);
      }
    }
  }
  SUBCASE("all three hold on a spot sample") {
    for (auto [q, m] : std::initializer_list<std::pair<std::uint32_t, std::uint32_t>>{
             {13, 4}, {17, 5}, {19, 6}, {13, 7}, {1024, 513}, {1021, 4}}) {
      TermComparison cmp = compare_bound_terms(q, m);
      CHECK(cmp.leading);
      CHECK(cmp.divisor_terms);
      CHECK(cmp.residual_term);
    }
  }
}

TEST_CASE("bounds report assembly") {
  SUBCASE("(13,4) with exact counts") {
    Field f13(13);
    BoundsReport rep = bounds_report(13, 4, true, &f13);
    CHECK(rep.burnside_n == 63);
    CHECK(rep.lower_bound.has_value());
    CHECK(*rep.lower_bound == make_rat(121, 2));
    REQUIRE(rep.exact_m.has_value());
    CHECK(*rep.exact_m == 105);
    REQUIRE(rep.exact_range_f.has_value());
    CHECK(*rep.exact_range_f == 51);
    CHECK(rep.ell == 9);
    CHECK(rep.k == 3);
    CHECK(rep.d == 3);
    CHECK(rep.theorem_regime);  // p = 13 > 9, (m-1)^2 = 9 <= 13
    CHECK(rep.counterexamples_guaranteed);  // 105 > 51
  }
  SUBCASE("(13,4) formulas alone cannot guarantee: 60.5 < 63") {
    BoundsReport rep = bounds_report(13, 4, false);
    CHECK(!rep.counterexamples_guaranteed);
  }
  SUBCASE("(17,5) guaranteed by formulas alone") {
    BoundsReport rep = bounds_report(17, 5, false);
    CHECK(rep.burnside_n == 400);
    CHECK(*rep.lower_bound == Rat(436));
    CHECK(rep.theorem_regime);
    CHECK(rep.counterexamples_guaranteed);
  }
  SUBCASE("(11,4) guaranteed: 30 < 135/4") {
    BoundsReport rep = bounds_report(11, 4, false);
    CHECK(rep.burnside_n == 30);
    CHECK(*rep.lower_bound == make_rat(135, 4));
    CHECK(rep.counterexamples_guaranteed);
  }
  SUBCASE("small m has no lower bound column") {
    BoundsReport rep = bounds_report(13, 3, false);
    CHECK(!rep.lower_bound.has_value());
    CHECK(!rep.counterexamples_guaranteed);
    CHECK(!rep.theorem_regime);
  }
  SUBCASE("exact mode requires a field") {
    CHECK_THROWS_AS(bounds_report(13, 4, true, nullptr),
                    std::invalid_argument);
  }
}

TEST_CASE("theorem-regime instances have nonempty counterexample sets") {
  // (17, m=5) and (11, m=4) are inside the regime; both differences are
  // nonempty, as the bound comparison promises
  Field f17(17);
  CHECK(!find_counterexamples(12, f17).empty());
  Field f11(11);
  CHECK(!find_counterexamples(7, f11).empty());
}
