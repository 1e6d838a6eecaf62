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

#include <random>

#include "prange/gf.hpp"
#include "prange/numth.hpp"

using namespace prange;

namespace {

// root-scan oracle for quadratic/cubic irreducibility over F_p
bool has_root_mod_p(const std::vector<std::uint16_t>& coeffs, std::uint32_t p) {
  for (std::uint32_t x = 0; x < p; ++x) {
    std::uint64_t acc = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
      acc = (acc * x + coeffs[i]) % p;
    }
    if (acc == 0) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("prime field construction") {
  Field f(13);
  CHECK(f.p() == 13);
  CHECK(f.n() == 1);
  CHECK(f.q() == 13);
  CHECK(f.modulus().empty());
}

TEST_CASE("extension field via explicit modulus") {
  // x^2 + 1 over F_3: no roots among 0,1,2, hence irreducible
  std::vector<std::uint16_t> mod{1, 0, 1};
  REQUIRE(!has_root_mod_p(mod, 3));
  Field f(3, 2, mod);
  CHECK(f.q() == 9);
  CHECK(f.modulus() == mod);
}

TEST_CASE("construction rejects bad parameters") {
  CHECK_THROWS_AS(Field(4, 1), std::invalid_argument);   // not prime
  CHECK_THROWS_AS(Field(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(Field(91, 1), std::invalid_argument);  // 7*13
  CHECK_THROWS_AS(Field(2, 0), std::invalid_argument);
  CHECK_THROWS_AS(Field(257, 2, std::vector<std::uint16_t>{1, 0, 1}),
                  std::invalid_argument);  // q > 2^16
  // x^2 + 2 over F_3 has root 1
  CHECK_THROWS_AS(Field(3, 2, std::vector<std::uint16_t>{2, 0, 1}),
                  std::invalid_argument);
  // non-monic
  CHECK_THROWS_AS(Field(3, 2, std::vector<std::uint16_t>{1, 0, 2}),
                  std::invalid_argument);
  // wrong length
  CHECK_THROWS_AS(Field(3, 2, std::vector<std::uint16_t>{1, 1}),
                  std::invalid_argument);
  // coefficient out of range
  CHECK_THROWS_AS(Field(3, 2, std::vector<std::uint16_t>{4, 0, 1}),
                  std::invalid_argument);
  // no built-in modulus for this (p, n)
  CHECK_THROWS_AS(Field(17, 2), std::invalid_argument);
}

TEST_CASE("builtin moduli all construct and are root-free for n <= 3") {
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u}) {
    for (std::uint32_t n : {2u, 3u}) {
      auto mod = Field::builtin_modulus(p, n);
      REQUIRE(mod.has_value());
      CHECK(!has_root_mod_p(*mod, p));
      Field f(p, n);
      std::uint32_t want = 1;
      for (std::uint32_t i = 0; i < n; ++i) want *= p;
      CHECK(f.q() == want);
    }
  }
  CHECK(Field(2, 4).q() == 16);
}

TEST_CASE("arith examples") {
  Field f13(13);
  CHECK(f13.mul(f13.elem(5), f13.elem(7)).idx == 9);  // 35 mod 13
  CHECK(f13.add(f13.elem(7), f13.zero()).idx == 7);
  CHECK(f13.sub(f13.elem(3), f13.elem(7)).idx == 9);

  // In F_9 = F_3[x]/(x^2+1): the class of x has index 3, and x*x = -1 = 2
  Field f9(3, 2);
  Elem x = f9.from_digits({0, 1});
  CHECK(x.idx == 3);
  CHECK(f9.mul(x, x).idx == 2);
}

TEST_CASE("inv examples") {
  Field f13(13);
  CHECK(f13.inv(f13.elem(5)).idx == 8);  // 5*8 = 40 = 1
  CHECK(f13.inv(f13.one()).idx == 1);
  Field f7(7);
  CHECK(f7.inv(f7.elem(3)).idx == 5);  // 15 = 1
  CHECK_THROWS_AS(f7.inv(f7.zero()), std::domain_error);
}

TEST_CASE("element order examples") {
  Field f13(13);
  CHECK(f13.order(f13.one()) == 1);
  SUBCASE("order of 2 in F_13 by explicit power iteration") {
    // oracle: walk the powers directly
    std::uint32_t ord = 1;
    Elem acc = f13.elem(2);
    while (acc.idx != 1) {
      acc = f13.mul(acc, f13.elem(2));
      ++ord;
    }
    CHECK(ord == 12);
    CHECK(f13.order(f13.elem(2)) == 12);
  }
  Field f7(7);
  CHECK(f7.order(f7.elem(6)) == 2);  // 6 = -1
  CHECK_THROWS_AS(f7.order(f7.zero()), std::domain_error);
  CHECK((f13.q() - 1) % f13.order(f13.elem(5)) == 0);
}

TEST_CASE("pow examples") {
  Field f7(7);
  CHECK(f7.pow(f7.elem(3), 2).idx == 2);
  Field f13(13);
  CHECK(f13.pow(f13.elem(2), 12).idx == 1);  // Fermat
  CHECK(f13.pow(f13.zero(), 0).idx == 1);    // 0^0 = 1
  CHECK(f13.pow(f13.zero(), 5).idx == 0);
  CHECK(f13.pow(f13.elem(6), 0).idx == 1);
}

TEST_CASE("digits round trip") {
  Field f27(3, 3);
  for (std::uint32_t i = 0; i < 27; ++i) {
    Elem e = f27.elem(i);
    CHECK(f27.from_digits(f27.digits(e)) == e);
  }
  CHECK_THROWS_AS(f27.from_digits({0, 0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(f27.from_digits({5}), std::invalid_argument);
  CHECK_THROWS_AS(f27.elem(27), std::invalid_argument);
}

TEST_CASE("large prime field uses the formula path") {
  Field f(65521);  // largest prime below 2^16
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::uint32_t> d(0, 65520);
  for (int it = 0; it < 2000; ++it) {
    Elem a = f.elem(d(rng)), b = f.elem(d(rng)), c = f.elem(d(rng));
    CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
    if (a.idx != 0) {
      CHECK(f.mul(a, f.inv(a)).idx == 1);
      CHECK(f.pow(a, 65520).idx == 1);
    }
  }
}

TEST_CASE("large extension field above the table threshold") {
  // GF(2^13) with x^13 + x^4 + x^3 + x + 1
  Field f(2, 13, std::vector<std::uint16_t>{1, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1});
  CHECK(f.q() == 8192);
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<std::uint32_t> d(1, 8191);
  for (int it = 0; it < 300; ++it) {
    Elem a = f.elem(d(rng)), b = f.elem(d(rng));
    CHECK(f.mul(a, f.inv(a)).idx == 1);
    CHECK(f.pow(a, 8191).idx == 1);
    CHECK(f.mul(a, b) == f.mul(b, a));
    CHECK(f.add(a, b) == f.add(b, a));
    CHECK(f.add(a, a).idx == 0);  // char 2
  }
}

TEST_CASE("wilson-style product in mid-size fields") {
  for (std::uint32_t q : {16u, 25u, 27u}) {
    Field f = field_for_q(q);
    Elem minus_one = f.neg(f.one());
    for (std::uint32_t a = 0; a < q; ++a) {
      Elem prod = f.one();
      for (std::uint32_t s = 0; s < q; ++s) {
        if (s == a) continue;
        prod = f.mul(prod, f.sub(f.elem(a), f.elem(s)));
      }
      CHECK(prod == minus_one);
    }
  }
}

TEST_CASE("generator has full order") {
  for (std::uint32_t q : {2u, 3u, 4u, 7u, 9u, 13u, 16u, 27u}) {
    Field f = field_for_q(q);
    CHECK(f.order(f.generator()) == q - 1);
  }
}

TEST_CASE("modulus config parsing and overrides") {
  ModulusTable t = parse_modulus_config(
      "# comment\n"
      "\n"
      "3 2 1 0 1\n"
      "2 3 1 1 0 1\n");
  REQUIRE(t.size() == 2);
  CHECK(t.at({3, 2}) == std::vector<std::uint16_t>{1, 0, 1});

  Field f(3, 2, &t);
  CHECK(f.q() == 9);

  CHECK_THROWS_AS(parse_modulus_config("3 2 1 0\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_modulus_config("x 2 1 0 1\n"), std::invalid_argument);
  CHECK_THROWS_AS(load_modulus_config("/nonexistent/file"),
                  std::invalid_argument);

  // an override with a reducible modulus is rejected at construction
  ModulusTable bad = parse_modulus_config("3 2 2 0 1\n");  // x^2+2, root 1
  CHECK_THROWS_AS(Field(3, 2, &bad), std::invalid_argument);
}

TEST_CASE("field digests separate distinct fields") {
  CHECK(Field(13).digest() != Field(11).digest());
  CHECK(Field(3, 2).digest() != Field(3, 3).digest());
  CHECK(Field(3, 2).digest() == Field(3, 2).digest());
}

TEST_CASE("field_for_q") {
  CHECK(field_for_q(27).p() == 3);
  CHECK(field_for_q(16).n() == 4);
  CHECK_THROWS_AS(field_for_q(12), std::invalid_argument);
}
