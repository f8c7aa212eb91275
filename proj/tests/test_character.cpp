// Copyright (c) 2026 hwt developers
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "character.hpp"
#include "oracle.hpp"

using namespace hwt;

TEST_CASE("Verma characters are Kostant counts") {
  auto a1 = RootSystem::build("A1");
  auto ch = verma_character(a1->parse_weight("5/2"), 3);
  CHECK(ch.at({0}) == 1);
  CHECK(ch.at({1}) == 1);
  CHECK(ch.at({2}) == 1);
  CHECK(ch.at({3}) == 1);

  auto a2 = RootSystem::build("A2");
  auto ch2 = verma_character(a2->parse_weight("0,0"), 4);
  CHECK(ch2.at({0, 0}) == 1);
  CHECK(ch2.at({1, 1}) == 2);  // alpha1 + alpha2, or the root alpha1+alpha2
  CHECK(ch2.at({2, 1}) == 2);
  CHECK(ch2.at({2, 2}) == 5);
  SUBCASE("independent recount by multiset enumeration") {
    for (const auto& [k, c] : ch2.coeffs) CHECK(verma_multiplicity(*a2, k) == c);
  }
}

TEST_CASE("WCF on sl2") {
  auto a1 = RootSystem::build("A1");
  SUBCASE("finite module") {
    auto ch = wcf_character(a1->parse_weight("2"), 5);
    CHECK(ch.at({0}) == 1);
    CHECK(ch.at({1}) == 1);
    CHECK(ch.at({2}) == 1);
    CHECK(ch.at({3}) == 0);
    CHECK(ch.at({5}) == 0);
    CHECK(ch.coefficient_sum() == 3);
  }
  SUBCASE("antidominant: equals the Verma character") {
    auto ch = wcf_character(a1->parse_weight("-3/2"), 4);
    auto vm = verma_character(a1->parse_weight("-3/2"), 4);
    CHECK(ch.coeffs == vm.coeffs);
  }
  SUBCASE("trivial module at lambda = 0") {
    auto ch = wcf_character(a1->parse_weight("0"), 3);
    CHECK(ch.coeffs.size() == 1);
    CHECK(ch.at({0}) == 1);
  }
}

TEST_CASE("WCF adjoint representation of A2") {
  auto a2 = RootSystem::build("A2");
  auto ch = wcf_character(a2->parse_weight("1,1"), 6);
  CHECK(ch.at({0, 0}) == 1);
  CHECK(ch.at({1, 0}) == 1);
  CHECK(ch.at({0, 1}) == 1);
  CHECK(ch.at({1, 1}) == 2);  // zero weight space of the adjoint
  CHECK(ch.at({2, 1}) == 1);
  CHECK(ch.at({1, 2}) == 1);
  CHECK(ch.at({2, 2}) == 1);  // lowest weight
  CHECK(ch.coefficient_sum() == 8);
  CHECK(weyl_dimension(a2->parse_weight("1,1")) == 8);
  SUBCASE("support matches formula B") {
    auto supp = character_support(ch);
    auto b = weights_levi_shift(HWModuleDescriptor::simple(a2->parse_weight("1,1")), 6);
    CHECK(supp.support() == b.support());
  }
}

TEST_CASE("WCF hypothesis refusal") {
  auto a2 = RootSystem::build("A2");
  CHECK_THROWS_WITH_AS(wcf_character(a2->parse_weight("-1,-1"), 3),
                       doctest::Contains("S_lambda"), WcfHypothesisError);
}

TEST_CASE("Weyl dimension formula") {
  auto a2 = RootSystem::build("A2");
  CHECK(weyl_dimension(a2->parse_weight("1,0")) == 3);
  CHECK(weyl_dimension(a2->parse_weight("2,0")) == 6);
  auto b2 = RootSystem::build("B2");
  CHECK(weyl_dimension(b2->parse_weight("1,0")) == 5);
  CHECK(weyl_dimension(b2->parse_weight("0,1")) == 4);
  auto g2 = RootSystem::build("G2");
  CHECK(weyl_dimension(g2->parse_weight("1,0")) == 7);
  CHECK(weyl_dimension(g2->parse_weight("0,1")) == 14);
  CHECK_THROWS_AS(weyl_dimension(a2->parse_weight("1,-1")), std::invalid_argument);
  SUBCASE("dimension equals the coefficient sum of the full character") {
    auto b3 = RootSystem::build("B3");
    Weight l = b3->parse_weight("1,0,0");
    auto ch = wcf_character(l, 5);
    CHECK(Rat(ch.coefficient_sum()) == weyl_dimension(l));  // 7-dim vector rep fits depth 5
  }
}

TEST_CASE("character support carries multiplicities") {
  auto a1 = RootSystem::build("A1");
  auto s = character_support(verma_character(a1->parse_weight("1"), 2));
  CHECK(s.size() == 3);
  for (const auto& [k, m] : s.entries) CHECK(m == 1);
}
