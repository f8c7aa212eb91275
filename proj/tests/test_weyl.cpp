// Copyright (c) 2026 hwt developers
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <set>

#include "verify.hpp"
#include "weyl.hpp"

using namespace hwt;

TEST_CASE("simple reflections") {
  auto a1 = RootSystem::build("A1");
  CHECK(reflect(0, a1->fundamental_weight(0)) == -a1->fundamental_weight(0));
  auto a2 = RootSystem::build("A2");
  CHECK(reflect(0, a2->fundamental_weight(1)) == a2->fundamental_weight(1));
  CHECK(reflect(0, a2->simple_root(1)) == a2->simple_root(0) + a2->simple_root(1));
  SUBCASE("involution") {
    Rng rng(5);
    Weight l = sample_lambda(rng, a2);
    CHECK(reflect(1, reflect(1, l)) == l);
  }
}

TEST_CASE("parabolic enumeration") {
  auto a2 = RootSystem::build("A2");
  WeylGroup W = WeylGroup::enumerate(a2, IndexSet::all(2));
  CHECK(W.order() == 6);
  CHECK(W.elements().front().word_str() == "e");
  CHECK(W.elements().back().word_str() == "s1.s2.s1");  // lex-min reduced word
  CHECK(W.elements().back().length == 3);

  WeylGroup W1 = WeylGroup::enumerate(a2, IndexSet{});
  CHECK(W1.order() == 1);

  auto b2 = RootSystem::build("B2");
  WeylGroup WB = WeylGroup::enumerate(b2, IndexSet::all(2));
  CHECK(WB.order() == 8);
  CHECK(WB.elements().back().length == 4);

  SUBCASE("deterministic order") {
    WeylGroup W2 = WeylGroup::enumerate(a2, IndexSet::all(2));
    for (size_t i = 0; i < W.order(); ++i)
      CHECK(W.elements()[i].word == W2.elements()[i].word);
  }
  SUBCASE("cap refusal names the cap") {
    CHECK_THROWS_AS(WeylGroup::enumerate(a2, IndexSet::all(2), 3), CapExceededError);
  }
  SUBCASE("orders match the classical count") {
    CHECK(WeylGroup::enumerate(RootSystem::build("G2"), IndexSet::all(2)).order() == 12);
    CHECK(WeylGroup::enumerate(RootSystem::build("A3"), IndexSet::all(3)).order() == 24);
    CHECK(WeylGroup::enumerate(RootSystem::build("B3"), IndexSet::all(3)).order() == 48);
    CHECK(WeylGroup::enumerate(RootSystem::build("A1xA1"), IndexSet::all(2)).order() == 4);
  }
}

TEST_CASE("length equals inversion count") {
  for (const char* t : {"A2", "B2", "G2"}) {
    auto rs = RootSystem::build(t);
    WeylGroup W = WeylGroup::enumerate(rs, IndexSet::all(rs->rank()));
    for (const auto& w : W.elements()) CHECK(inversion_count(w, *rs) == w.length);
  }
}

TEST_CASE("orbits") {
  auto a2 = RootSystem::build("A2");
  Weight l = a2->parse_weight("1,1");
  CHECK(orbit(a2, IndexSet::all(2), l).size() == 6);
  CHECK(orbit(a2, IndexSet::all(2), a2->zero()).size() == 1);
  CHECK(orbit(a2, IndexSet::single(0), a2->fundamental_weight(1)).size() == 1);
  SUBCASE("orbit size divides group order") {
    Rng rng(31);
    WeylGroup W = WeylGroup::enumerate(a2, IndexSet::all(2));
    for (int t = 0; t < 8; ++t) {
      Weight x = sample_lambda(rng, a2);
      auto orb = orbit(a2, IndexSet::all(2), x);
      CHECK(W.order() % orb.size() == 0);
      size_t stab = 0;
      for (const auto& w : W.elements())
        if (w.apply(x) == x) ++stab;
      CHECK(orb.size() * stab == W.order());
    }
  }
}

TEST_CASE("dot action") {
  auto a1 = RootSystem::build("A1");
  WeylGroup W = WeylGroup::enumerate(a1, IndexSet::all(1));
  Weight l = a1->parse_weight("3");
  CHECK(dot_action(W.identity(), l) == l);
  // s . lambda = lambda - (m+1) alpha_1
  Weight expect = l - a1->simple_root(0) * Rat(4);
  CHECK(dot_action(W.elements()[1], l) == expect);
  Weight fixed = a1->parse_weight("-1");
  CHECK(dot_action(W.elements()[1], fixed) == fixed);
}

TEST_CASE("S_lambda") {
  auto a1 = RootSystem::build("A1");
  WeylGroup W1 = WeylGroup::enumerate(a1, IndexSet::all(1));
  CHECK(s_lambda_indices(W1, a1->parse_weight("-1/2")) == std::vector<size_t>{0});
  CHECK(s_lambda_indices(W1, a1->parse_weight("1/2")) == std::vector<size_t>{0});
  CHECK(s_lambda_indices(W1, a1->parse_weight("2")).size() == 2);

  auto a2 = RootSystem::build("A2");
  WeylGroup W2 = WeylGroup::enumerate(a2, IndexSet::all(2));
  CHECK(s_lambda_indices(W2, a2->parse_weight("1,1")).size() == 6);
  SUBCASE("weight-level set collapses at -rho") {
    // w . (-rho) = -rho for every w, so the literal weight set is a singleton
    CHECK(s_lambda_weights(W2, a2->parse_weight("-1,-1")).size() == 1);
  }
}

TEST_CASE("WCF condition") {
  auto a2 = RootSystem::build("A2");
  CHECK(wcf_condition_holds(a2, a2->parse_weight("2,1")));
  auto a1 = RootSystem::build("A1");
  CHECK(wcf_condition_holds(a1, a1->parse_weight("-3/2")));
  // at -rho the dot action fixes lambda, so S_lambda = W but J_lambda is empty
  CHECK(!wcf_condition_holds(a2, a2->parse_weight("-1,-1")));
}

TEST_CASE("setwise stabilizer") {
  auto a2 = RootSystem::build("A2");
  WeylGroup W = WeylGroup::enumerate(a2, IndexSet::all(2));
  Weight l = a2->parse_weight("1,1");
  std::vector<QVec> orb;
  for (const auto& x : orbit(a2, IndexSet::all(2), l)) orb.push_back(x.coords());
  CHECK(setwise_stabilizer(W, orb).size() == 6);
  CHECK(setwise_stabilizer(W, {l.coords()}).size() == 1);
  SUBCASE("stabilizer is a subgroup containing the identity") {
    auto st = setwise_stabilizer(W, {a2->fundamental_weight(1).coords()});
    CHECK(st.front() == 0);
    CHECK(st.size() == 2);  // e and s1 fix omega_2
  }
}
