// Copyright (c) 2026 hwt developers
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "rootsys.hpp"
#include "verify.hpp"

using namespace hwt;

TEST_CASE("spec parsing and validity bounds") {
  CHECK(RootSystemSpec::parse("a2").str() == "A2");
  CHECK(RootSystemSpec::parse("A1xA1").str() == "A1xA1");
  CHECK(RootSystemSpec::parse("b3XG2").str() == "B3xG2");
  CHECK(RootSystemSpec::parse("D2").total_rank() == 2);
  CHECK_THROWS_AS(RootSystemSpec::parse("E9"), std::invalid_argument);
  CHECK_THROWS_AS(RootSystemSpec::parse("F3"), std::invalid_argument);
  CHECK_THROWS_AS(RootSystemSpec::parse("G3"), std::invalid_argument);
  CHECK_THROWS_AS(RootSystemSpec::parse("H2"), std::invalid_argument);
  CHECK_THROWS_AS(RootSystemSpec::parse("A0"), std::invalid_argument);
  CHECK_THROWS_AS(RootSystemSpec::parse("B1"), std::invalid_argument);
  CHECK_THROWS_AS(RootSystemSpec::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(RootSystemSpec::parse("A1x"), std::invalid_argument);
  CHECK_THROWS_AS(RootSystemSpec::parse("A"), std::invalid_argument);
}

TEST_CASE("A2 defining data") {
  auto rs = RootSystem::build("A2");
  CHECK(rs->rank() == 2);
  CHECK(rs->cartan() == std::vector<std::vector<int>>{{2, -1}, {-1, 2}});
  CHECK(rs->positive_roots() == std::vector<IVec>{{0, 1}, {1, 0}, {1, 1}});
  CHECK(rs->weyl_order() == 6);
}

TEST_CASE("A1 normalization") {
  auto rs = RootSystem::build("A1");
  CHECK(rs->positive_roots() == std::vector<IVec>{{1}});
  Weight a1 = rs->simple_root(0);
  CHECK(rs->bilinear(a1, a1) == 2);
}

TEST_CASE("G2 positive roots and labeling") {
  auto rs = RootSystem::build("G2");
  CHECK(rs->positive_roots().size() == 6);
  CHECK(rs->positive_roots().back() == IVec{3, 2});  // highest root, alpha1 short
  CHECK(rs->simple_root_norms()[0] == 2);
  CHECK(rs->simple_root_norms()[1] == 6);
  CHECK(rs->weyl_order() == 12);
}

TEST_CASE("positive root counts across types") {
  CHECK(RootSystem::build("A3")->positive_roots().size() == 6);
  CHECK(RootSystem::build("B2")->positive_roots().size() == 4);
  CHECK(RootSystem::build("B3")->positive_roots().size() == 9);
  CHECK(RootSystem::build("C3")->positive_roots().size() == 9);
  CHECK(RootSystem::build("D4")->positive_roots().size() == 12);
  CHECK(RootSystem::build("F4")->positive_roots().size() == 24);
  CHECK(RootSystem::build("A1xA1")->positive_roots().size() == 2);
  CHECK(RootSystem::build("A2xB2")->positive_roots().size() == 7);
}

TEST_CASE("coroot evaluation") {
  auto rs = RootSystem::build("A2");
  Weight w1 = rs->fundamental_weight(0);
  CHECK(w1.coroot(0) == 1);
  CHECK(w1.coroot(1) == 0);
  Weight a1 = rs->simple_root(0);
  CHECK(a1.coroot(1) == -1);
}

TEST_CASE("bilinear form") {
  auto a2 = RootSystem::build("A2");
  CHECK(a2->bilinear(a2->simple_root(0), a2->simple_root(1)) == -1);
  CHECK(a2->bilinear(a2->fundamental_weight(0), a2->simple_root(1)) == 0);
  SUBCASE("symmetry on random weights") {
    Rng rng(13);
    for (int t = 0; t < 10; ++t) {
      Weight a = sample_lambda(rng, a2), b = sample_lambda(rng, a2);
      CHECK(a2->bilinear(a, b) == a2->bilinear(b, a));
    }
  }
  SUBCASE("mismatched root systems rejected") {
    auto b2 = RootSystem::build("B2");
    CHECK_THROWS_AS(a2->bilinear(a2->fundamental_weight(0), b2->fundamental_weight(0)),
                    std::invalid_argument);
  }
  SUBCASE("B2 form is integral") {
    auto b2 = RootSystem::build("B2");
    for (const auto& row : b2->form_matrix())
      for (const auto& q : row) CHECK(is_integer(q));
  }
  SUBCASE("G2 form is integral") {
    auto g2 = RootSystem::build("G2");
    for (const auto& row : g2->form_matrix())
      for (const auto& q : row) CHECK(is_integer(q));
  }
}

TEST_CASE("root coordinates") {
  auto a2 = RootSystem::build("A2");
  Weight a12 = a2->simple_root(0) + a2->simple_root(1);
  CHECK(a2->root_coords(a12) == QVec{1, 1});
  CHECK(a2->root_coords(a2->fundamental_weight(0)) == QVec{Rat(2, 3), Rat(1, 3)});
  auto a1 = RootSystem::build("A1");
  CHECK(a1->root_coords(a1->fundamental_weight(0)) == QVec{Rat(1, 2)});
  SUBCASE("roundtrip on random weights") {
    Rng rng(99);
    for (int t = 0; t < 12; ++t) {
      Weight l = sample_lambda(rng, a2);
      CHECK(a2->weight_from_root_coords(a2->root_coords(l)) == l);
    }
  }
  SUBCASE("lattice coordinates") {
    CHECK(a2->lattice_coords(a12) == IVec{1, 1});
    CHECK(!a2->lattice_coords(a2->fundamental_weight(0)).has_value());
  }
}

TEST_CASE("rho") {
  auto a2 = RootSystem::build("A2");
  CHECK(a2->rho(IndexSet{}).is_zero());
  CHECK(a2->rho(IndexSet::all(2)) ==
        a2->fundamental_weight(0) + a2->fundamental_weight(1));
  auto b2 = RootSystem::build("B2");
  CHECK(b2->rho(IndexSet::single(0)) == b2->fundamental_weight(0));
}

TEST_CASE("sum of positive roots is 2 rho") {
  for (const char* t : {"A2", "B2", "G2", "A3", "B3", "A1xA1"}) {
    auto rs = RootSystem::build(t);
    QVec sum(rs->rank(), Rat(0));
    for (const auto& b : rs->positive_roots()) {
      Weight beta = rs->weight_from_root_coords(b);
      for (int i = 0; i < rs->rank(); ++i) sum[i] += beta.coords()[i];
    }
    CHECK(qvec_cmp(sum, (rs->rho_all() * Rat(2)).coords()) == 0);
  }
}

TEST_CASE("crystallographic integrality") {
  for (const char* t : {"B2", "G2", "F4"}) {
    auto rs = RootSystem::build(t);
    for (const auto& b : rs->positive_roots()) {
      Weight beta = rs->weight_from_root_coords(b);
      for (int i = 0; i < rs->rank(); ++i) {
        Rat v = 2 * rs->bilinear(beta, rs->simple_root(i)) / rs->simple_root_norms()[i];
        v.canonicalize();
        CHECK(is_integer(v));
      }
    }
  }
}

TEST_CASE("weight parsing") {
  auto a2 = RootSystem::build("A2");
  Weight l = a2->parse_weight("1,-3/2");
  CHECK(l.coroot(0) == 1);
  CHECK(l.coroot(1) == Rat(-3, 2));
  CHECK(l.str() == "1,-3/2");
  CHECK_THROWS_AS(a2->parse_weight("1"), std::invalid_argument);
  CHECK_THROWS_AS(a2->parse_weight("1,2,3"), std::invalid_argument);
  CHECK_THROWS_AS(a2->parse_weight("1,x"), std::invalid_argument);
  CHECK_THROWS_AS(a2->parse_weight("1,1.5"), std::invalid_argument);
  CHECK_THROWS_AS(a2->parse_weight("1,1/0"), std::invalid_argument);
}

TEST_CASE("rational formatting") {
  CHECK(rat_str(Rat(3, 1)) == "3");
  CHECK(rat_str(Rat(-3, 2)) == "-3/2");
  CHECK(rat_str(Rat(2, 4)) == "1/2");
  CHECK(rat_parse("7/3").value() == Rat(7, 3));
  CHECK(!rat_parse("").has_value());
  CHECK(!rat_parse("1/").has_value());
  CHECK(!rat_parse("a").has_value());
}
