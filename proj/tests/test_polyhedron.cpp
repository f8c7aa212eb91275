// Copyright (c) 2026 hwt developers
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "polyhedron.hpp"
#include "testutil.hpp"
#include "verify.hpp"

using namespace hwt;

namespace {

VPolyhedron make_poly(std::vector<QVec> verts, std::vector<QVec> rays) {
  VPolyhedron p;
  p.vertices = std::move(verts);
  p.rays = std::move(rays);
  return p;
}

}  // namespace

TEST_CASE("dual description basics") {
  SUBCASE("quadrant") {
    auto d = dual_description({{1, 0}, {0, 1}}, 2);
    CHECK(d.lineality.empty());
    CHECK(d.rays == std::vector<QVec>{{0, 1}, {1, 0}});
  }
  SUBCASE("halfplane keeps a lineality direction") {
    auto d = dual_description({{1, 0}}, 2);
    CHECK(d.lineality == std::vector<QVec>{{0, 1}});
    CHECK(d.rays == std::vector<QVec>{{1, 0}});
  }
  SUBCASE("hyperplane is pure lineality") {
    auto d = dual_description({{1, 0}, {-1, 0}}, 2);
    CHECK(d.lineality == std::vector<QVec>{{0, 1}});
    CHECK(d.rays.empty());
  }
  SUBCASE("redundant constraints do not add rays") {
    auto d = dual_description({{1, 0}, {0, 1}, {1, 1}, {2, 1}}, 2);
    CHECK(d.rays.size() == 2);
  }
  SUBCASE("3d octant with a cut") {
    auto d = dual_description({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, -1}}, 3);
    CHECK(d.lineality.empty());
    CHECK(d.rays.size() == 5);  // cut corner of the octant
  }
}

TEST_CASE("v_to_h on simple shapes") {
  SUBCASE("half-line in rank 1") {
    auto p = make_poly({{Rat(3)}}, {{Rat(-1)}});
    auto h = v_to_h(p);
    REQUIRE(h.ineqs.size() == 1);
    CHECK(h.ineqs[0].normal == QVec{1});
    CHECK(h.ineqs[0].offset == 3);
  }
  SUBCASE("hexagon has six facets") {
    auto a2 = RootSystem::build("A2");
    auto m = HWModuleDescriptor::simple(a2->parse_weight("1,1"));
    auto h = v_to_h(reduce(hull_of(m)));
    CHECK(h.ineqs.size() == 6);
  }
  SUBCASE("Verma cone has two facets; the middle generator is interior") {
    auto a2 = RootSystem::build("A2");
    auto m = HWModuleDescriptor::verma(a2->parse_weight("1,1"));
    auto gen = hull_of(m);
    CHECK(gen.rays.size() == 3);
    auto h = v_to_h(gen);
    CHECK(h.ineqs.size() == 2);
    auto red = reduce(gen);
    CHECK(red.vertices.size() == 1);
    CHECK(red.rays.size() == 2);
  }
  SUBCASE("brute-force facet cross-check") {
    auto a2 = RootSystem::build("A2");
    for (const char* cls : {"simple", "verma", "pverma:1"}) {
      auto m = HWModuleDescriptor::parse(a2->parse_weight("1,1"), cls);
      auto red = reduce(hull_of(m));
      auto h = v_to_h(red);
      auto brute = testutil::brute_facets(red);
      REQUIRE(h.ineqs.size() == brute.size());
      for (size_t i = 0; i < brute.size(); ++i) {
        CHECK(qvec_cmp(h.ineqs[i].normal, brute[i].normal) == 0);
        CHECK(h.ineqs[i].offset == brute[i].offset);
      }
    }
  }
}

TEST_CASE("round trips") {
  auto a2 = RootSystem::build("A2");
  auto b2 = RootSystem::build("B2");
  auto check_roundtrip = [](const VPolyhedron& gen) {
    VPolyhedron red = reduce(gen);
    VPolyhedron back = h_to_v(v_to_h(red));
    CHECK(vpoly_equal(back, red));
  };
  check_roundtrip(hull_of(HWModuleDescriptor::simple(a2->parse_weight("1,1"))));
  check_roundtrip(hull_of(HWModuleDescriptor::verma(a2->parse_weight("1,-1/2"))));
  check_roundtrip(hull_of(
      HWModuleDescriptor::parabolic_verma(a2->parse_weight("1,1"), IndexSet::single(0))));
  check_roundtrip(hull_of(HWModuleDescriptor::verma(b2->parse_weight("3/2,1"))));
  SUBCASE("flat hull: equalities appear and round-trip") {
    auto aa = RootSystem::build("A1xA1");
    auto m = HWModuleDescriptor::parabolic_verma(aa->parse_weight("0,1/2"), IndexSet::single(0));
    auto red = reduce(hull_of(m));
    CHECK(red.vertices.size() == 1);
    CHECK(red.rays.size() == 1);
    auto h = v_to_h(red);
    CHECK(h.ineqs.size() == 3);  // equality pair + one genuine bound
    CHECK(vpoly_equal(h_to_v(h), red));
  }
  SUBCASE("single point") {
    auto m = HWModuleDescriptor::simple(a2->zero());
    auto red = reduce(hull_of(m));
    CHECK(red.vertices.size() == 1);
    CHECK(red.rays.empty());
    CHECK(vpoly_equal(h_to_v(v_to_h(red)), red));
  }
}

TEST_CASE("membership") {
  auto a2 = RootSystem::build("A2");
  auto hex = v_to_h(reduce(hull_of(HWModuleDescriptor::simple(a2->parse_weight("1,1")))));
  CHECK(contains(hex, a2->zero().coords()));
  CHECK(!contains(hex, a2->parse_weight("2,2").coords()));
  auto verma = v_to_h(reduce(hull_of(HWModuleDescriptor::verma(a2->parse_weight("1,1")))));
  Weight far = a2->parse_weight("1,1") -
               a2->simple_root(0) * Rat(7) - a2->simple_root(1) * Rat(3);
  CHECK(contains(verma, far.coords()));
  SUBCASE("agrees with brute-force membership") {
    auto red = reduce(hull_of(HWModuleDescriptor::parabolic_verma(a2->parse_weight("1,1"),
                                                                  IndexSet::single(0))));
    auto h = v_to_h(red);
    Rng rng(77);
    for (int t = 0; t < 12; ++t) {
      Weight x = sample_lambda(rng, a2);
      CHECK(contains(h, x.coords()) == testutil::brute_membership(red, x.coords()));
    }
  }
}

TEST_CASE("hull generators") {
  auto a2 = RootSystem::build("A2");
  SUBCASE("simple: bounded Weyl polytope") {
    auto p = hull_of(HWModuleDescriptor::simple(a2->parse_weight("1,1")));
    CHECK(p.vertices.size() == 6);
    CHECK(p.rays.empty());
  }
  SUBCASE("Verma: single vertex, all complement roots as generators") {
    auto p = hull_of(HWModuleDescriptor::verma(a2->parse_weight("1,1")));
    CHECK(p.vertices.size() == 1);
    CHECK(p.rays.size() == 3);
  }
  SUBCASE("parabolic Verma: two vertices, two rays") {
    auto p = hull_of(
        HWModuleDescriptor::parabolic_verma(a2->parse_weight("1,1"), IndexSet::single(0)));
    CHECK(p.vertices.size() == 2);
    CHECK(p.rays.size() == 2);
    auto red = reduce(p);
    CHECK(red.vertices.size() == 2);
    CHECK(red.rays.size() == 2);
  }
}

TEST_CASE("face enumeration") {
  auto a2 = RootSystem::build("A2");
  SUBCASE("hexagon face lattice") {
    auto m = HWModuleDescriptor::simple(a2->parse_weight("1,1"));
    auto fl = faces(m);
    CHECK(fl.size() == 13);
    int d0 = 0, d1 = 0, d2 = 0;
    size_t labels = 0;
    for (const auto& f : fl) {
      labels += f.labels.size();
      if (f.dimension == 0) ++d0;
      if (f.dimension == 1) ++d1;
      if (f.dimension == 2) ++d2;
    }
    CHECK(d0 == 6);
    CHECK(d1 == 6);
    CHECK(d2 == 1);
    CHECK(labels == 6 * 4);  // all (w, J) pairs land somewhere
    auto red = reduce(hull_of(m));
    CHECK(geometric_face_count(v_to_h(red), red) == 13);
  }
  SUBCASE("Verma cone face lattice") {
    auto m = HWModuleDescriptor::verma(a2->parse_weight("1,1/2"));
    auto fl = faces(m);
    CHECK(fl.size() == 4);  // vertex, two edges, improper
    auto red = reduce(hull_of(m));
    CHECK(geometric_face_count(v_to_h(red), red) == 4);
  }
  SUBCASE("faces of a flat hull") {
    auto aa = RootSystem::build("A1xA1");
    auto m = HWModuleDescriptor::parabolic_verma(aa->parse_weight("0,1/2"), IndexSet::single(0));
    auto fl = faces(m);
    auto red = reduce(hull_of(m));
    CHECK(fl.size() == geometric_face_count(v_to_h(red), red));
    CHECK(fl.size() == 2);  // the half-line and its vertex
  }
}

TEST_CASE("face pair equality") {
  auto a2 = RootSystem::build("A2");
  WeylGroup W = WeylGroup::enumerate(a2, IndexSet::all(2));
  auto m = HWModuleDescriptor::simple(a2->parse_weight("1,1"));
  CHECK(face_pairs_equal(m, W.identity(), IndexSet::single(0), W.identity(),
                         IndexSet::single(0)));
  CHECK(!face_pairs_equal(m, W.identity(), IndexSet{}, W.elements()[1], IndexSet{}));
  SUBCASE("s1 fixes omega_2, so the vertex faces coincide") {
    auto m2 = HWModuleDescriptor::simple(a2->parse_weight("0,1"));
    const WeylElement* s1 = &W.elements()[1];
    REQUIRE(s1->word == std::vector<int>{0});
    CHECK(face_pairs_equal(m2, W.identity(), IndexSet{}, *s1, IndexSet{}));
  }
}

TEST_CASE("extremal rays at a vertex") {
  auto a2 = RootSystem::build("A2");
  SUBCASE("Verma at simply-regular lambda") {
    Weight l = a2->parse_weight("1,1/2");
    auto rays = extremal_rays_at_vertex(HWModuleDescriptor::verma(l), l);
    QVec ma1 = (-a2->simple_root(0)).coords(), ma2 = (-a2->simple_root(1)).coords();
    canonicalize_ray(ma1);
    canonicalize_ray(ma2);
    std::vector<QVec> expect = {ma1, ma2};
    std::sort(expect.begin(), expect.end(), QVecLess{});
    CHECK(rays == expect);
  }
  SUBCASE("bounded polytope has none") {
    Weight l = a2->parse_weight("1,1");
    CHECK(extremal_rays_at_vertex(HWModuleDescriptor::simple(l), l).empty());
  }
  SUBCASE("parabolic Verma keeps only the complement direction") {
    Weight l = a2->parse_weight("1,1");
    auto rays = extremal_rays_at_vertex(
        HWModuleDescriptor::parabolic_verma(l, IndexSet::single(0)), l);
    QVec ma2 = (-a2->simple_root(1)).coords();
    canonicalize_ray(ma2);
    CHECK(rays == std::vector<QVec>{ma2});
  }
  SUBCASE("non-vertex is rejected") {
    Weight l = a2->parse_weight("1,1");
    CHECK_THROWS_AS(extremal_rays_at_vertex(HWModuleDescriptor::simple(l), a2->zero()),
                    std::invalid_argument);
  }
}

TEST_CASE("Weyl stabilizer of the hull") {
  auto a2 = RootSystem::build("A2");
  SUBCASE("finite simple module: all of W") {
    auto st = weyl_stabilizer_is(HWModuleDescriptor::simple(a2->parse_weight("2,1")));
    CHECK(st.parabolic);
    CHECK(st.J == IndexSet::all(2));
    CHECK(st.order == 6);
  }
  SUBCASE("Verma at simply-regular lambda: trivial") {
    auto st = weyl_stabilizer_is(HWModuleDescriptor::verma(a2->parse_weight("1,1/2")));
    CHECK(st.parabolic);
    CHECK(st.J.empty());
    CHECK(st.order == 1);
  }
  SUBCASE("B2 parabolic Verma") {
    auto b2 = RootSystem::build("B2");
    auto st = weyl_stabilizer_is(
        HWModuleDescriptor::parabolic_verma(b2->parse_weight("1,1"), IndexSet::single(1)));
    CHECK(st.parabolic);
    CHECK(st.J == IndexSet::single(1));
    CHECK(st.order == 2);
  }
}

TEST_CASE("sampling soundness and vertex tightness") {
  auto b2 = RootSystem::build("B2");
  auto m = HWModuleDescriptor::parabolic_verma(b2->parse_weight("1,1/2"), IndexSet::single(0));
  auto red = reduce(hull_of(m));
  auto h = v_to_h(red);
  auto t = weights_levi_shift(m, 4);
  for (const auto& k : t.support()) {
    Weight mu = m.lambda() - b2->weight_from_root_coords(k);
    CHECK(contains(h, mu.coords()));
  }
  int needed = 0;
  for (const auto& v : red.vertices) {
    auto k = b2->lattice_coords(m.lambda() - Weight(b2, v));
    REQUIRE(k.has_value());
    needed = std::max(needed, height(*k));
  }
  auto deep = weights_levi_shift(m, needed);
  for (const auto& v : red.vertices) {
    auto k = b2->lattice_coords(m.lambda() - Weight(b2, v));
    CHECK(deep.contains(*k));
  }
}

TEST_CASE("OFF export") {
  auto a2 = RootSystem::build("A2");
  SUBCASE("bounded rank-2 hull") {
    auto off = hull_off(HWModuleDescriptor::simple(a2->parse_weight("1,1")), Rat(5));
    CHECK(off.substr(0, 4) == "OFF\n");
    CHECK(off.find("6 1 0") != std::string::npos);  // hexagon, one polygon
  }
  SUBCASE("clipped Verma cone in rank 3") {
    auto a3 = RootSystem::build("A3");
    auto off = hull_off(HWModuleDescriptor::verma(a3->parse_weight("1,1,1")), Rat(3));
    CHECK(off.substr(0, 4) == "OFF\n");
  }
  SUBCASE("rank 1 refused") {
    auto a1 = RootSystem::build("A1");
    CHECK_THROWS_AS(hull_off(HWModuleDescriptor::verma(a1->parse_weight("1")), Rat(2)),
                    std::invalid_argument);
  }
}
