// Copyright (c) 2026 hwt developers
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "hwmodule.hpp"
#include "rootsys.hpp"
#include "weyl.hpp"

namespace hwt {

inline constexpr int kMaxPolyhedronDim = 8;
inline constexpr long kDefaultGeneratorCap = 4096;

// conv(vertices) + cone(rays), all in fundamental coordinates. Rays are kept
// as primitive integer directions. Generator lists may be redundant; reduce()
// produces the minimal canonical form.
struct VPolyhedron {
  std::vector<QVec> vertices;
  std::vector<QVec> rays;
};

// Intersection of half-spaces <normal, x> <= offset (coordinate dot product
// on fundamental coordinates). Flat polyhedra carry equalities as pairs of
// opposite inequalities.
struct HPolyhedron {
  struct Ineq {
    QVec normal;
    Rat offset;
  };
  std::vector<Ineq> ineqs;
  int dim = 0;
};

// Minimal description of the cone {y : <c, y> >= 0 for all c in constraints}:
// a basis of its lineality space plus its extremal rays (primitive,
// deterministically ordered). The workhorse behind both conversion
// directions; exact double description with a final rank-certified
// minimality pass.
struct ConeDesc {
  std::vector<QVec> lineality;
  std::vector<QVec> rays;
};
ConeDesc dual_description(const std::vector<QVec>& constraints, int dim);

// Facet enumeration. Requires at least one vertex; round-trips with h_to_v
// after canonical reduction.
HPolyhedron v_to_h(const VPolyhedron& p);

// Vertex/ray enumeration of a pointed H-polyhedron; output is reduced and
// canonically sorted. An empty vertex list means the polyhedron is empty.
VPolyhedron h_to_v(const HPolyhedron& h);

bool contains(const HPolyhedron& h, const QVec& x);

// Minimal canonical form: actual vertices plus extremal rays of the
// recession cone, both sorted.
VPolyhedron reduce(const VPolyhedron& p);

bool vpoly_equal(const VPolyhedron& reduced_a, const VPolyhedron& reduced_b);
// Canonical serialization of a reduced polyhedron (dedup key).
std::string vpoly_key(const VPolyhedron& reduced);

VPolyhedron transform(const VPolyhedron& p, const WeylElement& w);

// conv wt V as generators: vertices = W_{J(V)}(lambda), rays = -(Phi+ minus
// Phi+_{J(V)}). The generator presentation; not reduced.
VPolyhedron hull_of(const HWModuleDescriptor& m, long cap = kDefaultEnumCap);

// Reduced realization of the face labeled (w, J): w applied to the hull of
// the J-restricted data (vertices W_{J cap J(V)}(lambda), rays
// -(Phi+_J minus Phi+_{J cap J(V)})).
VPolyhedron face_realization(const HWModuleDescriptor& m, const WeylElement& w, IndexSet J,
                             long cap = kDefaultEnumCap);

struct FaceDescriptor {
  std::vector<std::pair<std::string, IndexSet>> labels;  // (word, J), all labels of this face
  VPolyhedron realization;                               // reduced canonical
  int dimension = 0;
};

// All faces of conv wt V via the (w, J) parametrization over
// W_{J(V)} x subsets(I), deduplicated by geometric equality. Every
// deduplicated realization is certified to be an actual face of the hull
// (supporting functional from its tight facet set); failure throws
// std::logic_error. Includes the improper face, excludes the empty face.
std::vector<FaceDescriptor> faces(const HWModuleDescriptor& m, long cap = kDefaultEnumCap);

bool face_pairs_equal(const HWModuleDescriptor& m, const WeylElement& w, IndexSet J,
                      const WeylElement& w2, IndexSet J2, long cap = kDefaultEnumCap);

// Number of nonempty faces of the polyhedron (improper face included),
// enumerated purely geometrically from the H-representation via
// facet-incidence closure. Cross-check target for faces().
size_t geometric_face_count(const HPolyhedron& h, const VPolyhedron& reduced);

// Unbounded edges of the hull incident to the vertex v, as primitive
// directions, sorted. Rejects v that is not a vertex.
std::vector<QVec> extremal_rays_at_vertex(const HWModuleDescriptor& m, const Weight& v,
                                          long cap = kDefaultEnumCap);

struct StabilizerResult {
  bool parabolic = false;  // stabilizer equals W_J for J below
  IndexSet J;              // the parabolic, or the largest J with W_J inside
  size_t order = 0;        // order of the full setwise stabilizer
  std::vector<size_t> elements;  // indices into the full Weyl enumeration
};

// Full setwise stabilizer in W of the hull (vertex set and ray set).
StabilizerResult weyl_stabilizer_is(const HWModuleDescriptor& m, long cap = kDefaultEnumCap);

// OFF dump of the hull intersected with the coordinate box
// |x_i - lambda_i| <= box_radius; rank 2 and 3 only.
std::string hull_off(const HWModuleDescriptor& m, const Rat& box_radius,
                     long cap = kDefaultEnumCap);

}  // namespace hwt
