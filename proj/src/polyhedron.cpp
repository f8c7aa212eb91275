// Copyright (c) 2026 hwt developers
// SPDX-License-Identifier: Apache-2.0
#include "polyhedron.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace hwt {

namespace {

// Small dynamic bitset for incidence bookkeeping.
struct BitMask {
  std::vector<uint64_t> w;

  explicit BitMask(size_t bits = 0) : w((bits + 63) / 64, 0) {}
  void set(size_t i) { w[i / 64] |= uint64_t(1) << (i % 64); }
  bool get(size_t i) const { return (w[i / 64] >> (i % 64)) & 1; }
  BitMask operator&(const BitMask& o) const {
    BitMask r = *this;
    for (size_t i = 0; i < w.size(); ++i) r.w[i] &= o.w[i];
    return r;
  }
  bool operator==(const BitMask& o) const { return w == o.w; }
  bool operator<(const BitMask& o) const { return w < o.w; }
  // this is a superset of o
  bool contains(const BitMask& o) const {
    for (size_t i = 0; i < w.size(); ++i)
      if ((o.w[i] & ~w[i]) != 0) return false;
    return true;
  }
  bool any() const {
    for (auto x : w)
      if (x) return true;
    return false;
  }
};

QVec canonical(QVec v) {
  canonicalize_ray(v);
  return v;
}

}  // namespace

ConeDesc dual_description(const std::vector<QVec>& constraints_in, int dim) {
  // canonicalize and dedup constraints; drop zero rows
  std::vector<QVec> cons;
  {
    std::set<QVec, QVecLess> seen;
    for (const auto& c : constraints_in) {
      bool zero = true;
      for (const auto& x : c)
        if (x != 0) zero = false;
      if (zero) continue;
      QVec cc = canonical(c);
      if (seen.insert(cc).second) cons.push_back(std::move(cc));
    }
  }
  size_t m = cons.size();

  struct RayRec {
    QVec v;
    BitMask zero;  // processed constraints this ray is tight on
  };

  // start from the whole space
  std::vector<QVec> lin(dim, QVec(dim, Rat(0)));
  for (int i = 0; i < dim; ++i) lin[i][i] = 1;
  std::vector<RayRec> rays;

  for (size_t k = 0; k < m; ++k) {
    const QVec& c = cons[k];

    // lineality pivot: one basis vector leaves the lineality and becomes a ray
    int pivot = -1;
    for (size_t j = 0; j < lin.size(); ++j)
      if (dot(c, lin[j]) != 0) {
        pivot = static_cast<int>(j);
        break;
      }
    if (pivot >= 0) {
      QVec lp = lin[pivot];
      Rat sp = dot(c, lp);
      if (sp < 0) {
        for (auto& x : lp) x = -x;
        sp = -sp;
      }
      std::vector<QVec> nlin;
      for (size_t j = 0; j < lin.size(); ++j) {
        if (static_cast<int>(j) == pivot) continue;
        Rat s = dot(c, lin[j]);
        QVec l = lin[j];
        if (s != 0)
          for (int t = 0; t < dim; ++t) l[t] -= s / sp * lp[t];
        canonicalize_line(l);
        nlin.push_back(std::move(l));
      }
      lin = std::move(nlin);
      for (auto& r : rays) {
        Rat s = dot(c, r.v);
        if (s != 0) {
          for (int t = 0; t < dim; ++t) r.v[t] -= s / sp * lp[t];
          canonicalize_ray(r.v);
        }
        r.zero.set(k);  // projected onto the hyperplane of c
      }
      RayRec nr{canonical(lp), BitMask(m)};
      for (size_t j = 0; j < k; ++j) nr.zero.set(j);  // lineality was tight on all so far
      rays.push_back(std::move(nr));
      continue;
    }

    // plain halfspace insertion
    std::vector<Rat> sval(rays.size());
    bool any_neg = false;
    for (size_t i = 0; i < rays.size(); ++i) {
      sval[i] = dot(c, rays[i].v);
      if (sval[i] < 0) any_neg = true;
    }
    if (!any_neg) {
      for (size_t i = 0; i < rays.size(); ++i)
        if (sval[i] == 0) rays[i].zero.set(k);
      continue;
    }

    // adjacency: no third ray tight on everything both are tight on
    auto adjacent = [&](size_t a, size_t b) {
      BitMask z = rays[a].zero & rays[b].zero;
      for (size_t i = 0; i < rays.size(); ++i) {
        if (i == a || i == b) continue;
        if (rays[i].zero.contains(z)) return false;
      }
      return true;
    };

    std::vector<RayRec> next;
    for (size_t i = 0; i < rays.size(); ++i) {
      if (sval[i] > 0) next.push_back(rays[i]);
      if (sval[i] == 0) {
        next.push_back(rays[i]);
        next.back().zero.set(k);
      }
    }
    for (size_t a = 0; a < rays.size(); ++a) {
      if (sval[a] <= 0) continue;
      for (size_t b = 0; b < rays.size(); ++b) {
        if (sval[b] >= 0 || !adjacent(a, b)) continue;
        QVec w(dim);
        for (int t = 0; t < dim; ++t) w[t] = sval[a] * rays[b].v[t] - sval[b] * rays[a].v[t];
        canonicalize_ray(w);
        RayRec nr{std::move(w), rays[a].zero & rays[b].zero};
        nr.zero.set(k);
        next.push_back(std::move(nr));
      }
    }
    rays = std::move(next);
  }

  ConeDesc out;

  // canonical lineality basis: reduced row echelon, primitive rows
  {
    std::vector<QVec> basis = lin;
    size_t r = 0;
    for (int c = 0; c < dim && r < basis.size(); ++c) {
      size_t p = r;
      while (p < basis.size() && basis[p][c] == 0) ++p;
      if (p == basis.size()) continue;
      std::swap(basis[p], basis[r]);
      for (size_t i = 0; i < basis.size(); ++i) {
        if (i == r || basis[i][c] == 0) continue;
        Rat f = basis[i][c] / basis[r][c];
        for (int t = 0; t < dim; ++t) basis[i][t] -= f * basis[r][t];
      }
      ++r;
    }
    basis.resize(r);
    for (auto& l : basis) canonicalize_line(l);
    std::sort(basis.begin(), basis.end(), QVecLess{});
    out.lineality = std::move(basis);
  }

  // minimality pass: a surviving ray must be tight on constraints of rank
  // exactly dim - |lineality| - 1
  int need = dim - static_cast<int>(out.lineality.size()) - 1;
  std::set<QVec, QVecLess> emitted;
  for (const auto& r : rays) {
    std::vector<QVec> tight;
    for (size_t kk = 0; kk < m; ++kk)
      if (dot(cons[kk], r.v) == 0) tight.push_back(cons[kk]);
    if (rank_of(tight) != need) continue;
    if (emitted.insert(r.v).second) out.rays.push_back(r.v);
  }
  std::sort(out.rays.begin(), out.rays.end(), QVecLess{});
  return out;
}

HPolyhedron v_to_h(const VPolyhedron& p) {
  if (p.vertices.empty()) throw std::invalid_argument("v_to_h: polyhedron has no vertices");
  int n = static_cast<int>(p.vertices[0].size());
  if (n > kMaxPolyhedronDim)
    throw CapExceededError("ambient dimension " + std::to_string(n) + " exceeds the cap of " +
                           std::to_string(kMaxPolyhedronDim));
  if (static_cast<long>(p.vertices.size() + p.rays.size()) > kDefaultGeneratorCap)
    throw CapExceededError("generator count " +
                           std::to_string(p.vertices.size() + p.rays.size()) +
                           " exceeds the cap of " + std::to_string(kDefaultGeneratorCap));

  std::vector<QVec> cons;
  for (const auto& v : p.vertices) {
    QVec c(n + 1);
    c[0] = 1;
    for (int i = 0; i < n; ++i) c[i + 1] = v[i];
    cons.push_back(std::move(c));
  }
  for (const auto& r : p.rays) {
    QVec c(n + 1, Rat(0));
    for (int i = 0; i < n; ++i) c[i + 1] = r[i];
    cons.push_back(std::move(c));
  }

  ConeDesc polar = dual_description(cons, n + 1);
  HPolyhedron h;
  h.dim = n;
  auto push = [&](const QVec& a, bool flip) {
    // polar vector (a0, a) means a0 + <a, x> >= 0 on P
    QVec normal(n);
    bool allzero = true;
    for (int i = 0; i < n; ++i) {
      normal[i] = flip ? a[i + 1] : -a[i + 1];
      if (normal[i] != 0) allzero = false;
    }
    if (allzero) return;  // trivial inequality
    HPolyhedron::Ineq q{std::move(normal), flip ? -a[0] : a[0]};
    // canonicalize jointly
    QVec joint = q.normal;
    joint.push_back(q.offset);
    canonicalize_ray(joint);
    q.offset = joint.back();
    joint.pop_back();
    q.normal = std::move(joint);
    h.ineqs.push_back(std::move(q));
  };
  for (const auto& a : polar.rays) push(a, false);
  for (const auto& l : polar.lineality) {
    push(l, false);
    push(l, true);
  }
  std::sort(h.ineqs.begin(), h.ineqs.end(), [](const auto& x, const auto& y) {
    int c = qvec_cmp(x.normal, y.normal);
    if (c != 0) return c < 0;
    return cmp(x.offset, y.offset) < 0;
  });
  return h;
}

VPolyhedron h_to_v(const HPolyhedron& h) {
  int n = h.dim;
  std::vector<QVec> cons;
  {
    QVec c0(n + 1, Rat(0));
    c0[0] = 1;  // x0 >= 0
    cons.push_back(std::move(c0));
  }
  for (const auto& q : h.ineqs) {
    QVec c(n + 1);
    c[0] = q.offset;
    for (int i = 0; i < n; ++i) c[i + 1] = -q.normal[i];
    cons.push_back(std::move(c));
  }
  ConeDesc cone = dual_description(cons, n + 1);
  if (!cone.lineality.empty())
    throw std::invalid_argument("h_to_v: polyhedron is not pointed");
  VPolyhedron p;
  for (const auto& r : cone.rays) {
    if (r[0] != 0) {
      QVec v(n);
      for (int i = 0; i < n; ++i) {
        v[i] = r[i + 1] / r[0];
        v[i].canonicalize();
      }
      p.vertices.push_back(std::move(v));
    } else {
      QVec v(r.begin() + 1, r.end());
      canonicalize_ray(v);
      p.rays.push_back(std::move(v));
    }
  }
  std::sort(p.vertices.begin(), p.vertices.end(), QVecLess{});
  std::sort(p.rays.begin(), p.rays.end(), QVecLess{});
  return p;
}

bool contains(const HPolyhedron& h, const QVec& x) {
  for (const auto& q : h.ineqs)
    if (dot(q.normal, x) > q.offset) return false;
  return true;
}

VPolyhedron reduce(const VPolyhedron& p) {
  VPolyhedron in;
  {
    std::set<QVec, QVecLess> vs(p.vertices.begin(), p.vertices.end());
    in.vertices.assign(vs.begin(), vs.end());
    std::set<QVec, QVecLess> rs;
    for (const auto& r : p.rays) rs.insert(canonical(r));
    in.rays.assign(rs.begin(), rs.end());
  }
  int n = static_cast<int>(in.vertices.at(0).size());
  HPolyhedron h = v_to_h(in);

  VPolyhedron out;
  for (const auto& v : in.vertices) {
    std::vector<QVec> tight;
    for (const auto& q : h.ineqs)
      if (dot(q.normal, v) == q.offset) tight.push_back(q.normal);
    if (rank_of(tight) == n) out.vertices.push_back(v);
  }
  for (const auto& r : in.rays) {
    bool recession = true;
    std::vector<QVec> tight;
    for (const auto& q : h.ineqs) {
      Rat s = dot(q.normal, r);
      if (s > 0) {
        recession = false;
        break;
      }
      if (s == 0) tight.push_back(q.normal);
    }
    if (recession && rank_of(tight) == n - 1) out.rays.push_back(r);
  }
  return out;
}

bool vpoly_equal(const VPolyhedron& a, const VPolyhedron& b) {
  return a.vertices == b.vertices && a.rays == b.rays;
}

std::string vpoly_key(const VPolyhedron& p) {
  std::string s;
  for (const auto& v : p.vertices) s += qvec_str(v) + ";";
  s += "#";
  for (const auto& r : p.rays) s += qvec_str(r) + ";";
  return s;
}

VPolyhedron transform(const VPolyhedron& p, const WeylElement& w) {
  VPolyhedron out;
  for (const auto& v : p.vertices) out.vertices.push_back(w.apply(v));
  for (const auto& r : p.rays) out.rays.push_back(canonical(w.apply(r)));
  std::sort(out.vertices.begin(), out.vertices.end(), QVecLess{});
  std::sort(out.rays.begin(), out.rays.end(), QVecLess{});
  return out;
}

namespace {

// Generators of the part of the hull coming from the J-restricted data.
VPolyhedron restricted_generators(const HWModuleDescriptor& m, IndexSet J, long cap) {
  const auto& rs = m.lambda().root_system();
  int n = rs->rank();
  IndexSet K = J.intersect(m.integrability());
  VPolyhedron p;
  for (const auto& v : orbit(rs, K, m.lambda(), cap)) p.vertices.push_back(v.coords());
  auto in_k = rs->positive_roots_supported_on(K);
  std::set<IVec> kset(in_k.begin(), in_k.end());
  for (const auto& b : rs->positive_roots_supported_on(J)) {
    if (kset.count(b)) continue;
    QVec fund(n, Rat(0));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) fund[i] -= Rat(rs->cartan()[i][j]) * Rat(b[j]);
    p.rays.push_back(canonical(fund));
  }
  std::sort(p.vertices.begin(), p.vertices.end(), QVecLess{});
  std::sort(p.rays.begin(), p.rays.end(), QVecLess{});
  return p;
}

struct Incidence {
  // facet -> generator bitmask; generators are vertices then rays of the
  // reduced polyhedron
  std::vector<BitMask> facet_gens;
  size_t nv = 0, nr = 0;

  Incidence(const HPolyhedron& h, const VPolyhedron& p) {
    nv = p.vertices.size();
    nr = p.rays.size();
    for (const auto& q : h.ineqs) {
      BitMask mask(nv + nr);
      for (size_t i = 0; i < nv; ++i)
        if (dot(q.normal, p.vertices[i]) == q.offset) mask.set(i);
      for (size_t i = 0; i < nr; ++i)
        if (dot(q.normal, p.rays[i]) == 0) mask.set(nv + i);
      facet_gens.push_back(std::move(mask));
    }
  }

  bool has_vertex(const BitMask& gens) const {
    for (size_t i = 0; i < nv; ++i)
      if (gens.get(i)) return true;
    return false;
  }
};

}  // namespace

VPolyhedron hull_of(const HWModuleDescriptor& m, long cap) {
  return restricted_generators(m, IndexSet::all(m.lambda().rank()), cap);
}

VPolyhedron face_realization(const HWModuleDescriptor& m, const WeylElement& w, IndexSet J,
                             long cap) {
  return transform(reduce(restricted_generators(m, J, cap)), w);
}

std::vector<FaceDescriptor> faces(const HWModuleDescriptor& m, long cap) {
  const auto& rs = m.lambda().root_system();
  int n = rs->rank();
  if (n > kMaxPolyhedronDim)
    throw CapExceededError("face enumeration: rank " + std::to_string(n) + " exceeds cap " +
                           std::to_string(kMaxPolyhedronDim));
  WeylGroup W = WeylGroup::enumerate(rs, m.integrability(), cap);
  VPolyhedron P = reduce(hull_of(m, cap));
  HPolyhedron H = v_to_h(P);
  Incidence inc(H, P);

  std::map<std::string, FaceDescriptor> facemap;
  for (IndexSet J : IndexSet::all(n).subsets()) {
    VPolyhedron base = reduce(restricted_generators(m, J, cap));
    for (const auto& w : W.elements()) {
      VPolyhedron F = transform(base, w);
      std::string key = vpoly_key(F);
      auto it = facemap.find(key);
      if (it == facemap.end()) {
        FaceDescriptor fd;
        fd.realization = std::move(F);
        it = facemap.emplace(key, std::move(fd)).first;
      }
      it->second.labels.emplace_back(w.word_str(), J);
    }
  }

  // certify each distinct realization as a face of P and compute dimensions
  std::map<QVec, size_t, QVecLess> vidx, ridx;
  for (size_t i = 0; i < P.vertices.size(); ++i) vidx.emplace(P.vertices[i], i);
  for (size_t i = 0; i < P.rays.size(); ++i) ridx.emplace(P.rays[i], inc.nv + i);

  std::vector<FaceDescriptor> out;
  for (auto& [key, fd] : facemap) {
    BitMask gens(inc.nv + inc.nr);
    for (const auto& v : fd.realization.vertices) {
      auto it = vidx.find(v);
      if (it == vidx.end()) throw std::logic_error("face certificate: vertex not a hull vertex");
      gens.set(it->second);
    }
    for (const auto& r : fd.realization.rays) {
      auto it = ridx.find(r);
      if (it == ridx.end()) throw std::logic_error("face certificate: ray not a hull ray");
      gens.set(it->second);
    }
    // tight facet set; the supporting functional is the sum of their normals
    BitMask span(inc.nv + inc.nr);
    for (size_t i = 0; i < inc.nv + inc.nr; ++i) span.set(i);
    for (const auto& fmask : inc.facet_gens)
      if (fmask.contains(gens)) span = span & fmask;
    if (!(span == gens))
      throw std::logic_error("face certificate: realization is not an intersection of facets");

    const auto& R = fd.realization;
    std::vector<QVec> dirs;
    for (size_t i = 1; i < R.vertices.size(); ++i) {
      QVec d = R.vertices[i];
      for (int t = 0; t < n; ++t) d[t] -= R.vertices[0][t];
      dirs.push_back(std::move(d));
    }
    for (const auto& r : R.rays) dirs.push_back(r);
    fd.dimension = rank_of(dirs);

    std::sort(fd.labels.begin(), fd.labels.end(), [](const auto& a, const auto& b) {
      if (a.second.bits != b.second.bits) return a.second.bits < b.second.bits;
      if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
      return a.first < b.first;
    });
    out.push_back(std::move(fd));
  }
  std::sort(out.begin(), out.end(), [](const FaceDescriptor& a, const FaceDescriptor& b) {
    if (a.dimension != b.dimension) return a.dimension < b.dimension;
    return vpoly_key(a.realization) < vpoly_key(b.realization);
  });
  return out;
}

bool face_pairs_equal(const HWModuleDescriptor& m, const WeylElement& w, IndexSet J,
                      const WeylElement& w2, IndexSet J2, long cap) {
  return vpoly_equal(face_realization(m, w, J, cap), face_realization(m, w2, J2, cap));
}

size_t geometric_face_count(const HPolyhedron& h, const VPolyhedron& p) {
  Incidence inc(h, p);
  size_t ng = inc.nv + inc.nr;
  BitMask allg(ng);
  for (size_t i = 0; i < ng; ++i) allg.set(i);

  std::set<BitMask> seen;
  std::vector<BitMask> queue;
  seen.insert(allg);
  queue.push_back(allg);
  while (!queue.empty()) {
    BitMask f = queue.back();
    queue.pop_back();
    for (const auto& fmask : inc.facet_gens) {
      BitMask g = f & fmask;
      if (!inc.has_vertex(g)) continue;  // empty face
      if (seen.insert(g).second) queue.push_back(g);
    }
  }
  return seen.size();
}

std::vector<QVec> extremal_rays_at_vertex(const HWModuleDescriptor& m, const Weight& v,
                                          long cap) {
  const auto& rs = m.lambda().root_system();
  int n = rs->rank();
  VPolyhedron P = reduce(hull_of(m, cap));
  bool is_vertex = false;
  for (const auto& u : P.vertices)
    if (qvec_cmp(u, v.coords()) == 0) is_vertex = true;
  if (!is_vertex)
    throw std::invalid_argument("extremal_rays_at_vertex: " + v.str() +
                                " is not a vertex of the hull");
  HPolyhedron H = v_to_h(P);

  std::vector<QVec> tangent;
  for (const auto& q : H.ineqs) {
    if (dot(q.normal, v.coords()) != q.offset) continue;
    QVec c(n);
    for (int i = 0; i < n; ++i) c[i] = -q.normal[i];
    tangent.push_back(std::move(c));
  }
  ConeDesc cone = dual_description(tangent, n);
  if (!cone.lineality.empty())
    throw std::logic_error("tangent cone at a vertex has lineality");

  std::vector<QVec> out;
  for (const auto& r : cone.rays) {
    bool recession = true;
    for (const auto& q : H.ineqs)
      if (dot(q.normal, r) > 0) recession = false;
    if (recession) out.push_back(r);
  }
  std::sort(out.begin(), out.end(), QVecLess{});
  return out;
}

StabilizerResult weyl_stabilizer_is(const HWModuleDescriptor& m, long cap) {
  const auto& rs = m.lambda().root_system();
  WeylGroup W = WeylGroup::enumerate(rs, IndexSet::all(rs->rank()), cap);
  VPolyhedron P = reduce(hull_of(m, cap));

  StabilizerResult res;
  res.elements = setwise_stabilizer(W, P.vertices, P.rays);
  res.order = res.elements.size();

  std::set<size_t> in_stab(res.elements.begin(), res.elements.end());
  for (int i = 0; i < rs->rank(); ++i) {
    int idx = W.find(simple_reflection_matrix(*rs, i));
    if (idx >= 0 && in_stab.count(static_cast<size_t>(idx))) res.J.add(i);
  }
  res.parabolic = WeylGroup::enumerate(rs, res.J, cap).order() == res.order;
  return res;
}

namespace {

// Decimal rendering of a rational with fixed precision (exact long division).
std::string decimal_str(const Rat& q, int digits) {
  mpz_class num = q.get_num(), den = q.get_den();
  bool neg = num < 0;
  if (neg) num = -num;
  mpz_class ip = num / den, rem = num % den;
  std::string s = (neg && (ip != 0 || rem != 0) ? "-" : "") + ip.get_str();
  if (digits > 0) {
    s += ".";
    for (int i = 0; i < digits; ++i) {
      rem *= 10;
      mpz_class d = rem / den;
      rem %= den;
      s += d.get_str();
    }
  }
  return s;
}

// Convex-position angular order around the centroid, projected onto two
// coordinate axes; exact sign comparisons only.
std::vector<size_t> polygon_order(const std::vector<QVec>& pts, int ax, int ay) {
  size_t k = pts.size();
  QVec cx(2, Rat(0));
  for (const auto& p : pts) {
    cx[0] += p[ax];
    cx[1] += p[ay];
  }
  cx[0] /= Rat(static_cast<long>(k));
  cx[1] /= Rat(static_cast<long>(k));
  auto half = [&](size_t i) {
    Rat dx = pts[i][ax] - cx[0], dy = pts[i][ay] - cx[1];
    return (dy > 0 || (dy == 0 && dx < 0)) ? 0 : 1;  // upper half first
  };
  std::vector<size_t> ord(k);
  for (size_t i = 0; i < k; ++i) ord[i] = i;
  std::sort(ord.begin(), ord.end(), [&](size_t i, size_t j) {
    int hi = half(i), hj = half(j);
    if (hi != hj) return hi < hj;
    Rat dxi = pts[i][ax] - cx[0], dyi = pts[i][ay] - cx[1];
    Rat dxj = pts[j][ax] - cx[0], dyj = pts[j][ay] - cx[1];
    Rat cross = dxi * dyj - dxj * dyi;
    if (cross != 0) return cross > 0;
    return i < j;
  });
  return ord;
}

}  // namespace

std::string hull_off(const HWModuleDescriptor& m, const Rat& box_radius, long cap) {
  const auto& rs = m.lambda().root_system();
  int n = rs->rank();
  if (n != 2 && n != 3)
    throw std::invalid_argument("OFF export supports rank 2 and 3 only (got rank " +
                                std::to_string(n) + ")");
  if (box_radius <= 0) throw std::invalid_argument("OFF export: box radius must be positive");

  HPolyhedron H = v_to_h(reduce(hull_of(m, cap)));
  for (int i = 0; i < n; ++i) {
    QVec e(n, Rat(0));
    e[i] = 1;
    H.ineqs.push_back({e, m.lambda().coords()[i] + box_radius});
    QVec f(n, Rat(0));
    f[i] = -1;
    H.ineqs.push_back({f, box_radius - m.lambda().coords()[i]});
  }
  VPolyhedron slice = h_to_v(H);
  const auto& vs = slice.vertices;

  std::string off = "OFF\n";
  auto coord_line = [&](const QVec& v) {
    std::string s;
    for (int i = 0; i < n; ++i) s += decimal_str(v[i], 9) + " ";
    if (n == 2) s += "0.000000000";
    while (!s.empty() && s.back() == ' ') s.pop_back();
    return s + "\n";
  };

  if (vs.size() < 3) {
    off += std::to_string(vs.size()) + " 0 0\n";
    for (const auto& v : vs) off += coord_line(v);
    return off;
  }

  std::vector<std::vector<size_t>> facets;
  if (n == 2) {
    facets.push_back(polygon_order(vs, 0, 1));
  } else {
    HPolyhedron HS = v_to_h(slice);
    for (const auto& q : HS.ineqs) {
      std::vector<size_t> fv;
      std::vector<QVec> fpts;
      for (size_t i = 0; i < vs.size(); ++i)
        if (dot(q.normal, vs[i]) == q.offset) {
          fv.push_back(i);
          fpts.push_back(vs[i]);
        }
      if (fv.size() < 3) continue;
      // drop the axis where the facet normal is largest in absolute value
      int drop = 0;
      Rat best = abs(q.normal[0]);
      for (int i = 1; i < n; ++i)
        if (abs(q.normal[i]) > best) {
          best = abs(q.normal[i]);
          drop = i;
        }
      int ax = drop == 0 ? 1 : 0;
      int ay = drop == 2 ? 1 : 2;
      std::vector<size_t> ord = polygon_order(fpts, ax, ay);
      std::vector<size_t> cycle;
      for (size_t i : ord) cycle.push_back(fv[i]);
      facets.push_back(std::move(cycle));
    }
  }

  off += std::to_string(vs.size()) + " " + std::to_string(facets.size()) + " 0\n";
  for (const auto& v : vs) off += coord_line(v);
  for (const auto& f : facets) {
    off += std::to_string(f.size());
    for (size_t i : f) off += " " + std::to_string(i);
    off += "\n";
  }
  return off;
}

}  // namespace hwt
