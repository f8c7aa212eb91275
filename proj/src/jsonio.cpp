// Copyright (c) 2026 hwt developers
// SPDX-License-Identifier: Apache-2.0
#include "jsonio.hpp"

namespace hwt {

Json qvec_json(const QVec& v) {
  Json a = Json::array();
  for (const auto& q : v) a.push_back(rat_str(q));
  return a;
}

Json weight_json(const Weight& w) { return qvec_json(w.coords()); }

Json ivec_json(const IVec& v) {
  Json a = Json::array();
  for (int x : v) a.push_back(x);
  return a;
}

Json indexset_json(IndexSet J) {
  Json a = Json::array();
  for (int i : J.indices1()) a.push_back(i);
  return a;
}

Json rootsys_json(const RootSystem& rs) {
  Json j;
  j["type"] = rs.name();
  j["rank"] = rs.rank();
  Json cartan = Json::array();
  for (const auto& row : rs.cartan()) {
    Json r = Json::array();
    for (int x : row) r.push_back(x);
    cartan.push_back(r);
  }
  j["cartan"] = cartan;
  Json roots = Json::array();
  for (const auto& b : rs.positive_roots()) roots.push_back(ivec_json(b));
  j["positive_roots"] = roots;
  Json form = Json::array();
  for (const auto& row : rs.form_matrix()) form.push_back(qvec_json(row));
  j["form"] = form;
  return j;
}

Json tws_json(const TruncatedWeightSet& t) {
  Json j;
  j["lambda"] = weight_json(t.base);
  j["depth"] = t.depth;
  j["count"] = t.entries.size();
  Json w = Json::array();
  for (const auto& [k, mult] : t.entries) {
    Json e;
    e["offset"] = ivec_json(k);
    if (mult)
      e["mult"] = *mult;
    else
      e["mult"] = nullptr;
    w.push_back(e);
  }
  j["weights"] = w;
  return j;
}

Json character_json(const FormalCharacter& c) {
  Json j;
  j["lambda"] = weight_json(c.base);
  j["depth"] = c.depth;
  Json terms = Json::array();
  for (const auto& [k, v] : c.coeffs) {
    Json e;
    e["offset"] = ivec_json(k);
    e["mult"] = v;
    terms.push_back(e);
  }
  j["terms"] = terms;
  return j;
}

Json vpoly_json(const VPolyhedron& p, const RootSystem& rs) {
  Json j;
  Json vs = Json::array();
  for (const auto& v : p.vertices) vs.push_back(qvec_json(v));
  j["vertices"] = vs;
  Json rays = Json::array();
  for (const auto& r : p.rays) {
    QVec rc = rs.root_coords(Weight(rs.shared_from_this(), r));
    canonicalize_ray(rc);
    rays.push_back(qvec_json(rc));
  }
  j["rays"] = rays;
  return j;
}

Json hpoly_json(const HPolyhedron& h) {
  Json a = Json::array();
  for (const auto& q : h.ineqs) {
    Json e;
    e["normal"] = qvec_json(q.normal);
    e["offset"] = rat_str(q.offset);
    a.push_back(e);
  }
  return a;
}

Json envelope(const std::string& command, Json spec, Json result) {
  Json j;
  j["tool"] = "hwt";
  j["version"] = HWT_VERSION_STRING;
  j["schema"] = kSchemaVersion;
  j["command"] = command;
  j["spec"] = std::move(spec);
  j["result"] = std::move(result);
  return j;
}

}  // namespace hwt
