// Copyright (c) 2026 hwt developers
// SPDX-License-Identifier: Apache-2.0
#include "hwmodule.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "polyhedron.hpp"

namespace hwt {

IndexSet j_lambda(const Weight& lambda) {
  IndexSet j;
  for (int i = 0; i < lambda.rank(); ++i)
    if (is_nonneg_integer(lambda.coroot(i))) j.add(i);
  return j;
}

bool antidominant(const Weight& lambda) {
  const auto& rs = lambda.root_system();
  Weight shifted = lambda + rs->rho_all();
  for (const auto& beta : rs->positive_roots()) {
    // (lambda + rho)(h_beta) = 2 (lambda + rho, beta) / (beta, beta)
    Rat v = 2 * rs->bilinear(shifted, rs->weight_from_root_coords(beta)) / rs->root_norm(beta);
    v.canonicalize();
    if (is_integer(v) && v >= 1) return false;
  }
  return true;
}

bool simply_regular(const Weight& lambda) {
  for (int i = 0; i < lambda.rank(); ++i)
    if (lambda.coroot(i) == 0) return false;
  return true;
}

HWModuleDescriptor HWModuleDescriptor::verma(Weight lambda) {
  return HWModuleDescriptor(std::move(lambda), ModuleClass::Verma, IndexSet{});
}

HWModuleDescriptor HWModuleDescriptor::simple(Weight lambda) {
  return HWModuleDescriptor(std::move(lambda), ModuleClass::Simple, IndexSet{});
}

HWModuleDescriptor HWModuleDescriptor::parabolic_verma(Weight lambda, IndexSet jprime) {
  IndexSet jl = j_lambda(lambda);
  if (!jprime.subset_of(jl))
    throw std::invalid_argument(
        "parabolic Verma requires J' within J_lambda: J' = {" + jprime.str1() +
        "} but J_lambda = {" + jl.str1() + "} for lambda = " + lambda.str());
  return HWModuleDescriptor(std::move(lambda), ModuleClass::ParabolicVerma, jprime);
}

HWModuleDescriptor HWModuleDescriptor::parse(const Weight& lambda, const std::string& spec) {
  if (spec == "verma") return verma(lambda);
  if (spec == "simple") return simple(lambda);
  if (spec.rfind("pverma:", 0) == 0 || spec == "pverma") {
    IndexSet jp;
    std::string list = spec == "pverma" ? "" : spec.substr(7);
    if (!list.empty()) {
      size_t pos = 0;
      while (pos <= list.size()) {
        size_t comma = list.find(',', pos);
        std::string tok = list.substr(pos, comma == std::string::npos ? std::string::npos
                                                                      : comma - pos);
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
          throw std::invalid_argument("bad index '" + tok + "' in module class '" + spec + "'");
        int i = std::stoi(tok);
        if (i < 1 || i > lambda.rank())
          throw std::invalid_argument("index " + std::to_string(i) + " out of range 1.." +
                                      std::to_string(lambda.rank()) + " in '" + spec + "'");
        jp.add(i - 1);
        if (comma == std::string::npos) break;
        pos = comma + 1;
      }
    }
    return parabolic_verma(lambda, jp);
  }
  throw std::invalid_argument("unknown module class '" + spec +
                              "' (expected verma | simple | pverma:i,j,...)");
}

IndexSet HWModuleDescriptor::integrability() const {
  switch (cls_) {
    case ModuleClass::Verma: return IndexSet{};
    case ModuleClass::Simple: return j_lambda(lambda_);
    case ModuleClass::ParabolicVerma: return jprime_;
  }
  return IndexSet{};
}

std::string HWModuleDescriptor::class_str() const {
  switch (cls_) {
    case ModuleClass::Verma: return "verma";
    case ModuleClass::Simple: return "simple";
    case ModuleClass::ParabolicVerma:
      return jprime_.empty() ? "pverma:" : "pverma:" + jprime_.str1();
  }
  return "?";
}

namespace {

// J-dominant representative of mu under W_J.
Weight dominantize(Weight mu, IndexSet J) {
  auto idx = J.indices();
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i : idx) {
      if (mu.coroot(i) < 0) {
        mu = reflect(i, mu);
        changed = true;
      }
    }
  }
  return mu;
}

// mu in conv W_J(nu), for J-dominant nu: the J-dominant conjugate of mu must
// lie in nu - R+ Delta_J.
bool in_levi_hull(const Weight& nu, const Weight& mu, IndexSet J) {
  Weight dom = dominantize(mu, J);
  QVec c = nu.root_system()->root_coords(nu - dom);
  for (int i = 0; i < nu.rank(); ++i) {
    if (c[i] < 0) return false;
    if (c[i] != 0 && !J.contains(i))
      throw std::logic_error("levi hull test: difference not supported on J");
  }
  return true;
}

}  // namespace

std::vector<Weight> LeviWeightSet::weights() const {
  std::vector<Weight> out;
  const auto& rs = nu.root_system();
  for (const auto& k : offsets) out.push_back(nu - rs->weight_from_root_coords(k));
  return out;
}

LeviWeightSet levi_weights(const Weight& nu, IndexSet J) {
  for (int i : J.indices())
    if (!is_nonneg_integer(nu.coroot(i)))
      throw std::invalid_argument("levi_weights: nu(h_" + std::to_string(i + 1) + ") = " +
                                  rat_str(nu.coroot(i)) +
                                  " is not a nonnegative integer, so the Levi module for J = {" +
                                  J.str1() + "} is not finite-dimensional");
  LeviWeightSet out{J, nu, {}};
  int n = nu.rank();
  const auto& rs = nu.root_system();
  std::set<IVec> seen;
  IVec zero(n, 0);
  seen.insert(zero);
  std::vector<IVec> queue = {zero};
  auto idx = J.indices();
  while (!queue.empty()) {
    IVec k = queue.back();
    queue.pop_back();
    for (int i : idx) {
      IVec nk = k;
      nk[i] += 1;
      if (seen.count(nk)) continue;
      Weight mu = nu - rs->weight_from_root_coords(nk);
      if (!in_levi_hull(nu, mu, J)) continue;
      seen.insert(nk);
      queue.push_back(nk);
    }
  }
  out.offsets.assign(seen.begin(), seen.end());
  std::sort(out.offsets.begin(), out.offsets.end(), HeightLexLess{});
  return out;
}

TruncatedWeightSet weights_levi_shift(const HWModuleDescriptor& m, int depth) {
  const auto& rs = m.lambda().root_system();
  int n = rs->rank();
  IndexSet J = m.integrability();
  LeviWeightSet levi = levi_weights(m.lambda(), J);

  // positive roots not supported on J
  std::vector<IVec> complement;
  for (const auto& b : rs->positive_roots()) {
    bool on_j = true;
    for (int i = 0; i < n && on_j; ++i)
      if (b[i] != 0 && !J.contains(i)) on_j = false;
    if (!on_j) complement.push_back(b);
  }

  // distinct Z+ combinations of the complement roots, height <= depth
  std::set<IVec> cone;
  {
    IVec zero(n, 0);
    cone.insert(zero);
    std::vector<IVec> queue = {zero};
    while (!queue.empty()) {
      IVec s = queue.back();
      queue.pop_back();
      for (const auto& b : complement) {
        IVec t = s;
        for (int i = 0; i < n; ++i) t[i] += b[i];
        if (height(t) > depth) continue;
        if (cone.insert(t).second) queue.push_back(t);
      }
    }
  }

  TruncatedWeightSet out{m.lambda(), depth, {}};
  for (const auto& x : levi.offsets) {
    int hx = height(x);
    if (hx > depth) continue;
    for (const auto& s : cone) {
      if (hx + height(s) > depth) continue;
      IVec k = x;
      for (int i = 0; i < n; ++i) k[i] += s[i];
      out.entries.emplace(std::move(k), std::nullopt);
    }
  }
  return out;
}

TruncatedWeightSet weights_integrable_decomposition(const HWModuleDescriptor& m, int depth) {
  const auto& rs = m.lambda().root_system();
  int n = rs->rank();
  IndexSet J = m.integrability();
  std::vector<int> comp = J.complement_in(n).indices();

  // all mu in Z+ Delta_{I \ J} with height <= depth
  std::vector<IVec> mus;
  IVec cur(n, 0);
  std::function<void(size_t, int)> rec = [&](size_t pos, int left) {
    if (pos == comp.size()) {
      mus.push_back(cur);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      cur[comp[pos]] = v;
      rec(pos + 1, left - v);
    }
    cur[comp[pos]] = 0;
  };
  rec(0, depth);

  // The Levi weight set depends on lambda - mu only through its J-coordinates.
  std::map<std::vector<long>, std::vector<IVec>> memo;
  TruncatedWeightSet out{m.lambda(), depth, {}};
  for (const auto& mu : mus) {
    Weight shifted = m.lambda() - rs->weight_from_root_coords(mu);
    std::vector<long> key;
    for (int i : J.indices()) {
      auto v = rat_to_long(shifted.coroot(i));
      if (!v) throw std::logic_error("decomposition: non-integral J-coordinate");
      key.push_back(*v);
    }
    auto it = memo.find(key);
    if (it == memo.end()) it = memo.emplace(key, levi_weights(shifted, J).offsets).first;
    int hmu = height(mu);
    for (const auto& o : it->second) {
      if (hmu + height(o) > depth) continue;
      IVec k = mu;
      for (int i = 0; i < n; ++i) k[i] += o[i];
      if (!out.entries.emplace(std::move(k), std::nullopt).second)
        throw std::logic_error("integrable decomposition is not disjoint (implementation bug)");
    }
  }
  return out;
}

TruncatedWeightSet weights_hull_intersection(const HWModuleDescriptor& m, int depth) {
  const auto& rs = m.lambda().root_system();
  int n = rs->rank();
  HPolyhedron h = v_to_h(hull_of(m));

  TruncatedWeightSet out{m.lambda(), depth, {}};
  IVec k(n, 0);
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == n) {
      Weight mu = m.lambda() - rs->weight_from_root_coords(k);
      if (contains(h, mu.coords())) out.entries.emplace(k, std::nullopt);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      k[pos] = v;
      rec(pos + 1, left - v);
    }
    k[pos] = 0;
  };
  rec(0, depth);
  return out;
}

TruncatedWeightSet wt_restricted(const HWModuleDescriptor& m, IndexSet J, int depth) {
  TruncatedWeightSet full = weights_levi_shift(m, depth);
  TruncatedWeightSet out{full.base, depth, {}};
  int n = full.base.rank();
  for (const auto& [k, mult] : full.entries) {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      if (k[i] != 0 && !J.contains(i)) ok = false;
    if (ok) out.entries.emplace(k, mult);
  }
  return out;
}

std::vector<IVec> TruncatedWeightSet::support() const {
  std::vector<IVec> out;
  out.reserve(entries.size());
  for (const auto& [k, mult] : entries) out.push_back(k);
  return out;
}

AgreementReport formulas_agree(const HWModuleDescriptor& m, int depth) {
  AgreementReport r{weights_hull_intersection(m, depth), weights_levi_shift(m, depth),
                    weights_integrable_decomposition(m, depth)};
  auto diff = [](const TruncatedWeightSet& x, const TruncatedWeightSet& y) {
    std::vector<IVec> out;
    for (const auto& [k, mult] : x.entries)
      if (!y.contains(k)) out.push_back(k);
    return out;
  };
  r.a_not_b = diff(r.a, r.b);
  r.b_not_a = diff(r.b, r.a);
  r.b_not_c = diff(r.b, r.c);
  r.c_not_b = diff(r.c, r.b);
  r.agree = r.a_not_b.empty() && r.b_not_a.empty() && r.b_not_c.empty() && r.c_not_b.empty();
  return r;
}

}  // namespace hwt
