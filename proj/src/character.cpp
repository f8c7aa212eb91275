// Copyright (c) 2026 hwt developers
// SPDX-License-Identifier: Apache-2.0
#include "character.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "weyl.hpp"

namespace hwt {

long long FormalCharacter::coefficient_sum() const {
  long long s = 0;
  for (const auto& [k, c] : coeffs) s += c;
  return s;
}

std::map<IVec, long long, HeightLexLess> kostant_table(const RootSystem& rs, int depth) {
  int n = rs.rank();
  // all offsets of height <= depth, in height order
  std::vector<IVec> offsets;
  IVec cur(n, 0);
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == n) {
      offsets.push_back(cur);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      cur[pos] = v;
      rec(pos + 1, left - v);
    }
    cur[pos] = 0;
  };
  rec(0, depth);
  std::sort(offsets.begin(), offsets.end(), HeightLexLess{});

  std::map<IVec, long long, HeightLexLess> table;
  for (const auto& k : offsets) table[k] = 0;
  table[IVec(n, 0)] = 1;
  // unbounded knapsack over the positive roots, in height order
  for (const auto& beta : rs.positive_roots()) {
    for (const auto& k : offsets) {
      IVec prev(n);
      bool ok = true;
      for (int i = 0; i < n; ++i) {
        prev[i] = k[i] - beta[i];
        if (prev[i] < 0) ok = false;
      }
      if (!ok) continue;
      table[k] += table[prev];
    }
  }
  return table;
}

FormalCharacter verma_character(const Weight& lambda, int depth) {
  if (depth < 0) throw std::invalid_argument("verma_character: negative depth");
  FormalCharacter ch{lambda, depth, {}};
  for (auto& [k, c] : kostant_table(*lambda.root_system(), depth))
    if (c != 0) ch.coeffs.emplace(k, c);
  return ch;
}

FormalCharacter wcf_character(const Weight& lambda, int depth, long cap) {
  const auto& rs = lambda.root_system();
  WeylGroup W = WeylGroup::enumerate(rs, IndexSet::all(rs->rank()), cap);
  IndexSet jl = j_lambda(lambda);
  WeylGroup WJ = WeylGroup::enumerate(rs, jl, cap);
  {
    auto s = s_lambda_indices(W, lambda);
    bool ok = s.size() == WJ.order();
    if (ok) {
      std::set<std::vector<long long>> sm;
      for (size_t i : s) sm.insert(W.elements()[i].matrix);
      for (const auto& e : WJ.elements())
        if (!sm.count(e.matrix)) ok = false;
    }
    if (!ok)
      throw WcfHypothesisError(
          "Weyl character formula hypothesis fails for lambda = " + lambda.str() +
          ": S_lambda has " + std::to_string(s.size()) + " elements but W_{J_lambda} = W_{" +
          jl.str1() + "} has " + std::to_string(WJ.order()));
  }

  auto kostant = kostant_table(*rs, depth);
  FormalCharacter ch{lambda, depth, {}};
  for (const auto& w : WJ.elements()) {
    auto shift = rs->lattice_coords(lambda - dot_action(w, lambda));
    if (!shift) throw std::logic_error("wcf_character: dot-orbit shift not in the root lattice");
    int hs = height(*shift);
    long long sign = w.length % 2 == 0 ? 1 : -1;
    if (hs > depth) continue;
    for (const auto& [k, cnt] : kostant) {
      if (cnt == 0) continue;
      IVec tot = *shift;
      int n = rs->rank();
      for (int i = 0; i < n; ++i) tot[i] += k[i];
      if (height(tot) > depth) continue;
      ch.coeffs[tot] += sign * cnt;
    }
  }
  for (auto it = ch.coeffs.begin(); it != ch.coeffs.end();) {
    if (it->second == 0)
      it = ch.coeffs.erase(it);
    else if (it->second < 0)
      throw std::logic_error("wcf_character produced a negative coefficient (implementation bug)");
    else
      ++it;
  }
  return ch;
}

TruncatedWeightSet character_support(const FormalCharacter& c) {
  TruncatedWeightSet out{c.base, c.depth, {}};
  for (const auto& [k, v] : c.coeffs)
    if (v > 0) out.entries.emplace(k, v);
  return out;
}

Rat weyl_dimension(const Weight& lambda) {
  const auto& rs = lambda.root_system();
  for (int i = 0; i < rs->rank(); ++i)
    if (!is_nonneg_integer(lambda.coroot(i)))
      throw std::invalid_argument("weyl_dimension requires dominant integral lambda, got " +
                                  lambda.str());
  Weight rho = rs->rho_all();
  Rat prod = 1;
  for (const auto& beta : rs->positive_roots()) {
    Weight b = rs->weight_from_root_coords(beta);
    prod *= rs->bilinear(lambda + rho, b) / rs->bilinear(rho, b);
  }
  prod.canonicalize();
  return prod;
}

}  // namespace hwt
