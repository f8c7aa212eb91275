// Copyright (c) 2026 hwt developers
// SPDX-License-Identifier: Apache-2.0
#include "oracle.hpp"

#include <algorithm>
#include <functional>

namespace hwt {

int default_oracle_depth(int rank) {
  if (rank <= 2) return 8;
  if (rank == 3) return 5;
  return 4;
}

std::vector<LoweringWord> words_for_offset(const IVec& offset) {
  LoweringWord base;
  for (size_t i = 0; i < offset.size(); ++i)
    for (int c = 0; c < offset[i]; ++c) base.push_back(static_cast<int>(i));
  std::vector<LoweringWord> out;
  do {
    out.push_back(base);
  } while (std::next_permutation(base.begin(), base.end()));
  return out;
}

ShapovalovOracle::ShapovalovOracle(Weight lambda, int depth_cap)
    : lambda_(std::move(lambda)),
      cap_(depth_cap < 0 ? default_oracle_depth(lambda_.rank()) : depth_cap) {}

Rat ShapovalovOracle::pairing(const LoweringWord& u, const LoweringWord& v) {
  if (u.size() != v.size()) return 0;
  IVec cu(lambda_.rank(), 0), cv(lambda_.rank(), 0);
  for (int i : u) ++cu[i];
  for (int i : v) ++cv[i];
  if (cu != cv) return 0;  // weight orthogonality
  return pairing_rec(u, v);
}

// <f_i f_{u'} v, f_v v> = <f_{u'} v, e_i f_v v>; commuting e_i through f_v
// leaves, for each position p with v_p = i, the factor
// (lambda - sum_{q > p} alpha_{v_q})(h_i).
Rat ShapovalovOracle::pairing_rec(const LoweringWord& u, const LoweringWord& v) {
  if (u.empty()) return 1;
  auto key = u <= v ? std::make_pair(u, v) : std::make_pair(v, u);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;

  const auto& cartan = lambda_.root_system()->cartan();
  int i = u[0];
  LoweringWord rest(u.begin() + 1, u.end());
  Rat total = 0;
  // coefficient for position p, built from the right
  Rat coeff = lambda_.coroot(i);
  for (int p = static_cast<int>(v.size()) - 1; p >= 0; --p) {
    if (v[p] == i) {
      LoweringWord vp;
      vp.reserve(v.size() - 1);
      for (int q = 0; q < static_cast<int>(v.size()); ++q)
        if (q != p) vp.push_back(v[q]);
      if (coeff != 0) total += coeff * pairing_rec(rest, vp);
    }
    coeff -= Rat(cartan[i][v[p]]);  // alpha_{v_p}(h_i)
  }
  total.canonicalize();
  memo_.emplace(std::move(key), total);
  return total;
}

std::vector<QVec> ShapovalovOracle::gram(const IVec& offset) {
  if (height(offset) > cap_)
    throw CapExceededError("oracle depth cap " + std::to_string(cap_) +
                           " exceeded at offset height " + std::to_string(height(offset)));
  auto words = words_for_offset(offset);
  size_t n = words.size();
  std::vector<QVec> g(n, QVec(n));
  for (size_t a = 0; a < n; ++a)
    for (size_t b = a; b < n; ++b) {
      Rat v = pairing_rec(words[a], words[b]);
      g[a][b] = v;
      g[b][a] = v;
    }
  return g;
}

int ShapovalovOracle::simple_multiplicity(const IVec& offset) { return rank_of(gram(offset)); }

TruncatedWeightSet ShapovalovOracle::weight_support(int depth) {
  if (depth > cap_)
    throw CapExceededError("oracle depth " + std::to_string(depth) + " exceeds the cap of " +
                           std::to_string(cap_) + " for rank " +
                           std::to_string(lambda_.rank()));
  int n = lambda_.rank();
  TruncatedWeightSet out{lambda_, depth, {}};
  IVec cur(n, 0);
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == n) {
      int m = simple_multiplicity(cur);
      if (m > 0) out.entries.emplace(cur, m);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      cur[pos] = v;
      rec(pos + 1, left - v);
    }
    cur[pos] = 0;
  };
  rec(0, depth);
  return out;
}

long long verma_multiplicity(const RootSystem& rs, const IVec& offset) {
  const auto& roots = rs.positive_roots();
  int n = rs.rank();
  std::function<long long(size_t, const IVec&)> count = [&](size_t idx,
                                                            const IVec& rem) -> long long {
    bool zero = true;
    for (int x : rem)
      if (x != 0) zero = false;
    if (zero) return 1;
    if (idx == roots.size()) return 0;
    long long total = 0;
    IVec r = rem;
    while (true) {
      total += count(idx + 1, r);
      bool fits = true;
      for (int i = 0; i < n; ++i) {
        r[i] -= roots[idx][i];
        if (r[i] < 0) fits = false;
      }
      if (!fits) break;
    }
    return total;
  };
  return count(0, offset);
}

TruncatedWeightSet oracle_weight_support(const Weight& lambda, int depth, int depth_cap) {
  ShapovalovOracle oracle(lambda, depth_cap);
  return oracle.weight_support(depth);
}

}  // namespace hwt
