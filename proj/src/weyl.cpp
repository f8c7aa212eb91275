// Copyright (c) 2026 hwt developers
// SPDX-License-Identifier: Apache-2.0
#include "weyl.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace hwt {

Weight reflect(int i, const Weight& mu) {
  const auto& rs = mu.root_system();
  Rat c = mu.coroot(i);
  if (c == 0) return mu;
  return mu - rs->simple_root(i) * c;
}

QVec WeylElement::apply(const QVec& fund) const {
  size_t n = fund.size();
  QVec out(n, Rat(0));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      long long m = matrix[i * n + j];
      if (m != 0) out[i] += Rat(static_cast<long>(m)) * fund[j];
    }
    out[i].canonicalize();
  }
  return out;
}

Weight WeylElement::apply(const Weight& w) const {
  return Weight(w.root_system(), apply(w.coords()));
}

std::string WeylElement::word_str() const {
  if (word.empty()) return "e";
  std::string s;
  for (size_t i = 0; i < word.size(); ++i) {
    if (i) s += ".";
    s += "s" + std::to_string(word[i] + 1);
  }
  return s;
}

namespace {

std::vector<long long> identity_matrix(int n) {
  std::vector<long long> m(n * n, 0);
  for (int i = 0; i < n; ++i) m[i * n + i] = 1;
  return m;
}

std::vector<long long> matmul(const std::vector<long long>& a, const std::vector<long long>& b,
                              int n) {
  std::vector<long long> c(n * n, 0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      long long aik = a[i * n + k];
      if (aik == 0) continue;
      for (int j = 0; j < n; ++j) c[i * n + j] += aik * b[k * n + j];
    }
  return c;
}

}  // namespace

// (s_i mu)(h_j) = mu(h_j) - a_ji mu(h_i), so column i of the identity picks
// up -a_ji.
std::vector<long long> simple_reflection_matrix(const RootSystem& rs, int i) {
  int n = rs.rank();
  auto m = identity_matrix(n);
  for (int j = 0; j < n; ++j) m[j * n + i] -= rs.cartan()[j][i];
  return m;
}

WeylGroup WeylGroup::enumerate(const std::shared_ptr<const RootSystem>& rs, IndexSet J,
                               long cap) {
  int n = rs->rank();
  std::vector<std::vector<long long>> gens;
  std::vector<int> gen_idx = J.indices();
  for (int i : gen_idx) gens.push_back(simple_reflection_matrix(*rs, i));

  WeylGroup g;
  g.rs_ = rs;
  g.J_ = J;

  std::map<std::vector<long long>, size_t> seen;
  WeylElement id{{}, identity_matrix(n), 0};
  g.elements_.push_back(id);
  seen.emplace(id.matrix, 0);

  // BFS by length; within a level elements are already sorted by word, so the
  // first word found for a new element is the lexicographically smallest
  // reduced word.
  std::vector<size_t> level = {0};
  while (!level.empty()) {
    std::vector<size_t> next;
    for (size_t ei : level) {
      for (size_t gi = 0; gi < gens.size(); ++gi) {
        auto m = matmul(g.elements_[ei].matrix, gens[gi], n);
        if (seen.count(m)) continue;
        if (static_cast<long>(g.elements_.size()) >= cap)
          throw CapExceededError("Weyl enumeration cap of " + std::to_string(cap) +
                                 " elements exceeded for W_{" + J.str1() + "} in " + rs->name());
        WeylElement e;
        e.word = g.elements_[ei].word;
        e.word.push_back(gen_idx[gi]);
        e.length = e.word.size();
        e.matrix = m;
        seen.emplace(e.matrix, g.elements_.size());
        g.elements_.push_back(std::move(e));
        next.push_back(g.elements_.size() - 1);
      }
    }
    level = std::move(next);
  }
  // BFS discovery order is already (length, lex word); keep it.
  return g;
}

int WeylGroup::find(const std::vector<long long>& matrix) const {
  for (size_t i = 0; i < elements_.size(); ++i)
    if (elements_[i].matrix == matrix) return static_cast<int>(i);
  return -1;
}

std::vector<Weight> orbit(const std::shared_ptr<const RootSystem>& rs, IndexSet J,
                          const Weight& lambda, long cap) {
  std::set<QVec, QVecLess> seen;
  std::vector<QVec> queue = {lambda.coords()};
  seen.insert(lambda.coords());
  auto idx = J.indices();
  while (!queue.empty()) {
    QVec v = queue.back();
    queue.pop_back();
    for (int i : idx) {
      if (v[i] == 0) continue;
      QVec w = v;
      Rat c = v[i];
      for (int j = 0; j < rs->rank(); ++j) {
        w[j] -= c * Rat(rs->cartan()[j][i]);
        w[j].canonicalize();
      }
      if (static_cast<long>(seen.size()) >= cap && !seen.count(w))
        throw CapExceededError("orbit enumeration cap of " + std::to_string(cap) + " exceeded");
      if (seen.insert(w).second) queue.push_back(w);
    }
  }
  std::vector<Weight> out;
  out.reserve(seen.size());
  for (const auto& v : seen) out.push_back(Weight(rs, v));
  return out;
}

Weight dot_action(const WeylElement& w, const Weight& lambda) {
  const auto& rs = lambda.root_system();
  Weight rho = rs->rho_all();
  return w.apply(lambda + rho) - rho;
}

bool dominates(const Weight& lambda, const Weight& mu) {
  auto k = lambda.root_system()->lattice_coords(lambda - mu);
  if (!k) return false;
  for (int x : *k)
    if (x < 0) return false;
  return true;
}

std::vector<size_t> s_lambda_indices(const WeylGroup& W, const Weight& lambda) {
  std::vector<size_t> out;
  for (size_t i = 0; i < W.elements().size(); ++i)
    if (dominates(lambda, dot_action(W.elements()[i], lambda))) out.push_back(i);
  return out;
}

std::vector<Weight> s_lambda_weights(const WeylGroup& W, const Weight& lambda) {
  std::set<QVec, QVecLess> seen;
  for (size_t i : s_lambda_indices(W, lambda)) seen.insert(dot_action(W.elements()[i], lambda).coords());
  std::vector<Weight> out;
  for (const auto& v : seen) out.push_back(Weight(lambda.root_system(), v));
  return out;
}

bool wcf_condition_holds(const std::shared_ptr<const RootSystem>& rs, const Weight& lambda,
                         long cap) {
  WeylGroup W = WeylGroup::enumerate(rs, IndexSet::all(rs->rank()), cap);
  auto s = s_lambda_indices(W, lambda);

  IndexSet jl;
  for (int i = 0; i < rs->rank(); ++i)
    if (is_nonneg_integer(lambda.coroot(i))) jl.add(i);
  WeylGroup WJ = WeylGroup::enumerate(rs, jl, cap);
  if (s.size() != WJ.order()) return false;
  std::set<std::vector<long long>> sm;
  for (size_t i : s) sm.insert(W.elements()[i].matrix);
  for (const auto& e : WJ.elements())
    if (!sm.count(e.matrix)) return false;
  return true;
}

std::vector<size_t> setwise_stabilizer(const WeylGroup& W, const std::vector<QVec>& points,
                                       const std::vector<QVec>& rays) {
  std::vector<QVec> pts = points;
  std::sort(pts.begin(), pts.end(), QVecLess{});
  std::vector<QVec> rys;
  for (auto r : rays) {
    canonicalize_ray(r);
    rys.push_back(std::move(r));
  }
  std::sort(rys.begin(), rys.end(), QVecLess{});

  std::vector<size_t> out;
  for (size_t i = 0; i < W.elements().size(); ++i) {
    const auto& w = W.elements()[i];
    std::vector<QVec> tp;
    tp.reserve(pts.size());
    for (const auto& p : pts) tp.push_back(w.apply(p));
    std::sort(tp.begin(), tp.end(), QVecLess{});
    if (tp != pts) continue;
    std::vector<QVec> tr;
    tr.reserve(rys.size());
    for (const auto& r : rys) {
      QVec x = w.apply(r);
      canonicalize_ray(x);
      tr.push_back(std::move(x));
    }
    std::sort(tr.begin(), tr.end(), QVecLess{});
    if (tr != rys) continue;
    out.push_back(i);
  }
  return out;
}

int inversion_count(const WeylElement& w, const RootSystem& rs) {
  int count = 0;
  for (const auto& beta : rs.positive_roots()) {
    Weight b = rs.weight_from_root_coords(beta);
    QVec c = rs.root_coords(w.apply(b));
    bool neg = true;
    for (auto& x : c)
      if (x > 0) neg = false;
    if (neg) ++count;
  }
  return count;
}

}  // namespace hwt
