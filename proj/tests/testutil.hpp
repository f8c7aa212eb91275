// Copyright (c) 2026 hwt developers
// SPDX-License-Identifier: Apache-2.0
//
// Test-only brute-force oracles, independent of the library's conversion and
// membership code paths.
#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <vector>

#include "polyhedron.hpp"
#include "rat.hpp"

namespace hwt::testutil {

// Homogenized generators of a V-polyhedron: (1, v) and (0, r).
inline std::vector<QVec> homogenize(const VPolyhedron& p) {
  std::vector<QVec> gens;
  for (const auto& v : p.vertices) {
    QVec g(v.size() + 1);
    g[0] = 1;
    for (size_t i = 0; i < v.size(); ++i) g[i + 1] = v[i];
    gens.push_back(std::move(g));
  }
  for (const auto& r : p.rays) {
    QVec g(r.size() + 1, Rat(0));
    for (size_t i = 0; i < r.size(); ++i) g[i + 1] = r[i];
    gens.push_back(std::move(g));
  }
  return gens;
}

// One nonzero vector orthogonal to all rows, or nullopt when the orthogonal
// complement is not one-dimensional.
inline std::optional<QVec> nullspace_vector(std::vector<QVec> rows, int dim) {
  // Gaussian elimination to row echelon
  std::vector<int> pivot_col;
  size_t r = 0;
  for (int c = 0; c < dim && r < rows.size(); ++c) {
    size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Rat f = rows[i][c] / rows[r][c];
      for (int j = 0; j < dim; ++j) rows[i][j] -= f * rows[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  if (static_cast<int>(r) != dim - 1) return std::nullopt;
  // single free column
  std::vector<bool> is_pivot(dim, false);
  for (int c : pivot_col) is_pivot[c] = true;
  int free_col = -1;
  for (int c = 0; c < dim; ++c)
    if (!is_pivot[c]) free_col = c;
  QVec x(dim, Rat(0));
  x[free_col] = 1;
  for (size_t i = 0; i < r; ++i) x[pivot_col[i]] = -rows[i][free_col] / rows[i][pivot_col[i]];
  for (auto& q : x) q.canonicalize();
  return x;
}

// Brute-force facet enumeration of a FULL-DIMENSIONAL V-polyhedron: every
// subset of dim-1 homogenized generators spanning a hyperplane whose normal
// has all generators on one side. Returns canonical (normal, offset) pairs
// sorted like v_to_h output.
inline std::vector<HPolyhedron::Ineq> brute_facets(const VPolyhedron& p) {
  auto gens = homogenize(p);
  int dim = static_cast<int>(gens[0].size());
  size_t m = gens.size();
  std::vector<HPolyhedron::Ineq> out;
  std::vector<int> idx(dim - 1);
  std::function<void(int, int)> rec = [&](int start, int k) {
    if (k == dim - 1) {
      std::vector<QVec> rows;
      for (int i : idx) rows.push_back(gens[i]);
      auto a = nullspace_vector(rows, dim);
      if (!a) return;
      int sign = 0;
      for (const auto& g : gens) {
        Rat d = dot(*a, g);
        if (d > 0) {
          if (sign < 0) return;
          sign = 1;
        } else if (d < 0) {
          if (sign > 0) return;
          sign = -1;
        }
      }
      if (sign == 0) return;  // all generators on the hyperplane: flat input
      QVec v = *a;
      if (sign < 0)
        for (auto& q : v) q = -q;
      // now a0 + <avec, x> >= 0 on P, i.e. <-avec, x> <= a0
      QVec normal(dim - 1);
      bool allzero = true;
      for (int i = 0; i + 1 < dim; ++i) {
        normal[i] = -v[i + 1];
        if (normal[i] != 0) allzero = false;
      }
      if (allzero) return;
      Rat offset = v[0];
      QVec joint = normal;
      joint.push_back(offset);
      canonicalize_ray(joint);
      offset = joint.back();
      joint.pop_back();
      out.push_back({joint, offset});
      return;
    }
    for (int i = start; i < static_cast<int>(m); ++i) {
      idx[k] = i;
      rec(i + 1, k + 1);
    }
  };
  rec(0, 0);
  // dedup + sort
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    int c = qvec_cmp(x.normal, y.normal);
    if (c != 0) return c < 0;
    return cmp(x.offset, y.offset) < 0;
  });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const auto& x, const auto& y) {
                          return qvec_cmp(x.normal, y.normal) == 0 && x.offset == y.offset;
                        }),
            out.end());
  return out;
}

// Exact membership x in conv(vertices) + cone(rays) by Caratheodory subset
// enumeration (independent of the H-representation machinery).
inline bool brute_membership(const VPolyhedron& p, const QVec& x) {
  auto gens = homogenize(p);
  int dim = static_cast<int>(gens[0].size());
  QVec target(dim);
  target[0] = 1;
  for (int i = 0; i + 1 < dim; ++i) target[i + 1] = x[i];

  size_t m = gens.size();
  std::vector<int> idx;
  // solve sum a_i gens[idx_i] = target exactly; coefficients must be >= 0
  auto try_subset = [&]() {
    size_t k = idx.size();
    // Gaussian elimination on the dim x k system [G | target]
    std::vector<QVec> aug(dim, QVec(k + 1));
    for (int r = 0; r < dim; ++r) {
      for (size_t c = 0; c < k; ++c) aug[r][c] = gens[idx[c]][r];
      aug[r][k] = target[r];
    }
    std::vector<int> pivot_of_col(k, -1);
    size_t row = 0;
    for (size_t c = 0; c < k && row < aug.size(); ++c) {
      size_t p = row;
      while (p < aug.size() && aug[p][c] == 0) ++p;
      if (p == aug.size()) continue;
      std::swap(aug[p], aug[row]);
      for (size_t i = 0; i < aug.size(); ++i) {
        if (i == row || aug[i][c] == 0) continue;
        Rat f = aug[i][c] / aug[row][c];
        for (size_t j = c; j <= k; ++j) aug[i][j] -= f * aug[row][j];
      }
      pivot_of_col[c] = static_cast<int>(row);
      ++row;
    }
    for (size_t i = row; i < aug.size(); ++i)
      if (aug[i][k] != 0) return false;  // inconsistent
    for (size_t c = 0; c < k; ++c) {
      if (pivot_of_col[c] < 0) return false;  // dependent subset; a smaller one covers it
      Rat coef = aug[pivot_of_col[c]][k] / aug[pivot_of_col[c]][c];
      if (coef < 0) return false;
    }
    return true;
  };
  std::function<bool(size_t, int)> rec = [&](size_t start, int left) {
    if (!idx.empty() && try_subset()) return true;
    if (left == 0) return false;
    for (size_t i = start; i < m; ++i) {
      idx.push_back(static_cast<int>(i));
      if (rec(i + 1, left - 1)) return true;
      idx.pop_back();
    }
    return false;
  };
  return rec(0, dim);
}

}  // namespace hwt::testutil
