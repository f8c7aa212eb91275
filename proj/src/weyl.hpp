// Copyright (c) 2026 hwt developers
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <memory>
#include <string>
#include <vector>

#include "rootsys.hpp"

namespace hwt {

inline constexpr long kDefaultEnumCap = 1000000;

// s_i(mu) = mu - mu(h_i) alpha_i.
Weight reflect(int i, const Weight& mu);

// Integer action matrix of s_i on fundamental coordinates (row-major).
std::vector<long long> simple_reflection_matrix(const RootSystem& rs, int i);

// One Weyl group element: a reduced word in simple reflections plus its
// integer action matrix on fundamental-basis coordinates (row-major n x n).
struct WeylElement {
  std::vector<int> word;          // 0-based simple-reflection indices, reduced
  std::vector<long long> matrix;  // acts on column vectors of fund coords
  int length = 0;

  QVec apply(const QVec& fund) const;
  Weight apply(const Weight& w) const;
  bool is_identity() const { return word.empty(); }
  std::string word_str() const;  // "s1.s3.s2" (1-based), "e" for the identity
};

// Parabolic subgroup W_J, fully enumerated. Elements are deduplicated by
// action matrix and listed by (length, lexicographically smallest word).
class WeylGroup {
 public:
  static WeylGroup enumerate(const std::shared_ptr<const RootSystem>& rs, IndexSet J,
                             long cap = kDefaultEnumCap);

  const std::shared_ptr<const RootSystem>& root_system() const { return rs_; }
  IndexSet generators() const { return J_; }
  const std::vector<WeylElement>& elements() const { return elements_; }
  size_t order() const { return elements_.size(); }
  const WeylElement& identity() const { return elements_.front(); }

  // Index of the element with this action matrix, or -1.
  int find(const std::vector<long long>& matrix) const;

 private:
  std::shared_ptr<const RootSystem> rs_;
  IndexSet J_;
  std::vector<WeylElement> elements_;
};

// Orbit W_J(lambda), deduplicated and sorted lexicographically by coordinates.
// Computed by closure under the generating reflections; respects `cap`.
std::vector<Weight> orbit(const std::shared_ptr<const RootSystem>& rs, IndexSet J,
                          const Weight& lambda, long cap = kDefaultEnumCap);

// w . lambda = w(lambda + rho_I) - rho_I.
Weight dot_action(const WeylElement& w, const Weight& lambda);

// lambda >= mu in the root-lattice order: lambda - mu in Z+ Delta.
bool dominates(const Weight& lambda, const Weight& mu);

// Indices into W.elements() of {w : w . lambda <= lambda}. Always contains
// the identity.
std::vector<size_t> s_lambda_indices(const WeylGroup& W, const Weight& lambda);
// The literal weight-level set {w . lambda : w . lambda <= lambda}.
std::vector<Weight> s_lambda_weights(const WeylGroup& W, const Weight& lambda);

// True iff {w : w . lambda <= lambda} equals W_{J_lambda} as element sets.
bool wcf_condition_holds(const std::shared_ptr<const RootSystem>& rs, const Weight& lambda,
                         long cap = kDefaultEnumCap);

// Setwise stabilizer {w in W : w(points) = points and w(rays) = rays},
// returned as indices into W.elements(). `points`/`rays` are coordinate
// vectors; rays are compared after primitive-direction canonicalization.
std::vector<size_t> setwise_stabilizer(const WeylGroup& W, const std::vector<QVec>& points,
                                       const std::vector<QVec>& rays = {});

// Number of positive roots sent to negative roots by w.
int inversion_count(const WeylElement& w, const RootSystem& rs);

}  // namespace hwt
