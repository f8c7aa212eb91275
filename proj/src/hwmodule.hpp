// Copyright (c) 2026 hwt developers
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rootsys.hpp"
#include "weyl.hpp"

namespace hwt {

// J_lambda = {i : lambda(h_i) is a nonnegative integer}.
IndexSet j_lambda(const Weight& lambda);

// (alpha, 2 lambda + sum of positive roots)/(alpha,alpha) - 1 is not a
// nonnegative integer, for every positive root alpha. Equivalently
// (lambda + rho)(h_alpha) is never an integer >= 1.
bool antidominant(const Weight& lambda);

// (lambda, alpha_i) != 0 for all i, i.e. no fundamental coordinate is zero.
bool simply_regular(const Weight& lambda);

enum class ModuleClass { Verma, ParabolicVerma, Simple };

// (lambda, class) descriptor of a highest weight module. ParabolicVerma
// requires J' within J_lambda (checked at construction).
class HWModuleDescriptor {
 public:
  static HWModuleDescriptor verma(Weight lambda);
  static HWModuleDescriptor simple(Weight lambda);
  static HWModuleDescriptor parabolic_verma(Weight lambda, IndexSet jprime);
  // class_spec: "verma" | "simple" | "pverma:1,3" (1-based indices)
  static HWModuleDescriptor parse(const Weight& lambda, const std::string& class_spec);

  const Weight& lambda() const { return lambda_; }
  ModuleClass cls() const { return cls_; }
  IndexSet jprime() const { return jprime_; }

  // J(V): Verma -> empty, Simple -> J_lambda, ParabolicVerma -> J'.
  IndexSet integrability() const;
  std::string class_str() const;

 private:
  HWModuleDescriptor(Weight l, ModuleClass c, IndexSet jp)
      : lambda_(std::move(l)), cls_(c), jprime_(jp) {}
  Weight lambda_;
  ModuleClass cls_;
  IndexSet jprime_;
};

// Finite weight set of the integrable Levi module with highest weight nu,
// over the subalgebra generated by J. Offsets are full root-coordinate
// vectors supported on J, sorted by height then lex.
struct LeviWeightSet {
  IndexSet J;
  Weight nu;
  std::vector<IVec> offsets;

  std::vector<Weight> weights() const;
};

// (nu - Z+ Delta_J) intersected with conv W_J(nu). Requires nu(h_i) to be a
// nonnegative integer for every i in J; rejects otherwise naming the index.
LeviWeightSet levi_weights(const Weight& nu, IndexSet J);

// Truncated weight set: offsets k (root coordinates of lambda - mu, height
// <= depth) mapped to a multiplicity or to nullopt for support-only data.
struct TruncatedWeightSet {
  Weight base;
  int depth = 0;
  std::map<IVec, std::optional<long long>, HeightLexLess> entries;

  std::vector<IVec> support() const;
  bool support_equal(const TruncatedWeightSet& o) const { return support() == o.support(); }
  bool contains(const IVec& k) const { return entries.count(k) != 0; }
  size_t size() const { return entries.size(); }
};

// Formula B: wt L_{J(V)}(lambda) - Z+ (Phi+ \ Phi+_{J(V)}), height-truncated.
TruncatedWeightSet weights_levi_shift(const HWModuleDescriptor& m, int depth);

// Formula C: disjoint union over mu in Z+ Delta_{I \ J(V)} of
// wt L_{J(V)}(lambda - mu), height-truncated. Throws std::logic_error if the
// union fails to be disjoint (an implementation bug, not a user error).
TruncatedWeightSet weights_integrable_decomposition(const HWModuleDescriptor& m, int depth);

// Formula A: (lambda - Z Delta) intersected with the exact H-representation
// of conv wt V, height-truncated. Candidates are enumerated in lambda - Z+
// Delta only; points with a negative offset coordinate lie outside the hull.
TruncatedWeightSet weights_hull_intersection(const HWModuleDescriptor& m, int depth);

// wt_J: the subset of the weight set whose offsets are supported on J.
TruncatedWeightSet wt_restricted(const HWModuleDescriptor& m, IndexSet J, int depth);

struct AgreementReport {
  TruncatedWeightSet a, b, c;
  bool agree = false;
  // offsets present in one set but not another (empty when agree)
  std::vector<IVec> a_not_b, b_not_a, b_not_c, c_not_b;
};

// Runs all three formulas and compares supports.
AgreementReport formulas_agree(const HWModuleDescriptor& m, int depth);

}  // namespace hwt
