// Copyright (c) 2026 hwt developers
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <vector>

#include "hwmodule.hpp"
#include "rootsys.hpp"

namespace hwt {

// Default oracle depth cap by rank (spec: 8 in rank <= 2, 5 in rank 3).
int default_oracle_depth(int rank);

using LoweringWord = std::vector<int>;  // simple-root indices, 0-based

// All words with the given letter content (offset k means k_i copies of
// letter i), in lexicographic order.
std::vector<LoweringWord> words_for_offset(const IVec& offset);

// Brute-force ground truth for dim L(lambda)_{lambda - offset}: the rank of
// the contravariant Gram matrix on words of simple lowering operators. Uses
// only [e_i, f_j] = delta_ij h_i and weight bookkeeping; fully independent of
// the weight-set formulas it is used to check.
class ShapovalovOracle {
 public:
  explicit ShapovalovOracle(Weight lambda, int depth_cap = -1);  // -1 = rank default

  const Weight& lambda() const { return lambda_; }
  int depth_cap() const { return cap_; }

  // <f_u v, f_v v> with <v, v> = 1. Zero when letter contents differ.
  Rat pairing(const LoweringWord& u, const LoweringWord& v);

  // Gram matrix of one offset (rows/cols indexed by words_for_offset).
  std::vector<QVec> gram(const IVec& offset);

  // rank of the Gram matrix = dim L(lambda)_{lambda - offset}.
  int simple_multiplicity(const IVec& offset);

  // Offsets of height <= depth with positive rank, multiplicities attached.
  TruncatedWeightSet weight_support(int depth);

 private:
  Rat pairing_rec(const LoweringWord& u, const LoweringWord& v);

  Weight lambda_;
  int cap_;
  std::map<std::pair<LoweringWord, LoweringWord>, Rat> memo_;
};

// Kostant partition count by exhaustive enumeration over multisets of
// positive roots; an independent recount of the character module's table.
long long verma_multiplicity(const RootSystem& rs, const IVec& offset);

TruncatedWeightSet oracle_weight_support(const Weight& lambda, int depth, int depth_cap = -1);

}  // namespace hwt
