// Copyright (c) 2026 hwt developers
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>

#include "hwmodule.hpp"
#include "rootsys.hpp"

namespace hwt {

// Height-truncated formal character: offset (root coordinates of lambda - mu)
// to integer coefficient. Zero coefficients are not stored.
struct FormalCharacter {
  Weight base;
  int depth = 0;
  std::map<IVec, long long, HeightLexLess> coeffs;

  long long at(const IVec& k) const {
    auto it = coeffs.find(k);
    return it == coeffs.end() ? 0 : it->second;
  }
  long long coefficient_sum() const;
};

// Kostant partition counts for all offsets of height <= depth.
std::map<IVec, long long, HeightLexLess> kostant_table(const RootSystem& rs, int depth);

// ch M(lambda): coefficient at offset k is the Kostant partition count of k.
FormalCharacter verma_character(const Weight& lambda, int depth);

// Extended Weyl character formula: sum over w in W_{J_lambda} of
// (-1)^l(w) ch M(w . lambda), truncated. Refuses (WcfHypothesisError) unless
// {w : w . lambda <= lambda} equals W_{J_lambda}; a negative coefficient in
// the result throws std::logic_error.
FormalCharacter wcf_character(const Weight& lambda, int depth, long cap = kDefaultEnumCap);

// Offsets with positive coefficient, multiplicities attached.
TruncatedWeightSet character_support(const FormalCharacter& c);

// Weyl dimension formula: product over positive roots of
// (lambda + rho, alpha)/(rho, alpha). Requires dominant integral lambda.
Rat weyl_dimension(const Weight& lambda);

}  // namespace hwt
