// Copyright (c) 2026 hwt developers
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hwmodule.hpp"
#include "rootsys.hpp"

namespace hwt {

// Deterministic splitmix64 stream; identical across platforms for a given
// seed, unlike the unspecified std:: distributions.
struct Rng {
  uint64_t state;
  explicit Rng(uint64_t seed) : state(seed) {}
  uint64_t next();
  uint64_t below(uint64_t n) { return next() % n; }
};

// Seeded random weight mixing dominant-integral, antidominant, simply-regular
// and wall strata; coordinates from {-3..3} and {±1/2, ±1/3, ±3/2}.
Weight sample_lambda(Rng& rng, const std::shared_ptr<const RootSystem>& rs);

struct VerifyOptions {
  int samples = 10;
  uint64_t seed = 1;
  int depth = 4;
  long enum_cap = kDefaultEnumCap;
  int oracle_cap = -1;  // -1 = rank default
};

struct PropertyStat {
  std::string name;
  int pass = 0;
  int fail = 0;
  std::string first_failure;  // minimal reproducer, empty when all pass
};

struct VerifyReport {
  std::string type;
  VerifyOptions options;
  std::vector<PropertyStat> properties;
  bool all_pass = true;
};

// Runs the per-module invariant suite on seeded samples.
VerifyReport run_verify(const std::shared_ptr<const RootSystem>& rs, const VerifyOptions& opt);

struct MinmaxCase {
  std::string descriptor;          // class string
  bool hull_equals_reference = false;   // (1)
  bool stabilizer_is_wjprime = false;   // (2)
  bool largest_parabolic_is_jprime = false;  // (3)
  bool equivalent = false;         // the three agree
};

struct MinmaxJPrime {
  IndexSet jprime;
  std::vector<MinmaxCase> cases;
  bool all_equivalent = true;
};

struct MinmaxReport {
  Weight lambda;
  IndexSet jlambda;
  bool lambda_simply_regular = false;
  std::vector<MinmaxJPrime> jprimes;
  bool all_equivalent = true;
};

// Checks the equivalences (1) hull = hull of M(lambda,J'), (2) hull stabilizer
// = W_{J'}, (3) largest parabolic preserving the hull = W_{J'}, across every
// constructible descriptor, for each admissible J'. Hypothesis: lambda
// simply-regular, or J' in {empty, J_lambda}; violation of an explicitly
// requested J' throws MinmaxHypothesisError.
MinmaxReport run_minmax(const std::shared_ptr<const RootSystem>& rs, const Weight& lambda,
                        std::optional<IndexSet> jprime, long cap = kDefaultEnumCap);

}  // namespace hwt
