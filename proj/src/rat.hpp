// Copyright (c) 2026 hwt developers
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hwt {

using Rat = mpq_class;
using QVec = std::vector<Rat>;
using IVec = std::vector<int>;  // root-lattice offsets and other small integer vectors

/// Thrown when an enumeration or depth cap would be exceeded.
struct CapExceededError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Thrown when the Weyl-character-formula hypothesis S_lambda = W_{J_lambda} fails.
struct WcfHypothesisError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Thrown when the min/max-analysis hypothesis (simply-regular lambda, or
/// J' in {empty, J_lambda}) is violated.
struct MinmaxHypothesisError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Canonical rational formatting: "p" when the denominator is 1, else "p/q".
std::string rat_str(const Rat& q);
std::string qvec_str(const QVec& v);  // comma-separated rat_str

// Parses "p" or "p/q" (optional leading '-'); rejects everything else.
std::optional<Rat> rat_parse(const std::string& s);

bool is_integer(const Rat& q);
bool is_nonneg_integer(const Rat& q);
// Value as long when q is an integer that fits.
std::optional<long> rat_to_long(const Rat& q);

Rat dot(const QVec& a, const QVec& b);

int height(const IVec& k);

// Order by height, then lexicographically. Canonical order for weight offsets.
struct HeightLexLess {
  bool operator()(const IVec& a, const IVec& b) const;
};

// Lexicographic order on rational vectors.
int qvec_cmp(const QVec& a, const QVec& b);
struct QVecLess {
  bool operator()(const QVec& a, const QVec& b) const { return qvec_cmp(a, b) < 0; }
};

// Scales v by a positive rational so entries become coprime integers.
// Direction (sign) is preserved; v must be nonzero.
void canonicalize_ray(QVec& v);
// Same, then flips sign so the first nonzero entry is positive (for lines).
void canonicalize_line(QVec& v);

// Exact rank. Rows are denominator-cleared and reduced by fraction-free
// (Bareiss) elimination over the integers.
int rank_of(std::vector<QVec> rows);

// Solves the square system a*x = b exactly; nullopt when singular.
std::optional<QVec> solve_linear(std::vector<QVec> a, QVec b);

}  // namespace hwt
