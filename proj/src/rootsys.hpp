// Copyright (c) 2026 hwt developers
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "rat.hpp"

namespace hwt {

// Subset of the simple-root index set I = {0..rank-1} (0-based internally;
// 1-based only in strings and JSON).
struct IndexSet {
  uint32_t bits = 0;

  static IndexSet all(int n) { return IndexSet{n >= 32 ? ~0u : ((1u << n) - 1u)}; }
  static IndexSet single(int i) { return IndexSet{1u << i}; }

  bool contains(int i) const { return (bits >> i) & 1u; }
  void add(int i) { bits |= 1u << i; }
  bool empty() const { return bits == 0; }
  int size() const { return __builtin_popcount(bits); }
  bool subset_of(IndexSet o) const { return (bits & ~o.bits) == 0; }
  IndexSet intersect(IndexSet o) const { return IndexSet{bits & o.bits}; }
  IndexSet unite(IndexSet o) const { return IndexSet{bits | o.bits}; }
  IndexSet complement_in(int n) const { return IndexSet{all(n).bits & ~bits}; }
  bool operator==(const IndexSet& o) const { return bits == o.bits; }
  bool operator!=(const IndexSet& o) const { return bits != o.bits; }

  std::vector<int> indices() const;   // ascending, 0-based
  std::vector<int> indices1() const;  // ascending, 1-based (I/O)
  std::string str1() const;           // "1,3" (1-based), "" when empty
  // All subsets of this set, ascending by bit pattern.
  std::vector<IndexSet> subsets() const;
};

struct SimpleComponent {
  char family;  // 'A'..'G'
  int rank;
};

struct RootSystemSpec {
  std::vector<SimpleComponent> components;

  // Parses strings like "A2", "B3", "A1xA1" (case-insensitive). Throws
  // std::invalid_argument with a description on bad input.
  static RootSystemSpec parse(const std::string& s);
  std::string str() const;  // canonical form, e.g. "A1xA1"
  int total_rank() const;
};

class Weight;

class RootSystem : public std::enable_shared_from_this<RootSystem> {
 public:
  static std::shared_ptr<const RootSystem> build(const RootSystemSpec& spec);
  static std::shared_ptr<const RootSystem> build(const std::string& spec);

  int rank() const { return rank_; }
  const std::string& name() const { return name_; }
  const std::vector<SimpleComponent>& components() const { return spec_.components; }

  // cartan()[i][j] = a_ij = alpha_j(h_i); column j is alpha_j in the
  // fundamental basis.
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }
  // Positive roots in simple-root coordinates, sorted by height then lex.
  const std::vector<IVec>& positive_roots() const { return pos_roots_; }
  // (alpha_i, alpha_i), normalized to 2 on short roots per component.
  const QVec& simple_root_norms() const { return norms_; }
  // Symmetrized form matrix B_ij = (alpha_i, alpha_j).
  const std::vector<QVec>& form_matrix() const { return form_; }

  Weight weight(QVec fundamental_coords) const;
  Weight zero() const;
  Weight fundamental_weight(int i) const;
  Weight simple_root(int i) const;
  // Weight from root coordinates: sum c_i alpha_i.
  Weight weight_from_root_coords(const QVec& c) const;
  Weight weight_from_root_coords(const IVec& c) const;
  // rho_J = sum of fundamental weights over J.
  Weight rho(IndexSet J) const;
  Weight rho_all() const;

  // Coordinates of mu in the simple-root basis (exact inverse of the Cartan
  // basis change; total on this representation).
  QVec root_coords(const Weight& mu) const;
  // Root coordinates when they are all integers, else nullopt.
  std::optional<IVec> lattice_coords(const Weight& mu) const;

  Rat bilinear(const Weight& mu, const Weight& nu) const;
  // (beta, beta) for beta given in root coordinates.
  Rat root_norm(const IVec& beta) const;

  // {beta in Phi+ : supp(beta) within J}.
  std::vector<IVec> positive_roots_supported_on(IndexSet J) const;

  // Classical Weyl group order of this (product over components).
  unsigned long weyl_order() const;

  // Weight parsed from comma-separated rationals in the fundamental basis.
  Weight parse_weight(const std::string& csv) const;

 private:
  RootSystem() = default;

  RootSystemSpec spec_;
  std::string name_;
  int rank_ = 0;
  std::vector<std::vector<int>> cartan_;
  std::vector<QVec> cartan_inv_;  // row-major exact inverse
  QVec norms_;
  std::vector<QVec> form_;
  std::vector<IVec> pos_roots_;
};

class Weight {
 public:
  Weight() = default;
  Weight(std::shared_ptr<const RootSystem> rs, QVec fund);

  const std::shared_ptr<const RootSystem>& root_system() const { return rs_; }
  const QVec& coords() const { return fund_; }
  int rank() const { return static_cast<int>(fund_.size()); }

  // lambda(h_i) = 2(lambda, alpha_i)/(alpha_i, alpha_i); the i-th coordinate.
  const Rat& coroot(int i) const { return fund_[i]; }

  Weight operator+(const Weight& o) const;
  Weight operator-(const Weight& o) const;
  Weight operator*(const Rat& c) const;
  Weight operator-() const;
  bool operator==(const Weight& o) const;
  bool operator!=(const Weight& o) const { return !(*this == o); }

  bool is_zero() const;
  std::string str() const { return qvec_str(fund_); }

 private:
  std::shared_ptr<const RootSystem> rs_;
  QVec fund_;
};

// Throws std::invalid_argument when the two weights live on different
// RootSystem instances.
void require_same_root_system(const Weight& a, const Weight& b);

}  // namespace hwt
