// Copyright (c) 2026 hwt developers
// SPDX-License-Identifier: Apache-2.0
#include "rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace hwt {

std::vector<int> IndexSet::indices() const {
  std::vector<int> out;
  for (int i = 0; i < 32; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

std::vector<int> IndexSet::indices1() const {
  auto v = indices();
  for (auto& i : v) ++i;
  return v;
}

std::string IndexSet::str1() const {
  std::string s;
  for (int i : indices1()) {
    if (!s.empty()) s += ",";
    s += std::to_string(i);
  }
  return s;
}

std::vector<IndexSet> IndexSet::subsets() const {
  std::vector<IndexSet> out;
  uint32_t m = bits;
  uint32_t s = 0;
  while (true) {
    out.push_back(IndexSet{s});
    if (s == m) break;
    s = (s - m) & m;  // next subset in increasing bit-pattern order
  }
  std::sort(out.begin(), out.end(),
            [](IndexSet a, IndexSet b) { return a.bits < b.bits; });
  return out;
}

namespace {

struct FamilyInfo {
  int min_rank;
  int max_rank;  // -1 = unbounded
};

const std::map<char, FamilyInfo> kFamilies = {
    {'A', {1, -1}}, {'B', {2, -1}}, {'C', {2, -1}}, {'D', {2, -1}},
    {'E', {6, 8}},  {'F', {4, 4}},  {'G', {2, 2}},
};

void check_component(char fam, int rank) {
  auto it = kFamilies.find(fam);
  if (it == kFamilies.end())
    throw std::invalid_argument(std::string("unknown family '") + fam +
                                "' (expected one of A,B,C,D,E,F,G)");
  const auto& info = it->second;
  if (rank < info.min_rank || (info.max_rank >= 0 && rank > info.max_rank)) {
    std::ostringstream os;
    os << "rank " << rank << " is not valid for family " << fam << " (allowed: ";
    if (info.max_rank < 0)
      os << ">= " << info.min_rank;
    else if (info.min_rank == info.max_rank)
      os << info.min_rank;
    else
      os << info.min_rank << ".." << info.max_rank;
    os << ")";
    throw std::invalid_argument(os.str());
  }
}

// Cartan matrix of one simple component; a[i][j] = alpha_j(h_i).
std::vector<std::vector<int>> component_cartan(char fam, int n) {
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  auto link = [&](int i, int j) { a[i][j] = -1; a[j][i] = -1; };
  switch (fam) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'B':  // alpha_n short
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      a[n - 1][n - 2] = -2;
      break;
    case 'C':  // alpha_n long
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      a[n - 2][n - 1] = -2;
      break;
    case 'D':
      // nodes 1..n-2 form a chain; n-1 and n both attach to n-2
      for (int i = 0; i + 1 < n - 1; ++i) link(i, i + 1);
      if (n >= 3) link(n - 3, n - 1);
      break;
    case 'E': {
      // Bourbaki: chain 1-3-4-5-...-n with 2 attached to 4
      link(0, 2);
      for (int i = 2; i + 1 < n; ++i) link(i, i + 1);
      link(1, 3);
      break;
    }
    case 'F':  // alpha_1, alpha_2 long; alpha_3, alpha_4 short
      link(0, 1);
      link(1, 2);
      link(2, 3);
      a[2][1] = -2;
      break;
    case 'G':  // alpha_1 short, alpha_2 long; highest root 3a1+2a2
      a[0][1] = -3;
      a[1][0] = -1;
      break;
  }
  return a;
}

int classical_positive_count(char fam, int n) {
  switch (fam) {
    case 'A': return n * (n + 1) / 2;
    case 'B':
    case 'C': return n * n;
    case 'D': return n * (n - 1);
    case 'E': return n == 6 ? 36 : (n == 7 ? 63 : 120);
    case 'F': return 24;
    case 'G': return 6;
  }
  return -1;
}

unsigned long classical_weyl_order(char fam, int n) {
  auto fact = [](int k) {
    unsigned long f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
  };
  switch (fam) {
    case 'A': return fact(n + 1);
    case 'B':
    case 'C': return (1ul << n) * fact(n);
    case 'D': return n >= 2 ? (1ul << (n - 1)) * fact(n) : 2;
    case 'E': return n == 6 ? 51840ul : (n == 7 ? 2903040ul : 696729600ul);
    case 'F': return 1152;
    case 'G': return 12;
  }
  return 0;
}

}  // namespace

RootSystemSpec RootSystemSpec::parse(const std::string& s) {
  RootSystemSpec spec;
  std::string tok;
  auto flush = [&]() {
    if (tok.empty()) throw std::invalid_argument("empty component in root system spec '" + s + "'");
    char fam = static_cast<char>(std::toupper(static_cast<unsigned char>(tok[0])));
    std::string num = tok.substr(1);
    if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("bad component '" + tok + "' in root system spec '" + s +
                                  "' (expected e.g. A2, B3)");
    int rank = std::stoi(num);
    check_component(fam, rank);
    spec.components.push_back({fam, rank});
    tok.clear();
  };
  for (char c : s) {
    if (c == 'x' || c == 'X') {
      flush();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      tok += c;
    }
  }
  flush();
  if (spec.total_rank() > 24)
    throw std::invalid_argument("total rank " + std::to_string(spec.total_rank()) +
                                " exceeds the supported maximum of 24");
  return spec;
}

std::string RootSystemSpec::str() const {
  std::string s;
  for (size_t i = 0; i < components.size(); ++i) {
    if (i) s += "x";
    s += components[i].family;
    s += std::to_string(components[i].rank);
  }
  return s;
}

int RootSystemSpec::total_rank() const {
  int r = 0;
  for (auto& c : components) r += c.rank;
  return r;
}

std::shared_ptr<const RootSystem> RootSystem::build(const std::string& spec) {
  return build(RootSystemSpec::parse(spec));
}

std::shared_ptr<const RootSystem> RootSystem::build(const RootSystemSpec& spec) {
  if (spec.components.empty()) throw std::invalid_argument("empty root system spec");
  for (auto& c : spec.components) check_component(c.family, c.rank);

  auto rs = std::shared_ptr<RootSystem>(new RootSystem());
  rs->spec_ = spec;
  rs->name_ = spec.str();
  rs->rank_ = spec.total_rank();
  int n = rs->rank_;

  // block-diagonal Cartan matrix
  rs->cartan_.assign(n, std::vector<int>(n, 0));
  int off = 0;
  for (auto& c : spec.components) {
    auto a = component_cartan(c.family, c.rank);
    for (int i = 0; i < c.rank; ++i)
      for (int j = 0; j < c.rank; ++j) rs->cartan_[off + i][off + j] = a[i][j];
    off += c.rank;
  }

  // Symmetrizing weights d_i with short roots at d=1: propagate ratios
  // d_j/d_i = a_ij/a_ji along Dynkin edges, then scale each component so
  // min d = 1. (alpha_i, alpha_i) = 2 d_i.
  rs->norms_.assign(n, Rat(0));
  off = 0;
  for (auto& c : spec.components) {
    int m = c.rank;
    std::vector<Rat> d(m, Rat(0));
    d[0] = 1;
    std::vector<int> stack = {0};
    while (!stack.empty()) {
      int i = stack.back();
      stack.pop_back();
      for (int j = 0; j < m; ++j) {
        if (j == i || rs->cartan_[off + i][off + j] == 0 || d[j] != 0) continue;
        d[j] = d[i] * Rat(rs->cartan_[off + i][off + j]) / Rat(rs->cartan_[off + j][off + i]);
        stack.push_back(j);
      }
    }
    Rat dmin = d[0];
    for (auto& x : d) {
      if (x == 0) throw std::logic_error("disconnected component in Cartan data");
      if (x < dmin) dmin = x;
    }
    for (int i = 0; i < m; ++i) rs->norms_[off + i] = 2 * d[i] / dmin;
    off += c.rank;
  }

  rs->form_.assign(n, QVec(n, Rat(0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      rs->form_[i][j] = rs->norms_[i] / 2 * Rat(rs->cartan_[i][j]);
      rs->form_[i][j].canonicalize();
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (rs->form_[i][j] != rs->form_[j][i]) throw std::logic_error("form matrix not symmetric");

  // exact Cartan inverse, column by column
  {
    std::vector<QVec> a(n, QVec(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a[i][j] = Rat(rs->cartan_[i][j]);
    rs->cartan_inv_.assign(n, QVec(n, Rat(0)));
    for (int j = 0; j < n; ++j) {
      QVec e(n, Rat(0));
      e[j] = 1;
      auto col = solve_linear(a, e);
      if (!col) throw std::logic_error("Cartan matrix not invertible");
      for (int i = 0; i < n; ++i) rs->cartan_inv_[i][j] = (*col)[i];
    }
  }

  // Positive roots: closure of the simple roots under simple reflections,
  // keeping vectors with nonnegative coordinates.
  {
    std::set<IVec> seen;
    std::vector<IVec> queue;
    for (int i = 0; i < n; ++i) {
      IVec e(n, 0);
      e[i] = 1;
      seen.insert(e);
      queue.push_back(e);
    }
    while (!queue.empty()) {
      IVec b = queue.back();
      queue.pop_back();
      for (int i = 0; i < n; ++i) {
        // s_i(beta): c_i -= beta(h_i)
        int pairing = 0;
        for (int j = 0; j < n; ++j) pairing += rs->cartan_[i][j] * b[j];
        IVec nb = b;
        nb[i] -= pairing;
        if (nb[i] < 0) continue;
        if (seen.insert(nb).second) queue.push_back(nb);
      }
    }
    rs->pos_roots_.assign(seen.begin(), seen.end());
    std::sort(rs->pos_roots_.begin(), rs->pos_roots_.end(), HeightLexLess{});
    int expect = 0;
    for (auto& c : spec.components) expect += classical_positive_count(c.family, c.rank);
    if (static_cast<int>(rs->pos_roots_.size()) != expect)
      throw std::logic_error("positive root count mismatch for " + rs->name_);
  }

  return rs;
}

Weight RootSystem::weight(QVec fund) const {
  if (static_cast<int>(fund.size()) != rank_)
    throw std::invalid_argument("weight coordinate vector has length " +
                                std::to_string(fund.size()) + ", expected " +
                                std::to_string(rank_));
  return Weight(shared_from_this(), std::move(fund));
}

Weight RootSystem::zero() const { return weight(QVec(rank_, Rat(0))); }

Weight RootSystem::fundamental_weight(int i) const {
  QVec v(rank_, Rat(0));
  v[i] = 1;
  return weight(std::move(v));
}

Weight RootSystem::simple_root(int i) const {
  QVec v(rank_);
  for (int j = 0; j < rank_; ++j) v[j] = Rat(cartan_[j][i]);
  return weight(std::move(v));
}

Weight RootSystem::weight_from_root_coords(const QVec& c) const {
  QVec v(rank_, Rat(0));
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) v[i] += Rat(cartan_[i][j]) * c[j];
  return weight(std::move(v));
}

Weight RootSystem::weight_from_root_coords(const IVec& c) const {
  QVec q(c.size());
  for (size_t i = 0; i < c.size(); ++i) q[i] = c[i];
  return weight_from_root_coords(q);
}

Weight RootSystem::rho(IndexSet J) const {
  QVec v(rank_, Rat(0));
  for (int i : J.indices()) v[i] = 1;
  return weight(std::move(v));
}

Weight RootSystem::rho_all() const { return rho(IndexSet::all(rank_)); }

QVec RootSystem::root_coords(const Weight& mu) const {
  QVec c(rank_, Rat(0));
  const QVec& m = mu.coords();
  for (int i = 0; i < rank_; ++i) {
    for (int j = 0; j < rank_; ++j) c[i] += cartan_inv_[i][j] * m[j];
    c[i].canonicalize();
  }
  return c;
}

std::optional<IVec> RootSystem::lattice_coords(const Weight& mu) const {
  QVec c = root_coords(mu);
  IVec k(rank_);
  for (int i = 0; i < rank_; ++i) {
    auto v = rat_to_long(c[i]);
    if (!v) return std::nullopt;
    k[i] = static_cast<int>(*v);
  }
  return k;
}

Rat RootSystem::bilinear(const Weight& mu, const Weight& nu) const {
  require_same_root_system(mu, nu);
  QVec c = root_coords(mu);
  Rat s = 0;
  for (int i = 0; i < rank_; ++i) s += c[i] * norms_[i] / 2 * nu.coords()[i];
  s.canonicalize();
  return s;
}

Rat RootSystem::root_norm(const IVec& beta) const {
  Rat s = 0;
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j)
      if (beta[i] != 0 && beta[j] != 0) s += Rat(beta[i]) * Rat(beta[j]) * form_[i][j];
  s.canonicalize();
  return s;
}

std::vector<IVec> RootSystem::positive_roots_supported_on(IndexSet J) const {
  std::vector<IVec> out;
  for (const auto& b : pos_roots_) {
    bool ok = true;
    for (int i = 0; i < rank_ && ok; ++i)
      if (b[i] != 0 && !J.contains(i)) ok = false;
    if (ok) out.push_back(b);
  }
  return out;
}

unsigned long RootSystem::weyl_order() const {
  unsigned long o = 1;
  for (auto& c : spec_.components) o *= classical_weyl_order(c.family, c.rank);
  return o;
}

Weight RootSystem::parse_weight(const std::string& csv) const {
  QVec v;
  std::string tok;
  std::istringstream is(csv);
  while (std::getline(is, tok, ',')) {
    auto q = rat_parse(tok);
    if (!q)
      throw std::invalid_argument("bad rational '" + tok + "' in weight '" + csv +
                                  "' (expected p or p/q)");
    v.push_back(*q);
  }
  if (static_cast<int>(v.size()) != rank_)
    throw std::invalid_argument("weight '" + csv + "' has " + std::to_string(v.size()) +
                                " coordinates, expected " + std::to_string(rank_));
  return weight(std::move(v));
}

Weight::Weight(std::shared_ptr<const RootSystem> rs, QVec fund)
    : rs_(std::move(rs)), fund_(std::move(fund)) {
  for (auto& q : fund_) q.canonicalize();
}

void require_same_root_system(const Weight& a, const Weight& b) {
  if (a.root_system() != b.root_system())
    throw std::invalid_argument("weights belong to different root systems");
}

Weight Weight::operator+(const Weight& o) const {
  require_same_root_system(*this, o);
  QVec v = fund_;
  for (size_t i = 0; i < v.size(); ++i) v[i] += o.fund_[i];
  return Weight(rs_, std::move(v));
}

Weight Weight::operator-(const Weight& o) const {
  require_same_root_system(*this, o);
  QVec v = fund_;
  for (size_t i = 0; i < v.size(); ++i) v[i] -= o.fund_[i];
  return Weight(rs_, std::move(v));
}

Weight Weight::operator*(const Rat& c) const {
  QVec v = fund_;
  for (auto& x : v) x *= c;
  return Weight(rs_, std::move(v));
}

Weight Weight::operator-() const { return *this * Rat(-1); }

bool Weight::operator==(const Weight& o) const {
  return rs_ == o.rs_ && qvec_cmp(fund_, o.fund_) == 0;
}

bool Weight::is_zero() const {
  for (auto& q : fund_)
    if (q != 0) return false;
  return true;
}

}  // namespace hwt
