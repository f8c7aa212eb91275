// Copyright (c) 2026 hwt developers
// SPDX-License-Identifier: Apache-2.0
#include "rat.hpp"

#include <algorithm>
#include <cctype>

namespace hwt {

std::string rat_str(const Rat& q) {
  Rat c = q;
  c.canonicalize();
  std::string s = c.get_num().get_str();
  if (c.get_den() != 1) {
    s += "/";
    s += c.get_den().get_str();
  }
  return s;
}

std::string qvec_str(const QVec& v) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += rat_str(v[i]);
  }
  return out;
}

std::optional<Rat> rat_parse(const std::string& s) {
  // strict grammar: -?digits(/digits)?
  size_t i = 0;
  auto digits = [&](size_t& p) {
    size_t start = p;
    while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
    return p > start;
  };
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (!digits(i)) return std::nullopt;
  if (i < s.size()) {
    if (s[i] != '/') return std::nullopt;
    ++i;
    size_t den_start = i;
    if (!digits(i) || i != s.size()) return std::nullopt;
    if (s.substr(den_start) == std::string(i - den_start, '0')) return std::nullopt;
  }
  Rat q(s);
  q.canonicalize();
  return q;
}

bool is_integer(const Rat& q) { return q.get_den() == 1; }

bool is_nonneg_integer(const Rat& q) { return q.get_den() == 1 && q.get_num() >= 0; }

std::optional<long> rat_to_long(const Rat& q) {
  if (q.get_den() != 1 || !q.get_num().fits_slong_p()) return std::nullopt;
  return q.get_num().get_si();
}

Rat dot(const QVec& a, const QVec& b) {
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

int height(const IVec& k) {
  int h = 0;
  for (int x : k) h += x;
  return h;
}

bool HeightLexLess::operator()(const IVec& a, const IVec& b) const {
  int ha = height(a), hb = height(b);
  if (ha != hb) return ha < hb;
  return a < b;
}

int qvec_cmp(const QVec& a, const QVec& b) {
  size_t n = std::min(a.size(), b.size());
  for (size_t i = 0; i < n; ++i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c;
  }
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  return 0;
}

void canonicalize_ray(QVec& v) {
  mpz_class l = 1;
  for (auto& q : v) {
    q.canonicalize();
    mpz_class d = q.get_den();
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    l = l / g * d;
  }
  mpz_class g = 0;
  for (auto& q : v) {
    q *= Rat(l);
    q.canonicalize();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), q.get_num().get_mpz_t());
  }
  if (g == 0) throw std::logic_error("canonicalize_ray: zero vector");
  for (auto& q : v) {
    q /= Rat(g);
    q.canonicalize();
  }
}

void canonicalize_line(QVec& v) {
  canonicalize_ray(v);
  for (auto& q : v) {
    if (q != 0) {
      if (q < 0)
        for (auto& w : v) w = -w;
      break;
    }
  }
}

int rank_of(std::vector<QVec> rows) {
  if (rows.empty()) return 0;
  size_t nr = rows.size(), nc = rows[0].size();
  // clear denominators row by row
  std::vector<std::vector<mpz_class>> a(nr, std::vector<mpz_class>(nc));
  for (size_t i = 0; i < nr; ++i) {
    mpz_class l = 1;
    for (auto& q : rows[i]) {
      q.canonicalize();
      mpz_class g;
      mpz_class d = q.get_den();
      mpz_gcd(g.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
      l = l / g * d;
    }
    for (size_t j = 0; j < nc; ++j) {
      Rat q = rows[i][j] * Rat(l);
      q.canonicalize();
      a[i][j] = q.get_num();
    }
  }
  // Bareiss fraction-free elimination
  mpz_class prev = 1;
  size_t r = 0;
  for (size_t c = 0; c < nc && r < nr; ++c) {
    size_t p = r;
    while (p < nr && a[p][c] == 0) ++p;
    if (p == nr) continue;
    std::swap(a[p], a[r]);
    for (size_t i = r + 1; i < nr; ++i) {
      for (size_t j = c + 1; j < nc; ++j) {
        mpz_class t = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return static_cast<int>(r);
}

std::optional<QVec> solve_linear(std::vector<QVec> a, QVec b) {
  size_t n = a.size();
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(a[p], a[c]);
    std::swap(b[p], b[c]);
    Rat inv = a[c][c];
    for (size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      Rat f = a[i][c] / inv;
      for (size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
      b[i] -= f * b[c];
    }
  }
  QVec x(n);
  for (size_t i = 0; i < n; ++i) {
    x[i] = b[i] / a[i][i];
    x[i].canonicalize();
  }
  return x;
}

}  // namespace hwt
