// Copyright (c) 2026 hwt developers
// SPDX-License-Identifier: Apache-2.0
#include "verify.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "character.hpp"
#include "oracle.hpp"
#include "polyhedron.hpp"
#include "weyl.hpp"

namespace hwt {

uint64_t Rng::next() {
  uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

Weight sample_lambda(Rng& rng, const std::shared_ptr<const RootSystem>& rs) {
  int n = rs->rank();
  static const std::vector<std::pair<int, int>> generic = {
      {-3, 1}, {-2, 1}, {-1, 1}, {0, 1}, {1, 1},  {2, 1},  {3, 1},
      {1, 2},  {-1, 2}, {1, 3},  {-1, 3}, {3, 2}, {-3, 2}};
  auto pick = [&](const std::vector<std::pair<int, int>>& pool) {
    auto [p, q] = pool[rng.below(pool.size())];
    return Rat(p, q);
  };
  QVec v(n);
  switch (rng.below(8)) {
    case 0:
    case 1:
      for (auto& x : v) x = pick(generic);
      break;
    case 2:  // dominant integral (walls allowed)
      for (auto& x : v) x = Rat(static_cast<long>(rng.below(3)));
      break;
    case 3:  // dominant integral regular
      for (auto& x : v) x = Rat(static_cast<long>(1 + rng.below(3)));
      break;
    case 4:  // antidominant: every coordinate <= -1
      for (auto& x : v) x = pick({{-1, 1}, {-2, 1}, {-3, 1}, {-3, 2}, {-5, 2}});
      break;
    case 5:  // wall case
      for (auto& x : v) x = pick(generic);
      v[rng.below(n)] = 0;
      break;
    case 6:  // simply-regular
      for (auto& x : v) {
        do {
          x = pick(generic);
        } while (x == 0);
      }
      break;
    default:  // small integral mix
      for (auto& x : v) x = Rat(static_cast<long>(rng.below(5))) - 2;
      break;
  }
  for (auto& x : v) x.canonicalize();
  return rs->weight(std::move(v));
}

namespace {

struct Suite {
  std::map<std::string, PropertyStat> stats;
  std::string context;

  void check(const std::string& name, bool ok) {
    auto& s = stats[name];
    s.name = name;
    if (ok) {
      ++s.pass;
    } else {
      ++s.fail;
      if (s.first_failure.empty()) s.first_failure = context;
    }
  }
};

std::vector<HWModuleDescriptor> descriptors_for(const Weight& lambda) {
  std::vector<HWModuleDescriptor> out;
  out.push_back(HWModuleDescriptor::simple(lambda));
  for (IndexSet jp : j_lambda(lambda).subsets())
    out.push_back(HWModuleDescriptor::parabolic_verma(lambda, jp));
  return out;
}

// Offsets whose full W_J-orbit stays within the truncation window.
bool wj_stable_in_safe_region(const TruncatedWeightSet& t, IndexSet J) {
  const auto& rs = t.base.root_system();
  for (const auto& k : t.support()) {
    Weight mu = t.base - rs->weight_from_root_coords(k);
    std::vector<Weight> orb = orbit(rs, J, mu);
    bool safe = true;
    std::vector<IVec> offsets;
    for (const auto& w : orb) {
      auto kk = rs->lattice_coords(t.base - w);
      if (!kk) return false;
      bool nonneg = true;
      for (int x : *kk)
        if (x < 0) nonneg = false;
      if (!nonneg || height(*kk) > t.depth) {
        safe = false;
        break;
      }
      offsets.push_back(*kk);
    }
    if (!safe) continue;
    for (const auto& kk : offsets)
      if (!t.contains(kk)) return false;
  }
  return true;
}

void verify_rootsys(Suite& suite, const std::shared_ptr<const RootSystem>& rs, Rng& rng) {
  bool crys = true;
  for (const auto& b : rs->positive_roots()) {
    Weight beta = rs->weight_from_root_coords(b);
    for (int i = 0; i < rs->rank(); ++i) {
      Rat v = 2 * rs->bilinear(beta, rs->simple_root(i)) / rs->simple_root_norms()[i];
      v.canonicalize();
      if (!is_integer(v)) crys = false;
    }
  }
  suite.check("rootsys.crystallographic_integrality", crys);

  {
    QVec sum(rs->rank(), Rat(0));
    for (const auto& b : rs->positive_roots()) {
      Weight beta = rs->weight_from_root_coords(b);
      for (int i = 0; i < rs->rank(); ++i) sum[i] += beta.coords()[i];
    }
    Weight tworho = rs->rho_all() * Rat(2);
    suite.check("rootsys.sum_positive_roots_equals_2rho", qvec_cmp(sum, tworho.coords()) == 0);
  }

  for (int t = 0; t < 4; ++t) {
    Weight l = sample_lambda(rng, rs);
    QVec c = rs->root_coords(l);
    suite.check("rootsys.root_coords_roundtrip",
                rs->weight_from_root_coords(c) == l);
    bool ok = true;
    for (int i = 0; i < rs->rank(); ++i) {
      Rat lhs = l.coroot(i);
      Rat rhs = 2 * rs->bilinear(l, rs->simple_root(i)) / rs->simple_root_norms()[i];
      rhs.canonicalize();
      if (lhs != rhs) ok = false;
    }
    suite.check("rootsys.coroot_pairing_consistency", ok);
  }
}

void verify_weyl_static(Suite& suite, const std::shared_ptr<const RootSystem>& rs,
                        const WeylGroup& W) {
  // every element permutes Phi, and length = inversion count
  std::set<QVec, QVecLess> phi;
  for (const auto& b : rs->positive_roots()) {
    Weight beta = rs->weight_from_root_coords(b);
    phi.insert(beta.coords());
    phi.insert((-beta).coords());
  }
  bool perm = true, len = true;
  for (const auto& w : W.elements()) {
    for (const auto& b : rs->positive_roots()) {
      QVec img = w.apply(rs->weight_from_root_coords(b).coords());
      if (!phi.count(img)) perm = false;
    }
    if (inversion_count(w, *rs) != w.length) len = false;
  }
  suite.check("weyl.action_permutes_roots", perm);
  suite.check("weyl.length_equals_inversions", len);
}

}  // namespace

VerifyReport run_verify(const std::shared_ptr<const RootSystem>& rs, const VerifyOptions& opt) {
  Suite suite;
  Rng rng(opt.seed);
  int n = rs->rank();
  const int depth = opt.depth;

  suite.context = "type=" + rs->name() + " seed=" + std::to_string(opt.seed);
  verify_rootsys(suite, rs, rng);
  WeylGroup W = WeylGroup::enumerate(rs, IndexSet::all(n), opt.enum_cap);
  verify_weyl_static(suite, rs, W);

  for (int s = 0; s < opt.samples; ++s) {
    Weight lambda = sample_lambda(rng, rs);
    std::string base_ctx = "type=" + rs->name() + " lambda=" + lambda.str() + " depth=" +
                           std::to_string(depth) + " seed=" + std::to_string(opt.seed) +
                           " sample=" + std::to_string(s);
    suite.context = base_ctx;

    // --- weyl, per sample ---
    {
      auto orb = orbit(rs, IndexSet::all(n), lambda, opt.enum_cap);
      suite.check("weyl.orbit_size_divides_order", W.order() % orb.size() == 0);
      size_t stab = 0;
      for (const auto& w : W.elements())
        if (w.apply(lambda) == lambda) ++stab;
      suite.check("weyl.orbit_size_times_point_stabilizer",
                  orb.size() * stab == W.order());
      bool assoc = true;
      for (int t = 0; t < 3; ++t) {
        const auto& w1 = W.elements()[rng.below(W.order())];
        const auto& w2 = W.elements()[rng.below(W.order())];
        Weight lhs = dot_action(w1, dot_action(w2, lambda));
        // compose matrices
        WeylElement w12;
        w12.word = w1.word;
        w12.word.insert(w12.word.end(), w2.word.begin(), w2.word.end());
        int found = -1;
        {
          // product matrix via application to the fundamental basis
          std::vector<long long> m(n * n);
          for (int j = 0; j < n; ++j) {
            QVec e(n, Rat(0));
            e[j] = 1;
            QVec col = w1.apply(w2.apply(e));
            for (int i = 0; i < n; ++i) m[i * n + j] = rat_to_long(col[i]).value();
          }
          found = W.find(m);
        }
        if (found < 0 || dot_action(W.elements()[found], lambda) != lhs) assoc = false;
      }
      suite.check("weyl.dot_action_associative", assoc);

      bool dom_regular = true;
      for (int i = 0; i < n; ++i)
        if (!is_nonneg_integer(lambda.coroot(i)) || lambda.coroot(i) == 0) dom_regular = false;
      if (dom_regular) {
        std::vector<QVec> pts;
        for (const auto& x : orb) pts.push_back(x.coords());
        suite.check("weyl.dominant_regular_orbit_stabilizer_full",
                    setwise_stabilizer(W, pts).size() == W.order());
      }
    }

    // --- hwmodule + polyhedron + characters, per descriptor ---
    auto descriptors = descriptors_for(lambda);
    for (size_t di = 0; di < descriptors.size(); ++di) {
      const auto& m = descriptors[di];
      suite.context = base_ctx + " class=" + m.class_str();
      AgreementReport rep = formulas_agree(m, depth);
      suite.check("hwmodule.formulas_agree", rep.agree);
      suite.check("hwmodule.decomposition_disjoint", true);  // would have thrown

      {
        TruncatedWeightSet shallow = weights_levi_shift(m, depth > 0 ? depth - 1 : 0);
        bool mono = true;
        for (const auto& k : shallow.support())
          if (!rep.b.contains(k)) mono = false;
        for (const auto& k : rep.b.support())
          if (height(k) <= shallow.depth && !shallow.contains(k)) mono = false;
        suite.check("hwmodule.depth_monotonicity", mono);
      }
      suite.check("hwmodule.weightset_WJ_stable_safe_region",
                  wj_stable_in_safe_region(rep.b, m.integrability()));

      // polyhedron invariants
      VPolyhedron red = reduce(hull_of(m, opt.enum_cap));
      HPolyhedron h = v_to_h(red);
      suite.check("polyhedron.roundtrip_vh", vpoly_equal(h_to_v(h), red));
      {
        bool sound = true;
        for (const auto& k : rep.b.support()) {
          Weight mu = lambda - rs->weight_from_root_coords(k);
          if (!contains(h, mu.coords())) sound = false;
        }
        suite.check("polyhedron.sampling_soundness", sound);
      }
      {
        int needed = 0;
        bool lattice_ok = true;
        for (const auto& v : red.vertices) {
          auto k = rs->lattice_coords(lambda - Weight(rs, v));
          if (!k) {
            lattice_ok = false;
            break;
          }
          needed = std::max(needed, height(*k));
        }
        if (lattice_ok) {
          TruncatedWeightSet deep = weights_levi_shift(m, needed);
          bool tight = true;
          for (const auto& v : red.vertices) {
            auto k = rs->lattice_coords(lambda - Weight(rs, v));
            if (!k || !deep.contains(*k)) tight = false;
          }
          suite.check("polyhedron.vertex_tightness", tight && lattice_ok);
        } else {
          suite.check("polyhedron.vertex_tightness", false);
        }
      }
      {
        auto st = weyl_stabilizer_is(m, opt.enum_cap);
        suite.check("polyhedron.stabilizer_equals_integrability",
                    st.parabolic && st.J == m.integrability());
      }
      if (simply_regular(lambda)) {
        auto rays = extremal_rays_at_vertex(m, lambda, opt.enum_cap);
        std::vector<QVec> expect;
        for (int i = 0; i < n; ++i) {
          if (m.integrability().contains(i)) continue;
          QVec d = (-rs->simple_root(i)).coords();
          canonicalize_ray(d);
          expect.push_back(std::move(d));
        }
        std::sort(expect.begin(), expect.end(), QVecLess{});
        suite.check("polyhedron.extremal_rays_at_lambda", rays == expect);
      }
      // face enumeration is the costly invariant: bound the sweep
      if (n <= 3 && di < 2) {
        auto fl = faces(m, opt.enum_cap);
        suite.check("polyhedron.face_certificates", true);  // faces() throws on failure
        suite.check("polyhedron.face_count_crosscheck",
                    fl.size() == geometric_face_count(h, red));
      }
    }

    // --- containment chain over nested J'' within J' ---
    {
      suite.context = base_ctx;
      auto jl = j_lambda(lambda);
      if (!jl.empty()) {
        auto subs = jl.subsets();
        IndexSet jp = subs[rng.below(subs.size())];
        auto subs2 = jp.subsets();
        IndexSet jpp = subs2[rng.below(subs2.size())];
        auto big = weights_levi_shift(HWModuleDescriptor::parabolic_verma(lambda, jp), depth);
        auto small = weights_levi_shift(HWModuleDescriptor::parabolic_verma(lambda, jpp), depth);
        bool contained = true;
        for (const auto& k : big.support())
          if (!small.contains(k)) contained = false;
        suite.check("hwmodule.containment_chain", contained);
      }
    }

    // --- antidominant coincidence ---
    if (antidominant(lambda)) {
      suite.context = base_ctx;
      auto simple = weights_levi_shift(HWModuleDescriptor::simple(lambda), depth);
      auto verma = weights_levi_shift(HWModuleDescriptor::verma(lambda), depth);
      bool full = simple.support_equal(verma);
      // verma weight set is the full truncated cone
      size_t expect = 1;
      for (int i = 1; i <= depth; ++i) expect = expect * (n + i) / i;  // C(depth+n, n)
      full = full && verma.size() == expect;
      suite.check("hwmodule.antidominant_verma_coincidence", full);
    }

    // --- character + oracle ---
    {
      suite.context = base_ctx;
      bool wcf_ok = wcf_condition_holds(rs, lambda, opt.enum_cap);
      if (wcf_ok) {
        FormalCharacter ch = wcf_character(lambda, depth, opt.enum_cap);
        suite.check("character.alternating_sum_nonneg", true);  // would have thrown
        auto bsupp = weights_levi_shift(HWModuleDescriptor::simple(lambda), depth);
        suite.check("character.support_matches_formula_B",
                    character_support(ch).support() == bsupp.support());
        int ocap = opt.oracle_cap < 0 ? default_oracle_depth(n) : opt.oracle_cap;
        if (n <= 3) {
          int od = std::min(depth, n <= 2 ? std::min(ocap, 6) : std::min(ocap, 4));
          ShapovalovOracle oracle(lambda, ocap);
          bool match = true;
          for (const auto& [k, c] : ch.coeffs)
            if (height(k) <= od && oracle.simple_multiplicity(k) != c) match = false;
          suite.check("character.coefficients_match_oracle", match);
        }
      }
      bool dom = true;
      for (int i = 0; i < n; ++i)
        if (!is_nonneg_integer(lambda.coroot(i))) dom = false;
      if (dom) {
        // full span of the finite module: height(lambda - w0 lambda)
        auto orb = orbit(rs, IndexSet::all(n), lambda, opt.enum_cap);
        int span = 0;
        for (const auto& w : orb) {
          auto k = rs->lattice_coords(lambda - w);
          span = std::max(span, k ? height(*k) : 0);
        }
        if (span <= 12) {
          FormalCharacter ch = wcf_character(lambda, span, opt.enum_cap);
          suite.check("character.weyl_dimension_consistency",
                      Rat(static_cast<long>(ch.coefficient_sum())) == weyl_dimension(lambda));
        }
      }
    }
    if (n <= 3) {
      suite.context = base_ctx;
      int ocap = opt.oracle_cap < 0 ? default_oracle_depth(n) : opt.oracle_cap;
      int od = std::min(depth, n <= 2 ? ocap : std::min(ocap, 4));
      ShapovalovOracle oracle(lambda, ocap);
      // gram symmetry on random words
      bool sym = true;
      for (int t = 0; t < 4; ++t) {
        LoweringWord u, v;
        IVec off(n, 0);
        int len = 1 + static_cast<int>(rng.below(std::max(1, od)));
        for (int q = 0; q < len; ++q) {
          int letter = static_cast<int>(rng.below(n));
          u.push_back(letter);
          ++off[letter];
        }
        auto words = words_for_offset(off);
        v = words[rng.below(words.size())];
        if (oracle.pairing(u, v) != oracle.pairing(v, u)) sym = false;
      }
      suite.check("oracle.gram_symmetry", sym);

      TruncatedWeightSet supp = oracle.weight_support(od);
      auto kostant = kostant_table(*rs, od);
      bool mono = true;
      for (const auto& [k, mult] : supp.entries)
        if (mult && *mult > kostant[k]) mono = false;
      suite.check("oracle.rank_monotonicity", mono);
      if (antidominant(lambda)) {
        bool full = true;
        for (const auto& [k, cnt] : kostant) {
          auto it = supp.entries.find(k);
          long long got = it == supp.entries.end() ? 0 : it->second.value_or(0);
          if (got != cnt) full = false;
        }
        suite.check("oracle.antidominant_full_rank", full);
      }
      suite.check("oracle.support_WJl_stable", wj_stable_in_safe_region(supp, j_lambda(lambda)));
      auto bsupp = weights_levi_shift(HWModuleDescriptor::simple(lambda), od);
      suite.check("hwmodule.simple_support_matches_oracle",
                  supp.support() == bsupp.support());
    }
  }

  VerifyReport report;
  report.type = rs->name();
  report.options = opt;
  for (auto& [name, st] : suite.stats) {
    report.properties.push_back(st);
    if (st.fail > 0) report.all_pass = false;
  }
  return report;
}

MinmaxReport run_minmax(const std::shared_ptr<const RootSystem>& rs, const Weight& lambda,
                        std::optional<IndexSet> jprime, long cap) {
  IndexSet jl = j_lambda(lambda);
  bool sreg = simply_regular(lambda);
  if (jprime) {
    if (!jprime->subset_of(jl))
      throw std::invalid_argument("minmax: J' = {" + jprime->str1() +
                                  "} is not a subset of J_lambda = {" + jl.str1() + "}");
    if (!sreg && !(jprime->empty() || *jprime == jl))
      throw MinmaxHypothesisError(
          "minmax hypothesis: lambda = " + lambda.str() +
          " is not simply-regular, so J' must be empty or J_lambda (= {" + jl.str1() +
          "}), got {" + jprime->str1() + "}");
  }

  std::vector<IndexSet> jps;
  if (jprime) {
    jps.push_back(*jprime);
  } else {
    for (IndexSet jp : jl.subsets())
      if (sreg || jp.empty() || jp == jl) jps.push_back(jp);
  }

  // constructible descriptors and their data, computed once
  std::vector<HWModuleDescriptor> ds;
  ds.push_back(HWModuleDescriptor::verma(lambda));
  ds.push_back(HWModuleDescriptor::simple(lambda));
  for (IndexSet jp : jl.subsets()) ds.push_back(HWModuleDescriptor::parabolic_verma(lambda, jp));

  std::vector<VPolyhedron> hulls;
  std::vector<StabilizerResult> stabs;
  for (const auto& m : ds) {
    hulls.push_back(reduce(hull_of(m, cap)));
    stabs.push_back(weyl_stabilizer_is(m, cap));
  }

  MinmaxReport report{lambda, jl, sreg, {}, true};
  for (IndexSet jp : jps) {
    MinmaxJPrime block;
    block.jprime = jp;
    VPolyhedron ref = reduce(hull_of(HWModuleDescriptor::parabolic_verma(lambda, jp), cap));
    for (size_t i = 0; i < ds.size(); ++i) {
      MinmaxCase c;
      c.descriptor = ds[i].class_str();
      c.hull_equals_reference = vpoly_equal(hulls[i], ref);
      c.stabilizer_is_wjprime = stabs[i].parabolic && stabs[i].J == jp;
      c.largest_parabolic_is_jprime = stabs[i].J == jp;
      c.equivalent = c.hull_equals_reference == c.stabilizer_is_wjprime &&
                     c.stabilizer_is_wjprime == c.largest_parabolic_is_jprime;
      if (!c.equivalent) block.all_equivalent = false;
      block.cases.push_back(std::move(c));
    }
    if (!block.all_equivalent) report.all_equivalent = false;
    report.jprimes.push_back(std::move(block));
  }
  return report;
}

}  // namespace hwt
