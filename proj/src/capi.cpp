// Copyright (c) 2026 hwt developers
// SPDX-License-Identifier: Apache-2.0
#include "hwt/hwt.h"

#include <cstdlib>
#include <cstring>

#include "character.hpp"
#include "hwmodule.hpp"
#include "jsonio.hpp"
#include "oracle.hpp"
#include "polyhedron.hpp"
#include "verify.hpp"
#include "weyl.hpp"

using namespace hwt;

struct hwt_rootsys {
  std::shared_ptr<const RootSystem> rs;
  long enum_cap = kDefaultEnumCap;
  int oracle_cap = -1;
};

struct hwt_module {
  HWModuleDescriptor m;
  long enum_cap;
  int oracle_cap;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

// Runs fn, translating exceptions to statuses. fn may set *out_json itself
// and return a non-OK status (diagnostic reports).
template <typename F>
hwt_status guard(F&& fn) {
  try {
    return fn();
  } catch (const CapExceededError& e) {
    g_last_error = e.what();
    return HWT_ERR_CAP;
  } catch (const WcfHypothesisError& e) {
    g_last_error = e.what();
    return HWT_ERR_WCF_HYPOTHESIS;
  } catch (const MinmaxHypothesisError& e) {
    g_last_error = e.what();
    return HWT_ERR_MINMAX_HYPOTHESIS;
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return HWT_ERR_PARSE;
  } catch (const std::logic_error& e) {
    g_last_error = std::string("internal invariant failed: ") + e.what();
    return HWT_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return HWT_ERR_INTERNAL;
  }
}

Json module_spec_json(const HWModuleDescriptor& m, int depth = -1) {
  Json spec;
  spec["type"] = m.lambda().root_system()->name();
  spec["lambda"] = m.lambda().str();
  spec["class"] = m.class_str();
  if (depth >= 0) spec["depth"] = depth;
  return spec;
}

Json stabilizer_json(const StabilizerResult& st, const WeylGroup& W) {
  Json j;
  j["parabolic"] = st.parabolic;
  j["J"] = indexset_json(st.J);
  j["order"] = st.order;
  Json elems = Json::array();
  for (size_t i : st.elements) elems.push_back(W.elements()[i].word_str());
  j["elements"] = elems;
  return j;
}

hwt_status emit(char** out, const Json& j) {
  *out = dup_string(j.dump(2) + "\n");
  return HWT_OK;
}

}  // namespace

extern "C" {

const char* hwt_version(void) { return HWT_VERSION_STRING; }

const char* hwt_last_error(void) { return g_last_error.c_str(); }

void hwt_string_free(char* s) { std::free(s); }

hwt_status hwt_rootsys_create(const char* type_spec, hwt_rootsys** out) {
  *out = nullptr;
  return guard([&]() {
    if (!type_spec) throw std::invalid_argument("type_spec is null");
    auto rs = RootSystem::build(type_spec);
    *out = new hwt_rootsys{rs};
    return HWT_OK;
  });
}

void hwt_rootsys_free(hwt_rootsys* rs) { delete rs; }

int hwt_rootsys_rank(const hwt_rootsys* rs) { return rs ? rs->rs->rank() : -1; }

hwt_status hwt_rootsys_json(const hwt_rootsys* rs, char** out_json) {
  return guard([&]() {
    return emit(out_json, envelope("rootsys", Json{{"type", rs->rs->name()}},
                                   rootsys_json(*rs->rs)));
  });
}

void hwt_rootsys_set_enum_cap(hwt_rootsys* rs, long cap) {
  if (rs && cap > 0) rs->enum_cap = cap;
}

void hwt_rootsys_set_oracle_depth(hwt_rootsys* rs, int depth_cap) {
  if (rs && depth_cap >= 0) rs->oracle_cap = depth_cap;
}

hwt_status hwt_module_create(const hwt_rootsys* rs, const char* lambda_csv,
                             const char* class_spec, hwt_module** out) {
  *out = nullptr;
  return guard([&]() {
    if (!rs || !lambda_csv || !class_spec) throw std::invalid_argument("null argument");
    Weight lambda = rs->rs->parse_weight(lambda_csv);
    auto m = HWModuleDescriptor::parse(lambda, class_spec);
    *out = new hwt_module{std::move(m), rs->enum_cap, rs->oracle_cap};
    return HWT_OK;
  });
}

void hwt_module_free(hwt_module* m) { delete m; }

hwt_status hwt_weights_json(const hwt_module* m, int depth, const char* formulas,
                            char** out_json) {
  return guard([&]() {
    if (depth < 0) throw std::invalid_argument("depth must be nonnegative");
    std::string which = formulas ? formulas : "all";
    Json spec = module_spec_json(m->m, depth);
    spec["formulas"] = which;
    Json result;
    bool disagree = false;
    if (which == "all") {
      AgreementReport rep = formulas_agree(m->m, depth);
      Json f;
      f["A"] = tws_json(rep.a);
      f["B"] = tws_json(rep.b);
      f["C"] = tws_json(rep.c);
      result["formulas"] = f;
      result["agree"] = rep.agree;
      if (!rep.agree) {
        Json d;
        auto dump = [](const std::vector<IVec>& v) {
          Json a = Json::array();
          for (const auto& k : v) a.push_back(ivec_json(k));
          return a;
        };
        d["a_not_b"] = dump(rep.a_not_b);
        d["b_not_a"] = dump(rep.b_not_a);
        d["b_not_c"] = dump(rep.b_not_c);
        d["c_not_b"] = dump(rep.c_not_b);
        result["differences"] = d;
        disagree = true;
      }
    } else if (which == "A" || which == "B" || which == "C") {
      TruncatedWeightSet t = which == "A"   ? weights_hull_intersection(m->m, depth)
                             : which == "B" ? weights_levi_shift(m->m, depth)
                                            : weights_integrable_decomposition(m->m, depth);
      Json f;
      f[which] = tws_json(t);
      result["formulas"] = f;
      result["agree"] = nullptr;
    } else {
      throw std::invalid_argument("formulas must be one of A, B, C, all (got '" + which + "')");
    }
    emit(out_json, envelope("weights", spec, result));
    if (disagree) {
      g_last_error = "weight-set formulas disagree (see the differences field)";
      return HWT_ERR_DISAGREE;
    }
    return HWT_OK;
  });
}

hwt_status hwt_hull_json(const hwt_module* m, char** out_json) {
  return guard([&]() {
    const auto& rs = m->m.lambda().root_system();
    VPolyhedron gen = hull_of(m->m, m->enum_cap);
    VPolyhedron red = reduce(gen);
    HPolyhedron h = v_to_h(red);
    WeylGroup W = WeylGroup::enumerate(rs, IndexSet::all(rs->rank()), m->enum_cap);
    StabilizerResult st = weyl_stabilizer_is(m->m, m->enum_cap);

    Json result;
    result["generators"] = vpoly_json(gen, *rs);
    result["reduced"] = vpoly_json(red, *rs);
    result["inequalities"] = hpoly_json(h);
    result["stabilizer"] = stabilizer_json(st, W);
    bool lambda_is_vertex = false;
    for (const auto& v : red.vertices)
      if (qvec_cmp(v, m->m.lambda().coords()) == 0) lambda_is_vertex = true;
    if (lambda_is_vertex) {
      Json rays = Json::array();
      for (const auto& r : extremal_rays_at_vertex(m->m, m->m.lambda(), m->enum_cap)) {
        QVec rc = rs->root_coords(Weight(rs, r));
        canonicalize_ray(rc);
        rays.push_back(qvec_json(rc));
      }
      result["extremal_rays_at_lambda"] = rays;
    } else {
      result["extremal_rays_at_lambda"] = nullptr;
    }
    return emit(out_json, envelope("hull", module_spec_json(m->m), result));
  });
}

hwt_status hwt_hull_off(const hwt_module* m, const char* box_radius, char** out_off) {
  return guard([&]() {
    auto r = rat_parse(box_radius ? box_radius : "");
    if (!r) throw std::invalid_argument("box radius must be a rational like 5 or 7/2");
    *out_off = dup_string(hull_off(m->m, *r, m->enum_cap));
    return HWT_OK;
  });
}

hwt_status hwt_faces_json(const hwt_module* m, char** out_json) {
  return guard([&]() {
    const auto& rs = m->m.lambda().root_system();
    auto fl = faces(m->m, m->enum_cap);
    VPolyhedron red = reduce(hull_of(m->m, m->enum_cap));
    HPolyhedron h = v_to_h(red);

    Json result;
    result["count"] = fl.size();
    std::map<int, int> bydim;
    for (const auto& f : fl) ++bydim[f.dimension];
    Json bd;
    for (auto& [d, c] : bydim) bd[std::to_string(d)] = c;
    result["by_dimension"] = bd;
    result["geometric_count"] = geometric_face_count(h, red);
    Json farr = Json::array();
    for (const auto& f : fl) {
      Json e;
      e["dim"] = f.dimension;
      Json labels = Json::array();
      for (const auto& [w, J] : f.labels) {
        Json l;
        l["w"] = w;
        l["J"] = indexset_json(J);
        labels.push_back(l);
      }
      e["labels"] = labels;
      e["realization"] = vpoly_json(f.realization, *rs);
      farr.push_back(e);
    }
    result["faces"] = farr;
    return emit(out_json, envelope("faces", module_spec_json(m->m), result));
  });
}

hwt_status hwt_character_json(const hwt_rootsys* rs, const char* lambda_csv, int depth,
                              int check_oracle, char** out_json) {
  return guard([&]() {
    if (depth < 0) throw std::invalid_argument("depth must be nonnegative");
    Weight lambda = rs->rs->parse_weight(lambda_csv);
    Json spec;
    spec["type"] = rs->rs->name();
    spec["lambda"] = lambda.str();
    spec["depth"] = depth;
    spec["check_oracle"] = check_oracle != 0;

    FormalCharacter ch = wcf_character(lambda, depth, rs->enum_cap);
    Json result;
    result["character"] = character_json(ch);
    result["coefficient_sum"] = ch.coefficient_sum();
    bool dom = true;
    for (int i = 0; i < rs->rs->rank(); ++i)
      if (!is_nonneg_integer(lambda.coroot(i))) dom = false;
    result["weyl_dimension"] = dom ? Json(rat_str(weyl_dimension(lambda))) : Json(nullptr);
    if (check_oracle) {
      ShapovalovOracle oracle(lambda, rs->oracle_cap);
      if (depth > oracle.depth_cap())
        throw CapExceededError("character depth " + std::to_string(depth) +
                               " exceeds the oracle depth cap of " +
                               std::to_string(oracle.depth_cap()));
      bool agrees = true;
      auto table = kostant_table(*rs->rs, depth);
      for (const auto& [k, cnt] : table) {
        long long want = ch.at(k);
        if (oracle.simple_multiplicity(k) != want) agrees = false;
      }
      result["oracle_checked"] = true;
      result["oracle_agrees"] = agrees;
      emit(out_json, envelope("character", spec, result));
      if (!agrees) {
        g_last_error = "character coefficients disagree with Shapovalov-Gram ranks";
        return HWT_ERR_DISAGREE;
      }
      return HWT_OK;
    }
    result["oracle_checked"] = false;
    result["oracle_agrees"] = nullptr;
    return emit(out_json, envelope("character", spec, result));
  });
}

hwt_status hwt_oracle_support_json(const hwt_rootsys* rs, const char* lambda_csv, int depth,
                                   char** out_json) {
  return guard([&]() {
    Weight lambda = rs->rs->parse_weight(lambda_csv);
    Json spec;
    spec["type"] = rs->rs->name();
    spec["lambda"] = lambda.str();
    spec["depth"] = depth;
    TruncatedWeightSet t = oracle_weight_support(lambda, depth, rs->oracle_cap);
    return emit(out_json, envelope("oracle", spec, tws_json(t)));
  });
}

hwt_status hwt_gram_json(const hwt_rootsys* rs, const char* lambda_csv, const char* offset_csv,
                         char** out_json) {
  return guard([&]() {
    Weight lambda = rs->rs->parse_weight(lambda_csv);
    int n = rs->rs->rank();
    IVec offset;
    {
      std::string s = offset_csv ? offset_csv : "";
      size_t pos = 0;
      while (pos <= s.size() && !s.empty()) {
        size_t comma = s.find(',', pos);
        std::string tok =
            s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        auto q = rat_parse(tok);
        if (!q || !is_nonneg_integer(*q))
          throw std::invalid_argument("offset entries must be nonnegative integers, got '" +
                                      tok + "'");
        offset.push_back(static_cast<int>(*rat_to_long(*q)));
        if (comma == std::string::npos) break;
        pos = comma + 1;
      }
    }
    if (static_cast<int>(offset.size()) != n)
      throw std::invalid_argument("offset has " + std::to_string(offset.size()) +
                                  " entries, expected " + std::to_string(n));
    ShapovalovOracle oracle(lambda, rs->oracle_cap);
    auto words = words_for_offset(offset);
    auto g = oracle.gram(offset);
    Json spec;
    spec["type"] = rs->rs->name();
    spec["lambda"] = lambda.str();
    spec["offset"] = ivec_json(offset);
    Json result;
    Json jw = Json::array();
    for (const auto& w : words) {
      Json a = Json::array();
      for (int i : w) a.push_back(i + 1);
      jw.push_back(a);
    }
    result["words"] = jw;
    Json jm = Json::array();
    for (const auto& row : g) jm.push_back(qvec_json(row));
    result["matrix"] = jm;
    result["rank"] = rank_of(g);
    return emit(out_json, envelope("gram", spec, result));
  });
}

hwt_status hwt_verify_json(const hwt_rootsys* rs, int samples, unsigned long long seed,
                           int depth, char** out_json) {
  return guard([&]() {
    if (samples <= 0) throw std::invalid_argument("samples must be positive");
    if (depth < 0) throw std::invalid_argument("depth must be nonnegative");
    VerifyOptions opt;
    opt.samples = samples;
    opt.seed = seed;
    opt.depth = depth;
    opt.enum_cap = rs->enum_cap;
    opt.oracle_cap = rs->oracle_cap;
    VerifyReport rep = run_verify(rs->rs, opt);

    Json spec;
    spec["type"] = rs->rs->name();
    spec["samples"] = samples;
    spec["seed"] = seed;
    spec["depth"] = depth;
    Json result;
    Json props = Json::array();
    for (const auto& p : rep.properties) {
      Json e;
      e["name"] = p.name;
      e["pass"] = p.pass;
      e["fail"] = p.fail;
      e["reproducer"] = p.first_failure.empty() ? Json(nullptr) : Json(p.first_failure);
      props.push_back(e);
    }
    result["properties"] = props;
    result["all_pass"] = rep.all_pass;
    emit(out_json, envelope("verify", spec, result));
    if (!rep.all_pass) {
      g_last_error = "verification sweep found failing properties (see reproducers)";
      return HWT_ERR_DISAGREE;
    }
    return HWT_OK;
  });
}

hwt_status hwt_minmax_json(const hwt_rootsys* rs, const char* lambda_csv,
                           const char* jprime_csv, char** out_json) {
  return guard([&]() {
    Weight lambda = rs->rs->parse_weight(lambda_csv);
    std::optional<IndexSet> jp;
    if (jprime_csv) {
      IndexSet s;
      std::string str = jprime_csv;
      size_t pos = 0;
      while (pos <= str.size() && !str.empty()) {
        size_t comma = str.find(',', pos);
        std::string tok =
            str.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
          throw std::invalid_argument("bad index '" + tok + "' in J' specification");
        int i = std::stoi(tok);
        if (i < 1 || i > rs->rs->rank())
          throw std::invalid_argument("index " + std::to_string(i) + " out of range in J'");
        s.add(i - 1);
        if (comma == std::string::npos) break;
        pos = comma + 1;
      }
      jp = s;
    }
    MinmaxReport rep = run_minmax(rs->rs, lambda, jp, rs->enum_cap);

    Json spec;
    spec["type"] = rs->rs->name();
    spec["lambda"] = lambda.str();
    spec["jprime"] = jp ? Json(jp->str1()) : Json(nullptr);
    Json result;
    result["j_lambda"] = indexset_json(rep.jlambda);
    result["simply_regular"] = rep.lambda_simply_regular;
    Json blocks = Json::array();
    for (const auto& b : rep.jprimes) {
      Json jb;
      jb["jprime"] = indexset_json(b.jprime);
      Json cases = Json::array();
      for (const auto& c : b.cases) {
        Json jc;
        jc["class"] = c.descriptor;
        jc["hull_equals_reference"] = c.hull_equals_reference;
        jc["stabilizer_is_WJprime"] = c.stabilizer_is_wjprime;
        jc["largest_parabolic_is_Jprime"] = c.largest_parabolic_is_jprime;
        jc["equivalent"] = c.equivalent;
        cases.push_back(jc);
      }
      jb["cases"] = cases;
      jb["all_equivalent"] = b.all_equivalent;
      blocks.push_back(jb);
    }
    result["jprimes"] = blocks;
    result["all_equivalent"] = rep.all_equivalent;
    result["statement4"] = "not machine-checked";
    emit(out_json, envelope("minmax", spec, result));
    if (!rep.all_equivalent) {
      g_last_error = "minmax equivalences failed (see report)";
      return HWT_ERR_DISAGREE;
    }
    return HWT_OK;
  });
}

}  // extern "C"
