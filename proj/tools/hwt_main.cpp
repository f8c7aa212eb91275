// Copyright (c) 2026 hwt developers
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end. All computation goes through the C API in
// hwt/hwt.h; this file only parses arguments, forwards them, and renders
// the returned JSON reports.
#include <hwt/hwt.h>

#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <memory>
#include <string>

namespace {

using Json = nlohmann::ordered_json;

struct RootsysHandle {
  hwt_rootsys* rs = nullptr;
  ~RootsysHandle() { hwt_rootsys_free(rs); }
};

struct ModuleHandle {
  hwt_module* m = nullptr;
  ~ModuleHandle() { hwt_module_free(m); }
};

int fail(hwt_status st) {
  std::fprintf(stderr, "error: %s\n", hwt_last_error());
  return static_cast<int>(st);
}

int open_rootsys(const std::string& type, RootsysHandle& h) {
  hwt_status st = hwt_rootsys_create(type.c_str(), &h.rs);
  if (st != HWT_OK) return fail(st);
  if (const char* cap = std::getenv("HWT_ENUM_CAP")) hwt_rootsys_set_enum_cap(h.rs, std::atol(cap));
  if (const char* cap = std::getenv("HWT_ORACLE_DEPTH"))
    hwt_rootsys_set_oracle_depth(h.rs, std::atoi(cap));
  return 0;
}

// ---- text renderers ----

std::string offset_str(const Json& offset) {
  std::string s = "(";
  for (size_t i = 0; i < offset.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(offset[i].get<int>());
  }
  return s + ")";
}

std::string join_csv(const Json& arr) {
  std::string s;
  for (size_t i = 0; i < arr.size(); ++i) {
    if (i) s += ",";
    if (arr[i].is_string())
      s += arr[i].get<std::string>();
    else
      s += std::to_string(arr[i].get<long long>());
  }
  return s;
}

void render_tws(std::ostream& os, const Json& t, const std::string& title) {
  os << title << ": " << t["count"].get<size_t>() << " weights at depth "
     << t["depth"].get<int>() << "\n";
  for (const auto& w : t["weights"]) {
    os << "  lambda - " << offset_str(w["offset"]);
    if (!w["mult"].is_null()) os << "  mult " << w["mult"].get<long long>();
    os << "\n";
  }
}

void render_weights(std::ostream& os, const Json& r) {
  const Json& res = r["result"];
  os << "weights " << r["spec"]["type"].get<std::string>() << " lambda="
     << r["spec"]["lambda"].get<std::string>() << " class="
     << r["spec"]["class"].get<std::string>() << " depth=" << r["spec"]["depth"].get<int>()
     << "\n";
  for (auto& [name, tws] : res["formulas"].items())
    os << "formula " << name << ": " << tws["count"].get<size_t>() << " weights\n";
  if (!res["agree"].is_null())
    os << "agreement: " << (res["agree"].get<bool>() ? "yes" : "NO") << "\n";
  const auto& formulas = res["formulas"];
  render_tws(os, formulas.contains("B") ? formulas["B"] : formulas.begin().value(), "weights");
}

void render_poly(std::ostream& os, const Json& p, const std::string& indent) {
  os << indent << "vertices:";
  for (const auto& v : p["vertices"]) os << " (" << join_csv(v) << ")";
  os << "\n" << indent << "rays (root coords):";
  for (const auto& v : p["rays"]) os << " (" << join_csv(v) << ")";
  os << "\n";
}

void render_hull(std::ostream& os, const Json& r) {
  const Json& res = r["result"];
  os << "hull " << r["spec"]["type"].get<std::string>() << " lambda="
     << r["spec"]["lambda"].get<std::string>() << " class="
     << r["spec"]["class"].get<std::string>() << "\n";
  os << "generators:\n";
  render_poly(os, res["generators"], "  ");
  os << "reduced:\n";
  render_poly(os, res["reduced"], "  ");
  os << "facets:\n";
  for (const auto& q : res["inequalities"])
    os << "  <(" << join_csv(q["normal"]) << "), x> <= " << q["offset"].get<std::string>()
       << "\n";
  const Json& st = res["stabilizer"];
  os << "stabilizer: order " << st["order"].get<size_t>()
     << (st["parabolic"].get<bool>() ? " = W_{" : " (not parabolic; largest W_J inside: J={")
     << join_csv(st["J"]) << "}\n";
  if (!res["extremal_rays_at_lambda"].is_null()) {
    os << "unbounded edges at lambda:";
    for (const auto& v : res["extremal_rays_at_lambda"]) os << " (" << join_csv(v) << ")";
    os << "\n";
  }
}

void render_faces(std::ostream& os, const Json& r) {
  const Json& res = r["result"];
  os << "faces " << r["spec"]["type"].get<std::string>() << " lambda="
     << r["spec"]["lambda"].get<std::string>() << " class="
     << r["spec"]["class"].get<std::string>() << "\n";
  os << "count: " << res["count"].get<size_t>() << " (geometric cross-check: "
     << res["geometric_count"].get<size_t>() << ")\n";
  os << "by dimension:";
  for (auto& [d, c] : res["by_dimension"].items()) os << " dim " << d << ": " << c.get<int>();
  os << "\n";
  for (const auto& f : res["faces"]) {
    os << "  dim " << f["dim"].get<int>() << "  labels";
    for (const auto& l : f["labels"])
      os << " (" << l["w"].get<std::string>() << ", J={" << join_csv(l["J"]) << "})";
    os << "\n";
  }
}

void render_character(std::ostream& os, const Json& r) {
  const Json& res = r["result"];
  os << "character " << r["spec"]["type"].get<std::string>() << " lambda="
     << r["spec"]["lambda"].get<std::string>() << " depth=" << r["spec"]["depth"].get<int>()
     << "\n";
  for (const auto& t : res["character"]["terms"])
    os << "  lambda - " << offset_str(t["offset"]) << "  mult " << t["mult"].get<long long>()
       << "\n";
  os << "coefficient sum (within depth): " << res["coefficient_sum"].get<long long>() << "\n";
  if (!res["weyl_dimension"].is_null())
    os << "Weyl dimension: " << res["weyl_dimension"].get<std::string>() << "\n";
  if (res["oracle_checked"].get<bool>())
    os << "oracle agreement: " << (res["oracle_agrees"].get<bool>() ? "yes" : "NO") << "\n";
}

void render_verify(std::ostream& os, const Json& r) {
  const Json& res = r["result"];
  os << "verify " << r["spec"]["type"].get<std::string>() << " samples="
     << r["spec"]["samples"].get<int>() << " seed=" << r["spec"]["seed"].get<uint64_t>()
     << " depth=" << r["spec"]["depth"].get<int>() << "\n";
  size_t width = 0;
  for (const auto& p : res["properties"])
    width = std::max(width, p["name"].get<std::string>().size());
  for (const auto& p : res["properties"]) {
    std::string name = p["name"].get<std::string>();
    os << "  " << name << std::string(width - name.size() + 2, ' ') << "pass "
       << p["pass"].get<int>() << "  fail " << p["fail"].get<int>();
    if (!p["reproducer"].is_null()) os << "  [" << p["reproducer"].get<std::string>() << "]";
    os << "\n";
  }
  os << (res["all_pass"].get<bool>() ? "all properties pass" : "FAILURES found") << "\n";
}

void render_minmax(std::ostream& os, const Json& r) {
  const Json& res = r["result"];
  os << "minmax " << r["spec"]["type"].get<std::string>() << " lambda="
     << r["spec"]["lambda"].get<std::string>() << "\n";
  os << "J_lambda = {" << join_csv(res["j_lambda"]) << "}  simply-regular: "
     << (res["simply_regular"].get<bool>() ? "yes" : "no") << "\n";
  for (const auto& b : res["jprimes"]) {
    os << "J' = {" << join_csv(b["jprime"]) << "}:\n";
    for (const auto& c : b["cases"])
      os << "  " << c["class"].get<std::string>() << ": (1) "
         << (c["hull_equals_reference"].get<bool>() ? "T" : "F") << " (2) "
         << (c["stabilizer_is_WJprime"].get<bool>() ? "T" : "F") << " (3) "
         << (c["largest_parabolic_is_Jprime"].get<bool>() ? "T" : "F") << "  equivalent: "
         << (c["equivalent"].get<bool>() ? "yes" : "NO") << "\n";
  }
  os << "statement (4): " << res["statement4"].get<std::string>() << "\n";
  os << (res["all_equivalent"].get<bool>() ? "all equivalences hold" : "EQUIVALENCE FAILURES")
     << "\n";
}

int write_report(const std::string& json_text, const std::string& format,
                 const std::string& output, const std::string& command) {
  std::string text = json_text;
  if (format == "text") {
    Json r = Json::parse(json_text);
    std::ostringstream os;
    if (command == "weights")
      render_weights(os, r);
    else if (command == "hull")
      render_hull(os, r);
    else if (command == "faces")
      render_faces(os, r);
    else if (command == "character")
      render_character(os, r);
    else if (command == "verify")
      render_verify(os, r);
    else if (command == "minmax")
      render_minmax(os, r);
    else
      os << json_text;
    text = os.str();
  }
  if (output.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(output, std::ios::binary);
    if (!f) {
      std::fprintf(stderr, "error: cannot open output file '%s'\n", output.c_str());
      return 1;
    }
    f << text;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hwt: exact weights, characters, and convex hulls of highest weight modules"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(hwt_version()));

  std::string type, lambda, cls = "simple", format = "json", output, formula = "all";
  std::string jprime, off_file, box = "6";
  int depth = 5;
  int samples = 10;
  unsigned long long seed = 1;
  bool check_oracle = false;

  auto add_common = [&](CLI::App* cmd, bool with_class) {
    cmd->add_option("type", type, "root system, e.g. A2, B3, A1xA1")->required();
    cmd->add_option("--format", format, "json | text")->check(CLI::IsMember({"json", "text"}));
    cmd->add_option("--output", output, "write the report to a file");
    if (with_class) {
      cmd->add_option("--lambda", lambda, "highest weight, fundamental coords, e.g. 1,-3/2")
          ->required();
      cmd->add_option("--class", cls, "verma | simple | pverma:i,j");
    }
  };

  auto* w = app.add_subcommand("weights", "weight sets by the three formulas");
  add_common(w, true);
  w->add_option("--depth", depth, "truncation depth (height of lambda - mu)");
  w->add_option("--formula", formula, "A | B | C | all");

  auto* h = app.add_subcommand("hull", "exact convex hull (V- and H-representations)");
  add_common(h, true);
  h->add_option("--off", off_file, "also write an OFF dump of a clipped hull (rank 2,3)");
  h->add_option("--box", box, "clip radius for --off (rational)");

  auto* f = app.add_subcommand("faces", "face enumeration via (w, J) labels");
  add_common(f, true);
  f->add_option("--depth", depth, "accepted for interface uniformity (unused)");

  auto* c = app.add_subcommand("character", "truncated simple-module character (WCF)");
  add_common(c, false);
  c->add_option("--lambda", lambda, "highest weight")->required();
  c->add_option("--depth", depth, "truncation depth");
  c->add_flag("--check-oracle", check_oracle, "compare against Shapovalov-Gram ranks");

  auto* v = app.add_subcommand("verify", "seeded property sweep over random weights");
  add_common(v, false);
  v->add_option("--samples", samples, "number of sampled weights");
  v->add_option("--seed", seed, "PRNG seed");
  v->add_option("--depth", depth, "truncation depth");

  auto* mm = app.add_subcommand("minmax", "hull/stabilizer equivalences per J'");
  add_common(mm, false);
  mm->add_option("--lambda", lambda, "highest weight")->required();
  mm->add_option("--jprime", jprime, "restrict to one J', e.g. 1,3 ('' = empty set)");

  auto* info = app.add_subcommand("info", "root system data as JSON");
  add_common(info, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  RootsysHandle rs;
  if (int rc = open_rootsys(type, rs); rc != 0) return rc;

  char* json = nullptr;
  hwt_status st = HWT_OK;
  std::string command;

  if (app.got_subcommand(w) || app.got_subcommand(h) || app.got_subcommand(f)) {
    ModuleHandle m;
    st = hwt_module_create(rs.rs, lambda.c_str(), cls.c_str(), &m.m);
    if (st != HWT_OK) return fail(st);
    if (app.got_subcommand(w)) {
      command = "weights";
      st = hwt_weights_json(m.m, depth, formula.c_str(), &json);
    } else if (app.got_subcommand(h)) {
      command = "hull";
      st = hwt_hull_json(m.m, &json);
      if ((st == HWT_OK) && !off_file.empty()) {
        char* off = nullptr;
        hwt_status ost = hwt_hull_off(m.m, box.c_str(), &off);
        if (ost != HWT_OK) return fail(ost);
        std::ofstream fo(off_file, std::ios::binary);
        fo << off;
        hwt_string_free(off);
      }
    } else {
      command = "faces";
      st = hwt_faces_json(m.m, &json);
    }
  } else if (app.got_subcommand(c)) {
    command = "character";
    st = hwt_character_json(rs.rs, lambda.c_str(), depth, check_oracle ? 1 : 0, &json);
  } else if (app.got_subcommand(v)) {
    command = "verify";
    st = hwt_verify_json(rs.rs, samples, seed, depth, &json);
  } else if (app.got_subcommand(mm)) {
    command = "minmax";
    st = hwt_minmax_json(rs.rs, lambda.c_str(), mm->count("--jprime") ? jprime.c_str() : nullptr,
                         &json);
  } else if (app.got_subcommand(info)) {
    command = "info";
    st = hwt_rootsys_json(rs.rs, &json);
  }

  if (json == nullptr) return fail(st);
  std::string text(json);
  hwt_string_free(json);
  int rc = write_report(text, format, output, command);
  if (rc != 0) return rc;
  return static_cast<int>(st);
}
