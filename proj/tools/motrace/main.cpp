// motrace CLI: exposes the library's computations over the text grammars.
// Exit codes: 0 success, 1 domain error, 2 parse/usage error.

#include <cstdio>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "motrace/motrace.h"

using json = nlohmann::ordered_json;

namespace {

struct CliError {
  int exit_code;
  std::string message;
};

// Owns a string allocated by the library.
struct CStr {
  char* p = nullptr;
  ~CStr() { mtr_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

void check(mtr_status st) {
  if (st == MTR_OK) return;
  int code = st == MTR_ERR_PARSE ? 2 : 1;
  throw CliError{code, std::string(mtr_status_name(st)) + ": " + mtr_last_error()};
}

struct FieldHandle {
  mtr_field* f = nullptr;
  explicit FieldHandle(const std::string& name) { check(mtr_field_create(name.c_str(), &f)); }
  ~FieldHandle() { mtr_field_free(f); }
};

struct GwHandle {
  mtr_gw* g = nullptr;
  GwHandle() = default;
  explicit GwHandle(mtr_gw* p) : g(p) {}
  GwHandle(GwHandle&& o) noexcept : g(o.g) { o.g = nullptr; }
  ~GwHandle() { mtr_gw_free(g); }
  std::string render() const {
    CStr s;
    check(mtr_gw_render(g, &s.p));
    return s.str();
  }
};

struct SpaceHandle {
  mtr_space* s = nullptr;
  explicit SpaceHandle(const std::string& text) { check(mtr_space_parse(text.c_str(), &s)); }
  explicit SpaceHandle(mtr_space* p) : s(p) {}
  ~SpaceHandle() { mtr_space_free(s); }
};

GwHandle parse_gw(const FieldHandle& f, const std::string& text) {
  mtr_gw* g = nullptr;
  check(mtr_gw_parse(f.f, text.c_str(), &g));
  return GwHandle(g);
}

void parse_rational(const std::string& s, long long* num, long long* den) {
  size_t slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      *num = std::stoll(s);
      *den = 1;
    } else {
      *num = std::stoll(s.substr(0, slash));
      *den = std::stoll(s.substr(slash + 1));
    }
  } catch (const std::exception&) {
    throw CliError{2, "parse_error: '" + s + "' is not an integer or p/q rational"};
  }
}

void emit(bool as_json, const json& doc, const std::string& text) {
  if (as_json)
    printf("%s\n", doc.dump().c_str());
  else
    printf("%s\n", text.c_str());
}

json result_meta(const FieldHandle& f) {
  return json{{"field", mtr_field_name(f.f)},
              {"p_inverted", mtr_field_characteristic(f.f) > 0}};
}

int run(int argc, char** argv) {
  CLI::App app{"GW-valued Euler characteristics, double-coset transfer formulas, and the "
               "stable splitting certificate"};
  app.require_subcommand(1);
  std::string field_name = "Qbar";
  bool as_json = false;
  unsigned long long seed = 0;
  app.add_option("--field", field_name, "base field: Qbar, R, Q, or F<q>")->capture_default_str();
  app.add_flag("--json", as_json, "emit a single JSON document");
  app.add_option("--seed", seed, "seed for randomized property suites (reserved)");

  // gw <op> <args...>
  auto* gw = app.add_subcommand("gw", "GW(k) arithmetic on element expressions");
  gw->fallthrough();
  std::string gw_op;
  std::vector<std::string> gw_args;
  gw->add_option("op", gw_op, "add|sub|mul|neg|scale|eq|invariants|normalize|hilbert")->required();
  gw->add_option("args", gw_args, "operands");

  auto* euler = app.add_subcommand("euler", "Euler characteristic of a space expression");
  euler->fallthrough();
  std::string euler_space;
  euler->add_option("space", euler_space, "space expression")->required();

  auto* expand = app.add_subcommand("expand", "expand cells of Proj/Flag/PartialFlag/GmodT nodes");
  expand->fallthrough();
  std::string expand_space;
  expand->add_option("space", expand_space, "space expression")->required();

  auto* weyl = app.add_subcommand("weyl", "Weyl group data");
  weyl->fallthrough();
  std::string weyl_what, weyl_type, weyl_parabolic;
  weyl->add_option("what", weyl_what, "order|lengths|cosets")->required();
  weyl->add_option("type", weyl_type, "Cartan type, e.g. A2 or A1xA1")->required();
  weyl->add_option("--parabolic", weyl_parabolic, "simple-root indices, e.g. 1,3");

  auto* dcoset = app.add_subcommand("dcoset", "double-coset transfer formulas");
  dcoset->fallthrough();
  std::string dc_kind, dc_type, dc_parabolic;
  dcoset->add_option("kind", dc_kind, "torus|maxrank")->required();
  dcoset->add_option("type", dc_type, "Cartan type")->required();
  dcoset->add_option("--parabolic", dc_parabolic, "simple-root indices for maxrank");

  auto* invcheck = app.add_subcommand("invariants-check", "W-invariants averaging projector check");
  invcheck->fallthrough();
  std::string ic_type;
  int ic_degree = 6;
  invcheck->add_option("type", ic_type, "Cartan type")->required();
  invcheck->add_option("--degree", ic_degree, "degree cap (<= 12)")->capture_default_str();

  auto* smp = app.add_subcommand("smp-check", "stable splitting triangularity certificate");
  smp->fallthrough();
  int smp_n = 0;
  smp->add_option("n", smp_n, "splitting index (<= 12)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (gw->parsed()) {
      FieldHandle f(field_name);
      auto need = [&](size_t n) {
        if (gw_args.size() != n)
          throw CliError{2, "parse_error: gw " + gw_op + " expects " + std::to_string(n) +
                                " argument(s)"};
      };
      json doc{{"command", "gw " + gw_op}, {"inputs", gw_args}};
      if (gw_op == "add" || gw_op == "sub" || gw_op == "mul") {
        need(2);
        GwHandle x = parse_gw(f, gw_args[0]), y = parse_gw(f, gw_args[1]);
        mtr_gw* r = nullptr;
        check(gw_op == "add"   ? mtr_gw_add(x.g, y.g, &r)
              : gw_op == "sub" ? mtr_gw_sub(x.g, y.g, &r)
                               : mtr_gw_mul(x.g, y.g, &r));
        GwHandle res(r);
        doc["result"] = res.render();
        doc["metadata"] = result_meta(f);
        emit(as_json, doc, res.render());
      } else if (gw_op == "neg") {
        need(1);
        GwHandle x = parse_gw(f, gw_args[0]);
        mtr_gw* r = nullptr;
        check(mtr_gw_neg(x.g, &r));
        GwHandle res(r);
        doc["result"] = res.render();
        doc["metadata"] = result_meta(f);
        emit(as_json, doc, res.render());
      } else if (gw_op == "scale") {
        need(2);
        long long n = 0, d = 1;
        parse_rational(gw_args[0], &n, &d);
        if (d != 1) throw CliError{2, "parse_error: scale factor must be an integer"};
        GwHandle x = parse_gw(f, gw_args[1]);
        mtr_gw* r = nullptr;
        check(mtr_gw_scale(n, x.g, &r));
        GwHandle res(r);
        doc["result"] = res.render();
        doc["metadata"] = result_meta(f);
        emit(as_json, doc, res.render());
      } else if (gw_op == "eq") {
        need(2);
        GwHandle x = parse_gw(f, gw_args[0]), y = parse_gw(f, gw_args[1]);
        int eq = 0;
        check(mtr_gw_is_equal(x.g, y.g, &eq));
        doc["result"] = (bool)eq;
        doc["metadata"] = result_meta(f);
        emit(as_json, doc, eq ? "true" : "false");
      } else if (gw_op == "invariants") {
        need(1);
        GwHandle x = parse_gw(f, gw_args[0]);
        CStr js;
        check(mtr_gw_invariants_json(x.g, &js.p));
        json inv = json::parse(js.str());
        doc["result"] = inv;
        doc["metadata"] = result_meta(f);
        std::string text = "rank: " + inv["rank"].dump() +
                           "\ndiscriminant: " + inv["discriminant"].dump() +
                           "\nsignature: " + inv["signature"].dump();
        text += "\nhasse: ";
        if (inv["hasse"].is_null()) {
          text += "null";
        } else {
          text += "{";
          bool first = true;
          for (auto& [p, v] : inv["hasse"].items()) {
            if (!first) text += ", ";
            text += p + ": " + (v.get<int>() > 0 ? "+1" : "-1");
            first = false;
          }
          text += "}";
        }
        emit(as_json, doc, text);
      } else if (gw_op == "normalize") {
        need(1);
        GwHandle x = parse_gw(f, gw_args[0]);
        doc["result"] = x.render();
        doc["metadata"] = result_meta(f);
        emit(as_json, doc, x.render());
      } else if (gw_op == "hilbert") {
        need(3);
        long long an, ad, bn, bd;
        parse_rational(gw_args[0], &an, &ad);
        parse_rational(gw_args[1], &bn, &bd);
        int sym = 0;
        check(mtr_hilbert_symbol(an, ad, bn, bd, gw_args[2].c_str(), &sym));
        doc["result"] = sym;
        doc["metadata"] = json{{"place", gw_args[2]}};
        emit(as_json, doc, sym > 0 ? "+1" : "-1");
      } else {
        throw CliError{2, "parse_error: unknown gw op '" + gw_op + "'"};
      }
    } else if (euler->parsed()) {
      FieldHandle f(field_name);
      SpaceHandle s(euler_space);
      mtr_gw* r = nullptr;
      int p_inv = 0;
      check(mtr_euler_char(s.s, f.f, &r, &p_inv));
      GwHandle res(r);
      json doc{{"command", "euler"},
               {"inputs", json{{"space", euler_space}, {"field", mtr_field_name(f.f)}}},
               {"result", res.render()},
               {"metadata", json{{"field", mtr_field_name(f.f)}, {"p_inverted", (bool)p_inv}}}};
      emit(as_json, doc, res.render());
    } else if (expand->parsed()) {
      SpaceHandle s(expand_space);
      mtr_space* e = nullptr;
      check(mtr_space_expand(s.s, &e));
      SpaceHandle expanded(e);
      CStr text;
      check(mtr_space_render(expanded.s, &text.p));
      json doc{{"command", "expand"},
               {"inputs", json{{"space", expand_space}}},
               {"result", text.str()},
               {"metadata", json::object()}};
      emit(as_json, doc, text.str());
    } else if (weyl->parsed()) {
      json doc{{"command", "weyl " + weyl_what},
               {"inputs", json{{"type", weyl_type}}},
               {"metadata", json::object()}};
      if (weyl_what == "order") {
        unsigned long long order = 0;
        check(mtr_weyl_order(weyl_type.c_str(), &order));
        doc["result"] = order;
        emit(as_json, doc, std::to_string(order));
      } else if (weyl_what == "lengths") {
        CStr text;
        check(mtr_weyl_length_spectrum(weyl_type.c_str(), &text.p));
        doc["result"] = text.str();
        emit(as_json, doc, text.str());
      } else if (weyl_what == "cosets") {
        CStr text;
        unsigned long long count = 0;
        check(mtr_weyl_coset_reps(weyl_type.c_str(), weyl_parabolic.c_str(), &text.p, &count));
        doc["inputs"]["parabolic"] = weyl_parabolic;
        doc["result"] = json{{"count", count}, {"representatives", text.str()}};
        std::string t = text.str();
        if (!t.empty() && t.back() == '\n') t.pop_back();
        emit(as_json, doc, t);
      } else {
        throw CliError{2, "parse_error: weyl expects order|lengths|cosets"};
      }
    } else if (dcoset->parsed()) {
      if (dc_kind != "torus" && dc_kind != "maxrank")
        throw CliError{2, "parse_error: dcoset expects torus|maxrank"};
      CStr text;
      unsigned long long count = 0;
      check(mtr_dcoset_formula(dc_kind.c_str(), dc_type.c_str(), dc_parabolic.c_str(), &text.p,
                               &count));
      json doc{{"command", "dcoset " + dc_kind},
               {"inputs", json{{"type", dc_type}, {"parabolic", dc_parabolic}}},
               {"result", json{{"term_count", count}, {"formula", text.str()}}},
               {"metadata", json::object()}};
      std::string t = text.str();
      if (!t.empty() && t.back() == '\n') t.pop_back();
      emit(as_json, doc, t);
    } else if (invcheck->parsed()) {
      CStr text, js;
      check(mtr_invariants_check(ic_type.c_str(), ic_degree, &text.p, &js.p));
      json doc{{"command", "invariants-check"},
               {"inputs", json{{"type", ic_type}, {"degree", ic_degree}}},
               {"result", json::parse(js.str())},
               {"metadata", json::object()}};
      std::string t = text.str();
      if (!t.empty() && t.back() == '\n') t.pop_back();
      emit(as_json, doc, t);
    } else if (smp->parsed()) {
      CStr cert;
      int tri = 0, diag = 0;
      check(mtr_smp_verify(smp_n, &cert.p, &tri, &diag));
      json doc{{"command", "smp-check"},
               {"inputs", json{{"n", smp_n}}},
               {"result", json{{"triangular", (bool)tri},
                               {"diagonal_is_projection", (bool)diag},
                               {"certificate", cert.str()}}},
               {"metadata", json::object()}};
      std::string t = cert.str();
      if (!t.empty() && t.back() == '\n') t.pop_back();
      emit(as_json, doc, t);
    }
  } catch (const CliError& e) {
    fprintf(stderr, "error: %s\n", e.message.c_str());
    return e.exit_code;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
