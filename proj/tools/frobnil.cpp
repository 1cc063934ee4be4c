// frobnil: exact computations in Frobenius nilCoxeter, nilHecke, and odd
// nilHecke algebras. See `frobnil --help` for the command list.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "frobnil/config_file.hpp"
#include "frobnil/error.hpp"
#include "frobnil/verify.hpp"

namespace {

using nlohmann::json;
using namespace frobnil;

struct Options {
  std::string algebra;
  std::string config;
  unsigned n = 2;
  unsigned degree_cap = 6;
  std::uint64_t seed = 0;
  bool json_out = false;
  std::string target = "nh";
  std::string expr;
  std::string on_expr;
};

FrobeniusSuperalgebra resolve_algebra(const Options& o) {
  if (!o.config.empty()) return load_config(o.config);
  if (!o.algebra.empty()) return builtin(o.algebra);
  throw Error(ErrorCode::ParseError, "choose an algebra with --algebra or --config");
}

void emit(const Options& o, const json& doc, const std::string& text) {
  if (o.json_out)
    std::cout << doc.dump(2) << "\n";
  else
    std::cout << text << "\n";
}

int run_normalize(const Options& o) {
  std::string result;
  json doc{{"command", "normalize"}, {"n", o.n}, {"target", o.target}, {"input", o.expr}};
  if (o.target == "onh") {
    const auto ast = parse_expr(o.expr, o.n, nullptr);
    result = print_element(eval_onh(ast, o.n));
  } else {
    const FrobeniusSuperalgebra A = resolve_algebra(o);
    doc["algebra"] = A.name();
    const auto ast = parse_expr(o.expr, o.n, &A);
    if (o.target == "nh")
      result = print_element(A, eval_nh(ast, A, o.n));
    else if (o.target == "pol")
      result = print_element(A, eval_pol(ast, A, o.n));
    else if (o.target == "nc")
      result = print_element(A, eval_nc(ast, A, o.n));
    else
      throw Error(ErrorCode::ParseError, "target must be one of nh, pol, nc, onh");
  }
  doc["normal_form"] = result;
  emit(o, doc, result);
  return 0;
}

int run_act(const Options& o) {
  const FrobeniusSuperalgebra A = resolve_algebra(o);
  const NHElement e = eval_nh(parse_expr(o.expr, o.n, &A), A, o.n);
  const PolElement f = eval_pol(parse_expr(o.on_expr, o.n, &A), A, o.n);
  const std::string result = print_element(A, act_pol(A, e, f));
  emit(o,
       json{{"command", "act"},
            {"algebra", A.name()},
            {"n", o.n},
            {"input", o.expr},
            {"on", o.on_expr},
            {"result", result}},
       result);
  return 0;
}

json report_json(const VerifyReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    json jc{{"name", c.name}, {"passed", c.passed}};
    if (!c.expression.empty()) jc["expression"] = c.expression;
    if (!c.detail.empty()) jc["detail"] = c.detail;
    checks.push_back(std::move(jc));
  }
  return json{{"suite", r.suite},
              {"passed", r.checks.size() - r.failed_count()},
              {"total", r.checks.size()},
              {"checks", std::move(checks)}};
}

int finish_reports(const Options& o, const std::string& command,
                   const std::vector<VerifyReport>& reports) {
  bool ok = true;
  json suites = json::array();
  std::string text;
  for (const auto& r : reports) {
    ok = ok && r.all_passed();
    suites.push_back(report_json(r));
    text += r.text();
  }
  text += ok ? "all checks passed" : "CHECKS FAILED";
  emit(o,
       json{{"command", command},
            {"seed", o.seed},
            {"degree_cap", o.degree_cap},
            {"all_passed", ok},
            {"suites", std::move(suites)}},
       text);
  return ok ? 0 : 1;
}

int run_verify(const Options& o) {
  const FrobeniusSuperalgebra A = resolve_algebra(o);
  SuiteOptions opts;
  opts.degree_cap = o.degree_cap;
  opts.seed = o.seed;

  std::vector<VerifyReport> reports;
  reports.push_back(verify_frobenius(A, opts));
  reports.push_back(verify_nakayama(A));
  reports.push_back(nc_verify_relations(A, o.n));
  if (A.symmetric()) {
    reports.push_back(nh_verify_relations(A, o.n));
    reports.push_back(verify_basis_theorem(A, o.n, 3, opts));
    reports.push_back(verify_divided_difference(A, o.n, opts));
    reports.push_back(verify_module_actions(A, o.n, opts));
    reports.push_back(verify_symmetries(A, o.n, opts));
    if (A.graded()) reports.push_back(verify_grading(A, o.n, opts));
  }
  return finish_reports(o, "verify", reports);
}

int run_iso_check(const Options& o) {
  SuiteOptions opts;
  opts.degree_cap = o.degree_cap;
  opts.seed = o.seed;
  return finish_reports(o, "iso-check",
                        {verify_clifford_bridge(o.n, 3, opts)});
}

int run_dual_basis(const Options& o) {
  const FrobeniusSuperalgebra A = resolve_algebra(o);
  json duals = json::object();
  std::string text;
  for (BasisIndex b = 0; b < A.dim(); ++b) {
    const std::string value = print_algebra_element(A, A.dual(b));
    duals[A.label(b)] = value;
    text += A.label(b) + "^v = " + value + "\n";
  }
  if (!text.empty()) text.pop_back();
  emit(o, json{{"command", "dual-basis"}, {"algebra", A.name()}, {"duals", duals}}, text);
  return 0;
}

int run_tau(const Options& o) {
  const FrobeniusSuperalgebra A = resolve_algebra(o);
  const std::string result = print_element(A, tau(A));
  emit(o, json{{"command", "tau"}, {"algebra", A.name()}, {"tau", result}}, result);
  return 0;
}

int run_nakayama(const Options& o) {
  const FrobeniusSuperalgebra A = resolve_algebra(o);
  const auto psi = A.nakayama();
  json images = json::object();
  std::string text;
  for (BasisIndex b = 0; b < A.dim(); ++b) {
    const std::string value = print_algebra_element(A, psi[b]);
    images[A.label(b)] = value;
    text += "psi(" + A.label(b) + ") = " + value + "\n";
  }
  if (!text.empty()) text.pop_back();
  emit(o, json{{"command", "nakayama"}, {"algebra", A.name()}, {"images", images}}, text);
  return 0;
}

int run_grade(const Options& o) {
  const FrobeniusSuperalgebra A = resolve_algebra(o);
  const NHElement e = eval_nh(parse_expr(o.expr, o.n, &A), A, o.n);
  json terms = json::array();
  std::string text;
  for (const auto& [key, coeff] : e.terms()) {
    const GradedDegree g = z_degree(A, key);
    const std::string term =
        print_element(A, NHElement::term(key, coeff));
    terms.push_back(json{{"term", term},
                         {"degree", g.z_degree},
                         {"parity", parity_name(g.parity)}});
    text += "deg " + std::to_string(g.z_degree) + "  parity " + parity_name(g.parity) +
            "  " + term + "\n";
  }
  if (text.empty()) text = "0";
  else text.pop_back();
  emit(o, json{{"command", "grade"}, {"algebra", A.name()}, {"terms", terms}}, text);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Frobenius nilCoxeter / nilHecke / odd nilHecke computations"};
  app.require_subcommand(1);

  Options o;
  auto add_common = [&](CLI::App* sub, bool with_n = true) {
    sub->add_option("--algebra", o.algebra,
                    "builtin algebra: ground, clifford_odd, clifford_even, "
                    "dual_numbers, cyclic_group(m)");
    sub->add_option("--config", o.config, "algebra description file");
    if (with_n) sub->add_option("--n", o.n, "number of strands")->check(CLI::Range(1, 8));
    sub->add_flag("--json", o.json_out, "machine-readable output");
    sub->add_option("--degree-cap", o.degree_cap, "degree bound for exhaustive sweeps")
        ->check(CLI::Range(0, 12));
    sub->add_option("--seed", o.seed, "seed for the randomized suites");
  };

  auto* normalize = app.add_subcommand("normalize", "print the normal form of an expression");
  add_common(normalize);
  normalize->add_option("--target", o.target, "nh (default), pol, nc, or onh");
  normalize->add_option("expr", o.expr, "expression")->required();

  auto* act = app.add_subcommand("act", "apply an element through the polynomial representation");
  add_common(act);
  act->add_option("expr", o.expr, "acting expression")->required();
  act->add_option("--on", o.on_expr, "polynomial expression acted upon")->required();

  auto* verify = app.add_subcommand("verify", "run the relation and invariant suites");
  add_common(verify);

  auto* dual = app.add_subcommand("dual-basis", "print the dual basis");
  add_common(dual, false);

  auto* tau_cmd = app.add_subcommand("tau", "print the teleporter element");
  add_common(tau_cmd, false);

  auto* nak = app.add_subcommand("nakayama", "print the Nakayama automorphism");
  add_common(nak, false);

  auto* iso = app.add_subcommand("iso-check", "round-trip the odd nilHecke isomorphism");
  add_common(iso);

  auto* grade = app.add_subcommand("grade", "print the degree of each term");
  add_common(grade);
  grade->add_option("expr", o.expr, "expression")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (normalize->parsed()) return run_normalize(o);
    if (act->parsed()) return run_act(o);
    if (verify->parsed()) return run_verify(o);
    if (dual->parsed()) return run_dual_basis(o);
    if (tau_cmd->parsed()) return run_tau(o);
    if (nak->parsed()) return run_nakayama(o);
    if (iso->parsed()) return run_iso_check(o);
    if (grade->parsed()) return run_grade(o);
  } catch (const frobnil::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
