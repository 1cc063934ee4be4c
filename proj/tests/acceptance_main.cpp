// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.
// Usage: acceptance [--frobnil PATH]

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "frobnil/config_file.hpp"
#include "frobnil/verify.hpp"

using namespace frobnil;

namespace {

std::string g_frobnil = "frobnil";

const std::vector<std::string> kSymmetric = {
    "ground", "clifford_odd", "dual_numbers", "cyclic_group(2)", "cyclic_group(3)"};

bool fold(const VerifyReport& r, std::string& detail) {
  if (!r.all_passed()) {
    detail += r.text();
    return false;
  }
  return true;
}

bool criterion_axioms(std::string& detail) {
  bool ok = true;
  SuiteOptions opts;
  for (const auto& name : kSymmetric) {
    const auto A = builtin(name);
    ok &= fold(verify_frobenius(A, opts), detail);
    ok &= fold(verify_nakayama(A), detail);
  }
  const auto even = clifford_even();
  if (even.symmetric()) {
    detail += "clifford_even not detected as nonsymmetric\n";
    ok = false;
  }
  const auto psi = even.nakayama();
  if (psi[1] != AlgebraElement::term(1) * Rational(-1)) {
    detail += "Nakayama image of c is not -c\n";
    ok = false;
  }
  ok &= fold(verify_nakayama(even), detail);
  return ok;
}

bool criterion_relations(std::string& detail) {
  bool ok = true;
  for (const auto& name : kSymmetric) {
    const auto A = builtin(name);
    for (unsigned n = 2; n <= 3; ++n) {
      ok &= fold(nc_verify_relations(A, n), detail);
      ok &= fold(nh_verify_relations(A, n), detail);
    }
  }
  ok &= fold(nc_verify_relations(ground(), 4), detail);
  ok &= fold(nh_verify_relations(ground(), 4), detail);
  return ok;
}

bool criterion_basis(std::string& detail) {
  bool ok = true;
  SuiteOptions opts;
  opts.trials = 200;
  for (const auto& name : kSymmetric) {
    const auto A = builtin(name);
    for (unsigned n = 1; n <= 3; ++n)
      ok &= fold(verify_basis_theorem(A, n, 3, opts), detail);
  }
  return ok;
}

bool criterion_ddiff(std::string& detail) {
  bool ok = true;
  SuiteOptions opts;
  opts.degree_cap = 6;
  opts.trials = 200;
  for (const auto& name : kSymmetric) {
    const auto A = builtin(name);
    for (unsigned n = 2; n <= 3; ++n)
      ok &= fold(verify_divided_difference(A, n, opts), detail);
  }
  return ok;
}

bool criterion_actions(std::string& detail) {
  bool ok = true;
  SuiteOptions opts;
  opts.trials = 200;
  for (const auto& name : kSymmetric) {
    const auto A = builtin(name);
    for (unsigned n = 2; n <= 3; ++n)
      ok &= fold(verify_module_actions(A, n, opts), detail);
  }
  return ok;
}

bool criterion_nonfaithful(std::string& detail) {
  const auto dn = dual_numbers();
  const NHElement witness = NHElement::term(
      NilHeckeKey{TensorWord{{1, 1}}, {0, 0}, Permutation::transposition(2, 1)});
  if (witness.is_zero()) {
    detail += "witness collapsed to zero\n";
    return false;
  }
  for (const auto& w : all_words(dn, 2))
    for (const auto& k : all_exps(2, 6))
      if (!act_pol(dn, witness, PolElement::term(PolKey{w, k})).is_zero()) {
        detail += "witness acts nontrivially\n";
        return false;
      }
  return true;
}

bool criterion_bridge(std::string& detail) {
  bool ok = true;
  SuiteOptions opts;
  opts.trials = 200;
  for (unsigned n = 2; n <= 3; ++n) ok &= fold(verify_clifford_bridge(n, 3, opts), detail);
  return ok;
}

bool criterion_symmetries(std::string& detail) {
  bool ok = true;
  SuiteOptions opts;
  opts.trials = 100;
  for (const auto& name : kSymmetric)
    ok &= fold(verify_symmetries(builtin(name), 2, opts), detail);
  ok &= fold(verify_symmetries(clifford_odd(), 3, opts), detail);
  ok &= fold(verify_grading(ground(), 3, opts), detail);
  return ok;
}

std::string run_command(const std::string& cmd, int& exit_code) {
  std::array<char, 256> buf{};
  std::string out;
  FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
  if (!pipe) {
    exit_code = -1;
    return out;
  }
  while (fgets(buf.data(), buf.size(), pipe)) out += buf.data();
  const int status = pclose(pipe);
  exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  while (!out.empty() && (out.back() == '\n' || out.back() == '\r')) out.pop_back();
  return out;
}

bool criterion_cli(std::string& detail) {
  bool ok = true;
  int code = 0;

  const std::string norm = run_command(
      g_frobnil + " normalize --algebra clifford_odd --n 2 \"u1*x2\"", code);
  if (code != 0 || norm != "x1*u1 + c[1] - c[2]") {
    detail += "normalize printed '" + norm + "' (exit " + std::to_string(code) + ")\n";
    ok = false;
  }

  run_command(g_frobnil + " verify --algebra ground --n 4", code);
  if (code != 0) {
    detail += "verify --algebra ground --n 4 exited " + std::to_string(code) + "\n";
    ok = false;
  }

  const std::string acted = run_command(
      g_frobnil + " act --algebra dual_numbers --n 2 \"y[1]*y[2]*u1\" --on \"x2^3\"", code);
  if (code != 0 || acted != "0") {
    detail += "act printed '" + acted + "' (exit " + std::to_string(code) + ")\n";
    ok = false;
  }

  for (const auto& name : kSymmetric) {
    run_command(g_frobnil + " verify --algebra \"" + name + "\" --n 2", code);
    if (code != 0) {
      detail += "verify --algebra " + name + " exited " + std::to_string(code) + "\n";
      ok = false;
    }
  }
  return ok;
}

struct Criterion {
  int id;
  const char* label;
  double limit_seconds;
  std::function<bool(std::string&)> run;
};

}  // namespace

int main(int argc, char** argv) {
  for (int i = 1; i < argc; ++i) {
    if (std::string(argv[i]) == "--frobnil" && i + 1 < argc) g_frobnil = argv[i + 1];
  }

  const std::vector<Criterion> criteria = {
      {1, "Frobenius axiom suite over the built-ins", 1.0, criterion_axioms},
      {2, "defining relations to n=3 (n=4 over the ground ring)", 60.0, criterion_relations},
      {3, "basis theorem and product associativity", 120.0, criterion_basis},
      {4, "divided-difference coherence", 60.0, criterion_ddiff},
      {5, "module actions", 60.0, criterion_actions},
      {6, "non-faithfulness witness", 5.0, criterion_nonfaithful},
      {7, "Clifford bridge", 120.0, criterion_bridge},
      {8, "symmetries and grading", 30.0, criterion_symmetries},
      {9, "command-line end to end", 60.0, criterion_cli},
  };

  bool all_ok = true;
  for (const auto& c : criteria) {
    std::string detail;
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      detail += std::string("exception: ") + e.what() + "\n";
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (elapsed > c.limit_seconds) {
      detail += "runtime " + std::to_string(elapsed) + "s exceeds " +
                std::to_string(c.limit_seconds) + "s\n";
      ok = false;
    }
    std::printf("[%s] criterion %d: %s (%.2fs)\n", ok ? "PASS" : "FAIL", c.id, c.label,
                elapsed);
    if (!ok && !detail.empty()) std::printf("%s", detail.c_str());
    all_ok &= ok;
  }
  std::printf("%s\n", all_ok ? "acceptance: all criteria passed"
                             : "acceptance: CRITERIA FAILED");
  return all_ok ? 0 : 1;
}
