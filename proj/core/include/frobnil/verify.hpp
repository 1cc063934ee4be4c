#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "frobnil/expr.hpp"
#include "frobnil/print.hpp"

namespace frobnil {

struct CheckResult {
  std::string name;
  /// Replayable input for the `normalize` command where applicable.
  std::string expression;
  bool passed = true;
  std::string detail;
};

struct VerifyReport {
  std::string suite;
  std::vector<CheckResult> checks;

  bool all_passed() const;
  std::size_t failed_count() const;
  void expect(std::string name, std::string expression, bool ok, std::string detail = "");
  std::string text() const;
};

struct SuiteOptions {
  unsigned degree_cap = 6;
  std::uint64_t seed = 0;
  unsigned trials = 200;
};

/// Deterministic generator for the randomized suites; identical streams for
/// identical seeds.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  std::uint64_t next(std::uint64_t bound) { return bound ? eng_() % bound : 0; }
  /// Small nonzero scalar in {-3..3, 1/2, -1/2}.
  Rational scalar();

 private:
  std::mt19937_64 eng_;
};

TensorWord random_word(const FrobeniusSuperalgebra& A, unsigned n, Rng& rng);
std::vector<unsigned> random_exps(unsigned n, unsigned cap, Rng& rng);
Permutation random_perm(unsigned n, Rng& rng);
NilHeckeKey random_nh_key(const FrobeniusSuperalgebra& A, unsigned n, unsigned kcap, Rng& rng);
NHElement random_nh_element(const FrobeniusSuperalgebra& A, unsigned n, unsigned kcap,
                            unsigned terms, Rng& rng);
PolElement random_pol_element(const FrobeniusSuperalgebra& A, unsigned n, unsigned kcap,
                              unsigned terms, Rng& rng);
OddNHKey random_odd_key(unsigned n, unsigned kcap, Rng& rng);

/// Exhaustive enumerations used by the sweep suites.
std::vector<TensorWord> all_words(const FrobeniusSuperalgebra& A, unsigned n);
std::vector<std::vector<unsigned>> all_exps(unsigned n, unsigned cap);
std::vector<Permutation> all_perms(unsigned n);

/// Defining relations evaluated to normal form, token instances ranging over
/// the basis, plus the disjoint-strand interchange instances.
VerifyReport nc_verify_relations(const FrobeniusSuperalgebra& A, unsigned n);
VerifyReport nh_verify_relations(const FrobeniusSuperalgebra& A, unsigned n);
VerifyReport onh_verify(unsigned n);

/// Trace-form axioms and the dual-basis identities, tau purity, and tau
/// basis-independence under a random change of basis.
VerifyReport verify_frobenius(const FrobeniusSuperalgebra& A, const SuiteOptions& opts = {});
/// Nakayama automorphism: defining identity, automorphism property, identity
/// on symmetric algebras, and the four twisted teleporter identities.
VerifyReport verify_nakayama(const FrobeniusSuperalgebra& A);

VerifyReport verify_basis_theorem(const FrobeniusSuperalgebra& A, unsigned n,
                                  unsigned kcap, const SuiteOptions& opts);
VerifyReport verify_divided_difference(const FrobeniusSuperalgebra& A, unsigned n,
                                       const SuiteOptions& opts);
VerifyReport verify_module_actions(const FrobeniusSuperalgebra& A, unsigned n,
                                   const SuiteOptions& opts);
VerifyReport verify_symmetries(const FrobeniusSuperalgebra& A, unsigned n,
                               const SuiteOptions& opts);
VerifyReport verify_grading(const FrobeniusSuperalgebra& A, unsigned n,
                            const SuiteOptions& opts);
VerifyReport verify_clifford_bridge(unsigned n, unsigned kcap, const SuiteOptions& opts);

}  // namespace frobnil
