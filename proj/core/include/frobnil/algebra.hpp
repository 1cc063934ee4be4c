#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "frobnil/element.hpp"
#include "frobnil/parity.hpp"
#include "frobnil/rational.hpp"
#include "frobnil/tensor_word.hpp"

namespace frobnil {

/// Raw defining data of a finite-dimensional superalgebra with a trace form:
/// basis labels with parities, structure constants, the unit, the trace
/// vector and its parity, and an optional Z-grading.
struct AlgebraData {
  std::string name;
  std::vector<std::string> basis_labels;
  std::vector<Parity> parities;
  BasisIndex unit_index = 0;
  /// products[i][j] = expansion of b_i * b_j in the basis.
  std::vector<std::vector<AlgebraElement>> products;
  std::vector<Rational> trace;
  Parity trace_parity = Parity::even;
  /// Z-degrees of the basis elements, when the algebra is graded.
  std::optional<std::vector<int>> degrees;
  /// Degree of the trace map (so traces vanish off degree -trace_degree).
  int trace_degree = 0;

  friend bool operator==(const AlgebraData&, const AlgebraData&) = default;
};

struct ValidationReport {
  bool unital = true;
  bool associative = true;
  bool parity_additive = true;
  bool trace_homogeneous = true;
  bool supersymmetric = true;
  bool gram_invertible = true;
  bool grading_consistent = true;
  std::vector<std::string> messages;

  /// Everything except supersymmetry; enough for Nakayama-only use.
  bool frobenius_ok() const {
    return unital && associative && parity_additive && trace_homogeneous &&
           gram_invertible && grading_consistent;
  }
  bool ok() const { return frobenius_ok() && supersymmetric; }
  std::string summary() const;
};

ValidationReport validate(const AlgebraData& data);

/// Exact linear solve M x = rhs by Gaussian elimination over the rationals.
/// Returns nullopt when M is singular.
std::optional<std::vector<Rational>> solve_linear(
    std::vector<std::vector<Rational>> m, std::vector<Rational> rhs);

/// A validated symmetric (or flagged-nonsymmetric) Frobenius superalgebra.
/// Construction validates the axioms and precomputes the dual basis; a
/// failing supersymmetry check is tolerated but every trace-dependent
/// construction (tau and everything downstream) then refuses with
/// NotSymmetric. Immutable after construction.
class FrobeniusSuperalgebra {
 public:
  /// Throws NotUnital / NotAssociative / GramSingular / ValidationFailed on
  /// hard axiom failures; accepts supersymmetry failures with a flag.
  static FrobeniusSuperalgebra create(AlgebraData data);

  std::size_t dim() const { return data_.basis_labels.size(); }
  const std::string& name() const { return data_.name; }
  const std::string& label(BasisIndex i) const { return data_.basis_labels[i]; }
  std::optional<BasisIndex> index_of(std::string_view label) const;
  Parity parity(BasisIndex i) const { return data_.parities[i]; }
  BasisIndex unit() const { return data_.unit_index; }
  const Rational& trace(BasisIndex i) const { return data_.trace[i]; }
  Rational trace_of(const AlgebraElement& a) const;
  Parity trace_parity() const { return data_.trace_parity; }
  bool symmetric() const { return report_.supersymmetric; }
  void require_symmetric(const char* what) const;

  bool graded() const { return data_.degrees.has_value(); }
  int degree(BasisIndex i) const;
  /// The trace pairs degree d against degree 0; tau has degree d.
  int d() const;

  const AlgebraElement& product(BasisIndex i, BasisIndex j) const {
    return data_.products[i][j];
  }
  AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) const;

  /// Dual basis element b^v with tr(b^v a) = delta_{b,a}.
  const AlgebraElement& dual(BasisIndex i) const { return duals_[i]; }

  /// Parity of a nonzero homogeneous element; nullopt when mixed.
  std::optional<Parity> parity_of(const AlgebraElement& a) const;

  /// Images of the basis under the Nakayama automorphism, the unique
  /// superalgebra automorphism measuring failure of trace symmetry. Verified
  /// to be an automorphism (NotAutomorphism otherwise).
  std::vector<AlgebraElement> nakayama() const;

  const ValidationReport& report() const { return report_; }
  const AlgebraData& data() const { return data_; }

  /// Structural identity: same dimension, parities, unit, products, trace.
  bool same_structure(const FrobeniusSuperalgebra& o) const;

 private:
  explicit FrobeniusSuperalgebra(AlgebraData data, ValidationReport report);

  AlgebraData data_;
  ValidationReport report_;
  std::vector<AlgebraElement> duals_;
};

// Built-in algebras.
FrobeniusSuperalgebra ground();
FrobeniusSuperalgebra clifford_odd();
FrobeniusSuperalgebra clifford_even();
FrobeniusSuperalgebra dual_numbers();
FrobeniusSuperalgebra cyclic_group(unsigned m);
/// Dispatch by name: "ground", "clifford_odd", "clifford_even",
/// "dual_numbers", "cyclic_group(m)".
FrobeniusSuperalgebra builtin(std::string_view name);

}  // namespace frobnil
