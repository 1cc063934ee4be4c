#pragma once

#include <string>

#include "frobnil/nilhecke.hpp"
#include "frobnil/odd_nilhecke.hpp"

namespace frobnil {

/// Deterministic printers. Terms are emitted in key order: tensor word (read
/// highest strand first), then exponent vector, then permutation one-line,
/// all lexicographic. Output round-trips through the expression parser.
/// Tokens print as label[strand] in descending strand order, dots as xi^k in
/// ascending order, crossings along the canonical reduced word.
std::string print_element(const FrobeniusSuperalgebra& A, const TensorElement& e);
std::string print_element(const FrobeniusSuperalgebra& A, const NilCoxElement& e);
std::string print_element(const FrobeniusSuperalgebra& A, const PolElement& e);
std::string print_element(const FrobeniusSuperalgebra& A, const NHElement& e);
std::string print_element(const OddElement& e);

/// Combination of basis labels, e.g. "g + 2*g2" or "1".
std::string print_algebra_element(const FrobeniusSuperalgebra& A, const AlgebraElement& e);

std::string print_scalar(const Rational& c);

}  // namespace frobnil
