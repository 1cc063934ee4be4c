#pragma once

#include "frobnil/algebra.hpp"
#include "frobnil/permutation.hpp"
#include "frobnil/tensor_word.hpp"

namespace frobnil {

Parity word_parity(const FrobeniusSuperalgebra& A, const TensorWord& w);
/// Z-degree of a basis word; requires a graded algebra.
int word_degree(const FrobeniusSuperalgebra& A, const TensorWord& w);
/// Throws AlgebraMismatch when the word indexes outside A's basis.
void check_word(const FrobeniusSuperalgebra& A, const TensorWord& w);

TensorWord unit_word(const FrobeniusSuperalgebra& A, unsigned n);
TensorElement tensor_one(const FrobeniusSuperalgebra& A, unsigned n);
/// Basis element b placed on strand i of an n-strand word, units elsewhere.
TensorElement token(const FrobeniusSuperalgebra& A, BasisIndex b, unsigned strand,
                    unsigned n);
/// Linear extension of token placement.
TensorElement embed_on_strand(const FrobeniusSuperalgebra& A, const AlgebraElement& a,
                              unsigned strand, unsigned n);

/// Product in the n-fold super tensor power: slotwise products with the
/// Koszul sign (-1)^{sum_{i<j} |a_i||b_j|} for words a, b (strand indices).
TensorElement tensor_mul(const FrobeniusSuperalgebra& A, const TensorElement& a,
                         const TensorElement& b);

/// Swap of strands i, i+1 with sign (-1)^{|a_i||a_{i+1}|}.
TensorElement superpermute_simple(const FrobeniusSuperalgebra& A, unsigned i,
                                  const TensorElement& e);
/// Left action of a permutation, composed along a reduced word; the factor on
/// strand j lands on strand w(j).
TensorElement superpermute(const FrobeniusSuperalgebra& A, const Permutation& w,
                           const TensorElement& e);

/// tau = sum_b (-1)^{p|b|} b (x) b^v on two strands (b on strand 2, b^v on
/// strand 1). Requires a symmetric algebra.
TensorElement tau(const FrobeniusSuperalgebra& A);
/// tau placed on strands i, i+1 of an n-strand word.
TensorElement tau_i(const FrobeniusSuperalgebra& A, unsigned n, unsigned i);

/// The two height-ordered teleporters of the Nakayama-twisted calculus:
/// upper = sum_b (-1)^{p|b|} (b on strand 2) * (b^v on strand 1), composing
/// the strand-2 token after the strand-1 token; lower composes in the other
/// height order. Defined for any Frobenius algebra.
TensorElement teleporter_upper(const FrobeniusSuperalgebra& A);
TensorElement teleporter_lower(const FrobeniusSuperalgebra& A);

}  // namespace frobnil
