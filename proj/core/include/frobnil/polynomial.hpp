#pragma once

#include "frobnil/permutation.hpp"
#include "frobnil/tensor.hpp"

namespace frobnil {

/// Basis monomial a * x_1^{k_1} ... x_n^{k_n}, in that normal order.
struct PolKey {
  TensorWord word;
  std::vector<unsigned> exps;

  unsigned total_degree() const {
    unsigned t = 0;
    for (unsigned k : exps) t += k;
    return t;
  }

  friend bool operator==(const PolKey& a, const PolKey& b) {
    return a.word == b.word && a.exps == b.exps;
  }
  friend bool operator<(const PolKey& a, const PolKey& b) {
    if (a.word < b.word) return true;
    if (b.word < a.word) return false;
    return a.exps < b.exps;
  }
};

using PolElement = Element<PolKey>;

PolElement pol_one(const FrobeniusSuperalgebra& A, unsigned n);
PolElement x_gen(const FrobeniusSuperalgebra& A, unsigned n, unsigned i);
PolElement pol_from_tensor(const TensorElement& a);

/// Normal-ordered product. The right factor's tensor word commutes past the
/// left x-block with sign (-1)^{p |a| |k|}, and x's of distinct index swap
/// with sign (-1)^p each.
PolElement pol_mul(const FrobeniusSuperalgebra& A, const PolElement& e1,
                   const PolElement& e2);

/// Superalgebra automorphism: superpermutes the tensor word, swaps the
/// exponents k_i, k_{i+1}, and contributes (-1)^{p k_i k_{i+1}} from
/// re-normal-ordering the x's.
PolElement s_action(const FrobeniusSuperalgebra& A, unsigned i, const PolElement& f);
PolElement s_action_perm(const FrobeniusSuperalgebra& A, const Permutation& w,
                         const PolElement& f);

/// Divided difference on strands i, i+1: zero on the tensor factor,
/// (-1)^{p+1} tau_i on x_i, tau_i on x_{i+1}, extended one generator at a
/// time by the twisted Leibniz rule d(fg) = d(f) g + s_i(f) d(g).
PolElement ddiff(const FrobeniusSuperalgebra& A, unsigned i, const PolElement& f);

/// Closed form for even trace parity: d_i(a m) = tau_i a (m - s_i m) /
/// (x_{i+1} - x_i), by exact polynomial division. The numerator is always
/// divisible; NonDivisible signals an internal inconsistency.
PolElement ddiff_closed_even(const FrobeniusSuperalgebra& A, unsigned i,
                             const PolElement& f);

Parity pol_key_parity(const FrobeniusSuperalgebra& A, const PolKey& k);

}  // namespace frobnil
