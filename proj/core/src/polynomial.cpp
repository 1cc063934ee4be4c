#include "frobnil/polynomial.hpp"

#include <algorithm>

#include "frobnil/error.hpp"

namespace frobnil {

namespace {

unsigned exps_sum(const std::vector<unsigned>& k) {
  unsigned t = 0;
  for (unsigned v : k) t += v;
  return t;
}

}  // namespace

PolElement pol_one(const FrobeniusSuperalgebra& A, unsigned n) {
  return PolElement::term(PolKey{unit_word(A, n), std::vector<unsigned>(n, 0)});
}

PolElement x_gen(const FrobeniusSuperalgebra& A, unsigned n, unsigned i) {
  if (i < 1 || i > n) throw Error(ErrorCode::StrandOutOfRange, "x index out of range");
  std::vector<unsigned> k(n, 0);
  k[i - 1] = 1;
  return PolElement::term(PolKey{unit_word(A, n), std::move(k)});
}

PolElement pol_from_tensor(const TensorElement& a) {
  PolElement out;
  for (const auto& [w, c] : a.terms())
    out.add_term(PolKey{w, std::vector<unsigned>(w.size(), 0)}, c);
  return out;
}

PolElement pol_mul(const FrobeniusSuperalgebra& A, const PolElement& e1,
                   const PolElement& e2) {
  const unsigned pbit = parity_bit(A.trace_parity());
  PolElement out;
  for (const auto& [k1, c1] : e1.terms()) {
    for (const auto& [k2, c2] : e2.terms()) {
      if (k1.word.size() != k2.word.size())
        throw Error(ErrorCode::SizeMismatch, "polynomial factors of different sizes");
      const unsigned n = k1.word.size();
      // x-block of e1 past the word of e2, then merge the two x-blocks.
      unsigned long long swaps =
          static_cast<unsigned long long>(parity_bit(word_parity(A, k2.word))) *
          exps_sum(k1.exps);
      for (unsigned j = 0; j < n; ++j)
        for (unsigned m = j + 1; m < n; ++m)
          swaps += static_cast<unsigned long long>(k1.exps[m]) * k2.exps[j];
      const Rational sign(pow_sign(pbit * (swaps & 1ull)));

      std::vector<unsigned> exps(n);
      for (unsigned j = 0; j < n; ++j) exps[j] = k1.exps[j] + k2.exps[j];

      const TensorElement prod =
          tensor_mul(A, TensorElement::term(k1.word), TensorElement::term(k2.word));
      for (const auto& [w, c] : prod.terms())
        out.add_term(PolKey{w, exps}, c1 * c2 * c * sign);
    }
  }
  return out;
}

PolElement s_action(const FrobeniusSuperalgebra& A, unsigned i, const PolElement& f) {
  const unsigned pbit = parity_bit(A.trace_parity());
  PolElement out;
  for (const auto& [k, c] : f.terms()) {
    if (i < 1 || i >= k.word.size())
      throw Error(ErrorCode::IndexOutOfRange, "strand index out of range");
    const TensorElement moved = superpermute_simple(A, i, TensorElement::term(k.word));
    std::vector<unsigned> exps = k.exps;
    std::swap(exps[i - 1], exps[i]);
    const unsigned long long cross =
        static_cast<unsigned long long>(k.exps[i - 1]) * k.exps[i];
    const Rational sign(pow_sign(pbit * (cross & 1ull)));
    for (const auto& [w, cw] : moved.terms()) out.add_term(PolKey{w, exps}, c * cw * sign);
  }
  return out;
}

PolElement s_action_perm(const FrobeniusSuperalgebra& A, const Permutation& w,
                         const PolElement& f) {
  PolElement cur = f;
  const auto word = w.reduced_word();
  for (auto it = word.rbegin(); it != word.rend(); ++it) cur = s_action(A, *it, cur);
  return cur;
}

PolElement ddiff(const FrobeniusSuperalgebra& A, unsigned i, const PolElement& f) {
  A.require_symmetric("the divided difference");
  PolElement out;
  for (const auto& [key, c] : f.terms()) {
    const unsigned n = key.word.size();
    if (i < 1 || i + 1 > n)
      throw Error(ErrorCode::IndexOutOfRange, "divided difference index out of range");

    // Peel the monomial left to right: the tensor word as one block, then the
    // x factors in normal order. d(a g) = s_i(a) d(g), and
    // d(x_{j_1} ... x_{j_m}) =
    //   sum_t x_{s_i(j_1)} ... x_{s_i(j_{t-1})} d(x_{j_t}) x_{j_{t+1}} ... x_{j_m}.
    const PolElement ti = pol_from_tensor(tau_i(A, n, i));
    PolElement prefix = pol_one(A, n);  // s_i of the already-peeled prefix
    PolElement total;
    for (unsigned j = 1; j <= n; ++j) {
      for (unsigned t = 0; t < key.exps[j - 1]; ++t) {
        PolElement dgen;
        if (j == i)
          dgen = ti * Rational(pow_sign(parity_bit(A.trace_parity()) + 1u));
        else if (j == i + 1)
          dgen = ti;
        if (!dgen.is_zero()) {
          // suffix: x_j^{remaining at j} x_{j+1}^{k_{j+1}} ...
          std::vector<unsigned> suffix(n, 0);
          suffix[j - 1] = key.exps[j - 1] - t - 1;
          for (unsigned m = j; m < n; ++m) suffix[m] = key.exps[m];
          const PolElement suf = PolElement::term(PolKey{unit_word(A, n), suffix});
          total += pol_mul(A, pol_mul(A, prefix, dgen), suf);
        }
        prefix = pol_mul(A, prefix, x_gen(A, n, j == i ? i + 1 : (j == i + 1 ? i : j)));
      }
    }
    // s_i applied to the tensor word in front.
    const TensorElement sw = superpermute_simple(A, i, TensorElement::term(key.word));
    out += pol_mul(A, pol_from_tensor(sw), total) * c;
  }
  return out;
}

PolElement ddiff_closed_even(const FrobeniusSuperalgebra& A, unsigned i,
                             const PolElement& f) {
  if (is_odd(A.trace_parity()))
    throw Error(ErrorCode::OddTraceParity, "closed divided difference needs even trace parity");
  A.require_symmetric("the divided difference");
  PolElement out;
  for (const auto& [key, c] : f.terms()) {
    const unsigned n = key.word.size();
    if (i < 1 || i + 1 > n)
      throw Error(ErrorCode::IndexOutOfRange, "divided difference index out of range");

    // Numerator m - s_i(m) on the pure x-monomial; p even, so no signs.
    std::vector<unsigned> swapped = key.exps;
    std::swap(swapped[i - 1], swapped[i]);
    PolElement num = PolElement::term(PolKey{unit_word(A, n), key.exps});
    num -= PolElement::term(PolKey{unit_word(A, n), swapped});

    // Long division by (x_{i+1} - x_i), monic in x_{i+1}.
    const PolElement divisor = x_gen(A, n, i + 1) - x_gen(A, n, i);
    PolElement quotient;
    while (!num.is_zero()) {
      unsigned dmax = 0;
      for (const auto& [k, cv] : num.terms()) {
        (void)cv;
        dmax = std::max(dmax, k.exps[i]);
      }
      if (dmax == 0) throw Error(ErrorCode::NonDivisible, "division left a remainder");
      PolElement q;
      for (const auto& [k, cv] : num.terms()) {
        if (k.exps[i] != dmax) continue;
        PolKey nk = k;
        nk.exps[i] -= 1;
        q.add_term(std::move(nk), cv);
      }
      quotient += q;
      num -= pol_mul(A, q, divisor);
    }

    const PolElement ti = pol_from_tensor(tau_i(A, n, i));
    const PolElement aword = pol_from_tensor(TensorElement::term(key.word));
    out += pol_mul(A, pol_mul(A, ti, aword), quotient) * c;
  }
  return out;
}

Parity pol_key_parity(const FrobeniusSuperalgebra& A, const PolKey& k) {
  Parity p = word_parity(A, k.word);
  if (k.total_degree() % 2 == 1) p += A.trace_parity();
  return p;
}

}  // namespace frobnil
