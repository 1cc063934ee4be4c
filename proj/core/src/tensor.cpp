#include "frobnil/tensor.hpp"

#include "frobnil/error.hpp"

namespace frobnil {

Parity word_parity(const FrobeniusSuperalgebra& A, const TensorWord& w) {
  Parity p = Parity::even;
  for (BasisIndex b : w.entries) p += A.parity(b);
  return p;
}

void check_word(const FrobeniusSuperalgebra& A, const TensorWord& w) {
  for (BasisIndex b : w.entries)
    if (b >= A.dim())
      throw Error(ErrorCode::AlgebraMismatch,
                  "tensor word indexes outside the basis of '" + A.name() + "'");
}

int word_degree(const FrobeniusSuperalgebra& A, const TensorWord& w) {
  int deg = 0;
  for (BasisIndex b : w.entries) deg += A.degree(b);
  return deg;
}

TensorWord unit_word(const FrobeniusSuperalgebra& A, unsigned n) {
  return TensorWord{std::vector<BasisIndex>(n, A.unit())};
}

TensorElement tensor_one(const FrobeniusSuperalgebra& A, unsigned n) {
  return TensorElement::term(unit_word(A, n));
}

TensorElement token(const FrobeniusSuperalgebra& A, BasisIndex b, unsigned strand,
                    unsigned n) {
  if (strand < 1 || strand > n)
    throw Error(ErrorCode::StrandOutOfRange, "token strand out of range");
  TensorWord w = unit_word(A, n);
  w.at(strand) = b;
  return TensorElement::term(std::move(w));
}

TensorElement embed_on_strand(const FrobeniusSuperalgebra& A, const AlgebraElement& a,
                              unsigned strand, unsigned n) {
  TensorElement out;
  for (const auto& [b, c] : a.terms()) out += token(A, b, strand, n) * c;
  return out;
}

TensorElement tensor_mul(const FrobeniusSuperalgebra& A, const TensorElement& a,
                         const TensorElement& b) {
  TensorElement out;
  for (const auto& [wa, ca] : a.terms()) {
    check_word(A, wa);
    for (const auto& [wb, cb] : b.terms()) {
      check_word(A, wb);
      if (wa.size() != wb.size())
        throw Error(ErrorCode::LengthMismatch, "tensor words of different lengths");
      const unsigned n = wa.size();
      // Koszul sign: each odd factor of b on strand j passes the odd factors
      // of a on strands i < j.
      unsigned crossings = 0;
      unsigned odd_a_below = 0;
      for (unsigned s = 1; s <= n; ++s) {
        if (is_odd(A.parity(wb.at(s)))) crossings += odd_a_below;
        if (is_odd(A.parity(wa.at(s)))) ++odd_a_below;
      }
      const Rational sign(pow_sign(crossings));
      // Slotwise products, expanded through the structure constants.
      TensorElement partial = TensorElement::term(unit_word(A, n), ca * cb * sign);
      for (unsigned s = 1; s <= n; ++s) {
        const AlgebraElement& prod = A.product(wa.at(s), wb.at(s));
        TensorElement next;
        for (const auto& [w, c] : partial.terms()) {
          for (const auto& [k, ck] : prod.terms()) {
            TensorWord nw = w;
            nw.at(s) = k;
            next.add_term(std::move(nw), c * ck);
          }
        }
        partial = std::move(next);
      }
      out += partial;
    }
  }
  return out;
}

TensorElement superpermute_simple(const FrobeniusSuperalgebra& A, unsigned i,
                                  const TensorElement& e) {
  TensorElement out;
  for (const auto& [w, c] : e.terms()) {
    if (i < 1 || i >= w.size())
      throw Error(ErrorCode::IndexOutOfRange, "transposition index out of range");
    const unsigned bits =
        parity_bit(A.parity(w.at(i))) * parity_bit(A.parity(w.at(i + 1)));
    TensorWord nw = w;
    std::swap(nw.at(i), nw.at(i + 1));
    out.add_term(std::move(nw), c * Rational(pow_sign(bits)));
  }
  return out;
}

TensorElement superpermute(const FrobeniusSuperalgebra& A, const Permutation& w,
                           const TensorElement& e) {
  for (const auto& [word, c] : e.terms()) {
    (void)c;
    if (word.size() != w.size())
      throw Error(ErrorCode::LengthMismatch, "permutation size does not match word length");
  }
  TensorElement cur = e;
  const auto word = w.reduced_word();
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    cur = superpermute_simple(A, *it, cur);
  return cur;
}

TensorElement teleporter_upper(const FrobeniusSuperalgebra& A) {
  TensorElement out;
  for (BasisIndex b = 0; b < A.dim(); ++b) {
    const Rational sign(pow_sign(parity_bit(A.trace_parity()) * parity_bit(A.parity(b))));
    const TensorElement hi = token(A, b, 2, 2);
    out += tensor_mul(A, hi, embed_on_strand(A, A.dual(b), 1, 2)) * sign;
  }
  return out;
}

TensorElement teleporter_lower(const FrobeniusSuperalgebra& A) {
  TensorElement out;
  for (BasisIndex b = 0; b < A.dim(); ++b) {
    const Rational sign(pow_sign(parity_bit(A.trace_parity()) * parity_bit(A.parity(b))));
    const TensorElement hi = token(A, b, 1, 2);
    out += tensor_mul(A, hi, embed_on_strand(A, A.dual(b), 2, 2)) * sign;
  }
  return out;
}

TensorElement tau(const FrobeniusSuperalgebra& A) {
  A.require_symmetric("tau");
  return teleporter_upper(A);
}

TensorElement tau_i(const FrobeniusSuperalgebra& A, unsigned n, unsigned i) {
  if (i < 1 || i + 1 > n) throw Error(ErrorCode::IndexOutOfRange, "tau_i index out of range");
  const TensorElement t = tau(A);
  TensorElement out;
  for (const auto& [w2, c] : t.terms()) {
    TensorWord w = unit_word(A, n);
    w.at(i) = w2.at(1);
    w.at(i + 1) = w2.at(2);
    out.add_term(std::move(w), c);
  }
  return out;
}

}  // namespace frobnil
