#include "frobnil/nilcoxeter.hpp"

#include "frobnil/error.hpp"

namespace frobnil {

NilCoxElement nc_one(const FrobeniusSuperalgebra& A, unsigned n) {
  return NilCoxElement::term(NilCoxKey{unit_word(A, n), Permutation::identity(n)});
}

NilCoxElement nc_from_tensor(const TensorElement& a) {
  NilCoxElement out;
  for (const auto& [w, c] : a.terms())
    out.add_term(NilCoxKey{w, Permutation::identity(w.size())}, c);
  return out;
}

NilCoxElement u_of(const FrobeniusSuperalgebra& A, const Permutation& w) {
  return NilCoxElement::term(NilCoxKey{unit_word(A, w.size()), w});
}

NilCoxElement u_gen_nc(const FrobeniusSuperalgebra& A, unsigned n, unsigned i) {
  return u_of(A, Permutation::transposition(n, i));
}

NilCoxElement nc_mul(const FrobeniusSuperalgebra& A, const NilCoxElement& e1,
                     const NilCoxElement& e2) {
  NilCoxElement out;
  for (const auto& [k1, c1] : e1.terms()) {
    for (const auto& [k2, c2] : e2.terms()) {
      if (k1.word.size() != k2.word.size())
        throw Error(ErrorCode::SizeMismatch, "nilCoxeter factors of different sizes");
      if (k1.perm.length() + k2.perm.length() !=
          k1.perm.compose(k2.perm).length())
        continue;
      const TensorElement moved = superpermute(A, k1.perm, TensorElement::term(k2.word));
      const TensorElement prod = tensor_mul(A, TensorElement::term(k1.word), moved);
      const Permutation wv = k1.perm.compose(k2.perm);
      for (const auto& [w, c] : prod.terms())
        out.add_term(NilCoxKey{w, wv}, c1 * c2 * c);
    }
  }
  return out;
}

Parity nc_key_parity(const FrobeniusSuperalgebra& A, const NilCoxKey& k) {
  return word_parity(A, k.word);
}

}  // namespace frobnil
