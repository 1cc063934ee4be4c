#pragma once

#include "frobnil/permutation.hpp"
#include "frobnil/tensor.hpp"

namespace frobnil {

/// Basis element a * u_w of the crossed product of the tensor power with the
/// nilCoxeter algebra; both factors are subalgebras.
struct NilCoxKey {
  TensorWord word;
  Permutation perm;

  friend bool operator==(const NilCoxKey& a, const NilCoxKey& b) {
    return a.word == b.word && a.perm == b.perm;
  }
  friend bool operator<(const NilCoxKey& a, const NilCoxKey& b) {
    if (a.word < b.word) return true;
    if (b.word < a.word) return false;
    return a.perm < b.perm;
  }
};

using NilCoxElement = Element<NilCoxKey>;

NilCoxElement nc_one(const FrobeniusSuperalgebra& A, unsigned n);
NilCoxElement nc_from_tensor(const TensorElement& a);
/// u_w: trivial tensor factor, permutation w.
NilCoxElement u_of(const FrobeniusSuperalgebra& A, const Permutation& w);
NilCoxElement u_gen_nc(const FrobeniusSuperalgebra& A, unsigned n, unsigned i);

/// Product by the closed rule (a u_w)(b u_v) = a (w . b) u_{wv} when lengths
/// add and zero otherwise, where w . b is the superpermutation action.
NilCoxElement nc_mul(const FrobeniusSuperalgebra& A, const NilCoxElement& e1,
                     const NilCoxElement& e2);

Parity nc_key_parity(const FrobeniusSuperalgebra& A, const NilCoxKey& k);

}  // namespace frobnil
