#pragma once

#include "frobnil/nilcoxeter.hpp"
#include "frobnil/polynomial.hpp"

namespace frobnil {

/// Normal-form basis monomial a * x_1^{k_1} ... x_n^{k_n} * u_w, exactly in
/// this order.
struct NilHeckeKey {
  TensorWord word;
  std::vector<unsigned> exps;
  Permutation perm;

  friend bool operator==(const NilHeckeKey& a, const NilHeckeKey& b) {
    return a.word == b.word && a.exps == b.exps && a.perm == b.perm;
  }
  friend bool operator<(const NilHeckeKey& a, const NilHeckeKey& b) {
    if (a.word < b.word) return true;
    if (b.word < a.word) return false;
    if (a.exps != b.exps) return a.exps < b.exps;
    return a.perm < b.perm;
  }
};

using NHElement = Element<NilHeckeKey>;

/// nilCoxeter algebra over the ground ring: basis indexed by permutations.
using NCkElement = Element<Permutation>;

/// Module basis pair f (x) u_w of (polynomial algebra) (x) (ground
/// nilCoxeter).
struct PolNCKey {
  PolKey pol;
  Permutation perm;

  friend bool operator==(const PolNCKey& a, const PolNCKey& b) {
    return a.pol == b.pol && a.perm == b.perm;
  }
  friend bool operator<(const PolNCKey& a, const PolNCKey& b) {
    if (a.pol < b.pol) return true;
    if (b.pol < a.pol) return false;
    return a.perm < b.perm;
  }
};

using PolNCElement = Element<PolNCKey>;

NHElement nh_one(const FrobeniusSuperalgebra& A, unsigned n);
NHElement u_gen(const FrobeniusSuperalgebra& A, unsigned n, unsigned i);
NHElement x_gen_nh(const FrobeniusSuperalgebra& A, unsigned n, unsigned i);
NHElement nh_from_tensor(const TensorElement& a);
NHElement nh_from_perm(const FrobeniusSuperalgebra& A, unsigned n, const Permutation& w);

/// Key-level injections; both are algebra maps.
NHElement embed_pol(const PolElement& f);
NHElement embed_nc(const NilCoxElement& z);
NHElement embed_nck(const FrobeniusSuperalgebra& A, unsigned n, const NCkElement& z);

/// Classical nilCoxeter product over the ground ring: u_w u_v = u_{wv} when
/// lengths add, else zero.
NCkElement nck_mul(const NCkElement& a, const NCkElement& b);

/// Normal-form product. The right factor is consumed generator by generator;
/// tokens and dots migrate left through the crossings via the defining
/// exchange rules, splitting off teleporter terms with one crossing fewer.
NHElement nh_mul(const FrobeniusSuperalgebra& A, const NHElement& e1, const NHElement& e2);

/// The two sides of the module isomorphism with (polynomials) (x) (ground
/// nilCoxeter): key-level mutually inverse maps.
NHElement bt_expand(const FrobeniusSuperalgebra& A, const PolNCElement& t);
PolNCElement bt_factor(const NHElement& e);

/// Module action: polynomials act by left multiplication, u_i acts by
/// s_i(f) (x) u_i z + d_i(f) (x) z.
PolNCElement act_polnc(const FrobeniusSuperalgebra& A, const NHElement& e,
                       const PolNCElement& t);
/// Polynomial representation: x_i by multiplication, u_j by the divided
/// difference d_j.
PolElement act_pol(const FrobeniusSuperalgebra& A, const NHElement& e,
                   const PolElement& f);

/// Left-right symmetry: the algebra automorphism u_i -> -u_{n-i},
/// x_i -> x_{n+1-i}, a -> pi(a) with pi the longest superpermutation.
NHElement omega_lr(const FrobeniusSuperalgebra& A, const NHElement& e);
/// Up-down symmetry: the anti-automorphism fixing dots and tokens and
/// scaling each crossing by (-1)^p; products reverse plainly. Well defined
/// when the coefficient algebra agrees with its opposite.
NHElement omega_ud(const FrobeniusSuperalgebra& A, const NHElement& e);

struct GradedDegree {
  int z_degree = 0;
  Parity parity = Parity::even;
};

Parity nh_key_parity(const FrobeniusSuperalgebra& A, const NilHeckeKey& k);
/// deg(a) + |k| (d+2) + l(w) (d-2) for a graded algebra with trace of degree
/// -d; NotGraded otherwise.
GradedDegree z_degree(const FrobeniusSuperalgebra& A, const NilHeckeKey& k);

}  // namespace frobnil
