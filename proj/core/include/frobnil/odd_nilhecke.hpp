#pragma once

#include <cstdint>

#include "frobnil/nilhecke.hpp"

namespace frobnil {

/// Normal-form monomial c_S * y_1^{k_1} ... y_n^{k_n} * v_w of the odd
/// nilHecke algebra with adjoined Clifford generators. The c-word is written
/// in descending strand order (c_n ... c_1); each c_i squares to 1, so the
/// c-part is a subset of strands.
struct OddNHKey {
  std::vector<std::uint8_t> cbits;
  std::vector<unsigned> exps;
  Permutation perm;

  unsigned size() const { return static_cast<unsigned>(exps.size()); }
  bool has_c(unsigned strand) const { return cbits[strand - 1] != 0; }

  friend bool operator==(const OddNHKey& a, const OddNHKey& b) {
    return a.cbits == b.cbits && a.exps == b.exps && a.perm == b.perm;
  }
  friend bool operator<(const OddNHKey& a, const OddNHKey& b) {
    if (a.cbits.size() != b.cbits.size()) return a.cbits.size() < b.cbits.size();
    for (std::size_t i = a.cbits.size(); i-- > 0;) {
      if (a.cbits[i] != b.cbits[i]) return a.cbits[i] < b.cbits[i];
    }
    if (a.exps != b.exps) return a.exps < b.exps;
    return a.perm < b.perm;
  }
};

using OddElement = Element<OddNHKey>;

OddElement onh_one(unsigned n);
OddElement c_gen(unsigned n, unsigned i);
OddElement y_gen(unsigned n, unsigned i);
OddElement v_gen(unsigned n, unsigned i);

/// All generators are odd: c_i^2 = 1 and distinct c's anticommute; distinct
/// y's anticommute; v_i^2 = 0 with anticommuting far crossings and the usual
/// braid relation; v_i y_{i+1} + y_i v_i = 1 = y_{i+1} v_i + v_i y_i. The c's
/// pair with positions and anticommute with every y and every v with their
/// index unchanged.
OddElement onh_mul(unsigned n, const OddElement& e1, const OddElement& e2);

Parity odd_key_parity(const OddNHKey& k);

/// Algebra map from the Clifford nilHecke algebra determined by
/// c_i -> c_i, x_i -> y_i, u_i -> (c_i - c_{i+1}) v_i. A must be the rank-two
/// Clifford algebra with its odd trace.
OddElement psi(const FrobeniusSuperalgebra& A, const NHElement& e);
/// Inverse map: c_i -> c_i, y_i -> x_i, v_i -> (1/2)(c_i - c_{i+1}) u_i.
NHElement psi_inv(const FrobeniusSuperalgebra& A, const OddElement& e);

/// Checks that A is the rank-two Clifford algebra with odd trace (basis
/// {1, c}, c odd, c^2 = 1, tr(1) = 0, tr(c) = 1); throws AlgebraMismatch.
void require_clifford(const FrobeniusSuperalgebra& A);

}  // namespace frobnil
