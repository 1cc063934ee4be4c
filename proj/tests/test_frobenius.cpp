#include <doctest.h>

#include "frobnil/algebra.hpp"
#include "frobnil/error.hpp"
#include "frobnil/tensor.hpp"
#include "frobnil/verify.hpp"

using namespace frobnil;

namespace {

AlgebraData broken_dual_numbers() {
  // k[y]/y^2 with the trace that only sees the unit: the pairing is singular.
  AlgebraData d;
  d.name = "broken";
  d.basis_labels = {"1", "y"};
  d.parities = {Parity::even, Parity::even};
  d.unit_index = 0;
  d.products = {{AlgebraElement::term(0), AlgebraElement::term(1)},
                {AlgebraElement::term(1), AlgebraElement{}}};
  d.trace = {Rational(1), Rational(0)};
  d.trace_parity = Parity::even;
  return d;
}

TensorWord word2(BasisIndex s1, BasisIndex s2) {
  return TensorWord{{s1, s2}};
}

}  // namespace

TEST_SUITE("frobenius") {
  TEST_CASE("validation of the built-ins") {
    CHECK(ground().report().ok());
    CHECK(dual_numbers().report().ok());
    CHECK(cyclic_group(3).report().ok());

    const auto even = clifford_even();
    CHECK(!even.report().supersymmetric);
    CHECK(even.report().gram_invertible);
    CHECK(!even.symmetric());
  }

  TEST_CASE("singular pairing is rejected") {
    const AlgebraData d = broken_dual_numbers();
    // Hand oracle: the Gram matrix is [[1,0],[0,0]].
    auto tr = [&](const AlgebraElement& a) {
      Rational t;
      for (const auto& [k, c] : a.terms()) t += c * d.trace[k];
      return t;
    };
    CHECK(tr(d.products[0][0]) == Rational(1));
    CHECK(tr(d.products[0][1]) == Rational(0));
    CHECK(tr(d.products[1][0]) == Rational(0));
    CHECK(tr(d.products[1][1]) == Rational(0));

    CHECK(!validate(d).gram_invertible);
    try {
      FrobeniusSuperalgebra::create(d);
      CHECK(false);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::GramSingular);
    }
  }

  TEST_CASE("hard axiom failures are typed") {
    // (y y) z = z z = 0 but y (y z) = y 1 = y: not associative.
    AlgebraData d;
    d.name = "broken_assoc";
    d.basis_labels = {"1", "y", "z"};
    d.parities = {Parity::even, Parity::even, Parity::even};
    d.unit_index = 0;
    const auto b = [](BasisIndex i) { return AlgebraElement::term(i); };
    d.products = {{b(0), b(1), b(2)},
                  {b(1), b(2), b(0)},
                  {b(2), AlgebraElement{}, AlgebraElement{}}};
    d.trace = {Rational(0), Rational(0), Rational(1)};
    d.trace_parity = Parity::even;
    try {
      FrobeniusSuperalgebra::create(d);
      CHECK(false);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotAssociative);
    }

    AlgebraData u = broken_dual_numbers();
    u.trace = {Rational(0), Rational(1)};
    u.products[0][1] = AlgebraElement{};  // 1*y = 0 breaks the unit
    try {
      FrobeniusSuperalgebra::create(u);
      CHECK(false);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotUnital);
    }
  }

  TEST_CASE("dual bases") {
    const auto dn = dual_numbers();
    CHECK(dn.dual(0) == AlgebraElement::term(1));  // 1^v = y
    CHECK(dn.dual(1) == AlgebraElement::term(0));  // y^v = 1

    const auto cl = clifford_odd();
    CHECK(cl.dual(0) == AlgebraElement::term(1));  // 1^v = c
    CHECK(cl.dual(1) == AlgebraElement::term(0));  // c^v = 1

    CHECK(ground().dual(0) == AlgebraElement::term(0));
  }

  TEST_CASE("tau of the built-ins") {
    const auto k = ground();
    CHECK(tau(k) == tensor_one(k, 2));

    const auto cl = clifford_odd();
    CHECK(tau(cl) == token(cl, 1, 1, 2) - token(cl, 1, 2, 2));  // c_1 - c_2

    const auto dn = dual_numbers();
    CHECK(tau(dn) == token(dn, 1, 1, 2) + token(dn, 1, 2, 2));  // y_1 + y_2
  }

  TEST_CASE("tau needs a symmetric trace") {
    CHECK_THROWS_AS(tau(clifford_even()), Error);
    try {
      tau(clifford_even());
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotSymmetric);
    }
  }

  TEST_CASE("Nakayama automorphism") {
    for (const auto* name : {"ground", "clifford_odd", "dual_numbers", "cyclic_group(2)"}) {
      const auto A = builtin(name);
      const auto psi = A.nakayama();
      for (BasisIndex b = 0; b < A.dim(); ++b) CHECK(psi[b] == AlgebraElement::term(b));
    }

    const auto even = clifford_even();
    const auto psi = even.nakayama();
    CHECK(psi[0] == AlgebraElement::term(0));
    CHECK(psi[1] == AlgebraElement::term(1) * Rational(-1));  // psi(c) = -c

    // Independent oracle: the defining identity itself.
    for (BasisIndex a = 0; a < even.dim(); ++a)
      for (BasisIndex b = 0; b < even.dim(); ++b) {
        const int sign =
            pow_sign(parity_bit(even.parity(a)) * parity_bit(even.parity(b)));
        AlgebraElement bpsi = even.multiply(AlgebraElement::term(b), psi[a]);
        CHECK(even.trace_of(even.product(a, b)) == Rational(sign) * even.trace_of(bpsi));
      }
  }

  TEST_CASE("tensor products carry the sign of odd factor exchanges") {
    const auto cl = clifford_odd();
    const BasisIndex c = 1;
    // (c on strand 2)(c on strand 1): the odd factors do not pass each other.
    CHECK(tensor_mul(cl, token(cl, c, 2, 2), token(cl, c, 1, 2)) ==
          TensorElement::term(word2(c, c)));
    // (c on strand 1)(c on strand 2): one exchange of odd factors.
    CHECK(tensor_mul(cl, token(cl, c, 1, 2), token(cl, c, 2, 2)) ==
          TensorElement::term(word2(c, c)) * Rational(-1));
    // Unit law.
    const TensorElement w = TensorElement::term(word2(c, 0));
    CHECK(tensor_mul(cl, tensor_one(cl, 2), w) == w);
    CHECK(tensor_mul(cl, w, tensor_one(cl, 2)) == w);
  }

  TEST_CASE("tensor length mismatch is an error") {
    const auto cl = clifford_odd();
    CHECK_THROWS_AS(tensor_mul(cl, tensor_one(cl, 2), tensor_one(cl, 3)), Error);
  }

  TEST_CASE("superpermutations") {
    const auto cl = clifford_odd();
    const BasisIndex c = 1;
    CHECK(superpermute_simple(cl, 1, TensorElement::term(word2(c, c))) ==
          TensorElement::term(word2(c, c)) * Rational(-1));
    CHECK(superpermute_simple(cl, 1, token(cl, c, 1, 2)) == token(cl, c, 2, 2));
    CHECK(superpermute(cl, Permutation::identity(2), token(cl, c, 1, 2)) ==
          token(cl, c, 1, 2));
  }

  TEST_CASE("superpermutation is a group action") {
    const auto cl = clifford_odd();
    Rng rng(11);
    for (const auto& w : all_perms(4)) {
      const auto words = w.all_reduced_words();
      const TensorElement e = TensorElement::term(random_word(cl, 4, rng));
      TensorElement first;
      bool have = false;
      for (const auto& word : words) {
        TensorElement cur = e;
        for (auto it = word.rbegin(); it != word.rend(); ++it)
          cur = superpermute_simple(cl, *it, cur);
        if (!have) {
          first = cur;
          have = true;
        } else {
          CHECK(cur == first);
        }
      }
      CHECK(superpermute(cl, w, e) == first);
    }
    // Compatibility with composition on random pairs.
    for (int t = 0; t < 50; ++t) {
      const auto w = random_perm(4, rng), v = random_perm(4, rng);
      const TensorElement e = TensorElement::term(random_word(cl, 4, rng));
      CHECK(superpermute(cl, w.compose(v), e) ==
            superpermute(cl, w, superpermute(cl, v, e)));
    }
  }

  TEST_CASE("axiom identity suites for the symmetric built-ins") {
    for (const auto* name :
         {"ground", "clifford_odd", "dual_numbers", "cyclic_group(2)", "cyclic_group(3)"}) {
      const auto r = verify_frobenius(builtin(name));
      INFO(r.text());
      CHECK(r.all_passed());
    }
  }

  TEST_CASE("Nakayama suites including the twisted teleporters") {
    for (const auto* name : {"ground", "clifford_odd", "dual_numbers", "cyclic_group(3)",
                             "clifford_even"}) {
      const auto r = verify_nakayama(builtin(name));
      INFO(r.text());
      CHECK(r.all_passed());
    }
  }

  TEST_CASE("builtin dispatch") {
    CHECK(ground().dim() == 1);
    CHECK(ground().trace_parity() == Parity::even);
    CHECK(clifford_odd().dim() == 2);
    CHECK(clifford_odd().trace_parity() == Parity::odd);
    CHECK(clifford_odd().parity(1) == Parity::odd);
    CHECK(clifford_odd().product(1, 1) == AlgebraElement::term(0));
    const auto c3 = cyclic_group(3);
    CHECK(c3.dim() == 3);
    CHECK(c3.trace_parity() == Parity::even);
    for (BasisIndex i = 0; i < 3; ++i)
      for (BasisIndex j = 0; j < 3; ++j) CHECK(c3.product(i, j) == c3.product(j, i));
    CHECK(builtin("cyclic_group(4)").dim() == 4);
    CHECK_THROWS_AS(builtin("nope"), Error);
    CHECK_THROWS_AS(cyclic_group(0), Error);
  }
}
