#include <doctest.h>

#include "frobnil/nilhecke.hpp"
#include "frobnil/error.hpp"
#include "frobnil/verify.hpp"

using namespace frobnil;

namespace {

NHElement nh_monomial(const FrobeniusSuperalgebra& A, unsigned n, std::vector<unsigned> k,
                      Permutation w) {
  return NHElement::term(NilHeckeKey{unit_word(A, n), std::move(k), std::move(w)});
}

}  // namespace

TEST_SUITE("nilhecke") {
  TEST_CASE("dot-crossing exchange") {
    const auto k = ground();
    const auto s1_2 = Permutation::transposition(2, 1);
    // u_1 x_2 = x_1 u_1 + 1 over the ground ring.
    CHECK(nh_mul(k, u_gen(k, 2, 1), x_gen_nh(k, 2, 2)) ==
          nh_monomial(k, 2, {1, 0}, s1_2) + nh_one(k, 2));

    const auto cl = clifford_odd();
    const NHElement tau1 = nh_from_tensor(token(cl, 1, 1, 2) - token(cl, 1, 2, 2));
    CHECK(nh_mul(cl, u_gen(cl, 2, 1), x_gen_nh(cl, 2, 2)) ==
          nh_monomial(cl, 2, {1, 0}, s1_2) + tau1);
    // u_1 x_1 = x_2 u_1 - (-1)^p tau_1 = x_2 u_1 + tau_1 for odd parity.
    CHECK(nh_mul(cl, u_gen(cl, 2, 1), x_gen_nh(cl, 2, 1)) ==
          nh_monomial(cl, 2, {0, 1}, s1_2) + tau1);

    CHECK(nh_mul(cl, u_gen(cl, 2, 1), u_gen(cl, 2, 1)).is_zero());
  }

  TEST_CASE("nonsymmetric algebras are refused") {
    const auto even = clifford_even();
    CHECK_THROWS_AS(nh_mul(even, nh_one(even, 2), nh_one(even, 2)), Error);
  }

  TEST_CASE("relation suites") {
    for (unsigned n = 2; n <= 4; ++n) {
      const auto r = nh_verify_relations(ground(), n);
      INFO(r.text());
      CHECK(r.all_passed());
    }
    for (const auto* name : {"clifford_odd", "dual_numbers", "cyclic_group(3)"}) {
      const auto r = nh_verify_relations(builtin(name), 3);
      INFO(r.text());
      CHECK(r.all_passed());
    }
  }

  TEST_CASE("expansion and factorization are mutually inverse") {
    const auto cl = clifford_odd();
    const auto x1u = NilHeckeKey{unit_word(cl, 2), {1, 0}, Permutation::transposition(2, 1)};
    CHECK(bt_expand(cl, PolNCElement::term(
                            PolNCKey{PolKey{unit_word(cl, 2), {1, 0}},
                                     Permutation::transposition(2, 1)})) ==
          NHElement::term(x1u));
    CHECK(bt_factor(NHElement::term(x1u)) ==
          PolNCElement::term(PolNCKey{PolKey{unit_word(cl, 2), {1, 0}},
                                      Permutation::transposition(2, 1)}));

    for (const auto& w : all_words(cl, 2))
      for (const auto& k : all_exps(2, 3))
        for (const auto& p : all_perms(2)) {
          const auto pair = PolNCElement::term(PolNCKey{PolKey{w, k}, p});
          CHECK(bt_factor(bt_expand(cl, pair)) == pair);
        }
  }

  TEST_CASE("module action on polynomial-crossing pairs") {
    const auto k = ground();
    const auto id2 = Permutation::identity(2);
    const auto s1 = Permutation::transposition(2, 1);
    const auto one = PolKey{unit_word(k, 2), {0, 0}};

    // u_1 . (1 (x) 1) = 1 (x) u_1.
    CHECK(act_polnc(k, u_gen(k, 2, 1), PolNCElement::term(PolNCKey{one, id2})) ==
          PolNCElement::term(PolNCKey{one, s1}));

    // u_1 . (x_2 (x) 1) = x_1 (x) u_1 + 1 (x) 1.
    const auto x2 = PolKey{unit_word(k, 2), {0, 1}};
    const auto x1 = PolKey{unit_word(k, 2), {1, 0}};
    CHECK(act_polnc(k, u_gen(k, 2, 1), PolNCElement::term(PolNCKey{x2, id2})) ==
          PolNCElement::term(PolNCKey{x1, s1}) + PolNCElement::term(PolNCKey{one, id2}));

    // Polynomials act by left multiplication.
    CHECK(act_polnc(k, x_gen_nh(k, 2, 1), PolNCElement::term(PolNCKey{x2, s1})) ==
          PolNCElement::term(PolNCKey{PolKey{unit_word(k, 2), {1, 1}}, s1}));
  }

  TEST_CASE("polynomial representation") {
    const auto cl = clifford_odd();
    CHECK(act_pol(cl, u_gen(cl, 2, 1), x_gen(cl, 2, 2)) ==
          pol_from_tensor(token(cl, 1, 1, 2) - token(cl, 1, 2, 2)));
    Rng rng(17);
    const auto f = random_pol_element(cl, 2, 4, 3, rng);
    CHECK(act_pol(cl, nh_one(cl, 2), f) == f);
  }

  TEST_CASE("the polynomial representation is not faithful") {
    const auto dn = dual_numbers();
    // (y (x) y) u_1 is a basis element, hence nonzero.
    const NHElement witness = NHElement::term(
        NilHeckeKey{TensorWord{{1, 1}}, {0, 0}, Permutation::transposition(2, 1)});
    CHECK(!witness.is_zero());
    for (const auto& w : all_words(dn, 2))
      for (const auto& k : all_exps(2, 6))
        CHECK(act_pol(dn, witness, PolElement::term(PolKey{w, k})).is_zero());
  }

  TEST_CASE("left-right symmetry on generators") {
    const auto k = ground();
    CHECK(omega_lr(k, u_gen(k, 3, 1)) == u_gen(k, 3, 2) * Rational(-1));
    CHECK(omega_lr(k, x_gen_nh(k, 3, 1)) == x_gen_nh(k, 3, 3));
    const auto cl = clifford_odd();
    CHECK(omega_lr(cl, nh_from_tensor(token(cl, 1, 1, 3))) ==
          nh_from_tensor(token(cl, 1, 3, 3)));
  }

  TEST_CASE("up-down symmetry on generators") {
    const auto cl = clifford_odd();
    CHECK(omega_ud(cl, u_gen(cl, 2, 1)) == u_gen(cl, 2, 1) * Rational(-1));
    CHECK(omega_ud(cl, x_gen_nh(cl, 2, 1)) == x_gen_nh(cl, 2, 1));
    const auto k = ground();
    CHECK(omega_ud(k, u_gen(k, 2, 1)) == u_gen(k, 2, 1));
  }

  TEST_CASE("symmetry suites") {
    SuiteOptions opts;
    opts.trials = 80;
    for (const auto* name : {"ground", "clifford_odd", "dual_numbers"}) {
      const auto r = verify_symmetries(builtin(name), 3, opts);
      INFO(r.text());
      CHECK(r.all_passed());
    }
  }

  TEST_CASE("grading over the ground ring") {
    const auto k = ground();
    const auto key_u =
        NilHeckeKey{unit_word(k, 2), {0, 0}, Permutation::transposition(2, 1)};
    CHECK(z_degree(k, key_u).z_degree == -2);
    const auto key_x = NilHeckeKey{unit_word(k, 2), {1, 0}, Permutation::identity(2)};
    CHECK(z_degree(k, key_x).z_degree == 2);
    const auto key_1 = NilHeckeKey{unit_word(k, 2), {0, 0}, Permutation::identity(2)};
    CHECK(z_degree(k, key_1).z_degree == 0);
    CHECK(z_degree(k, key_1).parity == Parity::even);

    CHECK_THROWS_AS(z_degree(clifford_odd(), key_1), Error);

    SuiteOptions opts;
    opts.trials = 100;
    const auto r = verify_grading(k, 3, opts);
    INFO(r.text());
    CHECK(r.all_passed());
  }

  TEST_CASE("parity bookkeeping under multiplication") {
    const auto cl = clifford_odd();
    Rng rng(31);
    for (int t = 0; t < 100; ++t) {
      const auto k1 = random_nh_key(cl, 2, 2, rng);
      const auto k2 = random_nh_key(cl, 2, 2, rng);
      const Parity want = nh_key_parity(cl, k1) + nh_key_parity(cl, k2);
      const NHElement prod = nh_mul(cl, NHElement::term(k1), NHElement::term(k2));
      for (const auto& [key, c] : prod.terms()) {
        (void)c;
        CHECK(nh_key_parity(cl, key) == want);
      }
    }
  }

  TEST_CASE("module action suites") {
    SuiteOptions opts;
    opts.trials = 60;
    for (const auto* name : {"ground", "clifford_odd", "dual_numbers"}) {
      const auto r = verify_module_actions(builtin(name), 2, opts);
      INFO(r.text());
      CHECK(r.all_passed());
    }
  }

  TEST_CASE("basis theorem suites") {
    SuiteOptions opts;
    opts.trials = 60;
    for (const auto* name : {"ground", "clifford_odd"}) {
      const auto r = verify_basis_theorem(builtin(name), 2, 3, opts);
      INFO(r.text());
      CHECK(r.all_passed());
    }
  }

  TEST_CASE("changing the trace transports the presentation") {
    // Second trace on the dual numbers through the invertible element 1 + y:
    // tr2(a) = tr1(a (1+y)).
    const auto A1 = dual_numbers();
    AlgebraData d = A1.data();
    d.name = "dual_numbers_tr2";
    d.trace = {Rational(1), Rational(1)};
    const auto A2 = FrobeniusSuperalgebra::create(d);
    CHECK(A2.symmetric());

    const unsigned n = 2;
    const AlgebraElement u_elt = AlgebraElement::term(0) + AlgebraElement::term(1);
    // Dictionary: crossings and tokens are fixed; each dot gains a token of
    // 1 + y on its strand.
    auto phi_x = [&](unsigned i) {
      return nh_mul(A2, x_gen_nh(A2, n, i),
                    nh_from_tensor(embed_on_strand(A2, u_elt, i, n)));
    };
    const NHElement u1 = u_gen(A2, n, 1);
    const NHElement tau1_old = nh_from_tensor(
        embed_on_strand(A2, AlgebraElement::term(1), 1, n) +
        embed_on_strand(A2, AlgebraElement::term(1), 2, n));  // tau of tr1

    // Images of the defining dot-crossing relations of the tr1 presentation.
    CHECK((nh_mul(A2, u1, phi_x(2)) - nh_mul(A2, phi_x(1), u1) - tau1_old).is_zero());
    CHECK((nh_mul(A2, phi_x(2), u1) - nh_mul(A2, u1, phi_x(1)) - tau1_old).is_zero());
    // Dot exchange and token-dot exchange instances.
    CHECK((nh_mul(A2, phi_x(1), phi_x(2)) - nh_mul(A2, phi_x(2), phi_x(1))).is_zero());
    const NHElement y1 = nh_from_tensor(embed_on_strand(A2, AlgebraElement::term(1), 1, n));
    for (unsigned i = 1; i <= n; ++i)
      CHECK((nh_mul(A2, y1, phi_x(i)) - nh_mul(A2, phi_x(i), y1)).is_zero());
  }
}
