#include <doctest.h>

#include "frobnil/odd_nilhecke.hpp"
#include "frobnil/error.hpp"
#include "frobnil/verify.hpp"

using namespace frobnil;

TEST_SUITE("odd_nilhecke") {
  TEST_CASE("defining products") {
    CHECK(onh_mul(2, v_gen(2, 1), v_gen(2, 1)).is_zero());
    // v_1 y_2 = 1 - y_1 v_1.
    const OddNHKey y1v1{{0, 0}, {1, 0}, Permutation::transposition(2, 1)};
    CHECK(onh_mul(2, v_gen(2, 1), y_gen(2, 2)) ==
          onh_one(2) - OddElement::term(y1v1));
    CHECK(onh_mul(2, c_gen(2, 1), c_gen(2, 1)) == onh_one(2));
    // Anticommutators.
    CHECK(onh_mul(2, c_gen(2, 1), c_gen(2, 2)) ==
          onh_mul(2, c_gen(2, 2), c_gen(2, 1)) * Rational(-1));
    CHECK(onh_mul(2, y_gen(2, 1), y_gen(2, 2)) ==
          onh_mul(2, y_gen(2, 2), y_gen(2, 1)) * Rational(-1));
    CHECK(onh_mul(2, v_gen(2, 1), c_gen(2, 1)) ==
          onh_mul(2, c_gen(2, 1), v_gen(2, 1)) * Rational(-1));
  }

  TEST_CASE("relation suites including the far anticommutation") {
    for (unsigned n = 2; n <= 4; ++n) {
      const auto r = onh_verify(n);
      INFO(r.text());
      CHECK(r.all_passed());
    }
  }

  TEST_CASE("forward dictionary") {
    const auto cl = clifford_odd();
    // u_1 -> (c_1 - c_2) v_1.
    const auto v1 = v_gen(3, 1);
    CHECK(psi(cl, u_gen(cl, 3, 1)) ==
          onh_mul(3, c_gen(3, 1) - c_gen(3, 2), v1));
    // x_3 -> y_3.
    CHECK(psi(cl, x_gen_nh(cl, 3, 3)) == y_gen(3, 3));
    // tau_1 -> c_1 - c_2.
    CHECK(psi(cl, nh_from_tensor(token(cl, 1, 1, 3) - token(cl, 1, 2, 3))) ==
          c_gen(3, 1) - c_gen(3, 2));
  }

  TEST_CASE("inverse dictionary") {
    const auto cl = clifford_odd();
    // v_1 -> (1/2)(c_1 - c_2) u_1.
    CHECK(psi_inv(cl, v_gen(2, 1)) ==
          nh_mul(cl, nh_from_tensor((token(cl, 1, 1, 2) - token(cl, 1, 2, 2)) *
                                    Rational(1, 2)),
                 u_gen(cl, 2, 1)));
    CHECK(psi_inv(cl, psi(cl, u_gen(cl, 2, 1))) == u_gen(cl, 2, 1));
    CHECK(psi_inv(cl, y_gen(2, 2)) == x_gen_nh(cl, 2, 2));
  }

  TEST_CASE("round trips on truncated bases") {
    const auto cl = clifford_odd();
    for (const auto& w : all_words(cl, 2))
      for (const auto& k : all_exps(2, 3))
        for (const auto& p : all_perms(2)) {
          const NHElement e = NHElement::term(NilHeckeKey{w, k, p});
          CHECK(psi_inv(cl, psi(cl, e)) == e);
        }
    Rng rng(41);
    for (int t = 0; t < 100; ++t) {
      const OddElement e = OddElement::term(random_odd_key(3, 3, rng));
      CHECK(psi(cl, psi_inv(cl, e)) == e);
    }
  }

  TEST_CASE("bridge suite") {
    SuiteOptions opts;
    opts.trials = 100;
    for (unsigned n = 2; n <= 3; ++n) {
      const auto r = verify_clifford_bridge(n, 2, opts);
      INFO(r.text());
      CHECK(r.all_passed());
    }
  }

  TEST_CASE("the dictionary needs the Clifford algebra") {
    CHECK_THROWS_AS(psi(ground(), nh_one(ground(), 2)), Error);
    try {
      psi(dual_numbers(), nh_one(dual_numbers(), 2));
      CHECK(false);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::AlgebraMismatch);
    }
  }

  TEST_CASE("associativity on random triples") {
    Rng rng(43);
    for (int t = 0; t < 100; ++t) {
      const OddElement e1 = OddElement::term(random_odd_key(3, 2, rng));
      const OddElement e2 = OddElement::term(random_odd_key(3, 2, rng));
      const OddElement e3 = OddElement::term(random_odd_key(3, 2, rng));
      CHECK(onh_mul(3, onh_mul(3, e1, e2), e3) == onh_mul(3, e1, onh_mul(3, e2, e3)));
    }
  }
}
