#include <doctest.h>

#include "frobnil/polynomial.hpp"
#include "frobnil/error.hpp"
#include "frobnil/verify.hpp"

using namespace frobnil;

namespace {

PolElement monomial(const FrobeniusSuperalgebra& A, unsigned n, std::vector<unsigned> k) {
  return PolElement::term(PolKey{unit_word(A, n), std::move(k)});
}

}  // namespace

TEST_SUITE("polynomial") {
  TEST_CASE("products reorder with the trace-parity sign") {
    const auto cl = clifford_odd();
    CHECK(pol_mul(cl, x_gen(cl, 2, 2), x_gen(cl, 2, 1)) ==
          monomial(cl, 2, {1, 1}) * Rational(-1));
    CHECK(pol_mul(cl, x_gen(cl, 2, 1), x_gen(cl, 2, 1)) == monomial(cl, 2, {2, 0}));

    const auto k = ground();
    CHECK(pol_mul(k, x_gen(k, 2, 2), x_gen(k, 2, 1)) == monomial(k, 2, {1, 1}));

    // x_1 (c on a strand) = -(c on that strand) x_1 when both are odd.
    for (unsigned s = 1; s <= 2; ++s) {
      const PolElement tok = pol_from_tensor(token(cl, 1, s, 2));
      CHECK(pol_mul(cl, x_gen(cl, 2, 1), tok) ==
            pol_mul(cl, tok, x_gen(cl, 2, 1)) * Rational(-1));
    }
  }

  TEST_CASE("unit and associativity") {
    const auto cl = clifford_odd();
    Rng rng(23);
    for (int t = 0; t < 100; ++t) {
      const auto f = random_pol_element(cl, 2, 3, 2, rng);
      CHECK(pol_mul(cl, pol_one(cl, 2), f) == f);
      CHECK(pol_mul(cl, f, pol_one(cl, 2)) == f);
      const auto g = random_pol_element(cl, 2, 3, 2, rng);
      const auto h = random_pol_element(cl, 2, 3, 2, rng);
      CHECK(pol_mul(cl, pol_mul(cl, f, g), h) == pol_mul(cl, f, pol_mul(cl, g, h)));
    }
  }

  TEST_CASE("strand swap action") {
    const auto cl = clifford_odd();
    CHECK(s_action(cl, 1, x_gen(cl, 2, 1)) == x_gen(cl, 2, 2));
    // s_1(x_1 x_2) = x_2 x_1 = -x_1 x_2 for odd trace parity.
    CHECK(s_action(cl, 1, monomial(cl, 2, {1, 1})) == monomial(cl, 2, {1, 1}) * Rational(-1));
    // Restriction to the tensor factor is the superpermutation.
    const PolElement tok = pol_from_tensor(token(cl, 1, 1, 2));
    CHECK(s_action(cl, 1, tok) == pol_from_tensor(superpermute_simple(cl, 1, token(cl, 1, 1, 2))));
  }

  TEST_CASE("swap action is an involutive algebra map") {
    const auto cl = clifford_odd();
    Rng rng(29);
    for (int t = 0; t < 100; ++t) {
      const auto f = random_pol_element(cl, 3, 3, 2, rng);
      const auto g = random_pol_element(cl, 3, 3, 2, rng);
      const unsigned i = 1 + static_cast<unsigned>(rng.next(2));
      CHECK(s_action(cl, i, s_action(cl, i, f)) == f);
      CHECK(s_action(cl, i, pol_mul(cl, f, g)) ==
            pol_mul(cl, s_action(cl, i, f), s_action(cl, i, g)));
    }
  }

  TEST_CASE("divided difference on generators") {
    const auto k = ground();
    CHECK(ddiff(k, 1, x_gen(k, 2, 1)) == pol_one(k, 2) * Rational(-1));
    CHECK(ddiff(k, 1, x_gen(k, 2, 2)) == pol_one(k, 2));
    CHECK(ddiff(k, 1, pol_one(k, 2)).is_zero());

    const auto cl = clifford_odd();
    CHECK(ddiff(cl, 1, x_gen(cl, 2, 2)) ==
          pol_from_tensor(token(cl, 1, 1, 2) - token(cl, 1, 2, 2)));
    // d_1(x_1) = (-1)^{p+1} tau_1 = +tau_1 for odd trace parity.
    CHECK(ddiff(cl, 1, x_gen(cl, 2, 1)) ==
          pol_from_tensor(token(cl, 1, 1, 2) - token(cl, 1, 2, 2)));

    const auto dn = dual_numbers();
    CHECK(ddiff(dn, 1, x_gen(dn, 2, 1)) ==
          pol_from_tensor(token(dn, 1, 1, 2) + token(dn, 1, 2, 2)) * Rational(-1));
  }

  TEST_CASE("divided difference against the quotient oracle") {
    const auto k = ground();
    // d_1(x_2^2) = (x_2^2 - x_1^2)/(x_2 - x_1) = x_1 + x_2.
    CHECK(ddiff_closed_even(k, 1, monomial(k, 2, {0, 2})) ==
          monomial(k, 2, {1, 0}) + monomial(k, 2, {0, 1}));
    CHECK(ddiff(k, 1, monomial(k, 2, {0, 2})) ==
          monomial(k, 2, {1, 0}) + monomial(k, 2, {0, 1}));

    CHECK(ddiff_closed_even(k, 1, monomial(k, 2, {1, 1})).is_zero());
    CHECK(ddiff_closed_even(k, 1, x_gen(k, 2, 2)) == pol_one(k, 2));

    // (y (x) y) x_2 is annihilated: tau eats the square-zero coefficient.
    const auto dn = dual_numbers();
    const PolElement yy = PolElement::term(PolKey{TensorWord{{1, 1}}, {0, 1}});
    CHECK(ddiff_closed_even(dn, 1, yy).is_zero());
    CHECK(ddiff(dn, 1, yy).is_zero());
  }

  TEST_CASE("closed formula requires an even trace parity") {
    const auto cl = clifford_odd();
    try {
      ddiff_closed_even(cl, 1, x_gen(cl, 2, 1));
      CHECK(false);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::OddTraceParity);
    }
  }

  TEST_CASE("divided difference requires a symmetric trace") {
    const auto even = clifford_even();
    CHECK_THROWS_AS(ddiff(even, 1, x_gen(even, 2, 1)), Error);
  }

  TEST_CASE("coherence suites for the symmetric built-ins") {
    SuiteOptions opts;
    opts.degree_cap = 5;
    opts.trials = 60;
    for (const auto* name :
         {"ground", "clifford_odd", "dual_numbers", "cyclic_group(2)"}) {
      const auto r = verify_divided_difference(builtin(name), 2, opts);
      INFO(r.text());
      CHECK(r.all_passed());
    }
    const auto r3 = verify_divided_difference(ground(), 3, opts);
    INFO(r3.text());
    CHECK(r3.all_passed());
  }
}
