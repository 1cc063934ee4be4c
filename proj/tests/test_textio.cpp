#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "frobnil/config_file.hpp"
#include "frobnil/error.hpp"
#include "frobnil/expr.hpp"
#include "frobnil/print.hpp"
#include "frobnil/verify.hpp"

using namespace frobnil;

namespace {

const char* kCliffordConfig = R"(frobnil-algebra v1
name my_clifford
trace_parity odd
[basis]
1 even
c odd
[unit]
1
[trace]
c 1
[mult]
1*1 = 1
1*c = c
c*1 = c
c*c = 1
)";

const char* kCyclic2Config = R"(frobnil-algebra v1
name my_c2
trace_parity even
[basis]
1 even
g even
[unit]
1
[trace]
1 1
[mult]
1*1 = 1
1*g = g
g*1 = g
g*g = 1
)";

std::filesystem::path write_temp(const char* text, const char* name) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream out(path);
  out << text;
  return path;
}

}  // namespace

TEST_SUITE("textio") {
  TEST_CASE("parsing shapes and errors") {
    const auto k = ground();
    const auto ast = parse_expr("u1*x2 - x1*u1", 2, &k);
    CHECK(ast.kind == ExprNode::Kind::Sum);
    CHECK(ast.children.size() == 2);

    const auto cl = clifford_odd();
    CHECK_NOTHROW(parse_expr("c[2]*x1^3", 2, &cl));
    CHECK_NOTHROW(parse_expr("x(1) * (1/2 + u(1))^2", 2, &cl));

    try {
      parse_expr("x0", 2, &k);
      CHECK(false);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::StrandOutOfRange);
    }
    try {
      parse_expr("q7", 2, &k);
      CHECK(false);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::UnknownSymbol);
    }
    try {
      parse_expr("z[1]", 2, &cl);
      CHECK(false);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::UnknownSymbol);
    }
    CHECK_THROWS_AS(parse_expr("x1 + ", 2, &k), Error);
    CHECK_THROWS_AS(parse_expr("(x1", 2, &k), Error);
    CHECK_THROWS_AS(parse_expr("x1 x2", 2, &k), Error);
  }

  TEST_CASE("evaluation against the relation engine") {
    const auto k = ground();
    // u1 x2 - x1 u1 is the teleporter, which is 1 over the ground ring.
    CHECK(eval_nh(parse_expr("u1*x2 - x1*u1", 2, &k), k, 2) == nh_one(k, 2));
    CHECK(eval_nh(parse_expr("u1*u1", 2, &k), k, 2).is_zero());

    const auto dn = dual_numbers();
    CHECK(eval_pol(parse_expr("y[1]*y[1]", 1, &dn), dn, 1).is_zero());
  }

  TEST_CASE("target legality") {
    const auto k = ground();
    try {
      eval_pol(parse_expr("u1", 2, &k), k, 2);
      CHECK(false);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::IllegalSymbolForTarget);
    }
    CHECK_THROWS_AS(eval_nc(parse_expr("x1", 2, &k), k, 2), Error);
    CHECK_THROWS_AS(eval_nh(parse_expr("v1", 2, &k), k, 2), Error);
    CHECK_NOTHROW(eval_onh(parse_expr("c1*y1*v1", 2, nullptr), 2));
  }

  TEST_CASE("printing is deterministic and canonical") {
    const auto cl = clifford_odd();
    CHECK(print_element(cl, NHElement{}) == "0");
    CHECK(print_element(cl, nh_one(cl, 2)) == "1");
    CHECK(print_element(cl, nh_from_tensor(tau(cl))) == "c[1] - c[2]");
    CHECK(print_element(cl, eval_nh(parse_expr("u1*x2", 2, &cl), cl, 2)) ==
          "x1*u1 + c[1] - c[2]");
  }

  TEST_CASE("print-parse round trips") {
    const auto cl = clifford_odd();
    Rng rng(53);
    for (int t = 0; t < 60; ++t) {
      const NHElement e = random_nh_element(cl, 2, 3, 3, rng);
      CHECK(eval_nh(parse_expr(print_element(cl, e), 2, &cl), cl, 2) == e);

      const PolElement f = random_pol_element(cl, 2, 3, 3, rng);
      CHECK(eval_pol(parse_expr(print_element(cl, f), 2, &cl), cl, 2) == f);

      OddElement g;
      for (int j = 0; j < 3; ++j) g.add_term(random_odd_key(2, 3, rng), rng.scalar());
      CHECK(eval_onh(parse_expr(print_element(g), 2, nullptr), 2) == g);
    }
    const auto c3 = cyclic_group(3);
    for (int t = 0; t < 30; ++t) {
      NilCoxElement e;
      for (int j = 0; j < 2; ++j)
        e.add_term(NilCoxKey{random_word(c3, 3, rng), random_perm(3, rng)}, rng.scalar());
      CHECK(eval_nc(parse_expr(print_element(c3, e), 3, &c3), c3, 3) == e);
    }
  }

  TEST_CASE("fuzzing yields typed errors only") {
    const auto cl = clifford_odd();
    const char pool[] = "xuycv123[]()^*+-/ ";
    Rng rng(59);
    for (int t = 0; t < 3000; ++t) {
      std::string s;
      const unsigned len = static_cast<unsigned>(rng.next(16));
      for (unsigned i = 0; i < len; ++i) s += pool[rng.next(sizeof(pool) - 1)];
      try {
        const auto ast = parse_expr(s, 2, &cl);
        (void)eval_nh(ast, cl, 2);
      } catch (const Error&) {
        // typed failure is the contract
      }
    }
    CHECK(true);
  }

  TEST_CASE("config loading reproduces the built-ins") {
    const auto path = write_temp(kCliffordConfig, "frobnil_test_clifford.cfg");
    const auto A = load_config(path);
    CHECK(A.same_structure(clifford_odd()));
    CHECK(A.name() == "my_clifford");
    std::filesystem::remove(path);

    const auto path2 = write_temp(kCyclic2Config, "frobnil_test_c2.cfg");
    const auto B = load_config(path2);
    CHECK(B.same_structure(cyclic_group(2)));
    CHECK(B.symmetric());
    CHECK(B.dim() == 2);
    std::filesystem::remove(path2);
  }

  TEST_CASE("config validation failures carry the report") {
    std::string broken = kCyclic2Config;
    const auto pos = broken.find("g*g = 1");
    broken.replace(pos, 7, "g*g = g");  // no longer associative/unital-consistent
    const auto path = write_temp(broken.c_str(), "frobnil_test_broken.cfg");
    try {
      load_config(path);
      CHECK(false);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::ValidationFailed);
      CHECK(std::string(e.what()).find("associative") != std::string::npos);
    }
    std::filesystem::remove(path);
  }

  TEST_CASE("config syntax failures are located") {
    std::istringstream in("frobnil-algebra v1\n[basis]\n1 sideways\n");
    try {
      parse_algebra_config(in, "inline");
      CHECK(false);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::ParseError);
      CHECK(std::string(e.what()).find("inline:3") != std::string::npos);
    }
    CHECK_THROWS_AS(load_config("/nonexistent/file.cfg"), Error);
  }

  TEST_CASE("user algebras drive the full engine") {
    const auto path = write_temp(kCliffordConfig, "frobnil_test_cl_engine.cfg");
    const auto A = load_config(path);
    const auto r = nh_verify_relations(A, 2);
    INFO(r.text());
    CHECK(r.all_passed());
    std::filesystem::remove(path);
  }
}
