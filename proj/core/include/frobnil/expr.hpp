#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "frobnil/nilhecke.hpp"
#include "frobnil/odd_nilhecke.hpp"

namespace frobnil {

/// Parsed expression over the grammar
///   expr   := ('-')? term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := atom ('^' nat)?
///   atom   := rational | symbol | '(' expr ')'
/// where a rational is nat('/'nat)? and a symbol is either label'['nat']'
/// (a basis token on a strand) or one of the generator families x,u,c,v,y
/// written xi / x(i). Whitespace-insensitive; errors carry line and column.
struct ExprNode {
  enum class Kind { Sum, Product, Power, Number, Token, Generator };

  Kind kind = Kind::Number;
  std::vector<ExprNode> children;
  std::vector<int> signs;  // Sum: +1/-1 per child
  unsigned exponent = 0;   // Power
  Rational value;          // Number
  std::string label;       // Token
  char family = 0;         // Generator: one of x,u,c,v,y
  unsigned index = 0;      // Token strand / generator index
  int line = 1, col = 1;
};

using ExprAST = ExprNode;

/// Parses `src` for an n-strand context. When an ambient algebra is given,
/// token labels are resolved against its basis at parse time; strand and
/// generator indices are range-checked either way.
ExprAST parse_expr(std::string_view src, unsigned n, const FrobeniusSuperalgebra* A);

NHElement eval_nh(const ExprAST& ast, const FrobeniusSuperalgebra& A, unsigned n);
PolElement eval_pol(const ExprAST& ast, const FrobeniusSuperalgebra& A, unsigned n);
NilCoxElement eval_nc(const ExprAST& ast, const FrobeniusSuperalgebra& A, unsigned n);
OddElement eval_onh(const ExprAST& ast, unsigned n);

}  // namespace frobnil
