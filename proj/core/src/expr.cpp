#include "frobnil/expr.hpp"

#include <cctype>
#include <functional>

#include "frobnil/error.hpp"

namespace frobnil {

namespace {

struct Lexer {
  std::string_view src;
  std::size_t pos = 0;
  int line = 1, col = 1;

  struct Tok {
    enum class Kind { Number, Ident, Plus, Minus, Star, Caret, Slash, LParen, RParen, LBrack, RBrack, End };
    Kind kind = Kind::End;
    std::string text;
    int line = 1, col = 1;
  };

  Tok peeked;
  bool has_peeked = false;

  [[noreturn]] void fail(int l, int c, const std::string& msg) const {
    throw Error(ErrorCode::SyntaxError,
                msg + " at line " + std::to_string(l) + ", column " + std::to_string(c));
  }

  void advance(char ch) {
    ++pos;
    if (ch == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }

  Tok lex() {
    while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos])))
      advance(src[pos]);
    Tok t;
    t.line = line;
    t.col = col;
    if (pos >= src.size()) return t;
    const char ch = src[pos];
    auto single = [&](Tok::Kind k) {
      t.kind = k;
      t.text = std::string(1, ch);
      advance(ch);
      return t;
    };
    switch (ch) {
      case '+': return single(Tok::Kind::Plus);
      case '-': return single(Tok::Kind::Minus);
      case '*': return single(Tok::Kind::Star);
      case '^': return single(Tok::Kind::Caret);
      case '/': return single(Tok::Kind::Slash);
      case '(': return single(Tok::Kind::LParen);
      case ')': return single(Tok::Kind::RParen);
      case '[': return single(Tok::Kind::LBrack);
      case ']': return single(Tok::Kind::RBrack);
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      t.kind = Tok::Kind::Number;
      while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) {
        t.text += src[pos];
        advance(src[pos]);
      }
      return t;
    }
    if (std::isalpha(static_cast<unsigned char>(ch))) {
      t.kind = Tok::Kind::Ident;
      while (pos < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '_')) {
        t.text += src[pos];
        advance(src[pos]);
      }
      return t;
    }
    fail(line, col, std::string("unexpected character '") + ch + "'");
  }

  const Tok& peek() {
    if (!has_peeked) {
      peeked = lex();
      has_peeked = true;
    }
    return peeked;
  }

  Tok next() {
    if (has_peeked) {
      has_peeked = false;
      return peeked;
    }
    return lex();
  }
};

struct Parser {
  Lexer lx;
  unsigned n;
  const FrobeniusSuperalgebra* algebra;

  using Tok = Lexer::Tok;

  [[noreturn]] void fail(const Tok& t, const std::string& msg) const {
    throw Error(ErrorCode::SyntaxError,
                msg + " at line " + std::to_string(t.line) + ", column " +
                    std::to_string(t.col));
  }

  unsigned parse_nat(const Tok& t) const {
    unsigned long long v = 0;
    for (char ch : t.text) {
      v = v * 10 + static_cast<unsigned long long>(ch - '0');
      if (v > 1u << 20) fail(t, "number too large");
    }
    return static_cast<unsigned>(v);
  }

  void check_strand(const Tok& t, char family, unsigned idx) const {
    const unsigned hi = (family == 'u' || family == 'v') ? n - 1 : n;
    if (idx < 1 || idx > hi || n == 0)
      throw Error(ErrorCode::StrandOutOfRange,
                  std::string(1, family) + std::to_string(idx) + " out of range for n = " +
                      std::to_string(n) + " at line " + std::to_string(t.line) +
                      ", column " + std::to_string(t.col));
  }

  ExprNode parse_expr() {
    ExprNode sum;
    sum.kind = ExprNode::Kind::Sum;
    int sign = 1;
    if (lx.peek().kind == Tok::Kind::Minus) {
      lx.next();
      sign = -1;
    }
    sum.children.push_back(parse_term());
    sum.signs.push_back(sign);
    while (true) {
      const auto k = lx.peek().kind;
      if (k == Tok::Kind::Plus || k == Tok::Kind::Minus) {
        lx.next();
        sum.children.push_back(parse_term());
        sum.signs.push_back(k == Tok::Kind::Plus ? 1 : -1);
        continue;
      }
      break;
    }
    if (sum.children.size() == 1 && sum.signs[0] == 1) return std::move(sum.children[0]);
    return sum;
  }

  ExprNode parse_term() {
    ExprNode prod;
    prod.kind = ExprNode::Kind::Product;
    prod.children.push_back(parse_factor());
    while (lx.peek().kind == Tok::Kind::Star) {
      lx.next();
      prod.children.push_back(parse_factor());
    }
    if (prod.children.size() == 1) return std::move(prod.children[0]);
    return prod;
  }

  ExprNode parse_factor() {
    ExprNode base = parse_atom();
    if (lx.peek().kind == Tok::Kind::Caret) {
      lx.next();
      const Tok e = lx.next();
      if (e.kind != Tok::Kind::Number) fail(e, "expected a natural number exponent");
      ExprNode pw;
      pw.kind = ExprNode::Kind::Power;
      pw.exponent = parse_nat(e);
      pw.children.push_back(std::move(base));
      return pw;
    }
    return base;
  }

  ExprNode parse_atom() {
    const Tok t = lx.next();
    ExprNode node;
    node.line = t.line;
    node.col = t.col;
    switch (t.kind) {
      case Tok::Kind::Number: {
        node.kind = ExprNode::Kind::Number;
        if (lx.peek().kind == Tok::Kind::Slash) {
          lx.next();
          const Tok den = lx.next();
          if (den.kind != Tok::Kind::Number) fail(den, "expected a denominator");
          node.value = Rational::from_string(t.text + "/" + den.text);
        } else {
          node.value = Rational::from_string(t.text);
        }
        return node;
      }
      case Tok::Kind::LParen: {
        node = parse_expr();
        const Tok close = lx.next();
        if (close.kind != Tok::Kind::RParen) fail(close, "expected ')'");
        return node;
      }
      case Tok::Kind::Ident:
        return parse_symbol(t);
      default:
        fail(t, "expected a number, symbol, or '('");
    }
  }

  ExprNode parse_symbol(const Tok& t) {
    ExprNode node;
    node.line = t.line;
    node.col = t.col;

    // label[strand]: a basis token.
    if (lx.peek().kind == Tok::Kind::LBrack) {
      lx.next();
      const Tok idx = lx.next();
      if (idx.kind != Tok::Kind::Number) fail(idx, "expected a strand index");
      const Tok close = lx.next();
      if (close.kind != Tok::Kind::RBrack) fail(close, "expected ']'");
      node.kind = ExprNode::Kind::Token;
      node.label = t.text;
      node.index = parse_nat(idx);
      if (node.index < 1 || node.index > n)
        throw Error(ErrorCode::StrandOutOfRange,
                    t.text + "[" + idx.text + "] out of range for n = " + std::to_string(n));
      if (algebra && !algebra->index_of(t.text))
        throw Error(ErrorCode::UnknownSymbol,
                    "'" + t.text + "' is not a basis label of '" + algebra->name() + "'");
      return node;
    }

    // family(i) or family followed by digits.
    const std::string& s = t.text;
    const char family = s[0];
    if (family == 'x' || family == 'u' || family == 'c' || family == 'v' || family == 'y') {
      unsigned idx = 0;
      bool have_index = false;
      if (s.size() > 1) {
        have_index = true;
        for (std::size_t i = 1; i < s.size(); ++i) {
          if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
            have_index = false;
            break;
          }
          idx = idx * 10 + static_cast<unsigned>(s[i] - '0');
        }
      } else if (lx.peek().kind == Tok::Kind::LParen) {
        lx.next();
        const Tok it = lx.next();
        if (it.kind != Tok::Kind::Number) fail(it, "expected a generator index");
        const Tok close = lx.next();
        if (close.kind != Tok::Kind::RParen) fail(close, "expected ')'");
        idx = parse_nat(it);
        have_index = true;
      }
      if (have_index) {
        node.kind = ExprNode::Kind::Generator;
        node.family = family;
        node.index = idx;
        check_strand(t, family, idx);
        return node;
      }
    }
    throw Error(ErrorCode::UnknownSymbol,
                "unknown symbol '" + s + "' at line " + std::to_string(t.line) +
                    ", column " + std::to_string(t.col));
  }
};

/// Target policy: how each evaluator realizes units, scalars, tokens, and
/// generators.
template <typename Elem>
struct Ops {
  std::function<Elem()> one;
  std::function<Elem(const std::string&, unsigned)> tok;
  std::function<Elem(char, unsigned)> gen;
  std::function<Elem(const Elem&, const Elem&)> mul;
};

template <typename Elem>
Elem eval_node(const ExprNode& node, const Ops<Elem>& ops) {
  switch (node.kind) {
    case ExprNode::Kind::Number:
      return ops.one() * node.value;
    case ExprNode::Kind::Sum: {
      Elem out;
      for (std::size_t i = 0; i < node.children.size(); ++i)
        out += eval_node(node.children[i], ops) * Rational(node.signs[i]);
      return out;
    }
    case ExprNode::Kind::Product: {
      Elem out = eval_node(node.children[0], ops);
      for (std::size_t i = 1; i < node.children.size(); ++i)
        out = ops.mul(out, eval_node(node.children[i], ops));
      return out;
    }
    case ExprNode::Kind::Power: {
      Elem base = eval_node(node.children[0], ops);
      Elem out = ops.one();
      for (unsigned i = 0; i < node.exponent; ++i) out = ops.mul(out, base);
      return out;
    }
    case ExprNode::Kind::Token:
      return ops.tok(node.label, node.index);
    case ExprNode::Kind::Generator:
      return ops.gen(node.family, node.index);
  }
  throw Error(ErrorCode::SyntaxError, "malformed expression tree");
}

[[noreturn]] void illegal(char family, const char* target) {
  throw Error(ErrorCode::IllegalSymbolForTarget,
              std::string(1, family) + "-generators are not defined in " + target);
}

BasisIndex resolve_label(const FrobeniusSuperalgebra& A, const std::string& label) {
  const auto idx = A.index_of(label);
  if (!idx)
    throw Error(ErrorCode::UnknownSymbol,
                "'" + label + "' is not a basis label of '" + A.name() + "'");
  return *idx;
}

/// Bare c/y generators double as basis tokens when the ambient algebra
/// declares that label; otherwise they are foreign to algebra targets.
template <typename Elem>
Elem token_or_illegal(const FrobeniusSuperalgebra& A, char family, unsigned i,
                      const char* target, Elem (*mk)(const TensorElement&), unsigned n) {
  const auto idx = A.index_of(std::string(1, family));
  if (!idx) illegal(family, target);
  return mk(token(A, *idx, i, n));
}

}  // namespace

ExprAST parse_expr(std::string_view src, unsigned n, const FrobeniusSuperalgebra* A) {
  Parser p{Lexer{src}, n, A};
  ExprNode root = p.parse_expr();
  const auto t = p.lx.next();
  if (t.kind != Lexer::Tok::Kind::End) p.fail(t, "trailing input");
  return root;
}

NHElement eval_nh(const ExprAST& ast, const FrobeniusSuperalgebra& A, unsigned n) {
  Ops<NHElement> ops;
  ops.one = [&] { return nh_one(A, n); };
  ops.mul = [&](const NHElement& a, const NHElement& b) { return nh_mul(A, a, b); };
  ops.tok = [&](const std::string& label, unsigned i) {
    return nh_from_tensor(token(A, resolve_label(A, label), i, n));
  };
  ops.gen = [&](char family, unsigned i) -> NHElement {
    switch (family) {
      case 'x': return x_gen_nh(A, n, i);
      case 'u': return u_gen(A, n, i);
      case 'c':
      case 'y': return token_or_illegal<NHElement>(A, family, i, "this algebra", &nh_from_tensor, n);
      default: illegal(family, "the nilHecke algebra");
    }
  };
  return eval_node(ast, ops);
}

PolElement eval_pol(const ExprAST& ast, const FrobeniusSuperalgebra& A, unsigned n) {
  Ops<PolElement> ops;
  ops.one = [&] { return pol_one(A, n); };
  ops.mul = [&](const PolElement& a, const PolElement& b) { return pol_mul(A, a, b); };
  ops.tok = [&](const std::string& label, unsigned i) {
    return pol_from_tensor(token(A, resolve_label(A, label), i, n));
  };
  ops.gen = [&](char family, unsigned i) -> PolElement {
    switch (family) {
      case 'x': return x_gen(A, n, i);
      case 'c':
      case 'y': return token_or_illegal<PolElement>(A, family, i, "this algebra", &pol_from_tensor, n);
      default: illegal(family, "the polynomial algebra");
    }
  };
  return eval_node(ast, ops);
}

NilCoxElement eval_nc(const ExprAST& ast, const FrobeniusSuperalgebra& A, unsigned n) {
  Ops<NilCoxElement> ops;
  ops.one = [&] { return nc_one(A, n); };
  ops.mul = [&](const NilCoxElement& a, const NilCoxElement& b) { return nc_mul(A, a, b); };
  ops.tok = [&](const std::string& label, unsigned i) {
    return nc_from_tensor(token(A, resolve_label(A, label), i, n));
  };
  ops.gen = [&](char family, unsigned i) -> NilCoxElement {
    switch (family) {
      case 'u': return u_gen_nc(A, n, i);
      case 'c':
      case 'y': return token_or_illegal<NilCoxElement>(A, family, i, "this algebra", &nc_from_tensor, n);
      default: illegal(family, "the nilCoxeter algebra");
    }
  };
  return eval_node(ast, ops);
}

OddElement eval_onh(const ExprAST& ast, unsigned n) {
  Ops<OddElement> ops;
  ops.one = [&] { return onh_one(n); };
  ops.mul = [&](const OddElement& a, const OddElement& b) { return onh_mul(n, a, b); };
  ops.tok = [&](const std::string& label, unsigned i) -> OddElement {
    if (label == "c") return c_gen(n, i);
    throw Error(ErrorCode::IllegalSymbolForTarget,
                "tokens are not defined in the odd nilHecke algebra");
  };
  ops.gen = [&](char family, unsigned i) -> OddElement {
    switch (family) {
      case 'c': return c_gen(n, i);
      case 'y': return y_gen(n, i);
      case 'v': return v_gen(n, i);
      default: illegal(family, "the odd nilHecke algebra");
    }
  };
  return eval_node(ast, ops);
}

}  // namespace frobnil
