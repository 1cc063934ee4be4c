#include "frobnil/print.hpp"

#include <sstream>
#include <vector>

namespace frobnil {

namespace {

void append_word_factors(const FrobeniusSuperalgebra& A, const TensorWord& w,
                         std::vector<std::string>& parts) {
  for (unsigned s = w.size(); s >= 1; --s) {
    if (w.at(s) != A.unit())
      parts.push_back(A.label(w.at(s)) + "[" + std::to_string(s) + "]");
    if (s == 1) break;
  }
}

void append_exp_factors(const char* name, const std::vector<unsigned>& exps,
                        std::vector<std::string>& parts) {
  for (unsigned j = 0; j < exps.size(); ++j) {
    if (exps[j] == 0) continue;
    std::string f = std::string(name) + std::to_string(j + 1);
    if (exps[j] > 1) f += "^" + std::to_string(exps[j]);
    parts.push_back(std::move(f));
  }
}

void append_perm_factors(const char* name, const Permutation& w,
                         std::vector<std::string>& parts) {
  for (unsigned i : w.reduced_word()) parts.push_back(std::string(name) + std::to_string(i));
}

std::string join_factors(const std::vector<std::string>& parts) {
  if (parts.empty()) return "1";
  std::string out = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) out += "*" + parts[i];
  return out;
}

template <typename Elem, typename KeyFormatter>
std::string format_terms(const Elem& e, KeyFormatter&& fmt) {
  if (e.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, coeff] : e.terms()) {
    const bool neg = coeff.sgn() < 0;
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    const Rational mag = coeff.abs();
    const std::string keystr = fmt(key);
    if (keystr == "1") {
      os << mag.str();
    } else if (mag.is_one()) {
      os << keystr;
    } else {
      os << mag.str() << "*" << keystr;
    }
  }
  return os.str();
}

}  // namespace

std::string print_scalar(const Rational& c) { return c.str(); }

std::string print_element(const FrobeniusSuperalgebra& A, const TensorElement& e) {
  return format_terms(e, [&](const TensorWord& w) {
    std::vector<std::string> parts;
    append_word_factors(A, w, parts);
    return join_factors(parts);
  });
}

std::string print_element(const FrobeniusSuperalgebra& A, const NilCoxElement& e) {
  return format_terms(e, [&](const NilCoxKey& k) {
    std::vector<std::string> parts;
    append_word_factors(A, k.word, parts);
    append_perm_factors("u", k.perm, parts);
    return join_factors(parts);
  });
}

std::string print_element(const FrobeniusSuperalgebra& A, const PolElement& e) {
  return format_terms(e, [&](const PolKey& k) {
    std::vector<std::string> parts;
    append_word_factors(A, k.word, parts);
    append_exp_factors("x", k.exps, parts);
    return join_factors(parts);
  });
}

std::string print_element(const FrobeniusSuperalgebra& A, const NHElement& e) {
  return format_terms(e, [&](const NilHeckeKey& k) {
    std::vector<std::string> parts;
    append_word_factors(A, k.word, parts);
    append_exp_factors("x", k.exps, parts);
    append_perm_factors("u", k.perm, parts);
    return join_factors(parts);
  });
}

std::string print_algebra_element(const FrobeniusSuperalgebra& A, const AlgebraElement& e) {
  return format_terms(e, [&](BasisIndex b) -> std::string {
    if (b == A.unit()) return "1";
    return A.label(b);
  });
}

std::string print_element(const OddElement& e) {
  return format_terms(e, [&](const OddNHKey& k) {
    std::vector<std::string> parts;
    for (unsigned s = k.size(); s >= 1; --s) {
      if (k.has_c(s)) parts.push_back("c" + std::to_string(s));
      if (s == 1) break;
    }
    append_exp_factors("y", k.exps, parts);
    append_perm_factors("v", k.perm, parts);
    return join_factors(parts);
  });
}

}  // namespace frobnil
