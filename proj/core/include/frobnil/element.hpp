#pragma once

#include <map>
#include <utility>

#include "frobnil/rational.hpp"

namespace frobnil {

/// Finitely supported linear combination of keys with exact rational
/// coefficients. Canonical sparse form: no stored coefficient is zero, so
/// equality of elements is equality of term maps. Keys must carry a strict
/// total order; iteration is in key order, which makes printing and hashing
/// deterministic.
template <typename K>
class Element {
 public:
  using Key = K;
  using TermMap = std::map<K, Rational>;

  Element() = default;

  static Element term(K key, Rational coeff = Rational(1)) {
    Element e;
    e.add_term(std::move(key), coeff);
    return e;
  }

  Element& add_term(const K& key, const Rational& coeff) {
    if (coeff.is_zero()) return *this;
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second.is_zero()) terms_.erase(it);
    }
    return *this;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  /// Coefficient of `key`, zero if absent.
  Rational coeff(const K& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Rational() : it->second;
  }

  Element& operator+=(const Element& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }
  Element& operator-=(const Element& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
  }
  Element& operator*=(const Rational& c) {
    if (c.is_zero()) {
      terms_.clear();
    } else {
      for (auto& [k, v] : terms_) v *= c;
    }
    return *this;
  }

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(Element a, const Rational& c) { return a *= c; }
  friend Element operator*(const Rational& c, Element a) { return a *= c; }
  Element operator-() const {
    Element e(*this);
    for (auto& [k, v] : e.terms_) v = -v;
    return e;
  }

  friend bool operator==(const Element& a, const Element& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

 private:
  TermMap terms_;
};

}  // namespace frobnil
