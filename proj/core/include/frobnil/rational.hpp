#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "frobnil/error.hpp"

namespace frobnil {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational scalar. Always in lowest terms with positive denominator
/// (maintained by the boost backend). All arithmetic is exact; dividing by
/// zero throws.
class Rational {
 public:
  using Rep = boost::multiprecision::cpp_rational;

  Rational() = default;
  Rational(int n) : v_(n) {}
  Rational(long long n) : v_(n) {}
  Rational(long long num, long long den) {
    if (den == 0) throw Error(ErrorCode::DivisionByZero, "rational with zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    v_ = Rep(num, den);
  }
  explicit Rational(Rep v) : v_(std::move(v)) {}

  BigInt num() const { return boost::multiprecision::numerator(v_); }
  BigInt den() const { return boost::multiprecision::denominator(v_); }

  bool is_zero() const { return v_.is_zero(); }
  bool is_one() const { return v_ == 1; }
  int sgn() const { return v_.sign(); }

  Rational operator-() const { return Rational(Rep(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }

  Rational abs() const { return sgn() < 0 ? -*this : *this; }

  /// "p" or "p/q".
  std::string str() const {
    std::string s = num().str();
    if (den() != 1) s += "/" + den().str();
    return s;
  }

  /// Accepts "p", "-p", or "p/q" with q > 0 after normalization.
  static Rational from_string(std::string_view s) {
    try {
      auto slash = s.find('/');
      if (slash == std::string_view::npos) return Rational(Rep(BigInt(std::string(s))));
      BigInt num{std::string(s.substr(0, slash))};
      BigInt den{std::string(s.substr(slash + 1))};
      if (den == 0) throw Error(ErrorCode::DivisionByZero, "rational with zero denominator");
      return Rational(Rep(num, den));
    } catch (const Error&) {
      throw;
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "bad rational literal '" + std::string(s) + "'");
    }
  }

 private:
  Rep v_;
};

}  // namespace frobnil
