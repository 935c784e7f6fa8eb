#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "stratkit/errors.hpp"

namespace stratkit {

/// Exact rational number. Thin value wrapper around GMP's mpq that keeps the
/// canonical form invariant (gcd(|num|, den) = 1, den >= 1) at all times.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit on purpose
  Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    v_.canonicalize();
  }
  explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  // Parses "p" or "p/q" in base 10.
  static Rational parse(const std::string& text) {
    mpq_class q;
    if (q.set_str(text, 10) != 0)
      throw DomainError("bad rational literal: " + text);
    q.canonicalize();
    return Rational(q);
  }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  int sign() const { return sgn(v_); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw DomainError("rational division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.v_ == b.v_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) {
    return a.v_ != b.v_;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.v_ < b.v_;
  }

  Rational pow(unsigned e) const {
    mpq_class r(1);
    mpq_class base = v_;
    unsigned k = e;
    while (k) {
      if (k & 1u) r *= base;
      base *= base;
      k >>= 1u;
    }
    return Rational(r);
  }

  Rational inv() const {
    if (is_zero()) throw DomainError("inverse of zero");
    return Rational(mpq_class(1) / v_);
  }

  std::string str() const { return v_.get_str(); }
  std::string numerator_str() const { return v_.get_num().get_str(); }
  std::string denominator_str() const { return v_.get_den().get_str(); }
  bool is_integer() const { return v_.get_den() == 1; }

  const mpq_class& raw() const { return v_; }

 private:
  mpq_class v_;
};

}  // namespace stratkit
