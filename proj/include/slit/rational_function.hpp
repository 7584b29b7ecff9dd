#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "slit/polynomial.hpp"

namespace slit {

// Ratio of two polynomials in t, kept in canonical form: gcd(num, den) = 1
// and the denominator monic. Zero is 0/1. Equality is therefore structural.
class RationalFunction {
 public:
  RationalFunction() : den_(Polynomial::one()) {}
  RationalFunction(Polynomial numerator);  // NOLINT: value over a trivial denominator
  RationalFunction(Polynomial numerator, Polynomial denominator);  // throws DivisionByZero

  static RationalFunction constant(const BigRational& c) {
    return RationalFunction(Polynomial::constant(c));
  }
  static RationalFunction one() { return constant(BigRational(1)); }
  static RationalFunction variable() { return RationalFunction(Polynomial::variable()); }

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }

  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);  // throws DivisionByZero

  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) {
    return a += b;
  }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) {
    return a -= b;
  }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) {
    return a *= b;
  }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) {
    return a /= b;
  }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) {
    return !(a == b);
  }

  // Exact value at x; throws DivisionByZero if x is a pole.
  BigRational evaluate(const BigRational& x) const;

  std::string str() const;  // diagnostic form "(num)/(den)"
  friend std::ostream& operator<<(std::ostream& os, const RationalFunction& f);

 private:
  void normalize();
  Polynomial num_;
  Polynomial den_;
};

// Taylor coefficients c_0..c_n_max of f at t = 0, by the linear recurrence
// the denominator induces. Throws NotAPowerSeries if den(0) = 0.
std::vector<BigRational> series_coefficients(const RationalFunction& f, int n_max);

}  // namespace slit
