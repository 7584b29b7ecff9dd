#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "slit/rational.hpp"

namespace slit {

// Univariate polynomial in t with exact rational coefficients, stored in
// ascending order of power with trailing zeros trimmed. The zero polynomial
// has an empty coefficient vector; degree() then returns -1, standing in for
// the usual degree -infinity convention.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<BigRational> ascending_coeffs);

  static Polynomial zero() { return Polynomial(); }
  static Polynomial one() { return constant(BigRational(1)); }
  static Polynomial constant(const BigRational& c);
  static Polynomial variable();                              // t
  static Polynomial monomial(const BigRational& c, int k);   // c * t^k

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const;
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  // Coefficient of t^k; zero outside the stored range.
  const BigRational& coeff(int k) const;
  const std::vector<BigRational>& coefficients() const { return coeffs_; }
  const BigRational& leading_coefficient() const;  // throws DomainError on zero

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial scaled(const BigRational& c) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  BigRational evaluate(const BigRational& x) const;

  // Quotient and remainder of this by d; throws DivisionByZero if d is zero.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const;

  Polynomial monic() const;  // zero stays zero

  std::string str() const;  // human-readable, for diagnostics
  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p);

 private:
  void trim();
  std::vector<BigRational> coeffs_;
};

// Exact quotient a / b; throws std::logic_error if the division leaves a
// remainder. Used by the fraction-free elimination, where exactness is an
// invariant of the algorithm.
Polynomial exact_div(const Polynomial& a, const Polynomial& b);

// Monic gcd over the rationals, computed with a primitive pseudo-remainder
// sequence over integer-cleared images to keep coefficient growth in check.
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

Polynomial poly_lcm(const Polynomial& a, const Polynomial& b);

// Scales the polynomial so its coefficients are coprime integers with a
// positive lowest-degree nonzero coefficient; also returns the factor c with
// primitive = p * c. Zero maps to (zero, 1).
std::pair<Polynomial, BigRational> integer_primitive(const Polynomial& p);

}  // namespace slit
