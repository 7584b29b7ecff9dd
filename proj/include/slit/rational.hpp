#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "slit/errors.hpp"

namespace slit {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational number. Canonical form is maintained at all times:
// denominator > 0, gcd(|num|, den) = 1, zero is 0/1.
class BigRational {
 public:
  BigRational() : value_(0) {}
  BigRational(long n) : value_(n) {}  // NOLINT: implicit by design
  explicit BigRational(const BigInt& n) : value_(n) {}
  BigRational(const BigInt& num, const BigInt& den);

  // Accepts "num", "num/den", optional leading sign.
  static BigRational parse(std::string_view s);

  BigInt numerator() const { return boost::multiprecision::numerator(value_); }
  BigInt denominator() const { return boost::multiprecision::denominator(value_); }

  bool is_zero() const { return value_.is_zero(); }
  int sign() const { return value_.sign(); }

  BigRational operator-() const;
  BigRational& operator+=(const BigRational& o);
  BigRational& operator-=(const BigRational& o);
  BigRational& operator*=(const BigRational& o);
  BigRational& operator/=(const BigRational& o);  // throws DivisionByZero

  friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
  friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
  friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
  friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }

  BigRational reciprocal() const;  // throws DivisionByZero on zero

  friend bool operator==(const BigRational& a, const BigRational& b) {
    return a.value_ == b.value_;
  }
  friend bool operator!=(const BigRational& a, const BigRational& b) {
    return a.value_ != b.value_;
  }
  friend bool operator<(const BigRational& a, const BigRational& b) {
    return a.value_ < b.value_;
  }
  friend bool operator>(const BigRational& a, const BigRational& b) { return b < a; }
  friend bool operator<=(const BigRational& a, const BigRational& b) { return !(b < a); }
  friend bool operator>=(const BigRational& a, const BigRational& b) { return !(a < b); }

  // "n" if integral, else "n/d".
  std::string str() const;
  double to_double() const { return value_.convert_to<double>(); }

  friend std::ostream& operator<<(std::ostream& os, const BigRational& r);

 private:
  boost::multiprecision::cpp_rational value_;
};

BigInt int_gcd(BigInt a, BigInt b);
BigInt int_lcm(const BigInt& a, const BigInt& b);

}  // namespace slit
