#include "slit/rational.hpp"

#include <ostream>

namespace slit {

namespace mp = boost::multiprecision;

BigRational::BigRational(const BigInt& num, const BigInt& den) {
  if (den.is_zero()) {
    throw DivisionByZero("rational with zero denominator");
  }
  // The component constructor expects a canonical pair, so reduce here.
  BigInt n = num;
  BigInt d = den;
  if (d < 0) {
    n = -n;
    d = -d;
  }
  const BigInt g = mp::gcd(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  value_ = mp::cpp_rational(n, d);
}

BigRational BigRational::parse(std::string_view s) {
  auto fail = [&] { throw ParseError("invalid rational: '" + std::string(s) + "'"); };
  if (s.empty()) fail();
  const auto slash = s.find('/');
  try {
    if (slash == std::string_view::npos) {
      return BigRational(BigInt(std::string(s)), BigInt(1));
    }
    if (slash == 0 || slash + 1 == s.size()) fail();
    BigInt num(std::string(s.substr(0, slash)));
    BigInt den(std::string(s.substr(slash + 1)));
    if (den.is_zero()) fail();
    return BigRational(num, den);
  } catch (const std::runtime_error&) {
    fail();
  }
  return BigRational();  // unreachable
}

BigRational BigRational::operator-() const {
  BigRational r;
  r.value_ = -value_;
  return r;
}

BigRational& BigRational::operator+=(const BigRational& o) {
  value_ += o.value_;
  return *this;
}

BigRational& BigRational::operator-=(const BigRational& o) {
  value_ -= o.value_;
  return *this;
}

BigRational& BigRational::operator*=(const BigRational& o) {
  value_ *= o.value_;
  return *this;
}

BigRational& BigRational::operator/=(const BigRational& o) {
  if (o.is_zero()) {
    throw DivisionByZero("rational division by zero");
  }
  value_ /= o.value_;
  return *this;
}

BigRational BigRational::reciprocal() const {
  if (is_zero()) {
    throw DivisionByZero("reciprocal of zero");
  }
  return BigRational(denominator(), numerator());
}

std::string BigRational::str() const {
  if (denominator() == 1) {
    return numerator().str();
  }
  return numerator().str() + "/" + denominator().str();
}

std::ostream& operator<<(std::ostream& os, const BigRational& r) { return os << r.str(); }

BigInt int_gcd(BigInt a, BigInt b) { return mp::gcd(a, b); }

BigInt int_lcm(const BigInt& a, const BigInt& b) { return mp::lcm(a, b); }

}  // namespace slit
