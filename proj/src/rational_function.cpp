#include "slit/rational_function.hpp"

#include <ostream>

namespace slit {

RationalFunction::RationalFunction(Polynomial numerator)
    : num_(std::move(numerator)), den_(Polynomial::one()) {}

RationalFunction::RationalFunction(Polynomial numerator, Polynomial denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_.is_zero()) {
    throw DivisionByZero("rational function with zero denominator");
  }
  normalize();
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = Polynomial::one();
    return;
  }
  const Polynomial g = poly_gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = exact_div(num_, g);
    den_ = exact_div(den_, g);
  }
  const BigRational lead_inv = den_.leading_coefficient().reciprocal();
  num_ = num_.scaled(lead_inv);
  den_ = den_.scaled(lead_inv);
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r(*this);
  r.num_ = -r.num_;
  return r;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) {
  num_ = num_ * o.den_ - o.num_ * den_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
  if (o.is_zero()) {
    throw DivisionByZero("rational function division by zero");
  }
  num_ = num_ * o.den_;
  den_ = den_ * o.num_;
  normalize();
  return *this;
}

BigRational RationalFunction::evaluate(const BigRational& x) const {
  const BigRational d = den_.evaluate(x);
  if (d.is_zero()) {
    throw DivisionByZero("rational function evaluated at a pole");
  }
  return num_.evaluate(x) / d;
}

std::string RationalFunction::str() const {
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

std::ostream& operator<<(std::ostream& os, const RationalFunction& f) {
  return os << f.str();
}

std::vector<BigRational> series_coefficients(const RationalFunction& f, int n_max) {
  if (n_max < 0) {
    throw DomainError("series_coefficients: negative order");
  }
  const BigRational q0 = f.denominator().coeff(0);
  if (q0.is_zero()) {
    throw NotAPowerSeries("denominator vanishes at t = 0");
  }
  const BigRational q0_inv = q0.reciprocal();
  std::vector<BigRational> c;
  c.reserve(static_cast<std::size_t>(n_max) + 1);
  const int dq = f.denominator().degree();
  for (int n = 0; n <= n_max; ++n) {
    BigRational acc = f.numerator().coeff(n);
    for (int i = 1; i <= std::min(dq, n); ++i) {
      acc -= f.denominator().coeff(i) * c[static_cast<std::size_t>(n - i)];
    }
    c.push_back(acc * q0_inv);
  }
  return c;
}

}  // namespace slit
