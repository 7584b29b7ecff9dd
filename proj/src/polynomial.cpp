#include "slit/polynomial.hpp"

#include <ostream>
#include <sstream>

namespace slit {

namespace {
const BigRational kZero(0);
}

Polynomial::Polynomial(std::vector<BigRational> ascending_coeffs)
    : coeffs_(std::move(ascending_coeffs)) {
  trim();
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) {
    coeffs_.pop_back();
  }
}

Polynomial Polynomial::constant(const BigRational& c) {
  Polynomial p;
  if (!c.is_zero()) {
    p.coeffs_.push_back(c);
  }
  return p;
}

Polynomial Polynomial::variable() { return monomial(BigRational(1), 1); }

Polynomial Polynomial::monomial(const BigRational& c, int k) {
  Polynomial p;
  if (!c.is_zero()) {
    p.coeffs_.assign(static_cast<std::size_t>(k) + 1, kZero);
    p.coeffs_.back() = c;
  }
  return p;
}

bool Polynomial::is_one() const {
  return coeffs_.size() == 1 && coeffs_[0] == BigRational(1);
}

const BigRational& Polynomial::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) {
    return kZero;
  }
  return coeffs_[static_cast<std::size_t>(k)];
}

const BigRational& Polynomial::leading_coefficient() const {
  if (is_zero()) {
    throw DomainError("leading coefficient of the zero polynomial");
  }
  return coeffs_.back();
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (coeffs_.size() < o.coeffs_.size()) {
    coeffs_.resize(o.coeffs_.size(), kZero);
  }
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
    coeffs_[i] += o.coeffs_[i];
  }
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (coeffs_.size() < o.coeffs_.size()) {
    coeffs_.resize(o.coeffs_.size(), kZero);
  }
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
    coeffs_[i] -= o.coeffs_[i];
  }
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) {
    return Polynomial();
  }
  std::vector<BigRational> out(a.coeffs_.size() + b.coeffs_.size() - 1, kZero);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return Polynomial(std::move(out));
}

Polynomial Polynomial::scaled(const BigRational& c) const {
  if (c.is_zero()) return Polynomial();
  Polynomial r(*this);
  for (auto& x : r.coeffs_) x *= c;
  return r;
}

BigRational Polynomial::evaluate(const BigRational& x) const {
  BigRational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& d) const {
  if (d.is_zero()) {
    throw DivisionByZero("polynomial division by zero");
  }
  Polynomial rem(*this);
  if (rem.degree() < d.degree()) {
    return {Polynomial(), rem};
  }
  std::vector<BigRational> quot(static_cast<std::size_t>(rem.degree() - d.degree()) + 1, kZero);
  const BigRational lead_inv = d.leading_coefficient().reciprocal();
  while (!rem.is_zero() && rem.degree() >= d.degree()) {
    const int k = rem.degree() - d.degree();
    const BigRational c = rem.leading_coefficient() * lead_inv;
    quot[static_cast<std::size_t>(k)] = c;
    rem -= d * monomial(c, k);
  }
  return {Polynomial(std::move(quot)), rem};
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return Polynomial();
  return scaled(leading_coefficient().reciprocal());
}

Polynomial exact_div(const Polynomial& a, const Polynomial& b) {
  auto [q, r] = a.divmod(b);
  if (!r.is_zero()) {
    throw std::logic_error("exact_div: division left a remainder");
  }
  return q;
}

namespace {

// Pseudo-remainder of a by b (powers of lc(b) differ from the textbook prem
// by a unit; irrelevant here since callers take the primitive part next).
Polynomial pseudo_rem(const Polynomial& a, const Polynomial& b) {
  Polynomial r(a);
  const BigRational d = b.leading_coefficient();
  while (!r.is_zero() && r.degree() >= b.degree()) {
    const int k = r.degree() - b.degree();
    r = r.scaled(d) - b * Polynomial::monomial(r.leading_coefficient(), k);
  }
  return r;
}

}  // namespace

std::pair<Polynomial, BigRational> integer_primitive(const Polynomial& p) {
  if (p.is_zero()) {
    return {Polynomial(), BigRational(1)};
  }
  BigInt den_lcm(1);
  for (const auto& c : p.coefficients()) {
    if (!c.is_zero()) den_lcm = int_lcm(den_lcm, c.denominator());
  }
  BigInt num_gcd(0);
  for (const auto& c : p.coefficients()) {
    if (!c.is_zero()) num_gcd = int_gcd(num_gcd, c.numerator() * (den_lcm / c.denominator()));
  }
  BigRational scale(den_lcm, num_gcd);
  // Lowest-degree nonzero coefficient made positive.
  for (const auto& c : p.coefficients()) {
    if (!c.is_zero()) {
      if ((c * scale).sign() < 0) scale = -scale;
      break;
    }
  }
  return {p.scaled(scale), scale};
}

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  Polynomial f = integer_primitive(a).first;
  Polynomial g = integer_primitive(b).first;
  if (f.degree() < g.degree()) std::swap(f, g);
  while (!g.is_zero()) {
    Polynomial r = integer_primitive(pseudo_rem(f, g)).first;
    f = std::move(g);
    g = std::move(r);
  }
  return f.monic();
}

Polynomial poly_lcm(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  return exact_div(a * b, poly_gcd(a, b)).monic();
}

std::string Polynomial::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const BigRational& c = coeffs_[k];
    if (c.is_zero()) continue;
    const bool neg = c.sign() < 0;
    const BigRational mag = neg ? -c : c;
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    const bool unit = mag == BigRational(1);
    if (k == 0) {
      os << mag.str();
    } else {
      if (!unit) os << mag.str() << "*";
      os << "t";
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

}  // namespace slit
