#include "slit/step_set.hpp"

namespace slit {

WeightedStepSet::WeightedStepSet(std::vector<BigRational> p, std::vector<BigRational> q)
    : p_(std::move(p)), q_(std::move(q)) {
  if (p_.size() < 2) {
    throw DomainError("step set needs alpha >= 1 (p holds p_0..p_alpha)");
  }
  if (q_.empty()) {
    throw DomainError("step set needs beta >= 1");
  }
  if (p_.back().is_zero() || q_.back().is_zero()) {
    throw DomainError("maximal step weights p_alpha and q_beta must be nonzero");
  }
}

WeightedStepSet WeightedStepSet::unit_motzkin() {
  return WeightedStepSet({BigRational(1), BigRational(1)}, {BigRational(1)});
}

WeightedStepSet WeightedStepSet::unit_dyck() {
  return WeightedStepSet({BigRational(0), BigRational(1)}, {BigRational(1)});
}

WeightedStepSet WeightedStepSet::unit(int alpha, int beta) {
  if (alpha < 1 || beta < 1) {
    throw DomainError("unit step set needs alpha, beta >= 1");
  }
  return WeightedStepSet(std::vector<BigRational>(static_cast<std::size_t>(alpha) + 1, 1),
                         std::vector<BigRational>(static_cast<std::size_t>(beta), 1));
}

const BigRational& WeightedStepSet::p(int a) const {
  if (a < 0 || a > alpha()) {
    throw IndexOutOfRange("up-step height out of range");
  }
  return p_[static_cast<std::size_t>(a)];
}

const BigRational& WeightedStepSet::q(int b) const {
  if (b < 1 || b > beta()) {
    throw IndexOutOfRange("down-step height out of range");
  }
  return q_[static_cast<std::size_t>(b - 1)];
}

WeightedStepSet WeightedStepSet::reflected() const {
  std::vector<BigRational> p_new;
  p_new.reserve(q_.size() + 1);
  p_new.push_back(p_[0]);
  for (const auto& w : q_) p_new.push_back(w);
  std::vector<BigRational> q_new(p_.begin() + 1, p_.end());
  return WeightedStepSet(std::move(p_new), std::move(q_new));
}

SlitProblem::SlitProblem(WeightedStepSet steps_in, int w_in, int u_in, int v_in)
    : steps(std::move(steps_in)), w(w_in), u(u_in), v(v_in) {
  if (w < 1) {
    throw DomainError("strip width must be >= 1");
  }
  if (u < 0 || u > w || v < 0 || v > w) {
    throw DomainError("start and end heights must lie in [0, w]");
  }
}

Polynomial& KernelCoefficients::at_power(int z_power) {
  if (z_power < -beta_ || z_power > alpha_) {
    throw IndexOutOfRange("kernel coefficient power out of range");
  }
  return by_power_[static_cast<std::size_t>(z_power + beta_)];
}

const Polynomial& KernelCoefficients::at_power(int z_power) const {
  static const Polynomial zero;
  if (z_power < -beta_ || z_power > alpha_) {
    return zero;
  }
  return by_power_[static_cast<std::size_t>(z_power + beta_)];
}

KernelCoefficients kernel_coefficients(const WeightedStepSet& steps) {
  const int alpha = steps.alpha();
  const int beta = steps.beta();
  KernelCoefficients k(alpha, beta);
  k.at_power(0) = Polynomial::one() - Polynomial::monomial(steps.p(0), 1);
  for (int a = 1; a <= alpha; ++a) {
    k.at_power(a) = Polynomial::monomial(-steps.p(a), 1);
  }
  for (int b = 1; b <= beta; ++b) {
    k.at_power(-b) = Polynomial::monomial(-steps.q(b), 1);
  }
  return k;
}

const RationalFunction& EValues::at(int k) const {
  static const RationalFunction zero;
  if (k < 0 || k > alpha + beta) {
    return zero;
  }
  return e[static_cast<std::size_t>(k)];
}

EValues e_values(const WeightedStepSet& steps) {
  const int alpha = steps.alpha();
  const int beta = steps.beta();
  const BigRational p_top_inv = steps.p(alpha).reciprocal();
  EValues ev;
  ev.alpha = alpha;
  ev.beta = beta;
  ev.e.resize(static_cast<std::size_t>(alpha + beta) + 1);
  for (int i = 0; i < alpha; ++i) {
    BigRational c = steps.p(alpha - i) * p_top_inv;
    if (i % 2 != 0) c = -c;
    ev.e[static_cast<std::size_t>(i)] = RationalFunction::constant(c);
  }
  {
    // e_alpha = (-1)^(alpha+1) (1 - t p_0) / (t p_alpha)
    Polynomial num = Polynomial::one() - Polynomial::monomial(steps.p(0), 1);
    if (alpha % 2 == 0) num = -num;
    ev.e[static_cast<std::size_t>(alpha)] =
        RationalFunction(std::move(num), Polynomial::monomial(steps.p(alpha), 1));
  }
  for (int b = 1; b <= beta; ++b) {
    BigRational c = steps.q(b) * p_top_inv;
    if ((alpha + b) % 2 != 0) c = -c;
    ev.e[static_cast<std::size_t>(alpha + b)] = RationalFunction::constant(c);
  }
  return ev;
}

KernelCoefficients kernel_from_e_values(const WeightedStepSet& steps, const EValues& e) {
  const int alpha = steps.alpha();
  const int beta = steps.beta();
  KernelCoefficients k(alpha, beta);
  const RationalFunction factor(Polynomial::monomial(-steps.p(alpha), 1));
  for (int i = 0; i <= alpha + beta; ++i) {
    RationalFunction c = factor * e.at(i);
    if (i % 2 != 0) c = -c;
    if (!c.denominator().is_one()) {
      throw std::logic_error("kernel reconstruction produced a non-polynomial coefficient");
    }
    k.at_power(alpha - i) = c.numerator();
  }
  return k;
}

bool kernel_symmetry_check(const WeightedStepSet& steps21) {
  if (steps21.alpha() != 2 || steps21.beta() != 1) {
    throw DomainError("kernel_symmetry_check expects alpha = 2, beta = 1");
  }
  const KernelCoefficients original = kernel_coefficients(steps21);
  const KernelCoefficients swapped = kernel_coefficients(steps21.reflected());
  for (int k = -steps21.beta(); k <= steps21.alpha(); ++k) {
    if (original.at_power(k) != swapped.at_power(-k)) {
      return false;
    }
  }
  return true;
}

}  // namespace slit
