#pragma once

#include <vector>

#include "slit/polynomial.hpp"
#include "slit/rational_function.hpp"

namespace slit {

// Weighted step set for directed paths: up-steps of height a = 1..alpha with
// weights p[a], a horizontal step with weight p[0], and down-steps of height
// b = 1..beta with weights q[b-1]. The extreme weights p[alpha] and q[beta]
// must be nonzero; interior weights may be zero (absent steps).
class WeightedStepSet {
 public:
  WeightedStepSet(std::vector<BigRational> p, std::vector<BigRational> q);  // throws DomainError

  static WeightedStepSet unit_motzkin();  // p0 = p1 = q1 = 1
  static WeightedStepSet unit_dyck();     // p0 = 0, p1 = q1 = 1
  static WeightedStepSet unit(int alpha, int beta);  // all weights 1

  int alpha() const { return static_cast<int>(p_.size()) - 1; }
  int beta() const { return static_cast<int>(q_.size()); }

  const BigRational& p(int a) const;  // 0 <= a <= alpha
  const BigRational& q(int b) const;  // 1 <= b <= beta
  const std::vector<BigRational>& p_weights() const { return p_; }
  const std::vector<BigRational>& q_weights() const { return q_; }

  // Up and down steps exchanged: alpha' = beta, p'_b = q_b, q'_a = p_a,
  // horizontal weight unchanged.
  WeightedStepSet reflected() const;

  friend bool operator==(const WeightedStepSet& a, const WeightedStepSet& b) {
    return a.p_ == b.p_ && a.q_ == b.q_;
  }

 private:
  std::vector<BigRational> p_;  // size alpha + 1
  std::vector<BigRational> q_;  // size beta
};

// A path-counting instance: steps, strip width w >= 1, start height u and
// end height v, both in [0, w].
struct SlitProblem {
  SlitProblem(WeightedStepSet steps, int w, int u, int v);  // throws DomainError

  WeightedStepSet steps;
  int w;
  int u;
  int v;
};

// Coefficients of the kernel 1 - t*sum_a p_a z^a - t*sum_b q_b z^{-b} as
// polynomials in t, indexed by the power of z in [-beta, alpha].
class KernelCoefficients {
 public:
  KernelCoefficients(int alpha, int beta)
      : alpha_(alpha), beta_(beta),
        by_power_(static_cast<std::size_t>(alpha + beta) + 1) {}

  int alpha() const { return alpha_; }
  int beta() const { return beta_; }

  Polynomial& at_power(int z_power);
  const Polynomial& at_power(int z_power) const;  // zero outside [-beta, alpha]

  friend bool operator==(const KernelCoefficients& a, const KernelCoefficients& b) {
    return a.alpha_ == b.alpha_ && a.beta_ == b.beta_ && a.by_power_ == b.by_power_;
  }

 private:
  int alpha_, beta_;
  std::vector<Polynomial> by_power_;
};

KernelCoefficients kernel_coefficients(const WeightedStepSet& steps);

// Elementary symmetric functions e_0..e_{alpha+beta} of the kernel roots, as
// exact rational functions of t. These come straight from the step weights:
//   e_i       = (-1)^i p_{alpha-i} / p_alpha          for 0 <= i < alpha
//   e_alpha   = (-1)^(alpha+1) (1 - t p_0) / (t p_alpha)
//   e_{alpha+b} = (-1)^(alpha+b) q_b / p_alpha        for 1 <= b <= beta
// so the exact computations never touch the roots themselves.
struct EValues {
  int alpha = 0;
  int beta = 0;
  std::vector<RationalFunction> e;  // size alpha + beta + 1

  // e_k with the convention e_k = 0 for k < 0 or k > alpha + beta.
  const RationalFunction& at(int k) const;
};

EValues e_values(const WeightedStepSet& steps);

// Kernel rebuilt from e-values; must reproduce kernel_coefficients exactly.
KernelCoefficients kernel_from_e_values(const WeightedStepSet& steps, const EValues& e);

// Checks the up/down exchange identity for alpha = 2, beta = 1: the kernel
// of the reflected (alpha = 1, beta = 2) step set, with z replaced by 1/z,
// equals the original kernel. Throws DomainError unless alpha=2, beta=1.
bool kernel_symmetry_check(const WeightedStepSet& steps21);

}  // namespace slit
