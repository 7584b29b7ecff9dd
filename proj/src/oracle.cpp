#include "slit/oracle.hpp"

#include <algorithm>

namespace slit {

namespace {

void validate_instance(const WeightedStepSet&, int w, int u, int v) {
  if (w < 1) throw DomainError("strip width must be >= 1");
  if (u < 0 || u > w || v < 0 || v > w) {
    throw DomainError("heights must lie in [0, w]");
  }
}

std::vector<BigRational> dp_step(const WeightedStepSet& steps, int w,
                                 const std::vector<BigRational>& cur) {
  std::vector<BigRational> next(static_cast<std::size_t>(w) + 1);
  for (int h = 0; h <= w; ++h) {
    BigRational acc;
    for (int a = 0; a <= steps.alpha(); ++a) {
      const int from = h - a;
      if (from < 0) break;
      if (!steps.p(a).is_zero()) acc += steps.p(a) * cur[static_cast<std::size_t>(from)];
    }
    for (int b = 1; b <= steps.beta(); ++b) {
      const int from = h + b;
      if (from > w) break;
      if (!steps.q(b).is_zero()) acc += steps.q(b) * cur[static_cast<std::size_t>(from)];
    }
    next[static_cast<std::size_t>(h)] = std::move(acc);
  }
  return next;
}

}  // namespace

std::vector<BigRational> dp_series(const WeightedStepSet& steps, int w, int u, int v,
                                   int n_max) {
  validate_instance(steps, w, u, v);
  if (n_max < 0) throw DomainError("path length must be >= 0");
  std::vector<BigRational> cur(static_cast<std::size_t>(w) + 1);
  cur[static_cast<std::size_t>(u)] = BigRational(1);
  std::vector<BigRational> out;
  out.reserve(static_cast<std::size_t>(n_max) + 1);
  out.push_back(cur[static_cast<std::size_t>(v)]);
  for (int n = 1; n <= n_max; ++n) {
    cur = dp_step(steps, w, cur);
    out.push_back(cur[static_cast<std::size_t>(v)]);
  }
  return out;
}

BigRational dp_count(const WeightedStepSet& steps, int w, int u, int v, int n) {
  return dp_series(steps, w, u, v, n).back();
}

std::vector<BigRational> dp_row(const WeightedStepSet& steps, int w, int u, int n) {
  validate_instance(steps, w, u, 0);
  if (n < 0) throw DomainError("path length must be >= 0");
  std::vector<BigRational> cur(static_cast<std::size_t>(w) + 1);
  cur[static_cast<std::size_t>(u)] = BigRational(1);
  for (int k = 0; k < n; ++k) {
    cur = dp_step(steps, w, cur);
  }
  return cur;
}

FieldMatrix transfer_matrix(const WeightedStepSet& steps, int w) {
  if (w < 1) throw DomainError("strip width must be >= 1");
  FieldMatrix T(static_cast<std::size_t>(w) + 1, static_cast<std::size_t>(w) + 1);
  for (int h = 0; h <= w; ++h) {
    for (int h2 = 0; h2 <= w; ++h2) {
      const int d = h2 - h;
      BigRational weight;
      if (d >= 0 && d <= steps.alpha()) {
        weight = steps.p(d);
      } else if (d < 0 && -d <= steps.beta()) {
        weight = steps.q(-d);
      }
      if (!weight.is_zero()) {
        T.at(static_cast<std::size_t>(h), static_cast<std::size_t>(h2)) =
            RationalFunction::constant(weight);
      }
    }
  }
  return T;
}

GFResult transfer_gf(const SlitProblem& prob) {
  const std::size_t n = static_cast<std::size_t>(prob.w) + 1;
  const FieldMatrix T = transfer_matrix(prob.steps, prob.w);
  const RationalFunction t = RationalFunction::variable();
  FieldMatrix system = FieldMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      system.at(i, j) -= t * T.at(i, j);
    }
  }
  // Inverse entry (u, v) via the adjugate: delete row v and column u.
  const RationalFunction den = determinant(system);
  const RationalFunction num = determinant(
      system.minor_matrix(static_cast<std::size_t>(prob.v), static_cast<std::size_t>(prob.u)));
  RationalFunction value = num / den;
  if ((prob.u + prob.v) % 2 != 0) value = -value;
  return GFResult{std::move(value), Route::transfer_matrix, prob};
}

bool depth_limited_series_check(const WeightedStepSet& steps, int n_max) {
  if (n_max < 0 || n_max > 12) {
    throw DomainError("depth_limited_series_check: n_max must lie in [0, 12]");
  }
  const int w = std::max(n_max, 1);
  const SlitProblem prob(steps, w, 0, 0);
  const std::vector<BigRational> from_gf =
      series_coefficients(transfer_gf(prob).value, n_max);
  const std::vector<BigRational> from_dp = dp_series(steps, w, 0, 0, n_max);
  return from_gf == from_dp;
}

bool motzkin_limit_check(int n_max) {
  return depth_limited_series_check(WeightedStepSet::unit_motzkin(), n_max);
}

}  // namespace slit
