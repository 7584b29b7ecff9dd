#include "slit/kernel_roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace slit {

namespace {

using Complex = std::complex<double>;

Complex horner(const std::vector<Complex>& c, Complex z) {
  Complex acc(0.0, 0.0);
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = acc * z + *it;
  }
  return acc;
}

Complex horner_derivative(const std::vector<Complex>& c, Complex z) {
  Complex acc(0.0, 0.0);
  for (std::size_t j = c.size() - 1; j >= 1; --j) {
    acc = acc * z + c[j] * static_cast<double>(j);
  }
  return acc;
}

double residual_scale(const std::vector<Complex>& c, Complex z) {
  const double az = std::abs(z);
  double scale = 0.0;
  double zp = 1.0;
  for (const auto& cj : c) {
    scale += std::abs(cj) * zp;
    zp *= az;
  }
  return scale;
}

}  // namespace

std::vector<Complex> polynomial_roots(const std::vector<Complex>& c) {
  const int deg = static_cast<int>(c.size()) - 1;
  if (deg < 1 || std::abs(c.back()) == 0.0) {
    throw DomainError("polynomial_roots: degree must be >= 1 with nonzero leading coefficient");
  }

  // Cauchy-style starting radius.
  double max_ratio = 0.0;
  for (int j = 0; j < deg; ++j) {
    max_ratio = std::max(max_ratio, std::abs(c[static_cast<std::size_t>(j)] / c.back()));
  }
  const double radius = 1.0 + max_ratio;

  std::vector<Complex> z(static_cast<std::size_t>(deg));
  for (int k = 0; k < deg; ++k) {
    const double angle = 2.0 * std::numbers::pi * (static_cast<double>(k) + 0.25) / deg + 0.7;
    z[static_cast<std::size_t>(k)] = std::polar(radius, angle);
  }

  constexpr int kMaxIterations = 400;
  for (int iter = 0; iter < kMaxIterations; ++iter) {
    double max_step = 0.0;
    for (int k = 0; k < deg; ++k) {
      const Complex zk = z[static_cast<std::size_t>(k)];
      const Complex pv = horner(c, zk);
      if (std::abs(pv) == 0.0) continue;
      const Complex dv = horner_derivative(c, zk);
      const Complex newton = (std::abs(dv) == 0.0) ? Complex(1e-12, 1e-12) : pv / dv;
      Complex repel(0.0, 0.0);
      for (int j = 0; j < deg; ++j) {
        if (j != k) repel += 1.0 / (zk - z[static_cast<std::size_t>(j)]);
      }
      const Complex denom = 1.0 - newton * repel;
      const Complex step = (std::abs(denom) == 0.0) ? newton : newton / denom;
      z[static_cast<std::size_t>(k)] = zk - step;
      max_step = std::max(max_step, std::abs(step) / std::max(1.0, std::abs(zk)));
    }
    if (max_step < 1e-15) break;
  }

  // Newton polish.
  for (auto& root : z) {
    for (int i = 0; i < 4; ++i) {
      const Complex pv = horner(c, root);
      const Complex dv = horner_derivative(c, root);
      if (std::abs(dv) == 0.0) break;
      const Complex step = pv / dv;
      if (std::abs(step) > 0.5 * std::max(1.0, std::abs(root))) break;
      root -= step;
    }
  }

  for (const auto& root : z) {
    if (std::abs(horner(c, root)) > 1e-10 * residual_scale(c, root)) {
      throw NumericFailure("polynomial_roots: residual tolerance not met");
    }
  }

  std::sort(z.begin(), z.end(), [](const Complex& a, const Complex& b) {
    if (a.real() != b.real()) return a.real() > b.real();
    return a.imag() > b.imag();
  });
  return z;
}

std::vector<Complex> numeric_kernel_roots(const WeightedStepSet& steps,
                                          const BigRational& t0) {
  if (t0.is_zero()) {
    throw DomainError("numeric_kernel_roots: t must be nonzero");
  }
  const int alpha = steps.alpha();
  const int beta = steps.beta();
  const double td = t0.to_double();

  // z^beta * K(t0, z): coefficient of z^(beta) gains the constant 1, the
  // up-steps sit at z^(beta+a), the down-steps at z^(beta-b).
  std::vector<Complex> c(static_cast<std::size_t>(alpha + beta) + 1, Complex(0.0, 0.0));
  c[static_cast<std::size_t>(beta)] = Complex(1.0 - td * steps.p(0).to_double(), 0.0);
  for (int a = 1; a <= alpha; ++a) {
    c[static_cast<std::size_t>(beta + a)] = Complex(-td * steps.p(a).to_double(), 0.0);
  }
  for (int b = 1; b <= beta; ++b) {
    c[static_cast<std::size_t>(beta - b)] = Complex(-td * steps.q(b).to_double(), 0.0);
  }
  return polynomial_roots(c);
}

}  // namespace slit
