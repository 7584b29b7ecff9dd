#include "slit/numeric_validate.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "slit/kernel_roots.hpp"
#include "slit/schur_gf.hpp"

namespace slit {

namespace {

using Complex = std::complex<double>;

Complex ipow(Complex z, int k) {
  Complex acc(1.0, 0.0);
  while (k > 0) {
    if (k & 1) acc *= z;
    z *= z;
    k >>= 1;
  }
  return acc;
}

// Determinant by LU with partial pivoting.
Complex complex_det(std::vector<std::vector<Complex>> m) {
  const std::size_t n = m.size();
  Complex det(1.0, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (std::abs(m[i][k]) > std::abs(m[pivot][k])) pivot = i;
    }
    if (std::abs(m[pivot][k]) == 0.0) return Complex(0.0, 0.0);
    if (pivot != k) {
      std::swap(m[pivot], m[k]);
      det = -det;
    }
    det *= m[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      const Complex f = m[i][k] / m[k][k];
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] -= f * m[k][j];
      }
    }
  }
  return det;
}

void require_separated(const std::vector<Complex>& roots) {
  double max_abs = 0.0;
  for (const auto& z : roots) max_abs = std::max(max_abs, std::abs(z));
  for (std::size_t i = 0; i < roots.size(); ++i) {
    for (std::size_t j = i + 1; j < roots.size(); ++j) {
      if (std::abs(roots[i] - roots[j]) <= 1e-6 * max_abs) {
        throw DegenerateRoots("kernel roots too close for an alternant evaluation");
      }
    }
  }
}

// e_0..e_n of the given points.
std::vector<Complex> numeric_elementaries(const std::vector<Complex>& roots) {
  std::vector<Complex> e(roots.size() + 1, Complex(0.0, 0.0));
  e[0] = Complex(1.0, 0.0);
  std::size_t used = 0;
  for (const auto& z : roots) {
    ++used;
    for (std::size_t j = used; j >= 1; --j) {
      e[j] += z * e[j - 1];
    }
  }
  return e;
}

Complex e_at(const std::vector<Complex>& e, int k) {
  if (k < 0 || k >= static_cast<int>(e.size())) return Complex(0.0, 0.0);
  return e[static_cast<std::size_t>(k)];
}

}  // namespace

Complex bialternant_schur(const std::vector<Complex>& roots, const Partition& lambda) {
  const int n = static_cast<int>(roots.size());
  if (static_cast<int>(lambda.nonzero_length()) > n) {
    throw DomainError("bialternant_schur: more parts than points");
  }
  require_separated(roots);
  std::vector<std::vector<Complex>> alt(static_cast<std::size_t>(n),
                                        std::vector<Complex>(static_cast<std::size_t>(n)));
  std::vector<std::vector<Complex>> van = alt;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      alt[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          ipow(roots[static_cast<std::size_t>(i)], lambda.part(static_cast<std::size_t>(j)) + n - 1 - j);
      van[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          ipow(roots[static_cast<std::size_t>(i)], n - 1 - j);
    }
  }
  const Complex num = complex_det(std::move(alt));
  const Complex den = complex_det(std::move(van));
  if (std::abs(den) < 1e-8 * std::abs(num) || std::abs(den) == 0.0) {
    throw DegenerateRoots("Vandermonde too small against the alternant");
  }
  return num / den;
}

Complex numeric_jacobi_trudi_schur(const std::vector<Complex>& roots, const Partition& lambda) {
  const std::vector<Complex> e = numeric_elementaries(roots);
  const Partition conj = lambda.conjugate();
  const std::size_t n = conj.length();
  if (n == 0) return Complex(1.0, 0.0);
  std::vector<std::vector<Complex>> m(n, std::vector<Complex>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      m[i][j] = e_at(e, conj.part(i) + static_cast<int>(j) - static_cast<int>(i));
    }
  }
  return complex_det(std::move(m));
}

Complex numeric_skew_jacobi_trudi_schur(const std::vector<Complex>& roots,
                                        const SkewShape& shape) {
  const std::vector<Complex> e = numeric_elementaries(roots);
  const Partition outer_conj = shape.outer().conjugate();
  const Partition inner_conj = shape.inner().conjugate();
  const std::size_t n = outer_conj.length();
  if (n == 0) return Complex(1.0, 0.0);
  std::vector<std::vector<Complex>> m(n, std::vector<Complex>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      m[i][j] = e_at(e, outer_conj.part(i) - inner_conj.part(j) + static_cast<int>(j) -
                            static_cast<int>(i));
    }
  }
  return complex_det(std::move(m));
}

Complex numeric_schur(const std::vector<Complex>& roots, const Partition& lambda) {
  try {
    return bialternant_schur(roots, lambda);
  } catch (const DegenerateRoots&) {
    return numeric_jacobi_trudi_schur(roots, lambda);
  }
}

namespace {

double relative_error(double exact, Complex numeric) {
  const double diff = std::abs(Complex(exact, 0.0) - numeric);
  return exact != 0.0 ? diff / std::abs(exact) : diff;
}

}  // namespace

ValidationReport validate_root_formula_at(const SlitProblem& prob, const BigRational& t0) {
  const int alpha = prob.steps.alpha();
  const int beta = prob.steps.beta();

  const double exact = gf_skew_route(prob).value.evaluate(t0).to_double();

  const std::vector<Complex> roots = numeric_kernel_roots(prob.steps, t0);
  const SkewShape shape = gf_skew_shape(prob.w, alpha, beta, prob.u, prob.v);
  const Complex num = numeric_skew_jacobi_trudi_schur(roots, shape);

  ValidationReport report;
  Complex den;
  try {
    den = bialternant_schur(roots, gf_denominator_shape(prob.w, alpha, beta));
  } catch (const DegenerateRoots&) {
    den = numeric_jacobi_trudi_schur(roots, gf_denominator_shape(prob.w, alpha, beta));
    report.used_fallback = true;
  }

  double pre = 1.0 / (t0.to_double() * prob.steps.p(alpha).to_double());
  if (alpha % 2 == 0) pre = -pre;

  report.exact = exact;
  report.numeric = pre * num / den;
  report.rel_error = relative_error(exact, report.numeric);
  return report;
}

ValidationReport validate_closed_form(ClosedFormCase kind, const SlitProblem& prob,
                                      const BigRational& t0) {
  const int alpha = prob.steps.alpha();
  const int beta = prob.steps.beta();
  const int expected_alpha = kind == ClosedFormCase::two_one ? 2 : 1;
  const int expected_beta = kind == ClosedFormCase::one_two ? 2 : 1;
  if (alpha != expected_alpha || beta != expected_beta) {
    throw DomainError("closed form does not match the step set's (alpha, beta)");
  }

  const std::vector<Complex> roots = numeric_kernel_roots(prob.steps, t0);
  require_separated(roots);

  const int w = prob.w;
  const int u = prob.u;
  const int v = prob.v;
  const int drop = std::max(v - u, 0);   // (v-u)_+
  const int keep = std::max(u - v, 0);   // (u-v)_+
  const int r = std::min(std::min(u, v), std::min(w - u, w - v));

  Complex value;
  if (kind == ClosedFormCase::motzkin) {
    const Complex z1 = roots[0], z2 = roots[1];
    Complex num(0.0, 0.0);
    for (int l = 0; l <= r; ++l) {
      num += ipow(z1, w - drop - l + 1) * ipow(z2, keep + l) -
             ipow(z2, w - drop - l + 1) * ipow(z1, keep + l);
    }
    const Complex den = ipow(z1, w + 2) - ipow(z2, w + 2);
    value = num / den / (t0.to_double() * prob.steps.p(1).to_double());
  } else if (kind == ClosedFormCase::one_two) {
    const Complex z1 = roots[0], z2 = roots[1], z3 = roots[2];
    Complex num(0.0, 0.0);
    for (int l = 0; l <= r; ++l) {
      const int top = w - drop - l + 2;
      const int bot = keep + l + 1;
      num += ipow(z1, top) * (ipow(z2, bot) - ipow(z3, bot)) -
             ipow(z2, top) * (ipow(z1, bot) - ipow(z3, bot)) +
             ipow(z3, top) * (ipow(z1, bot) - ipow(z2, bot));
    }
    const Complex den = ipow(z1, w + 3) * (z2 - z3) - ipow(z2, w + 3) * (z1 - z3) +
                        ipow(z3, w + 3) * (z1 - z2);
    value = num / den / (t0.to_double() * prob.steps.p(1).to_double());
  } else {
    const Complex z1 = roots[0], z2 = roots[1], z3 = roots[2];
    Complex num(0.0, 0.0);
    for (int l = 0; l <= r; ++l) {
      const int top = w - drop - l + 1;
      const int bot = keep + l;
      num += ipow(z1, w + 2) * (ipow(z2, top) * ipow(z3, bot) - ipow(z3, top) * ipow(z2, bot)) -
             ipow(z2, w + 2) * (ipow(z1, top) * ipow(z3, bot) - ipow(z3, top) * ipow(z1, bot)) +
             ipow(z3, w + 2) * (ipow(z1, top) * ipow(z2, bot) - ipow(z2, top) * ipow(z1, bot));
    }
    const Complex den = ipow(z1, w + 3) * (ipow(z2, w + 2) - ipow(z3, w + 2)) -
                        ipow(z2, w + 3) * (ipow(z1, w + 2) - ipow(z3, w + 2)) +
                        ipow(z3, w + 3) * (ipow(z1, w + 2) - ipow(z2, w + 2));
    value = -num / den / (t0.to_double() * prob.steps.p(2).to_double());
  }

  ValidationReport report;
  report.exact = gf_skew_route(prob).value.evaluate(t0).to_double();
  report.numeric = value;
  report.rel_error = relative_error(report.exact, value);
  return report;
}

}  // namespace slit
