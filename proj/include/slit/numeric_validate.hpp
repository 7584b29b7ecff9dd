#pragma once

#include <complex>
#include <vector>

#include "slit/partition.hpp"
#include "slit/step_set.hpp"

namespace slit {

// Schur polynomial evaluated at explicit points as a ratio of alternants,
// det(z_i^{lambda_j + n - j}) / det(z_i^{n - j}). Requires pairwise distinct
// points: min separation > 1e-6 * max |z|, and the Vandermonde must not be
// small against the numerator alternant; otherwise DegenerateRoots is thrown
// and callers fall back to the Jacobi-Trudi form below.
std::complex<double> bialternant_schur(const std::vector<std::complex<double>>& roots,
                                       const Partition& lambda);

// Schur value via the Jacobi-Trudi determinant in the elementary symmetric
// functions of the points. Robust to coincident points.
std::complex<double> numeric_jacobi_trudi_schur(const std::vector<std::complex<double>>& roots,
                                                const Partition& lambda);
std::complex<double> numeric_skew_jacobi_trudi_schur(
    const std::vector<std::complex<double>>& roots, const SkewShape& shape);

// Bialternant with automatic fallback to Jacobi-Trudi on degeneracy.
std::complex<double> numeric_schur(const std::vector<std::complex<double>>& roots,
                                   const Partition& lambda);

struct ValidationReport {
  double exact = 0.0;                    // the exact generating function at t0
  std::complex<double> numeric{0.0, 0.0};  // the root-based evaluation
  double rel_error = 0.0;
  bool used_fallback = false;  // Jacobi-Trudi fallback used for a degenerate alternant
};

// Compares the exact generating function at t0 with the same quantity
// assembled from the numeric kernel roots:
// (-1)^(1-alpha)/(t0 p_alpha) * s_skew(roots) / s_rectangle(roots).
// Throws DegenerateRoots if even the fallback cannot be trusted (never in
// practice; the skew numerator always uses Jacobi-Trudi).
ValidationReport validate_root_formula_at(const SlitProblem& prob, const BigRational& t0);

enum class ClosedFormCase {
  motzkin,   // alpha = beta = 1
  one_two,   // alpha = 1, beta = 2
  two_one,   // alpha = 2, beta = 1
};

// Evaluates the explicit monomial closed form for the matching small case
// directly in the numeric kernel roots and compares against the exact value.
// Throws DomainError if (alpha, beta) does not match, DegenerateRoots if the
// roots are too close for the division-free monomial form.
ValidationReport validate_closed_form(ClosedFormCase kind, const SlitProblem& prob,
                                      const BigRational& t0);

}  // namespace slit
