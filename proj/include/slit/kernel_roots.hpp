#pragma once

#include <complex>
#include <vector>

#include "slit/step_set.hpp"

namespace slit {

// The alpha+beta complex roots of z^beta * K(t0, z), by Aberth-Ehrlich
// iteration followed by Newton polishing. Each returned root z satisfies
// |p(z)| <= 1e-10 * sum_j |c_j| |z|^j; otherwise NumericFailure is thrown.
// Roots are sorted by descending real part, then descending imaginary part.
// Throws DomainError if t0 = 0.
std::vector<std::complex<double>> numeric_kernel_roots(const WeightedStepSet& steps,
                                                       const BigRational& t0);

// General dense root finder used above: roots of sum_j c[j] z^j, degree >= 1.
std::vector<std::complex<double>> polynomial_roots(const std::vector<std::complex<double>>& c);

}  // namespace slit
