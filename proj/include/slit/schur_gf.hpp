#pragma once

#include <optional>
#include <vector>

#include "slit/gf_result.hpp"
#include "slit/matrix.hpp"
#include "slit/partition.hpp"
#include "slit/step_set.hpp"

namespace slit {

// The (w+1) x (w+1) banded matrix with entry (i, j) = e_{alpha+j-i}, where
// e_k = 0 outside [0, alpha+beta]. Its determinant is the Schur function of
// the rectangle ((w+1)^alpha, 0^beta) in the kernel roots, i.e. the shared
// denominator of every generating function of the strip.
FieldMatrix build_e_band_matrix(int w, const EValues& e);

RationalFunction e_band_determinant(int w, const EValues& e);

// Jacobi-Trudi determinant in the e-values for a straight shape:
// s_lambda = det(e_{lambda'_i + j - i}).
RationalFunction schur_via_jacobi_trudi(const Partition& lambda, const EValues& e);

// Skew variant: s_{outer/inner} = det(e_{outer'_i - inner'_j + j - i}),
// with both conjugates computed mechanically.
FieldMatrix skew_jacobi_trudi_matrix(const SkewShape& shape, const EValues& e);
RationalFunction skew_schur_via_jacobi_trudi(const SkewShape& shape, const EValues& e);

// Shapes entering the strip generating function for start height u and end
// height v: outer (w^alpha, u, 0^(beta-1)), inner (v, 0^(alpha+beta-1)).
SkewShape gf_skew_shape(int w, int alpha, int beta, int u, int v);
Partition gf_denominator_shape(int w, int alpha, int beta);

// G_{(u,v)} as (-1)^(1-alpha)/(t p_alpha) * det(minor(A; u, v)) / det(A);
// the minor of the banded matrix is exactly the skew Jacobi-Trudi
// determinant of gf_skew_shape.
GFResult gf_skew_route(const SlitProblem& prob);

// Same value through the horizontal-strip expansion: a sum of r+1 straight
// Schur functions over the shared rectangle denominator.
GFResult gf_schur_sum_route(const SlitProblem& prob);

// All end heights v = 0..w for a fixed start height, sharing one denominator
// determinant evaluation.
std::vector<GFResult> gf_vector(const WeightedStepSet& steps, int w, int u);

// Certificate that g (indexed by v = 0..w) solves the banded linear system
// the kernel induces: sum_i (-1)^i e_i g[v - alpha + i] = -delta_{u,v}/(t p_alpha)
// for every v, with out-of-range entries read as zero. Exact.
bool verify_linear_system(const WeightedStepSet& steps, int w, int u,
                          const std::vector<RationalFunction>& g);

enum class SpecialKind {
  excursion,            // (0, 0)
  bridge_up,            // (0, w)
  bridge_down,          // (w, 0)
  meander_from_floor,   // (0, v)
  meander_from_ceiling, // (w, v)
  meander_to_ceiling,   // (u, w)
  meander_to_floor,     // (u, 0)
};

// Named boundary cases; meander kinds take the free endpoint.
GFResult special_case(SpecialKind kind, const WeightedStepSet& steps, int w,
                      std::optional<int> free_endpoint = std::nullopt);

}  // namespace slit
