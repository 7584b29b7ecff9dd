#pragma once

#include <vector>

#include "slit/gf_result.hpp"
#include "slit/matrix.hpp"
#include "slit/step_set.hpp"

namespace slit {

// Total weight of all n-step paths from height u to height v inside [0, w],
// by forward dynamic programming over heights. Exact.
BigRational dp_count(const WeightedStepSet& steps, int w, int u, int v, int n);

// dp_count for every n = 0..n_max at once (one DP sweep).
std::vector<BigRational> dp_series(const WeightedStepSet& steps, int w, int u, int v, int n_max);

// Row of path weights after n steps from height u: entry v holds dp_count(.., v, n).
std::vector<BigRational> dp_row(const WeightedStepSet& steps, int w, int u, int n);

// The one-step weight matrix on heights 0..w: T[h][h'] = p_{h'-h} for up
// moves, q_{h-h'} for down moves, 0 otherwise.
FieldMatrix transfer_matrix(const WeightedStepSet& steps, int w);

// Entry (u, v) of (I - tT)^{-1}, evaluated exactly by Cramer's rule as a
// ratio of two fraction-free determinants. Fully independent of the
// Schur-function routes.
GFResult transfer_gf(const SlitProblem& prob);

// True iff the depth-w strip reproduces unconstrained counts: with w >= n_max
// a path of length n <= n_max cannot feel the ceiling, so the first n_max+1
// series coefficients of the strip generating function from (0,0) must equal
// the dynamic-programming counts.
bool depth_limited_series_check(const WeightedStepSet& steps, int n_max);

// depth_limited_series_check for unit-weight Motzkin steps.
bool motzkin_limit_check(int n_max);

}  // namespace slit
