#pragma once

#include <string>

#include "slit/rational_function.hpp"
#include "slit/step_set.hpp"

namespace slit {

enum class Route {
  skew_determinant,
  schur_sum,
  transfer_matrix,
};

std::string route_name(Route r);

// A computed generating function together with the route that produced it.
struct GFResult {
  RationalFunction value;
  Route route;
  SlitProblem problem;
};

}  // namespace slit
