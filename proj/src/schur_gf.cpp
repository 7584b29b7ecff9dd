#include "slit/schur_gf.hpp"

namespace slit {

std::string route_name(Route r) {
  switch (r) {
    case Route::skew_determinant: return "skew-determinant";
    case Route::schur_sum: return "schur-sum";
    case Route::transfer_matrix: return "transfer-matrix";
  }
  return "unknown";
}

FieldMatrix build_e_band_matrix(int w, const EValues& e) {
  if (w < 1) throw DomainError("strip width must be >= 1");
  const std::size_t n = static_cast<std::size_t>(w) + 1;
  FieldMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      a.at(i, j) = e.at(e.alpha + static_cast<int>(j) - static_cast<int>(i));
    }
  }
  return a;
}

RationalFunction e_band_determinant(int w, const EValues& e) {
  return determinant(build_e_band_matrix(w, e));
}

RationalFunction schur_via_jacobi_trudi(const Partition& lambda, const EValues& e) {
  const Partition conj = lambda.conjugate();
  const std::size_t n = conj.length();
  FieldMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      m.at(i, j) = e.at(conj.part(i) + static_cast<int>(j) - static_cast<int>(i));
    }
  }
  return determinant(m);
}

FieldMatrix skew_jacobi_trudi_matrix(const SkewShape& shape, const EValues& e) {
  const Partition outer_conj = shape.outer().conjugate();
  const Partition inner_conj = shape.inner().conjugate();
  const std::size_t n = outer_conj.length();
  FieldMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      m.at(i, j) =
          e.at(outer_conj.part(i) - inner_conj.part(j) + static_cast<int>(j) - static_cast<int>(i));
    }
  }
  return m;
}

RationalFunction skew_schur_via_jacobi_trudi(const SkewShape& shape, const EValues& e) {
  return determinant(skew_jacobi_trudi_matrix(shape, e));
}

SkewShape gf_skew_shape(int w, int alpha, int beta, int u, int v) {
  std::vector<int> outer(static_cast<std::size_t>(alpha), w);
  outer.push_back(u);
  outer.insert(outer.end(), static_cast<std::size_t>(beta - 1), 0);
  std::vector<int> inner{v};
  inner.insert(inner.end(), static_cast<std::size_t>(alpha + beta - 1), 0);
  return SkewShape(Partition(std::move(outer)), Partition(std::move(inner)));
}

Partition gf_denominator_shape(int w, int alpha, int beta) {
  std::vector<int> parts(static_cast<std::size_t>(alpha), w + 1);
  parts.insert(parts.end(), static_cast<std::size_t>(beta), 0);
  return Partition(std::move(parts));
}

namespace {

// (-1)^(1-alpha) / (t p_alpha)
RationalFunction gf_prefactor(const WeightedStepSet& steps) {
  BigRational c = steps.p(steps.alpha()).reciprocal();
  if (steps.alpha() % 2 == 0) c = -c;
  return RationalFunction(Polynomial::constant(c), Polynomial::variable());
}

}  // namespace

GFResult gf_skew_route(const SlitProblem& prob) {
  const EValues e = e_values(prob.steps);
  const FieldMatrix a = build_e_band_matrix(prob.w, e);
  const RationalFunction den = determinant(a);
  const RationalFunction num = determinant(
      a.minor_matrix(static_cast<std::size_t>(prob.u), static_cast<std::size_t>(prob.v)));
  return GFResult{gf_prefactor(prob.steps) * num / den, Route::skew_determinant, prob};
}

GFResult gf_schur_sum_route(const SlitProblem& prob) {
  const int alpha = prob.steps.alpha();
  const int beta = prob.steps.beta();
  const EValues e = e_values(prob.steps);
  RationalFunction num;
  for (const Partition& shape : strip_removal_shapes(prob.w, alpha, beta, prob.u, prob.v)) {
    num += schur_via_jacobi_trudi(shape, e);
  }
  const RationalFunction den = schur_via_jacobi_trudi(gf_denominator_shape(prob.w, alpha, beta), e);
  return GFResult{gf_prefactor(prob.steps) * num / den, Route::schur_sum, prob};
}

std::vector<GFResult> gf_vector(const WeightedStepSet& steps, int w, int u) {
  if (w < 1) throw DomainError("strip width must be >= 1");
  if (u < 0 || u > w) throw DomainError("start height must lie in [0, w]");
  const EValues e = e_values(steps);
  const FieldMatrix a = build_e_band_matrix(w, e);
  const RationalFunction den = determinant(a);
  const RationalFunction pre = gf_prefactor(steps);
  std::vector<GFResult> out;
  out.reserve(static_cast<std::size_t>(w) + 1);
  for (int v = 0; v <= w; ++v) {
    const RationalFunction num =
        determinant(a.minor_matrix(static_cast<std::size_t>(u), static_cast<std::size_t>(v)));
    out.push_back(GFResult{pre * num / den, Route::skew_determinant,
                           SlitProblem(steps, w, u, v)});
  }
  return out;
}

bool verify_linear_system(const WeightedStepSet& steps, int w, int u,
                          const std::vector<RationalFunction>& g) {
  if (static_cast<int>(g.size()) != w + 1) {
    throw DomainError("verify_linear_system: expected w + 1 entries");
  }
  const int alpha = steps.alpha();
  const int beta = steps.beta();
  const EValues e = e_values(steps);
  const RationalFunction rhs_at_u =
      RationalFunction(Polynomial::constant(BigRational(-1)),
                       Polynomial::monomial(steps.p(alpha), 1));
  for (int v = 0; v <= w; ++v) {
    RationalFunction lhs;
    for (int i = 0; i <= alpha + beta; ++i) {
      const int idx = v - alpha + i;
      if (idx < 0 || idx > w) continue;
      RationalFunction term = e.at(i) * g[static_cast<std::size_t>(idx)];
      if (i % 2 != 0) term = -term;
      lhs += term;
    }
    const RationalFunction rhs = (v == u) ? rhs_at_u : RationalFunction();
    if (lhs != rhs) return false;
  }
  return true;
}

GFResult special_case(SpecialKind kind, const WeightedStepSet& steps, int w,
                      std::optional<int> free_endpoint) {
  const bool needs_endpoint = kind == SpecialKind::meander_from_floor ||
                              kind == SpecialKind::meander_from_ceiling ||
                              kind == SpecialKind::meander_to_ceiling ||
                              kind == SpecialKind::meander_to_floor;
  if (needs_endpoint != free_endpoint.has_value()) {
    throw DomainError(needs_endpoint ? "meander case needs a free endpoint"
                                     : "fixed boundary case takes no free endpoint");
  }
  int u = 0, v = 0;
  switch (kind) {
    case SpecialKind::excursion: u = 0; v = 0; break;
    case SpecialKind::bridge_up: u = 0; v = w; break;
    case SpecialKind::bridge_down: u = w; v = 0; break;
    case SpecialKind::meander_from_floor: u = 0; v = *free_endpoint; break;
    case SpecialKind::meander_from_ceiling: u = w; v = *free_endpoint; break;
    case SpecialKind::meander_to_ceiling: u = *free_endpoint; v = w; break;
    case SpecialKind::meander_to_floor: u = *free_endpoint; v = 0; break;
  }
  return gf_skew_route(SlitProblem(steps, w, u, v));
}

}  // namespace slit
