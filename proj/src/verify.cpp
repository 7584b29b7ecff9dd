#include "slit/verify.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "slit/format.hpp"
#include "slit/kernel_roots.hpp"
#include "slit/numeric_validate.hpp"
#include "slit/oracle.hpp"
#include "slit/schur_gf.hpp"

namespace slit {

namespace {

bool roots_separated(const std::vector<std::complex<double>>& roots) {
  double max_abs = 0.0;
  for (const auto& z : roots) max_abs = std::max(max_abs, std::abs(z));
  for (std::size_t i = 0; i < roots.size(); ++i) {
    for (std::size_t j = i + 1; j < roots.size(); ++j) {
      if (std::abs(roots[i] - roots[j]) <= 1e-6 * max_abs) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<WeightedStepSet> seeded_weight_sets(int alpha, int beta, std::uint64_t seed,
                                                int count) {
  std::vector<WeightedStepSet> out;
  out.push_back(WeightedStepSet::unit(alpha, beta));
  // One generator per (alpha, beta) so sweeps over different grids stay
  // reproducible instance by instance.
  std::mt19937_64 rng(seed * 1000003ULL + static_cast<std::uint64_t>(alpha) * 31ULL +
                      static_cast<std::uint64_t>(beta));
  auto draw = [&rng] {
    const auto num = 1 + static_cast<long>(rng() % 5);
    const auto den = 1 + static_cast<long>(rng() % 5);
    return BigRational(BigInt(num), BigInt(den));
  };
  for (int s = 0; s < count; ++s) {
    std::vector<BigRational> p, q;
    for (int a = 0; a <= alpha; ++a) p.push_back(draw());
    for (int b = 1; b <= beta; ++b) q.push_back(draw());
    out.emplace_back(std::move(p), std::move(q));
  }
  return out;
}

SweepReport run_verification_sweep(const SweepConfig& config) {
  SweepReport report;
  report.config = config;
  bool fault_pending = config.inject_fault;

  auto fail = [&report](std::string check, int alpha, int beta, int w, int u, int v,
                        int weight_set, std::string detail) {
    report.failures.push_back(SweepFailure{std::move(check), alpha, beta, w, u, v, weight_set,
                                           std::move(detail)});
  };

  for (int alpha = 1; alpha <= config.max_alpha; ++alpha) {
    for (int beta = 1; beta <= config.max_beta; ++beta) {
      // Strip-removal shapes against brute-force enumeration (weights play
      // no role here).
      for (int w = 1; w <= config.max_w; ++w) {
        for (int u = 0; u <= w; ++u) {
          const Partition outer = gf_skew_shape(w, alpha, beta, u, 0).outer();
          for (int v = 0; v <= w; ++v) {
            ++report.strip_instances;
            std::vector<Partition> closed = strip_removal_shapes(w, alpha, beta, u, v);
            std::vector<Partition> brute = pieri_expand(outer, v);
            std::sort(closed.begin(), closed.end());
            std::sort(brute.begin(), brute.end());
            if (closed != brute) {
              fail("strip-shapes", alpha, beta, w, u, v, 0,
                   "closed-form shape list differs from brute-force expansion");
            }
          }
        }
      }

      const int sets = config.random_weights ? config.random_sets : 0;
      const std::vector<WeightedStepSet> weight_sets =
          seeded_weight_sets(alpha, beta, config.seed, sets);

      for (int set_index = 0; set_index < static_cast<int>(weight_sets.size()); ++set_index) {
        const WeightedStepSet& steps = weight_sets[static_cast<std::size_t>(set_index)];
        for (int w = 1; w <= config.max_w; ++w) {
          for (int u = 0; u <= w; ++u) {
            const std::vector<GFResult> vec = gf_vector(steps, w, u);
            std::vector<RationalFunction> values;
            values.reserve(vec.size());
            for (const auto& r : vec) values.push_back(r.value);

            ++report.linear_system_instances;
            if (!verify_linear_system(steps, w, u, values)) {
              fail("linear-system", alpha, beta, w, u, -1, set_index,
                   "generating function vector does not satisfy the banded system");
            }

            for (int v = 0; v <= w; ++v) {
              const SlitProblem prob(steps, w, u, v);
              ++report.route_instances;
              RationalFunction skew = gf_skew_route(prob).value;
              if (fault_pending) {
                skew = -skew;
                fault_pending = false;
              }
              const RationalFunction sum = gf_schur_sum_route(prob).value;
              const RationalFunction transfer = transfer_gf(prob).value;
              if (!(skew == sum && sum == transfer)) {
                fail("route-equivalence", alpha, beta, w, u, v, set_index,
                     "skew=" + format_rational_function(skew, OutputFormat::plain) +
                         " schur-sum=" + format_rational_function(sum, OutputFormat::plain) +
                         " transfer=" + format_rational_function(transfer, OutputFormat::plain));
              }

              // Root-based validation at t0 (skipped when roots collide).
              const auto roots = numeric_kernel_roots(steps, config.t0);
              if (!roots_separated(roots)) {
                ++report.degenerate_skipped;
                continue;
              }
              ++report.numeric_instances;
              const ValidationReport numeric = validate_root_formula_at(prob, config.t0);
              report.max_rel_error = std::max(report.max_rel_error, numeric.rel_error);
              if (!(numeric.rel_error < config.numeric_tolerance)) {
                std::ostringstream os;
                os << "rel_error=" << numeric.rel_error;
                fail("numeric-validation", alpha, beta, w, u, v, set_index, os.str());
              }

              if (w <= config.closed_form_max_w) {
                ClosedFormCase kind;
                if (alpha == 1 && beta == 1) kind = ClosedFormCase::motzkin;
                else if (alpha == 1 && beta == 2) kind = ClosedFormCase::one_two;
                else if (alpha == 2 && beta == 1) kind = ClosedFormCase::two_one;
                else continue;
                ++report.closed_form_instances;
                const ValidationReport closed = validate_closed_form(kind, prob, config.t0);
                report.max_rel_error = std::max(report.max_rel_error, closed.rel_error);
                if (!(closed.rel_error < config.numeric_tolerance)) {
                  std::ostringstream os;
                  os << "rel_error=" << closed.rel_error;
                  fail("closed-form", alpha, beta, w, u, v, set_index, os.str());
                }
              }
            }
          }
        }
      }
    }
  }
  return report;
}

nlohmann::json sweep_report_to_json(const SweepReport& report) {
  nlohmann::json failures = nlohmann::json::array();
  for (const auto& f : report.failures) {
    failures.push_back({{"check", f.check},
                        {"alpha", f.alpha},
                        {"beta", f.beta},
                        {"w", f.w},
                        {"u", f.u},
                        {"v", f.v},
                        {"weight_set", f.weight_set},
                        {"detail", f.detail}});
  }
  return nlohmann::json{
      {"config",
       {{"max_alpha", report.config.max_alpha},
        {"max_beta", report.config.max_beta},
        {"max_w", report.config.max_w},
        {"weights", report.config.random_weights ? "random" : "unit"},
        {"seed", report.config.seed},
        {"random_sets", report.config.random_sets},
        {"t0", report.config.t0.str()},
        {"numeric_tolerance", report.config.numeric_tolerance}}},
      {"counts",
       {{"route_instances", report.route_instances},
        {"strip_instances", report.strip_instances},
        {"linear_system_instances", report.linear_system_instances},
        {"numeric_instances", report.numeric_instances},
        {"closed_form_instances", report.closed_form_instances},
        {"degenerate_skipped", report.degenerate_skipped}}},
      {"max_rel_error", report.max_rel_error},
      {"failures", failures},
      {"ok", report.ok()}};
}

std::string sweep_summary(const SweepReport& report) {
  std::ostringstream os;
  auto line = [&os](const std::string& name, long count, long failed) {
    os << "  " << name;
    for (std::size_t i = name.size(); i < 24; ++i) os << ' ';
    os << count << " instance" << (count == 1 ? "" : "s") << ", "
       << (failed == 0 ? "all ok" : std::to_string(failed) + " FAILED") << "\n";
  };
  auto failed_for = [&report](const std::string& check) {
    long n = 0;
    for (const auto& f : report.failures) {
      if (f.check == check) ++n;
    }
    return n;
  };
  os << "verification sweep: alpha <= " << report.config.max_alpha << ", beta <= "
     << report.config.max_beta << ", w <= " << report.config.max_w << ", weights "
     << (report.config.random_weights
             ? "random (seed " + std::to_string(report.config.seed) + ", " +
                   std::to_string(report.config.random_sets) + " sets)"
             : "unit")
     << "\n";
  line("route equivalence", report.route_instances, failed_for("route-equivalence"));
  line("strip shapes", report.strip_instances, failed_for("strip-shapes"));
  line("linear system", report.linear_system_instances, failed_for("linear-system"));
  line("numeric validation", report.numeric_instances, failed_for("numeric-validation"));
  line("closed forms", report.closed_form_instances, failed_for("closed-form"));
  if (report.degenerate_skipped > 0) {
    os << "  (skipped " << report.degenerate_skipped << " degenerate-root instances)\n";
  }
  os << "  max numeric rel error  " << report.max_rel_error << "\n";
  for (const auto& f : report.failures) {
    os << "  FAIL " << f.check << " at alpha=" << f.alpha << " beta=" << f.beta
       << " w=" << f.w << " u=" << f.u << " v=" << f.v << " weight_set=" << f.weight_set
       << ": " << f.detail << "\n";
  }
  os << (report.ok() ? "ALL CHECKS PASSED" : "FAILURES DETECTED") << "\n";
  return os.str();
}

}  // namespace slit
