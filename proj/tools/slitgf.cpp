// slitgf: exact generating functions for weighted directed paths confined to
// a horizontal strip, with transfer-matrix and numeric cross-checks.

#include <complex>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "slit/format.hpp"
#include "slit/kernel_roots.hpp"
#include "slit/numeric_validate.hpp"
#include "slit/oracle.hpp"
#include "slit/schur_gf.hpp"
#include "slit/verify.hpp"

namespace {

using slit::BigRational;
using slit::OutputFormat;

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitVerificationFailure = 2;

struct ProblemOptions {
  std::string file;
  std::optional<int> alpha, beta, w, u, v;
  std::vector<std::string> p, q;
};

void add_problem_options(CLI::App* cmd, ProblemOptions& opts, bool heights_needed) {
  cmd->add_option("--problem", opts.file, "problem file (JSON)");
  cmd->add_option("--alpha", opts.alpha, "maximal up-step height");
  cmd->add_option("--beta", opts.beta, "maximal down-step height");
  cmd->add_option("--w", opts.w, "strip width");
  cmd->add_option("--u", opts.u, "start height");
  cmd->add_option("--v", opts.v, "end height");
  cmd->add_option("--p", opts.p, "up-step weights p_0..p_alpha (num/den)")->delimiter(',');
  cmd->add_option("--q", opts.q, "down-step weights q_1..q_beta (num/den)")->delimiter(',');
  (void)heights_needed;
}

slit::SlitProblem build_problem(const ProblemOptions& opts, bool heights_needed) {
  const bool inline_given = opts.alpha || opts.beta || opts.w || opts.u || opts.v ||
                            !opts.p.empty() || !opts.q.empty();
  if (!opts.file.empty()) {
    if (inline_given) {
      throw slit::ParseError("give either --problem or inline flags, not both");
    }
    return slit::load_problem_file(opts.file);
  }
  if (!opts.alpha || !opts.beta || opts.p.empty() || opts.q.empty()) {
    throw slit::ParseError("need --alpha, --beta, --p and --q (or --problem FILE)");
  }
  if (heights_needed && (!opts.w || !opts.u || !opts.v)) {
    throw slit::ParseError("need --w, --u and --v");
  }
  std::vector<BigRational> p, q;
  for (const auto& s : opts.p) p.push_back(BigRational::parse(s));
  for (const auto& s : opts.q) q.push_back(BigRational::parse(s));
  if (static_cast<int>(p.size()) != *opts.alpha + 1) {
    throw slit::ParseError("--p must list alpha + 1 weights (p_0..p_alpha)");
  }
  if (static_cast<int>(q.size()) != *opts.beta) {
    throw slit::ParseError("--q must list beta weights (q_1..q_beta)");
  }
  return slit::SlitProblem(slit::WeightedStepSet(std::move(p), std::move(q)),
                           opts.w.value_or(1), opts.u.value_or(0), opts.v.value_or(0));
}

void write_output(const std::string& out_file, const std::string& text) {
  if (out_file.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
  } else {
    std::ofstream out(out_file);
    if (!out) throw slit::ParseError("cannot write to '" + out_file + "'");
    out << text;
    if (!text.empty() && text.back() != '\n') out << "\n";
  }
}

int run_gf(const ProblemOptions& popts, const std::string& route, OutputFormat fmt,
           const std::string& out_file) {
  const slit::SlitProblem prob = build_problem(popts, true);
  std::vector<slit::GFResult> results;
  if (route == "skew" || route == "all") results.push_back(slit::gf_skew_route(prob));
  if (route == "schur-sum" || route == "all") results.push_back(slit::gf_schur_sum_route(prob));
  if (route == "transfer" || route == "all") results.push_back(slit::transfer_gf(prob));

  bool agree = true;
  for (const auto& r : results) {
    if (!(r.value == results.front().value)) agree = false;
  }

  if (fmt == OutputFormat::json) {
    nlohmann::json jresults = nlohmann::json::array();
    for (const auto& r : results) {
      nlohmann::json item = slit::rational_function_to_json(r.value);
      item["route"] = slit::route_name(r.route);
      jresults.push_back(item);
    }
    nlohmann::json j{{"problem", slit::problem_to_json(prob)}, {"results", jresults}};
    if (results.size() > 1) j["agree"] = agree;
    write_output(out_file, j.dump(2));
  } else {
    std::ostringstream os;
    for (const auto& r : results) {
      if (results.size() > 1) os << slit::route_name(r.route) << ": ";
      os << slit::format_rational_function(r.value, fmt) << "\n";
    }
    if (results.size() > 1) os << (agree ? "AGREE" : "DISAGREE") << "\n";
    write_output(out_file, os.str());
  }
  return agree ? kExitOk : kExitVerificationFailure;
}

int run_series(const ProblemOptions& popts, int n_max, OutputFormat fmt,
               const std::string& out_file) {
  if (n_max < 0 || n_max > 100000) {
    throw slit::ParseError("--n must lie in [0, 100000]");
  }
  const slit::SlitProblem prob = build_problem(popts, true);
  const std::vector<BigRational> coeffs =
      slit::series_coefficients(slit::gf_skew_route(prob).value, n_max);
  if (fmt == OutputFormat::json) {
    std::vector<std::string> strings;
    strings.reserve(coeffs.size());
    for (const auto& c : coeffs) strings.push_back(c.str());
    nlohmann::json j{{"problem", slit::problem_to_json(prob)},
                     {"n_max", n_max},
                     {"coefficients", strings}};
    write_output(out_file, j.dump(2));
  } else {
    std::ostringstream os;
    for (const auto& c : coeffs) os << c.str() << "\n";
    write_output(out_file, os.str());
  }
  return kExitOk;
}

int run_expand(int w, int alpha, int beta, int u, int v, OutputFormat fmt,
               const std::string& out_file) {
  const slit::SkewShape shape = slit::gf_skew_shape(w, alpha, beta, u, v);
  const std::vector<slit::Partition> shapes = slit::strip_removal_shapes(w, alpha, beta, u, v);
  if (fmt == OutputFormat::json) {
    auto parts = [](const slit::Partition& p) {
      return std::vector<int>(p.parts().begin(),
                              p.parts().begin() + static_cast<long>(p.nonzero_length()));
    };
    nlohmann::json jshapes = nlohmann::json::array();
    for (const auto& s : shapes) jshapes.push_back(parts(s));
    nlohmann::json j{{"outer", parts(shape.outer())},
                     {"inner", parts(shape.inner())},
                     {"shapes", jshapes}};
    write_output(out_file, j.dump(2));
    return kExitOk;
  }
  std::ostringstream os;
  os << "s_{" << slit::format_skew_shape(shape, fmt) << "} = ";
  for (std::size_t i = 0; i < shapes.size(); ++i) {
    if (i > 0) os << " + ";
    os << "s_{" << slit::format_partition(shapes[i], fmt) << "}";
  }
  os << "\n";
  write_output(out_file, os.str());
  return kExitOk;
}

int run_roots(const ProblemOptions& popts, const std::string& t_str, OutputFormat fmt,
              const std::string& out_file) {
  const slit::SlitProblem prob = build_problem(popts, false);
  const BigRational t0 = BigRational::parse(t_str);
  const auto roots = slit::numeric_kernel_roots(prob.steps, t0);
  if (fmt == OutputFormat::json) {
    nlohmann::json jroots = nlohmann::json::array();
    for (const auto& z : roots) jroots.push_back({{"re", z.real()}, {"im", z.imag()}});
    nlohmann::json j{{"t", t0.str()}, {"roots", jroots}};
    write_output(out_file, j.dump(2));
    return kExitOk;
  }
  std::ostringstream os;
  os.precision(16);
  for (const auto& z : roots) {
    os << z.real();
    if (z.imag() != 0.0) os << (z.imag() > 0 ? " + " : " - ") << std::abs(z.imag()) << "i";
    os << "\n";
  }
  write_output(out_file, os.str());
  return kExitOk;
}

int run_validate(const ProblemOptions& popts, const std::string& t_str,
                 OutputFormat fmt, const std::string& out_file) {
  const slit::SlitProblem prob = build_problem(popts, true);
  const BigRational t0 = BigRational::parse(t_str);
  const slit::ValidationReport main_report = slit::validate_root_formula_at(prob, t0);

  std::optional<slit::ValidationReport> closed;
  std::string closed_name;
  const int alpha = prob.steps.alpha();
  const int beta = prob.steps.beta();
  try {
    if (alpha == 1 && beta == 1) {
      closed = slit::validate_closed_form(slit::ClosedFormCase::motzkin, prob, t0);
      closed_name = "motzkin";
    } else if (alpha == 1 && beta == 2) {
      closed = slit::validate_closed_form(slit::ClosedFormCase::one_two, prob, t0);
      closed_name = "one-two";
    } else if (alpha == 2 && beta == 1) {
      closed = slit::validate_closed_form(slit::ClosedFormCase::two_one, prob, t0);
      closed_name = "two-one";
    }
  } catch (const slit::DegenerateRoots&) {
    closed.reset();
  }

  const double tolerance = 1e-8;
  bool ok = main_report.rel_error < tolerance;
  if (closed) ok = ok && closed->rel_error < tolerance;

  const BigRational exact_value = slit::gf_skew_route(prob).value.evaluate(t0);
  if (fmt == OutputFormat::json) {
    nlohmann::json j{{"problem", slit::problem_to_json(prob)},
                     {"t", t0.str()},
                     {"exact", exact_value.str()},
                     {"exact_double", main_report.exact},
                     {"numeric_re", main_report.numeric.real()},
                     {"numeric_im", main_report.numeric.imag()},
                     {"rel_error", main_report.rel_error},
                     {"used_fallback", main_report.used_fallback},
                     {"ok", ok}};
    if (closed) {
      const slit::ValidationReport c = *closed;
      j["closed_form"] = {{"case", closed_name},
                          {"numeric_re", c.numeric.real()},
                          {"numeric_im", c.numeric.imag()},
                          {"rel_error", c.rel_error}};
    }
    write_output(out_file, j.dump(2));
  } else {
    std::ostringstream os;
    os.precision(16);
    os << "exact value at t = " << t0.str() << ": " << exact_value.str() << " = "
       << main_report.exact << "\n";
    os << "root-based value: " << main_report.numeric.real();
    if (main_report.numeric.imag() != 0.0) os << " + " << main_report.numeric.imag() << "i";
    os << "\n";
    os << "rel error: " << main_report.rel_error << (main_report.used_fallback ? " (fallback)" : "")
       << "\n";
    if (closed) {
      os << "closed form (" << closed_name << ") rel error: " << closed->rel_error << "\n";
    }
    os << (ok ? "OK" : "FAILED") << "\n";
    write_output(out_file, os.str());
  }
  return ok ? kExitOk : kExitVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact generating functions for weighted directed paths in a strip"};
  app.require_subcommand(1);

  std::string format_str = "plain";
  std::string out_file;
  app.add_option("--format", format_str, "output format")
      ->check(CLI::IsMember({"plain", "latex", "json"}))
      ->capture_default_str();
  app.add_option("--out", out_file, "write primary output to FILE");

  ProblemOptions gf_opts;
  std::string route = "all";
  CLI::App* gf_cmd = app.add_subcommand("gf", "compute the generating function");
  gf_cmd->fallthrough();
  add_problem_options(gf_cmd, gf_opts, true);
  gf_cmd->add_option("--route", route, "route to evaluate")
      ->check(CLI::IsMember({"skew", "schur-sum", "transfer", "all"}))
      ->capture_default_str();

  ProblemOptions series_opts;
  int series_n = 10;
  CLI::App* series_cmd = app.add_subcommand("series", "Taylor coefficients of the GF");
  series_cmd->fallthrough();
  add_problem_options(series_cmd, series_opts, true);
  series_cmd->add_option("--n", series_n, "highest power of t")->capture_default_str();

  int expand_w = 0, expand_alpha = 0, expand_beta = 0, expand_u = 0, expand_v = 0;
  CLI::App* expand_cmd =
      app.add_subcommand("expand", "horizontal-strip expansion of the skew shape");
  expand_cmd->fallthrough();
  expand_cmd->add_option("--w", expand_w, "strip width")->required();
  expand_cmd->add_option("--alpha", expand_alpha, "maximal up-step height")->required();
  expand_cmd->add_option("--beta", expand_beta, "maximal down-step height")->required();
  expand_cmd->add_option("--u", expand_u, "start height")->required();
  expand_cmd->add_option("--v", expand_v, "end height")->required();

  ProblemOptions roots_opts;
  std::string roots_t;
  CLI::App* roots_cmd = app.add_subcommand("roots", "numeric kernel roots at a given t");
  roots_cmd->fallthrough();
  add_problem_options(roots_cmd, roots_opts, false);
  roots_cmd->add_option("--t", roots_t, "evaluation point (rational)")->required();

  ProblemOptions validate_opts;
  std::string validate_t = "1/10";
  CLI::App* validate_cmd =
      app.add_subcommand("validate", "root-based numeric check of the exact GF");
  validate_cmd->fallthrough();
  add_problem_options(validate_cmd, validate_opts, true);
  validate_cmd->add_option("--t", validate_t, "evaluation point (rational)")
      ->capture_default_str();

  slit::SweepConfig sweep;
  std::string weights_mode = "unit";
  std::uint64_t seed = 0;
  bool seed_given = false;
  CLI::App* verify_cmd = app.add_subcommand("verify", "cross-validation sweep");
  verify_cmd->fallthrough();
  verify_cmd->add_option("--max-alpha", sweep.max_alpha)->capture_default_str();
  verify_cmd->add_option("--max-beta", sweep.max_beta)->capture_default_str();
  verify_cmd->add_option("--max-w", sweep.max_w)->capture_default_str();
  verify_cmd->add_option("--weights", weights_mode, "unit or random")
      ->check(CLI::IsMember({"unit", "random"}))
      ->capture_default_str();
  verify_cmd->add_option("--sets", sweep.random_sets, "number of random weight sets")
      ->capture_default_str();
  verify_cmd
      ->add_option("--seed", [&seed, &seed_given](const std::vector<std::string>& vals) {
        seed = std::stoull(vals.front());
        seed_given = true;
        return true;
      }, "sweep seed (required with --weights random)")
      ->expected(1);
  verify_cmd->add_flag("--inject-fault", sweep.inject_fault)->group("");  // test hook

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInputError;
  }

  try {
    const OutputFormat fmt = slit::parse_output_format(format_str);
    if (gf_cmd->parsed()) return run_gf(gf_opts, route, fmt, out_file);
    if (series_cmd->parsed()) return run_series(series_opts, series_n, fmt, out_file);
    if (expand_cmd->parsed()) {
      return run_expand(expand_w, expand_alpha, expand_beta, expand_u, expand_v, fmt, out_file);
    }
    if (roots_cmd->parsed()) return run_roots(roots_opts, roots_t, fmt, out_file);
    if (validate_cmd->parsed()) return run_validate(validate_opts, validate_t, fmt, out_file);
    if (verify_cmd->parsed()) {
      sweep.random_weights = (weights_mode == "random");
      if (sweep.random_weights && !seed_given) {
        std::cerr << "error: --weights random requires --seed\n";
        return kExitInputError;
      }
      sweep.seed = seed;
      const slit::SweepReport report = slit::run_verification_sweep(sweep);
      std::cout << slit::sweep_summary(report);
      if (!out_file.empty()) {
        std::ofstream out(out_file);
        if (!out) {
          std::cerr << "error: cannot write to '" << out_file << "'\n";
          return kExitInputError;
        }
        out << sweep_report_to_json(report).dump(2) << "\n";
      }
      return report.ok() ? kExitOk : kExitVerificationFailure;
    }
  } catch (const slit::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
