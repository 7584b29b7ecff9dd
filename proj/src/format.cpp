#include "slit/format.hpp"

#include <fstream>
#include <sstream>

namespace slit {

OutputFormat parse_output_format(const std::string& s) {
  if (s == "plain") return OutputFormat::plain;
  if (s == "latex") return OutputFormat::latex;
  if (s == "json") return OutputFormat::json;
  throw ParseError("unknown format '" + s + "' (expected plain, latex or json)");
}

ClearedFraction integer_cleared(const RationalFunction& f) {
  BigInt den_lcm(1);
  BigInt num_gcd(0);
  auto visit = [&](const Polynomial& p) {
    for (const auto& c : p.coefficients()) {
      if (c.is_zero()) continue;
      den_lcm = int_lcm(den_lcm, c.denominator());
    }
  };
  visit(f.numerator());
  visit(f.denominator());
  auto collect = [&](const Polynomial& p) {
    for (const auto& c : p.coefficients()) {
      if (c.is_zero()) continue;
      num_gcd = int_gcd(num_gcd, c.numerator() * (den_lcm / c.denominator()));
    }
  };
  collect(f.numerator());
  collect(f.denominator());
  if (num_gcd.is_zero()) num_gcd = 1;  // f == 0
  BigRational scale(den_lcm, num_gcd);
  for (const auto& c : f.denominator().coefficients()) {
    if (!c.is_zero()) {
      if ((c * scale).sign() < 0) scale = -scale;
      break;
    }
  }
  return ClearedFraction{f.numerator().scaled(scale), f.denominator().scaled(scale)};
}

std::string format_polynomial(const Polynomial& p, OutputFormat fmt) {
  if (fmt == OutputFormat::plain || fmt == OutputFormat::json) {
    return p.str();
  }
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  const auto& coeffs = p.coefficients();
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const BigRational& c = coeffs[k];
    if (c.is_zero()) continue;
    const bool neg = c.sign() < 0;
    const BigRational mag = neg ? -c : c;
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    const bool unit = mag == BigRational(1);
    const bool integral = mag.denominator() == 1;
    if (k == 0) {
      os << (integral ? mag.str() : "\\tfrac{" + mag.numerator().str() + "}{" + mag.denominator().str() + "}");
    } else {
      if (!unit) {
        os << (integral ? mag.str() : "\\tfrac{" + mag.numerator().str() + "}{" + mag.denominator().str() + "}");
      }
      os << "t";
      if (k > 1) os << "^{" << k << "}";
    }
  }
  return os.str();
}

std::string format_rational_function(const RationalFunction& f, OutputFormat fmt) {
  const ClearedFraction cleared = integer_cleared(f);
  if (fmt == OutputFormat::latex) {
    return "\\frac{" + format_polynomial(cleared.num, fmt) + "}{" +
           format_polynomial(cleared.den, fmt) + "}";
  }
  return "(" + format_polynomial(cleared.num, OutputFormat::plain) + ")/(" +
         format_polynomial(cleared.den, OutputFormat::plain) + ")";
}

nlohmann::json rational_function_to_json(const RationalFunction& f) {
  const ClearedFraction cleared = integer_cleared(f);
  auto coeff_strings = [](const Polynomial& p) {
    std::vector<std::string> out;
    if (p.is_zero()) {
      out.push_back("0");
      return out;
    }
    for (const auto& c : p.coefficients()) {
      out.push_back(c.str());
    }
    return out;
  };
  return nlohmann::json{{"numerator", coeff_strings(cleared.num)},
                        {"denominator", coeff_strings(cleared.den)}};
}

std::string format_partition(const Partition& p, OutputFormat fmt) {
  const std::size_t n = p.nonzero_length();
  std::ostringstream os;
  os << "(";
  if (fmt == OutputFormat::latex) {
    std::size_t i = 0;
    bool first = true;
    while (i < n) {
      std::size_t run = 1;
      while (i + run < n && p.part(i + run) == p.part(i)) ++run;
      if (!first) os << ",";
      os << p.part(i);
      if (run > 1) os << "^{" << run << "}";
      first = false;
      i += run;
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      if (i > 0) os << ",";
      os << p.part(i);
    }
  }
  os << ")";
  return os.str();
}

std::string format_skew_shape(const SkewShape& s, OutputFormat fmt) {
  return format_partition(s.outer(), fmt) + "/" + format_partition(s.inner(), fmt);
}

nlohmann::json problem_to_json(const SlitProblem& prob) {
  std::vector<std::string> p, q;
  for (const auto& x : prob.steps.p_weights()) p.push_back(x.str());
  for (const auto& x : prob.steps.q_weights()) q.push_back(x.str());
  return nlohmann::json{{"alpha", prob.steps.alpha()}, {"beta", prob.steps.beta()},
                        {"w", prob.w},                 {"u", prob.u},
                        {"v", prob.v},                 {"p", p},
                        {"q", q}};
}

SlitProblem problem_from_json(const nlohmann::json& j_in) {
  const nlohmann::json& j = j_in.contains("problem") ? j_in.at("problem") : j_in;
  try {
    const int alpha = j.at("alpha").get<int>();
    const int beta = j.at("beta").get<int>();
    const int w = j.at("w").get<int>();
    const int u = j.at("u").get<int>();
    const int v = j.at("v").get<int>();
    std::vector<BigRational> p, q;
    for (const auto& s : j.at("p")) p.push_back(BigRational::parse(s.get<std::string>()));
    for (const auto& s : j.at("q")) q.push_back(BigRational::parse(s.get<std::string>()));
    if (static_cast<int>(p.size()) != alpha + 1) {
      throw ParseError("p must list alpha + 1 weights (p_0..p_alpha)");
    }
    if (static_cast<int>(q.size()) != beta) {
      throw ParseError("q must list beta weights (q_1..q_beta)");
    }
    return SlitProblem(WeightedStepSet(std::move(p), std::move(q)), w, u, v);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed problem JSON: ") + e.what());
  }
}

SlitProblem load_problem_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open problem file '" + path + "'");
  }
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON in '") + path + "': " + e.what());
  }
  return problem_from_json(j);
}

}  // namespace slit
