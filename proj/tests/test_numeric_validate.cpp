#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>

#include "slit/kernel_roots.hpp"
#include "slit/numeric_validate.hpp"
#include "slit/oracle.hpp"
#include "slit/schur_gf.hpp"
#include "slit/verify.hpp"
#include "test_helpers.hpp"

using namespace slit;
using namespace slit::testing;

namespace {

using Complex = std::complex<double>;

double rel_diff(Complex a, Complex b) {
  const double scale = std::max({std::abs(a), std::abs(b), 1e-30});
  return std::abs(a - b) / scale;
}

std::vector<Complex> random_separated_roots(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> mag(0.2, 5.0);
  std::uniform_real_distribution<double> arg(0.0, 6.28);
  while (true) {
    std::vector<Complex> roots;
    for (int i = 0; i < n; ++i) roots.push_back(std::polar(mag(rng), arg(rng)));
    bool ok = true;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (std::abs(roots[static_cast<std::size_t>(i)] - roots[static_cast<std::size_t>(j)]) <
            0.05) {
          ok = false;
        }
      }
    }
    if (ok) return roots;
  }
}

Partition random_shape(std::mt19937_64& rng, int max_len, int max_part) {
  std::vector<int> parts;
  const int len = static_cast<int>(rng() % static_cast<unsigned long>(max_len + 1));
  int cur = max_part;
  for (int i = 0; i < len; ++i) {
    cur = static_cast<int>(rng() % static_cast<unsigned long>(cur + 1));
    parts.push_back(cur);
  }
  return Partition(std::move(parts));
}

}  // namespace

TEST_SUITE("numeric Schur values") {
  TEST_CASE("trivial shapes") {
    const std::vector<Complex> roots{{1.3, 0.2}, {-0.4, 0.9}, {2.1, -0.3}};
    CHECK(rel_diff(bialternant_schur(roots, Partition()), Complex(1.0, 0.0)) < 1e-12);
    Complex sum(0, 0);
    for (const auto& z : roots) sum += z;
    CHECK(rel_diff(bialternant_schur(roots, Partition({1})), sum) < 1e-12);
  }

  TEST_CASE("Motzkin roots at t=1/4: two-part shape sums to 8") {
    const auto roots = numeric_kernel_roots(WeightedStepSet::unit_motzkin(), rat(1, 4));
    // h_2 = e_1^2 - e_2 = 9 - 1 at these roots.
    CHECK(rel_diff(bialternant_schur(roots, Partition({2, 0})), Complex(8.0, 0.0)) < 1e-10);
  }

  TEST_CASE("coincident points fall back to the determinant in the e's") {
    const std::vector<Complex> equal{{1.0, 0.0}, {1.0, 0.0}};
    CHECK_THROWS_AS(bialternant_schur(equal, Partition({2, 0})), DegenerateRoots);
    // h_2(1, 1) = 3 by direct monomial expansion.
    CHECK(rel_diff(numeric_jacobi_trudi_schur(equal, Partition({2, 0})), Complex(3.0, 0.0)) <
          1e-12);
    CHECK(rel_diff(numeric_schur(equal, Partition({2, 0})), Complex(3.0, 0.0)) < 1e-12);

    const auto dyck_roots = numeric_kernel_roots(WeightedStepSet::unit_dyck(), rat(1, 2));
    CHECK(rel_diff(numeric_jacobi_trudi_schur(dyck_roots, Partition({2, 0})),
                   Complex(3.0, 0.0)) < 1e-4);
  }

  TEST_CASE("empty skew shape evaluates to 1") {
    const std::vector<Complex> roots{{1.5, 0.0}, {0.5, 0.1}};
    CHECK(rel_diff(numeric_skew_jacobi_trudi_schur(roots, SkewShape(Partition(), Partition())),
                   Complex(1.0, 0.0)) < 1e-12);
  }

  TEST_CASE("bialternant and Jacobi-Trudi agree on random inputs") {
    std::mt19937_64 rng(173);
    int done = 0;
    while (done < 200) {
      const int n = 2 + static_cast<int>(rng() % 4);  // up to 5 points
      const auto roots = random_separated_roots(rng, n);
      Partition lambda = random_shape(rng, n, 6);
      Complex a;
      try {
        a = bialternant_schur(roots, lambda);
      } catch (const DegenerateRoots&) {
        continue;  // conditioning guard fired; the wrapper would fall back
      }
      ++done;
      const Complex b = numeric_jacobi_trudi_schur(roots, lambda);
      CHECK(rel_diff(a, b) < 1e-8);
    }
  }

  TEST_CASE("permutation of the points does not change the value") {
    std::mt19937_64 rng(179);
    int done = 0;
    while (done < 50) {
      auto roots = random_separated_roots(rng, 4);
      const Partition lambda = random_shape(rng, 4, 5);
      Complex before;
      try {
        before = bialternant_schur(roots, lambda);
      } catch (const DegenerateRoots&) {
        continue;
      }
      ++done;
      std::rotate(roots.begin(), roots.begin() + 1, roots.end());
      std::swap(roots[0], roots[2]);
      const Complex after = numeric_schur(roots, lambda);
      CHECK(rel_diff(before, after) < 1e-10);
    }
  }

  TEST_CASE("too many parts for the point count is rejected") {
    const std::vector<Complex> roots{{1.0, 0.0}, {2.0, 0.0}};
    CHECK_THROWS_AS(bialternant_schur(roots, Partition({1, 1, 1})), DomainError);
  }
}

TEST_SUITE("root-based validation") {
  TEST_CASE("width-1 Motzkin excursion at t = 1/10") {
    // Exact side: (1-t)/(1-2t) at 1/10 equals 9/8.
    const SlitProblem prob(WeightedStepSet::unit_motzkin(), 1, 0, 0);
    CHECK(gf_skew_route(prob).value.evaluate(rat(1, 10)) == rat(9, 8));
    const ValidationReport report = validate_root_formula_at(prob, rat(1, 10));
    CHECK(report.exact == doctest::Approx(1.125));
    CHECK(report.rel_error < 1e-9);
  }

  TEST_CASE("width-2 Dyck bridge at t = 1/10") {
    const SlitProblem prob(WeightedStepSet::unit_dyck(), 2, 0, 2);
    CHECK(gf_skew_route(prob).value.evaluate(rat(1, 10)) == rat(1, 98));
    const ValidationReport report = validate_root_formula_at(prob, rat(1, 10));
    CHECK(report.rel_error < 1e-9);
  }

  TEST_CASE("random step sets across the small grid") {
    double worst = 0.0;
    for (const int ab : {12, 21}) {
      const int alpha = ab / 10, beta = ab % 10;
      for (const auto& steps : seeded_weight_sets(alpha, beta, 2024, 2)) {
        for (int w = 1; w <= 4; ++w) {
          for (int u = 0; u <= w; ++u) {
            for (int v = 0; v <= w; ++v) {
              const ValidationReport report =
                  validate_root_formula_at(SlitProblem(steps, w, u, v), rat(1, 10));
              worst = std::max(worst, report.rel_error);
            }
          }
        }
      }
    }
    CHECK(worst < 1e-8);
  }
}

TEST_SUITE("closed forms") {
  TEST_CASE("Motzkin monomial form") {
    const ValidationReport report = validate_closed_form(
        ClosedFormCase::motzkin, SlitProblem(WeightedStepSet::unit_motzkin(), 3, 1, 2),
        rat(1, 10));
    CHECK(report.rel_error < 1e-9);
  }

  TEST_CASE("(1,2) monomial form") {
    const ValidationReport report = validate_closed_form(
        ClosedFormCase::one_two, SlitProblem(WeightedStepSet::unit(1, 2), 2, 0, 0), rat(1, 10));
    CHECK(report.rel_error < 1e-9);
  }

  TEST_CASE("(2,1) monomial form") {
    const ValidationReport report = validate_closed_form(
        ClosedFormCase::two_one, SlitProblem(WeightedStepSet::unit(2, 1), 3, 2, 1), rat(1, 10));
    CHECK(report.rel_error < 1e-9);
  }

  TEST_CASE("mismatched step profile is rejected") {
    CHECK_THROWS_AS(
        validate_closed_form(ClosedFormCase::motzkin,
                             SlitProblem(WeightedStepSet::unit(2, 1), 2, 0, 0), rat(1, 10)),
        DomainError);
  }

  TEST_CASE("the two cubic cases mirror each other under reflection") {
    const WeightedStepSet steps = seeded_weight_sets(2, 1, 99, 1)[1];
    const WeightedStepSet mirrored = steps.reflected();
    const int w = 3;
    for (int u = 0; u <= w; ++u) {
      for (int v = 0; v <= w; ++v) {
        const RationalFunction a = gf_skew_route(SlitProblem(steps, w, u, v)).value;
        const RationalFunction b =
            gf_skew_route(SlitProblem(mirrored, w, w - u, w - v)).value;
        CHECK(a == b);
        for (int n = 0; n <= 10; ++n) {
          CHECK(dp_count(steps, w, u, v, n) == dp_count(mirrored, w, w - u, w - v, n));
        }
      }
    }
  }
}
