#include <doctest.h>

#include <complex>
#include <random>

#include "slit/kernel_roots.hpp"
#include "slit/step_set.hpp"
#include "test_helpers.hpp"

using namespace slit;
using namespace slit::testing;

namespace {

WeightedStepSet random_steps(std::mt19937_64& rng, int alpha, int beta) {
  std::vector<BigRational> p, q;
  p.push_back(random_rational(rng, 3));  // horizontal weight may be zero
  for (int a = 1; a < alpha; ++a) p.push_back(random_rational(rng, 3));
  p.push_back(random_nonzero_rational(rng, 3));
  for (int b = 1; b < beta; ++b) q.push_back(random_rational(rng, 3));
  q.push_back(random_nonzero_rational(rng, 3));
  return WeightedStepSet(std::move(p), std::move(q));
}

}  // namespace

TEST_SUITE("step sets") {
  TEST_CASE("validation") {
    CHECK_THROWS_AS(WeightedStepSet({rat(1)}, {rat(1)}), DomainError);        // alpha = 0
    CHECK_THROWS_AS(WeightedStepSet({rat(1), rat(1)}, {}), DomainError);      // beta = 0
    CHECK_THROWS_AS(WeightedStepSet({rat(1), rat(0)}, {rat(1)}), DomainError);
    CHECK_THROWS_AS(WeightedStepSet({rat(1), rat(1)}, {rat(0)}), DomainError);
    const WeightedStepSet dyck = WeightedStepSet::unit_dyck();
    CHECK(dyck.alpha() == 1);
    CHECK(dyck.beta() == 1);
    CHECK(dyck.p(0).is_zero());
  }

  TEST_CASE("problem validation") {
    const WeightedStepSet steps = WeightedStepSet::unit_motzkin();
    CHECK_THROWS_AS(SlitProblem(steps, 0, 0, 0), DomainError);
    CHECK_THROWS_AS(SlitProblem(steps, 2, 3, 0), DomainError);
    CHECK_THROWS_AS(SlitProblem(steps, 2, 0, -1), DomainError);
  }
}

TEST_SUITE("kernel coefficients") {
  TEST_CASE("Motzkin and Dyck") {
    const KernelCoefficients motzkin = kernel_coefficients(WeightedStepSet::unit_motzkin());
    CHECK(motzkin.at_power(-1) == poly({0, -1}));  // -t
    CHECK(motzkin.at_power(0) == poly({1, -1}));   // 1 - t
    CHECK(motzkin.at_power(1) == poly({0, -1}));

    const KernelCoefficients dyck = kernel_coefficients(WeightedStepSet::unit_dyck());
    CHECK(dyck.at_power(0) == poly({1}));  // horizontal weight zero
    CHECK(dyck.at_power(1) == poly({0, -1}));
    CHECK(dyck.at_power(-1) == poly({0, -1}));
  }

  TEST_CASE("zero interior weights leave three nonzero coefficients") {
    const WeightedStepSet steps({rat(0), rat(0), rat(1)}, {rat(0), rat(0), rat(1)});
    const KernelCoefficients k = kernel_coefficients(steps);
    int nonzero = 0;
    for (int z = -steps.beta(); z <= steps.alpha(); ++z) {
      if (!k.at_power(z).is_zero()) ++nonzero;
    }
    CHECK(nonzero == 3);  // the constant 1, -t*p_alpha, -t*q_beta
  }
}

TEST_SUITE("e-values") {
  TEST_CASE("height-one case matches the quadratic coefficients") {
    // z^2 - (1/t - p0)/p1 z + q1/p1 = 0 has Vieta coefficients e_1, e_2.
    const WeightedStepSet steps({rat(2, 3), rat(5)}, {rat(7, 2)});
    const EValues e = e_values(steps);
    CHECK(e.at(0) == RationalFunction::one());
    CHECK(e.at(1) == RationalFunction(poly({1, 0}) - poly({0, 1}) * Polynomial::constant(rat(2, 3)),
                                      poly({0, 5})));
    CHECK(e.at(2) == RationalFunction::constant(rat(7, 2) / rat(5)));
  }

  TEST_CASE("alpha=2 beta=1 unit weights") {
    const EValues e = e_values(WeightedStepSet::unit(2, 1));
    CHECK(e.at(0) == RationalFunction::one());
    CHECK(e.at(1) == RationalFunction::constant(rat(-1)));
    CHECK(e.at(2) == -RationalFunction(poly({1, -1}), poly({0, 1})));  // -(1-t)/t
    CHECK(e.at(3) == RationalFunction::constant(rat(-1)));
    CHECK(e.at(4).is_zero());
    CHECK(e.at(-1).is_zero());
  }

  TEST_CASE("top value is a nonzero constant") {
    std::mt19937_64 rng(113);
    for (int i = 0; i < 30; ++i) {
      const int alpha = 1 + static_cast<int>(rng() % 4);
      const int beta = 1 + static_cast<int>(rng() % 4);
      const WeightedStepSet steps = random_steps(rng, alpha, beta);
      const EValues e = e_values(steps);
      CHECK(e.at(0) == RationalFunction::one());
      CHECK_FALSE(e.at(alpha + beta).is_zero());
      CHECK(e.at(alpha + beta).denominator().is_one());
      CHECK(e.at(alpha + beta).numerator().degree() == 0);
    }
  }

  TEST_CASE("round trip: e-values rebuild the kernel exactly") {
    std::mt19937_64 rng(127);
    for (int i = 0; i < 100; ++i) {
      const int alpha = 1 + static_cast<int>(rng() % 4);
      const int beta = 1 + static_cast<int>(rng() % 4);
      const WeightedStepSet steps = random_steps(rng, alpha, beta);
      CHECK(kernel_from_e_values(steps, e_values(steps)) == kernel_coefficients(steps));
    }
  }
}

TEST_SUITE("kernel symmetry") {
  TEST_CASE("up/down exchange identity") {
    CHECK(kernel_symmetry_check(WeightedStepSet::unit(2, 1)));

    std::mt19937_64 rng(131);
    for (int i = 0; i < 20; ++i) {
      std::vector<BigRational> p{random_rational(rng), random_nonzero_rational(rng),
                                 random_nonzero_rational(rng)};
      std::vector<BigRational> q{random_nonzero_rational(rng)};
      CHECK(kernel_symmetry_check(WeightedStepSet(std::move(p), std::move(q))));
    }
  }

  TEST_CASE("mislabeled swap is detected") {
    // Swapping the down-step weights in the wrong order must break the
    // coefficient match unless the weights happen to coincide.
    const WeightedStepSet steps({rat(1), rat(2), rat(3)}, {rat(5)});
    const WeightedStepSet mislabeled({rat(1), rat(5)}, {rat(3), rat(2)});  // q order flipped
    const KernelCoefficients original = kernel_coefficients(steps);
    const KernelCoefficients wrong = kernel_coefficients(mislabeled);
    bool all_match = true;
    for (int z = -1; z <= 2; ++z) {
      if (original.at_power(z) != wrong.at_power(-z)) all_match = false;
    }
    CHECK_FALSE(all_match);
  }

  TEST_CASE("wrong shape is rejected") {
    CHECK_THROWS_AS(kernel_symmetry_check(WeightedStepSet::unit_motzkin()), DomainError);
  }
}

TEST_SUITE("numeric kernel roots") {
  TEST_CASE("Motzkin at t=1/4: roots of z^2 - 3z + 1") {
    const auto roots = numeric_kernel_roots(WeightedStepSet::unit_motzkin(), rat(1, 4));
    REQUIRE(roots.size() == 2);
    const double golden = (3.0 + std::sqrt(5.0)) / 2.0;
    CHECK(std::abs(roots[0] - std::complex<double>(golden, 0.0)) < 1e-8);
    CHECK(std::abs(roots[1] - std::complex<double>(3.0 - golden, 0.0)) < 1e-8);
  }

  TEST_CASE("Dyck at t=1/2: double root at 1") {
    const auto roots = numeric_kernel_roots(WeightedStepSet::unit_dyck(), rat(1, 2));
    REQUIRE(roots.size() == 2);
    for (const auto& z : roots) {
      CHECK(std::abs(z - std::complex<double>(1.0, 0.0)) < 1e-4);
    }
  }

  TEST_CASE("t = 0 is rejected") {
    CHECK_THROWS_AS(numeric_kernel_roots(WeightedStepSet::unit_dyck(), rat(0)), DomainError);
  }

  TEST_CASE("symmetric functions of the roots match the e-values") {
    std::mt19937_64 rng(139);
    int done = 0;
    while (done < 40) {
      const int alpha = 1 + static_cast<int>(rng() % 3);
      const int beta = 1 + static_cast<int>(rng() % 3);
      const WeightedStepSet steps = random_steps(rng, alpha, beta);
      const BigRational t0(BigInt(1), BigInt(3 + static_cast<long>(rng() % 8)));
      std::vector<std::complex<double>> roots;
      try {
        roots = numeric_kernel_roots(steps, t0);
      } catch (const NumericFailure&) {
        continue;  // pathological weight draw
      }
      // Skip near-coincident configurations; Vieta sums lose accuracy there.
      bool separated = true;
      for (std::size_t i = 0; i < roots.size(); ++i) {
        for (std::size_t j = i + 1; j < roots.size(); ++j) {
          if (std::abs(roots[i] - roots[j]) < 1e-6) separated = false;
        }
      }
      if (!separated) continue;
      ++done;

      const EValues e = e_values(steps);
      std::complex<double> sum(0, 0), pairs(0, 0), product(1, 0);
      for (std::size_t i = 0; i < roots.size(); ++i) {
        sum += roots[i];
        product *= roots[i];
        for (std::size_t j = i + 1; j < roots.size(); ++j) pairs += roots[i] * roots[j];
      }
      auto expect = [&](int k, std::complex<double> got) {
        const double want = e.at(k).evaluate(t0).to_double();
        CHECK(std::abs(got - std::complex<double>(want, 0.0)) <=
              1e-8 * std::max(1.0, std::abs(want)));
      };
      expect(1, sum);
      if (alpha + beta >= 2) expect(2, pairs);
      expect(alpha + beta, product);
    }
  }
}
