#include <doctest.h>

#include <random>

#include "slit/oracle.hpp"
#include "slit/schur_gf.hpp"
#include "slit/verify.hpp"
#include "test_helpers.hpp"

using namespace slit;
using namespace slit::testing;

TEST_SUITE("path counting") {
  TEST_CASE("empty paths") {
    const WeightedStepSet steps = WeightedStepSet::unit_motzkin();
    CHECK(dp_count(steps, 3, 2, 2, 0) == rat(1));
    CHECK(dp_count(steps, 3, 2, 1, 0) == rat(0));
  }

  TEST_CASE("width-2 Dyck strip, four steps") {
    // Of the Catalan paths UUDD and UDUD both fit below height 2.
    CHECK(dp_count(WeightedStepSet::unit_dyck(), 2, 0, 0, 4) == rat(2));
  }

  TEST_CASE("weighted paths multiply step weights") {
    // Motzkin with all weights 1/2: HH and UD each contribute 1/4 at n = 2.
    const WeightedStepSet half({rat(1, 2), rat(1, 2)}, {rat(1, 2)});
    CHECK(dp_count(half, 1, 0, 0, 2) == rat(1, 2));
  }

  TEST_CASE("validation") {
    const WeightedStepSet steps = WeightedStepSet::unit_dyck();
    CHECK_THROWS_AS(dp_count(steps, 0, 0, 0, 1), DomainError);
    CHECK_THROWS_AS(dp_count(steps, 2, 3, 0, 1), DomainError);
    CHECK_THROWS_AS(dp_count(steps, 2, 0, 0, -1), DomainError);
  }

  TEST_CASE("scaling every weight by c scales n-step counts by c^n") {
    std::mt19937_64 rng(163);
    for (int trial = 0; trial < 10; ++trial) {
      const WeightedStepSet steps = seeded_weight_sets(2, 2, 777, 1)[1];
      const BigRational c = random_nonzero_rational(rng, 4);
      std::vector<BigRational> p, q;
      for (const auto& x : steps.p_weights()) p.push_back(x * c);
      for (const auto& x : steps.q_weights()) q.push_back(x * c);
      const WeightedStepSet scaled(std::move(p), std::move(q));
      BigRational cn(1);
      for (int n = 0; n <= 8; ++n) {
        CHECK(dp_count(scaled, 3, 1, 2, n) == cn * dp_count(steps, 3, 1, 2, n));
        cn *= c;
      }
    }
  }

  TEST_CASE("reflection symmetry at path level") {
    for (const auto& steps : seeded_weight_sets(2, 1, 31337, 2)) {
      const WeightedStepSet mirrored = steps.reflected();
      const int w = 4;
      for (int u = 0; u <= w; ++u) {
        for (int v = 0; v <= w; ++v) {
          for (int n = 0; n <= 15; ++n) {
            CHECK(dp_count(steps, w, u, v, n) == dp_count(mirrored, w, w - u, w - v, n));
          }
        }
      }
    }
  }
}

TEST_SUITE("transfer matrix") {
  TEST_CASE("width-1 Motzkin strip by hand") {
    // T is the all-ones 2x2 matrix; (I - tT)^{-1}_{00} = (1-t)/(1-2t).
    CHECK(transfer_gf(SlitProblem(WeightedStepSet::unit_motzkin(), 1, 0, 0)).value ==
          rf({1, -1}, {1, -2}));
    CHECK(transfer_gf(SlitProblem(WeightedStepSet::unit_motzkin(), 1, 0, 1)).value ==
          rf({0, 1}, {1, -2}));
  }

  TEST_CASE("width-1 Dyck strip alternates") {
    CHECK(transfer_gf(SlitProblem(WeightedStepSet::unit_dyck(), 1, 0, 1)).value ==
          rf({0, 1}, {1, 0, -1}));
  }

  TEST_CASE("matrix layout") {
    const FieldMatrix T = transfer_matrix(WeightedStepSet::unit(2, 1), 3);
    CHECK(T.at(0, 2) == RationalFunction::one());   // up two
    CHECK(T.at(0, 3).is_zero());                    // too high
    CHECK(T.at(2, 1) == RationalFunction::one());   // down one
    CHECK(T.at(3, 1).is_zero());                    // down two not allowed
    CHECK(T.at(1, 1) == RationalFunction::one());   // horizontal
  }

  TEST_CASE("series agrees with direct path counts") {
    for (const auto& steps : seeded_weight_sets(1, 2, 555, 2)) {
      for (int w = 1; w <= 3; ++w) {
        for (int u = 0; u <= w; ++u) {
          for (int v = 0; v <= w; ++v) {
            const auto series =
                series_coefficients(transfer_gf(SlitProblem(steps, w, u, v)).value, 12);
            const auto counts = dp_series(steps, w, u, v, 12);
            CHECK(series == counts);
          }
        }
      }
    }
  }
}

TEST_SUITE("unconstrained limits") {
  TEST_CASE("deep strips reproduce the classical sequences") {
    CHECK(motzkin_limit_check(6));
    const auto motzkin =
        dp_series(WeightedStepSet::unit_motzkin(), 6, 0, 0, 6);
    CHECK(motzkin == std::vector<BigRational>{rat(1), rat(1), rat(2), rat(4), rat(9), rat(21),
                                              rat(51)});

    CHECK(depth_limited_series_check(WeightedStepSet::unit_dyck(), 8));
    const auto dyck = dp_series(WeightedStepSet::unit_dyck(), 8, 0, 0, 8);
    CHECK(dyck == std::vector<BigRational>{rat(1), rat(0), rat(1), rat(0), rat(2), rat(0),
                                           rat(5), rat(0), rat(14)});
  }

  TEST_CASE("degenerate depth") {
    CHECK(motzkin_limit_check(0));
    CHECK_THROWS_AS(motzkin_limit_check(13), DomainError);
  }
}
