#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "tractlab/errors.hpp"
#include "tractlab/maps.hpp"
#include "tractlab/tracts.hpp"

using namespace tractlab;

TEST_CASE("domain_contains") {
  const auto F = LogLiftModel::shifted_exp(10.0);
  CHECK(domain_contains(F, {3.0, 0.0}));
  CHECK_FALSE(domain_contains(F, {3.0, kPi}));
  CHECK_FALSE(domain_contains(F, {1.0, 0.0}));
  CHECK(domain_contains(F, {900.0, 0.3}));  // beyond the guard: decided by the sign of cos(Im z)
  CHECK_FALSE(domain_contains(F, {900.0, 2.0}));
}

TEST_CASE("tract_of") {
  const auto F = LogLiftModel::shifted_exp(10.0);
  CHECK(tract_of(F, {3.0, 0.1}) == TractAddress{0, 0});
  CHECK(tract_of(F, {3.0, kTwoPi + 0.1}) == TractAddress{1, 0});
  CHECK(tract_of(F, {3.0, -2.0 * kTwoPi}) == TractAddress{-2, 0});
  CHECK_THROWS_AS(tract_of(F, {1.0, 0.0}), DomainError);
  const auto f3 = LogLiftModel::lifted_entire(EntireMapSpec::sinh({0.575, 0.0}));
  CHECK(tract_of(f3, {5.0, 0.0}).inner_branch == 0);
  CHECK(tract_of(f3, {5.0, kPi}).inner_branch == 1);
}

TEST_CASE("inverse_branch") {
  const auto F = LogLiftModel::shifted_exp(10.0);
  CHECK(inverse_branch(F, {0, 0}, {10.0, 0.0}).real() == doctest::Approx(oracle::kLn20).epsilon(1e-15));
  CHECK(inverse_branch(F, {0, 0}, {10.0, 0.0}).imag() == 0.0);
  CHECK(std::abs(inverse_branch(F, {0, 0}, eval_F(F, {3.0, 0.0})) - 3.0) < 1e-14);
  const Complex k2 = inverse_branch(F, {2, 0}, {10.0, 0.0});
  CHECK(k2 == Complex(inverse_branch(F, {0, 0}, {10.0, 0.0}).real(), 2.0 * kTwoPi));
  CHECK_THROWS_AS(inverse_branch(F, {0, 0}, {-0.5, 0.0}), RangeError);
  CHECK_THROWS_AS(inverse_branch(F, {0, 0}, {0.0, 1.0}), RangeError);
}

TEST_CASE("inverse_branch on lifted models") {
  for (const auto& map : {EntireMapSpec::lambda_expm1({0.5, 0.0}), EntireMapSpec::zexp(),
                          EntireMapSpec::sinh({0.575, 0.0}), EntireMapSpec::exp_plus_kappa({1.0038, 2.8999})}) {
    const auto F = LogLiftModel::lifted_entire(map);
    const Complex w{F.half_plane_Q() + 3.0, 1.5};
    for (int inner = 0; inner < map.tract_count(); ++inner)
      for (long long k : {-3LL, 0LL, 2LL}) {
        const Complex z = inverse_branch(F, {k, inner}, w);
        CHECK(std::abs(eval_F(F, z) - w) < 1e-10);
        CHECK(tract_of(F, z) == TractAddress{k, inner});
      }
  }
}

TEST_CASE("lift_path") {
  const auto F = LogLiftModel::shifted_exp(10.0);
  SUBCASE("constant path") {
    const LiftedPath lp = lift_path(F, {0, 0}, {{5.0, 1.0}, {5.0, 1.0}});
    REQUIRE(lp.samples.size() == 2);
    CHECK(lp.samples[0] == lp.samples[1]);
    CHECK(std::abs(eval_F(F, lp.samples[0]) - Complex(5.0, 1.0)) < 1e-12);
  }
  SUBCASE("real segment 10 to 20") {
    std::vector<Complex> path;
    for (int i = 0; i <= 50; ++i) path.emplace_back(10.0 + 0.2 * i, 0.0);
    const LiftedPath lp = lift_path(F, {0, 0}, path);
    CHECK(lp.samples.front().real() == doctest::Approx(oracle::kLn20).epsilon(1e-15));
    CHECK(lp.samples.back().real() == doctest::Approx(oracle::kLn30).epsilon(1e-15));
    for (std::size_t i = 1; i < lp.samples.size(); ++i) {
      CHECK(lp.samples[i].real() > lp.samples[i - 1].real());
      CHECK(lp.samples[i].imag() == 0.0);
    }
  }
  SUBCASE("segment winding Im by 2 pi stays in one tract") {
    std::vector<Complex> path;
    for (int i = 0; i <= 100; ++i) path.emplace_back(5.0, kTwoPi * i / 100.0);
    const LiftedPath lp = lift_path(F, {0, 0}, path);
    CHECK(std::abs(lp.samples.back() - inverse_branch(F, {0, 0}, path.back())) < 1e-10);
    for (long long b : lp.branch_log) CHECK(b == 0);
    const std::string csv = lp.to_csv();
    CHECK(csv.rfind("t,source_re,source_im,lift_re,lift_im,branch\n", 0) == 0);
  }
}
