#include <doctest.h>

#include <cmath>
#include <vector>

#include "oracles.hpp"
#include "tractlab/errors.hpp"
#include "tractlab/hypmetric.hpp"
#include "tractlab/maps.hpp"

using namespace tractlab;

TEST_CASE("half-plane density") {
  CHECK(rho_half_plane(0.0, {1.0, 0.0}) == 1.0);
  CHECK(rho_half_plane(0.0, {2.0, 5.0}) == 0.5);
  CHECK(rho_half_plane(2.0, {3.0, 0.0}) == 1.0);
  CHECK_THROWS_AS(rho_half_plane(0.0, {0.0, 1.0}), RangeError);
}

TEST_CASE("half-plane distance") {
  CHECK(dist_half_plane(0.0, {1.0, 0.0}, {2.0, 0.0}) == doctest::Approx(std::log(2.0)).epsilon(1e-15));
  CHECK(dist_half_plane(0.0, {5.0, 3.0}, {5.0, 3.0}) == 0.0);
  const double d12 = dist_half_plane(0.0, {1.0, 0.0}, {2.0, 0.0});
  const double d24 = dist_half_plane(0.0, {2.0, 0.0}, {4.0, 0.0});
  const double d14 = dist_half_plane(0.0, {1.0, 0.0}, {4.0, 0.0});
  CHECK(d14 == doctest::Approx(std::log(4.0)).epsilon(1e-15));
  CHECK(d12 + d24 == doctest::Approx(d14).epsilon(1e-15));
  CHECK_THROWS_AS(dist_half_plane(0.0, {-1.0, 0.0}, {1.0, 0.0}), RangeError);
}

TEST_CASE("standard estimate") {
  const DensityBound b1 = standard_estimate_bound(1.0);
  CHECK(b1.lower == 0.5);
  CHECK(b1.upper == 2.0);
  CHECK(b1.lower_needs_simple_connectivity);
  const DensityBound b2 = standard_estimate_bound(2.0);
  CHECK(b2.lower == 0.25);
  CHECK(b2.upper == 1.0);
  CHECK(standard_estimate_bound(3.0).contains(rho_half_plane(1.0, {4.0, 7.0})));
  CHECK_THROWS_AS(standard_estimate_bound(0.0), RangeError);
  CHECK(inscribed_disk_bound(2.0).lower == 0.0);
}

TEST_CASE("two-puncture bound") {
  CHECK(two_puncture_upper(0.0, 4.0, 2.0) == doctest::Approx(oracle::kTwoOnePlusLn2).epsilon(1e-15));
  const double big = two_puncture_upper(0.0, 1.0, 1e6);
  CHECK(big > 1e6 * std::log(1e6));
  CHECK(std::abs(two_puncture_upper(0.0, 4.0, {2.0, 0.0}) - two_puncture_upper(0.0, 4.0, {2.0, 0.001})) < 0.01);
  CHECK(two_puncture_upper(4.0, 0.0, 3.0) == two_puncture_upper(0.0, 4.0, 3.0) * 1.0);
  CHECK_THROWS_AS(two_puncture_upper(1.0, 1.0, 3.0), RangeError);
  CHECK_THROWS_AS(two_puncture_upper(0.0, 1.0, 1.0), RangeError);
}

TEST_CASE("punctured sequence bound") {
  std::vector<Complex> w;
  for (int j = 1; j <= 30; ++j) w.emplace_back(std::ldexp(1.0, j), 0.0);
  const PuncturedSequenceBound at3 = punctured_sequence_upper(w, 2.0, 3.0);
  CHECK(at3.value == doctest::Approx(oracle::kOnePlusLn2).epsilon(1e-15));
  CHECK(at3.selection_case == 3);
  CHECK(at3.a == Complex(2.0, 0.0));
  CHECK(at3.b == Complex(0.0, 0.0));
  CHECK(punctured_sequence_upper(w, 2.0, 1000.0).value <= (1.0 + std::log(6.0)) * 1000.0);
  CHECK_THROWS_AS(punctured_sequence_upper(w, 2.0, 8.0), RangeError);
  const std::vector<Complex> bad{{2.0, 0.0}, {100.0, 0.0}};
  CHECK_THROWS_AS(punctured_sequence_upper(bad, 2.0, 5.0), RangeError);
}

TEST_CASE("hyperbolic derivative") {
  const auto F = LogLiftModel::shifted_exp(10.0);
  CHECK(hyperbolic_derivative(F, {3.0, 0.0}) == doctest::Approx(oracle::kHypDerivAt3).epsilon(1e-14));
  // Not monotone near the boundary (5.97 at 3, 5.36 at 5); grows like x further out.
  double prev = 0.0;
  for (double x : {5.0, 10.0, 20.0, 40.0}) {
    const double v = hyperbolic_derivative(F, {x, 0.0});
    CHECK(v > prev);
    CHECK(v == doctest::Approx(x).epsilon(0.05 + 10.0 * std::exp(-x)));
    prev = v;
  }
  CHECK(hyperbolic_derivative(F, {4.0, 0.7}) == hyperbolic_derivative(F, {4.0, -0.7}));
}

TEST_CASE("disk-exterior density") {
  CHECK(rho_disk_exterior(1.0, {std::exp(1.0), 0.0}) == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
  CHECK(1.0 / inverse_rho_disk_exterior_from_log(1.0, 1.0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
}
