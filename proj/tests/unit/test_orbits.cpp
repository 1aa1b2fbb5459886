#include <doctest.h>

#include <cmath>
#include <vector>

#include "oracles.hpp"
#include "tractlab/errors.hpp"
#include "tractlab/orbits.hpp"

using namespace tractlab;

namespace {
const auto F = LogLiftModel::shifted_exp(10.0);
}

TEST_CASE("iterate") {
  SUBCASE("real orbit from 3") {
    const OrbitRecord r = iterate(F, {3.0, 0.0}, 4, 2.0);
    CHECK(r.in_JQ());
    CHECK(r.horizon == 4);
    REQUIRE(r.points.size() >= 3);
    CHECK(r.points[1].real() == doctest::Approx(oracle::kExp3Minus10).epsilon(1e-15));
    CHECK(r.points[2].real() == doctest::Approx(std::exp(oracle::kExp3Minus10) - 10.0).epsilon(1e-13));
    for (std::size_t i = 1; i < r.points.size(); ++i) CHECK(r.points[i].real() > r.points[i - 1].real());
    // The fourth image exceeds double range; the real-ray certificate carries the horizon.
    CHECK(r.real_ray_tail);
  }
  SUBCASE("outside the domain") {
    const OrbitRecord r = iterate(F, {1.0, 0.0}, 1, 2.0);
    CHECK(r.flag == EscapeFlag::left_domain);
    CHECK(r.flag_step == 0);
  }
  SUBCASE("fixed point stays put") {
    const OrbitRecord r = iterate(F, {oracle::kFixedPoint, 0.0}, 50, 2.0);
    CHECK(r.in_JQ());
    // z* repels with |F'| = z* + 10 < 13, so forward iterates drift from it by roundoff times 13^n.
    for (int n = 0; n <= 10; ++n) CHECK(std::abs(r.points[n] - oracle::kFixedPoint) <= 1e-15 * std::pow(13.0, n));
  }
  SUBCASE("complex overflow is flagged") {
    const OrbitRecord r = iterate(F, {3.0, 0.3}, 6, 2.0);
    CHECK_FALSE(r.real_ray_tail);
    CHECK(r.flag != EscapeFlag::stayed_in_JQ);
  }
}

TEST_CASE("external_address") {
  const ExternalAddress a = external_address(F, {3.0, 0.0}, 5);
  REQUIRE(a.entries.size() == 5);
  for (const auto& t : a.entries) CHECK(t == TractAddress{0, 0});
  // F(3+2 pi i) is real only up to roundoff, so its second image already overflows off the ray.
  const ExternalAddress b = external_address(F, {3.0, kTwoPi}, 2);
  CHECK(b.entries[0].branch_index == 1);
  CHECK(b.entries[1].branch_index == 0);
  CHECK_THROWS_AS(external_address(F, {1.0, 0.0}, 2), AddressUndefined);
}

TEST_CASE("expansion_ratios") {
  for (double r : expansion_ratios(F, {3.0, 0.0}, {3.0, 0.0}, 4)) CHECK(r == 1.0);
  // Depth 2: the third image of 3 is beyond double range.
  const auto r = expansion_ratios(F, {3.0, 0.0}, {3.001, 0.0}, 2);
  REQUIRE(r.size() == 3);
  CHECK(r[0] == doctest::Approx(1.0));
  for (std::size_t i = 1; i < r.size(); ++i) {
    CHECK(r[i] >= 1.0);
    CHECK(r[i] > r[i - 1]);
  }
  for (double v : expansion_ratios(F, {3.0, 0.0}, {3.0, 1e-4}, 2)) CHECK(v >= 1.0 - 1e-9);
  CHECK_THROWS_AS(expansion_ratios(F, {3.0, 0.1}, {3.0, kTwoPi + 0.1}, 2), AddressMismatch);
}

TEST_CASE("point_with_address") {
  SUBCASE("all zeros") {
    const std::vector<TractAddress> w{{0, 0}};
    const PeriodicPoint p = point_with_address(F, w, 2.0, 1e-12);
    CHECK(p.z.real() == doctest::Approx(oracle::kFixedPoint).epsilon(1e-14));
    CHECK(std::abs(p.z.imag()) < 1e-15);
    CHECK(p.residual <= 1e-12);
    CHECK(std::abs(p.z - std::log(p.z + 10.0)) < 1e-12);
  }
  SUBCASE("all ones") {
    const std::vector<TractAddress> w{{1, 0}};
    const PeriodicPoint p = point_with_address(F, w, 2.0, 1e-12);
    CHECK(p.z.real() == doctest::Approx(oracle::kBranch1Re).epsilon(1e-14));
    CHECK(p.z.imag() == doctest::Approx(oracle::kBranch1Im).epsilon(1e-14));
    CHECK(std::abs(p.z - std::log(p.z + 10.0) - Complex(0.0, kTwoPi)) < 1e-12);
  }
  SUBCASE("period two") {
    const std::vector<TractAddress> w{{0, 0}, {1, 0}};
    const PeriodicPoint p = point_with_address(F, w, 2.0, 1e-12);
    CHECK(p.z.real() == doctest::Approx(oracle::kCycle01Re).epsilon(1e-14));
    CHECK(p.z.imag() == doctest::Approx(oracle::kCycle01Im).epsilon(1e-13));
    REQUIRE(p.cycle.size() == 2);
    CHECK(p.cycle[1].real() == doctest::Approx(oracle::kCycle01PartnerRe).epsilon(1e-14));
    CHECK(p.cycle[1].imag() == doctest::Approx(oracle::kCycle01PartnerIm).epsilon(1e-14));
    CHECK(p.residual <= 1e-12);
    const ExternalAddress a = external_address(F, p.z, 6);
    for (int i = 0; i < 6; ++i) CHECK(a.entries[i].branch_index == i % 2);
  }
  SUBCASE("cycle dipping below Q") {
    const std::vector<TractAddress> w{{0, 0}};
    CHECK_THROWS_AS(point_with_address(F, w, 2.6, 1e-12), PullbackLeftDomain);
  }
}

TEST_CASE("classify_grid") {
  GridSpec spec;
  spec.window = {-0.7, 0.7, -0.7, 0.7};
  spec.width = spec.height = 32;
  spec.horizon = 1;
  const ClassGrid g = classify_grid(EntireMapSpec::lambda_expm1({2.0, 0.0}), spec);
  CHECK(g.black_count() == 0);

  GridSpec wide;
  wide.width = wide.height = 64;
  CHECK(pixel_center(wide, 0, 0) == -pixel_center(wide, 63, 63));
  const ClassGrid f4 = classify_grid(EntireMapSpec::exp_plus_kappa({1.0038, 2.8999}), wide);
  CHECK(f4.black_count() > 0);
  CHECK(classify_grid(EntireMapSpec::exp_plus_kappa({1.0038, 2.8999}), wide, 3).cells == f4.cells);
  spec.horizon = 0;
  CHECK_THROWS_AS(classify_grid(EntireMapSpec::zexp(), spec), RangeError);
}

TEST_CASE("overflow counts as remaining large") {
  CHECK(classify_point(EntireMapSpec::exp_plus_kappa({0.0, 0.0}), {50.0, 0.0}, 50.0, 30) ==
        PixelClass::overflowed_large);
}
