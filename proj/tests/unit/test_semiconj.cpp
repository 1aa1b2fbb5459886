#include <doctest.h>

#include <cmath>
#include <vector>

#include "oracles.hpp"
#include "tractlab/errors.hpp"
#include "tractlab/samples.hpp"
#include "tractlab/semiconj.hpp"

using namespace tractlab;

namespace {
const HyperbolicSetup& setup() {
  static const HyperbolicSetup s = build_setup();
  return s;
}
double certified_C() {
  static const double C = expansion_certificate(setup(), default_certificate_region(setup())).C_hat;
  return C;
}
}  // namespace

TEST_CASE("build_setup") {
  const HyperbolicSetup& s = setup();
  CHECK(s.M == 5.5);
  CHECK(s.mu == doctest::Approx(oracle::kMu).epsilon(1e-15));
  CHECK(semiconj_mu(5.5) == doctest::Approx(1.2412).epsilon(1e-4));
  CHECK(s.boundary_max_modulus == doctest::Approx(oracle::kMaxOnCircle07).epsilon(1e-6));
  CHECK(s.postsingular_max_modulus < s.r_U);
  CHECK_THROWS_AS(build_setup({0.99, 0.0}, 0.1), SetupInvalid);
  CHECK_THROWS_AS(build_setup({0.5, 0.0}, 0.7, 2.0, 2.0), SetupInvalid);
}

TEST_CASE("theta_level") {
  const HyperbolicSetup& s = setup();
  const Complex z{25.0, 0.0};
  const SemiconjSample one = theta_level(s, z, 1);
  CHECK(one.thetas[1] == z / s.M);
  const SemiconjSample two = theta_level(s, z, 2);
  const Complex target = s.g(z) / s.M;
  CHECK(std::abs(s.f.eval(two.thetas[2]) - target) <= 1e-9 * std::abs(target));
  CHECK(std::abs(s.g(z)) > s.R);
  // g(12) = 0.5(e^{12/5.5} - 1) < R: the orbit leaves {|w| > R} at step 1.
  CHECK_THROWS_AS(theta_level(s, Complex{12.0, 0.0}, 3), HorizonError);
}

TEST_CASE("expansion certificate") {
  const HyperbolicSetup& s = setup();
  const auto region = default_certificate_region(s);
  const ExpansionCertificate c = expansion_certificate(s, region);
  CHECK(c.C_hat > 1.0);
  CHECK(c.counted == region.size());
  CHECK(expansion_lower_bound(s, {20.0, 500.0}, ExpansionMethod::punctured_disk_exact) > 10.0);
  CHECK(expansion_lower_bound(s, {20.0, 0.0}, ExpansionMethod::punctured_disk_exact) > 1.0);
  CHECK(std::isnan(expansion_lower_bound(s, {0.1, 0.0}, ExpansionMethod::punctured_disk_exact)));
  const std::vector<Complex> mixed{{0.1, 0.0}, {20.0, 500.0}};
  const ExpansionCertificate m = expansion_certificate(s, mixed);
  CHECK(m.counted == 1);
  CHECK(m.skipped == 1);
  // The two-puncture pipeline is too lossy to certify expansion for this setup.
  CHECK_THROWS_AS(expansion_certificate(s, region, ExpansionMethod::two_puncture), CertificateFailed);
  CHECK_THROWS_AS(semiconj_depth(s.mu, 1.0, 1e-6), CertificateMissing);
}

TEST_CASE("semiconjugacy limit on escaping orbits") {
  const HyperbolicSetup& s = setup();
  const double C = certified_C();
  const int k = semiconj_depth(s.mu, C, 1e-6);
  CHECK(s.mu / std::pow(C, k) <= 1e-6);
  for (long long b0 : {1LL, 4LL}) {
    const auto orbit = escaping_g_orbit(s, b0, 1, k + 1);
    const SemiconjSample a = semiconj_limit(s, orbit, 1e-6, C);
    const SemiconjSample b = semiconj_limit(s, std::span<const Complex>(orbit).subspan(1), 1e-6, C);
    CHECK(std::abs(s.f.eval(a.theta) - b.theta) <= 1e-6 * (1.0 + std::abs(b.theta)));
    for (std::size_t j = 2; j + 1 < a.increments.size(); ++j)
      if (a.increments[j] > 1e-12 * std::abs(a.theta)) CHECK(a.increments[j + 1] / a.increments[j] <= 1.0 / C + 0.05);
    CHECK(a.displacement_bound == doctest::Approx(s.mu * C / (C - 1.0)));
  }
}
