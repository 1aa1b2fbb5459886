#include "tractlab/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include "tractlab/conjugacy.hpp"
#include "tractlab/errors.hpp"
#include "tractlab/hypmetric.hpp"
#include "tractlab/maps.hpp"
#include "tractlab/orbits.hpp"
#include "tractlab/samples.hpp"
#include "tractlab/semiconj.hpp"
#include "tractlab/tracts.hpp"

namespace tractlab {

namespace {

struct Outcome {
  bool passed;
  std::string detail;
};

using Check = std::function<Outcome()>;

std::string num(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

Outcome at_most(double measured, double limit, const std::string& what) {
  return {measured <= limit, what + " = " + num(measured) + " (limit " + num(limit) + ")"};
}

std::vector<LogLiftModel> catalog_models() {
  return {LogLiftModel::shifted_exp(10.0), LogLiftModel::lifted_entire(EntireMapSpec::lambda_expm1({0.5, 0.0})),
          LogLiftModel::lifted_entire(EntireMapSpec::sinh({0.575, 0.0})),
          LogLiftModel::lifted_entire(EntireMapSpec::zexp()),
          LogLiftModel::lifted_entire(EntireMapSpec::exp_plus_kappa({1.0038, 2.8999}))};
}

// ---- maps ----

Outcome maps_periodicity() {
  std::mt19937_64 rng(11);
  double worst = 0.0;
  for (const auto& m : catalog_models())
    for (int i = 0; i < 200; ++i) {
      const Complex z = random_domain_point(m, rng);
      const Complex a = eval_F(m, z);
      const Complex b = eval_F(m, z + Complex(0.0, kTwoPi));
      worst = std::max(worst, std::abs(a - b) / (1.0 + std::abs(a)));
    }
  return at_most(worst, 1e-12, "max relative |F(z+2 pi i) - F(z)|");
}

Outcome maps_lift_relation() {
  std::mt19937_64 rng(12);
  double worst = 0.0;
  const auto models = catalog_models();
  for (std::size_t k = 1; k < models.size(); ++k)
    for (int i = 0; i < 250; ++i) {
      const Complex z = random_domain_point(models[k], rng);
      const Complex fz = models[k].map().eval(std::exp(z));
      worst = std::max(worst, std::abs(std::exp(eval_F(models[k], z)) - fz) / std::abs(fz));
    }
  return at_most(worst, 1e-9, "max relative |exp F(z) - f(exp z)|");
}

Outcome maps_normalization() {
  double lowest = 1e300;
  for (const auto& m : {LogLiftModel::shifted_exp(1.5), LogLiftModel::lifted_entire(EntireMapSpec::zexp())}) {
    const NormalizationResult r = normalize(m);
    lowest = std::min(lowest, sampled_min_derivative(r.model, 10000, 99));
  }
  return {lowest >= 2.0, "min |F'| over 10^4 points after normalize = " + num(lowest)};
}

Outcome maps_derivative() {
  std::mt19937_64 rng(13);
  double worst = 0.0;
  for (const auto& m : catalog_models())
    for (int i = 0; i < 200; ++i) {
      const Complex z = random_domain_point(m, rng);
      const double h = 1e-6 * std::max(1.0, std::abs(z));
      const Complex fd = (eval_F(m, z + h) - eval_F(m, z - h)) / (2.0 * h);
      const Complex d = eval_dF(m, z);
      worst = std::max(worst, std::abs(fd - d) / std::abs(d));
    }
  return at_most(worst, 1e-6, "max relative finite-difference error of F'");
}

// ---- tracts ----

Outcome tracts_round_trip() {
  std::mt19937_64 rng(21);
  double worst = 0.0;
  const auto models = catalog_models();
  for (std::size_t k = 0; k < models.size(); ++k) {
    const int n = k == 0 ? 10000 : 500;
    for (int i = 0; i < n; ++i) {
      const Complex z = random_domain_point(models[k], rng);
      const Complex back = inverse_branch(models[k], tract_of(models[k], z), eval_F(models[k], z));
      worst = std::max(worst, std::abs(back - z));
    }
  }
  return at_most(worst, 1e-10, "max round-trip error");
}

Outcome tracts_equivariance() {
  std::mt19937_64 rng(22);
  const auto m = LogLiftModel::shifted_exp(10.0);
  std::uniform_int_distribution<long long> k(-50, 50);
  for (int i = 0; i < 1000; ++i) {
    const Complex w = random_half_plane_point(rng, 0.0);
    const long long kk = k(rng);
    if (inverse_branch(m, {kk, 0}, w) != inverse_branch(m, {0, 0}, w) + Complex(0.0, kTwoPi * static_cast<double>(kk)))
      return {false, "translate mismatch at w = " + format_complex(w)};
  }
  return {true, "1000 exact translate checks"};
}

Outcome tracts_injectivity() {
  std::mt19937_64 rng(23);
  for (const auto& m : catalog_models())
    for (int i = 0; i < 200; ++i) {
      const Complex w1 = random_half_plane_point(rng, m.half_plane_Q());
      const Complex w2 = random_half_plane_point(rng, m.half_plane_Q());
      if (w1 != w2 && inverse_branch(m, {1, 0}, w1) == inverse_branch(m, {1, 0}, w2))
        return {false, "two half-plane points share a preimage"};
    }
  return {true, "distinct preimages for 1000 random pairs"};
}

Outcome tracts_lift_consistency() {
  double worst = 0.0;
  for (const auto& m : catalog_models()) {
    std::vector<Complex> path;
    const double Q = m.half_plane_Q();
    for (int i = 0; i <= 200; ++i) {
      const double t = i / 200.0;
      path.push_back(Complex(Q + 1.0 + 4.0 * t, 0.0) + Complex(0.5 * std::sin(6.0 * t), 2.0 * kTwoPi * t));
    }
    const LiftedPath lp = lift_path(m, {0, 0}, path);
    for (std::size_t i = 0; i < lp.samples.size(); ++i)
      worst = std::max(worst, std::abs(eval_F(m, lp.samples[i]) - lp.source_samples[i]));
  }
  return at_most(worst, 1e-9, "max |F(lift) - source|");
}

// ---- hypmetric ----

Outcome hyp_sandwich() {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    const double Q = 4.0 * u(rng) - 2.0;
    const Complex z = random_half_plane_point(rng, Q, -3.0, 3.0, 100.0);
    const double rho = rho_half_plane(Q, z);
    const double d = z.real() - Q;
    // Half-plane is simply connected: both ends of the standard estimate apply.
    if (!standard_estimate_bound(d).contains(rho) || !inscribed_disk_bound(d).contains(rho))
      return {false, "density outside its bounds at " + format_complex(z)};
  }
  return {true, "1000 half-plane densities inside standard and inscribed-disk bounds"};
}

Outcome hyp_linear_ceiling() {
  std::vector<Complex> punctures;
  for (int j = 0; j <= 22; ++j) punctures.emplace_back(std::ldexp(1.0, j), 0.0);
  std::mt19937_64 rng(32);
  std::uniform_real_distribution<double> lg(0.0, 6.0);
  std::uniform_real_distribution<double> ang(-kPi, kPi);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const Complex z = std::polar(std::pow(10.0, lg(rng)), ang(rng));
    worst = std::max(worst, punctured_sequence_upper(punctures, 2.0, z).value / std::abs(z));
  }
  return at_most(worst, 1.0 + std::log(6.0), "max bound/|z|");
}

Outcome hyp_symmetry_triangle() {
  std::mt19937_64 rng(33);
  for (int i = 0; i < 1000; ++i) {
    const Complex a = random_half_plane_point(rng, 0.0, -2.0, 2.0, 10.0);
    const Complex b = random_half_plane_point(rng, 0.0, -2.0, 2.0, 10.0);
    const Complex c = random_half_plane_point(rng, 0.0, -2.0, 2.0, 10.0);
    const double ab = dist_half_plane(0.0, a, b);
    if (std::abs(ab - dist_half_plane(0.0, b, a)) > 1e-12) return {false, "asymmetric distance"};
    if (ab > dist_half_plane(0.0, a, c) + dist_half_plane(0.0, c, b) + 1e-12) return {false, "triangle inequality fails"};
  }
  return {true, "1000 triples"};
}

Outcome hyp_monotonicity() {
  for (double d = 0.01; d < 100.0; d *= 1.1) {
    const DensityBound a = standard_estimate_bound(d);
    const DensityBound b = standard_estimate_bound(d * 1.1);
    if (!(b.lower < a.lower && b.upper < a.upper)) return {false, "not monotone at d = " + num(d)};
  }
  return {true, "endpoints decrease in d"};
}

// ---- orbits ----

Outcome orbits_expansion() {
  const auto m = LogLiftModel::shifted_exp(10.0);
  std::mt19937_64 rng(41);
  double worst = 1e300;
  for (int i = 0; i < 1000; ++i) {
    const auto [z, w] = same_address_pair(m, rng, 6);
    for (double r : expansion_ratios(m, z, w, 6)) worst = std::min(worst, r);
  }
  return {worst >= 1.0 - 1e-9, "min expansion ratio = " + num(worst)};
}

Outcome orbits_backward_contraction() {
  const auto m = LogLiftModel::shifted_exp(10.0);
  for (const auto& p : random_periodic_points(m, 100, 3, {}, 2.0, 42, -1e300, 1e-13))
    for (std::size_t i = 1; i < p.increments.size(); ++i)
      if (p.increments[i] > p.increments[i - 1] / 2.0 + 1e-12) return {false, "increment did not halve"};
  return {true, "100 periodic points"};
}

Outcome orbits_horizon_monotone() {
  GridSpec spec;
  spec.width = spec.height = 96;
  const auto f4 = EntireMapSpec::exp_plus_kappa({1.0038, 2.8999});
  std::vector<ClassGrid> grids;
  for (int h : {10, 20, 30}) {
    spec.horizon = h;
    grids.push_back(classify_grid(f4, spec));
  }
  for (std::size_t g = 1; g < grids.size(); ++g)
    for (std::size_t i = 0; i < grids[g].cells.size(); ++i)
      if (grids[g].cells[i] != PixelClass::escaped_small && grids[g - 1].cells[i] == PixelClass::escaped_small)
        return {false, "black set grew with the horizon"};
  return {true, "black sets nested for horizons 10, 20, 30"};
}

Outcome orbits_determinism() {
  GridSpec spec;
  spec.width = spec.height = 80;
  const auto f3 = EntireMapSpec::sinh({0.575, 0.0});
  const ClassGrid a = classify_grid(f3, spec, 1);
  const ClassGrid b = classify_grid(f3, spec, 4);
  return {a.cells == b.cells, "1 worker vs 4 workers"};
}

// ---- conjugacy ----

const Complex kKappa{0.3, 0.2};

std::vector<OrbitSegment> conj_samples(std::size_t count, int steps) {
  const auto m = LogLiftModel::shifted_exp(10.0);
  std::vector<OrbitSegment> out;
  for (const auto& p : random_periodic_points(m, count, 3, {}, 2.0, 51)) out.push_back(periodic_orbit(p, steps));
  return out;
}

Outcome conj_distance_and_cauchy() {
  const auto F0 = LogLiftModel::shifted_exp(10.0);
  const double k2 = 2.0 * std::abs(kKappa);
  double worst_dist = 0.0;
  double worst_rate = -1.0;
  for (const auto& s : conj_samples(60, 41)) {
    Complex prev = s.points[0];
    for (int n = 0; n <= 40; ++n) {
      const Complex t = theta_n(F0, kKappa, s, n, 2.0);
      worst_dist = std::max(worst_dist, std::abs(t - s.points[0]) - k2);
      if (n > 0) worst_rate = std::max(worst_rate, std::abs(t - prev) - k2 * std::ldexp(1.0, 1 - n));
      prev = t;
    }
  }
  return {worst_dist <= 1e-9 && worst_rate <= 1e-12,
          "max(|Theta_n - z| - 2|k|) = " + num(worst_dist) + ", max rate excess = " + num(worst_rate)};
}

Outcome conj_address_transport() {
  const auto F0 = LogLiftModel::shifted_exp(10.0);
  const auto Fk = F0.shifted_by(kKappa);
  for (const auto& s : conj_samples(40, 40)) {
    for (int j = 0; j < 8; ++j) {
      const Complex t = theta_n(F0, kKappa, s, 32, 2.0, j);
      if (tract_of(Fk, t) != tract_of(F0, s.points[j])) return {false, "address changed under Theta"};
    }
  }
  return {true, "8 address entries on 40 samples"};
}

Outcome conj_injectivity() {
  // Distinct samples keep distinct images, and separation along the orbit drops by
  // at most the two displacements: |Theta(z_n) - Theta(w_n)| >= |z_n - w_n| - 4|kappa|.
  const auto F0 = LogLiftModel::shifted_exp(10.0);
  const auto samples = conj_samples(40, 48);
  const double k4 = 4.0 * std::abs(kKappa);
  double min_sep = 1e300;
  for (int level = 0; level <= 8; ++level) {
    std::vector<Complex> thetas;
    for (const auto& s : samples) thetas.push_back(theta_n(F0, kKappa, s, 40, 2.0, level));
    for (std::size_t i = 0; i < samples.size(); ++i)
      for (std::size_t j = i + 1; j < samples.size(); ++j) {
        const double dz = std::abs(samples[i].points[level] - samples[j].points[level]);
        if (dz == 0.0) continue;
        const double dt = std::abs(thetas[i] - thetas[j]);
        if (dt == 0.0) return {false, "two samples share Theta"};
        if (dt < dz - k4 - 1e-9) return {false, "separation dropped by more than 4|kappa|"};
        min_sep = std::min(min_sep, dt);
      }
  }
  return {true, "min |Theta(z) - Theta(w)| = " + num(min_sep)};
}

Outcome conj_equivariance() {
  const auto F0 = LogLiftModel::shifted_exp(10.0);
  double worst = 0.0;
  for (const auto& s : conj_samples(40, 40)) {
    OrbitSegment shifted = s;
    shifted.points[0] += Complex(0.0, kTwoPi);
    const Complex a = theta_n(F0, kKappa, s, 40, 2.0);
    const Complex b = theta_n(F0, kKappa, shifted, 40, 2.0);
    worst = std::max(worst, std::abs(b - a - Complex(0.0, kTwoPi)));
  }
  return at_most(worst, 1e-12, "max |Theta(z + 2 pi i) - Theta(z) - 2 pi i|");
}

Outcome conj_inverse() {
  const auto F0 = LogLiftModel::shifted_exp(10.0);
  const auto Fk = F0.shifted_by(kKappa);
  double worst = 0.0;
  for (const auto& p : random_periodic_points(Fk, 30, 3, {-40, 40, 14}, 4.0, 52, 4.0))
    worst = std::max(worst, inverse_theta_check(F0, kKappa, periodic_orbit(p, 80), 1e-9, 2.0));
  return at_most(worst, 4e-9, "max |Theta(Theta'(w)) - w|");
}

Outcome conj_uniqueness() {
  const auto F0 = LogLiftModel::shifted_exp(10.0);
  const auto samples = conj_samples(40, 40);
  return at_most(uniqueness_crosscheck(F0, kKappa, samples, 1e-9, 2.0), 1e-8, "max discrepancy");
}

Outcome conj_holomorphy() {
  const auto F0 = LogLiftModel::shifted_exp(10.0);
  std::vector<OrbitSegment> samples;
  for (const auto& p : random_periodic_points(F0, 10, 2, {-2, 2}, 2.0, 53)) samples.push_back(periodic_orbit(p, 60));
  double lo = 1e300;
  double hi = 0.0;
  for (Complex k0 : {Complex(0.0, 0.0), Complex(0.2, 0.0), Complex(0.0, 0.2)})
    for (const auto& s : samples) {
      const double r1 = holomorphy_in_kappa(F0, s, k0, 1e-3, 2.0).residual();
      const double r2 = holomorphy_in_kappa(F0, s, k0, 5e-4, 2.0).residual();
      lo = std::min(lo, r1 / r2);
      hi = std::max(hi, r1 / r2);
    }
  return {lo >= 3.0 && hi <= 5.0, "residual ratio range [" + num(lo) + ", " + num(hi) + "]"};
}

// ---- semiconj ----

struct SemiconjFixture {
  HyperbolicSetup setup = build_setup();
  double C = 0.0;
  int depth = 0;
  std::vector<std::vector<Complex>> orbits;

  SemiconjFixture() {
    const auto region = default_certificate_region(setup);
    C = expansion_certificate(setup, region).C_hat;
    depth = semiconj_depth(setup.mu, C, 1e-6);
    for (int i = 0; i < 24; ++i) orbits.push_back(escaping_g_orbit(setup, 1 + i % 6, i % 2 ? -1 : 1, depth + 1));
  }
};

const SemiconjFixture& semiconj_fixture() {
  static const SemiconjFixture fixture;
  return fixture;
}

Outcome semi_level_one() {
  const auto& fx = semiconj_fixture();
  for (const auto& o : fx.orbits)
    if (theta_level(fx.setup, std::span<const Complex>(o), 1).thetas[1] != o[0] / fx.setup.M)
      return {false, "theta_1 differs from z/M"};
  return {true, "theta_1 = z/M exactly"};
}

Outcome semi_functional_equation() {
  const auto& fx = semiconj_fixture();
  double worst = 0.0;
  for (const auto& o : fx.orbits) {
    const SemiconjSample s = theta_level(fx.setup, std::span<const Complex>(o), fx.depth);
    for (std::size_t j = 0; j < s.functional_residuals.size(); ++j) {
      worst = std::max(worst, s.functional_residuals[j] / (1.0 + std::abs(s.thetas[j])));
    }
  }
  return at_most(worst, 1e-9, "max relative |f(theta_{j+1}(z)) - theta_j(g z)|");
}

Outcome semi_decay_and_lengths() {
  const auto& fx = semiconj_fixture();
  double worst_ratio = 0.0;
  double worst_length = 0.0;
  for (const auto& o : fx.orbits) {
    const SemiconjSample s = theta_level(fx.setup, std::span<const Complex>(o), fx.depth);
    for (std::size_t j = 2; j + 1 < s.increments.size(); ++j)
      if (s.increments[j] > 1e-12 * (1.0 + std::abs(s.theta)))
        worst_ratio = std::max(worst_ratio, s.increments[j + 1] / s.increments[j]);
    for (std::size_t j = 0; j < s.gamma_lengths.size(); ++j)
      worst_length = std::max(worst_length, s.gamma_lengths[j] / (fx.setup.mu / std::pow(fx.C, j)));
  }
  return {worst_ratio <= 1.0 / fx.C + 0.05 && worst_length <= 1.0 + 1e-6,
          "max increment ratio " + num(worst_ratio) + " (limit " + num(1.0 / fx.C + 0.05) +
              "), max length / (mu C^{1-k}) " + num(worst_length)};
}

Outcome semi_escaping_transport() {
  const auto& fx = semiconj_fixture();
  for (const auto& o : fx.orbits) {
    const SemiconjSample s = theta_level(fx.setup, std::span<const Complex>(o), fx.depth);
    for (std::size_t j = 0; j + 1 < s.forward_images.size(); ++j) {
      const Complex fz = fx.setup.f.eval(s.forward_images[j]);
      if (std::abs(fz - s.forward_images[j + 1]) > 1e-9 * (1.0 + std::abs(fz)))
        return {false, "forward image mismatch"};
      if (!(std::abs(s.forward_images[j + 1]) > std::abs(s.forward_images[j])))
        return {false, "f-orbit of theta(z) does not grow"};
    }
  }
  return {true, "f-orbits of theta(z) grow along escaping g-orbits"};
}

Outcome semi_injectivity() {
  const auto& fx = semiconj_fixture();
  std::vector<Complex> thetas;
  for (const auto& o : fx.orbits) thetas.push_back(theta_level(fx.setup, std::span<const Complex>(o), fx.depth).theta);
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < thetas.size(); ++i)
    for (std::size_t j = i + 1; j < thetas.size(); ++j, ++pairs)
      if (fx.orbits[i][0] != fx.orbits[j][0] && thetas[i] == thetas[j]) return {false, "two samples share theta"};
  return {true, std::to_string(pairs) + " pairs distinct"};
}

Outcome semi_certificate() {
  const auto& fx = semiconj_fixture();
  return {fx.C > 1.0, "C_hat = " + num(fx.C)};
}

// ---- render ----

Outcome render_f3_symmetry() {
  // On [-4,4]^2 every orbit drops below R = 50 at once (|f3| <= 15.7 there), so the
  // wider window is the one with a nonempty black set.
  GridSpec spec;
  spec.width = spec.height = 128;
  std::size_t black = 0;
  for (double half : {4.0, 8.0}) {
    spec.window = {-half, half, -half, half};
    const ClassGrid g = classify_grid(EntireMapSpec::sinh({0.575, 0.0}), spec);
    for (int r = 0; r < g.height; ++r)
      for (int c = 0; c < g.width; ++c)
        if (g.black(c, r) != g.black(g.width - 1 - c, g.height - 1 - r)) return {false, "asymmetric pixel"};
    black = g.black_count();
  }
  return {black > 0, "symmetric on both windows; black pixels on [-8,8]^2: " + std::to_string(black)};
}

Outcome render_f4_right_edge() {
  GridSpec spec;
  spec.width = spec.height = 128;
  const ClassGrid g = classify_grid(EntireMapSpec::exp_plus_kappa({1.0038, 2.8999}), spec);
  bool edge = false;
  for (int r = 0; r < g.height; ++r) edge = edge || g.black(g.width - 1, r);
  return {edge && g.black_count() > 0, "black pixels: " + std::to_string(g.black_count())};
}

struct Entry {
  const char* suite;
  const char* name;
  Check check;
};

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries = {
      {"maps", "periodicity", maps_periodicity},
      {"maps", "lift_relation", maps_lift_relation},
      {"maps", "normalization_certificate", maps_normalization},
      {"maps", "derivative_consistency", maps_derivative},
      {"tracts", "round_trip", tracts_round_trip},
      {"tracts", "translate_equivariance", tracts_equivariance},
      {"tracts", "injectivity", tracts_injectivity},
      {"tracts", "lift_consistency", tracts_lift_consistency},
      {"hypmetric", "exactness_sandwich", hyp_sandwich},
      {"hypmetric", "linear_ceiling", hyp_linear_ceiling},
      {"hypmetric", "symmetry_triangle", hyp_symmetry_triangle},
      {"hypmetric", "estimate_monotonicity", hyp_monotonicity},
      {"orbits", "expansion", orbits_expansion},
      {"orbits", "backward_contraction", orbits_backward_contraction},
      {"orbits", "horizon_monotonicity", orbits_horizon_monotone},
      {"orbits", "grid_determinism", orbits_determinism},
      {"conjugacy", "distance_bound_and_cauchy_rate", conj_distance_and_cauchy},
      {"conjugacy", "address_transport", conj_address_transport},
      {"conjugacy", "injectivity", conj_injectivity},
      {"conjugacy", "equivariance", conj_equivariance},
      {"conjugacy", "inverse_composition", conj_inverse},
      {"conjugacy", "uniqueness", conj_uniqueness},
      {"conjugacy", "holomorphy", conj_holomorphy},
      {"semiconj", "expansion_certificate", semi_certificate},
      {"semiconj", "level_one_exactness", semi_level_one},
      {"semiconj", "functional_equation", semi_functional_equation},
      {"semiconj", "geometric_decay_and_lengths", semi_decay_and_lengths},
      {"semiconj", "escaping_transport", semi_escaping_transport},
      {"semiconj", "injectivity", semi_injectivity},
      {"render", "f3_rotation_symmetry", render_f3_symmetry},
      {"render", "f4_touches_right_edge", render_f4_right_edge},
  };
  return entries;
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"maps", "tracts", "hypmetric", "orbits", "conjugacy", "semiconj", "render"};
}

std::vector<CheckResult> run_suite(const std::string& suite) {
  const auto names = suite_names();
  if (suite != "all" && std::find(names.begin(), names.end(), suite) == names.end())
    throw ConfigError("unknown verify suite '" + suite + "'");
  std::vector<CheckResult> results;
  for (const Entry& e : registry()) {
    if (suite != "all" && suite != e.suite) continue;
    CheckResult r{e.suite, e.name, false, "", 0.0};
    const auto t0 = std::chrono::steady_clock::now();
    try {
      const Outcome o = e.check();
      r.passed = o.passed;
      r.detail = o.detail;
    } catch (const std::exception& ex) {
      r.passed = false;
      r.detail = std::string("exception: ") + ex.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace tractlab
