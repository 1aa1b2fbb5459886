#include "tractlab/samples.hpp"

#include <cmath>

#include "tractlab/errors.hpp"

namespace tractlab {

Complex random_half_plane_point(std::mt19937_64& rng, double Q, double lo, double hi, double height) {
  std::uniform_real_distribution<double> depth(lo, hi);
  std::uniform_real_distribution<double> im(-height, height);
  const double re = Q + std::pow(10.0, depth(rng));
  return {re, im(rng)};
}

Complex random_domain_point(const LogLiftModel& model, std::mt19937_64& rng, long long k_max) {
  std::uniform_int_distribution<long long> branch(-k_max, k_max);
  const int tracts = model.family() == ModelFamily::lifted_entire ? model.map().tract_count() : 1;
  std::uniform_int_distribution<int> inner(0, tracts - 1);
  const Complex w = random_half_plane_point(rng, model.half_plane_Q());
  return inverse_branch(model, {branch(rng), inner(rng)}, w);
}

std::vector<PeriodicPoint> random_periodic_points(const LogLiftModel& model, std::size_t count, int max_period,
                                                  AddressRange range, double Q, std::uint64_t seed, double min_re,
                                                  double tol) {
  if (max_period < 1) throw RangeError("max_period must be >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> period(1, max_period);
  std::uniform_int_distribution<long long> entry(range.k_min, range.k_max);
  std::vector<PeriodicPoint> out;
  std::size_t attempts = 0;
  while (out.size() < count) {
    if (++attempts > 100 * count + 100) throw SearchFailed("could not draw enough periodic points");
    std::vector<TractAddress> word(static_cast<std::size_t>(period(rng)));
    for (auto& t : word) {
      long long k;
      do k = entry(rng);
      while (std::llabs(k) < range.min_abs);
      t = {k, 0};
    }
    PeriodicPoint p;
    try {
      p = point_with_address(model, word, Q, tol);
    } catch (const PullbackLeftDomain&) {
      continue;
    }
    bool deep_enough = true;
    for (Complex c : p.cycle) deep_enough = deep_enough && c.real() >= min_re;
    if (deep_enough) out.push_back(std::move(p));
  }
  return out;
}

std::vector<PeriodicPoint> deep_periodic_points(const LogLiftModel& model, std::size_t count, double re_floor,
                                                double Q, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long long> small(-3, 3);
  std::uniform_real_distribution<double> spread(0.0, 0.5);
  // Re z_0 is about log(2 pi |K|).
  const double base = std::ceil(std::exp(re_floor + 0.05) / kTwoPi);
  std::vector<PeriodicPoint> out;
  std::size_t attempts = 0;
  while (out.size() < count) {
    if (++attempts > 100 * count + 100) throw SearchFailed("could not draw enough deep periodic points");
    const long long K = static_cast<long long>(base * (1.0 + spread(rng))) * (rng() % 2 ? 1 : -1);
    const std::vector<TractAddress> word{{small(rng), 0}, {K, 0}};
    PeriodicPoint p = point_with_address(model, word, Q, 1e-13);
    if (p.z.real() >= re_floor) out.push_back(std::move(p));
  }
  return out;
}

std::pair<Complex, Complex> same_address_pair(const LogLiftModel& model, std::mt19937_64& rng, int depth) {
  std::uniform_int_distribution<long long> branch(-4, 4);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::vector<TractAddress> word(static_cast<std::size_t>(depth));
  for (auto& t : word) t = {branch(rng), 0};
  const double Q = model.half_plane_Q();
  const Complex a = random_half_plane_point(rng, Q, -0.5, 1.2, 20.0);
  // Second endpoint within a small disk that stays in the half-plane.
  const double radius = 0.5 * (a.real() - Q) * std::pow(10.0, 2.0 * unit(rng) - 2.0);
  const Complex b = a + radius * std::polar(1.0, kPi * unit(rng));
  Complex z = a;
  Complex w = b;
  for (std::size_t i = word.size(); i-- > 0;) {
    z = inverse_branch(model, word[i], z);
    w = inverse_branch(model, word[i], w);
  }
  return {z, w};
}

std::vector<Complex> escaping_g_orbit(const HyperbolicSetup& setup, long long b0, int sign, int length) {
  if (b0 < 1 || (sign != 1 && sign != -1)) throw RangeError("escaping orbit needs b0 >= 1 and sign = +-1");
  std::vector<long long> branches;
  for (int j = 0; j < length; ++j) branches.push_back(sign * (b0 + j));
  const long long b_end = sign * (b0 + length);
  const Complex end = setup.M * Complex(std::log(setup.R), kTwoPi * static_cast<double>(b_end));
  return backward_g_orbit(setup, branches, end);
}

}  // namespace tractlab
