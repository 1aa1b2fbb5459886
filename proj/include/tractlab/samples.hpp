#pragma once

#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include "tractlab/conjugacy.hpp"
#include "tractlab/orbits.hpp"
#include "tractlab/semiconj.hpp"

namespace tractlab {

// Deterministic sample builders shared by the CLI, the verify suite and the tests.

// Random point of the target half-plane {Re > Q}: Re - Q log-uniform in
// [10^lo, 10^hi], Im uniform in [-height, height].
Complex random_half_plane_point(std::mt19937_64& rng, double Q, double lo = -3.0, double hi = 1.5,
                                double height = 30.0);

// Random domain point: inverse branch of a random half-plane point into a random tract.
Complex random_domain_point(const LogLiftModel& model, std::mt19937_64& rng, long long k_max = 3);

struct AddressRange {
  long long k_min = -5;
  long long k_max = 5;
  // Entries with |k| below this are redrawn (used to push cycles deeper).
  long long min_abs = 0;
};

// Periodic points with random address words (period 1..max_period). Words whose
// cycle dips below `min_re` are redrawn.
std::vector<PeriodicPoint> random_periodic_points(const LogLiftModel& model, std::size_t count, int max_period,
                                                  AddressRange range, double Q, std::uint64_t seed,
                                                  double min_re = -std::numeric_limits<double>::infinity(),
                                                  double tol = 1e-14);

// Period-2 points z_0 with word (k0, K), |k0| <= 3 and |K| large enough that
// Re z_0 >= re_floor. Only z_1 carries the large imaginary part, so z_0 sits deep in
// the half-plane while staying well resolved in double precision.
std::vector<PeriodicPoint> deep_periodic_points(const LogLiftModel& model, std::size_t count, double re_floor,
                                                double Q, std::uint64_t seed);

// A pair z, w sharing the address word of length `depth`, built by pulling back two
// nearby half-plane points along the same inverse branches.
std::pair<Complex, Complex> same_address_pair(const LogLiftModel& model, std::mt19937_64& rng, int depth);

// Escaping g-orbit of `length` + 1 points with branches b_j = sign * (b0 + j).
std::vector<Complex> escaping_g_orbit(const HyperbolicSetup& setup, long long b0, int sign, int length);

}  // namespace tractlab
