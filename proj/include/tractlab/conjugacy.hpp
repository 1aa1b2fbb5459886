#pragma once

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "tractlab/maps.hpp"
#include "tractlab/orbits.hpp"
#include "tractlab/tracts.hpp"

namespace tractlab {

// Orbit data consumed by a pullback tower: points z_0, z_1 = F(z_0), ...
// If `real_ray_tail` is set the orbit continues along the real axis past the
// last stored point, beyond the range of double precision.
struct OrbitSegment {
  std::vector<Complex> points;
  bool real_ray_tail = false;

  bool covers(int steps) const {
    return real_ray_tail || static_cast<int>(points.size()) > steps;
  }
};

// Forward orbit of z to `steps` steps with every point after the first in {Re >= Q}.
// Throws OrbitLeftJQ otherwise.
OrbitSegment certified_orbit(const LogLiftModel& F, Complex z, int steps, double Q);
// A supplied orbit (e.g. from backward construction), validated as an F-orbit in J_Q.
OrbitSegment certified_orbit(const LogLiftModel& F, std::vector<Complex> points, double Q);
// Cycle of a periodic point unrolled to `steps` + 1 points.
OrbitSegment periodic_orbit(const PeriodicPoint& point, int steps);

struct ConjugacySample {
  Complex z;
  Complex theta;
  int depth = 0;
  double tail_bound = 0.0;
  double residual = 0.0;
  ExternalAddress address_prefix;
};

// Smallest n with 2|kappa| 2^{1-n} <= tol (0 when kappa = 0).
int depth_for_tolerance(Complex kappa, double tol);

// Theta_n(z_start) for F_kappa(z) = F_0(z + kappa).
Complex theta_n(const LogLiftModel& F0, Complex kappa, const OrbitSegment& orbit, int n, double Q,
                int start = 0);
Complex theta_n(const LogLiftModel& F0, Complex kappa, Complex z, int n, double Q);

ConjugacySample theta_limit(const LogLiftModel& F0, Complex kappa, const OrbitSegment& orbit, double tol,
                            double Q, int max_depth = 200);
ConjugacySample theta_limit(const LogLiftModel& F0, Complex kappa, Complex z, double tol, double Q,
                            int max_depth = 200);

// |Theta_n(F_0 z) - F_kappa(Theta_{n+1}(z))|.
double conjugacy_residual(const LogLiftModel& F0, Complex kappa, const OrbitSegment& orbit, int n, double Q);

// |Theta(Theta'(w)) - w| where Theta' is the tower of F_kappa with parameter -kappa.
// `w_orbit` is an orbit of F_kappa in J_{2Q}.
double inverse_theta_check(const LogLiftModel& F0, Complex kappa, const OrbitSegment& w_orbit, double tol,
                           double Q);

// Relabelling of tracts of F to tracts of G.
class TractCorrespondence {
 public:
  static TractCorrespondence identity();
  static TractCorrespondence shift(long long delta);
  static TractCorrespondence table(std::map<TractAddress, TractAddress> entries);

  std::optional<TractAddress> operator()(TractAddress t) const;

 private:
  std::function<std::optional<TractAddress>(TractAddress)> map_;
};

struct GeneralPullbackResult {
  Complex theta;
  std::vector<Complex> levels;  // Theta_0 .. Theta_n at z
  double measured_C = 0.0;      // max over steps of dist(pullback pair) - dist(argument pair)/2
  double max_late_ratio = 0.0;  // largest increment ratio after burn-in (above the noise floor)
};

// Theta_{n+1}(z) = G^{-1}_{sigma(T)}(Theta_n(F z)).
GeneralPullbackResult general_pullback(const LogLiftModel& F, const LogLiftModel& G,
                                       const TractCorrespondence& sigma, const OrbitSegment& orbit, int n,
                                       double Q, int burn_in = 3);

// max |kappa tower - general tower (F_0 -> F_kappa)| over the samples at the depth set by tol.
double uniqueness_crosscheck(const LogLiftModel& F0, Complex kappa, std::span<const OrbitSegment> samples,
                             double tol, double Q);

struct DisplacementReport {
  double max_distance = 0.0;
  double min_re = 0.0;
  double ceiling = 0.0;  // 2|kappa| / (min Re z - 2|kappa| - Q')
};

DisplacementReport displacement_bound_report(std::span<const ConjugacySample> samples, Complex kappa,
                                             double Q_prime);

struct WirtingerEstimate {
  Complex d_dkappa;
  Complex d_dkappa_bar;
  double residual() const { return std::abs(d_dkappa_bar); }
};

WirtingerEstimate holomorphy_in_kappa(const LogLiftModel& F0, const OrbitSegment& orbit, Complex kappa0,
                                      double h, double Q, int depth = 60);

double motion_dilatation_ceiling(Complex kappa, double Q_prime);

}  // namespace tractlab
