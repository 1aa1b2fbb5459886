#include "tractlab/conjugacy.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <limits>

#include "tractlab/errors.hpp"
#include "tractlab/hypmetric.hpp"

namespace tractlab {

namespace {

const Complex kZero{0.0, 0.0};

void require_kappa_margin(Complex kappa, double Q) {
  require_finite(kappa, "kappa");
  if (!(Q > 2.0 * std::abs(kappa) + 1.0))
    throw PreconditionError("Q = " + std::to_string(Q) + " must exceed 2|kappa| + 1 = " +
                            std::to_string(2.0 * std::abs(kappa) + 1.0));
}

int last_index(const OrbitSegment& orbit) { return static_cast<int>(orbit.points.size()) - 1; }

// Checks that the orbit reaches index `top` and stays in {Re >= Q} from index 1 on.
void require_orbit(const OrbitSegment& orbit, int top, double Q) {
  if (orbit.points.empty()) throw OrbitLeftJQ("empty orbit");
  if (!orbit.covers(top)) throw OrbitLeftJQ("orbit certified only to depth " + std::to_string(last_index(orbit)));
  const int stop = std::min(top, last_index(orbit));
  for (int i = 1; i <= stop; ++i)
    if (orbit.points[i].real() < Q)
      throw OrbitLeftJQ("orbit point " + std::to_string(i) + " has Re < Q");
}

// Theta_n(z_start) = P_start o ... o P_{start+n-1}(z_{start+n}). Past the end of
// a real-ray orbit the innermost value comes from `deep(z_last)`, which is
// Theta_m(z_last) for every m >= 1 to double precision.
template <class Pull, class Deep>
Complex run_tower(const OrbitSegment& orbit, int start, int n, Pull&& pull, Deep&& deep) {
  const int last = last_index(orbit);
  const int top = start + n;
  Complex value;
  int j;
  if (n == 0) return orbit.points[start];
  if (top <= last) {
    value = orbit.points[top];
    j = top - 1;
  } else {
    value = deep(orbit.points[last]);
    j = last - 1;
  }
  for (; j >= start; --j) value = pull(j, value);
  return value;
}

std::vector<TractAddress> tracts_along(const LogLiftModel& F, const OrbitSegment& orbit, int count) {
  std::vector<TractAddress> out;
  const int stop = std::min(count, last_index(orbit));
  out.reserve(stop);
  for (int j = 0; j < stop; ++j) {
    if (!domain_contains(F, orbit.points[j]))
      throw OrbitLeftJQ("orbit point " + std::to_string(j) + " is not in the domain (or lies on its boundary)");
    out.push_back(tract_of(F, orbit.points[j]));
  }
  return out;
}

Complex pull_or_fail(const LogLiftModel& model, TractAddress t, Complex u) {
  try {
    return inverse_branch(model, t, u);
  } catch (const RangeError&) {
    throw OrbitLeftJQ("pullback argument " + format_complex(u) + " left the half-plane");
  }
}

Complex kappa_tower(const LogLiftModel& F0, Complex kappa, const OrbitSegment& orbit, int n, int start) {
  const auto tracts = tracts_along(F0, orbit, start + n);
  return run_tower(
      orbit, start, n, [&](int j, Complex u) { return pull_or_fail(F0, tracts[j], u) - kappa; },
      [&](Complex z_last) { return z_last - kappa; });
}

// G^{-1}_{T'}(F(z)) for shifted exponentials when F(z) overflows:
// Log(e^u + c) = u (with principal imaginary part) + log1p(c e^{-u}).
Complex deep_shifted_pullback(const LogLiftModel& F, const LogLiftModel& G, TractAddress target, Complex z) {
  if (F.family() != ModelFamily::shifted_exp || G.family() != ModelFamily::shifted_exp)
    throw OrbitLeftJQ("orbit overflowed; the closed-form deep pullback needs shifted exponentials");
  const Complex u = z + F.offset() + F.kappa();
  const double c = G.R() + G.offset() - F.R() - F.offset();
  const Complex log_part = Complex(u.real(), std::remainder(u.imag(), kTwoPi)) +
                           (c == 0.0 ? kZero : std::log(1.0 + c * std::exp(-u)));
  return log_part + Complex(0.0, kTwoPi * static_cast<double>(target.branch_index)) - G.offset() - G.kappa();
}

}  // namespace

OrbitSegment certified_orbit(const LogLiftModel& F, Complex z, int steps, double Q) {
  if (steps < 0) throw RangeError("negative orbit length");
  if (steps == 0) return {{z}, false};
  const OrbitRecord rec = iterate(F, z, steps, Q);
  if (!rec.in_JQ())
    throw OrbitLeftJQ("orbit of " + format_complex(z) + " " + to_string(rec.flag) + " at step " +
                      std::to_string(rec.flag_step));
  return {rec.points, rec.real_ray_tail};
}

OrbitSegment certified_orbit(const LogLiftModel& F, std::vector<Complex> points, double Q) {
  if (points.empty()) throw OrbitLeftJQ("empty orbit");
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    if (!domain_contains(F, points[i])) throw OrbitLeftJQ("orbit point " + std::to_string(i) + " is not in V");
    const Complex image = eval_F(F, points[i]);
    if (std::abs(image - points[i + 1]) > 1e-9 * (1.0 + std::abs(points[i + 1])))
      throw OrbitLeftJQ("points " + std::to_string(i) + " and " + std::to_string(i + 1) + " are not an orbit");
  }
  for (std::size_t i = 1; i < points.size(); ++i)
    if (points[i].real() < Q) throw OrbitLeftJQ("orbit point " + std::to_string(i) + " has Re < Q");
  return {std::move(points), false};
}

OrbitSegment periodic_orbit(const PeriodicPoint& point, int steps) {
  if (point.cycle.empty()) throw RangeError("periodic point without a cycle");
  OrbitSegment out;
  out.points.reserve(static_cast<std::size_t>(steps) + 1);
  for (int i = 0; i <= steps; ++i) out.points.push_back(point.cycle[i % point.cycle.size()]);
  return out;
}

int depth_for_tolerance(Complex kappa, double tol) {
  if (!(tol > 0.0)) throw RangeError("tolerance must be positive");
  const double a = 2.0 * std::abs(kappa);
  if (a == 0.0) return 0;
  int n = std::max(1, static_cast<int>(std::ceil(1.0 + std::log2(a / tol))));
  while (a * std::ldexp(1.0, 1 - n) > tol) ++n;
  while (n > 1 && a * std::ldexp(1.0, 2 - n) <= tol) --n;
  return n;
}

Complex theta_n(const LogLiftModel& F0, Complex kappa, const OrbitSegment& orbit, int n, double Q, int start) {
  require_kappa_margin(kappa, Q);
  if (n < 0 || start < 0) throw RangeError("theta_n: negative depth");
  require_orbit(orbit, start + n, Q);
  if (start > last_index(orbit)) throw OrbitLeftJQ("start index beyond the stored orbit");
  if (kappa == kZero) return orbit.points[start];
  return kappa_tower(F0, kappa, orbit, n, start);
}

Complex theta_n(const LogLiftModel& F0, Complex kappa, Complex z, int n, double Q) {
  require_kappa_margin(kappa, Q);
  return theta_n(F0, kappa, certified_orbit(F0, z, n, Q), n, Q);
}

ConjugacySample theta_limit(const LogLiftModel& F0, Complex kappa, const OrbitSegment& orbit, double tol, double Q,
                            int max_depth) {
  require_kappa_margin(kappa, Q);
  const int n = depth_for_tolerance(kappa, tol);
  if (n > max_depth) throw DepthExceeded("needed depth " + std::to_string(n) + " exceeds " + std::to_string(max_depth));
  ConjugacySample s;
  s.z = orbit.points.at(0);
  s.depth = n;
  s.theta = theta_n(F0, kappa, orbit, n, Q);
  if (n == 0) return s;
  s.tail_bound = 2.0 * std::abs(kappa) * std::ldexp(1.0, 1 - n);
  const Complex image = theta_n(F0, kappa, orbit, n - 1, Q, 1);
  s.residual = std::abs(eval_F(F0.shifted_by(kappa), s.theta) - image);
  for (const TractAddress& t : tracts_along(F0, orbit, n)) s.address_prefix.entries.push_back(t);
  s.address_prefix.entries.resize(n, TractAddress{0, 0});  // real-ray tail: central tract
  return s;
}

ConjugacySample theta_limit(const LogLiftModel& F0, Complex kappa, Complex z, double tol, double Q, int max_depth) {
  require_kappa_margin(kappa, Q);
  const int n = depth_for_tolerance(kappa, tol);
  if (n > max_depth) throw DepthExceeded("needed depth " + std::to_string(n) + " exceeds " + std::to_string(max_depth));
  return theta_limit(F0, kappa, certified_orbit(F0, z, n, Q), tol, Q, max_depth);
}

double conjugacy_residual(const LogLiftModel& F0, Complex kappa, const OrbitSegment& orbit, int n, double Q) {
  require_kappa_margin(kappa, Q);
  require_orbit(orbit, n + 1, Q);
  if (kappa == kZero) return 0.0;
  const Complex image_side = theta_n(F0, kappa, orbit, n, Q, 1);
  const Complex theta_next = theta_n(F0, kappa, orbit, n + 1, Q, 0);
  return std::abs(image_side - eval_F(F0.shifted_by(kappa), theta_next));
}

double inverse_theta_check(const LogLiftModel& F0, Complex kappa, const OrbitSegment& w_orbit, double tol, double Q) {
  require_kappa_margin(kappa, Q);
  if (kappa == kZero) return 0.0;
  const int n = depth_for_tolerance(kappa, tol);
  require_orbit(w_orbit, 2 * n, 2.0 * Q);
  const LogLiftModel Fk = F0.shifted_by(kappa);

  // Theta' = tower of F_kappa with parameter -kappa, evaluated along the w-orbit.
  OrbitSegment z_orbit;
  for (int j = 0; j <= n; ++j) z_orbit.points.push_back(theta_n(Fk, -kappa, w_orbit, n, Q, j));
  return std::abs(theta_n(F0, kappa, z_orbit, n, Q) - w_orbit.points[0]);
}

TractCorrespondence TractCorrespondence::identity() {
  TractCorrespondence c;
  c.map_ = [](TractAddress t) { return std::optional<TractAddress>(t); };
  return c;
}

TractCorrespondence TractCorrespondence::shift(long long delta) {
  TractCorrespondence c;
  c.map_ = [delta](TractAddress t) {
    t.branch_index += delta;
    return std::optional<TractAddress>(t);
  };
  return c;
}

TractCorrespondence TractCorrespondence::table(std::map<TractAddress, TractAddress> entries) {
  TractCorrespondence c;
  c.map_ = [entries = std::move(entries)](TractAddress t) -> std::optional<TractAddress> {
    auto it = entries.find(t);
    if (it == entries.end()) return std::nullopt;
    return it->second;
  };
  return c;
}

std::optional<TractAddress> TractCorrespondence::operator()(TractAddress t) const { return map_(t); }

GeneralPullbackResult general_pullback(const LogLiftModel& F, const LogLiftModel& G, const TractCorrespondence& sigma,
                                       const OrbitSegment& orbit, int n, double Q, int burn_in) {
  if (n < 0) throw RangeError("general_pullback: negative depth");
  require_orbit(orbit, n, Q);
  const auto tracts = tracts_along(F, orbit, n);
  std::vector<TractAddress> targets;
  for (const TractAddress& t : tracts) {
    auto image = sigma(t);
    if (!image) throw CorrespondenceGap("tract " + to_string(t) + " has no image under the correspondence");
    targets.push_back(*image);
  }
  const double Qh = std::max(F.half_plane_Q(), G.half_plane_Q());

  GeneralPullbackResult out;
  out.measured_C = -std::numeric_limits<double>::infinity();
  auto deep = [&](Complex z_last) {
    auto image = sigma(tract_of(F, z_last));
    if (!image) throw CorrespondenceGap("tract of the deep orbit point has no image");
    return deep_shifted_pullback(F, G, *image, z_last);
  };
  for (int m = 0; m <= n; ++m) {
    auto pull = [&](int j, Complex u) {
      const Complex pulled = pull_or_fail(G, targets[j], u);
      const double lhs = dist_half_plane(Qh, orbit.points[j], pulled);
      const double rhs = dist_half_plane(Qh, orbit.points[j + 1], u);
      out.measured_C = std::max(out.measured_C, lhs - rhs / 2.0);
      return pulled;
    };
    out.levels.push_back(run_tower(orbit, 0, m, pull, deep));
  }
  if (out.measured_C == -std::numeric_limits<double>::infinity()) out.measured_C = 0.0;
  out.theta = out.levels.back();

  // Increment contraction once the burn-in levels are past and above the noise floor.
  const Complex z = orbit.points[0];
  const double floor = 1e-11;
  for (int m = burn_in; m + 2 <= n; ++m) {
    const double d0 = dist_half_plane(Qh, out.levels[m], out.levels[m + 1]);
    const double d1 = dist_half_plane(Qh, out.levels[m + 1], out.levels[m + 2]);
    if (d0 > floor / (z.real() - Qh) && d1 > floor / (z.real() - Qh))
      out.max_late_ratio = std::max(out.max_late_ratio, d1 / d0);
  }
  return out;
}

double uniqueness_crosscheck(const LogLiftModel& F0, Complex kappa, std::span<const OrbitSegment> samples, double tol,
                             double Q) {
  require_kappa_margin(kappa, Q);
  if (kappa == kZero) return 0.0;
  const int n = depth_for_tolerance(kappa, tol);
  const LogLiftModel Fk = F0.shifted_by(kappa);
  // Tract T of F_0 corresponds to T - kappa of F_kappa, which carries the same branch index.
  const TractCorrespondence sigma = TractCorrespondence::identity();
  double worst = 0.0;
  for (const OrbitSegment& s : samples) {
    const Complex a = theta_n(F0, kappa, s, n, Q);
    const Complex b = general_pullback(F0, Fk, sigma, s, n, Q).theta;
    worst = std::max(worst, std::abs(a - b));
  }
  return worst;
}

DisplacementReport displacement_bound_report(std::span<const ConjugacySample> samples, Complex kappa, double Q_prime) {
  DisplacementReport r;
  r.min_re = std::numeric_limits<double>::infinity();
  for (const ConjugacySample& s : samples) {
    if (!(s.z.real() > Q_prime) || !(s.theta.real() > Q_prime))
      throw RangeError("sample " + format_complex(s.z) + " or its image leaves {Re > Q'}");
    r.max_distance = std::max(r.max_distance, dist_half_plane(Q_prime, s.z, s.theta));
    r.min_re = std::min(r.min_re, s.z.real());
  }
  const double k2 = 2.0 * std::abs(kappa);
  const double room = r.min_re - k2 - Q_prime;
  r.ceiling = room > 0.0 ? k2 / room : std::numeric_limits<double>::infinity();
  return r;
}

WirtingerEstimate holomorphy_in_kappa(const LogLiftModel& F0, const OrbitSegment& orbit, Complex kappa0, double h,
                                      double Q, int depth) {
  if (!(h > 0.0)) throw RangeError("step h must be positive");
  require_kappa_margin(kappa0, Q - 2.0 * h);
  require_orbit(orbit, depth, Q);
  using LComplex = std::complex<long double>;
  const LComplex k0(kappa0.real(), kappa0.imag());
  const long double lh = h;
  const LComplex ih(0.0L, lh);
  LComplex dx, dy;
  if (F0.family() == ModelFamily::shifted_exp) {
    // The O(h^2) truncation term sits near double roundoff for |Theta| ~ 30, so the
    // closed-form tower is re-run in extended precision.
    const auto tracts = tracts_along(F0, orbit, depth);
    const LComplex shift(F0.offset() + F0.kappa().real(), F0.kappa().imag());
    const long double add = static_cast<long double>(F0.offset()) + F0.R();
    auto g = [&](LComplex k) {
      const int last = last_index(orbit);
      auto lift = [](Complex z) { return LComplex(z.real(), z.imag()); };
      LComplex value;
      int j;
      if (depth <= last) {
        value = lift(orbit.points[depth]);
        j = depth - 1;
      } else {
        value = lift(orbit.points[last]) - k;
        j = last - 1;
      }
      for (; j >= 0; --j) {
        if (!(value.real() > F0.half_plane_Q())) throw OrbitLeftJQ("pullback argument left the half-plane");
        const long double turn = 2.0L * std::numbers::pi_v<long double> * static_cast<long double>(tracts[j].branch_index);
        value = std::log(value + add) + LComplex(0.0L, turn) - shift - k;
      }
      return value;
    };
    dx = g(k0 + lh) - g(k0 - lh);
    dy = g(k0 + ih) - g(k0 - ih);
  } else {
    auto g = [&](Complex k) {
      const Complex v = theta_n(F0, k, orbit, depth, Q);
      return LComplex(v.real(), v.imag());
    };
    dx = g(kappa0 + h) - g(kappa0 - h);
    dy = g(kappa0 + Complex(0.0, h)) - g(kappa0 - Complex(0.0, h));
  }
  const LComplex i(0.0L, 1.0L);
  const LComplex d = (dx - i * dy) / (4.0L * lh);
  const LComplex dbar = (dx + i * dy) / (4.0L * lh);
  return {Complex(static_cast<double>(d.real()), static_cast<double>(d.imag())),
          Complex(static_cast<double>(dbar.real()), static_cast<double>(dbar.imag()))};
}

double motion_dilatation_ceiling(Complex kappa, double Q_prime) {
  require_finite(kappa, "kappa");
  if (!(Q_prime > 1.0)) throw RangeError("Q' must exceed 1");
  return 2.0 * std::abs(kappa) / (Q_prime - 1.0);
}

}  // namespace tractlab
