#include "tractlab/semiconj.hpp"

#include <cmath>
#include <limits>

#include "tractlab/errors.hpp"

namespace tractlab {

namespace {

constexpr int kSegmentSamples = 16;

void fail(const std::string& check, const std::string& detail) {
  throw SetupInvalid("setup check '" + check + "' failed: " + detail);
}

// Hyperbolic length estimate in W = {|u| > r} of a polyline (midpoint rule).
double polyline_length_W(double r, const std::vector<Complex>& pts, std::size_t from, std::size_t to) {
  double total = 0.0;
  for (std::size_t i = from; i < to; ++i) {
    const Complex mid = 0.5 * (pts[i] + pts[i + 1]);
    total += rho_disk_exterior(r, mid) * std::abs(pts[i + 1] - pts[i]);
  }
  return total;
}

// log|f(z)| and |f'(z)/f(z)| for f = lambda (e^z - 1), without overflow.
struct LogModulus {
  double log_abs_f;
  double log_derivative;
};

LogModulus log_modulus(const HyperbolicSetup& s, Complex z) {
  if (z.real() > 0.0) {
    const Complex one_minus = 1.0 - std::exp(-z);
    return {std::log(std::abs(s.lambda)) + z.real() + std::log(std::abs(one_minus)), 1.0 / std::abs(one_minus)};
  }
  const Complex e = std::exp(z);
  return {std::log(std::abs(s.lambda)) + std::log(std::abs(e - 1.0)), std::abs(e) / std::abs(e - 1.0)};
}

}  // namespace

Complex HyperbolicSetup::f_inverse(Complex u, long long branch) const {
  return std::log(u / lambda + 1.0) + Complex(0.0, kTwoPi * static_cast<double>(branch));
}

double semiconj_mu(double M) {
  if (!(M > 1.0)) throw RangeError("M must exceed 1");
  return std::log(1.0 + std::log(M) / std::log(2.0));
}

HyperbolicSetup build_setup(Complex lambda, double r_U, double K, double R) {
  if (!is_finite(lambda) || !std::isfinite(r_U) || !std::isfinite(K) || !std::isfinite(R))
    fail("finite_parameters", "all parameters must be finite");
  if (lambda == Complex(0.0, 0.0) || !(std::abs(lambda) < 1.0))
    fail("attracting_fixed_point", "need 0 < |lambda| < 1 so that 0 is attracting");
  if (!(r_U > 0.0)) fail("disk_radius", "r_U must be positive");

  HyperbolicSetup s;
  s.f = EntireMapSpec::lambda_expm1(lambda);
  s.lambda = lambda;
  s.r_U = r_U;
  s.K = K;
  s.R = R;

  // The only singular value of lambda (e^z - 1) is the asymptotic value -lambda.
  Complex p = -lambda;
  for (int i = 0; i < 100; ++i) {
    s.postsingular_max_modulus = std::max(s.postsingular_max_modulus, std::abs(p));
    if (!(std::abs(p) < r_U))
      fail("postsingular_orbit", "iterate " + std::to_string(i) + " of the singular value leaves U");
    p = s.f.eval(p);
  }

  // |lambda (e^z - 1)| <= |lambda| (e^{|z|} - 1) gives cl f(U) inside U.
  for (int i = 0; i < 1024; ++i)
    s.boundary_max_modulus =
        std::max(s.boundary_max_modulus, std::abs(s.f.eval(std::polar(r_U, kTwoPi * i / 1024.0))));
  const double analytic = std::abs(lambda) * std::expm1(r_U);
  if (!(s.boundary_max_modulus < r_U) || !(analytic < r_U))
    fail("compact_containment", "max |f| on |z| = r_U is not below r_U");

  if (!(K >= 1.0) || !(r_U < K / 2.0)) fail("disk_in_D_K_half", "need K >= 1 and cl U inside D(0, K/2)");
  if (!(R >= K)) fail("R_at_least_K", "need R >= K");
  // |f(z)| <= (e^{|z|} + 1)/2 for |lambda| <= 1, so |f| > R forces |z| > log(2R - 1).
  if (!(std::log(2.0 * R - 1.0) >= K + 1.0)) fail("preimage_condition", "log(2R - 1) < K + 1");

  s.M = R / K;
  s.mu = semiconj_mu(s.M);
  return s;
}

std::vector<Complex> backward_g_orbit(const HyperbolicSetup& setup, std::span<const long long> branches, Complex end) {
  std::vector<Complex> orbit(branches.size() + 1);
  orbit.back() = end;
  for (std::size_t j = branches.size(); j-- > 0;) orbit[j] = setup.g_inverse(orbit[j + 1], branches[j]);
  return orbit;
}

SemiconjSample theta_level(const HyperbolicSetup& setup, std::span<const Complex> orbit, int k) {
  if (k < 0) throw RangeError("theta_level: negative level");
  if (orbit.empty()) throw RangeError("theta_level: empty orbit");
  SemiconjSample out;
  out.z = orbit[0];
  out.depth = k;
  if (k == 0) {
    out.thetas = {orbit[0]};
    out.theta = orbit[0];
    return out;
  }
  if (static_cast<int>(orbit.size()) < k) throw HorizonError("orbit shorter than the requested level");
  for (int j = 0; j < k; ++j) {
    if (!is_finite(orbit[j]) || !(std::abs(orbit[j]) > setup.R))
      throw HorizonError("g-orbit point " + std::to_string(j) + " is not in {|w| > R}");
    if (j > 0 && std::abs(setup.g(orbit[j - 1]) - orbit[j]) > 1e-9 * (1.0 + std::abs(orbit[j])))
      throw HorizonError("points " + std::to_string(j - 1) + ", " + std::to_string(j) + " are not a g-orbit");
  }

  // Gamma_1(w_{k-1}) is the radial segment [w, w/M].
  auto segment = [&](Complex w) {
    std::vector<Complex> pts;
    for (int i = 0; i <= kSegmentSamples; ++i)
      pts.push_back(i == kSegmentSamples ? w / setup.M
                                         : w * std::pow(setup.M, -static_cast<double>(i) / kSegmentSamples));
    return pts;
  };

  std::vector<Complex> path = segment(orbit[k - 1]);
  std::vector<std::size_t> breaks = {0, path.size() - 1};
  std::vector<Complex> previous_breakpoints;  // theta_j(g z) once the loop ends
  std::vector<Complex> forward(static_cast<std::size_t>(k));
  forward[k - 1] = path.back();

  for (int j = k - 2; j >= 0; --j) {
    previous_breakpoints.clear();
    for (std::size_t b : breaks) previous_breakpoints.push_back(path[b]);

    // Lift `path` (which starts at w_{j+1}) under f from the start point w_j / M.
    const Complex start = orbit[j] / setup.M;
    std::vector<Complex> lifted{start};
    std::vector<std::size_t> lifted_breaks{0};
    Complex source_prev = path[0];
    std::size_t next_break = 1;
    for (std::size_t i = 1; i < path.size(); ++i) {
      std::vector<Complex> pending{path[i]};
      int refinements = 0;
      while (!pending.empty()) {
        const Complex u = pending.back();
        const Complex principal = setup.f_inverse(u, 0);
        const long long b = std::llround((lifted.back().imag() - principal.imag()) / kTwoPi);
        const Complex candidate = principal + Complex(0.0, kTwoPi * static_cast<double>(b));
        if (!is_finite(candidate) || std::abs(candidate - lifted.back()) > kPi / 2.0) {
          const Complex mid = 0.5 * (source_prev + u);
          if (++refinements > 4000 || std::abs(mid - source_prev) < 1e-14 * (1.0 + std::abs(u)))
            throw ContinuationError("curve lift lost branch continuity near " + format_complex(u));
          pending.push_back(mid);
          continue;
        }
        pending.pop_back();
        lifted.push_back(candidate);
        source_prev = u;
      }
      if (next_break < breaks.size() && i == breaks[next_break]) {
        lifted_breaks.push_back(lifted.size() - 1);
        ++next_break;
      }
    }
    if (std::abs(setup.f.eval(start) - path[0]) > 1e-9 * (1.0 + std::abs(path[0])))
      throw ContinuationError("lift start does not map to the curve start");

    // Gamma(w_j) = [w_j, w_j / M] followed by the lifted curve.
    std::vector<Complex> next = segment(orbit[j]);
    const std::size_t offset = next.size() - 1;
    next.insert(next.end(), lifted.begin() + 1, lifted.end());
    std::vector<std::size_t> next_breaks{0};
    for (std::size_t b : lifted_breaks) next_breaks.push_back(b + offset);
    path = std::move(next);
    breaks = std::move(next_breaks);
    forward[j] = path[breaks.back()];
  }

  for (std::size_t b : breaks) out.thetas.push_back(path[b]);
  for (int j = 0; j < k; ++j) {
    out.increments.push_back(std::abs(out.thetas[j + 1] - out.thetas[j]));
    out.gamma_lengths.push_back(polyline_length_W(setup.r_U, path, breaks[j], breaks[j + 1]));
  }
  // theta_j(g z) for j = 0 .. k-1; with k = 1 that is just g(z) itself.
  if (previous_breakpoints.empty()) previous_breakpoints = {orbit.size() > 1 ? orbit[1] : setup.g(orbit[0])};
  for (int j = 0; j < k; ++j)
    out.functional_residuals.push_back(std::abs(setup.f.eval(out.thetas[j + 1]) - previous_breakpoints[j]));
  out.forward_images = std::move(forward);
  out.theta = out.thetas.back();
  return out;
}

SemiconjSample theta_level(const HyperbolicSetup& setup, Complex z, int k) {
  require_finite(z, "z");
  std::vector<Complex> orbit{z};
  for (int j = 1; j < std::max(k, 1); ++j) {
    if (!(std::abs(orbit.back()) > setup.R)) break;
    orbit.push_back(setup.g(orbit.back()));
    if (!is_finite(orbit.back())) throw HorizonError("g-orbit overflows before level " + std::to_string(k));
  }
  return theta_level(setup, std::span<const Complex>(orbit), k);
}

std::string to_string(ExpansionMethod method) {
  return method == ExpansionMethod::punctured_disk_exact ? "punctured_disk_exact" : "two_puncture";
}

double expansion_lower_bound(const HyperbolicSetup& setup, Complex z, ExpansionMethod method, double K_const) {
  const double r = setup.r_U;
  const double abs_z = std::abs(z);
  if (!is_finite(z) || !(abs_z > r)) return std::numeric_limits<double>::quiet_NaN();
  const LogModulus lm = log_modulus(setup, z);
  if (!(lm.log_abs_f > std::log(r))) return std::numeric_limits<double>::quiet_NaN();

  if (method == ExpansionMethod::punctured_disk_exact) {
    // |f'| rho_W(f z) / rho_W(z) with rho_W(u) = 1 / (|u| log(|u|/r)).
    return lm.log_derivative * abs_z * std::log(abs_z / r) / (lm.log_abs_f - std::log(r));
  }

  // rho_W(f z) >= 1 / two_puncture(r, -r, f z); rho_W(z) <= 2 / (|z| - r).
  const double upper_density = 2.0 / (abs_z - r);
  if (lm.log_abs_f < 600.0) {
    const Complex fz = setup.f.eval(z);
    const Complex dfz = setup.f.derivative(z);
    return std::abs(dfz) / two_puncture_upper(r, -r, fz, K_const) / upper_density;
  }
  // |f| beyond double range: |f - a| ~ |f| and |f'| / |f - a| ~ |f'/f|.
  const double tp_over_f = K_const * (1.0 + std::abs(std::log(2.0 * r) - lm.log_abs_f));
  return lm.log_derivative / tp_over_f / upper_density;
}

std::vector<Complex> default_certificate_region(const HyperbolicSetup& setup, double radius) {
  std::vector<Complex> region;
  // Polar grid out to `radius`, log-spaced in the modulus.
  const int radii = 240;
  const int angles = 360;
  for (int i = 0; i < radii; ++i) {
    const double rad = setup.r_U * std::pow(radius / setup.r_U, (i + 0.5) / radii);
    for (int a = 0; a < angles; ++a) region.push_back(std::polar(rad, kTwoPi * (a + 0.25) / angles));
  }
  // Fine grid where V meets the disk boundary and the real axis.
  for (double x = -3.0; x <= 8.0 + 1e-12; x += 0.02)
    for (double y = -8.0; y <= 8.0 + 1e-12; y += 0.02) region.emplace_back(x, y);
  std::vector<Complex> inside;
  inside.reserve(region.size());
  for (Complex z : region)
    if (std::abs(z) <= radius && !std::isnan(expansion_lower_bound(setup, z, ExpansionMethod::punctured_disk_exact)))
      inside.push_back(z);
  return inside;
}

ExpansionCertificate expansion_certificate(const HyperbolicSetup& setup, std::span<const Complex> region,
                                           ExpansionMethod method, double K_const) {
  ExpansionCertificate cert;
  cert.method = method;
  cert.C_hat = std::numeric_limits<double>::infinity();
  for (Complex z : region) {
    const double b = expansion_lower_bound(setup, z, method, K_const);
    if (std::isnan(b)) {
      ++cert.skipped;
      continue;
    }
    ++cert.counted;
    if (b < cert.C_hat) {
      cert.C_hat = b;
      cert.argmin = z;
    }
  }
  if (cert.counted == 0) throw CertificateFailed("no sample of the region lies in V");
  if (!(cert.C_hat > 1.0))
    throw CertificateFailed("expansion bound " + std::to_string(cert.C_hat) + " <= 1 at z = " +
                            format_complex(cert.argmin) + " (method " + to_string(method) + ")");
  return cert;
}

int semiconj_depth(double mu, double certified_C, double tol) {
  if (!(certified_C > 1.0)) throw CertificateMissing("no certified expansion constant C > 1");
  if (!(tol > 0.0)) throw RangeError("tolerance must be positive");
  int k = 1;
  while (mu / std::pow(certified_C, k) > tol) {
    if (++k > 10000) throw DepthExceeded("semiconjugacy depth exceeds 10000 levels");
  }
  return k;
}

SemiconjSample semiconj_limit(const HyperbolicSetup& setup, std::span<const Complex> orbit, double tol,
                              double certified_C) {
  const int k = semiconj_depth(setup.mu, certified_C, tol);
  SemiconjSample s = theta_level(setup, orbit, k);
  s.certified_C = certified_C;
  s.displacement_bound = setup.mu * certified_C / (certified_C - 1.0);
  return s;
}

}  // namespace tractlab
