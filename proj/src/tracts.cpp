#include "tractlab/tracts.hpp"

#include <cmath>
#include <iomanip>
#include <limits>
#include <optional>
#include <sstream>

#include "tractlab/errors.hpp"

namespace tractlab {

std::ostream& operator<<(std::ostream& os, const TractAddress& t) {
  os << t.branch_index;
  if (t.inner_branch != 0) os << '/' << t.inner_branch;
  return os;
}

std::string to_string(const TractAddress& t) {
  std::ostringstream os;
  os << t;
  return os.str();
}

std::string LiftedPath::to_csv() const {
  std::ostringstream os;
  os << std::setprecision(17) << "t,source_re,source_im,lift_re,lift_im,branch\n";
  for (std::size_t i = 0; i < samples.size(); ++i)
    os << params[i] << ',' << source_samples[i].real() << ',' << source_samples[i].imag() << ','
       << samples[i].real() << ',' << samples[i].imag() << ',' << branch_log[i] << '\n';
  return os.str();
}

namespace {

Complex translation(const LogLiftModel& model) { return model.offset() + model.kappa(); }

int inner_of(const LogLiftModel& model, Complex u) {
  if (model.family() != ModelFamily::lifted_entire || model.map().tract_count() == 1) return 0;
  return std::cos(u.imag()) < 0.0 ? 1 : 0;
}

long long branch_of(const LogLiftModel& model, Complex u, int inner) {
  const double dir = model.family() == ModelFamily::lifted_entire ? model.map().tract_direction(inner) : 0.0;
  return static_cast<long long>(std::floor((u.imag() - dir + kPi) / kTwoPi));
}

// Does the plane point zeta lie on the side of the plane tract `inner`?
bool plane_side_ok(const EntireMapSpec& f, Complex zeta, int inner) {
  if (f.tract_count() == 1) return true;
  return inner == 1 ? zeta.real() < 0.0 : zeta.real() > 0.0;
}

// Damped Newton for log_eval(zeta) = v.
std::optional<Complex> newton_plane(const EntireMapSpec& f, Complex v, Complex seed, int inner,
                                    const NewtonSettings& ns) {
  Complex zeta = seed;
  Complex h = f.log_eval(zeta) - v;
  if (!is_finite(h)) return std::nullopt;
  for (int it = 0; it < ns.max_iter; ++it) {
    if (std::abs(h) <= ns.tol * std::max(1.0, std::abs(v)))
      return plane_side_ok(f, zeta, inner) ? std::optional<Complex>(zeta) : std::nullopt;
    const Complex step = h / f.log_derivative(zeta);
    if (!is_finite(step)) return std::nullopt;
    bool accepted = false;
    for (double damp = 1.0; damp > 1.0 / 1024.0; damp *= 0.5) {
      const Complex trial = zeta - damp * step;
      const Complex ht = f.log_eval(trial) - v;
      if (is_finite(ht) && std::abs(ht) < std::abs(h)) {
        zeta = trial;
        h = ht;
        accepted = true;
        break;
      }
    }
    if (!accepted) return std::nullopt;
  }
  if (std::abs(h) <= ns.tol * std::max(1.0, std::abs(v)) && plane_side_ok(f, zeta, inner)) return zeta;
  return std::nullopt;
}

Complex asymptotic_seed(const EntireMapSpec& f, Complex v, int inner) {
  switch (f.family()) {
    case EntireFamily::zexp: {
      Complex zeta = v;
      for (int i = 0; i < 8; ++i) zeta = v - std::log(zeta + 1.0);
      return zeta;
    }
    case EntireFamily::sinh:
      return inner == 1 ? -(v - std::log(-f.coeff() / 2.0)) : v - std::log(f.coeff() / 2.0);
    default:
      return v - std::log(f.coeff());
  }
}

// Plane preimage of v (base coordinates) in the plane tract `inner`.
Complex plane_preimage(const LogLiftModel& model, Complex v, int inner) {
  const EntireMapSpec& f = model.map();
  const NewtonSettings& ns = model.newton();
  if (auto direct = newton_plane(f, v, asymptotic_seed(f, v, inner), inner, ns)) return *direct;

  // Continuation from the base point Q + 1 along the straight segment to v.
  const Complex vb = model.half_plane_Q() + 1.0 + model.offset();
  auto current = newton_plane(f, vb, asymptotic_seed(f, vb, inner), inner, ns);
  if (!current) throw NewtonDiverged("Newton failed at the tract base point");
  double t = 0.0;
  double dt = 1.0 / 16.0;
  while (t < 1.0) {
    const double t_next = std::min(1.0, t + dt);
    const Complex target = vb + t_next * (v - vb);
    if (auto next = newton_plane(f, target, *current, inner, ns)) {
      current = next;
      t = t_next;
      dt = std::min(0.25, dt * 2.0);
    } else {
      dt *= 0.5;
      if (dt < 1e-10) throw NewtonDiverged("continuation from the base point stalled");
    }
  }
  return *current;
}

// Log-coordinate u of a plane point in tract (k, inner).
Complex lift_plane_point(const LogLiftModel& model, Complex zeta, TractAddress t) {
  const double dir = model.map().tract_direction(t.inner_branch);
  const Complex rotated = zeta * std::polar(1.0, -dir);
  return std::log(rotated) + Complex(0.0, dir + kTwoPi * static_cast<double>(t.branch_index));
}

void require_in_half_plane(const LogLiftModel& model, Complex w) {
  require_finite(w, "w");
  if (!(w.real() > model.half_plane_Q()))
    throw RangeError("w = " + format_complex(w) + " is not in the target half-plane");
}

}  // namespace

bool domain_contains(const LogLiftModel& model, Complex z) {
  if (!is_finite(z)) return false;
  const Complex u = z + translation(model);
  if (u.real() > kOverflowGuard) {
    // Only the sign of Re(e^u) matters this far out.
    const double c = std::cos(u.imag());
    if (model.family() == ModelFamily::lifted_entire && model.map().family() == EntireFamily::sinh) return c != 0.0;
    return c > 0.0;
  }
  const Complex F = eval_base(model, u) - model.offset();
  return std::isfinite(F.real()) && F.real() > model.half_plane_Q();
}

TractAddress tract_of(const LogLiftModel& model, Complex z) {
  if (!domain_contains(model, z)) throw DomainError("point " + format_complex(z) + " is outside the domain V");
  const Complex u = z + translation(model);
  const int inner = inner_of(model, u);
  return {branch_of(model, u, inner), inner};
}

Complex inverse_branch(const LogLiftModel& model, TractAddress tract, Complex w) {
  require_in_half_plane(model, w);
  const Complex v = w + model.offset();
  const Complex k_shift(0.0, kTwoPi * static_cast<double>(tract.branch_index));
  if (model.family() == ModelFamily::shifted_exp) {
    if (tract.inner_branch != 0) throw DomainError("shifted_exp has a single tract family");
    return std::log(v + model.R()) + k_shift - translation(model);
  }
  if (tract.inner_branch < 0 || tract.inner_branch >= model.map().tract_count())
    throw DomainError("no plane tract with index " + std::to_string(tract.inner_branch));
  const Complex zeta = plane_preimage(model, v, tract.inner_branch);
  return lift_plane_point(model, zeta, tract) - translation(model);
}

LiftedPath lift_path(const LogLiftModel& model, TractAddress start, const std::vector<Complex>& path) {
  if (path.empty()) throw RangeError("lift_path: empty path");
  for (Complex w : path) require_in_half_plane(model, w);

  LiftedPath out;
  const bool lifted = model.family() == ModelFamily::lifted_entire;
  const Complex shift = translation(model);

  // Lift of a single source point continuing from `prev` (log coordinates, translated).
  long long k = start.branch_index;
  Complex prev_zeta;
  auto lift_near = [&](Complex w, Complex prev_z, long long& branch, Complex& zeta) -> std::optional<Complex> {
    const Complex v = w + model.offset();
    Complex principal;
    if (lifted) {
      auto z = newton_plane(model.map(), v, zeta, start.inner_branch, model.newton());
      if (!z) return std::nullopt;
      zeta = *z;
      principal = lift_plane_point(model, zeta, {0, start.inner_branch}) - shift;
    } else {
      principal = std::log(v + model.R()) - shift;
    }
    branch = static_cast<long long>(std::llround((prev_z.imag() - principal.imag()) / kTwoPi));
    return principal + Complex(0.0, kTwoPi * static_cast<double>(branch));
  };

  const Complex first = inverse_branch(model, start, path.front());
  if (lifted) prev_zeta = std::exp(first + shift);
  out.samples.push_back(first);
  out.source_samples.push_back(path.front());
  out.branch_log.push_back(k);
  out.params.push_back(0.0);

  const double n = path.size() > 1 ? static_cast<double>(path.size() - 1) : 1.0;
  for (std::size_t i = 1; i < path.size(); ++i) {
    // Work queue of sub-steps between the previous accepted point and path[i].
    std::vector<std::pair<Complex, double>> pending{{path[i], static_cast<double>(i) / n}};
    Complex from_w = out.source_samples.back();
    double from_t = out.params.back();
    int refinements = 0;
    while (!pending.empty()) {
      const auto [w, t] = pending.back();
      long long branch = k;
      Complex zeta = prev_zeta;
      auto lifted_point = lift_near(w, out.samples.back(), branch, zeta);
      if (!lifted_point || std::abs(*lifted_point - out.samples.back()) > kPi / 2.0) {
        if (++refinements > 4000) throw ContinuationError("lift_path: refinement limit reached");
        const Complex mid_w = 0.5 * (from_w + w);
        if (std::abs(mid_w - from_w) < 1e-13 * (1.0 + std::abs(w)))
          throw ContinuationError("lift_path: branch continuity lost near " + format_complex(w));
        pending.emplace_back(mid_w, 0.5 * (from_t + t));
        continue;
      }
      pending.pop_back();
      k = branch;
      prev_zeta = zeta;
      out.samples.push_back(*lifted_point);
      out.source_samples.push_back(w);
      out.branch_log.push_back(k);
      out.params.push_back(t);
      from_w = w;
      from_t = t;
    }
  }
  return out;
}

}  // namespace tractlab
