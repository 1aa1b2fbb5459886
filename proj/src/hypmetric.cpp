#include "tractlab/hypmetric.hpp"

#include <cmath>
#include <limits>

#include "tractlab/errors.hpp"

namespace tractlab {

std::string to_string(DensityMethod method) {
  switch (method) {
    case DensityMethod::half_plane_exact: return "half_plane_exact";
    case DensityMethod::standard_estimate: return "standard_estimate";
    case DensityMethod::two_puncture: return "two_puncture";
    case DensityMethod::inscribed_disk: return "inscribed_disk";
    case DensityMethod::punctured_sequence: return "punctured_sequence";
    case DensityMethod::punctured_disk_exact: return "punctured_disk_exact";
  }
  return "unknown";
}

double rho_half_plane(double Q, Complex z) {
  require_finite(z, "z");
  const double d = z.real() - Q;
  if (!(d > 0.0)) throw RangeError("point is not inside the half-plane");
  return 1.0 / d;
}

double dist_half_plane(double Q, Complex z, Complex w) {
  require_finite(z, "z");
  require_finite(w, "w");
  const double dz = z.real() - Q;
  const double dw = w.real() - Q;
  if (!(dz > 0.0) || !(dw > 0.0)) throw RangeError("point is not inside the half-plane");
  // cosh d = 1 + |z-w|^2 / (2 dz dw), written through sinh(d/2) for accuracy.
  return 2.0 * std::asinh(std::abs(z - w) / (2.0 * std::sqrt(dz * dw)));
}

DensityBound half_plane_density(double Q, Complex z) {
  const double rho = rho_half_plane(Q, z);
  return {rho, rho, DensityMethod::half_plane_exact, false};
}

DensityBound standard_estimate_bound(double d) {
  if (!(d > 0.0) || !std::isfinite(d)) throw RangeError("distance to the boundary must be positive");
  return {1.0 / (2.0 * d), 2.0 / d, DensityMethod::standard_estimate, true};
}

DensityBound inscribed_disk_bound(double d) {
  if (!(d > 0.0) || !std::isfinite(d)) throw RangeError("distance to the boundary must be positive");
  return {0.0, 2.0 / d, DensityMethod::inscribed_disk, false};
}

double two_puncture_upper(Complex a, Complex b, Complex z, double K) {
  require_finite(a, "a");
  require_finite(b, "b");
  require_finite(z, "z");
  if (!(K > 0.0)) throw RangeError("K must be positive");
  if (a == b) throw RangeError("punctures coincide");
  if (z == a || z == b) throw RangeError("z lies on a puncture");
  if (std::abs(z - b) < std::abs(z - a)) std::swap(a, b);
  const double near = std::abs(z - a);
  return K * near * (1.0 + std::abs(std::log(std::abs(b - a) / near)));
}

PuncturedSequenceBound punctured_sequence_upper(std::span<const Complex> punctures, double ratio_C, Complex z,
                                                double K) {
  require_finite(z, "z");
  if (punctures.empty()) throw RangeError("no punctures given");
  if (!(ratio_C > 1.0)) throw RangeError("ratio C must exceed 1");
  for (std::size_t j = 0; j + 1 < punctures.size(); ++j)
    if (std::abs(punctures[j + 1]) > ratio_C * std::abs(punctures[j]))
      throw RangeError("puncture ratio hypothesis |w_{j+1}| <= C |w_j| fails at j = " + std::to_string(j));
  if (std::abs(z) < std::abs(punctures.front())) throw RangeError("|z| is below |w_0|");

  // Nearest puncture; ties go to the smaller modulus (0 first).
  Complex a = 0.0;
  double best = std::abs(z);
  for (Complex w : punctures) {
    const double d = std::abs(z - w);
    if (d < best || (d == best && std::abs(w) < std::abs(a))) {
      best = d;
      a = w;
    }
  }
  if (best == 0.0) throw RangeError("z lies on a puncture");

  auto first_beyond = [&](double radius) {
    for (Complex w : punctures)
      if (std::abs(w) >= radius) return w;
    throw RangeError("puncture list too short for |z| = " + std::to_string(std::abs(z)));
  };

  PuncturedSequenceBound out;
  out.a = a;
  if (a == Complex(0.0, 0.0)) {
    out.selection_case = 1;
    out.b = first_beyond(std::abs(z));
  } else if (best > std::abs(a) / 2.0) {
    out.selection_case = 2;
    out.b = first_beyond(3.0 * best);
  } else {
    out.selection_case = 3;
    out.b = 0.0;
  }
  out.value = two_puncture_upper(out.a, out.b, z, K);
  return out;
}

double rho_disk_exterior(double r, Complex z) {
  require_finite(z, "z");
  if (!(r > 0.0)) throw RangeError("disk radius must be positive");
  const double m = std::abs(z);
  if (!(m > r)) throw RangeError("point is not outside the disk");
  return 1.0 / (m * std::log(m / r));
}

double inverse_rho_disk_exterior_from_log(double r, double log_abs_z) {
  const double l = log_abs_z - std::log(r);
  if (!(l > 0.0)) throw RangeError("point is not outside the disk");
  // |z| log(|z|/r), saturating to +inf when |z| overflows.
  return std::exp(log_abs_z) * l;
}

double hyperbolic_derivative(const LogLiftModel& model, Complex z) {
  const double Q = model.half_plane_Q();
  if (!(z.real() > Q)) throw RangeError("z is not in the half-plane");
  const Complex Fz = eval_F(model, z);
  return std::abs(eval_dF(model, z)) * (z.real() - Q) / (Fz.real() - Q);
}

}  // namespace tractlab
