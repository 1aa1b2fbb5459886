#pragma once

#include <limits>
#include <span>
#include <string>

#include "tractlab/maps.hpp"

namespace tractlab {

enum class DensityMethod {
  half_plane_exact,
  standard_estimate,
  two_puncture,
  inscribed_disk,
  punctured_sequence,
  punctured_disk_exact,
};

std::string to_string(DensityMethod method);

struct DensityBound {
  double lower = 0.0;
  double upper = std::numeric_limits<double>::infinity();
  DensityMethod method = DensityMethod::inscribed_disk;
  // The lower endpoint is only valid on simply connected domains.
  bool lower_needs_simple_connectivity = false;

  bool contains(double rho) const { return lower <= rho && rho <= upper; }
};

double rho_half_plane(double Q, Complex z);
double dist_half_plane(double Q, Complex z, Complex w);
DensityBound half_plane_density(double Q, Complex z);

// [1/(2d), 2/d]; the lower end assumes simple connectivity.
DensityBound standard_estimate_bound(double dist_to_boundary);
// [0, 2/d], valid for every hyperbolic domain.
DensityBound inscribed_disk_bound(double dist_to_boundary);

// Upper bound for 1/rho of C \ {a, b} at z, up to the constant K:
// K |z-a| (1 + |log(|b-a| / |z-a|)|) with a the puncture nearer to z.
// The two punctures are swapped internally when b is nearer.
double two_puncture_upper(Complex a, Complex b, Complex z, double K = 1.0);

struct PuncturedSequenceBound {
  double value = 0.0;  // upper bound for 1/rho_V(z)
  int selection_case = 0;  // 1: a = 0, 2: |z-a| > |a|/2, 3: |z-a| <= |a|/2
  Complex a;
  Complex b;
};

// Bound for 1/rho of a domain omitting 0 and every w_j, with |w_{j+1}| <= C |w_j|.
// `punctures` lists the w_j only; 0 is implicit.
PuncturedSequenceBound punctured_sequence_upper(std::span<const Complex> punctures, double ratio_C, Complex z,
                                                double K = 1.0);

// Density of {|z| > r} (a punctured disk at infinity): 1 / (|z| log(|z|/r)).
double rho_disk_exterior(double r, Complex z);
// Same quantity from log|z|, for points whose modulus overflows.
double inverse_rho_disk_exterior_from_log(double r, double log_abs_z);

// |F'(z)| (Re z - Q) / (Re F(z) - Q) with Q the model's half-plane.
double hyperbolic_derivative(const LogLiftModel& model, Complex z);

}  // namespace tractlab
