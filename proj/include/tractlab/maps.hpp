#pragma once

#include <optional>
#include <string>

#include "tractlab/complex.hpp"

namespace tractlab {

enum class EntireFamily { exp_affine, lambda_expm1, zexp, sinh, exp_plus_kappa };

std::string to_string(EntireFamily family);
EntireFamily entire_family_from_string(const std::string& name);

// A plane map f from the catalog. Exponential-type members are stored as
// coeff * e^z + shift so that their logarithm can be written down directly.
class EntireMapSpec {
 public:
  static EntireMapSpec exp_affine(Complex a, Complex b);
  static EntireMapSpec lambda_expm1(Complex lambda);
  static EntireMapSpec zexp();
  static EntireMapSpec sinh(Complex lambda);
  static EntireMapSpec exp_plus_kappa(Complex kappa);

  EntireFamily family() const { return family_; }
  Complex coeff() const { return coeff_; }
  Complex shift() const { return shift_; }
  // The user-facing parameter: a, lambda or kappa (zero for zexp).
  Complex parameter() const;

  Complex eval(Complex z) const;
  Complex derivative(Complex z) const;

  // A logarithm of f(z) that is continuous along each tract. It differs from the
  // principal Log(f(z)) by a multiple of 2*pi*i and never wraps inside a tract.
  Complex log_eval(Complex z) const;
  // f'(z) / f(z), evaluated without overflow.
  Complex log_derivative(Complex z) const;

  // max |s| over the singular values s of f together with f(0).
  double singular_radius() const;

  // Number of logarithmic tracts (two for sinh, one otherwise) and the
  // asymptotic argument of each in the plane.
  int tract_count() const { return family_ == EntireFamily::sinh ? 2 : 1; }
  double tract_direction(int inner) const { return inner == 1 ? kPi : 0.0; }

  std::string describe() const;

 private:
  EntireMapSpec(EntireFamily family, Complex coeff, Complex shift);
  bool exponential_type() const;

  EntireFamily family_;
  Complex coeff_;
  Complex shift_;
};

enum class ModelFamily { shifted_exp, lifted_entire };

struct NewtonSettings {
  double tol = 1e-12;
  int max_iter = 50;
};

// A member of class B_log restricted to a half-plane target {Re > Q}.
//
// With u = z + offset + kappa the map is F(z) = F_base(u) - offset, where
// F_base(u) = e^u - R (shifted_exp) or a continuous logarithm of f(e^u)
// (lifted_entire). normalize() chooses `offset`; shifted_by() sets kappa.
class LogLiftModel {
 public:
  static LogLiftModel shifted_exp(double R = 10.0, double Q = 0.0);
  static LogLiftModel lifted_entire(const EntireMapSpec& map, NewtonSettings newton = {},
                                    std::optional<double> Q = std::nullopt);

  ModelFamily family() const { return family_; }
  double R() const { return R_; }
  const EntireMapSpec& map() const { return map_; }
  const NewtonSettings& newton() const { return newton_; }
  double half_plane_Q() const { return Q_; }
  double offset() const { return offset_; }
  Complex kappa() const { return kappa_; }

  // F_kappa(z) = F(z + kappa); composes with any existing translation.
  LogLiftModel shifted_by(Complex kappa) const;
  // Restricts to {Re F_base > s + Q_base} and conjugates by z -> z - s. The
  // result has target {Re > 0}.
  LogLiftModel with_offset(double s) const;

  // Smallest Q the base map admits (lifted models need |f| beyond the singular values).
  double minimal_Q() const { return minimal_Q_; }

  std::string describe() const;

 private:
  LogLiftModel() = default;

  ModelFamily family_ = ModelFamily::shifted_exp;
  double R_ = 10.0;
  EntireMapSpec map_ = EntireMapSpec::zexp();
  NewtonSettings newton_{};
  double Q_ = 0.0;
  double minimal_Q_ = 0.0;
  double offset_ = 0.0;
  Complex kappa_{0.0, 0.0};
};

// F_kappa(z) = F_0(z + kappa); evaluation goes through the same code path as the base.
struct KappaFamilyMember {
  LogLiftModel base;
  Complex kappa;
  LogLiftModel model() const { return base.shifted_by(kappa); }
};

// Value of the untranslated base map at u (no domain check). Throws
// OverflowError when Re u exceeds the exponent guard.
Complex eval_base(const LogLiftModel& model, Complex u);

Complex eval_F(const LogLiftModel& model, Complex z);
Complex eval_F(const KappaFamilyMember& member, Complex z);
Complex eval_dF(const LogLiftModel& model, Complex z);
Complex eval_dF(const KappaFamilyMember& member, Complex z);

struct NormalizationResult {
  LogLiftModel model;
  double offset = 0.0;
  double min_derivative = 0.0;  // min |F'| over the certificate sample
  std::size_t sample_size = 0;
};

// Finds the smallest offset in [lo, hi] (to bisection accuracy) for which
// |F'| >= 2 on a deterministic sample of the restricted domain.
NormalizationResult normalize(const LogLiftModel& model, double lo = 0.0, double hi = 50.0,
                              std::size_t sample_size = 1000);

// Minimum of |F'| over `count` deterministic domain points of the model.
double sampled_min_derivative(const LogLiftModel& model, std::size_t count, unsigned seed = 7);

}  // namespace tractlab
