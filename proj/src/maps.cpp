#include "tractlab/maps.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "tractlab/errors.hpp"
#include "tractlab/tracts.hpp"

namespace tractlab {

namespace {

// log(1 + x) without cancellation for small |x|.
Complex log1p_c(Complex x) {
  const Complex u = 1.0 + x;
  if (u == Complex(1.0, 0.0)) return x;
  return std::log(u) * x / (u - 1.0);
}

Complex sinh_c(Complex z) {
  return {std::sinh(z.real()) * std::cos(z.imag()), std::cosh(z.real()) * std::sin(z.imag())};
}

Complex cosh_c(Complex z) {
  return {std::cosh(z.real()) * std::cos(z.imag()), std::sinh(z.real()) * std::sin(z.imag())};
}

}  // namespace

std::string to_string(EntireFamily family) {
  switch (family) {
    case EntireFamily::exp_affine: return "exp_affine";
    case EntireFamily::lambda_expm1: return "lambda_expm1";
    case EntireFamily::zexp: return "zexp";
    case EntireFamily::sinh: return "sinh";
    case EntireFamily::exp_plus_kappa: return "exp_plus_kappa";
  }
  return "unknown";
}

EntireFamily entire_family_from_string(const std::string& name) {
  for (auto f : {EntireFamily::exp_affine, EntireFamily::lambda_expm1, EntireFamily::zexp, EntireFamily::sinh,
                 EntireFamily::exp_plus_kappa})
    if (to_string(f) == name) return f;
  throw ConfigError("unknown map family '" + name + "'");
}

EntireMapSpec::EntireMapSpec(EntireFamily family, Complex coeff, Complex shift)
    : family_(family), coeff_(coeff), shift_(shift) {
  require_finite(coeff, "map parameter");
  require_finite(shift, "map parameter");
  if (coeff == Complex(0.0, 0.0)) throw RangeError("map coefficient must be nonzero");
}

EntireMapSpec EntireMapSpec::exp_affine(Complex a, Complex b) { return {EntireFamily::exp_affine, a, b}; }
EntireMapSpec EntireMapSpec::lambda_expm1(Complex lambda) { return {EntireFamily::lambda_expm1, lambda, -lambda}; }
EntireMapSpec EntireMapSpec::zexp() { return {EntireFamily::zexp, 1.0, 0.0}; }
EntireMapSpec EntireMapSpec::sinh(Complex lambda) { return {EntireFamily::sinh, lambda, 0.0}; }
EntireMapSpec EntireMapSpec::exp_plus_kappa(Complex kappa) { return {EntireFamily::exp_plus_kappa, 1.0, kappa}; }

bool EntireMapSpec::exponential_type() const {
  return family_ == EntireFamily::exp_affine || family_ == EntireFamily::lambda_expm1 ||
         family_ == EntireFamily::exp_plus_kappa;
}

Complex EntireMapSpec::parameter() const {
  switch (family_) {
    case EntireFamily::exp_affine:
    case EntireFamily::lambda_expm1:
    case EntireFamily::sinh: return coeff_;
    case EntireFamily::exp_plus_kappa: return shift_;
    case EntireFamily::zexp: return 0.0;
  }
  return 0.0;
}

Complex EntireMapSpec::eval(Complex z) const {
  if (exponential_type()) return coeff_ * std::exp(z) + shift_;
  if (family_ == EntireFamily::sinh) return coeff_ * sinh_c(z);
  return (z + 1.0) * std::exp(z) - 1.0;
}

Complex EntireMapSpec::derivative(Complex z) const {
  if (exponential_type()) return coeff_ * std::exp(z);
  if (family_ == EntireFamily::sinh) return coeff_ * cosh_c(z);
  return (z + 2.0) * std::exp(z);
}

Complex EntireMapSpec::log_eval(Complex z) const {
  if (exponential_type()) {
    if (shift_ == Complex(0.0, 0.0)) return std::log(coeff_) + z;
    const Complex c = shift_ / coeff_;
    if (std::log(std::abs(c)) - z.real() < 0.0) return std::log(coeff_) + z + log1p_c(c * std::exp(-z));
    return std::log(eval(z));
  }
  if (family_ == EntireFamily::zexp) {
    const Complex zp1 = z + 1.0;
    if (zp1 != Complex(0.0, 0.0) && -z.real() - std::log(std::abs(zp1)) < 0.0)
      return z + std::log(zp1) + log1p_c(-std::exp(-z) / zp1);
    return std::log(eval(z));
  }
  // sinh: lambda sinh z = (lambda/2) e^{+-z} (1 - e^{-+2z}) on the right/left tract.
  if (z.real() > 0.5) return std::log(coeff_ / 2.0) + z + log1p_c(-std::exp(-2.0 * z));
  if (z.real() < -0.5) return std::log(-coeff_ / 2.0) - z + log1p_c(-std::exp(2.0 * z));
  return std::log(eval(z));
}

Complex EntireMapSpec::log_derivative(Complex z) const {
  if (exponential_type()) {
    const Complex c = shift_ / coeff_;
    if (z.real() > -600.0) return 1.0 / (1.0 + c * std::exp(-z));
    return coeff_ * std::exp(z) / eval(z);
  }
  if (family_ == EntireFamily::zexp) {
    if (z.real() > -600.0) return (z + 2.0) / (z + 1.0 - std::exp(-z));
    return (z + 2.0) * std::exp(z) / eval(z);
  }
  return 1.0 / std::tanh(z);
}

double EntireMapSpec::singular_radius() const {
  if (exponential_type()) return std::max(std::abs(shift_), std::abs(coeff_ + shift_));
  if (family_ == EntireFamily::zexp) return 1.0 + std::exp(-2.0);
  return std::abs(coeff_);
}

std::string EntireMapSpec::describe() const {
  std::ostringstream os;
  os << to_string(family_);
  switch (family_) {
    case EntireFamily::exp_affine: os << "(a=" << format_complex(coeff_) << ", b=" << format_complex(shift_) << ")"; break;
    case EntireFamily::lambda_expm1:
    case EntireFamily::sinh: os << "(lambda=" << format_complex(coeff_) << ")"; break;
    case EntireFamily::exp_plus_kappa: os << "(kappa=" << format_complex(shift_) << ")"; break;
    case EntireFamily::zexp: break;
  }
  return os.str();
}

LogLiftModel LogLiftModel::shifted_exp(double R, double Q) {
  // R >= 2 gives a normalized model; smaller R is accepted so normalize() can repair it.
  if (!std::isfinite(R) || R <= 0.0) throw RangeError("shifted_exp requires R > 0");
  if (!std::isfinite(Q) || Q < 0.0) throw RangeError("half-plane Q must be finite and >= 0");
  LogLiftModel m;
  m.family_ = ModelFamily::shifted_exp;
  m.R_ = R;
  m.Q_ = Q;
  return m;
}

LogLiftModel LogLiftModel::lifted_entire(const EntireMapSpec& map, NewtonSettings newton, std::optional<double> Q) {
  if (!(newton.tol > 0.0) || newton.max_iter < 1) throw RangeError("invalid Newton settings");
  LogLiftModel m;
  m.family_ = ModelFamily::lifted_entire;
  m.map_ = map;
  m.newton_ = newton;
  // Tract points must satisfy |f| > 2 max|singular value| so that the
  // continuous logarithm in log_eval never meets its fallback branch.
  m.minimal_Q_ = std::max(0.0, std::log(2.0 * map.singular_radius()));
  m.Q_ = Q.value_or(m.minimal_Q_);
  if (!std::isfinite(m.Q_) || m.Q_ < m.minimal_Q_)
    throw RangeError("half-plane Q below the singular-value bound for " + map.describe());
  return m;
}

LogLiftModel LogLiftModel::shifted_by(Complex kappa) const {
  require_finite(kappa, "kappa");
  LogLiftModel m = *this;
  m.kappa_ += kappa;
  return m;
}

LogLiftModel LogLiftModel::with_offset(double s) const {
  if (!std::isfinite(s) || s < Q_) throw RangeError("normalization offset must be >= the current Q");
  LogLiftModel m = *this;
  m.offset_ += s;
  m.Q_ = 0.0;
  m.minimal_Q_ = 0.0;
  return m;
}

std::string LogLiftModel::describe() const {
  std::ostringstream os;
  if (family_ == ModelFamily::shifted_exp)
    os << "shifted_exp(R=" << R_ << ")";
  else
    os << "lifted_entire(" << map_.describe() << ")";
  os << " Q=" << Q_;
  if (offset_ != 0.0) os << " offset=" << offset_;
  if (kappa_ != Complex(0.0, 0.0)) os << " kappa=" << format_complex(kappa_);
  return os.str();
}

Complex eval_base(const LogLiftModel& model, Complex u) {
  if (u.real() > kOverflowGuard) throw OverflowError("Re of argument exceeds the exponent guard");
  if (model.family() == ModelFamily::shifted_exp) return std::exp(u) - model.R();
  return model.map().log_eval(std::exp(u));
}

Complex eval_F(const LogLiftModel& model, Complex z) {
  require_finite(z, "z");
  const Complex u = z + model.offset() + model.kappa();
  if (u.real() > kOverflowGuard) throw OverflowError("Re z exceeds the exponent guard");
  if (!domain_contains(model, z)) throw DomainError("point " + format_complex(z) + " is outside the domain V");
  return eval_base(model, u) - model.offset();
}

Complex eval_F(const KappaFamilyMember& member, Complex z) { return eval_F(member.model(), z); }

Complex eval_dF(const LogLiftModel& model, Complex z) {
  require_finite(z, "z");
  const Complex u = z + model.offset() + model.kappa();
  if (u.real() > kOverflowGuard) throw OverflowError("Re z exceeds the exponent guard");
  if (!domain_contains(model, z)) throw DomainError("point " + format_complex(z) + " is outside the domain V");
  const Complex zeta = std::exp(u);
  if (model.family() == ModelFamily::shifted_exp) return zeta;
  return zeta * model.map().log_derivative(zeta);
}

Complex eval_dF(const KappaFamilyMember& member, Complex z) { return eval_dF(member.model(), z); }

double sampled_min_derivative(const LogLiftModel& model, std::size_t count, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> depth(-4.0, 1.5);
  std::uniform_real_distribution<double> height(-30.0, 30.0);
  std::uniform_int_distribution<int> branch(-3, 3);
  std::uniform_int_distribution<int> inner(0, model.family() == ModelFamily::lifted_entire
                                                  ? model.map().tract_count() - 1
                                                  : 0);
  double lowest = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < count; ++i) {
    const Complex w{model.half_plane_Q() + std::pow(10.0, depth(rng)), height(rng)};
    const TractAddress t{branch(rng), inner(rng)};
    const Complex z = inverse_branch(model, t, w);
    lowest = std::min(lowest, std::abs(eval_dF(model, z)));
  }
  return lowest;
}

NormalizationResult normalize(const LogLiftModel& model, double lo, double hi, std::size_t sample_size) {
  if (!(lo <= hi)) throw RangeError("normalize: empty search range");
  const double start = std::max(lo, model.half_plane_Q());
  if (start > hi) throw SearchFailed("normalize: search range lies below the model's half-plane");

  auto certified = [&](double s) {
    try {
      return sampled_min_derivative(model.with_offset(s), sample_size) >= 2.0;
    } catch (const Error&) {
      return false;
    }
  };

  NormalizationResult result{model, 0.0, 0.0, sample_size};
  double s = start;
  if (!certified(start)) {
    if (!certified(hi)) throw SearchFailed("normalize: no offset in range certifies |F'| >= 2");
    double bad = start;
    double good = hi;
    while (good - bad > 1e-9 * (1.0 + good)) {
      const double mid = 0.5 * (bad + good);
      (certified(mid) ? good : bad) = mid;
    }
    // A small margin keeps the certificate valid on independent samples.
    s = std::min(hi, good + 1e-3 * (1.0 + good));
  }
  result.model = model.with_offset(s);
  result.offset = result.model.offset();
  result.min_derivative = sampled_min_derivative(result.model, sample_size);
  return result;
}

}  // namespace tractlab
