#pragma once

#include <span>
#include <string>
#include <vector>

#include "tractlab/complex.hpp"
#include "tractlab/hypmetric.hpp"
#include "tractlab/maps.hpp"

namespace tractlab {

// Hyperbolic map f = lambda (e^z - 1) with attracting fixed point 0, the disk
// U = D(0, r_U), and the rescaled map g(z) = f(z / M), M = R / K.
struct HyperbolicSetup {
  EntireMapSpec f = EntireMapSpec::lambda_expm1({0.5, 0.0});
  Complex lambda{0.5, 0.0};
  double r_U = 0.7;
  double K = 2.0;
  double R = 11.0;
  double M = 5.5;
  double mu = 0.0;                       // log(1 + log M / log 2)
  double boundary_max_modulus = 0.0;     // sampled max |f| on |z| = r_U
  double postsingular_max_modulus = 0.0;  // max over the sampled singular orbit

  Complex g(Complex z) const { return f.eval(z / M); }
  // Branch b of f^{-1}: Log(u / lambda + 1) + 2 pi i b.
  Complex f_inverse(Complex u, long long branch) const;
  Complex g_inverse(Complex w, long long branch) const { return M * f_inverse(w, branch); }
};

HyperbolicSetup build_setup(Complex lambda = {0.5, 0.0}, double r_U = 0.7, double K = 2.0, double R = 11.0);

double semiconj_mu(double M);

// Orbit w_0 .. w_n of g ending at `end`, built backwards along the given branches:
// w_j = g^{-1}_{branches[j]}(w_{j+1}).
std::vector<Complex> backward_g_orbit(const HyperbolicSetup& setup, std::span<const long long> branches,
                                      Complex end);

struct SemiconjSample {
  Complex z;
  std::vector<Complex> thetas;            // theta_0 .. theta_k at z
  std::vector<double> gamma_lengths;      // hyperbolic length estimate in W of gamma_1 .. gamma_k
  std::vector<double> increments;         // |theta_{j+1} - theta_j|
  std::vector<double> functional_residuals;  // |f(theta_{j+1}(z)) - theta_j(g z)|, j = 0..k-1
  std::vector<Complex> forward_images;    // theta_{k-j}(g^j z): the f-orbit of theta_k(z)
  Complex theta;
  int depth = 0;
  double certified_C = 0.0;
  double displacement_bound = 0.0;        // mu C / (C - 1), hyperbolic in W
};

// Builds Gamma_k(z) and reads off theta_0 .. theta_k. `orbit` holds g^j(z),
// j = 0 .. k-1 at least; the single-point overload computes it forwards.
SemiconjSample theta_level(const HyperbolicSetup& setup, std::span<const Complex> orbit, int k);
SemiconjSample theta_level(const HyperbolicSetup& setup, Complex z, int k);

enum class ExpansionMethod { punctured_disk_exact, two_puncture };

std::string to_string(ExpansionMethod method);

struct ExpansionCertificate {
  double C_hat = 0.0;
  Complex argmin;
  std::size_t counted = 0;
  std::size_t skipped = 0;  // samples outside V
  ExpansionMethod method = ExpansionMethod::punctured_disk_exact;
};

// Lower bound for ||Df||_W on a single point of V (NaN outside V).
double expansion_lower_bound(const HyperbolicSetup& setup, Complex z, ExpansionMethod method,
                             double K_const = 1.0);

// Deterministic sample of {z in V : |z| <= radius}.
std::vector<Complex> default_certificate_region(const HyperbolicSetup& setup, double radius = 1000.0);

// Throws CertificateFailed (naming the violating sample) if the bound is <= 1.
ExpansionCertificate expansion_certificate(const HyperbolicSetup& setup, std::span<const Complex> region,
                                           ExpansionMethod method = ExpansionMethod::punctured_disk_exact,
                                           double K_const = 1.0);

// Depth chosen so that mu / C^k <= tol. Throws CertificateMissing when C <= 1.
SemiconjSample semiconj_limit(const HyperbolicSetup& setup, std::span<const Complex> orbit, double tol,
                              double certified_C);
int semiconj_depth(double mu, double certified_C, double tol);

}  // namespace tractlab
