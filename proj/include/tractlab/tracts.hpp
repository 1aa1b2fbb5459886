#pragma once

#include <compare>
#include <ostream>
#include <string>
#include <vector>

#include "tractlab/maps.hpp"

namespace tractlab {

struct TractAddress {
  long long branch_index = 0;  // 2*pi*i translate index k
  int inner_branch = 0;        // which plane tract (sinh has two)
  auto operator<=>(const TractAddress&) const = default;
};

std::ostream& operator<<(std::ostream& os, const TractAddress& t);
std::string to_string(const TractAddress& t);

struct LiftedPath {
  std::vector<Complex> samples;
  std::vector<Complex> source_samples;
  std::vector<long long> branch_log;
  std::vector<double> params;  // curve parameter t in [0, 1] of each sample

  // CSV with columns t, source_re, source_im, lift_re, lift_im, branch.
  std::string to_csv() const;
};

// Re F(z) > Q, decided without raising.
bool domain_contains(const LogLiftModel& model, Complex z);

TractAddress tract_of(const LogLiftModel& model, Complex z);

// The branch of F^{-1} onto the given tract. For shifted_exp this is the
// closed form Log(w + R) + 2*pi*i*k; lifted models use damped Newton seeded by
// continuation from the base point Q + 1.
Complex inverse_branch(const LogLiftModel& model, TractAddress tract, Complex w);

// Continuous lift of a curve in the target half-plane, starting in `start`.
LiftedPath lift_path(const LogLiftModel& model, TractAddress start, const std::vector<Complex>& path);

}  // namespace tractlab
