#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "tractlab/maps.hpp"
#include "tractlab/tracts.hpp"

namespace tractlab {

enum class EscapeFlag { stayed_in_JQ, left_domain, overflowed };

std::string to_string(EscapeFlag flag);

struct OrbitRecord {
  std::vector<Complex> points;
  int horizon = 0;
  double min_re_after_first = 0.0;
  EscapeFlag flag = EscapeFlag::stayed_in_JQ;
  int flag_step = -1;  // step at which the orbit left V or overflowed
  // Set when iteration stopped at the overflow guard on a real orbit of a real
  // map above its fixed point. Such an orbit increases monotonically for ever,
  // so membership is certified up to the horizon even though the later points
  // are not representable; `points` then ends at the last finite point.
  bool real_ray_tail = false;

  bool in_JQ() const { return flag == EscapeFlag::stayed_in_JQ; }
};

struct ExternalAddress {
  std::vector<TractAddress> entries;
  bool operator==(const ExternalAddress&) const = default;
};

std::string to_string(const ExternalAddress& address);

// Iterates `horizon` times, recording whether every point after the first stays in {Re >= Q}.
OrbitRecord iterate(const LogLiftModel& model, Complex z, int horizon, double Q);

ExternalAddress external_address(const LogLiftModel& model, Complex z, int n);

// r_k = |F^k z - F^k w| / (2^k |z - w|) for k = 0..n.
std::vector<double> expansion_ratios(const LogLiftModel& model, Complex z, Complex w, int n);

struct PeriodicPoint {
  Complex z;
  std::vector<Complex> cycle;      // z, F(z), ..., F^{p-1}(z)
  double residual = 0.0;           // |composite inverse(z) - z|
  int iterations = 0;
  std::vector<double> increments;  // |z_{m+1} - z_m| of the backward iteration
};

// Fixed point of the p-fold composition of inverse branches along `word`.
PeriodicPoint point_with_address(const LogLiftModel& model, std::span<const TractAddress> word, double Q,
                                 double tol, int max_iter = 400);

enum class PixelClass : std::uint8_t { in_JR_horizon = 0, escaped_small = 1, overflowed_large = 2 };

struct Window {
  double re_min = -4.0;
  double re_max = 4.0;
  double im_min = -4.0;
  double im_max = 4.0;
};

struct GridSpec {
  Window window;
  int width = 256;
  int height = 256;
  double escape_radius = 50.0;
  int horizon = 30;
};

struct ClassGrid {
  int width = 0;
  int height = 0;
  std::vector<PixelClass> cells;  // row-major, row 0 at Im = im_max

  PixelClass at(int col, int row) const { return cells[static_cast<std::size_t>(row) * width + col]; }
  bool black(int col, int row) const { return at(col, row) != PixelClass::escaped_small; }
  std::size_t black_count() const;
};

// Centre of pixel (col, row). Symmetric windows give exactly antisymmetric centres.
Complex pixel_center(const GridSpec& spec, int col, int row);

PixelClass classify_point(const EntireMapSpec& map, Complex z, double escape_radius, int horizon);

// Data-parallel over rows; `workers` = 0 picks the configured default.
ClassGrid classify_grid(const EntireMapSpec& map, const GridSpec& spec, unsigned workers = 0);

}  // namespace tractlab
