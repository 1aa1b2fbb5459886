#include "tractlab/orbits.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "tractlab/errors.hpp"
#include "tractlab/parallel.hpp"

namespace tractlab {

std::string to_string(EscapeFlag flag) {
  switch (flag) {
    case EscapeFlag::stayed_in_JQ: return "stayed_in_JQ";
    case EscapeFlag::left_domain: return "left_domain";
    case EscapeFlag::overflowed: return "overflowed";
  }
  return "unknown";
}

std::string to_string(const ExternalAddress& address) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < address.entries.size(); ++i) os << (i ? "," : "") << address.entries[i];
  os << ')';
  return os.str();
}

namespace {

bool beyond_guard(const LogLiftModel& model, Complex z) {
  return (z + model.offset() + model.kappa()).real() > kOverflowGuard;
}

// A real point past the overflow guard of a real shifted exponential: F is
// increasing on the real axis and F(x) > x there, so the orbit escapes
// monotonically along the axis and never leaves {Re >= Q}.
bool real_ray_certified(const LogLiftModel& model, Complex z, double Q) {
  return model.family() == ModelFamily::shifted_exp && model.kappa().imag() == 0.0 && z.imag() == 0.0 &&
         z.real() >= Q && beyond_guard(model, z);
}

}  // namespace

OrbitRecord iterate(const LogLiftModel& model, Complex z, int horizon, double Q) {
  if (horizon < 1) throw RangeError("iterate: horizon must be >= 1");
  OrbitRecord rec;
  rec.horizon = horizon;
  rec.points.push_back(z);
  rec.min_re_after_first = std::numeric_limits<double>::infinity();
  for (int step = 0; step < horizon; ++step) {
    const Complex current = rec.points.back();
    if (beyond_guard(model, current)) {
      if (real_ray_certified(model, current, Q)) {
        rec.real_ray_tail = true;
      } else {
        rec.flag = EscapeFlag::overflowed;
        rec.flag_step = step;
      }
      return rec;
    }
    if (!domain_contains(model, current)) {
      rec.flag = EscapeFlag::left_domain;
      rec.flag_step = step;
      return rec;
    }
    const Complex next = eval_F(model, current);
    rec.points.push_back(next);
    rec.min_re_after_first = std::min(rec.min_re_after_first, next.real());
    if (next.real() < Q) {
      rec.flag = EscapeFlag::left_domain;
      rec.flag_step = step + 1;
      return rec;
    }
  }
  return rec;
}

ExternalAddress external_address(const LogLiftModel& model, Complex z, int n) {
  if (n < 0) throw RangeError("external_address: negative depth");
  ExternalAddress out;
  Complex current = z;
  for (int i = 0; i < n; ++i) {
    if (beyond_guard(model, current)) {
      if (!real_ray_certified(model, current, model.half_plane_Q()))
        throw AddressUndefined("orbit overflowed before depth " + std::to_string(n));
      // The rest of the orbit is real, hence in the central tract.
      out.entries.resize(n, TractAddress{0, 0});
      return out;
    }
    if (!domain_contains(model, current))
      throw AddressUndefined("orbit leaves the domain at step " + std::to_string(i));
    out.entries.push_back(tract_of(model, current));
    current = eval_F(model, current);
  }
  return out;
}

std::vector<double> expansion_ratios(const LogLiftModel& model, Complex z, Complex w, int n) {
  if (n < 0) throw RangeError("expansion_ratios: negative depth");
  std::vector<double> ratios(static_cast<std::size_t>(n) + 1, 1.0);
  if (z == w) return ratios;
  const double d0 = std::abs(z - w);
  Complex a = z;
  Complex b = w;
  for (int k = 1; k <= n; ++k) {
    if (tract_of(model, a) != tract_of(model, b))
      throw AddressMismatch("itineraries diverge at step " + std::to_string(k - 1));
    a = eval_F(model, a);
    b = eval_F(model, b);
    ratios[k] = std::abs(a - b) / (std::ldexp(1.0, k) * d0);
  }
  return ratios;
}

PeriodicPoint point_with_address(const LogLiftModel& model, std::span<const TractAddress> word, double Q,
                                 double tol, int max_iter) {
  if (word.empty()) throw RangeError("point_with_address: empty address word");
  if (!(tol > 0.0)) throw RangeError("point_with_address: tol must be positive");
  const std::size_t p = word.size();
  std::vector<Complex> cycle(p);

  // One pass of the p-fold inverse composition; fills `cycle` back to front.
  auto pull_back = [&](Complex y) {
    for (std::size_t i = p; i-- > 0;) {
      try {
        y = inverse_branch(model, word[i], y);
      } catch (const RangeError&) {
        throw PullbackLeftDomain("pullback left the half-plane at " + format_complex(y));
      }
      cycle[i] = y;
    }
    return y;
  };

  PeriodicPoint out;
  Complex z{std::max(model.half_plane_Q(), Q) + 1.0, kTwoPi * static_cast<double>(word[0].branch_index)};
  bool converged = false;
  for (int m = 0; m < max_iter; ++m) {
    const Complex next = pull_back(z);
    const double inc = std::abs(next - z);
    out.increments.push_back(inc);
    z = next;
    ++out.iterations;
    if (inc <= tol) {
      converged = true;
      break;
    }
  }
  const Complex last = pull_back(z);
  out.residual = std::abs(last - z);
  out.z = last;
  out.cycle = cycle;
  if (!converged && out.residual > tol)
    throw SearchFailed("point_with_address: tolerance not reached in " + std::to_string(max_iter) + " steps");
  for (Complex c : out.cycle)
    if (c.real() < Q) throw PullbackLeftDomain("periodic orbit leaves {Re >= Q} at " + format_complex(c));
  return out;
}

std::size_t ClassGrid::black_count() const {
  std::size_t n = 0;
  for (PixelClass c : cells) n += c != PixelClass::escaped_small;
  return n;
}

Complex pixel_center(const GridSpec& spec, int col, int row) {
  const Window& w = spec.window;
  const double fx = static_cast<double>(2 * col + 1 - spec.width) / (2.0 * spec.width);
  const double fy = static_cast<double>(2 * row + 1 - spec.height) / (2.0 * spec.height);
  return {0.5 * (w.re_max + w.re_min) + fx * (w.re_max - w.re_min),
          0.5 * (w.im_max + w.im_min) - fy * (w.im_max - w.im_min)};
}

PixelClass classify_point(const EntireMapSpec& map, Complex z, double escape_radius, int horizon) {
  for (int n = 1; n <= horizon; ++n) {
    z = map.eval(z);
    if (!is_finite(z)) return PixelClass::overflowed_large;
    if (std::abs(z) < escape_radius) return PixelClass::escaped_small;
  }
  return PixelClass::in_JR_horizon;
}

ClassGrid classify_grid(const EntireMapSpec& map, const GridSpec& spec, unsigned workers) {
  if (spec.width < 1 || spec.height < 1) throw RangeError("classify_grid: resolution must be positive");
  if (spec.horizon < 1) throw RangeError("classify_grid: horizon must be >= 1");
  if (!(spec.escape_radius > 0.0)) throw RangeError("classify_grid: escape radius must be positive");
  const Window& win = spec.window;
  if (!(win.re_min < win.re_max) || !(win.im_min < win.im_max)) throw RangeError("classify_grid: empty window");

  ClassGrid grid;
  grid.width = spec.width;
  grid.height = spec.height;
  grid.cells.assign(static_cast<std::size_t>(spec.width) * spec.height, PixelClass::escaped_small);
  parallel_for(static_cast<std::size_t>(spec.height), workers, [&](std::size_t row) {
    PixelClass* out = grid.cells.data() + row * spec.width;
    for (int col = 0; col < spec.width; ++col)
      out[col] = classify_point(map, pixel_center(spec, col, static_cast<int>(row)), spec.escape_radius,
                                spec.horizon);
  });
  return grid;
}

}  // namespace tractlab
