#pragma once

#include <complex>
#include <numbers>
#include <string>
#include <string_view>

namespace tractlab {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Largest real part accepted before exp() is evaluated.
inline constexpr double kOverflowGuard = 700.0;

inline bool is_finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

// Throws RangeError naming `what` when z has a NaN or infinite component.
void require_finite(Complex z, std::string_view what);

// Accepts "a", "a+bi", "a-bi", "bi", "i", with optional spaces and 'j' for 'i'.
Complex parse_complex(std::string_view text);

// Round-trippable text form, e.g. "0.3+0.2i".
std::string format_complex(Complex z);

}  // namespace tractlab
