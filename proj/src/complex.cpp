#include "tractlab/complex.hpp"

#include <cstdlib>
#include <iomanip>
#include <limits>
#include <sstream>

#include "tractlab/errors.hpp"

namespace tractlab {

void require_finite(Complex z, std::string_view what) {
  if (!is_finite(z)) throw RangeError(std::string(what) + " must be finite");
}

namespace {

double parse_real(const std::string& text, std::string_view original) {
  if (text.empty()) throw RangeError("cannot parse complex number '" + std::string(original) + "'");
  char* end = nullptr;
  const double value = std::strtod(text.c_str(), &end);
  if (end != text.c_str() + text.size())
    throw RangeError("cannot parse complex number '" + std::string(original) + "'");
  return value;
}

}  // namespace

Complex parse_complex(std::string_view text) {
  std::string s;
  for (char c : text)
    if (c != ' ' && c != '\t') s.push_back(c);
  if (s.empty()) throw RangeError("cannot parse empty complex number");

  Complex z;
  const char last = s.back();
  if (last != 'i' && last != 'j') {
    z = {parse_real(s, text), 0.0};
  } else {
    s.pop_back();
    // Split at the last sign that is not part of an exponent and not leading.
    std::size_t split = std::string::npos;
    for (std::size_t i = s.size(); i-- > 1;) {
      if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
        split = i;
        break;
      }
    }
    std::string re_part = split == std::string::npos ? "" : s.substr(0, split);
    std::string im_part = split == std::string::npos ? s : s.substr(split);
    if (im_part.empty() || im_part == "+") im_part = "1";
    if (im_part == "-") im_part = "-1";
    z = {re_part.empty() ? 0.0 : parse_real(re_part, text), parse_real(im_part, text)};
  }
  require_finite(z, "complex literal");
  return z;
}

std::string format_complex(Complex z) {
  std::ostringstream os;
  os << std::setprecision(std::numeric_limits<double>::max_digits10) << z.real();
  if (!std::signbit(z.imag())) os << '+';
  os << z.imag() << 'i';
  return os.str();
}

}  // namespace tractlab
