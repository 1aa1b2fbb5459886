#include "tractlab/io.hpp"

#include <cstdio>
#include <fstream>
#include <memory>
#include <sstream>

#include "tractlab/errors.hpp"

#ifdef TRACTLAB_HAVE_PNG
#include <png.h>
#endif

namespace tractlab::io {

namespace {

double number(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number()) throw ConfigError(std::string("missing numeric field '") + key + "'");
  return j.at(key).get<double>();
}

Complex complex_field(const json& j, const char* key) {
  if (!j.contains(key)) throw ConfigError(std::string("missing field '") + key + "'");
  return complex_from_json(j.at(key));
}

}  // namespace

Complex complex_from_json(const json& j) {
  Complex z;
  if (j.is_number()) {
    z = {j.get<double>(), 0.0};
  } else if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    z = {j[0].get<double>(), j[1].get<double>()};
  } else if (j.is_object() && j.contains("re")) {
    z = {j.at("re").get<double>(), j.value("im", 0.0)};
  } else if (j.is_string()) {
    try {
      z = parse_complex(j.get<std::string>());
    } catch (const RangeError& e) {
      throw ConfigError(e.what());
    }
  } else {
    throw ConfigError("cannot read a complex number from " + j.dump());
  }
  if (!is_finite(z)) throw ConfigError("complex value must be finite: " + j.dump());
  return z;
}

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

EntireMapSpec map_from_json(const json& j) {
  if (!j.is_object() || !j.contains("family")) throw ConfigError("map descriptor needs a 'family'");
  switch (entire_family_from_string(j.at("family").get<std::string>())) {
    case EntireFamily::exp_affine: return EntireMapSpec::exp_affine(complex_field(j, "a"), complex_field(j, "b"));
    case EntireFamily::lambda_expm1: return EntireMapSpec::lambda_expm1(complex_field(j, "lambda"));
    case EntireFamily::zexp: return EntireMapSpec::zexp();
    case EntireFamily::sinh: return EntireMapSpec::sinh(complex_field(j, "lambda"));
    case EntireFamily::exp_plus_kappa: return EntireMapSpec::exp_plus_kappa(complex_field(j, "kappa"));
  }
  throw ConfigError("unreachable map family");
}

json map_to_json(const EntireMapSpec& map) {
  json j{{"family", to_string(map.family())}};
  switch (map.family()) {
    case EntireFamily::exp_affine:
      j["a"] = complex_to_json(map.coeff());
      j["b"] = complex_to_json(map.shift());
      break;
    case EntireFamily::lambda_expm1:
    case EntireFamily::sinh: j["lambda"] = complex_to_json(map.coeff()); break;
    case EntireFamily::exp_plus_kappa: j["kappa"] = complex_to_json(map.shift()); break;
    case EntireFamily::zexp: break;
  }
  return j;
}

LogLiftModel model_from_json(const json& j) {
  if (!j.is_object() || !j.contains("family")) throw ConfigError("model descriptor needs a 'family'");
  const std::string family = j.at("family").get<std::string>();
  try {
    if (family == "shifted_exp") return LogLiftModel::shifted_exp(j.value("R", 10.0), j.value("Q", 0.0));
    if (family == "lifted_entire") {
      if (!j.contains("map")) throw ConfigError("lifted_entire model needs a 'map'");
      NewtonSettings ns;
      if (j.contains("newton")) {
        ns.tol = j.at("newton").value("tol", ns.tol);
        ns.max_iter = j.at("newton").value("max_iter", ns.max_iter);
      }
      std::optional<double> Q;
      if (j.contains("Q")) Q = number(j, "Q");
      return LogLiftModel::lifted_entire(map_from_json(j.at("map")), ns, Q);
    }
  } catch (const RangeError& e) {
    throw ConfigError(std::string("invalid model: ") + e.what());
  }
  throw ConfigError("unknown model family '" + family + "'");
}

json model_to_json(const LogLiftModel& model) {
  json j;
  if (model.family() == ModelFamily::shifted_exp) {
    j = {{"family", "shifted_exp"}, {"R", model.R()}};
  } else {
    j = {{"family", "lifted_entire"},
         {"map", map_to_json(model.map())},
         {"newton", {{"tol", model.newton().tol}, {"max_iter", model.newton().max_iter}}}};
  }
  j["Q"] = model.half_plane_Q();
  if (model.offset() != 0.0) j["offset"] = model.offset();
  if (model.kappa() != Complex(0.0, 0.0)) j["kappa"] = complex_to_json(model.kappa());
  return j;
}

GrayImage to_image(const ClassGrid& grid) {
  GrayImage img{grid.width, grid.height, {}};
  img.pixels.reserve(grid.cells.size());
  for (PixelClass c : grid.cells) img.pixels.push_back(c == PixelClass::escaped_small ? 255 : 0);
  return img;
}

void write_pgm(const GrayImage& image, const std::string& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw IoError("cannot open '" + path + "' for writing");
  os << "P5\n" << image.width << ' ' << image.height << "\n255\n";
  os.write(reinterpret_cast<const char*>(image.pixels.data()), static_cast<std::streamsize>(image.pixels.size()));
  if (!os) throw IoError("failed writing '" + path + "'");
}

GrayImage read_pgm(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw IoError("cannot open '" + path + "'");
  std::string magic;
  int maxval = 0;
  GrayImage img;
  is >> magic >> img.width >> img.height >> maxval;
  if (magic != "P5" || img.width <= 0 || img.height <= 0 || maxval != 255) throw IoError("'" + path + "' is not an 8-bit P5 PGM");
  is.get();
  img.pixels.resize(static_cast<std::size_t>(img.width) * img.height);
  is.read(reinterpret_cast<char*>(img.pixels.data()), static_cast<std::streamsize>(img.pixels.size()));
  if (!is) throw IoError("truncated PGM '" + path + "'");
  return img;
}

bool png_available() {
#ifdef TRACTLAB_HAVE_PNG
  return true;
#else
  return false;
#endif
}

void write_png(const GrayImage& image, const std::string& path) {
#ifdef TRACTLAB_HAVE_PNG
  std::unique_ptr<FILE, int (*)(FILE*)> fp(std::fopen(path.c_str(), "wb"), &std::fclose);
  if (!fp) throw IoError("cannot open '" + path + "' for writing");
  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  png_infop info = png ? png_create_info_struct(png) : nullptr;
  if (!png || !info) {
    png_destroy_write_struct(&png, &info);
    throw IoError("libpng initialisation failed");
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    throw IoError("libpng failed writing '" + path + "'");
  }
  png_init_io(png, fp.get());
  png_set_IHDR(png, info, image.width, image.height, 8, PNG_COLOR_TYPE_GRAY, PNG_INTERLACE_NONE,
               PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  for (int row = 0; row < image.height; ++row)
    png_write_row(png, const_cast<png_bytep>(image.pixels.data() + static_cast<std::size_t>(row) * image.width));
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
#else
  (void)image;
  throw IoError("PNG output unavailable (built without libpng); cannot write '" + path + "'");
#endif
}

json grid_sidecar(const EntireMapSpec& map, const GridSpec& spec, const ClassGrid& grid) {
  return {{"map", map_to_json(map)},
          {"window", {spec.window.re_min, spec.window.re_max, spec.window.im_min, spec.window.im_max}},
          {"resolution", {spec.width, spec.height}},
          {"R", spec.escape_radius},
          {"horizon", spec.horizon},
          {"format", "P5"},
          {"pixel_centers", true},
          {"row0", "im_max"},
          {"values", {{"0", "in_JR_horizon or overflowed_large"}, {"255", "escaped_small"}}},
          {"black_pixels", grid.black_count()}};
}

std::string read_text(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw IoError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

void write_text(const std::string& path, const std::string& content) {
  std::ofstream os(path);
  if (!os) throw IoError("cannot open '" + path + "' for writing");
  os << content;
  if (!os) throw IoError("failed writing '" + path + "'");
}

}  // namespace tractlab::io
