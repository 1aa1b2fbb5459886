#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "tractlab/maps.hpp"
#include "tractlab/orbits.hpp"

namespace tractlab::io {

using json = nlohmann::json;

// Accepts [re, im], a bare number, {"re": .., "im": ..} or a string such as "0.3+0.2i".
Complex complex_from_json(const json& j);
json complex_to_json(Complex z);

EntireMapSpec map_from_json(const json& j);
json map_to_json(const EntireMapSpec& map);

// {"family": "shifted_exp", "R": 10} or
// {"family": "lifted_entire", "map": {...}, "newton": {"tol": .., "max_iter": ..}}.
LogLiftModel model_from_json(const json& j);
json model_to_json(const LogLiftModel& model);

struct GrayImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> pixels;  // row-major
};

// 0 for the black set (in_JR_horizon, overflowed_large), 255 for escaped_small.
GrayImage to_image(const ClassGrid& grid);

void write_pgm(const GrayImage& image, const std::string& path);
GrayImage read_pgm(const std::string& path);

bool png_available();
void write_png(const GrayImage& image, const std::string& path);

json grid_sidecar(const EntireMapSpec& map, const GridSpec& spec, const ClassGrid& grid);

std::string read_text(const std::string& path);
void write_text(const std::string& path, const std::string& content);

}  // namespace tractlab::io
