#pragma once

#include <complex>
#include <optional>
#include <ostream>
#include <string>

#include "tractlab/orbits.hpp"
#include "tractlab/io.hpp"

namespace tractlab {

enum class Command { render, conjugate, semiconj, verify, report };

// Exit statuses of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 1;
inline constexpr int kExitComputation = 2;
inline constexpr int kExitVerification = 3;

struct RunConfig {
  Command command = Command::verify;

  // render
  io::json map;  // map descriptor; empty selects the default map
  GridSpec grid;
  bool png = false;

  // conjugate
  io::json model;  // model descriptor; empty selects shifted_exp R=10
  Complex kappa{0.3, 0.2};
  double Q = 2.0;
  double tol = 1e-9;
  std::string samples_path;
  std::size_t count = 20;
  std::uint64_t seed = 1;
  std::string csv_path;

  // semiconj
  Complex lambda{0.5, 0.0};
  double r_U = 0.7;
  double K = 2.0;
  double R = 11.0;
  double semiconj_tol = 1e-6;

  // verify
  std::string suite = "all";

  std::string out;
};

// Fills a config from a JSON object. Keys mirror the command-line flags.
void apply_json(RunConfig& config, const io::json& j);

// Checks every numeric field against the preconditions of the selected command.
// Throws ConfigError naming the offending field.
void validate(const RunConfig& config);

// Executes a validated config, writing artifacts to disk and a summary to `log`.
int run(const RunConfig& config, std::ostream& log);

// Full command-line entry point, including error-to-exit-status mapping.
int cli_main(int argc, char** argv);

}  // namespace tractlab
