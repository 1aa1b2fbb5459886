#include "tractlab/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <iostream>
#include <random>
#include <sstream>

#include "tractlab/conjugacy.hpp"
#include "tractlab/errors.hpp"
#include "tractlab/hypmetric.hpp"
#include "tractlab/maps.hpp"
#include "tractlab/parallel.hpp"
#include "tractlab/samples.hpp"
#include "tractlab/semiconj.hpp"
#include "tractlab/verify.hpp"

namespace tractlab {

using io::json;

namespace {

template <class T>
T field(const json& j, const char* key) {
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw ConfigError(std::string("field '") + key + "' has the wrong type");
  }
}

Complex complex_field(const json& j, const char* key) {
  try {
    return io::complex_from_json(j.at(key));
  } catch (const ConfigError& e) {
    throw ConfigError(std::string("field '") + key + "': " + e.what());
  }
}

Complex complex_flag(const std::string& text, const char* name) {
  try {
    return parse_complex(text);
  } catch (const RangeError& e) {
    throw ConfigError(std::string("--") + name + ": " + e.what());
  }
}

void check(bool ok, const char* field_name, const std::string& why) {
  if (!ok) throw ConfigError(std::string("invalid '") + field_name + "': " + why);
}

void set_resolution(GridSpec& grid, const json& j) {
  if (j.is_number_integer()) {
    grid.width = grid.height = j.get<int>();
  } else if (j.is_array() && j.size() == 2) {
    grid.width = j[0].get<int>();
    grid.height = j[1].get<int>();
  } else {
    throw ConfigError("field 'resolution' must be N or [width, height]");
  }
}

void set_window(GridSpec& grid, const json& j) {
  if (!j.is_array() || j.size() != 4) throw ConfigError("field 'window' must be [re_min, re_max, im_min, im_max]");
  grid.window = {j[0].get<double>(), j[1].get<double>(), j[2].get<double>(), j[3].get<double>()};
}

EntireMapSpec render_map(const RunConfig& c) {
  if (c.map.is_null()) return EntireMapSpec::exp_plus_kappa({1.0038, 2.8999});
  return io::map_from_json(c.map);
}

LogLiftModel conjugate_model(const RunConfig& c) {
  if (c.model.is_null()) return LogLiftModel::shifted_exp(10.0);
  return io::model_from_json(c.model);
}

// ---- render ----

int run_render(const RunConfig& c, std::ostream& log) {
  const EntireMapSpec map = render_map(c);
  const auto t0 = std::chrono::steady_clock::now();
  const ClassGrid grid = classify_grid(map, c.grid);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const io::GrayImage image = io::to_image(grid);
  if (c.png) {
    io::write_png(image, c.out);
  } else {
    io::write_pgm(image, c.out);
  }
  json sidecar = io::grid_sidecar(map, c.grid, grid);
  if (c.png) sidecar["format"] = "PNG";
  io::write_text(c.out + ".json", sidecar.dump(2) + "\n");
  log << "render " << map.describe() << ": " << grid.width << "x" << grid.height << ", " << grid.black_count()
      << " black pixels, " << secs << " s -> " << c.out << "\n";
  return kExitOk;
}

// ---- conjugate ----

struct SampleInput {
  std::string label;
  OrbitSegment orbit;
};

std::vector<SampleInput> conjugate_inputs(const RunConfig& c, const LogLiftModel& F0, int depth) {
  std::vector<SampleInput> inputs;
  const int steps = depth + 1;
  if (c.samples_path.empty()) {
    std::size_t i = 0;
    for (const auto& p : random_periodic_points(F0, c.count, 3, {}, c.Q, c.seed))
      inputs.push_back({"periodic#" + std::to_string(i++), periodic_orbit(p, steps)});
    return inputs;
  }
  json doc;
  try {
    doc = json::parse(io::read_text(c.samples_path));
  } catch (const json::parse_error& e) {
    throw ConfigError("samples file '" + c.samples_path + "' is not valid JSON: " + e.what());
  }
  if (!doc.is_object()) throw ConfigError("samples file must hold a JSON object");
  if (doc.contains("points")) {
    for (const auto& p : doc.at("points")) {
      const Complex z = io::complex_from_json(p);
      try {
        inputs.push_back({format_complex(z), certified_orbit(F0, z, steps, c.Q)});
      } catch (const Error& e) {
        throw OrbitLeftJQ("sample z = " + format_complex(z) + ": " + e.what());
      }
    }
  }
  if (doc.contains("addresses")) {
    for (const auto& word_json : doc.at("addresses")) {
      std::vector<TractAddress> word;
      for (const auto& entry : word_json) {
        if (entry.is_array())
          word.push_back({entry.at(0).get<long long>(), entry.size() > 1 ? entry.at(1).get<int>() : 0});
        else
          word.push_back({entry.get<long long>(), 0});
      }
      if (word.empty()) throw ConfigError("empty address word in samples file");
      const PeriodicPoint p = point_with_address(F0, word, c.Q, 1e-14);
      inputs.push_back({"address " + word_json.dump(), periodic_orbit(p, steps)});
    }
  }
  if (doc.contains("random")) {
    const json& r = doc.at("random");
    const std::size_t count = r.value("count", c.count);
    const int period = r.value("max_period", 3);
    const std::uint64_t seed = r.value("seed", c.seed);
    std::size_t i = 0;
    for (const auto& p : random_periodic_points(F0, count, period, {}, c.Q, seed))
      inputs.push_back({"periodic#" + std::to_string(i++), periodic_orbit(p, steps)});
  }
  if (inputs.empty()) throw ConfigError("samples file lists no 'points', 'addresses' or 'random' entries");
  return inputs;
}

int run_conjugate(const RunConfig& c, std::ostream& log) {
  const LogLiftModel F0 = conjugate_model(c);
  const int depth = depth_for_tolerance(c.kappa, c.tol);
  const std::vector<SampleInput> inputs = conjugate_inputs(c, F0, depth);

  std::vector<ConjugacySample> samples(inputs.size());
  std::vector<double> displacement(inputs.size());
  parallel_for(inputs.size(), 0, [&](std::size_t i) {
    try {
      samples[i] = theta_limit(F0, c.kappa, inputs[i].orbit, c.tol, c.Q);
      displacement[i] = dist_half_plane(c.Q, samples[i].z, samples[i].theta);
    } catch (const Error& e) {
      throw Error("sample " + inputs[i].label + ": " + e.what());
    }
  });

  std::vector<OrbitSegment> orbits;
  for (const auto& in : inputs) orbits.push_back(in.orbit);
  double max_residual = 0.0;
  json per_sample = json::array();
  std::ostringstream csv;
  csv.precision(17);
  csv << "z_re,z_im,theta_re,theta_im,depth,tail_bound,residual,displacement,address_prefix\n";
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const ConjugacySample& s = samples[i];
    max_residual = std::max(max_residual, s.residual);
    per_sample.push_back({{"z", io::complex_to_json(s.z)},
                          {"theta", io::complex_to_json(s.theta)},
                          {"depth", s.depth},
                          {"tail_bound", s.tail_bound},
                          {"residual", s.residual},
                          {"displacement", displacement[i]},
                          {"address_prefix", to_string(s.address_prefix)}});
    csv << s.z.real() << ',' << s.z.imag() << ',' << s.theta.real() << ',' << s.theta.imag() << ',' << s.depth << ','
        << s.tail_bound << ',' << s.residual << ',' << displacement[i] << ",\"" << to_string(s.address_prefix)
        << "\"\n";
  }

  json checks;
  checks["max_residual"] = max_residual;
  checks["uniqueness_discrepancy"] = uniqueness_crosscheck(F0, c.kappa, orbits, c.tol, c.Q);
  if (c.kappa == Complex{0.0, 0.0}) {
    checks["inverse_discrepancy"] = 0.0;
  } else {
    // Samples of J_{2Q}(F_kappa): periodic points pushed deep into the tracts.
    const LogLiftModel Fk = F0.shifted_by(c.kappa);
    double worst = 0.0;
    const std::size_t n = std::min<std::size_t>(inputs.size(), 10);
    for (const auto& p : random_periodic_points(Fk, n, 3, {-40, 40, 14}, 2.0 * c.Q, c.seed + 1, 2.0 * c.Q))
      worst = std::max(worst, inverse_theta_check(F0, c.kappa, periodic_orbit(p, 2 * depth + 2), c.tol, c.Q));
    checks["inverse_discrepancy"] = worst;
    if (std::abs(c.kappa) + 1e-3 < (c.Q - 1.0) / 2.0) {
      double anti = 0.0;
      for (std::size_t i = 0; i < std::min<std::size_t>(orbits.size(), 5); ++i)
        anti = std::max(anti, holomorphy_in_kappa(F0, orbits[i], c.kappa, 1e-3, c.Q, depth).residual());
      checks["anti_holomorphic_residual_h1e-3"] = anti;
    }
  }
  const DisplacementReport disp = displacement_bound_report(samples, c.kappa, c.Q);
  checks["max_displacement"] = disp.max_distance;
  checks["displacement_ceiling"] = disp.ceiling;

  json report = {{"model", io::model_to_json(F0)},
                 {"kappa", io::complex_to_json(c.kappa)},
                 {"Q", c.Q},
                 {"tol", c.tol},
                 {"depth", depth},
                 {"samples", per_sample},
                 {"checks", checks}};
  io::write_text(c.out, report.dump(2) + "\n");
  const std::string csv_path = c.csv_path.empty() ? c.out + ".csv" : c.csv_path;
  io::write_text(csv_path, csv.str());
  log << "conjugate kappa=" << format_complex(c.kappa) << " Q=" << c.Q << ": " << samples.size()
      << " samples at depth " << depth << ", max residual " << max_residual << " -> " << c.out << ", " << csv_path
      << "\n";
  return kExitOk;
}

// ---- semiconj ----

int run_semiconj(const RunConfig& c, std::ostream& log) {
  const HyperbolicSetup setup = build_setup(c.lambda, c.r_U, c.K, c.R);
  const auto region = default_certificate_region(setup);
  const ExpansionCertificate cert = expansion_certificate(setup, region);
  const int depth = semiconj_depth(setup.mu, cert.C_hat, c.semiconj_tol);

  std::vector<std::vector<Complex>> orbits;
  for (std::size_t i = 0; i < c.count; ++i)
    orbits.push_back(escaping_g_orbit(setup, 1 + static_cast<long long>(i % 8), i % 2 ? -1 : 1, depth + 1));
  std::vector<SemiconjSample> samples(orbits.size());
  parallel_for(orbits.size(), 0, [&](std::size_t i) {
    samples[i] = semiconj_limit(setup, orbits[i], c.semiconj_tol, cert.C_hat);
  });

  json per_sample = json::array();
  double worst = 0.0;
  for (const auto& s : samples) {
    json levels = json::array();
    for (Complex t : s.thetas) levels.push_back(io::complex_to_json(t));
    for (std::size_t j = 0; j < s.functional_residuals.size(); ++j)
      worst = std::max(worst, s.functional_residuals[j] / (1.0 + std::abs(s.thetas[j])));
    per_sample.push_back({{"z", io::complex_to_json(s.z)},
                          {"theta", io::complex_to_json(s.theta)},
                          {"levels", levels},
                          {"increments", s.increments},
                          {"certified_C", s.certified_C},
                          {"mu", setup.mu},
                          {"displacement_bound", s.displacement_bound}});
  }
  json report = {{"setup",
                  {{"lambda", io::complex_to_json(setup.lambda)},
                   {"rU", setup.r_U},
                   {"K", setup.K},
                   {"R", setup.R},
                   {"M", setup.M},
                   {"mu", setup.mu}}},
                 {"certificate",
                  {{"C_hat", cert.C_hat},
                   {"argmin", io::complex_to_json(cert.argmin)},
                   {"counted", cert.counted},
                   {"method", to_string(cert.method)}}},
                 {"depth", depth},
                 {"max_scaled_functional_residual", worst},
                 {"samples", per_sample}};
  io::write_text(c.out, report.dump(2) + "\n");
  log << "semiconj mu=" << setup.mu << " C_hat=" << cert.C_hat << " depth=" << depth << ": " << samples.size()
      << " samples -> " << c.out << "\n";
  return kExitOk;
}

// ---- verify ----

int run_verify(const RunConfig& c, std::ostream& log) {
  const auto results = run_suite(c.suite);
  std::size_t failed = 0;
  for (const auto& r : results) {
    log << (r.passed ? "PASS " : "FAIL ") << r.suite << "/" << r.name << "  " << r.detail << "  (" << r.seconds
        << " s)\n";
    if (!r.passed) ++failed;
  }
  log << results.size() - failed << "/" << results.size() << " properties hold\n";
  return failed == 0 ? kExitOk : kExitVerification;
}

// ---- report ----

int run_report(const RunConfig& c, std::ostream& log) {
  // Densities and bounds along a ray set, for the half-plane and the geometric puncture set.
  std::vector<Complex> punctures;
  for (int j = 0; j <= 22; ++j) punctures.emplace_back(std::ldexp(1.0, j), 0.0);
  std::ostringstream csv;
  csv.precision(17);
  csv << "# 1/rho bounds are stated up to the Beardon-Pommerenke constant K (K = 1 below)\n";
  csv << "z_re,z_im,rho_half_plane,standard_lower,standard_upper,punctured_sequence_upper,bound_over_abs_z,"
         "selection_case\n";
  for (double r = 1.0; r <= 1e6; r *= std::sqrt(10.0)) {
    for (double arg : {0.25, 0.75, 1.5, 3.0}) {  // off the positive axis, where the punctures sit
      const Complex z = std::polar(r, arg);
      const Complex zh(c.Q + std::abs(z), z.imag());
      const double rho = rho_half_plane(c.Q, zh);
      const DensityBound sb = standard_estimate_bound(zh.real() - c.Q);
      const PuncturedSequenceBound pb = punctured_sequence_upper(punctures, 2.0, z);
      csv << z.real() << ',' << z.imag() << ',' << rho << ',' << sb.lower << ',' << sb.upper << ',' << pb.value << ','
          << pb.value / std::abs(z) << ',' << pb.selection_case << '\n';
    }
  }
  io::write_text(c.out, csv.str());
  log << "report -> " << c.out << "\n";
  return kExitOk;
}

}  // namespace

void apply_json(RunConfig& c, const json& j) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  if (j.contains("map")) c.map = j.at("map");
  if (j.contains("window")) set_window(c.grid, j.at("window"));
  if (j.contains("resolution")) set_resolution(c.grid, j.at("resolution"));
  if (j.contains("R")) {
    // R is the escape radius for render and the target radius for semiconj.
    c.grid.escape_radius = field<double>(j, "R");
    c.R = c.grid.escape_radius;
  }
  if (j.contains("horizon")) c.grid.horizon = field<int>(j, "horizon");
  if (j.contains("png")) c.png = field<bool>(j, "png");
  if (j.contains("model")) c.model = j.at("model");
  if (j.contains("kappa")) c.kappa = complex_field(j, "kappa");
  if (j.contains("Q")) c.Q = field<double>(j, "Q");
  if (j.contains("tol")) {
    c.tol = field<double>(j, "tol");
    c.semiconj_tol = c.tol;
  }
  if (j.contains("samples")) c.samples_path = field<std::string>(j, "samples");
  if (j.contains("count")) c.count = field<std::size_t>(j, "count");
  if (j.contains("seed")) c.seed = field<std::uint64_t>(j, "seed");
  if (j.contains("csv")) c.csv_path = field<std::string>(j, "csv");
  if (j.contains("lambda")) c.lambda = complex_field(j, "lambda");
  if (j.contains("rU")) c.r_U = field<double>(j, "rU");
  if (j.contains("K")) c.K = field<double>(j, "K");
  if (j.contains("suite")) c.suite = field<std::string>(j, "suite");
  if (j.contains("out")) c.out = field<std::string>(j, "out");
}

void validate(const RunConfig& c) {
  auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
  const bool needs_out = c.command != Command::verify;
  if (needs_out) check(!c.out.empty(), "out", "an output path is required");
  if (const char* env = std::getenv("TRACTLAB_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    check(end != env && *end == '\0' && v >= 1, "TRACTLAB_THREADS", "must be a positive integer");
  }
  switch (c.command) {
    case Command::render: {
      render_map(c);  // descriptor errors surface here
      const Window& w = c.grid.window;
      check(std::isfinite(w.re_min) && std::isfinite(w.re_max) && w.re_min < w.re_max, "window",
            "need re_min < re_max");
      check(std::isfinite(w.im_min) && std::isfinite(w.im_max) && w.im_min < w.im_max, "window",
            "need im_min < im_max");
      check(c.grid.width > 0 && c.grid.height > 0 && c.grid.width <= 16384 && c.grid.height <= 16384, "resolution",
            "must be in 1..16384");
      check(positive(c.grid.escape_radius), "R", "must be positive");
      check(c.grid.horizon > 0, "horizon", "must be positive");
      if (c.png) check(io::png_available(), "png", "this build has no PNG support");
      break;
    }
    case Command::conjugate: {
      conjugate_model(c);
      check(is_finite(c.kappa), "kappa", "must be finite");
      check(std::isfinite(c.Q), "Q", "must be finite");
      check(c.Q > 2.0 * std::abs(c.kappa) + 1.0, "Q",
            "must exceed 2|kappa| + 1 = " + std::to_string(2.0 * std::abs(c.kappa) + 1.0));
      check(positive(c.tol), "tol", "must be positive");
      check(depth_for_tolerance(c.kappa, c.tol) <= 200, "tol", "requires depth beyond 200");
      check(c.count > 0, "count", "must be positive");
      break;
    }
    case Command::semiconj: {
      check(is_finite(c.lambda) && std::abs(c.lambda) > 0.0 && std::abs(c.lambda) < 1.0, "lambda",
            "need 0 < |lambda| < 1 for an attracting fixed point at 0");
      check(positive(c.r_U), "rU", "must be positive");
      check(positive(c.K), "K", "must be positive");
      check(positive(c.R) && c.R >= c.K, "R", "must be at least K");
      check(positive(c.semiconj_tol), "tol", "must be positive");
      check(c.count > 0, "count", "must be positive");
      break;
    }
    case Command::verify: {
      const auto names = suite_names();
      check(c.suite == "all" || std::find(names.begin(), names.end(), c.suite) != names.end(), "suite",
            "unknown suite '" + c.suite + "'");
      break;
    }
    case Command::report:
      check(std::isfinite(c.Q), "Q", "must be finite");
      break;
  }
}

int run(const RunConfig& c, std::ostream& log) {
  switch (c.command) {
    case Command::render: return run_render(c, log);
    case Command::conjugate: return run_conjugate(c, log);
    case Command::semiconj: return run_semiconj(c, log);
    case Command::verify: return run_verify(c, log);
    case Command::report: return run_report(c, log);
  }
  return kExitConfig;
}

int cli_main(int argc, char** argv) {
  CLI::App app{"tractlab: logarithmic-tract dynamics toolkit"};
  app.require_subcommand(1);

  std::string config_path;
  std::string map_text, window_text, resolution_text, model_text, kappa_text, lambda_text;
  double R = 0, horizon = 0, Q = 0, tol = 0, rU = 0, K = 0;
  std::size_t count = 0;
  std::uint64_t seed = 0;
  std::string samples, out, csv, suite;
  bool png = false;

  struct Sub {
    CLI::App* app;
    Command command;
  };
  std::vector<Sub> subs;
  std::map<std::string, CLI::Option*> opts;
  auto add = [&](CLI::App* s, const std::string& name, auto& target, const std::string& help) {
    opts[s->get_name() + "." + name] = s->add_option("--" + name, target, help);
  };

  auto* render = app.add_subcommand("render", "classify a pixel grid and write PGM/PNG plus a JSON sidecar");
  subs.push_back({render, Command::render});
  auto* conjugate = app.add_subcommand("conjugate", "conjugacy towers for F_kappa(z) = F_0(z + kappa)");
  subs.push_back({conjugate, Command::conjugate});
  auto* semiconj = app.add_subcommand("semiconj", "semiconjugacy for a hyperbolic lambda(e^z - 1)");
  subs.push_back({semiconj, Command::semiconj});
  auto* verify = app.add_subcommand("verify", "run the invariant suite");
  subs.push_back({verify, Command::verify});
  auto* report = app.add_subcommand("report", "hyperbolic-density bound table as CSV");
  subs.push_back({report, Command::report});

  for (auto& s : subs) add(s.app, "config", config_path, "JSON config file; flags override its fields");
  add(render, "map", map_text, "map descriptor as JSON");
  add(render, "window", window_text, "re_min,re_max,im_min,im_max");
  add(render, "resolution", resolution_text, "N or WxH");
  add(render, "R", R, "escape radius");
  add(render, "horizon", horizon, "iteration horizon");
  add(render, "out", out, "output image path");
  opts["render.png"] = render->add_flag("--png", png, "write PNG instead of PGM");
  add(conjugate, "model", model_text, "model descriptor as JSON");
  add(conjugate, "kappa", kappa_text, "translation parameter, e.g. 0.3+0.2i");
  add(conjugate, "Q", Q, "half-plane parameter, must exceed 2|kappa|+1");
  add(conjugate, "tol", tol, "tail tolerance");
  add(conjugate, "samples", samples, "samples JSON (points, addresses or random)");
  add(conjugate, "count", count, "number of random periodic samples");
  add(conjugate, "seed", seed, "sample seed");
  add(conjugate, "out", out, "JSON report path");
  add(conjugate, "csv", csv, "CSV summary path (default: <out>.csv)");
  add(semiconj, "lambda", lambda_text, "multiplier of lambda(e^z - 1)");
  add(semiconj, "rU", rU, "radius of the attracting disk U");
  add(semiconj, "K", K, "inner radius K");
  add(semiconj, "R", R, "outer radius R");
  add(semiconj, "tol", tol, "limit tolerance");
  add(semiconj, "count", count, "number of escaping samples");
  add(semiconj, "out", out, "JSON report path");
  add(verify, "suite", suite, "all or one of maps, tracts, hypmetric, orbits, conjugacy, semiconj, render");
  add(report, "Q", Q, "half-plane parameter for the density columns");
  add(report, "out", out, "CSV path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    RunConfig c;
    CLI::App* chosen = nullptr;
    for (auto& s : subs)
      if (s.app->parsed()) {
        c.command = s.command;
        chosen = s.app;
      }
    const std::string prefix = chosen->get_name() + ".";
    auto given = [&](const std::string& name) {
      auto it = opts.find(prefix + name);
      return it != opts.end() && it->second->count() > 0;
    };
    if (c.command == Command::report) c.Q = 0.0;
    if (given("config")) {
      json j;
      try {
        j = json::parse(io::read_text(config_path));
      } catch (const json::parse_error& e) {
        throw ConfigError("config '" + config_path + "' is not valid JSON: " + e.what());
      }
      apply_json(c, j);
    }
    auto parse_json_flag = [](const std::string& text, const char* name) {
      try {
        return json::parse(text);
      } catch (const json::parse_error&) {
        throw ConfigError(std::string("--") + name + " is not valid JSON");
      }
    };
    if (given("map")) c.map = parse_json_flag(map_text, "map");
    if (given("model")) c.model = parse_json_flag(model_text, "model");
    if (given("window")) {
      std::vector<double> v;
      std::stringstream ss(window_text);
      for (std::string part; std::getline(ss, part, ',');) {
        try {
          v.push_back(std::stod(part));
        } catch (const std::exception&) {
          throw ConfigError("--window expects four comma-separated numbers");
        }
      }
      set_window(c.grid, json(v));
    }
    if (given("resolution")) {
      int w = 0, h = 0;
      char x = 0;
      std::stringstream ss(resolution_text);
      if (!(ss >> w)) throw ConfigError("--resolution expects N or WxH");
      if (ss >> x) {
        if ((x != 'x' && x != 'X') || !(ss >> h)) throw ConfigError("--resolution expects N or WxH");
      } else {
        h = w;
      }
      c.grid.width = w;
      c.grid.height = h;
    }
    if (given("R")) c.grid.escape_radius = c.R = R;
    if (given("horizon")) {
      check(std::floor(horizon) == horizon, "horizon", "must be an integer");
      c.grid.horizon = static_cast<int>(horizon);
    }
    if (given("png")) c.png = png;
    if (given("kappa")) c.kappa = complex_flag(kappa_text, "kappa");
    if (given("Q")) c.Q = Q;
    if (given("tol")) c.tol = c.semiconj_tol = tol;
    if (given("samples")) c.samples_path = samples;
    if (given("count")) c.count = count;
    if (given("seed")) c.seed = seed;
    if (given("csv")) c.csv_path = csv;
    if (given("lambda")) c.lambda = complex_flag(lambda_text, "lambda");
    if (given("rU")) c.r_U = rU;
    if (given("K")) c.K = K;
    if (given("suite")) c.suite = suite;
    if (given("out")) c.out = out;

    validate(c);
    return run(c, std::cout);
  } catch (const ConfigError& e) {
    std::cerr << "tractlab: config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const Error& e) {
    std::cerr << "tractlab: computation error: " << e.what() << "\n";
    return kExitComputation;
  } catch (const std::exception& e) {
    std::cerr << "tractlab: computation error: " << e.what() << "\n";
    return kExitComputation;
  }
}

}  // namespace tractlab
