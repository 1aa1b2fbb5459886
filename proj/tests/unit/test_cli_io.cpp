#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <string>
#include <vector>

#include "tractlab/cli.hpp"
#include "tractlab/errors.hpp"
#include "tractlab/io.hpp"

using namespace tractlab;
namespace fs = std::filesystem;

namespace {

fs::path scratch() {
  const fs::path p = fs::temp_directory_path() / "tractlab_unit";
  fs::create_directories(p);
  return p;
}

int run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "tractlab");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  return cli_main(static_cast<int>(argv.size()), argv.data());
}

}  // namespace

TEST_CASE("PGM round trip") {
  io::GrayImage img{3, 2, {0, 255, 0, 255, 0, 255}};
  const std::string path = (scratch() / "rt.pgm").string();
  io::write_pgm(img, path);
  const io::GrayImage back = io::read_pgm(path);
  CHECK(back.width == 3);
  CHECK(back.height == 2);
  CHECK(back.pixels == img.pixels);
  CHECK_THROWS_AS(io::read_pgm((scratch() / "missing.pgm").string()), IoError);
  CHECK_THROWS_AS(io::write_pgm(img, "/nonexistent-dir/x.pgm"), IoError);
}

TEST_CASE("render writes a reproducible image and sidecar") {
  const std::string out = (scratch() / "f4.pgm").string();
  CHECK(run_cli({"render", "--map", R"({"family":"exp_plus_kappa","kappa":[1.0038,2.8999]})", "--resolution", "64",
                 "--out", out}) == kExitOk);
  const io::GrayImage first = io::read_pgm(out);
  const io::json sidecar = io::json::parse(io::read_text(out + ".json"));
  CHECK(sidecar["horizon"] == 30);
  CHECK(sidecar["R"] == 50.0);

  // The sidecar is itself a valid config and reproduces the image bit for bit.
  const std::string cfg = (scratch() / "sidecar_cfg.json").string();
  io::write_text(cfg, sidecar.dump());
  const std::string again = (scratch() / "f4_again.pgm").string();
  CHECK(run_cli({"render", "--config", cfg, "--out", again}) == kExitOk);
  CHECK(io::read_pgm(again).pixels == first.pixels);
}

TEST_CASE("flags override config fields") {
  const std::string cfg = (scratch() / "render_cfg.json").string();
  io::write_text(cfg, R"({"map": {"family": "sinh", "lambda": [0.575, 0]}, "resolution": 16, "horizon": 5})");
  const std::string out = (scratch() / "override.pgm").string();
  CHECK(run_cli({"render", "--config", cfg, "--resolution", "8x4", "--out", out}) == kExitOk);
  const io::GrayImage img = io::read_pgm(out);
  CHECK(img.width == 8);
  CHECK(img.height == 4);
}

TEST_CASE("config errors exit with status 1") {
  const std::string out = (scratch() / "bad.json").string();
  CHECK(run_cli({"conjugate", "--kappa", "0.3+0.2i", "--Q", "1.5", "--out", out}) == kExitConfig);
  CHECK_FALSE(fs::exists(out));
  CHECK(run_cli({"render", "--resolution", "0", "--out", out}) == kExitConfig);
  CHECK(run_cli({"render", "--window", "1,0,-1,1", "--out", out}) == kExitConfig);
  CHECK(run_cli({"verify", "--suite", "nope"}) == kExitConfig);
  CHECK(run_cli({"frobnicate"}) == kExitConfig);
  CHECK(run_cli({"render", "--config", (scratch() / "no-such-config.json").string(), "--out", out}) ==
        kExitComputation);
}

TEST_CASE("conjugate with kappa = 0 reports exact zeros") {
  const std::string out = (scratch() / "k0.json").string();
  CHECK(run_cli({"conjugate", "--kappa", "0", "--Q", "2", "--count", "5", "--out", out}) == kExitOk);
  const io::json r = io::json::parse(io::read_text(out));
  CHECK(r["checks"]["max_residual"] == 0.0);
  CHECK(r["checks"]["uniqueness_discrepancy"] == 0.0);
  CHECK(r["checks"]["inverse_discrepancy"] == 0.0);
  for (const auto& s : r["samples"]) {
    CHECK(s["residual"] == 0.0);
    CHECK(s["theta"] == s["z"]);
  }
  CHECK(fs::exists(out + ".csv"));
}

TEST_CASE("conjugate from a samples file") {
  const std::string samples = (scratch() / "samples.json").string();
  io::write_text(samples, R"({"points": [[3, 0]], "addresses": [[0], [0, 1], [[2, 0]]]})");
  const std::string out = (scratch() / "conj.json").string();
  CHECK(run_cli({"conjugate", "--kappa", "0.3+0.2i", "--Q", "2", "--tol", "1e-9", "--samples", samples, "--out",
                 out}) == kExitOk);
  const io::json r = io::json::parse(io::read_text(out));
  CHECK(r["samples"].size() == 4);
  CHECK(r["depth"] == 31);
  CHECK(r["checks"]["max_residual"].get<double>() <= 1e-8 * 12.0);

  io::write_text(samples, R"({"points": [[3, 1.4]]})");
  CHECK(run_cli({"conjugate", "--samples", samples, "--out", out}) == kExitComputation);
}

TEST_CASE("semiconj and report") {
  const std::string out = (scratch() / "semi.json").string();
  CHECK(run_cli({"semiconj", "--count", "3", "--out", out}) == kExitOk);
  const io::json r = io::json::parse(io::read_text(out));
  CHECK(r["certificate"]["C_hat"].get<double>() > 1.0);
  CHECK(r["samples"].size() == 3);
  CHECK(r["samples"][0].contains("displacement_bound"));
  CHECK(run_cli({"semiconj", "--lambda", "0.99", "--rU", "0.1", "--out", out}) == kExitComputation);
  CHECK(run_cli({"semiconj", "--lambda", "1.5", "--out", out}) == kExitConfig);

  const std::string csv = (scratch() / "report.csv").string();
  CHECK(run_cli({"report", "--out", csv}) == kExitOk);
  CHECK(io::read_text(csv).find("Beardon-Pommerenke") != std::string::npos);
}

TEST_CASE("TRACTLAB_THREADS validation") {
  ::setenv("TRACTLAB_THREADS", "zero", 1);
  CHECK(run_cli({"report", "--out", (scratch() / "r.csv").string()}) == kExitConfig);
  ::setenv("TRACTLAB_THREADS", "2", 1);
  CHECK(run_cli({"report", "--out", (scratch() / "r.csv").string()}) == kExitOk);
  ::unsetenv("TRACTLAB_THREADS");
}
