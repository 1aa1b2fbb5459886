#include <doctest.h>

#include "tractlab/errors.hpp"
#include "tractlab/verify.hpp"

using namespace tractlab;

namespace {
void run_and_check(const std::string& suite) {
  const auto results = run_suite(suite);
  CHECK_FALSE(results.empty());
  for (const auto& r : results) {
    INFO(r.suite << "/" << r.name << ": " << r.detail);
    CHECK(r.passed);
  }
}
}  // namespace

TEST_CASE("properties: maps") { run_and_check("maps"); }
TEST_CASE("properties: tracts") { run_and_check("tracts"); }
TEST_CASE("properties: hypmetric") { run_and_check("hypmetric"); }
TEST_CASE("properties: orbits") { run_and_check("orbits"); }
TEST_CASE("properties: conjugacy") { run_and_check("conjugacy"); }
TEST_CASE("properties: semiconj") { run_and_check("semiconj"); }
TEST_CASE("properties: render") { run_and_check("render"); }
TEST_CASE("unknown suite") { CHECK_THROWS_AS(run_suite("bogus"), ConfigError); }
