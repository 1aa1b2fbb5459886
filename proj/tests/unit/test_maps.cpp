#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "tractlab/errors.hpp"
#include "tractlab/io.hpp"
#include "tractlab/maps.hpp"

using namespace tractlab;

TEST_CASE("eval_F on the shifted exponential") {
  const auto F = LogLiftModel::shifted_exp(10.0);
  CHECK(eval_F(F, {3.0, 0.0}).real() == doctest::Approx(oracle::kExp3Minus10).epsilon(1e-15));
  CHECK(eval_F(F, {3.0, 0.0}).imag() == 0.0);
  const Complex shifted = eval_F(F, {3.0, kTwoPi});
  CHECK(std::abs(shifted - eval_F(F, {3.0, 0.0})) < 1e-13);
  const KappaFamilyMember member{F, {0.0, 0.0}};
  CHECK(eval_F(member, {3.0, 0.0}) == eval_F(F, {3.0, 0.0}));
}

TEST_CASE("eval_F errors") {
  const auto F = LogLiftModel::shifted_exp(10.0);
  CHECK_THROWS_AS(eval_F(F, {1.0, 0.0}), DomainError);
  CHECK_THROWS_AS(eval_F(F, {3.0, kPi}), DomainError);
  CHECK_THROWS_AS(eval_F(F, {800.0, 0.0}), OverflowError);
  CHECK_THROWS_AS(eval_F(F, {std::nan(""), 0.0}), RangeError);
}

TEST_CASE("eval_dF oracles") {
  const auto F = LogLiftModel::shifted_exp(10.0);
  CHECK(std::abs(eval_dF(F, {3.0, 0.0})) == doctest::Approx(oracle::kExp3).epsilon(1e-15));
  const double d = std::abs(eval_dF(F, {std::log(10.0) + 0.01, 0.0}));
  CHECK(d == doctest::Approx(oracle::kDerivNearBoundary).epsilon(1e-14));
  CHECK(d > 2.0);
}

TEST_CASE("lifted lambda_expm1 derivative matches finite differences") {
  const auto F = LogLiftModel::lifted_entire(EntireMapSpec::lambda_expm1({0.5, 0.0}));
  const Complex z{3.2, 0.4};
  const double h = 1e-6;
  const Complex fd = (eval_F(F, z + h) - eval_F(F, z - h)) / (2.0 * h);
  CHECK(std::abs(fd - eval_dF(F, z)) / std::abs(eval_dF(F, z)) < 1e-6);
  // exp F(z) = f(exp z)
  const Complex fz = EntireMapSpec::lambda_expm1({0.5, 0.0}).eval(std::exp(z));
  CHECK(std::abs(std::exp(eval_F(F, z)) - fz) / std::abs(fz) < 1e-12);
}

TEST_CASE("normalize") {
  SUBCASE("already normalized") {
    const NormalizationResult r = normalize(LogLiftModel::shifted_exp(10.0));
    CHECK(r.offset == 0.0);
    CHECK(r.min_derivative >= 2.0);
  }
  SUBCASE("R = 1.5 needs a positive offset") {
    const NormalizationResult r = normalize(LogLiftModel::shifted_exp(1.5));
    CHECK(r.offset > 0.0);
    CHECK(r.sample_size == 1000);
    CHECK(sampled_min_derivative(r.model, 1000, 3) >= 2.0);
  }
  SUBCASE("zexp") {
    const NormalizationResult r = normalize(LogLiftModel::lifted_entire(EntireMapSpec::zexp()));
    CHECK(r.min_derivative >= 2.0);
    CHECK(sampled_min_derivative(r.model, 1000, 5) >= 2.0);
  }
  SUBCASE("no certificate in range") {
    CHECK_THROWS_AS(normalize(LogLiftModel::shifted_exp(1.5), 0.0, 1e-3), SearchFailed);
  }
}

TEST_CASE("catalog constructors and descriptors") {
  CHECK_THROWS_AS(EntireMapSpec::lambda_expm1({0.0, 0.0}), RangeError);
  CHECK_THROWS_AS(LogLiftModel::shifted_exp(-1.0), RangeError);
  const auto f4 = EntireMapSpec::exp_plus_kappa({1.0038, 2.8999});
  CHECK(f4.eval({0.0, 0.0}) == Complex(2.0038, 2.8999));
  const auto f3 = EntireMapSpec::sinh({0.575, 0.0});
  CHECK(f3.eval({-1.0, -0.5}) == -f3.eval({1.0, 0.5}));
  CHECK(f3.tract_count() == 2);

  const io::json j = io::json::parse(
      R"({"family": "lifted_entire", "map": {"family": "lambda_expm1", "lambda": [0.5, 0.0]},
          "newton": {"tol": 1e-12, "max_iter": 50}})");
  const LogLiftModel m = io::model_from_json(j);
  CHECK(m.family() == ModelFamily::lifted_entire);
  CHECK(m.map().parameter() == Complex(0.5, 0.0));
  CHECK(io::model_from_json(io::model_to_json(m)).map().parameter() == Complex(0.5, 0.0));
  CHECK(io::model_from_json(io::json::parse(R"({"family": "shifted_exp", "R": 10.0})")).R() == 10.0);
  CHECK_THROWS_AS(io::model_from_json(io::json::parse(R"({"family": "nope"})")), ConfigError);
}

TEST_CASE("complex parsing") {
  CHECK(parse_complex("0.3+0.2i") == Complex(0.3, 0.2));
  CHECK(parse_complex("-i") == Complex(0.0, -1.0));
  CHECK(parse_complex("2.5") == Complex(2.5, 0.0));
  CHECK(parse_complex(format_complex({1.0038, -2.8999})) == Complex(1.0038, -2.8999));
  CHECK_THROWS_AS(parse_complex("abc"), RangeError);
}
