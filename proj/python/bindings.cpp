#include <pybind11/complex.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tractlab/conjugacy.hpp"
#include "tractlab/errors.hpp"
#include "tractlab/hypmetric.hpp"
#include "tractlab/io.hpp"
#include "tractlab/maps.hpp"
#include "tractlab/orbits.hpp"
#include "tractlab/samples.hpp"
#include "tractlab/semiconj.hpp"
#include "tractlab/tracts.hpp"
#include "tractlab/verify.hpp"

namespace py = pybind11;
using namespace tractlab;

namespace {

template <class E>
void register_error(py::module_& m, const char* name, py::handle base) {
  py::register_exception<E>(m, name, base);
}

}  // namespace

PYBIND11_MODULE(_tractlab, m) {
  m.doc() = "Logarithmic-lift dynamics: tracts, pullback conjugacies and semiconjugacies";

  static py::exception<Error> base_error(m, "TractlabError", PyExc_RuntimeError);
  register_error<DomainError>(m, "DomainError", base_error);
  register_error<OverflowError>(m, "OverflowError", base_error);
  register_error<RangeError>(m, "RangeError", base_error);
  register_error<SearchFailed>(m, "SearchFailed", base_error);
  register_error<NewtonDiverged>(m, "NewtonDiverged", base_error);
  register_error<ContinuationError>(m, "ContinuationError", base_error);
  register_error<AddressUndefined>(m, "AddressUndefined", base_error);
  register_error<AddressMismatch>(m, "AddressMismatch", base_error);
  register_error<PullbackLeftDomain>(m, "PullbackLeftDomain", base_error);
  register_error<PreconditionError>(m, "PreconditionError", base_error);
  register_error<OrbitLeftJQ>(m, "OrbitLeftJQ", base_error);
  register_error<DepthExceeded>(m, "DepthExceeded", base_error);
  register_error<CorrespondenceGap>(m, "CorrespondenceGap", base_error);
  register_error<SetupInvalid>(m, "SetupInvalid", base_error);
  register_error<HorizonError>(m, "HorizonError", base_error);
  register_error<CertificateMissing>(m, "CertificateMissing", base_error);
  register_error<CertificateFailed>(m, "CertificateFailed", base_error);
  register_error<ConfigError>(m, "ConfigError", base_error);
  register_error<IoError>(m, "IoError", base_error);

  // Maps
  py::class_<EntireMapSpec>(m, "EntireMapSpec")
      .def_static("exp_affine", &EntireMapSpec::exp_affine, py::arg("a"), py::arg("b"))
      .def_static("lambda_expm1", &EntireMapSpec::lambda_expm1, py::arg("lam"))
      .def_static("zexp", &EntireMapSpec::zexp)
      .def_static("sinh", &EntireMapSpec::sinh, py::arg("lam"))
      .def_static("exp_plus_kappa", &EntireMapSpec::exp_plus_kappa, py::arg("kappa"))
      .def_property_readonly("family", [](const EntireMapSpec& f) { return to_string(f.family()); })
      .def_property_readonly("parameter", &EntireMapSpec::parameter)
      .def("eval", &EntireMapSpec::eval)
      .def("derivative", &EntireMapSpec::derivative)
      .def("singular_radius", &EntireMapSpec::singular_radius)
      .def("tract_count", &EntireMapSpec::tract_count)
      .def("__repr__", &EntireMapSpec::describe);

  py::class_<LogLiftModel>(m, "LogLiftModel")
      .def_static("shifted_exp", &LogLiftModel::shifted_exp, py::arg("R") = 10.0, py::arg("Q") = 0.0)
      .def_static(
          "lifted_entire",
          [](const EntireMapSpec& map, std::optional<double> Q) { return LogLiftModel::lifted_entire(map, {}, Q); },
          py::arg("map"), py::arg("Q") = py::none())
      .def_static("from_json",
                  [](const std::string& text) { return io::model_from_json(nlohmann::json::parse(text)); })
      .def("to_json", [](const LogLiftModel& model) { return io::model_to_json(model).dump(); })
      .def_property_readonly("R", &LogLiftModel::R)
      .def_property_readonly("Q", &LogLiftModel::half_plane_Q)
      .def_property_readonly("offset", &LogLiftModel::offset)
      .def_property_readonly("kappa", &LogLiftModel::kappa)
      .def_property_readonly("minimal_Q", &LogLiftModel::minimal_Q)
      .def("shifted_by", &LogLiftModel::shifted_by, py::arg("kappa"))
      .def("with_offset", &LogLiftModel::with_offset, py::arg("s"))
      .def("__repr__", &LogLiftModel::describe);

  m.def("eval_F", py::overload_cast<const LogLiftModel&, Complex>(&eval_F), py::arg("model"), py::arg("z"));
  m.def("eval_dF", py::overload_cast<const LogLiftModel&, Complex>(&eval_dF), py::arg("model"), py::arg("z"));
  m.def(
      "normalize",
      [](const LogLiftModel& model, double lo, double hi, std::size_t n) {
        const NormalizationResult r = normalize(model, lo, hi, n);
        return py::make_tuple(r.model, r.offset, r.min_derivative);
      },
      py::arg("model"), py::arg("lo") = 0.0, py::arg("hi") = 50.0, py::arg("sample_size") = 1000);

  // Tracts
  py::class_<TractAddress>(m, "TractAddress")
      .def(py::init([](long long k, int inner) { return TractAddress{k, inner}; }), py::arg("branch_index"),
           py::arg("inner_branch") = 0)
      .def_readwrite("branch_index", &TractAddress::branch_index)
      .def_readwrite("inner_branch", &TractAddress::inner_branch)
      .def(py::self == py::self)
      .def("__hash__", [](const TractAddress& t) { return py::hash(py::make_tuple(t.branch_index, t.inner_branch)); })
      .def("__repr__", [](const TractAddress& t) { return to_string(t); });

  m.def("domain_contains", &domain_contains, py::arg("model"), py::arg("z"));
  m.def("tract_of", &tract_of, py::arg("model"), py::arg("z"));
  m.def("inverse_branch", &inverse_branch, py::arg("model"), py::arg("tract"), py::arg("w"));

  // Hyperbolic metric
  m.def("rho_half_plane", &rho_half_plane, py::arg("Q"), py::arg("z"));
  m.def("dist_half_plane", &dist_half_plane, py::arg("Q"), py::arg("z"), py::arg("w"));
  m.def("hyperbolic_derivative", &hyperbolic_derivative, py::arg("model"), py::arg("z"));

  // Orbits
  py::class_<OrbitRecord>(m, "OrbitRecord")
      .def_readonly("points", &OrbitRecord::points)
      .def_readonly("horizon", &OrbitRecord::horizon)
      .def_readonly("flag_step", &OrbitRecord::flag_step)
      .def_readonly("real_ray_tail", &OrbitRecord::real_ray_tail)
      .def_property_readonly("flag", [](const OrbitRecord& r) { return to_string(r.flag); })
      .def_property_readonly("in_JQ", &OrbitRecord::in_JQ);

  m.def("iterate", &iterate, py::arg("model"), py::arg("z"), py::arg("horizon"), py::arg("Q"));
  m.def(
      "external_address",
      [](const LogLiftModel& model, Complex z, int n) { return external_address(model, z, n).entries; },
      py::arg("model"), py::arg("z"), py::arg("n"));
  m.def("expansion_ratios", &expansion_ratios, py::arg("model"), py::arg("z"), py::arg("w"), py::arg("n"));

  py::class_<PeriodicPoint>(m, "PeriodicPoint")
      .def_readonly("z", &PeriodicPoint::z)
      .def_readonly("cycle", &PeriodicPoint::cycle)
      .def_readonly("residual", &PeriodicPoint::residual)
      .def_readonly("iterations", &PeriodicPoint::iterations);

  m.def(
      "point_with_address",
      [](const LogLiftModel& model, const std::vector<TractAddress>& word, double Q, double tol) {
        return point_with_address(model, word, Q, tol);
      },
      py::arg("model"), py::arg("word"), py::arg("Q"), py::arg("tol") = 1e-13);
  m.def("deep_periodic_points", &deep_periodic_points, py::arg("model"), py::arg("count"), py::arg("re_floor"),
        py::arg("Q"), py::arg("seed") = 1);

  m.def(
      "classify_grid",
      [](const EntireMapSpec& map, std::tuple<double, double, double, double> window, int width, int height,
         double escape_radius, int horizon, unsigned workers) {
        GridSpec spec;
        spec.window = {std::get<0>(window), std::get<1>(window), std::get<2>(window), std::get<3>(window)};
        spec.width = width;
        spec.height = height;
        spec.escape_radius = escape_radius;
        spec.horizon = horizon;
        const ClassGrid grid = classify_grid(map, spec, workers);
        // Row-major list of rows, 0 in J_R up to the horizon, 1 escaped small, 2 overflowed large.
        std::vector<std::vector<int>> rows(static_cast<std::size_t>(height), std::vector<int>(width));
        for (int r = 0; r < height; ++r)
          for (int c = 0; c < width; ++c) rows[r][c] = static_cast<int>(grid.at(c, r));
        return rows;
      },
      py::arg("map"), py::arg("window") = std::make_tuple(-4.0, 4.0, -4.0, 4.0), py::arg("width") = 256,
      py::arg("height") = 256, py::arg("escape_radius") = 50.0, py::arg("horizon") = 30, py::arg("workers") = 0);

  // Conjugacy
  py::class_<OrbitSegment>(m, "OrbitSegment")
      .def_readonly("points", &OrbitSegment::points)
      .def_readonly("real_ray_tail", &OrbitSegment::real_ray_tail);

  m.def("certified_orbit", py::overload_cast<const LogLiftModel&, Complex, int, double>(&certified_orbit),
        py::arg("model"), py::arg("z"), py::arg("steps"), py::arg("Q"));
  m.def("periodic_orbit", &periodic_orbit, py::arg("point"), py::arg("steps"));

  py::class_<ConjugacySample>(m, "ConjugacySample")
      .def_readonly("z", &ConjugacySample::z)
      .def_readonly("theta", &ConjugacySample::theta)
      .def_readonly("depth", &ConjugacySample::depth)
      .def_readonly("tail_bound", &ConjugacySample::tail_bound)
      .def_readonly("residual", &ConjugacySample::residual);

  m.def("depth_for_tolerance", &depth_for_tolerance, py::arg("kappa"), py::arg("tol"));
  m.def("theta_n",
        py::overload_cast<const LogLiftModel&, Complex, const OrbitSegment&, int, double, int>(&theta_n),
        py::arg("F0"), py::arg("kappa"), py::arg("orbit"), py::arg("n"), py::arg("Q"), py::arg("start") = 0);
  m.def("theta_limit",
        py::overload_cast<const LogLiftModel&, Complex, const OrbitSegment&, double, double, int>(&theta_limit),
        py::arg("F0"), py::arg("kappa"), py::arg("orbit"), py::arg("tol"), py::arg("Q"), py::arg("max_depth") = 200);
  m.def("conjugacy_residual", &conjugacy_residual, py::arg("F0"), py::arg("kappa"), py::arg("orbit"), py::arg("n"),
        py::arg("Q"));
  m.def("motion_dilatation_ceiling", &motion_dilatation_ceiling, py::arg("kappa"), py::arg("Q_prime"));

  // Semiconjugacy
  py::class_<HyperbolicSetup>(m, "HyperbolicSetup")
      .def_readonly("lam", &HyperbolicSetup::lambda)
      .def_readonly("r_U", &HyperbolicSetup::r_U)
      .def_readonly("K", &HyperbolicSetup::K)
      .def_readonly("R", &HyperbolicSetup::R)
      .def_readonly("M", &HyperbolicSetup::M)
      .def_readonly("mu", &HyperbolicSetup::mu)
      .def("g", &HyperbolicSetup::g);

  py::class_<SemiconjSample>(m, "SemiconjSample")
      .def_readonly("z", &SemiconjSample::z)
      .def_readonly("theta", &SemiconjSample::theta)
      .def_readonly("thetas", &SemiconjSample::thetas)
      .def_readonly("increments", &SemiconjSample::increments)
      .def_readonly("functional_residuals", &SemiconjSample::functional_residuals)
      .def_readonly("depth", &SemiconjSample::depth)
      .def_readonly("displacement_bound", &SemiconjSample::displacement_bound);

  py::class_<ExpansionCertificate>(m, "ExpansionCertificate")
      .def_readonly("C_hat", &ExpansionCertificate::C_hat)
      .def_readonly("argmin", &ExpansionCertificate::argmin)
      .def_readonly("counted", &ExpansionCertificate::counted)
      .def_readonly("skipped", &ExpansionCertificate::skipped);

  m.def("build_setup", &build_setup, py::arg("lam") = Complex{0.5, 0.0}, py::arg("r_U") = 0.7, py::arg("K") = 2.0,
        py::arg("R") = 11.0);
  m.def("semiconj_mu", &semiconj_mu, py::arg("M"));
  m.def(
      "expansion_certificate",
      [](const HyperbolicSetup& setup, double radius) {
        return expansion_certificate(setup, default_certificate_region(setup, radius));
      },
      py::arg("setup"), py::arg("radius") = 1000.0);
  m.def(
      "escaping_g_orbit",
      [](const HyperbolicSetup& setup, long long b0, int sign, int length) {
        return escaping_g_orbit(setup, b0, sign, length);
      },
      py::arg("setup"), py::arg("b0"), py::arg("sign"), py::arg("length"));
  m.def(
      "semiconj_limit",
      [](const HyperbolicSetup& setup, const std::vector<Complex>& orbit, double tol, double C) {
        return semiconj_limit(setup, orbit, tol, C);
      },
      py::arg("setup"), py::arg("orbit"), py::arg("tol"), py::arg("certified_C"));

  // Self-checks
  m.def("suite_names", &suite_names);
  m.def(
      "run_suite",
      [](const std::string& suite) {
        py::list out;
        for (const CheckResult& r : run_suite(suite)) {
          py::dict d;
          d["suite"] = r.suite;
          d["name"] = r.name;
          d["passed"] = r.passed;
          d["detail"] = r.detail;
          d["seconds"] = r.seconds;
          out.append(d);
        }
        return out;
      },
      py::arg("suite") = "all");
}
