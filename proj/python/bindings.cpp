// Python bindings for the main operations.
#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "oudisp/estimates.hpp"
#include "oudisp/field_io.hpp"
#include "oudisp/kernels.hpp"
#include "oudisp/lti.hpp"
#include "oudisp/propagator.hpp"

namespace py = pybind11;
using namespace oudisp;

namespace {

FourierEngine engine_from(const std::string& s) {
  if (s == "czt") return FourierEngine::CZT;
  if (s == "direct") return FourierEngine::DIRECT;
  throw OutOfRange("engine must be 'czt' or 'direct'");
}

PropagationMethod method_from(const std::string& s) {
  if (s == "chirp_ft") return PropagationMethod::CHIRP_FT;
  if (s == "quadrature") return PropagationMethod::QUADRATURE;
  if (s == "hermite") return PropagationMethod::HERMITE;
  throw OutOfRange("method must be 'chirp_ft', 'quadrature' or 'hermite'");
}

OscillatorRoute route_from(const std::string& s) {
  if (s == "gauge") return OscillatorRoute::GAUGE;
  if (s == "kernel") return OscillatorRoute::KERNEL;
  throw OutOfRange("route must be 'gauge' or 'kernel'");
}

py::array samples_array(const ComplexField& f) {
  const GridSpec& g = f.grid();
  std::vector<py::ssize_t> shape(g.m, g.N);
  py::array_t<cplx> out(shape);
  std::copy(f.samples().begin(), f.samples().end(), out.mutable_data());
  return out;
}

ComplexField field_from_array(const GridSpec& g, Gauge gauge,
                              const py::array_t<cplx, py::array::c_style |
                                                          py::array::forcecast>& a) {
  if (static_cast<std::size_t>(a.size()) != g.size())
    throw OutOfRange("sample count does not match grid size");
  std::vector<cplx> s(a.data(), a.data() + a.size());
  return ComplexField(g, gauge, std::move(s));
}

}  // namespace

PYBIND11_MODULE(oudisp, m) {
  m.doc() = "Ornstein-Uhlenbeck Schroedinger group, hypoelliptic Gramians, "
            "Mehler kernels, and sharp dispersive estimates";

  py::register_exception<ConfigError>(m, "ConfigError");
  static py::exception<Error> exc(m, "NumericalError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(exc, e.what());
    }
  });

  // ----- linear systems
  py::class_<SystemSpec>(m, "SystemSpec")
      .def(py::init<Eigen::MatrixXd, Eigen::MatrixXd>(), py::arg("Q"), py::arg("B"))
      .def_readonly("m", &SystemSpec::m)
      .def_readonly("Q", &SystemSpec::Q)
      .def_readonly("B", &SystemSpec::B);
  m.def("ou_system", &ou_system, py::arg("m"));
  m.def("kolmogorov_system", &kolmogorov_system, py::arg("n"));
  m.def("smoluchowski_kramers_system", &smoluchowski_kramers_system);

  py::class_<HypoReport>(m, "HypoReport")
      .def_readonly("t", &HypoReport::t)
      .def_readonly("Qt", &HypoReport::Qt)
      .def_readonly("det_Qt", &HypoReport::det_Qt)
      .def_readonly("min_eig", &HypoReport::min_eig)
      .def_readonly("kalman_rank", &HypoReport::kalman_rank)
      .def_readonly("hypoelliptic", &HypoReport::hypoelliptic)
      .def_readonly("spectral_abscissa", &HypoReport::spectral_abscissa)
      .def_readonly("has_invariant_measure", &HypoReport::has_invariant_measure);
  py::class_<InvariantMeasure>(m, "InvariantMeasure")
      .def_readonly("Q_inf", &InvariantMeasure::Q_inf)
      .def_readonly("log_normalizer", &InvariantMeasure::log_normalizer);

  m.def("matrix_exp", &matrix_exp, py::arg("M"));
  m.def("covariance_gramian", &covariance_gramian, py::arg("sys"), py::arg("t"));
  m.def("hypoellipticity_check", &hypoellipticity_check, py::arg("sys"), py::arg("t"));
  m.def("invariant_measure", &invariant_measure, py::arg("sys"));
  m.def("spectral_abscissa", &spectral_abscissa, py::arg("B"));

  // ----- grids and fields
  py::enum_<Gauge>(m, "Gauge").value("PHI", Gauge::PHI).value("PSI", Gauge::PSI);
  py::class_<GridSpec>(m, "GridSpec")
      .def(py::init<int, double, int>(), py::arg("m"), py::arg("L"), py::arg("N"))
      .def_readonly("m", &GridSpec::m)
      .def_readonly("L", &GridSpec::L)
      .def_readonly("N", &GridSpec::N)
      .def_property_readonly("h", &GridSpec::h)
      .def("point", &GridSpec::point)
      .def_static("default_for", &GridSpec::default_for)
      .def("points", [](const GridSpec& g) {
        py::array_t<double> out(g.N);
        for (int j = 0; j < g.N; ++j) out.mutable_data()[j] = g.point(j);
        return out;
      });
  py::class_<ComplexField>(m, "ComplexField")
      .def_property_readonly("grid", &ComplexField::grid)
      .def_property_readonly("gauge", &ComplexField::gauge)
      .def("samples", &samples_array);
  m.def("field_from_samples", &field_from_array, py::arg("grid"), py::arg("gauge"),
        py::arg("samples"));
  m.def("to_psi_gauge", &to_psi_gauge);
  m.def("from_psi_gauge", &from_psi_gauge);
  m.def("norm_l2", &norm_l2);
  m.def("norm_gauss", &norm_gauss);
  m.def("norm_lp", &norm_lp, py::arg("f"), py::arg("p"));
  m.def("save_field", &save_field, py::arg("f"), py::arg("path"));
  m.def("load_field", &load_field, py::arg("path"));

  py::class_<GaussianState>(m, "GaussianState")
      .def(py::init<int, cplx, cplx>(), py::arg("m"), py::arg("beta"),
           py::arg("c") = cplx(1.0, 0.0))
      .def_readonly("m", &GaussianState::m)
      .def_readonly("beta", &GaussianState::beta)
      .def_readonly("c", &GaussianState::c);
  m.def(
      "gaussian_state_eval",
      [](const GaussianState& s, const GridSpec& g) {
        bool warn = false;
        ComplexField f = gaussian_state_eval(s, g, &warn);
        return py::make_tuple(std::move(f), warn);
      },
      py::arg("state"), py::arg("grid"));

  // ----- transforms
  m.def(
      "fourier_at_scaled",
      [](const ComplexField& g, double scale, const std::string& engine) {
        return fourier_at_scaled(g, scale, engine_from(engine));
      },
      py::arg("g"), py::arg("scale"), py::arg("engine") = "czt");
  m.def("gaussian_fourier", &gaussian_fourier, py::arg("A"), py::arg("xi"));

  // ----- kernels
  m.def("hormander_kernel", &hormander_kernel, py::arg("sys"), py::arg("x"),
        py::arg("y"), py::arg("t"));
  m.def("kolmogorov_kernel", &kolmogorov_kernel, py::arg("n"), py::arg("x"),
        py::arg("y"), py::arg("xb"), py::arg("yb"), py::arg("t"));
  m.def("mehler_kernel", &mehler_kernel, py::arg("omega"), py::arg("x"), py::arg("y"),
        py::arg("t"));
  m.def("heat_evolve", &heat_evolve, py::arg("sys"), py::arg("phi"), py::arg("t"));

  // ----- propagator
  py::class_<TimePoint>(m, "TimePoint")
      .def(py::init<double>(), py::arg("t"))
      .def_readonly("t_raw", &TimePoint::t_raw)
      .def_readonly("t_red", &TimePoint::t_red)
      .def_readonly("k_period", &TimePoint::k_period)
      .def_property_readonly("is_identity",
                             [](const TimePoint& t) {
                               return t.kind == TimePoint::Kind::IDENTITY;
                             })
      .def_property_readonly("is_singular",
                             [](const TimePoint& t) {
                               return t.kind == TimePoint::Kind::SINGULAR;
                             })
      .def_property_readonly("branch", [](const TimePoint& t) {
        return t.branch == TimePoint::Branch::J_PLUS ? "J+" : "J-";
      });
  m.def(
      "propagate",
      [](const ComplexField& phi, double t, const std::string& method,
         const std::string& engine, int hermite_order) {
        return propagate(phi, TimePoint(t), method_from(method),
                         engine_from(engine), hermite_order);
      },
      py::arg("phi"), py::arg("t"), py::arg("method") = "chirp_ft",
      py::arg("engine") = "czt", py::arg("hermite_order") = 0);
  m.def(
      "propagate_gaussian",
      [](const GaussianState& s, double t) {
        return propagate_gaussian(s, TimePoint(t));
      },
      py::arg("state"), py::arg("t"));
  m.def(
      "oscillator_propagate",
      [](const ComplexField& u0, double t, const std::string& route,
         const std::string& engine) {
        return oscillator_propagate(u0, TimePoint(t), route_from(route),
                                    engine_from(engine));
      },
      py::arg("u0"), py::arg("t"), py::arg("route") = "gauge",
      py::arg("engine") = "czt");

  py::class_<HermiteCoeffs>(m, "HermiteCoeffs")
      .def_readonly("K", &HermiteCoeffs::K)
      .def_readonly("truncation_warning", &HermiteCoeffs::truncation_warning)
      .def_readonly("tail_fraction", &HermiteCoeffs::tail_fraction)
      .def_property_readonly("coeffs", [](const HermiteCoeffs& c) {
        py::array_t<cplx> out(static_cast<py::ssize_t>(c.coeffs.size()));
        std::copy(c.coeffs.begin(), c.coeffs.end(), out.mutable_data());
        return out;
      });
  m.def("hermite_value", &hermite_value, py::arg("k"), py::arg("x"));
  m.def("hermite_field", &hermite_field, py::arg("grid"), py::arg("k"));
  m.def("hermite_analyze", &hermite_analyze, py::arg("phi"), py::arg("K"));
  m.def("hermite_synthesize", &hermite_synthesize, py::arg("coeffs"), py::arg("t"));
  m.def("riccati_residual", &riccati_residual, py::arg("grid"), py::arg("t_samples"));

  // ----- estimates
  py::class_<DispersionRecord>(m, "DispersionRecord")
      .def_readonly("p", &DispersionRecord::p)
      .def_readonly("p_prime", &DispersionRecord::p_prime)
      .def_readonly("t", &DispersionRecord::t)
      .def_readonly("lhs", &DispersionRecord::lhs)
      .def_readonly("rhs", &DispersionRecord::rhs)
      .def_readonly("ratio", &DispersionRecord::ratio);
  py::class_<UncertaintyRecord>(m, "UncertaintyRecord")
      .def_readonly("beta0", &UncertaintyRecord::beta0)
      .def_readonly("s", &UncertaintyRecord::s)
      .def_readonly("a_max", &UncertaintyRecord::a_max)
      .def_readonly("b_max", &UncertaintyRecord::b_max)
      .def_readonly("product", &UncertaintyRecord::product)
      .def_readonly("threshold", &UncertaintyRecord::threshold);
  m.def("hausdorff_young_constant", &hausdorff_young_constant, py::arg("p"),
        py::arg("m"));
  m.def(
      "dispersive_report",
      [](const ComplexField& phi, double p, double t, const std::string& engine) {
        return dispersive_report(phi, p, TimePoint(t), engine_from(engine));
      },
      py::arg("phi"), py::arg("p"), py::arg("t"), py::arg("engine") = "czt");
  m.def("friction_bound_curve", &friction_bound_curve, py::arg("p"), py::arg("m"),
        py::arg("t"));
  m.def("uncertainty_product", &uncertainty_product, py::arg("beta0"), py::arg("s"));
  m.def("hardy_predicate", &hardy_predicate, py::arg("a"), py::arg("b"), py::arg("s"));
  m.def("hardy_reduction", &hardy_reduction, py::arg("a"), py::arg("b"), py::arg("s"));
}
