#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>

#include "plategap/asymptotics.hpp"
#include "plategap/eigenmodes.hpp"
#include "plategap/load.hpp"
#include "plategap/quadrature.hpp"
#include "plategap/residual.hpp"
#include "plategap/scaled.hpp"
#include "plategap/series.hpp"

namespace py = pybind11;
using namespace plategap;

namespace {

ResidualReport solution_residual(const PlateSolution& solution,
                                 const std::vector<double>& steps) {
    Field2D u = [&solution](long double x, long double y) {
        return solution.evaluate_precise(x, y);
    };
    Field2D f = [&solution](long double x, long double y) {
        return solution.load().evaluate_precise(x, y);
    };
    return biharmonic_residual(u, f, solution.geometry(), steps);
}

ResidualReport mode_residual(const TorsionalMode& mode, const std::vector<double>& steps) {
    Field2D u = [&mode](long double x, long double y) {
        return mode.profile_precise(y) * sinl(mode.m() * x);
    };
    Field2D f = [&mode](long double x, long double y) {
        return static_cast<long double>(mode.nu()) * mode.profile_precise(y) *
               sinl(mode.m() * x);
    };
    return biharmonic_residual(u, f, mode.geometry(), steps);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Torsional-performance analysis of partially hinged rectangular plates";

    py::register_exception<InvalidParameterError>(m, "InvalidParameterError",
                                                  PyExc_ValueError);
    py::register_exception<DegenerateConfigError>(m, "DegenerateConfigError",
                                                  PyExc_RuntimeError);
    py::register_exception<PoleProximityError>(m, "PoleProximityError", PyExc_RuntimeError);
    py::register_exception<QuadratureError>(m, "QuadratureError", PyExc_RuntimeError);

    py::class_<PlateGeometry>(m, "PlateGeometry")
        .def(py::init<double, double>(), py::arg("half_width"), py::arg("poisson"))
        .def_property_readonly("half_width", &PlateGeometry::half_width)
        .def_property_readonly("poisson", &PlateGeometry::poisson)
        .def_property_readonly("is_narrow", &PlateGeometry::is_narrow)
        .def("__repr__", [](const PlateGeometry& g) {
            return "PlateGeometry(half_width=" + std::to_string(g.half_width()) +
                   ", poisson=" + std::to_string(g.poisson()) + ")";
        });

    m.def(
        "stable_ratio",
        [](const std::string& kn, double an, const std::string& kd, double ad) {
            return stable_ratio(hyperbolic_kind_from_string(kn), an,
                                hyperbolic_kind_from_string(kd), ad);
        },
        py::arg("kind_num"), py::arg("arg_num"), py::arg("kind_den"), py::arg("arg_den"),
        "Overflow-safe sinh/cosh/exp ratio");

    m.def(
        "integrate",
        [](const std::function<double(double)>& f, double a, double b, double rel_tol,
           double abs_tol) { return integrate_adaptive(f, a, b, rel_tol, abs_tol); },
        py::arg("f"), py::arg("a"), py::arg("b"), py::arg("rel_tol") = 1e-10,
        py::arg("abs_tol") = 1e-14, "Adaptive Simpson quadrature");

    m.def("fourier_sine_coefficients",
          [](const std::function<double(double)>& g, int m_max) {
              std::vector<std::pair<int, double>> out;
              for (const auto& fm : fourier_sine_coefficients(g, m_max))
                  out.emplace_back(fm.m, fm.coefficient);
              return out;
          },
          py::arg("g"), py::arg("m_max"));

    py::class_<LoadSpec>(m, "LoadSpec")
        .def_property_readonly("alpha", &LoadSpec::alpha)
        .def_property_readonly("gammas",
                               [](const LoadSpec& load) {
                                   std::vector<std::pair<int, double>> out;
                                   for (const auto& fm : load.gammas())
                                       out.emplace_back(fm.m, fm.coefficient);
                                   return out;
                               })
        .def_property_readonly("l1_g", &LoadSpec::l1_g)
        .def_property_readonly("k_alpha", &LoadSpec::k_alpha_value)
        .def("evaluate", &LoadSpec::evaluate, py::arg("x"), py::arg("y"));

    m.def(
        "make_load",
        [](const PlateGeometry& g, double alpha,
           const std::vector<std::pair<int, double>>& gammas) {
            std::vector<FourierMode> modes;
            for (const auto& [mm, coef] : gammas) modes.push_back({mm, coef});
            return make_load(g, alpha, std::move(modes));
        },
        py::arg("geometry"), py::arg("alpha"), py::arg("gammas"),
        "Load from explicit sine coefficients of g");
    m.def(
        "make_load_from_function",
        [](const PlateGeometry& g, double alpha, const std::function<double(double)>& fn,
           int m_max) { return make_load(g, alpha, fn, m_max); },
        py::arg("geometry"), py::arg("alpha"), py::arg("g"), py::arg("m_max") = 1024);
    m.def("make_sine_load", &make_sine_load, py::arg("geometry"), py::arg("alpha"));

    py::class_<PlateSolution>(m, "PlateSolution")
        .def("evaluate", &PlateSolution::evaluate, py::arg("x"), py::arg("y"))
        .def_property_readonly("geometry", &PlateSolution::geometry)
        .def_property_readonly("load", &PlateSolution::load);

    m.def("solve", &solve, py::arg("geometry"), py::arg("load"));

    py::class_<GapProfile>(m, "GapProfile")
        .def_readonly("mode_amplitudes", &GapProfile::mode_amplitudes)
        .def_readonly("g_infinity", &GapProfile::g_infinity)
        .def("evaluate", &GapProfile::evaluate, py::arg("x"));

    m.def("gap_profile", &gap_profile, py::arg("solution"));

    m.def("edge_gap", &edge_gap, py::arg("geometry"), py::arg("alpha"),
          "Maximal gap under the unit-L1 load K exp(alpha y) sin x");
    m.def("edge_gap_limit", &edge_gap_limit, py::arg("geometry"));
    m.def("first_order_correction", &first_order_correction, py::arg("geometry"));
    m.def("weak_limit_residual", &weak_limit_residual, py::arg("geometry"), py::arg("alpha"),
          py::arg("v"));

    py::enum_<SweepSpacing>(m, "SweepSpacing")
        .value("LOG", SweepSpacing::Log)
        .value("LINEAR", SweepSpacing::Linear);

    py::class_<AlphaSweep>(m, "AlphaSweep")
        .def_readonly("alphas", &AlphaSweep::alphas)
        .def_readonly("nudged", &AlphaSweep::nudged)
        .def_readonly("values", &AlphaSweep::values)
        .def_readonly("limit", &AlphaSweep::limit);

    m.def("sweep_alpha", &sweep_alpha, py::arg("geometry"), py::arg("alpha_min"),
          py::arg("alpha_max"), py::arg("points"), py::arg("spacing") = SweepSpacing::Log);

    py::enum_<Branch>(m, "Branch")
        .value("TRIG", Branch::Trig)
        .value("HYPERBOLIC", Branch::Hyperbolic);

    m.def("mode_branch", &mode_branch, py::arg("geometry"), py::arg("m"));
    m.def("critical_branch_index", &critical_branch_index, py::arg("geometry"));
    m.def("characteristic_residual", &characteristic_residual, py::arg("geometry"),
          py::arg("m"), py::arg("lam"));

    py::class_<TorsionalMode>(m, "TorsionalMode")
        .def_property_readonly("m", &TorsionalMode::m)
        .def_property_readonly("j", &TorsionalMode::j)
        .def_property_readonly("nu", &TorsionalMode::nu)
        .def_property_readonly("branch", &TorsionalMode::branch)
        .def("profile", &TorsionalMode::profile, py::arg("y"));

    m.def("torsional_eigenvalue", &torsional_eigenvalue, py::arg("geometry"), py::arg("m"),
          py::arg("j"));
    m.def("mode_l1_norm", &mode_l1_norm, py::arg("mode"));

    py::class_<EigenGapEntry>(m, "EigenGapEntry")
        .def_readonly("m", &EigenGapEntry::m)
        .def_readonly("j", &EigenGapEntry::j)
        .def_readonly("nu", &EigenGapEntry::nu)
        .def_readonly("l1_norm", &EigenGapEntry::l1_norm)
        .def_readonly("c", &EigenGapEntry::c);

    m.def("gap_constant", &gap_constant, py::arg("geometry"), py::arg("m"), py::arg("j"));

    m.def(
        "gap_constant_table",
        [](const PlateGeometry& g, int m_max, int j_max) {
            const auto table = gap_constant_table(g, m_max, j_max);
            py::list rows;
            for (int j = 1; j <= j_max; ++j) {
                py::list row;
                for (int mm = 1; mm <= m_max; ++mm) {
                    const auto& cell = table.at(mm, j);
                    if (cell.entry)
                        row.append(py::cast(*cell.entry));
                    else
                        row.append(py::none());
                }
                rows.append(row);
            }
            return rows;
        },
        py::arg("geometry"), py::arg("m_max"), py::arg("j_max"),
        "Rows indexed by j, columns by m; failed cells are None");

    py::class_<ScalingPoint>(m, "ScalingPoint")
        .def_readonly("ell", &ScalingPoint::ell)
        .def_readonly("c_value", &ScalingPoint::c_value)
        .def_readonly("ratio", &ScalingPoint::ratio);

    py::class_<ScalingStudy>(m, "ScalingStudy")
        .def_readonly("points", &ScalingStudy::points)
        .def_readonly("fitted_slope", &ScalingStudy::fitted_slope)
        .def_readonly("fit_residual", &ScalingStudy::fit_residual);

    m.def("gap_scaling_study", &gap_scaling_study, py::arg("sigma"), py::arg("m"),
          py::arg("j"), py::arg("ell_grid"));

    py::class_<ComboEntry>(m, "ComboEntry")
        .def(py::init([](int mm, int j, double weight) {
                 return ComboEntry{mm, j, weight};
             }),
             py::arg("m"), py::arg("j"), py::arg("weight"))
        .def_readonly("m", &ComboEntry::m)
        .def_readonly("j", &ComboEntry::j)
        .def_readonly("weight", &ComboEntry::weight);

    py::class_<ComboResult>(m, "ComboResult")
        .def_readonly("max_gap", &ComboResult::max_gap)
        .def_readonly("argmax", &ComboResult::argmax)
        .def_readonly("actual_gap", &ComboResult::actual_gap)
        .def_readonly("entries", &ComboResult::entries);

    m.def("combo_max_gap", &combo_max_gap, py::arg("geometry"), py::arg("spec"));

    py::class_<ResidualReport>(m, "ResidualReport")
        .def_readonly("grid_steps", &ResidualReport::grid_steps)
        .def_readonly("interior_max", &ResidualReport::interior_max)
        .def_readonly("bc_max", &ResidualReport::bc_max)
        .def_readonly("fitted_order", &ResidualReport::fitted_order)
        .def_readonly("fit_residual", &ResidualReport::fit_residual);

    m.def("solution_residual", &solution_residual, py::arg("solution"), py::arg("grid_steps"),
          "Finite-difference residual report for a series solution");
    m.def("mode_residual", &mode_residual, py::arg("mode"), py::arg("grid_steps"),
          "Finite-difference residual report for an eigenpair");
    m.def("bracket_scan", &bracket_scan, py::arg("geometry"), py::arg("m"),
          py::arg("lambda_lo"), py::arg("lambda_hi"), py::arg("n_samples"));

    m.def("max_abs_sine_sum", &max_abs_sine_sum, py::arg("modes"));
}
