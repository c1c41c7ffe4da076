#include <array>
#include <optional>
#include <string>

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "jacobi/cocycle_solver.hpp"
#include "jacobi/errors.hpp"
#include "jacobi/eta_multiplier.hpp"
#include "jacobi/jacobi_analysis.hpp"
#include "jacobi/period_module.hpp"
#include "jacobi/theta_weil.hpp"
#include "jacobi/verify.hpp"

namespace py = pybind11;
using namespace jacobi;

namespace {

GroupElement element(const std::array<long, 4>& g) { return GroupElement(g[0], g[1], g[2], g[3]); }

CosetTable table_from(const std::optional<std::string>& text) {
    return text ? CosetTable::from_json(*text) : CosetTable();
}

PrecisionConfig env_config() { return PrecisionConfig::from_env(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Period functions and pairings for Jacobi forms with eta multipliers";

    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<NumericalError>(m, "NumericalError", PyExc_RuntimeError);

    py::class_<PolyThetaVector>(m, "PolyThetaVector")
        .def(py::init<int, int>(), py::arg("k"), py::arg("m"))
        .def(py::init<int, int, CVector>(), py::arg("k"), py::arg("m"), py::arg("coeffs"))
        .def_property_readonly("k", &PolyThetaVector::k)
        .def_property_readonly("m", &PolyThetaVector::m)
        .def_property_readonly("coeffs", [](const PolyThetaVector& P) { return P.coeffs(); })
        .def("component", &PolyThetaVector::component, py::arg("nu"), py::arg("tau"))
        .def("evaluate", [](const PolyThetaVector& P, Complex tau, Complex z) { return P.evaluate(tau, z, env_config()); },
             py::arg("tau"), py::arg("z"))
        .def("table_row", &table_row)
        .def("to_json", &PolyThetaVector::to_json)
        .def_static("from_json", &PolyThetaVector::from_json)
        .def("__add__", &PolyThetaVector::operator+)
        .def("__sub__", &PolyThetaVector::operator-)
        .def("__mul__", &PolyThetaVector::operator*)
        .def("__repr__", [](const PolyThetaVector& P) {
            return "PolyThetaVector(k=" + std::to_string(P.k()) + ", m=" + std::to_string(P.m()) + ")";
        });

    py::class_<WSpaceBasis>(m, "WSpaceBasis")
        .def_readonly("k", &WSpaceBasis::k)
        .def_readonly("m", &WSpaceBasis::m)
        .def_property_readonly("chi", [](const WSpaceBasis& W) { return W.mult.i; })
        .def_readonly("basis", &WSpaceBasis::basis)
        .def_readonly("residuals", &WSpaceBasis::residuals)
        .def_readonly("singular_values", &WSpaceBasis::singular_values)
        .def_property_readonly("dim", &WSpaceBasis::dim)
        .def_property_readonly("smallest_singular_value", &WSpaceBasis::smallest_singular_value);

    m.def("solve_w_space", [](int k, int index, int chi) {
        return solve_w_space(k, index, Multiplier::power(chi), env_config());
    }, py::arg("k"), py::arg("index"), py::arg("chi"));

    m.def("relation_residual", [](const PolyThetaVector& P, int chi) {
        return relation_residual(P, Multiplier::power(chi), env_config());
    }, py::arg("P"), py::arg("chi"));

    m.def("mock_pairing", [](const PolyThetaVector& P, const PolyThetaVector& Q, int chi) {
        return mock_pairing(CosetFunction::constant(P), CosetFunction::constant(Q), Multiplier::power(chi), {},
                            env_config());
    }, py::arg("P"), py::arg("Q"), py::arg("chi"));

    m.def("pair", &pair, py::arg("P"), py::arg("Q"));
    m.def("haberland_constant", &haberland_constant, py::arg("k"), py::arg("index"), py::arg("cosets") = 1);

    m.def("theta_eval", [](int index, int nu, Complex tau, Complex z) {
        return theta_eval(ThetaIndex::make(index, nu), tau, z, env_config());
    }, py::arg("index"), py::arg("nu"), py::arg("tau"), py::arg("z"));

    m.def("dedekind_eta", [](Complex tau) { return dedekind_eta(tau, env_config()); }, py::arg("tau"));

    m.def("chi", [](int i, const std::array<long, 4>& g) {
        return chi(Multiplier::power(i), element(g), env_config());
    }, py::arg("chi"), py::arg("matrix"));

    m.def("chi_exponent48", [](int i, const std::array<long, 4>& g) {
        return chi_exponent48(Multiplier::power(i), element(g), env_config());
    }, py::arg("chi"), py::arg("matrix"));

    py::class_<SkewFourierSeries>(m, "SkewFourierSeries")
        .def_static("from_json", &SkewFourierSeries::from_json)
        .def("to_json", &SkewFourierSeries::to_json)
        .def_property_readonly("k", &SkewFourierSeries::k)
        .def_readonly("index", &SkewFourierSeries::m)
        .def_property_readonly("chi", [](const SkewFourierSeries& F) { return F.mult.i; })
        .def("component", &SkewFourierSeries::component, py::arg("mu"), py::arg("t"))
        .def("evaluate", [](const SkewFourierSeries& F, Complex tau, Complex z) { return F.evaluate(tau, z, env_config()); },
             py::arg("tau"), py::arg("z"));

    m.def("partial_L", [](const SkewFourierSeries& F, int nu, Complex s) -> py::object {
        const LValue v = partial_L(F, ThetaIndex::make(F.m, nu), s);
        if (v.empty_class) return py::none();
        return py::cast(v.value);
    }, py::arg("F"), py::arg("nu"), py::arg("s"));

    m.def("ray_period", [](const SkewFourierSeries& F) { return ray_period_holomorphic(F); }, py::arg("F"));

    m.def("petersson", [](const SkewFourierSeries& F, const SkewFourierSeries& G,
                          const std::optional<std::string>& cosets) {
        return petersson(F, G, table_from(cosets), env_config());
    }, py::arg("F"), py::arg("G"), py::arg("cosets") = py::none());

    m.def("haberland_rhs", [](const SkewFourierSeries& F, const SkewFourierSeries& G,
                              const std::optional<std::string>& cosets) {
        return haberland_rhs(F, G, table_from(cosets), env_config());
    }, py::arg("F"), py::arg("G"), py::arg("cosets") = py::none());

    m.def("suite_names", &suite_names);
    m.def("run_suite", [](const std::string& name) {
        const SuiteReport r = run_suite(name, env_config());
        py::list checks;
        for (const auto& c : r.checks)
            checks.append(py::dict(py::arg("name") = c.name, py::arg("residual") = c.residual,
                                   py::arg("tolerance") = c.tolerance, py::arg("passed") = c.passed));
        return py::dict(py::arg("suite") = r.suite, py::arg("passed") = r.passed(), py::arg("checks") = checks);
    }, py::arg("name"));
}
