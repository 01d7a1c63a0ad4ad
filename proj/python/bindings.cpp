#include "anhosc/algebra.hpp"
#include "anhosc/cli.hpp"
#include "anhosc/continuum.hpp"
#include "anhosc/correction.hpp"
#include "anhosc/errors.hpp"
#include "anhosc/lattice.hpp"
#include "anhosc/matrixrec.hpp"
#include "anhosc/specfun.hpp"
#include "anhosc/spectral.hpp"
#include "anhosc/validation.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace anhosc;

namespace {

ModelParams make_params(double a, double b, double c, double beta, double x_f) {
    ModelParams p;
    p.a = a;
    p.b = b;
    p.c = c;
    p.beta = beta;
    p.x_f = x_f;
    return p;
}

py::tuple rational_pair(const Rational& r) { return py::make_tuple(r.numerator(), r.denominator()); }

}  // namespace

PYBIND11_MODULE(_anhosc, m) {
    m.doc() = "Quartic anharmonic oscillator propagator";

    auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<DomainError>(m, "DomainError", base.ptr());
    py::register_exception<AccuracyError>(m, "AccuracyError", base.ptr());
    py::register_exception<SingularLatticeError>(m, "SingularLatticeError", base.ptr());
    py::register_exception<SingularFrequencyError>(m, "SingularFrequencyError", base.ptr());
    py::register_exception<PoleHitError>(m, "PoleHitError", base.ptr());

    py::class_<ModelParams>(m, "ModelParams")
        .def(py::init(&make_params), py::arg("a") = 0.0, py::arg("b") = 0.0, py::arg("c") = 1.0,
             py::arg("beta") = 1.0, py::arg("x_f") = 0.0)
        .def_readwrite("a", &ModelParams::a)
        .def_readwrite("b", &ModelParams::b)
        .def_readwrite("c", &ModelParams::c)
        .def_readwrite("beta", &ModelParams::beta)
        .def_readwrite("x_f", &ModelParams::x_f)
        .def("gamma_sq", &ModelParams::gamma_sq)
        .def("validate", &ModelParams::validate)
        .def("__repr__", [](const ModelParams& p) {
            return "ModelParams(a=" + format_double(p.a) + ", b=" + format_double(p.b) + ", c=" + format_double(p.c) +
                   ", beta=" + format_double(p.beta) + ", x_f=" + format_double(p.x_f) + ")";
        });

    py::class_<TruncationPolicy>(m, "TruncationPolicy")
        .def(py::init([](int order, int cutoff, double rel_tol, double abs_tol, int p_max) {
                 TruncationPolicy t;
                 t.poincare_order = order;
                 t.series_cutoff = cutoff;
                 t.quad_rel_tol = rel_tol;
                 t.quad_abs_tol = abs_tol;
                 t.p_max = p_max;
                 t.validate();
                 return t;
             }),
             py::arg("poincare_order") = 3, py::arg("series_cutoff") = 64, py::arg("quad_rel_tol") = 1e-10,
             py::arg("quad_abs_tol") = 1e-14, py::arg("p_max") = 2)
        .def_readwrite("poincare_order", &TruncationPolicy::poincare_order)
        .def_readwrite("series_cutoff", &TruncationPolicy::series_cutoff)
        .def_readwrite("quad_rel_tol", &TruncationPolicy::quad_rel_tol)
        .def_readwrite("quad_abs_tol", &TruncationPolicy::quad_abs_tol)
        .def_readwrite("p_max", &TruncationPolicy::p_max);

    py::class_<PropagatorResult>(m, "PropagatorResult")
        .def_readonly("harmonic_prefactor", &PropagatorResult::harmonic_prefactor)
        .def_readonly("harmonic_exponent", &PropagatorResult::harmonic_exponent)
        .def_readonly("universal_exponent", &PropagatorResult::universal_exponent)
        .def_readonly("polynomial_factor", &PropagatorResult::polynomial_factor)
        .def_readonly("value", &PropagatorResult::value)
        .def_readonly("tail_estimates", &PropagatorResult::tail_estimates)
        .def_readonly("status", &PropagatorResult::status);

    py::class_<HarmonicFactor>(m, "HarmonicFactor")
        .def_readonly("prefactor", &HarmonicFactor::prefactor)
        .def_readonly("exponent", &HarmonicFactor::exponent);

    const TruncationPolicy def;
    auto pol = py::arg("policy") = def;

    // special functions
    m.def("coeff_a", &coeff_a, py::arg("i"), py::arg("j"));
    m.def("pcf_scaled_ref", &pcf_scaled_ref, py::arg("m"), py::arg("z"), pol);
    m.def("pcf_scaled_poincare", &pcf_scaled_poincare, py::arg("m"), py::arg("z"), py::arg("J"));
    m.def("pcf_poincare_next_term", &pcf_poincare_next_term, py::arg("m"), py::arg("z"), py::arg("J"));
    m.def("j1_quartic", &j1_quartic, py::arg("a"), py::arg("b"), py::arg("c"), pol);

    // lattice
    m.def("wn_series_exact", &wn_series_exact, py::arg("params"), py::arg("N"), pol);
    m.def("wn_quadrature", &wn_quadrature, py::arg("params"), py::arg("N"), pol);
    m.def("lambda_symbol", [](int L, int mu, int p, const ModelParams& params, int N) {
        return lambda_symbol(L, mu, p, LatticeState::build(params, N));
    }, py::arg("Lambda"), py::arg("mu"), py::arg("p"), py::arg("params"), py::arg("N"));

    // continuum
    m.def("harmonic_fixed_origin", &harmonic_fixed_origin, py::arg("params"));
    m.def("mehler_kernel", &mehler_kernel, py::arg("k"), py::arg("x_i"), py::arg("x_f"), py::arg("nu"));
    m.def("prefactor_finite_N", &prefactor_finite_N, py::arg("params"), py::arg("N"));
    m.def("exponent_finite_N", &exponent_finite_N, py::arg("params"), py::arg("N"));
    m.def("quartic_ratio_closed_form", &quartic_ratio_closed_form, py::arg("params"));

    // corrections
    m.def("nested_integral", &nested_integral, py::arg("word"), py::arg("tau"), py::arg("params"), pol);
    m.def("universal_exponent", &universal_exponent, py::arg("params"));
    m.def("correction_series", &correction_series, py::arg("params"), pol);
    m.def("full_propagator", &full_propagator, py::arg("params"), pol);
    m.def("count_multi_indices", &count_multi_indices, py::arg("nu"), py::arg("p"));
    m.def("p2_coefficient_report", [] {
        py::list out;
        for (const auto& mm : p2_coefficient_report())
            out.append(py::make_tuple(mm.word, rational_pair(mm.published), rational_pair(mm.generic)));
        return out;
    });

    // algebra: combinations come back as {word tuple: (num, den)}
    auto as_dict = [](const IntegralCombination& c) {
        py::dict d;
        for (const auto& [w, r] : c.terms()) d[py::tuple(py::cast(w))] = rational_pair(r);
        return d;
    };
    m.def("shuffle_pair", [as_dict](int letter, const IndexWord& w) { return as_dict(shuffle_pair(letter, w)); },
          py::arg("letter"), py::arg("word"));
    m.def("reduce_against_zeros",
          [as_dict](const std::string& pattern, int n, int alpha, int beta, int a) {
              return as_dict(reduce_against_zeros(parse_zero_pattern(pattern), n, alpha, beta, a));
          },
          py::arg("pattern"), py::arg("n"), py::arg("alpha"), py::arg("beta"), py::arg("a"));

    // matrices
    m.def("lambda_from_matrix", [](int L, int mu, int p, const ModelParams& params, int N) {
        return lambda_from_matrix(L, mu, p, MatrixLattice::build(params, N));
    }, py::arg("Lambda"), py::arg("mu"), py::arg("p"), py::arg("params"), py::arg("N"));

    // spectral
    m.def("gamma_product", &gamma_product, py::arg("E_im"), py::arg("gamma"));
    m.def("locate_poles_numeric", &locate_poles_numeric, py::arg("gamma"), py::arg("search_radius"));
    m.def("x_fourier_zero_momentum", &x_fourier_zero_momentum, py::arg("params"), pol);

    m.def("run_suite", [](const std::string& name) {
        const SuiteReport rep = run_suite(name);
        py::list checks;
        for (const Check& c : rep.checks)
            checks.append(py::dict(py::arg("name") = c.name, py::arg("passed") = c.passed,
                                   py::arg("measured") = c.measured, py::arg("tolerance") = c.tolerance));
        return checks;
    }, py::arg("suite") = "all");
}
