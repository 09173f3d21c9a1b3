// Python bindings.  Big integers cross as Python ints, rationals as
// fractions.Fraction, both via decimal strings.

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "fricke/fhs.hpp"
#include "fricke/flat.hpp"
#include "fricke/locus.hpp"
#include "fricke/markoff.hpp"
#include "fricke/spectrum.hpp"
#include "fricke/trace.hpp"

namespace py = pybind11;
using namespace fricke;

namespace {

py::object to_int(const mpz_class& z) {
    return py::reinterpret_steal<py::object>(
        PyLong_FromString(z.get_str().c_str(), nullptr, 10));
}

mpz_class to_mpz(const py::object& o) {
    return mpz_class(py::str(o).cast<std::string>());
}

py::object to_fraction(const mpq_class& q) {
    return py::module_::import("fractions").attr("Fraction")(q.get_str());
}

mpq_class to_mpq(const py::object& o) {
    mpq_class q(py::str(o).cast<std::string>());
    q.canonicalize();
    return q;
}

py::list fraction_list(const RatPoly& p) {
    py::list out;
    for (const auto& c : p) out.append(to_fraction(c));
    return out;
}

}  // namespace

PYBIND11_MODULE(_fricke, m) {
    m.doc() = "trace coordinates for one-holed tori, flat tori, and "
              "four-holed spheres";

    // Conversions and matrices.
    m.def("trace_from_length", &trace_from_length, py::arg("length"));
    m.def("length_from_trace", &length_from_trace, py::arg("trace"));
    m.def("length_from_log_trace", &length_from_log_trace, py::arg("log_trace"));
    m.def("commutator_trace", &commutator_trace, py::arg("x"), py::arg("y"),
          py::arg("z"));

    py::class_<Mat2>(m, "Mat2")
        .def(py::init<double, double, double, double>(), py::arg("a"),
             py::arg("b"), py::arg("c"), py::arg("d"))
        .def_readwrite("a", &Mat2::a)
        .def_readwrite("b", &Mat2::b)
        .def_readwrite("c", &Mat2::c)
        .def_readwrite("d", &Mat2::d)
        .def("trace", &Mat2::trace)
        .def("det", &Mat2::det)
        .def("inverse", &Mat2::inverse)
        .def(py::self * py::self);
    m.def("realize_generators", &realize_generators, py::arg("x"), py::arg("y"),
          py::arg("z"));
    m.def("word_trace",
          [](const Mat2& A, const Mat2& B, const std::string& word) {
              return word_trace(A, B, word);
          },
          py::arg("A"), py::arg("B"), py::arg("word"));

    py::class_<CoshSumSpec>(m, "CoshSumSpec")
        .def(py::init([](double a1, double a2, std::vector<double> bs,
                         double t_max, int grid_points) {
                 return CoshSumSpec{a1, a2, std::move(bs), t_max, grid_points};
             }),
             py::arg("a1"), py::arg("a2"), py::arg("bs") = std::vector<double>{},
             py::arg("t_max") = 50.0, py::arg("grid_points") = 10000)
        .def_readwrite("a1", &CoshSumSpec::a1)
        .def_readwrite("a2", &CoshSumSpec::a2)
        .def_readwrite("bs", &CoshSumSpec::bs)
        .def_readwrite("t_max", &CoshSumSpec::t_max)
        .def_readwrite("grid_points", &CoshSumSpec::grid_points);
    py::class_<ZeroCountReport>(m, "ZeroCountReport")
        .def_readonly("count", &ZeroCountReport::count)
        .def_readonly("zeros", &ZeroCountReport::zeros)
        .def_readonly("plateau", &ZeroCountReport::plateau);
    m.def("count_positive_zeros", &count_positive_zeros, py::arg("spec"));

    // Curves.
    py::class_<Slope>(m, "Slope")
        .def(py::init<long long, long long>(), py::arg("p"), py::arg("q"))
        .def_readonly("p", &Slope::p)
        .def_readonly("q", &Slope::q)
        .def("__str__", &Slope::str)
        .def("__repr__", [](Slope s) { return "Slope(" + s.str() + ")"; })
        .def("__hash__",
             [](Slope s) {
                 return py::hash(py::make_tuple(s.p, s.q));
             })
        .def(py::self == py::self)
        .def(py::self < py::self)
        .def(py::self <= py::self)
        .def(py::self > py::self)
        .def(py::self >= py::self);
    m.def("parse_slope",
          [](const std::string& text) {
              bool reduced = false;
              Slope s = parse_slope(text, &reduced);
              return py::make_tuple(s, reduced);
          },
          py::arg("text"), "returns (slope, was_reduced)");
    m.def("intersection_number", &intersection_number, py::arg("s1"),
          py::arg("s2"));
    m.def("dehn_twist", &dehn_twist, py::arg("s"), py::arg("along"),
          py::arg("k"));
    m.def("slope_word", &slope_word, py::arg("s"));
    m.def("isometry_orbit", &isometry_orbit, py::arg("s"));

    py::class_<TracePolynomial>(m, "TracePolynomial")
        .def_property_readonly("coefficients",
                               [](const TracePolynomial& p) {
                                   py::list out;
                                   for (const auto& c : p.coefficients)
                                       out.append(to_int(c));
                                   return out;
                               })
        .def("degree", &TracePolynomial::degree)
        .def("__call__", [](const TracePolynomial& p, double t) { return p(t); })
        .def("__str__", &TracePolynomial::str)
        .def(py::self == py::self);
    m.def("trace_polynomial", &trace_polynomial, py::arg("s"));

    m.def("trace_of_slope",
          py::overload_cast<double, double, double, Slope>(&trace_of_slope),
          py::arg("x"), py::arg("y"), py::arg("z"), py::arg("s"));
    m.def("trace_of_slope",
          py::overload_cast<const FrickePoint&, Slope>(&trace_of_slope),
          py::arg("point"), py::arg("s"));
    m.def("log_trace_of_slope",
          py::overload_cast<double, double, double, Slope>(&log_trace_of_slope),
          py::arg("x"), py::arg("y"), py::arg("z"), py::arg("s"));
    m.def("log_trace_of_slope",
          py::overload_cast<const FrickePoint&, Slope>(&log_trace_of_slope),
          py::arg("point"), py::arg("s"));

    // The trace-coordinate space.
    py::class_<FrickePoint>(m, "FrickePoint")
        .def(py::init<double, double, double>(), py::arg("x"), py::arg("y"),
             py::arg("z"))
        .def_readwrite("x", &FrickePoint::x)
        .def_readwrite("y", &FrickePoint::y)
        .def_readwrite("z", &FrickePoint::z)
        .def("__repr__", [](const FrickePoint& p) {
            return "FrickePoint(" + std::to_string(p.x) + ", " +
                   std::to_string(p.y) + ", " + std::to_string(p.z) + ")";
        });
    py::class_<Validation>(m, "Validation")
        .def_readonly("valid", &Validation::valid)
        .def_readonly("diagnostic", &Validation::diagnostic)
        .def_readonly("relation", &Validation::relation)
        .def_readonly("boundary", &Validation::boundary);
    m.def("validate", &validate, py::arg("point"));
    m.def("relation_value", &relation_value, py::arg("point"));
    m.def("boundary_length", &boundary_length, py::arg("point"));
    py::class_<TeichSlice>(m, "TeichSlice")
        .def_static("from_boundary", &TeichSlice::from_boundary, py::arg("eps"))
        .def_readonly("eps", &TeichSlice::eps)
        .def_readonly("r_eps", &TeichSlice::r_eps);
    m.def("leaf_point", &leaf_point, py::arg("slice"), py::arg("x"),
          py::arg("theta"));
    m.def("leaf_min_coordinate", &leaf_min_coordinate, py::arg("slice"),
          py::arg("x"));
    m.def("change_basis", &change_basis, py::arg("point"), py::arg("gamma"),
          py::arg("gamma2"));
    m.def("symmetric_family", &symmetric_family, py::arg("t"));

    // Spectrum.
    py::class_<SpectrumEntry>(m, "SpectrumEntry")
        .def_readonly("slope", &SpectrumEntry::slope)
        .def_readonly("trace", &SpectrumEntry::trace)
        .def_readonly("length", &SpectrumEntry::length);
    py::class_<MultiplicityClass>(m, "MultiplicityClass")
        .def_readonly("length", &MultiplicityClass::length)
        .def_readonly("tolerance", &MultiplicityClass::tolerance)
        .def_readonly("members", &MultiplicityClass::members);
    m.def("enumerate_simple", &enumerate_simple, py::arg("point"),
          py::arg("l_max"), py::arg("jobs") = 1);
    m.def("multiplicity_histogram", &multiplicity_histogram, py::arg("point"),
          py::arg("l_max"), py::arg("tol"), py::arg("jobs") = 1);
    m.def("check_markoff_property", &check_markoff_property, py::arg("point"),
          py::arg("l_max"), py::arg("tol"), py::arg("jobs") = 1);
    m.def("twist_sequence", &twist_sequence, py::arg("point"), py::arg("alpha"),
          py::arg("alpha0"), py::arg("k_max"));

    py::class_<RatioEstimate>(m, "RatioEstimate")
        .def_readonly("count", &RatioEstimate::count)
        .def_readonly("steps", &RatioEstimate::steps)
        .def_readonly("value", &RatioEstimate::value)
        .def_readonly("bound", &RatioEstimate::bound);
    m.def("ratio_estimate", &ratio_estimate, py::arg("point"), py::arg("alpha"),
          py::arg("beta"), py::arg("alpha0"), py::arg("beta0"), py::arg("i"));

    py::class_<OrderReversal>(m, "OrderReversal")
        .def_readonly("alpha", &OrderReversal::alpha)
        .def_readonly("beta", &OrderReversal::beta)
        .def_readonly("margin_first", &OrderReversal::margin_first)
        .def_readonly("margin_second", &OrderReversal::margin_second);
    m.def("find_order_reversal", &find_order_reversal, py::arg("first"),
          py::arg("second"), py::arg("l_max"));

    py::class_<EqualTraceFinding>(m, "EqualTraceFinding")
        .def_readonly("s1", &EqualTraceFinding::s1)
        .def_readonly("s2", &EqualTraceFinding::s2)
        .def_readonly("t_star", &EqualTraceFinding::t_star)
        .def_readonly("residual", &EqualTraceFinding::residual)
        .def_readonly("equal_trace_slopes",
                      &EqualTraceFinding::equal_trace_slopes);
    m.def("find_equal_trace_parameter", &find_equal_trace_parameter,
          py::arg("s1"), py::arg("s2"), py::arg("t_lo"), py::arg("t_hi"));
    m.def("scan_equal_trace", &scan_equal_trace, py::arg("complexity_cap"),
          py::arg("t_lo"), py::arg("t_hi"));

    // Equal-length loci.
    py::class_<LocusPoint>(m, "LocusPoint")
        .def_readonly("x_of_gamma", &LocusPoint::x_of_gamma)
        .def_readonly("theta", &LocusPoint::theta)
        .def_readonly("point", &LocusPoint::point);
    py::class_<LocusPolyline>(m, "LocusPolyline")
        .def_readonly("gamma", &LocusPolyline::gamma)
        .def_readonly("gamma2", &LocusPolyline::gamma2)
        .def_readonly("points", &LocusPolyline::points);
    m.def("companion_curves", &companion_curves, py::arg("alpha"),
          py::arg("beta"));
    m.def("locus_point_on_leaf", &locus_point_on_leaf, py::arg("slice"),
          py::arg("alpha"), py::arg("beta"), py::arg("x_of_gamma"),
          py::arg("tol"), py::arg("theta_cap") = 64.0);
    m.def("trace_locus", &trace_locus, py::arg("slice"), py::arg("alpha"),
          py::arg("beta"), py::arg("x_grid"), py::arg("tol"),
          py::arg("jobs") = 1, py::arg("theta_cap") = 64.0);

    // Markoff triples.
    py::enum_<MarkoffForm>(m, "MarkoffForm")
        .value("classical", MarkoffForm::classical)
        .value("trace", MarkoffForm::trace);
    py::class_<MarkoffTriple>(m, "MarkoffTriple")
        .def_property_readonly("x",
                               [](const MarkoffTriple& t) { return to_int(t.x); })
        .def_property_readonly("y",
                               [](const MarkoffTriple& t) { return to_int(t.y); })
        .def_property_readonly("z",
                               [](const MarkoffTriple& t) { return to_int(t.z); })
        .def_readonly("form", &MarkoffTriple::form)
        .def("__repr__", [](const MarkoffTriple& t) {
            return "MarkoffTriple(" + t.x.get_str() + ", " + t.y.get_str() +
                   ", " + t.z.get_str() + ")";
        });
    m.def("enumerate_triples",
          [](const py::object& bound, MarkoffForm form) {
              return enumerate_triples(to_mpz(bound), form);
          },
          py::arg("bound"), py::arg("form") = MarkoffForm::classical);
    m.def("find_collisions", &find_collisions, py::arg("triples"));
    m.def("verify_uniqueness",
          [](const py::object& bound) { return verify_uniqueness(to_mpz(bound)); },
          py::arg("bound"));
    m.def("triple_to_traces", &triple_to_traces, py::arg("triple"));

    // Flat torus.
    py::class_<TauPoint>(m, "TauPoint")
        .def(py::init<double, double>(), py::arg("re"), py::arg("im"))
        .def_readwrite("re", &TauPoint::re)
        .def_readwrite("im", &TauPoint::im);
    py::enum_<GeodesicKind>(m, "GeodesicKind")
        .value("vertical", GeodesicKind::vertical)
        .value("circle", GeodesicKind::circle);
    py::class_<BoundaryPoint>(m, "BoundaryPoint")
        .def_readonly("at_infinity", &BoundaryPoint::at_infinity)
        .def_readonly("a", &BoundaryPoint::a)
        .def_readonly("b", &BoundaryPoint::b)
        .def_readonly("c", &BoundaryPoint::c)
        .def_readonly("approx", &BoundaryPoint::approx);
    py::class_<PoincareGeodesic>(m, "PoincareGeodesic")
        .def_readonly("kind", &PoincareGeodesic::kind)
        .def_readonly("foot", &PoincareGeodesic::foot)
        .def_readonly("center", &PoincareGeodesic::center)
        .def_readonly("radius", &PoincareGeodesic::radius)
        .def_readonly("e1", &PoincareGeodesic::e1)
        .def_readonly("e2", &PoincareGeodesic::e2)
        .def_readonly("A", &PoincareGeodesic::A)
        .def_readonly("B", &PoincareGeodesic::B)
        .def_readonly("C", &PoincareGeodesic::C);
    m.def("flat_length", &flat_length, py::arg("tau"), py::arg("s"));
    m.def("equal_locus_flat", &equal_locus_flat, py::arg("s1"), py::arg("s2"));
    m.def("coprime_rep_count",
          [](const py::object& n) { return coprime_rep_count(to_mpz(n)); },
          py::arg("n"));
    py::class_<HighMultiplicity>(m, "HighMultiplicity")
        .def_property_readonly(
            "N", [](const HighMultiplicity& h) { return to_int(h.N); })
        .def_property_readonly("representations",
                               [](const HighMultiplicity& h) {
                                   py::list out;
                                   for (const auto& [a, b] : h.representations)
                                       out.append(py::make_tuple(to_int(a),
                                                                 to_int(b)));
                                   return out;
                               });
    m.def("construct_high_multiplicity", &construct_high_multiplicity,
          py::arg("n"));

    // Four-holed sphere.
    py::class_<FhsTraces>(m, "FhsTraces")
        .def(py::init([](double a, double b, double c, double d, double x,
                         double xbar, double y, double ybar, double z,
                         double zbar) {
                 return FhsTraces{a, b, c, d, x, xbar, y, ybar, z, zbar};
             }),
             py::arg("a") = 1, py::arg("b") = 1, py::arg("c") = 1,
             py::arg("d") = 1, py::arg("x") = 1, py::arg("xbar") = 1,
             py::arg("y") = 1, py::arg("ybar") = 1, py::arg("z") = 1,
             py::arg("zbar") = 1)
        .def_readwrite("a", &FhsTraces::a)
        .def_readwrite("b", &FhsTraces::b)
        .def_readwrite("c", &FhsTraces::c)
        .def_readwrite("d", &FhsTraces::d)
        .def_readwrite("x", &FhsTraces::x)
        .def_readwrite("xbar", &FhsTraces::xbar)
        .def_readwrite("y", &FhsTraces::y)
        .def_readwrite("ybar", &FhsTraces::ybar)
        .def_readwrite("z", &FhsTraces::z)
        .def_readwrite("zbar", &FhsTraces::zbar);
    m.def("geometric", &geometric, py::arg("traces"));
    py::class_<Invariant4>(m, "Invariant4")
        .def_readonly("f1", &Invariant4::f1)
        .def_readonly("f2", &Invariant4::f2)
        .def_readonly("f3", &Invariant4::f3)
        .def_readonly("f4", &Invariant4::f4);
    m.def("boundary_invariants", &boundary_invariants, py::arg("a"),
          py::arg("b"), py::arg("c"), py::arg("d"));
    m.def("interior_invariants", &interior_invariants, py::arg("x"),
          py::arg("xbar"), py::arg("y"), py::arg("ybar"), py::arg("z"),
          py::arg("zbar"));
    m.def("check_basic_identity", &check_basic_identity, py::arg("traces"));
    py::class_<BarTriple>(m, "BarTriple")
        .def_readonly("xbar", &BarTriple::xbar)
        .def_readonly("ybar", &BarTriple::ybar)
        .def_readonly("zbar", &BarTriple::zbar)
        .def_readonly("geometric", &BarTriple::geometric);
    m.def("bar_traces_from", &bar_traces_from, py::arg("a"), py::arg("b"),
          py::arg("c"), py::arg("d"), py::arg("x"), py::arg("y"), py::arg("z"));
    m.def("tracepoly_residual", &tracepoly_residual, py::arg("a"), py::arg("b"),
          py::arg("c"), py::arg("d"), py::arg("x"), py::arg("y"), py::arg("z"));
    py::class_<ConsistencyReport>(m, "ConsistencyReport")
        .def_readonly("residuals", &ConsistencyReport::residuals)
        .def_readonly("worst", &ConsistencyReport::worst);
    m.def("check_consistency", &check_consistency, py::arg("traces"));
    py::enum_<SymmetryCase>(m, "SymmetryCase")
        .value("all_equal", SymmetryCase::all_equal)
        .value("three_equal", SymmetryCase::three_equal)
        .value("two_pairs", SymmetryCase::two_pairs);
    py::class_<SymmetricSolve>(m, "SymmetricSolve")
        .def_readonly("solutions", &SymmetricSolve::solutions)
        .def_readonly("residual", &SymmetricSolve::residual);
    m.def("solve_boundary_symmetric",
          [](double f1, double f2, double f3, double f4, SymmetryCase which,
             double tol) {
              return solve_boundary_symmetric({f1, f2, f3, f4}, which, tol);
          },
          py::arg("f1"), py::arg("f2"), py::arg("f3"), py::arg("f4"),
          py::arg("which"), py::arg("tol") = 1e-9);
    m.def("solve_boundary_general",
          [](double f1, double f2, double f3, double f4, double tol) {
              return solve_boundary_general({f1, f2, f3, f4}, tol);
          },
          py::arg("f1"), py::arg("f2"), py::arg("f3"), py::arg("f4"),
          py::arg("tol") = 1e-9);
    py::class_<ResultantReport>(m, "ResultantReport")
        .def_readonly("degree_c", &ResultantReport::degree_c)
        .def_readonly("degree_d", &ResultantReport::degree_d)
        .def_readonly("ok", &ResultantReport::ok)
        .def_property_readonly(
            "lead_c",
            [](const ResultantReport& r) { return to_fraction(r.lead_c); })
        .def_property_readonly(
            "lead_d",
            [](const ResultantReport& r) { return to_fraction(r.lead_d); })
        .def_property_readonly("expected_lead",
                               [](const ResultantReport& r) {
                                   return to_fraction(r.expected_lead);
                               })
        .def_property_readonly(
            "in_c",
            [](const ResultantReport& r) { return fraction_list(r.in_c); })
        .def_property_readonly(
            "in_d",
            [](const ResultantReport& r) { return fraction_list(r.in_d); });
    m.def("resultant_check",
          [](const py::object& f1, const py::object& f2, const py::object& f3,
             const py::object& f4) {
              return resultant_check(
                  {to_mpq(f1), to_mpq(f2), to_mpq(f3), to_mpq(f4)});
          },
          py::arg("f1"), py::arg("f2"), py::arg("f3"), py::arg("f4"));
    m.def("counterexample_pair", &counterexample_pair);
}
