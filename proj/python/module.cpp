#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "symmom/combinat.hpp"
#include "symmom/moments.hpp"
#include "symmom/quadform.hpp"
#include "symmom/sympow.hpp"
#include "symmom/verify.hpp"

namespace py = pybind11;
using namespace symmom;

namespace {

py::int_ to_pyint(const BigInt& v) {
    return py::reinterpret_steal<py::int_>(
        PyLong_FromString(v.str().c_str(), nullptr, 10));
}

py::dict to_pydict(const MultiplicityVector& mv) {
    py::dict d;
    for (const auto& [i, m] : mv)
        d[py::int_(i)] = to_pyint(m);
    return d;
}

py::dict theta_dict(const ThetaReport& r) {
    py::dict d;
    d["d"] = r.d;
    d["l"] = r.l;
    d["theta_num"] = to_pyint(boost::multiprecision::numerator(r.theta_exact));
    d["theta_den"] = to_pyint(boost::multiprecision::denominator(r.theta_exact));
    d["decimal"] = r.decimal();
    d["K0"] = to_pyint(r.k0);
    d["K1"] = to_pyint(r.k1);
    d["K2"] = to_pyint(r.k2);
    return d;
}

} // namespace

PYBIND11_MODULE(_symmom, m) {
    m.doc() = "Symmetric-power Hecke eigenvalue moments: Kostka decompositions, "
              "exponent tables, binary quadratic forms and empirical sums";

    // combinat
    m.def("kostka_closed_form",
          [](long i, long d, long l) { return to_pyint(kostka_closed_form(i, d, l)); });
    m.def("kostka_recursive",
          [](long i, long d, long l) { return to_pyint(kostka_recursive(i, d, l)); });
    m.def("kostka_generating",
          [](long i, long d, long l) { return to_pyint(kostka_generating(i, d, l)); });
    m.def(
        "kostka_tableau",
        [](long i, long d, long l, long bound) { return to_pyint(kostka_tableau(i, d, l, bound)); },
        py::arg("i"), py::arg("d"), py::arg("l"), py::arg("bound") = 24);
    m.def("tensor_power_multiplicities",
          [](long d, long l) { return to_pydict(tensor_power_multiplicities(d, l)); });
    m.def("clebsch_gordan", [](long i, long j) { return to_pydict(clebsch_gordan(i, j)); });
    m.def("weyl_dim", [](std::vector<long> parts, long mm) {
        return to_pyint(weyl_dim(Partition(std::move(parts)), mm));
    });
    m.def("irrep_multiplicity", [](std::vector<long> parts) {
        return to_pyint(irrep_multiplicity(Partition(std::move(parts))));
    });

    // eigenform
    py::class_<CoefficientSeries>(m, "CoefficientSeries")
        .def_readonly("weight", &CoefficientSeries::weight)
        .def_readonly("label", &CoefficientSeries::label)
        .def_readonly("length", &CoefficientSeries::length)
        .def("has_raw", &CoefficientSeries::has_raw)
        .def("a",
             [](const CoefficientSeries& s, long n) {
                 if (!s.has_raw() || n < 1 || n > s.length)
                     throw OutOfRange("a(n): out of range or no exact coefficients");
                 return py::reinterpret_steal<py::int_>(
                     PyLong_FromString(to_string(s.raw[n]).c_str(), nullptr, 10));
             })
        .def("lam", [](const CoefficientSeries& s, long n) {
            if (n < 1 || n > s.length)
                throw OutOfRange("lambda(n): out of range");
            return s.lambda[n];
        });
    m.def("delta_coefficients", &delta_coefficients, py::arg("N"));
    m.def("load_coefficients",
          [](const std::string& path, int weight) { return load_coefficients(path, weight); },
          py::arg("path"), py::arg("weight") = 12);
    m.def("save_coefficients",
          [](const CoefficientSeries& s, const std::string& path) { save_coefficients(s, path); });
    m.def("validate_series", &validate);
    py::class_<SatakeAngle>(m, "SatakeAngle")
        .def_readonly("p", &SatakeAngle::p)
        .def_readonly("theta", &SatakeAngle::theta)
        .def_readonly("degenerate", &SatakeAngle::degenerate);
    m.def("satake_angle", &satake_angle);

    // sympow
    py::class_<SymPowerSeries>(m, "SymPowerSeries")
        .def_readonly("d", &SymPowerSeries::d)
        .def_readonly("length", &SymPowerSeries::length)
        .def("at", &SymPowerSeries::at);
    py::class_<LocalFactor>(m, "LocalFactor")
        .def_readonly("p", &LocalFactor::p)
        .def_readonly("d", &LocalFactor::d)
        .def_readonly("coeffs", &LocalFactor::coeffs);
    m.def("sym_local_factor", &sym_local_factor);
    m.def("sym_eigenvalue", &sym_eigenvalue);
    m.def("sym_series", &sym_series);
    m.def("verify_tensor_identity", &verify_tensor_identity);
    m.def("verify_local_u_factor", &verify_local_u_factor, py::arg("series"), py::arg("d"),
          py::arg("l"), py::arg("p"), py::arg("order") = 3);

    // quadform
    py::class_<QuadForm>(m, "QuadForm")
        .def(py::init([](long a, long b, long c) { return QuadForm{a, b, c}; }))
        .def_readwrite("a", &QuadForm::a)
        .def_readwrite("b", &QuadForm::b)
        .def_readwrite("c", &QuadForm::c)
        .def("disc", &QuadForm::disc)
        .def("__eq__", [](const QuadForm& x, const QuadForm& y) { return x == y; })
        .def("__repr__", [](const QuadForm& f) {
            return "QuadForm(" + std::to_string(f.a) + ", " + std::to_string(f.b) + ", " +
                   std::to_string(f.c) + ")";
        });
    m.def("reduce_form", [](const QuadForm& f) { return reduce(f); });
    py::class_<ClassGroup>(m, "ClassGroup")
        .def(py::init<long>())
        .def_property_readonly("D", &ClassGroup::discriminant)
        .def_property_readonly("h", &ClassGroup::h)
        .def_property_readonly("w", &ClassGroup::w)
        .def_property_readonly("forms", &ClassGroup::forms)
        .def("compose", &ClassGroup::compose)
        .def("inverse", &ClassGroup::inverse)
        .def("class_index", &ClassGroup::class_index)
        .def_property_readonly("cyclic_orders", &ClassGroup::cyclic_orders)
        .def_property_readonly("characters", &ClassGroup::characters);
    m.def("count_representations", &count_representations);
    m.def("representation_counts", &representation_counts);
    m.def("theta_coefficients", [](const ClassGroup& g, int chi, long N) {
        return theta_coefficients(g, chi, N).values;
    });
    m.def("verify_character_decomposition", &verify_character_decomposition);
    m.def("ideal_count", &ideal_count);
    m.def("kronecker", &kronecker);

    // moments
    m.def(
        "theta",
        [](long d, long l, bool unchecked) { return theta_dict(theta(d, l, unchecked)); },
        py::arg("d"), py::arg("l"), py::arg("unchecked") = false);
    m.def(
        "theta_bqf",
        [](long d, long l, bool h1, bool unchecked) {
            return theta_dict(theta_bqf(d, l, h1, unchecked));
        },
        py::arg("d"), py::arg("l"), py::arg("class_number_one"), py::arg("unchecked") = false);
    m.def("main_term_degree", [](long d, long l) -> py::object {
        auto deg = main_term_degree(d, l);
        if (!deg)
            return py::none();
        return py::int_(*deg);
    });
    m.def("moment_sum", &moment_sum);
    m.def("bqf_moment_sum", &bqf_moment_sum);
    m.def("fit_main_term",
          [](long d, long l, const std::vector<std::pair<double, double>>& samples) {
              auto fit = fit_main_term(d, l, samples);
              py::dict out;
              out["coeffs"] = fit.fitted_coeffs;
              out["residual_exponent"] = fit.residual_exponent;
              return out;
          });

    // verification suites
    m.def("verify", [](const std::string& suite, long N) {
        py::list out;
        for (const auto& c : verify::run(suite, N)) {
            py::dict d;
            d["name"] = c.name;
            d["pass"] = c.pass;
            d["detail"] = c.detail;
            out.append(d);
        }
        return out;
    });

    py::register_exception<OracleBoundExceeded>(m, "OracleBoundExceeded");
    py::register_exception<HypothesisViolated>(m, "HypothesisViolated");
    py::register_exception<InvariantViolation>(m, "InvariantViolation");
}
