#include "svol/errors.hpp"
#include "svol/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace svol;

namespace {

py::object fraction(const Rational& x) {
    py::object Fraction = py::module_::import("fractions").attr("Fraction");
    return Fraction(x.get_str());
}

Rational rational_from(const py::handle& h) {
    Rational r;
    if (r.set_str(py::str(h).cast<std::string>(), 10) != 0)
        throw InvalidConfig("not a rational number: " + py::str(h).cast<std::string>());
    r.canonicalize();
    return r;
}

Variant variant_from(const std::string& s) {
    if (s == "all") return Variant::All;
    if (s == "special") return Variant::Special;
    throw InvalidConfig("variant must be all or special");
}

Quantity quantity_from(const std::string& s) {
    if (s == "ssa") return Quantity::SSA;
    if (s == "sv") return Quantity::SV;
    throw InvalidConfig("quantity must be ssa or sv");
}

ClassicalRootSystem system(const std::string& family, int n) {
    return ClassicalRootSystem::build(parse_family(family), n);
}

py::object to_python(const nlohmann::json& j) {
    py::object loads = py::module_::import("json").attr("loads");
    return loads(j.dump());
}

SystemList systems_from(const std::optional<std::vector<std::pair<std::string, int>>>& given,
                        const SystemList& fallback) {
    if (!given) return fallback;
    SystemList out;
    for (const auto& [f, n] : *given) out.emplace_back(parse_family(f), n);
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact vertex counts of balls and spheres in buildings of split classical groups";

    py::register_exception<Error>(m, "SvolError", PyExc_ValueError);

    py::class_<QNumber>(m, "QNumber")
        .def(py::init<>())
        .def(py::init([](const py::object& x) { return QNumber(rational_from(x)); }))
        .def_static("q", &QNumber::q)
        .def_static("q_pow", [](const py::object& e) { return QNumber::q_pow(rational_from(e)); })
        .def_static("bracket", &QNumber::qbracket)
        .def("__add__", [](const QNumber& a, const QNumber& b) { return a + b; })
        .def("__sub__", [](const QNumber& a, const QNumber& b) { return a - b; })
        .def("__mul__", [](const QNumber& a, const QNumber& b) { return a * b; })
        .def("__truediv__", [](const QNumber& a, const QNumber& b) { return a / b; })
        .def("__neg__", [](const QNumber& a) { return -a; })
        .def("__eq__", [](const QNumber& a, const QNumber& b) { return a == b; })
        .def("__str__", &QNumber::to_string)
        .def("__repr__", [](const QNumber& a) { return "QNumber(" + a.to_string() + ")"; })
        .def_property_readonly("level", &QNumber::level)
        .def("is_primary", &QNumber::is_primary)
        .def("evaluate", [](const QNumber& a, double q0) { return static_cast<double>(a.evaluate(q0)); })
        .def("evaluate_exact",
             [](const QNumber& a, const py::object& q0) { return fraction(a.evaluate_exact(rational_from(q0))); })
        .def("to_json", [](const QNumber& a) { return to_python(nlohmann::json::parse(a.to_json())); });

    py::class_<SuperQExpPoly>(m, "SuperQExpPoly")
        .def("__str__", [](const SuperQExpPoly& f) { return f.to_string(); })
        .def("__eq__", [](const SuperQExpPoly& a, const SuperQExpPoly& b) { return a == b; })
        .def("evaluate", [](const SuperQExpPoly& f, const py::object& z) { return f.evaluate(rational_from(z)); })
        .def("difference", &SuperQExpPoly::difference)
        .def("antidifference", &SuperQExpPoly::antidifference_free)
        .def("antidifference_anchored", &SuperQExpPoly::antidifference_anchored)
        .def("restrict_parity", &SuperQExpPoly::restrict_parity)
        .def("is_primary", &SuperQExpPoly::is_primary)
        .def("is_parity_free", &SuperQExpPoly::is_parity_free)
        .def("leading_term",
             [](const SuperQExpPoly& f) {
                 auto lt = f.leading_term();
                 py::dict d;
                 d["order"] = fraction(lt.ord);
                 d["degree"] = lt.degree();
                 d["lead_even"] = lt.lead0;
                 d["lead_odd"] = lt.lead1;
                 return d;
             })
        .def("to_json", [](const SuperQExpPoly& f) { return to_python(nlohmann::json::parse(f.to_json())); });

    m.def(
        "root_system",
        [](const std::string& family, int n) { return to_python(nlohmann::json::parse(system(family, n).to_json())); },
        py::arg("family"), py::arg("n"));
    m.def(
        "poincare_parabolic",
        [](const std::string& family, int n, const std::vector<int>& type) {
            auto sys = system(family, n);
            TypeSubset I{n, 0};
            for (int j : type) {
                if (j < 1 || j > n) throw InvalidConfig("type index out of range");
                I.mask |= 1u << (j - 1);
            }
            auto pp = poincare_parabolic(sys, I);
            return py::make_tuple(pp.poly, pp.degree);
        },
        py::arg("family"), py::arg("n"), py::arg("type"));
    m.def(
        "ssa_exact",
        [](const std::string& family, int n, long r, const std::string& variant) {
            return ssa_exact(system(family, n), r, variant_from(variant));
        },
        py::arg("family"), py::arg("n"), py::arg("r"), py::arg("variant") = "all");
    m.def(
        "sv_exact",
        [](const std::string& family, int n, long r, const std::string& variant) {
            return sv_exact(system(family, n), r, variant_from(variant));
        },
        py::arg("family"), py::arg("n"), py::arg("r"), py::arg("variant") = "all");
    m.def(
        "ssa_closed_form",
        [](const std::string& family, int n, const std::string& variant) {
            return ssa_closed_form(system(family, n), variant_from(variant));
        },
        py::arg("family"), py::arg("n"), py::arg("variant") = "all");
    m.def(
        "sv_closed_form",
        [](const std::string& family, int n, const std::string& variant) {
            return sv_closed_form(system(family, n), variant_from(variant));
        },
        py::arg("family"), py::arg("n"), py::arg("variant") = "all");
    m.def(
        "asymptote",
        [](const std::string& family, int n, const std::string& variant, const std::string& quantity) {
            auto p = asymptote(system(family, n), variant_from(variant), quantity_from(quantity));
            py::dict d;
            d["epsilon"] = p.epsilon;
            d["pi"] = fraction(p.pi);
            d["constant_even"] = p.constant.value_even();
            d["constant_odd"] = p.constant.value_odd();
            return d;
        },
        py::arg("family"), py::arg("n"), py::arg("variant") = "all", py::arg("quantity") = "ssa");
    m.def(
        "enumerate_sphere",
        [](const std::string& family, int n, long r, const std::string& variant, const std::string& method) {
            auto sys = system(family, n);
            VertexMode mode = variant_from(variant) == Variant::All ? VertexMode::All : VertexMode::Special;
            EnumMethod how;
            if (method == "fast")
                how = EnumMethod::Fast;
            else if (method == "brute")
                how = EnumMethod::Brute;
            else
                throw InvalidConfig("method must be fast or brute");
            py::list out;
            for (const auto& p : enumerate_sphere(sys, r, mode, how)) {
                py::list g;
                for (const auto& x : p.gamma) g.append(fraction(x));
                out.append(py::tuple(g));
            }
            return out;
        },
        py::arg("family"), py::arg("n"), py::arg("r"), py::arg("variant") = "all", py::arg("method") = "fast");
    m.def(
        "verify",
        [](const std::string& suite, unsigned seed, int count, long max_r, int max_rank, long window,
           const std::optional<std::vector<std::pair<std::string, int>>>& systems) {
            SuiteResult r;
            if (suite == "multisum")
                r = verify_multisum(seed, count);
            else if (suite == "calculus")
                r = verify_calculus(seed, count);
            else if (suite == "table1")
                r = verify_systems(systems_from(systems, systems_up_to_rank(max_rank)), window);
            else if (suite == "enum")
                r = verify_enum(systems_from(systems, reference_grid()), max_r);
            else if (suite == "poincare")
                r = verify_poincare(max_rank);
            else if (suite == "anchors")
                r = verify_anchors(systems_from(systems, reference_grid()), max_r);
            else if (suite == "parity")
                r = verify_parity_split(systems_from(systems, reference_grid()));
            else if (suite == "constants")
                r = verify_printed_constants();
            else
                throw InvalidConfig("unknown suite " + suite);
            return to_python(r.report);
        },
        py::arg("suite"), py::arg("seed") = 7, py::arg("count") = 100, py::arg("max_r") = 8,
        py::arg("max_rank") = 6, py::arg("window") = 15, py::arg("systems") = py::none());
}
