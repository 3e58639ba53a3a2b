#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "partalg/error.hpp"
#include "partalg/exprparse.hpp"
#include "partalg/json_io.hpp"

namespace py = pybind11;
using namespace partalg;

namespace {

Algebra algebra_of(const std::string& name) {
    if (name == "P1" || name == "ordinary") return Algebra::ordinary;
    if (name == "P2" || name == "tonal") return Algebra::tonal;
    fail("range", "unknown algebra '" + name + "' (use P1 or P2)");
}

py::object json_to_py(const Json& j) {
    py::module_ jsonmod = py::module_::import("json");
    return jsonmod.attr("loads")(j.dump());
}

}  // namespace

PYBIND11_MODULE(_partalg, m) {
    m.doc() = "Exact partition-algebra computations (C++ core)";

    py::register_exception<DomainError>(m, "DomainError");

    m.def("bell", [](int n) { return dec_string(bell(n)); });
    m.def("stirling2", [](int n, int l) { return dec_string(stirling2(n, l)); });
    m.def("t_count", [](int m_, int t) { return dec_string(t_count(m_, t)); });

    m.def("enumerate_partitions", [](int n, int mm) {
        auto parts = enumerate_partitions(n, mm);
        py::list out;
        for (const auto& p : parts) out.append(print_diagram(Diagram(p)));
        return out;
    });
    m.def("enumerate_even_partitions", [](int n) {
        auto parts = enumerate_even_partitions(n);
        py::list out;
        for (const auto& p : parts) out.append(print_diagram(Diagram(p)));
        return out;
    });

    m.def("parse_diagram", [](const std::string& s) { return print_diagram(parse_diagram(s)); });
    m.def("compose", [](const std::string& a, const std::string& b) {
        auto [d, power] = compose(parse_diagram(a), parse_diagram(b));
        return py::make_tuple(print_diagram(d), power);
    });
    m.def("tensor", [](const std::string& a, const std::string& b) {
        return print_diagram(tensor(parse_diagram(a), parse_diagram(b)));
    });
    m.def("flip", [](const std::string& a) { return print_diagram(flip(parse_diagram(a))); });
    m.def("is_tonal", [](const std::string& a, int d) { return parse_diagram(a).is_tonal(d); });
    m.def("prop_vector", [](const std::string& a, int d) {
        return prop_vector(parse_diagram(a), d).counts;
    });
    m.def("evaluate", [](const std::string& expr) {
        return json_to_py(to_json(parse_expression(expr)));
    });

    m.def(
        "gram_report",
        [](const std::string& algebra, int n, bool with_smith) {
            return json_to_py(
                to_json(gram_report(algebra_of(algebra), n, Config::from_env(), with_smith)));
        },
        py::arg("algebra"), py::arg("n"), py::arg("with_smith") = false);
    m.def("gram_det", [](const std::string& algebra, int n) {
        auto g = gram_matrix(spine_basis(algebra_of(algebra), n));
        return gram_det(g, Config::from_env()).to_string();
    });
    m.def("gram_matrix_csv", [](const std::string& algebra, int n) {
        return gram_csv(gram_matrix(spine_basis(algebra_of(algebra), n)));
    });
    m.def("odd_even_check", [](int n) { return json_to_py(to_json(odd_even_check(n), n)); });

    m.def("potts_image", [](const std::string& diagram, int q) {
        return json_to_py(to_json(potts_image(parse_diagram(diagram), q)));
    });
    m.def("potts_span_rank", [](const std::vector<std::string>& diagrams, int q) {
        std::vector<Diagram> ds;
        for (const auto& s : diagrams) ds.push_back(parse_diagram(s));
        return potts_span_rank(ds, q);
    });
    m.def(
        "orbit_count",
        [](int q, int n, bool with_signs) { return dec_string(orbit_count(q, n, with_signs)); },
        py::arg("q"), py::arg("n"), py::arg("with_signs") = false);
    m.def("head_dim_via_potts", [](const std::string& algebra, int n, int q) {
        return head_dim_via_potts(algebra_of(algebra), n, q);
    });

    m.def("specht_dim", [](const std::vector<int>& lambda) { return dec_string(specht_dim(lambda)); });
    m.def("bratelli", [](const std::string& algebra, int n_max) {
        return json_to_py(to_json(bratelli(algebra_of(algebra), n_max)));
    });
    m.def("bratelli_dot", [](const std::string& algebra, int n_max) {
        return bratelli_dot(bratelli(algebra_of(algebra), n_max));
    });
    m.def(
        "semisimple",
        [](const std::string& algebra, const std::string& delta, std::optional<int> n) {
            return json_to_py(
                to_json(semisimplicity_verdict(algebra_of(algebra), parse_rational(delta), n)));
        },
        py::arg("algebra"), py::arg("delta"), py::arg("n") = py::none());
}
