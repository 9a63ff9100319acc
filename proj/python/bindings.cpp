#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ctf/cli.hpp"
#include "ctf/graph_io.hpp"
#include "ctf/verifier.hpp"

namespace py = pybind11;
using namespace ctf;

namespace {

py::object fraction(const Rational& r) {
    static const py::object Fraction = py::module_::import("fractions").attr("Fraction");
    const py::int_ num(py::str(numerator(r).str()));
    const py::int_ den(py::str(denominator(r).str()));
    return Fraction(num, den);
}

Rational rational(const py::handle& v) {
    const py::object f = py::module_::import("fractions").attr("Fraction")(v);
    return Rational(Integer(py::str(f.attr("numerator")).cast<std::string>()),
                    Integer(py::str(f.attr("denominator")).cast<std::string>()));
}

py::object from_json(const nlohmann::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

Family family_named(const std::string& name) {
    const auto f = parse_family(name);
    if (!f) throw std::invalid_argument("unknown family '" + name + "'");
    return *f;
}

Relation relation_named(const std::string& name) {
    const auto r = parse_relation(name);
    if (!r) throw std::invalid_argument("unknown relation '" + name + "'");
    return *r;
}

OrientationFilter filter_named(const std::string& name) {
    const auto f = parse_filter(name);
    if (!f) throw std::invalid_argument("unknown filter '" + name + "'");
    return *f;
}

PolynomialOptions options_with(std::optional<std::uint64_t> budget) {
    PolynomialOptions o;
    if (budget) o.budget = *budget;
    return o;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact tension-flow counting polynomials of small multigraphs";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);
    py::register_exception<EnumerationLimitExceeded>(m, "EnumerationLimitExceeded", PyExc_RuntimeError);
    py::register_exception<InterpolationError>(m, "InterpolationError", PyExc_ArithmeticError);

    py::class_<MultiGraph>(m, "Graph")
        .def(py::init([](std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
                 return MultiGraph(n, edges);
             }),
             py::arg("vertex_count"), py::arg("edges"))
        .def_static("parse", &parse_graph_string, py::arg("text"))
        .def_static("load", &load_graph, py::arg("path"))
        .def_property_readonly("vertex_count", &MultiGraph::vertex_count)
        .def_property_readonly("edge_count", &MultiGraph::edge_count)
        .def_property_readonly("edges",
                               [](const MultiGraph& g) {
                                   std::vector<std::pair<Vertex, Vertex>> out;
                                   for (const auto& e : g.edges()) out.emplace_back(e.tail, e.head);
                                   return out;
                               })
        .def("stats",
             [](const MultiGraph& g) {
                 const auto s = stats(g);
                 return py::dict(py::arg("components") = s.components, py::arg("rank") = s.rank,
                                 py::arg("nullity") = s.nullity);
             })
        .def("to_text", &format_graph)
        .def("__eq__", [](const MultiGraph& a, const MultiGraph& b) { return a == b; })
        .def("__repr__", [](const MultiGraph& g) {
            return "Graph(" + std::to_string(g.vertex_count()) + " vertices, " + std::to_string(g.edge_count()) +
                   " edges)";
        });

    py::class_<BivariatePolynomial>(m, "Polynomial")
        .def("__call__", [](const BivariatePolynomial& p, const py::object& x,
                            const py::object& y) { return fraction(p.evaluate(rational(x), rational(y))); })
        .def("coefficient", [](const BivariatePolynomial& p, unsigned i, unsigned j) {
            return fraction(p.coefficient(i, j));
        })
        .def("terms",
             [](const BivariatePolynomial& p) {
                 py::dict out;
                 for (const auto& [e, c] : p.terms()) out[py::make_tuple(e.first, e.second)] = fraction(c);
                 return out;
             })
        .def_property_readonly("degree_x", &BivariatePolynomial::degree_x)
        .def_property_readonly("degree_y", &BivariatePolynomial::degree_y)
        .def("to_json", [](const BivariatePolynomial& p) { return from_json(to_json(p)); })
        .def("__eq__", [](const BivariatePolynomial& a, const BivariatePolynomial& b) { return a == b; })
        .def("__str__", [](const BivariatePolynomial& p) { return p.to_text(); })
        .def("__repr__", [](const BivariatePolynomial& p) { return "Polynomial(" + p.to_text() + ")"; });

    m.def("families", [] {
        std::vector<std::string> out;
        for (auto f : all_families()) out.emplace_back(traits(f).name);
        return out;
    });

    m.def("tutte", &tutte, py::arg("graph"));
    m.def("rank_generating", [](const MultiGraph& g) { return rank_generating(g); }, py::arg("graph"));

    m.def(
        "count",
        [](const MultiGraph& g, const std::string& family, std::int64_t p, std::int64_t q,
           std::optional<std::string> orientation, std::optional<std::string> group_p,
           std::optional<std::string> group_q, std::optional<std::uint64_t> budget) {
            CountQuery query{family_named(family), p, q};
            if (orientation) query.orientation = Orientation::from_string(g, *orientation);
            if (group_p) query.group_p = AbelianGroup::parse(*group_p);
            if (group_q) query.group_q = AbelianGroup::parse(*group_q);
            if (budget) query.budget = *budget;
            return count(query, g);
        },
        py::arg("graph"), py::arg("family"), py::arg("p") = 1, py::arg("q") = 1, py::arg("orientation") = py::none(),
        py::arg("group_p") = py::none(), py::arg("group_q") = py::none(), py::arg("budget") = py::none());

    m.def(
        "counting_polynomial",
        [](const MultiGraph& g, const std::string& family, std::optional<std::uint64_t> budget) {
            return counting_polynomial(g, family_named(family), options_with(budget));
        },
        py::arg("graph"), py::arg("family"), py::arg("budget") = py::none());

    m.def(
        "local_polynomial",
        [](const MultiGraph& g, const std::string& family, const std::string& orientation) {
            return local_polynomial(g, family_named(family), Orientation::from_string(g, orientation));
        },
        py::arg("graph"), py::arg("family"), py::arg("orientation"));

    m.def(
        "polynomials",
        [](const MultiGraph& g, std::optional<std::uint64_t> budget) {
            const auto report = polynomial_report(g, options_with(budget));
            py::dict out;
            out["tutte"] = report.tutte;
            out["rank_generating"] = report.rank_generating;
            for (const auto& [f, p] : report.families) out[py::str(std::string(traits(f).name))] = p;
            return out;
        },
        py::arg("graph"), py::arg("budget") = py::none());

    m.def(
        "orientations",
        [](const MultiGraph& g, const std::string& filter) {
            std::vector<std::string> out;
            for (const auto& o : all_orientations(g, filter_named(filter))) out.push_back(o.to_string());
            return out;
        },
        py::arg("graph"), py::arg("filter") = "all");

    m.def(
        "classes",
        [](const MultiGraph& g, const std::string& relation, const std::string& filter) {
            const auto p = enumerate_classes(g, relation_named(relation), filter_named(filter));
            std::vector<std::pair<std::string, std::size_t>> out;
            for (std::size_t k = 0; k < p.class_count(); ++k)
                out.emplace_back(p.representatives[k].to_string(), p.classes[k].size());
            return out;
        },
        py::arg("graph"), py::arg("relation"), py::arg("filter") = "all");

    m.def(
        "verify",
        [](const MultiGraph& g, const std::vector<std::string>& fail) {
            VerifyOptions o;
            o.forced_failures = {fail.begin(), fail.end()};
            return from_json(to_json(verify_graph(g, o)));
        },
        py::arg("graph"), py::arg("fail") = std::vector<std::string>{});

    m.def("example_graph", &cli::example_graph);

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            const int code = cli::run(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"));
}
