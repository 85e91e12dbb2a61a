#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "chromhom/chromatic.hpp"
#include "chromhom/cli.hpp"
#include "chromhom/homology.hpp"
#include "chromhom/io.hpp"
#include "chromhom/theorems.hpp"

namespace py = pybind11;
using namespace chromhom;

namespace {

py::int_ to_py(const Integer& v) {
    return py::reinterpret_steal<py::int_>(PyLong_FromString(v.get_str().c_str(), nullptr, 10));
}

py::tuple group_to_py(const AbelianGroup& g) {
    py::list torsion;
    for (const auto& d : g.torsion) torsion.append(to_py(d));
    return py::make_tuple(g.free_rank, torsion);
}

py::dict homology_to_py(const BigradedHomology& h) {
    py::dict out;
    for (const auto& [ij, g] : h.groups) out[py::make_tuple(ij.first, ij.second)] = group_to_py(g);
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Chromatic graph homology over Z[x]/(p)";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<ResourceLimitError>(m, "ResourceLimitError", PyExc_MemoryError);

    py::class_<Graph>(m, "Graph")
        .def(py::init([](int vertices, const std::vector<std::pair<int, int>>& edges) {
                 std::vector<Edge> es;
                 for (const auto& [u, w] : edges) es.push_back({u, w});
                 return Graph(vertices, std::move(es));
             }),
             py::arg("vertices"), py::arg("edges") = std::vector<std::pair<int, int>>{})
        .def_property_readonly("vertex_count", &Graph::vertex_count)
        .def_property_readonly("edges", [](const Graph& g) {
            std::vector<std::pair<int, int>> out;
            for (const auto& e : g.edges()) out.emplace_back(e.u, e.w);
            return out;
        })
        .def("fingerprint", &Graph::fingerprint)
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) { return "Graph(" + g.fingerprint() + ")"; });

    py::class_<Algebra>(m, "Algebra")
        .def_property_readonly("rank", &Algebra::rank)
        .def_property_readonly("graded", &Algebra::graded)
        .def_property_readonly("degrees", &Algebra::degrees)
        .def_property_readonly("spec", &Algebra::spec)
        .def("__repr__", [](const Algebra& a) { return "Algebra(" + a.spec() + ")"; });

    m.def("graph", &parse_graph_generator, py::arg("spec"), "Build a graph from a generator spec such as 'cycle:5'.");
    m.def("load_graph", &load_graph_file, py::arg("path"));
    m.def("algebra", &parse_algebra_spec, py::arg("spec"), "Parse 'trunc:m', 'poly:c0,...,1' or 'window:J'.");
    m.def("delete_edge", &delete_edge);
    m.def("contract_edge", &contract_edge);

    m.def(
        "homology",
        [](const Graph& g, const Algebra& a, int threads, std::optional<std::pair<int, int>> j_range) {
            ComputeOptions opts;
            opts.threads = threads;
            opts.j_range = j_range;
            BigradedHomology h;
            {
                py::gil_scoped_release release;
                h = compute_all(g, a, opts);
            }
            return homology_to_py(h);
        },
        py::arg("graph"), py::arg("algebra"), py::arg("threads") = 1, py::arg("j_range") = py::none(),
        "Map (i, j) -> (free rank, [torsion invariant factors]) for every nonzero group.");
    m.def(
        "homology_json",
        [](const Graph& g, const Algebra& a) { return render_json(compute_all(g, a)); },
        py::arg("graph"), py::arg("algebra"));
    m.def(
        "table",
        [](const Graph& g, const Algebra& a, bool primary) { return render_table(compute_all(g, a), primary); },
        py::arg("graph"), py::arg("algebra"), py::arg("primary") = false);

    m.def(
        "chromatic_polynomial",
        [](const Graph& g) {
            py::list out;
            for (const auto& c : chromatic_polynomial_dc(g).dense()) out.append(to_py(c));
            return out;
        },
        py::arg("graph"), "Coefficients from lambda^0 upward.");

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            const int code = run_cli(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Run the command-line tool in-process; returns (exit code, stdout, stderr).");

    m.def(
        "paper_suite",
        [](int threads) {
            SuiteOptions opts;
            opts.threads = threads;
            std::vector<CheckReport> reports;
            {
                py::gil_scoped_release release;
                reports = run_paper_suite(opts);
            }
            py::list out;
            for (const auto& r : reports)
                out.append(py::dict(py::arg("name") = r.name, py::arg("graph") = r.graph, py::arg("algebra") = r.algebra,
                                    py::arg("passed") = r.passed, py::arg("soft") = r.soft,
                                    py::arg("witness") = r.witness));
            return out;
        },
        py::arg("threads") = 1);
}
