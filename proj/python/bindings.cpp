#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cli.hpp"
#include "treepack/error.hpp"
#include "treepack/generators.hpp"
#include "treepack/graph_io.hpp"
#include "treepack/packing.hpp"
#include "treepack/property_p.hpp"
#include "treepack/report.hpp"
#include "treepack/spectral.hpp"

namespace py = pybind11;
using namespace treepack;

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Spanning-tree packing, fractional packing and graph spectra";
    m.attr("__version__") = TREEPACK_VERSION;

    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);

    py::class_<Graph>(m, "Graph")
        .def(py::init([](int n, const std::vector<std::pair<int, int>>& edges) { return Graph(n, edges); }),
             py::arg("n"), py::arg("edges"))
        .def_property_readonly("order", &Graph::order)
        .def_property_readonly("size", &Graph::size)
        .def_property_readonly("min_degree", &Graph::min_degree)
        .def("edges", &Graph::edge_pairs)
        .def("degree", &Graph::degree)
        .def("adjacent", &Graph::adjacent)
        .def("__repr__", [](const Graph& g) {
            return "<Graph n=" + std::to_string(g.order()) + " m=" + std::to_string(g.size()) + ">";
        });

    m.def("complete", &complete);
    m.def("complete_bipartite", &complete_bipartite);
    m.def("petersen", &petersen);
    m.def("build_B", &build_B, py::arg("n"), py::arg("s"), py::arg("k"));
    m.def("fixture_H1", &fixture_H1);
    m.def("fixture_H2", &fixture_H2);
    m.def("fixture", &cli::fixture_by_name, "Graph from a CLI fixture name such as 'k5' or 'b11,5,1'");
    m.def("parse_edge_list", [](const std::string& text) { return parse_edge_list(text); });
    m.def("format_edge_list", &format_edge_list);

    m.def("eigenvalues", [](const Graph& g, double alpha) {
        return (alpha == 0.0 ? adjacency_spectrum(g) : a_alpha_spectrum(g, alpha)).values;
    }, py::arg("g"), py::arg("alpha") = 0.0);
    m.def("lambda_", [](const Graph& g, int i) { return lambda(g, i); }, py::arg("g"), py::arg("i"));

    m.def("tau", [](const Graph& g) {
        const auto t = tau(g);
        std::vector<std::vector<std::pair<int, int>>> trees;
        for (int f = 1; f <= t.tau; ++f) {
            auto& tree = trees.emplace_back();
            for (int id : t.trees.edges_of(f))
                tree.emplace_back(g.edge(id).u, g.edge(id).v);
        }
        return py::make_tuple(t.tau, trees);
    });
    m.def("nu_f_exact", [](const Graph& g, int max_n) {
        const auto c = nu_f_exact(g, max_n);
        return py::make_tuple(c.ratio.num(), c.ratio.den(), c.partition.parts);
    }, py::arg("g"), py::arg("max_n") = 12);

    m.def("check_p_json", [](const Graph& g, int k, int d, std::uint64_t budget) {
        CheckOptions options;
        options.budget = budget;
        const PQuery q{k, d};
        return verdict_json(g, q, check_P(g, q, options)).dump();
    }, py::arg("g"), py::arg("k"), py::arg("d"), py::arg("budget") = 100'000'000);

    m.def("run_cli", [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = 0;
        {
            py::gil_scoped_release release;
            code = cli::run(args, out, err);
        }
        return py::make_tuple(code, out.str(), err.str());
    }, "Run the command-line tool in-process; returns (exit_code, stdout, stderr)");
}
