#include "packprod/catalog.hpp"
#include "packprod/constructions.hpp"
#include "packprod/error.hpp"
#include "packprod/families.hpp"
#include "packprod/io.hpp"
#include "packprod/products.hpp"
#include "packprod/report_json.hpp"
#include "packprod/solvers.hpp"
#include "packprod/verifier.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace packprod;

namespace {

Graph make_graph(std::size_t order, const std::vector<Edge>& edges) { return build_graph(order, edges); }

SearchLimits limits_for(std::uint64_t budget)
{
    SearchLimits l;
    l.node_budget = budget;
    return l;
}

py::tuple result_tuple(const InvariantResult& r) { return py::make_tuple(r.value, r.witness.members()); }

py::tuple product_tuple(const ProductGraph& p) { return py::make_tuple(p.graph, p.g.order(), p.h.order()); }

} // namespace

PYBIND11_MODULE(_packprod, m)
{
    m.doc() = "Packing and open packing numbers of graph products";

    static py::exception<Error> error(m, "PackprodError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p)
                std::rethrow_exception(p);
        } catch (const Error& e) {
            PyErr_SetObject(error.ptr(), py::make_tuple(std::string(error_code_name(e.code())), e.what()).ptr());
        }
    });

    py::class_<Graph>(m, "Graph")
        .def(py::init(&make_graph), py::arg("order"), py::arg("edges") = std::vector<Edge>{})
        .def_property_readonly("order", &Graph::order)
        .def_property_readonly("edge_count", &Graph::edge_count)
        .def("edges", &Graph::edges)
        .def("adjacent", &Graph::adjacent)
        .def("degree",
             [](const Graph& g, Vertex v) {
                 g.check_vertex(v);
                 return g.degree(v);
             })
        .def("neighbors",
             [](const Graph& g, Vertex v) {
                 g.check_vertex(v);
                 return g.neighbors(v).members();
             })
        .def("graph6", &write_graph6)
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            return "Graph(order=" + std::to_string(g.order()) + ", edges=" + std::to_string(g.edge_count()) + ")";
        });

    m.def("family", &family, py::arg("spec"), py::arg("seed") = 0, "Graph from a family spec such as 'P7' or 'K3,3+E1'");
    m.def("from_graph6", &parse_graph6);
    m.def("from_edge_list", &parse_edge_list);
    m.def("is_connected", &is_connected);
    m.def("diameter", [](const Graph& g) -> std::optional<std::uint32_t> {
        const ExtDistance d = diameter(g);
        return d.is_finite() ? std::optional<std::uint32_t>(d.value()) : std::nullopt;
    });
    m.def("connected_graphs", &connected_graphs);
    m.def("trees", &trees);

    constexpr std::uint64_t kBudget = SearchLimits{}.node_budget;
    m.def("rho", [](const Graph& g, std::uint64_t b) { return result_tuple(rho(g, limits_for(b))); }, py::arg("g"),
          py::arg("budget") = kBudget, "(value, witness) of the packing number");
    m.def("rho_o", [](const Graph& g, std::uint64_t b) { return result_tuple(rho_o(g, limits_for(b))); },
          py::arg("g"), py::arg("budget") = kBudget);
    m.def("alpha2", [](const Graph& g, std::uint64_t b) { return result_tuple(alpha2(g, limits_for(b))); },
          py::arg("g"), py::arg("budget") = kBudget);
    m.def("gamma", [](const Graph& g, std::uint64_t b) { return result_tuple(gamma(g, limits_for(b))); },
          py::arg("g"), py::arg("budget") = kBudget);
    m.def("gamma_t", [](const Graph& g, std::uint64_t b) { return result_tuple(gamma_t(g, limits_for(b))); },
          py::arg("g"), py::arg("budget") = kBudget);
    m.def("_gamma_f", [](const Graph& g) { return to_string(gamma_f(g)); });
    m.def("chromatic_number", [](const Graph& g, std::uint64_t b) { return chromatic_number(g, limits_for(b)); },
          py::arg("g"), py::arg("budget") = kBudget);
    m.def("is_packing", [](const Graph& g, const std::vector<Vertex>& s) {
        return is_packing(g, VertexSet::from_members(g.order(), s));
    });
    m.def("is_open_packing", [](const Graph& g, const std::vector<Vertex>& s) {
        return is_open_packing(g, VertexSet::from_members(g.order(), s));
    });
    m.def(
        "enumerate_maximum",
        [](const Graph& g, bool open) {
            std::vector<std::vector<Vertex>> out;
            for (const VertexSet& s : enumerate_maximum(g, open ? ConflictKind::Open : ConflictKind::Closed))
                out.push_back(s.members());
            return out;
        },
        py::arg("g"), py::arg("open") = false);

    m.def(
        "product",
        [](const Graph& g, const Graph& h, const std::string& kind) {
            return product_tuple(product(g, h, parse_product_kind(kind)));
        },
        py::arg("g"), py::arg("h"), py::arg("kind") = "cartesian",
        "(graph, |V(G)|, |V(H)|); vertex (a, b) has index a * |V(H)| + b");
    m.def(
        "rooted_product",
        [](const Graph& g, const Graph& h, Vertex root) { return product_tuple(rooted_product({g, h, root})); },
        py::arg("g"), py::arg("h"), py::arg("root"));

    m.def("classify_rooted", [](const Graph& h, Vertex v) {
        const RootedClass c = classify_rooted(h, v);
        return py::make_tuple(std::string(rooted_class_name(c.kind)), c.evidence.members());
    });
    m.def("rooted_rho", [](const Graph& g, const Graph& h, Vertex v) { return rooted_rho(g, h, v); });
    m.def("rooted_rho_o", [](const Graph& g, const Graph& h, Vertex v) { return rooted_rho_o(g, h, v); });

    m.def("diametral_open_packing",
          [](const Graph& g, const Graph& h) { return diametral_open_packing(g, h).members(); });
    m.def("gkr_open_packing", [](const Graph& g, std::size_t r, const std::vector<Vertex>& s) {
        return gkr_open_packing(g, r, VertexSet::from_members(g.order(), s)).members();
    });
    m.def("prop_gap_witness", [](std::size_t r, std::size_t t, std::size_t n, const Graph& base) {
        return prop_gap_witness(r, t, n, base).members();
    });

    m.def("theorems", [] {
        std::vector<std::string> out;
        for (TheoremId id : all_theorems())
            out.emplace_back(theorem_name(id));
        return out;
    });
    m.def(
        "_verify",
        [](const std::vector<std::string>& names, std::uint64_t seed, std::uint64_t budget, unsigned threads) {
            std::vector<TheoremId> ids;
            for (const auto& n : names)
                ids.push_back(parse_theorem(n));
            SuiteResult result;
            {
                py::gil_scoped_release release;
                result = run_suite(ids, seed, limits_for(budget), threads);
            }
            return suite_json(result).dump();
        },
        py::arg("theorems"), py::arg("seed") = 1, py::arg("budget") = kBudget, py::arg("threads") = 1);
}
