#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "packprod/catalog.hpp"
#include "packprod/constructions.hpp"
#include "packprod/error.hpp"
#include "packprod/families.hpp"

#include <functional>

using namespace packprod;

namespace {

ErrorCode code_of(const std::function<void()>& fn)
{
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error thrown");
    return ErrorCode::ParseError;
}

Graph k2_plus_k1() { return disjoint_union(complete_graph(2), Graph(1)); }

/// K_k with a pendant attached to vertex 0; the pendant is vertex k.
Graph clique_with_pendant(std::size_t k)
{
    GraphBuilder b(k + 1);
    for (Vertex u = 0; u < k; ++u)
        for (Vertex v = u + 1; v < k; ++v)
            b.add_edge(u, v);
    b.add_edge(0, static_cast<Vertex>(k));
    return std::move(b).build();
}

void check_open(const Graph& host, const VertexSet& s, std::size_t size)
{
    CHECK(is_open_packing(host, s));
    CHECK(s.size() == size);
}

void check_closed(const Graph& host, const VertexSet& s, std::size_t size)
{
    CHECK(is_packing(host, s));
    CHECK(s.size() == size);
}

} // namespace

TEST_CASE("eta values")
{
    const EtaValues p4 = eta_values(path_graph(4), path_graph(4));
    CHECK(p4.eta == 2);
    CHECK(eta_values(path_graph(3), path_graph(3)).flag == 1);
    CHECK(eta_values(complete_graph(2), path_graph(3)).flag == 0);
    CHECK(eta_values(path_graph(3), path_graph(4)).flag == 0);
    CHECK(code_of([] { eta_values(empty_graph(2), path_graph(2)); }) == ErrorCode::DisconnectedFactor);
    CHECK(is_k2(path_graph(2)));
    CHECK_FALSE(is_k2(empty_graph(2)));
}

TEST_CASE("diametral path")
{
    CHECK(diametral_path(path_graph(5)) == std::vector<Vertex>{0, 1, 2, 3, 4});
    const auto c6 = diametral_path(cycle_graph(6));
    CHECK(c6.size() == 4);
    CHECK(c6.front() == 0);
    CHECK(c6.back() == 3);
    CHECK(diametral_path(Graph(1)) == std::vector<Vertex>{0});
}

TEST_CASE("cartesian open packing product")
{
    const auto build = [](const Graph& g, const Graph& h, std::size_t size) {
        check_open(product(g, h, ProductKind::Cartesian).graph, cartesian_open_packing_product(g, h), size);
    };
    build(complete_graph(2), path_graph(4), 4);
    build(path_graph(6), complete_graph(3), 4);
    build(Graph(1), Graph(1), 1);
}

TEST_CASE("diametral open packing")
{
    const auto build = [](const Graph& g, const Graph& h, std::size_t size) {
        check_open(product(g, h, ProductKind::Cartesian).graph, diametral_open_packing(g, h), size);
    };
    build(complete_graph(2), path_graph(4), 4);
    build(path_graph(3), path_graph(3), 3);
    build(complete_graph(2), complete_graph(2), 2);
    CHECK(code_of([] { diametral_open_packing(empty_graph(2), path_graph(3)); }) == ErrorCode::DisconnectedFactor);
}

TEST_CASE("quotient graph")
{
    const QuotientGraph c6 = quotient_graph(cycle_graph(6), VertexSet::from_members(6, {0, 1, 3, 4}));
    CHECK(c6.graph == complete_graph(2));
    CHECK(c6.parts.size() == 2);
    CHECK(c6.part_of[0] == c6.part_of[1]);
    CHECK(c6.part_of[3] == c6.part_of[4]);
    CHECK_FALSE(c6.part_of[2].has_value());

    CHECK(quotient_graph(path_graph(4), VertexSet::from_members(4, {1, 2})).graph == Graph(1));
    CHECK(quotient_graph(path_graph(7), VertexSet::from_members(7, {0, 3, 6})).graph == empty_graph(3));
    CHECK(code_of([] { quotient_graph(path_graph(4), VertexSet::full(4)); }) == ErrorCode::NotTwoIndependent);
}

TEST_CASE("gkr open packing")
{
    const Graph c6 = cycle_graph(6);
    const VertexSet s = VertexSet::from_members(6, {0, 1, 3, 4});
    const VertexSet p = gkr_open_packing(c6, 3, s);
    check_open(product(c6, complete_graph(3), ProductKind::Cartesian).graph, p, 4);
    CHECK(rho_o(product(c6, complete_graph(3), ProductKind::Cartesian).graph).value == 4);

    CHECK(code_of([] { gkr_open_packing(path_graph(4), 3, VertexSet::full(4)); }) == ErrorCode::NotTwoIndependent);
    CHECK(code_of([] { gkr_open_packing(complete_graph(3), 3, VertexSet::from_members(3, {0, 1})); }) ==
          ErrorCode::TriangleFound);
    CHECK(code_of([] { gkr_open_packing(cycle_graph(6), 2, VertexSet::from_members(6, {0, 1, 3, 4})); }) ==
          ErrorCode::BadParameters);
    CHECK(code_of([] { gkr_open_packing(cycle_graph(6), 3, VertexSet::from_members(6, {0, 1})); }) ==
          ErrorCode::BadParameters);
}

TEST_CASE("gkr open packing on triangle-free catalog graphs")
{
    for (std::size_t n = 1; n <= 6; ++n)
        for (const Graph& g : connected_graphs(n)) {
            if (!is_triangle_free(g))
                continue;
            const InvariantResult s = alpha2(g);
            for (std::size_t r = 3; r <= 4; ++r) {
                VertexSet p;
                try {
                    p = gkr_open_packing(g, r, s.witness);
                } catch (const Error& e) {
                    CHECK(e.code() == ErrorCode::ChromaticExceedsR);
                    continue;
                }
                check_open(product(g, complete_graph(r), ProductKind::Cartesian).graph, p, s.value);
            }
        }
}

TEST_CASE("lexicographic builders")
{
    const Graph g = k2_plus_k1();
    const Graph host = product(g, path_graph(4), ProductKind::Lexicographic).graph;
    check_closed(host, lex_packing(g, path_graph(4)), 3);
    CHECK(rho(host).value == 3);

    check_closed(product(cycle_graph(5), path_graph(3), ProductKind::Lexicographic).graph,
                 lex_packing(cycle_graph(5), path_graph(3)), 1);

    const Graph p4k2 = product(path_graph(4), complete_graph(2), ProductKind::Lexicographic).graph;
    check_open(p4k2, lex_open_packing(path_graph(4), complete_graph(2)), 2);
    CHECK(rho_o(p4k2).value == 2);

    const Graph h_iso = disjoint_union(complete_graph(2), Graph(1));
    const Graph p3h = product(path_graph(3), h_iso, ProductKind::Lexicographic).graph;
    const VertexSet open = lex_open_packing(path_graph(3), h_iso);
    CHECK(is_open_packing(p3h, open));
    CHECK(open.size() == rho_o(p3h).value);
}

TEST_CASE("strong builders")
{
    const Graph p7k3 = product(path_graph(7), complete_graph(3), ProductKind::Strong).graph;
    check_closed(p7k3, strong_packing(path_graph(7), complete_graph(3)), 3);
    CHECK(rho(p7k3).value == 3);
    check_closed(product(Graph(1), Graph(1), ProductKind::Strong).graph, strong_packing(Graph(1), Graph(1)), 1);
    check_open(product(k2_plus_k1(), complete_graph(2), ProductKind::Strong).graph,
               strong_open_packing(k2_plus_k1(), complete_graph(2)), 3);
}

TEST_CASE("direct builders")
{
    const Graph p4k2 = product(path_graph(4), complete_graph(2), ProductKind::Direct).graph;
    check_closed(p4k2, direct_packing(path_graph(4), complete_graph(2)), 4);
    CHECK(rho(p4k2).value == 4);
    check_closed(product(Graph(1), complete_graph(5), ProductKind::Direct).graph,
                 direct_packing(Graph(1), complete_graph(5)), 5);
    const Graph c6k2 = product(cycle_graph(6), complete_graph(2), ProductKind::Direct).graph;
    check_open(c6k2, direct_open_packing(cycle_graph(6), complete_graph(2)), 4);
    CHECK(rho_o(c6k2).value == 4);
}

TEST_CASE("rooted classification examples")
{
    const RootedClass a = classify_rooted(path_graph(6), 2);
    CHECK(a.kind == RootedClassKind::A);
    CHECK(a.evidence.members() == std::vector<Vertex>{0, 1, 4, 5});

    const RootedClass b = classify_rooted(path_graph(5), 0);
    CHECK(b.kind == RootedClassKind::B);
    CHECK(is_open_packing(path_graph(5), b.evidence));
    CHECK(b.evidence.contains(0));
    CHECK_FALSE(b.evidence.contains(1));

    const Graph kp = clique_with_pendant(4);
    const RootedClass exact = classify_rooted(kp, 4);
    CHECK(exact.kind == RootedClassKind::CExact);
    CHECK(exact.rho_o_h == 2);
    CHECK(exact.rho_o_h_star == 1);

    const RootedClass deficient = classify_rooted(path_graph(6), 0);
    CHECK(deficient.kind == RootedClassKind::CDeficient);
    CHECK(deficient.rho_o_h_star == 2);

    CHECK(code_of([] { classify_rooted(path_graph(3), 3); }) == ErrorCode::InvalidVertex);
    CHECK(rooted_class_name(RootedClassKind::CExact) == "C_EXACT");
}

TEST_CASE("rooted values and witnesses")
{
    CHECK(rooted_rho(cycle_graph(4), complete_graph(2), 0) == 4);
    const ProductGraph corona = rooted_product({cycle_graph(4), complete_graph(2), 0});
    CHECK(rho(corona.graph).value == 4);
    const VertexSet closed = rooted_witness(cycle_graph(4), complete_graph(2), 0, ConflictKind::Closed);
    check_closed(corona.graph, closed, 4);
    for (Vertex v : closed)
        CHECK(corona.h_coord(v) == 1);

    for (std::size_t n = 2; n <= 4; ++n)
        CHECK(rooted_rho_o(path_graph(n), path_graph(6), 0) == 3 * n);

    CHECK(rooted_rho_o(path_graph(3), path_graph(5), 0) == 8);
    const ProductGraph b = rooted_product({path_graph(3), path_graph(5), 0});
    CHECK(rho_o(b.graph).value == 8);
    check_open(b.graph, rooted_witness(path_graph(3), path_graph(5), 0, ConflictKind::Open), 8);

    const ProductGraph a = rooted_product({complete_graph(2), path_graph(6), 2});
    const VertexSet wa = rooted_witness(complete_graph(2), path_graph(6), 2, ConflictKind::Open);
    check_open(a.graph, wa, 8);
    CHECK(wa == a.pairs(VertexSet::full(2), VertexSet::from_members(6, {0, 1, 4, 5})));
}

TEST_CASE("rooted witnesses match their formulas on small pairs")
{
    const std::vector<Graph> gs{Graph(1), complete_graph(2), path_graph(3), k2_plus_k1(), cycle_graph(4)};
    for (const Graph& g : gs)
        for (std::size_t hn = 1; hn <= 4; ++hn)
            for (const Graph& h : connected_graphs(hn))
                for (Vertex v = 0; v < h.order(); ++v) {
                    const ProductGraph p = rooted_product({g, h, v});
                    const std::size_t closed = rooted_rho(g, h, v);
                    CHECK(closed == rho(p.graph).value);
                    check_closed(p.graph, rooted_witness(g, h, v, ConflictKind::Closed), closed);
                    if (h.order() >= 2)
                        check_open(p.graph, rooted_witness(g, h, v, ConflictKind::Open), rooted_rho_o(g, h, v));
                }
}

TEST_CASE("prop gap witness")
{
    const Graph k2 = complete_graph(2);
    const VertexSet t22 = prop_gap_witness(2, 2, 2, k2);
    const Graph host22 = product(pendant_expansion(k2, 2), complete_graph(2), ProductKind::Cartesian).graph;
    check_closed(host22, t22, 4);
    CHECK(rho(host22).value == 4);

    const Graph g23 = pendant_expansion(k2, 3);
    const Graph host23 = product(g23, complete_graph(3), ProductKind::Cartesian).graph;
    check_closed(host23, prop_gap_witness(2, 3, 3, k2), 6);
    CHECK(rho(host23).value - rho(g23).value * rho(complete_graph(3)).value == 4);

    CHECK(code_of([] { prop_gap_witness(2, 3, 2, complete_graph(2)); }) == ErrorCode::BadParameters);
    CHECK(code_of([] { prop_gap_witness(3, 2, 2, complete_graph(2)); }) == ErrorCode::BadParameters);
    CHECK(code_of([] { prop_gap_witness(1, 2, 2, Graph(1)); }) == ErrorCode::BadParameters);
}
