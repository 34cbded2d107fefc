#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "packprod/catalog.hpp"
#include "packprod/error.hpp"
#include "packprod/families.hpp"
#include "packprod/products.hpp"

using namespace packprod;

namespace {

const ProductKind kCommutative[] = {ProductKind::Cartesian, ProductKind::Strong, ProductKind::Direct};
const ProductKind kAll[] = {ProductKind::Cartesian, ProductKind::Strong, ProductKind::Direct,
                            ProductKind::Lexicographic};

Graph random_factor(std::uint64_t seed)
{
    return random_gnp(1 + seed % 5, 0.5, seed);
}

} // namespace

TEST_CASE("product examples")
{
    const Graph k2 = complete_graph(2);
    const ProductGraph box = product(k2, k2, ProductKind::Cartesian);
    CHECK(canonical_code(box.graph) == canonical_code(cycle_graph(4)));

    const ProductGraph cross = product(k2, k2, ProductKind::Direct);
    CHECK(cross.graph.edge_count() == 2);
    CHECK(components(cross.graph).size() == 2);

    CHECK(product(k2, k2, ProductKind::Strong).graph == complete_graph(4));
    CHECK(product(path_graph(2), path_graph(3), ProductKind::Lexicographic).graph.edge_count() == 13);

    CHECK_THROWS_AS(product(Graph(0), k2, ProductKind::Cartesian), Error);
    CHECK_THROWS_AS(product(k2, k2, ProductKind::Rooted), Error);
    CHECK(parse_product_kind("strong") == ProductKind::Strong);
    CHECK_THROWS_AS(parse_product_kind("tensor"), Error);
}

TEST_CASE("codec")
{
    const ProductGraph p = product(path_graph(3), complete_graph(4), ProductKind::Cartesian);
    for (Vertex g = 0; g < 3; ++g)
        for (Vertex h = 0; h < 4; ++h) {
            const Vertex idx = p.encode(g, h);
            CHECK(idx == g * 4 + h);
            CHECK(p.g_coord(idx) == g);
            CHECK(p.h_coord(idx) == h);
        }
    const VertexSet s = p.pairs(VertexSet::from_members(3, {0, 2}), VertexSet::from_members(4, {1}));
    CHECK(s.members() == std::vector<Vertex>{1, 9});
}

TEST_CASE("rooted product examples")
{
    const ProductGraph p4 = rooted_product({complete_graph(2), complete_graph(2), 0});
    CHECK(canonical_code(p4.graph) == canonical_code(path_graph(4)));
    CHECK(p4.graph.adjacent(p4.encode(0, 0), p4.encode(1, 0)));

    const Graph h = cycle_graph(5);
    CHECK(rooted_product({Graph(1), h, 3}).graph == h);

    const ProductGraph corona = rooted_product({complete_graph(3), path_graph(2), 0});
    CHECK(corona.graph.order() == 6);
    CHECK(corona.graph.edge_count() == 6);

    CHECK_THROWS_AS(rooted_product({complete_graph(2), complete_graph(2), 2}), Error);
}

TEST_CASE("layers and projections")
{
    const ProductGraph p = product(complete_graph(2), complete_graph(3), ProductKind::Cartesian);
    CHECK(layer(p, Factor::G, 1).members() == std::vector<Vertex>{1, 4});
    CHECK(layer(p, Factor::H, 1).members() == std::vector<Vertex>{3, 4, 5});
    CHECK(project(p, VertexSet::full(6), Factor::G) == VertexSet::full(2));
    CHECK(project(p, VertexSet::from_members(6, {1, 2}), Factor::G).members() == std::vector<Vertex>{0});
    CHECK(project(p, VertexSet::from_members(6, {1, 2}), Factor::H).members() == std::vector<Vertex>{1, 2});
}

TEST_CASE("product distance examples")
{
    const ProductGraph box = product(cycle_graph(5), cycle_graph(5), ProductKind::Cartesian);
    CHECK(product_distance(box, box.encode(0, 0), box.encode(2, 2)) == ExtDistance(4));
    const ProductGraph strong = product(path_graph(4), path_graph(4), ProductKind::Strong);
    CHECK(product_distance(strong, strong.encode(0, 0), strong.encode(3, 2)) == ExtDistance(3));
    const ProductGraph direct = product(path_graph(3), path_graph(3), ProductKind::Direct);
    CHECK(product_distance(direct, direct.encode(0, 0), direct.encode(2, 0)) == ExtDistance(2));
    CHECK_FALSE(product_distance(direct, direct.encode(0, 0), direct.encode(1, 0)).is_finite());
}

TEST_CASE("edge counts and degrees follow the factor formulas")
{
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const Graph g = random_factor(seed);
        const Graph h = random_factor(seed + 1000);
        const std::size_t ng = g.order(), nh = h.order(), eg = g.edge_count(), eh = h.edge_count();

        const ProductGraph box = product(g, h, ProductKind::Cartesian);
        const ProductGraph direct = product(g, h, ProductKind::Direct);
        const ProductGraph strong = product(g, h, ProductKind::Strong);
        const ProductGraph lex = product(g, h, ProductKind::Lexicographic);
        CHECK(box.graph.edge_count() == ng * eh + nh * eg);
        CHECK(direct.graph.edge_count() == 2 * eg * eh);
        CHECK(strong.graph.edge_count() == box.graph.edge_count() + direct.graph.edge_count());
        CHECK(lex.graph.edge_count() == ng * eh + eg * nh * nh);

        for (Vertex a = 0; a < ng; ++a)
            for (Vertex b = 0; b < nh; ++b) {
                const Vertex x = box.encode(a, b);
                const std::size_t dg = g.degree(a), dh = h.degree(b);
                CHECK(box.graph.degree(x) == dg + dh);
                CHECK(direct.graph.degree(x) == dg * dh);
                CHECK(strong.graph.degree(x) == dg + dh + dg * dh);
                CHECK(lex.graph.degree(x) == dg * nh + dh);
            }
    }
}

TEST_CASE("commutative products are symmetric under swapping coordinates")
{
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const Graph g = random_factor(seed);
        const Graph h = random_factor(seed + 77);
        for (ProductKind kind : kCommutative) {
            const ProductGraph gh = product(g, h, kind);
            const ProductGraph hg = product(h, g, kind);
            for (Vertex a = 0; a < gh.graph.order(); ++a)
                for (Vertex b = 0; b < gh.graph.order(); ++b)
                    CHECK(gh.graph.adjacent(a, b) ==
                          hg.graph.adjacent(hg.encode(gh.h_coord(a), gh.g_coord(a)),
                                            hg.encode(gh.h_coord(b), gh.g_coord(b))));
            const VertexSet all_hg = VertexSet::full(hg.graph.order());
            CHECK(swap_coordinates(all_hg, h.order(), g.order()) == VertexSet::full(gh.graph.order()));
            const VertexSet one = VertexSet::from_members(hg.graph.order(), {hg.encode(0, g.order() - 1)});
            CHECK(swap_coordinates(one, h.order(), g.order()).members() ==
                  std::vector<Vertex>{gh.encode(static_cast<Vertex>(g.order() - 1), 0)});
        }
    }
}

TEST_CASE("product distance agrees with BFS")
{
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const Graph g = random_factor(seed);
        const Graph h = random_factor(seed + 333);
        for (ProductKind kind : kAll) {
            const ProductGraph p = product(g, h, kind);
            const auto d = distance_matrix(p.graph);
            for (Vertex a = 0; a < p.graph.order(); ++a)
                for (Vertex b = 0; b < p.graph.order(); ++b)
                    CHECK_MESSAGE(product_distance(p, a, b) == d[a][b],
                                  product_kind_name(kind) << " " << a << " " << b);
        }
    }
    const ProductGraph rooted = rooted_product({path_graph(2), path_graph(2), 0});
    CHECK_THROWS_AS(product_distance(rooted, 0, 1), Error);
}

TEST_CASE("rooted product structure")
{
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const Graph g = random_factor(seed);
        const Graph h = random_factor(seed + 555);
        const Vertex root = static_cast<Vertex>(seed % h.order());
        const ProductGraph p = rooted_product({g, h, root});
        CHECK(p.graph.order() == g.order() * h.order());
        CHECK(p.graph.edge_count() == g.order() * h.edge_count() + g.edge_count());

        // Without the root-layer edges the product falls apart into |V(G)| copies of H.
        GraphBuilder b(p.graph.order());
        for (const auto& [x, y] : p.graph.edges())
            if (p.g_coord(x) == p.g_coord(y))
                b.add_edge(x, y);
        const Graph layers = std::move(b).build();
        for (Vertex gv = 0; gv < g.order(); ++gv) {
            const MappedGraph copy = induced(layers, layer(p, Factor::H, gv));
            CHECK(copy.graph == h);
        }
        CHECK(induced(p.graph, layer(p, Factor::G, root)).graph == g);
    }
}
