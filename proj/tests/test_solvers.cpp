#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracles.hpp"

#include "packprod/error.hpp"
#include "packprod/families.hpp"
#include "packprod/products.hpp"
#include "packprod/solvers.hpp"

using namespace packprod;

namespace {

std::vector<std::vector<Vertex>> members_of(const std::vector<VertexSet>& sets)
{
    std::vector<std::vector<Vertex>> out;
    for (const auto& s : sets)
        out.push_back(s.members());
    return out;
}

} // namespace

TEST_CASE("predicates")
{
    CHECK(is_packing(cycle_graph(6), VertexSet::from_members(6, {0, 3})));
    CHECK(is_open_packing(path_graph(6), VertexSet::from_members(6, {0, 1, 4, 5})));
    const VertexSet pair = VertexSet::from_members(3, {0, 1});
    CHECK_FALSE(is_packing(complete_graph(3), pair));
    CHECK_FALSE(is_open_packing(complete_graph(3), pair));
    CHECK(is_2_independent(complete_graph(3), pair));
    CHECK(is_dominating(complete_graph(3), VertexSet::from_members(3, {2})));
    CHECK_FALSE(is_total_dominating(path_graph(3), VertexSet::from_members(3, {1})));
    CHECK(is_total_dominating(path_graph(3), VertexSet::from_members(3, {0, 1})));
    CHECK_THROWS_AS(is_packing(path_graph(3), VertexSet::from_members(5, {4})), Error);
}

TEST_CASE("conflict graphs")
{
    const Graph closed = conflict_graph(path_graph(4), ConflictKind::Closed);
    CHECK(closed.edge_count() == 5);
    CHECK_FALSE(closed.adjacent(0, 3));
    CHECK(conflict_graph(complete_graph(2), ConflictKind::Open).edge_count() == 0);
    CHECK(conflict_graph(complete_graph(3), ConflictKind::Open) == complete_graph(3));
}

TEST_CASE("invariant examples")
{
    CHECK(max_independent_set(cycle_graph(5)).value == 2);
    CHECK(max_independent_set(complete_graph(6)).value == 1);
    CHECK(max_independent_set(empty_graph(5)).value == 5);

    CHECK(rho(complete_graph(5)).value == 1);
    CHECK(rho(pendant_expansion(complete_graph(3), 2)).value == 3);
    CHECK(rho_o(product(complete_graph(2), complete_graph(3), ProductKind::Cartesian).graph).value == 2);
    CHECK(rho_o(product(complete_graph(3), complete_graph(3), ProductKind::Cartesian).graph).value == 1);
    CHECK(rho_o(path_graph(6)).value == 4);
    CHECK(rho_o(path_graph(5)).value == 3);
    CHECK(rho(path_graph(7)).value == 3);

    for (std::size_t t = 2; t <= 6; ++t)
        CHECK(alpha2(complete_graph(t)).value == 2);
    CHECK(alpha2(empty_graph(5)).value == 5);
    CHECK(alpha2(cycle_graph(6)).value == 4);

    CHECK(gamma(complete_graph(4)).value == 1);
    CHECK(gamma(path_graph(7)).value == 3);
    CHECK(gamma_t(path_graph(6)).value == 4);
    CHECK_THROWS_AS(gamma_t(empty_graph(2)), Error);

    CHECK(gamma_f(complete_graph(5)) == Rational(1));
    CHECK(gamma_f(cycle_graph(4)) == Rational(4, 3));
    CHECK(gamma_f(Graph(1)) == Rational(1));
    CHECK_THROWS_AS(gamma_f(Graph(0)), Error);

    CHECK(chromatic_number(complete_graph(4)) == 4);
    CHECK(chromatic_number(cycle_graph(5)) == 3);
    CHECK(color_count(greedy_coloring(path_graph(4), {0, 1, 2, 3})) == 2);
}

TEST_CASE("empty graph invariants")
{
    const Graph empty(0);
    CHECK(rho(empty).value == 0);
    CHECK(rho_o(empty).value == 0);
    CHECK(alpha2(empty).value == 0);
    CHECK(gamma(empty).value == 0);
    CHECK(chromatic_number(empty) == 0);
}

TEST_CASE("enumeration examples")
{
    CHECK(members_of(enumerate_maximum(complete_graph(2), ConflictKind::Closed)) ==
          std::vector<std::vector<Vertex>>{{0}, {1}});
    CHECK(members_of(enumerate_maximum(path_graph(6), ConflictKind::Open)) ==
          std::vector<std::vector<Vertex>>{{0, 1, 4, 5}});
    CHECK(members_of(enumerate_maximum(path_graph(4), ConflictKind::Closed)) ==
          std::vector<std::vector<Vertex>>{{0, 3}});

    SearchLimits tight;
    tight.enumeration_limit = 2;
    try {
        enumerate_maximum(complete_graph(5), ConflictKind::Closed, tight);
        FAIL("expected EnumerationLimitExceeded");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::EnumerationLimitExceeded);
    }
}

TEST_CASE("node budget")
{
    SearchLimits tiny;
    tiny.node_budget = 1;
    try {
        rho(cycle_graph(12), tiny);
        FAIL("expected NodeBudgetExceeded");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NodeBudgetExceeded);
    }
    CHECK_THROWS_AS(chromatic_number(cycle_graph(9), tiny), Error);
}

TEST_CASE("invariant names")
{
    for (Invariant inv : {Invariant::Rho, Invariant::RhoOpen, Invariant::Alpha2, Invariant::Gamma,
                          Invariant::GammaTotal, Invariant::GammaFractional, Invariant::Chromatic})
        CHECK(parse_invariant(invariant_name(inv)) == inv);
    CHECK_THROWS_AS(parse_invariant("omega"), Error);
}

TEST_CASE("branch and bound matches brute force")
{
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        const Graph g = random_gnp(1 + seed % 9, 0.2 + 0.1 * static_cast<double>(seed % 6), seed);
        CAPTURE(seed);

        const InvariantResult p = rho(g);
        CHECK(p.value == oracle::rho(g));
        CHECK(p.witness.size() == p.value);
        CHECK(is_packing(g, p.witness));

        const InvariantResult po = rho_o(g);
        CHECK(po.value == oracle::rho_o(g));
        CHECK(po.witness.size() == po.value);
        CHECK(is_open_packing(g, po.witness));

        const InvariantResult a2 = alpha2(g);
        CHECK(a2.value == oracle::alpha2(g));
        CHECK(is_2_independent(g, a2.witness));

        const InvariantResult d = gamma(g);
        CHECK(d.value == oracle::gamma(g));
        CHECK(d.witness.size() == d.value);
        CHECK(is_dominating(g, d.witness));

        if (g.min_degree() > 0) {
            const InvariantResult dt = gamma_t(g);
            CHECK(dt.value == oracle::gamma_t(g));
            CHECK(is_total_dominating(g, dt.witness));
            CHECK(po.value <= dt.value);
            CHECK(d.value <= dt.value);
        }

        const std::size_t chi = chromatic_number(g);
        CHECK(chi == oracle::chromatic(g));
        const auto coloring = optimal_coloring(g);
        CHECK(is_proper_coloring(g, coloring));
        CHECK(color_count(coloring) == chi);
        const auto greedy = greedy_coloring(g, welsh_powell_order(g));
        CHECK(is_proper_coloring(g, greedy));
        CHECK(color_count(greedy) >= chi);

        // rho <= gamma_f <= gamma, and LP duality.
        const FractionalSolution primal = fractional_domination(g);
        const FractionalSolution dual = fractional_packing(g);
        CHECK(primal.value == dual.value);
        CHECK(Rational(p.value) <= primal.value);
        CHECK(primal.value <= Rational(d.value));
        for (Vertex v = 0; v < g.order(); ++v) {
            Rational cover = 0, load = 0;
            for (Vertex u : g.closed_neighbors(v)) {
                cover += primal.weights[u];
                load += dual.weights[u];
            }
            CHECK(cover >= 1);
            CHECK(load <= 1);
        }

        for (ConflictKind kind : {ConflictKind::Closed, ConflictKind::Open}) {
            const auto found = members_of(enumerate_maximum(g, kind));
            const auto expected =
                oracle::all_maximum(g, kind == ConflictKind::Closed ? oracle::packing : oracle::open_packing);
            CHECK(found == expected);
        }
    }
}

TEST_CASE("simplex edge cases")
{
    // max x + y, x + 2y <= 4, 3x + y <= 6  ->  x = 8/5, y = 6/5.
    LinearProgram lp{{1, 1}, {{1, 2}, {3, 1}}, {4, 6}};
    const LpSolution opt = solve_lp(lp);
    REQUIRE(opt.status == LpStatus::Optimal);
    CHECK(opt.value == Rational(14, 5));
    CHECK(opt.x[0] == Rational(8, 5));
    CHECK(opt.x[1] == Rational(6, 5));

    // x >= 2 written as -x <= -2, together with x <= 1.
    CHECK(solve_lp({{1}, {{-1}, {1}}, {-2, 1}}).status == LpStatus::Infeasible);
    CHECK(solve_lp({{1, 0}, {{-1, 1}}, {1}}).status == LpStatus::Unbounded);

    // Degenerate vertex where naive pivoting can cycle.
    LinearProgram beale{{Rational(3, 4), -150, Rational(1, 50), -6},
                        {{Rational(1, 4), -60, Rational(-1, 25), 9},
                         {Rational(1, 2), -90, Rational(-1, 50), 3},
                         {0, 0, 1, 0}},
                        {0, 0, 1}};
    const LpSolution b = solve_lp(beale);
    REQUIRE(b.status == LpStatus::Optimal);
    CHECK(b.value == Rational(1, 20));

    CHECK(to_string(Rational(4, 3)) == "4/3");
    CHECK(to_string(Rational(3)) == "3/1");
    CHECK(parse_rational("6/4") == Rational(3, 2));
    CHECK(parse_rational("5") == Rational(5));
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
}
