#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "packprod/error.hpp"
#include "packprod/families.hpp"
#include "packprod/report_json.hpp"
#include "packprod/verifier.hpp"

#include <algorithm>

using namespace packprod;

namespace {

Instance pair_instance(Graph g, Graph h)
{
    Instance in;
    in.label = "test";
    in.g = std::move(g);
    in.h = std::move(h);
    return in;
}

bool all_pass(const std::vector<CheckReport>& reports)
{
    return !reports.empty() && std::all_of(reports.begin(), reports.end(), [](const CheckReport& r) {
        return r.outcome == Outcome::Pass || r.outcome == Outcome::Info;
    });
}

} // namespace

TEST_CASE("theorem names round trip")
{
    CHECK(all_theorems().size() == 21);
    for (TheoremId id : all_theorems()) {
        CHECK(parse_theorem(theorem_name(id)) == id);
        CHECK_FALSE(theorem_statement(id).empty());
    }
    CHECK_THROWS_AS(parse_theorem("THM99"), Error);
    CHECK(outcome_name(Outcome::Skip) == "SKIP");
    CHECK(relation_symbol(Relation::Le) == "<=");
}

TEST_CASE("complete cartesian example")
{
    Instance in = pair_instance(complete_graph(3), complete_graph(4));
    in.r = 3;
    in.n = 4;
    const auto reports = check(TheoremId::Eq7Complete, in);
    REQUIRE(reports.size() == 1);
    CHECK(reports[0].pass());
    CHECK(reports[0].lhs == 1);
    CHECK(reports[0].rhs == 1);
}

TEST_CASE("strong product with a small diameter factor")
{
    const auto reports = check(TheoremId::StrongDiam2, pair_instance(path_graph(7), complete_graph(3)));
    CHECK(all_pass(reports));
    CHECK(reports.front().lhs == 3);
}

TEST_CASE("rooted packing example")
{
    Instance in = pair_instance(cycle_graph(4), complete_graph(2));
    in.root = 0;
    const auto reports = check(TheoremId::RootedRho, in);
    CHECK(all_pass(reports));
    CHECK(reports.front().lhs == 4);
}

TEST_CASE("rooted open packing detects the deficient counterexample")
{
    // Triangle 0-2-3 with a pendant 1 on vertex 3, rooted at the pendant.
    Instance in = pair_instance(complete_graph(2), build_graph(4, std::vector<Edge>{{0, 2}, {0, 3}, {2, 3}, {1, 3}}));
    in.root = 1;
    const auto reports = check(TheoremId::RootedRhoO, in);
    const auto value = std::find_if(reports.begin(), reports.end(), [](const CheckReport& r) { return r.part == "value"; });
    REQUIRE(value != reports.end());
    CHECK(value->outcome == Outcome::Fail);
    CHECK(value->lhs == 3);
    CHECK(value->rhs == 2);
}

TEST_CASE("empty theorem list")
{
    const SuiteResult result = run_suite({}, 1);
    CHECK(result.reports.empty());
    CHECK(result.summary.pass == 0);
    CHECK(result.summary.fail == 0);
    CHECK(result.summary.skip == 0);
}

TEST_CASE("suite json is deterministic across runs and thread counts")
{
    const std::vector<TheoremId> ids{TheoremId::Eq2VizingLike, TheoremId::LexRho, TheoremId::TreeRall};
    const std::string first = suite_json(run_suite(ids, 7, {}, 1)).dump(2);
    CHECK(first == suite_json(run_suite(ids, 7, {}, 1)).dump(2));
    CHECK(first == suite_json(run_suite(ids, 7, {}, 4)).dump(2));
    CHECK(first != suite_json(run_suite(ids, 8, {}, 1)).dump(2));

    const auto doc = nlohmann::json::parse(first);
    CHECK(doc["run"]["seed"] == 7);
    CHECK(doc["summary"]["fail"] == 0);
    CHECK(doc["reports"].size() == doc["summary"]["pass"].get<std::size_t>());
    CHECK_FALSE(doc["reports"][0].contains("elapsed_ms"));
    CHECK(suite_json(run_suite({TheoremId::TreeRall}, 7), true)["reports"][0].contains("elapsed_ms"));
}

TEST_CASE("budget overruns are skipped, never passed")
{
    SearchLimits tiny;
    tiny.node_budget = 1;
    const auto reports = check(TheoremId::Eq2VizingLike, pair_instance(cycle_graph(7), cycle_graph(6)), tiny);
    REQUIRE(reports.size() == 1);
    CHECK(reports[0].outcome == Outcome::Skip);
    CHECK(reports[0].part == "budget");
    const SuiteSummary s = summarize(reports);
    CHECK(s.skip == 1);
    CHECK(s.pass == 0);
}

TEST_CASE("grids are seeded")
{
    CHECK(default_grid(TheoremId::Eq2VizingLike, 3).size() == 100);
    const auto a = default_grid(TheoremId::Thm4Lower, 3);
    const auto b = default_grid(TheoremId::Thm4Lower, 3);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].g == b[i].g);
        CHECK(*a[i].h == *b[i].h);
    }
}

TEST_CASE("rationals in json")
{
    CHECK(rational_json(Rational(3)) == 3);
    CHECK(rational_json(Rational(4, 3)) == "4/3");
    CHECK(set_json(VertexSet::from_members(5, {1, 4})) == nlohmann::json::array({1, 4}));
}
