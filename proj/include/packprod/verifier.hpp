#pragma once

#include "packprod/graph.hpp"
#include "packprod/simplex.hpp"
#include "packprod/solvers.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace packprod {

enum class TheoremId {
    Eq2VizingLike,
    PropGap,
    Prop2Upper,
    OpenUpperAnalogue,
    Thm4Lower,
    Eq7Complete,
    GkrSandwich,
    GkrEquality,
    CorR0,
    LexRho,
    LexRhoO,
    StrongBounds,
    StrongDiam2,
    StrongOpenBounds,
    DirectRhoLower,
    DirectK2Tight,
    DirectRhoOLower,
    RootedRho,
    RootedRhoO,
    TreeMeirMoon,
    TreeRall,
};

std::string_view theorem_name(TheoremId id) noexcept;
/// The inequality or identity being checked, in plain notation.
std::string_view theorem_statement(TheoremId id) noexcept;
/// Throws ParseError for unknown names.
TheoremId parse_theorem(std::string_view name);
const std::vector<TheoremId>& all_theorems();

enum class Relation { Eq, Le, Ge };
std::string_view relation_symbol(Relation r) noexcept;

/// Info marks exploratory records that carry no pass/fail meaning.
enum class Outcome { Pass, Fail, Skip, Info };
std::string_view outcome_name(Outcome o) noexcept;

/// One point of a grid. Which fields matter depends on the theorem.
struct Instance {
    std::size_t id = 0;
    std::string label;
    Graph g;
    std::optional<Graph> h;
    std::optional<Vertex> root;
    std::size_t r = 0;
    std::size_t t = 0;
    std::size_t n = 0;
    std::optional<std::uint64_t> seed;
    std::string tag; // selects an extra named check, e.g. a worked example's expected class
};

struct CheckReport {
    TheoremId theorem = TheoremId::Eq2VizingLike;
    Instance instance;
    std::string part; // distinguishes several checks on one instance, e.g. "lower" / "upper"
    Rational lhs;
    Relation relation = Relation::Eq;
    Rational rhs;
    std::optional<VertexSet> witness;
    Outcome outcome = Outcome::Skip;
    double elapsed_ms = 0;
    std::string notes;

    bool pass() const { return outcome == Outcome::Pass; }
};

/// Evaluates `theorem` on one instance. Returns no reports when the hypothesis does not
/// apply, and a single skipped report when a search limit is hit.
std::vector<CheckReport> check(TheoremId theorem, const Instance& instance, const SearchLimits& limits = {});

/// The default instance grid for a theorem.
std::vector<Instance> default_grid(TheoremId theorem, std::uint64_t seed);

struct SuiteSummary {
    std::size_t pass = 0;
    std::size_t fail = 0;
    std::size_t skip = 0;
};

/// Agreement statistics for a conjectured identity; never pass/fail.
struct Exploration {
    std::string name;
    std::string statement;
    std::size_t agree = 0;
    std::size_t total = 0;
};

struct SuiteResult {
    std::uint64_t seed = 0;
    std::uint64_t budget = 0;
    std::vector<CheckReport> reports;
    SuiteSummary summary;
    std::vector<Exploration> exploratory;
};

/// Runs every theorem over its default grid; reports sorted by (theorem, instance id, part).
SuiteResult run_suite(const std::vector<TheoremId>& theorems, std::uint64_t seed, const SearchLimits& limits = {},
                      unsigned threads = 1);

SuiteSummary summarize(const std::vector<CheckReport>& reports);

/// Graph6 text of g, used to describe grid graphs.
std::string describe(const Graph& g);

} // namespace packprod
