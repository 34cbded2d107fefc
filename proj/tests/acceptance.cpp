// Runs every acceptance criterion and prints one PASS/FAIL line for each.
// Usage: acceptance [seed]

#include "oracles.hpp"

#include "packprod/families.hpp"
#include "packprod/solvers.hpp"
#include "packprod/verifier.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

using namespace packprod;

namespace {

struct Verdict {
    bool ok = false;
    std::string detail;
    std::vector<std::string> failures; // first few, printed under the verdict line
};

std::string show(const Rational& q)
{
    return denominator(q) == 1 ? numerator(q).str() : to_string(q);
}

Verdict from_suite(const std::vector<TheoremId>& ids, std::uint64_t seed, unsigned threads)
{
    const SuiteResult result = run_suite(ids, seed, {}, threads);
    const SuiteSummary& s = result.summary;
    Verdict out;
    out.ok = s.fail == 0 && s.skip == 0 && s.pass > 0;
    out.detail = std::to_string(s.pass) + " pass, " + std::to_string(s.fail) + " fail, " + std::to_string(s.skip) +
                 " skip";
    std::size_t shown = 0;
    for (const CheckReport& r : result.reports)
        if (r.outcome == packprod::Outcome::Fail && shown++ < 3)
            out.failures.push_back(std::string(theorem_name(r.theorem)) + " " + r.instance.label + " [" + r.part +
                          "]: " + show(r.lhs) + " " + std::string(relation_symbol(r.relation)) + " " +
                          show(r.rhs) + (r.notes.empty() ? "" : " (" + r.notes + ")"));
    return out;
}

Verdict solver_self_consistency(std::uint64_t seed)
{
    SplitMix64 rng(derive_seed(seed, 11));
    std::size_t checked = 0, mismatches = 0;
    for (int i = 0; i < 500; ++i) {
        const std::size_t n = 1 + rng.next_below(8);
        const double p = 0.1 + 0.8 * rng.next_unit();
        const Graph g = random_gnp(n, p, rng.next());
        bool ok = rho(g).value == oracle::rho(g) && rho_o(g).value == oracle::rho_o(g) &&
                  alpha2(g).value == oracle::alpha2(g);
        ok = ok && fractional_domination(g).value == fractional_packing(g).value;
        mismatches += ok ? 0 : 1;
        ++checked;
    }
    return {mismatches == 0, std::to_string(checked) + " graphs, " + std::to_string(mismatches) + " mismatches"};
}

} // namespace

int main(int argc, char** argv)
{
    const std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 1;
    const unsigned threads = std::max(1u, std::thread::hardware_concurrency());

    using T = TheoremId;
    const std::vector<std::pair<std::string, std::vector<T>>> criteria{
        {"G_{r,t} box K_n packing number and gap", {T::PropGap}},
        {"open packing number of K_m box K_n", {T::Eq7Complete}},
        {"upper bound and its sharpness on P2 box K_{m,n}", {T::Prop2Upper}},
        {"cartesian open packing lower bound and witnesses", {T::Thm4Lower}},
        {"G box K_r sandwich, equality and r0 plateau", {T::GkrSandwich, T::GkrEquality, T::CorR0}},
        {"lexicographic exact formulas", {T::LexRho, T::LexRhoO}},
        {"strong product bounds", {T::StrongBounds, T::StrongDiam2, T::StrongOpenBounds}},
        {"direct product lower bounds and K2 tightness", {T::DirectRhoLower, T::DirectK2Tight, T::DirectRhoOLower}},
        {"rooted product formulas, classes and examples", {T::RootedRho, T::RootedRhoO}},
        {"tree oracles", {T::TreeMeirMoon, T::TreeRall}},
    };

    bool all = true;
    const auto report = [&](std::size_t index, const std::string& name, const Verdict& o, double seconds) {
        std::printf("[%s] criterion %zu: %s (%s, %.2fs)\n", o.ok ? "PASS" : "FAIL", index, name.c_str(),
                    o.detail.c_str(), seconds);
        for (const auto& f : o.failures)
            std::printf("    %s\n", f.c_str());
        all = all && o.ok;
    };

    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        const Verdict o = from_suite(criteria[i].second, seed, threads);
        report(i + 1, criteria[i].first, o,
               std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
    }
    const auto start = std::chrono::steady_clock::now();
    report(11, "solver self-consistency against brute force", solver_self_consistency(seed),
           std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());

    std::fflush(stdout);
    return all ? 0 : 1;
}
