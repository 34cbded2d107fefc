#include "packprod/report_json.hpp"

namespace packprod {

nlohmann::json rational_json(const Rational& value)
{
    if (boost::multiprecision::denominator(value) == 1) {
        const auto& n = boost::multiprecision::numerator(value);
        if (n >= std::numeric_limits<long long>::min() && n <= std::numeric_limits<long long>::max())
            return n.convert_to<long long>();
    }
    return to_string(value);
}

nlohmann::json set_json(const VertexSet& s)
{
    nlohmann::json out = nlohmann::json::array();
    for (Vertex v : s)
        out.push_back(v);
    return out;
}

nlohmann::json instance_json(const Instance& in)
{
    nlohmann::json out;
    out["id"] = in.id;
    out["label"] = in.label;
    out["g"] = describe(in.g);
    if (in.h)
        out["h"] = describe(*in.h);
    if (in.root)
        out["root"] = *in.root;
    if (in.r != 0)
        out["r"] = in.r;
    if (in.t != 0)
        out["t"] = in.t;
    if (in.n != 0)
        out["n"] = in.n;
    if (in.seed)
        out["seed"] = *in.seed;
    if (!in.tag.empty())
        out["tag"] = in.tag;
    return out;
}

nlohmann::json report_json(const CheckReport& r, bool elapsed)
{
    nlohmann::json out;
    out["theorem"] = std::string(theorem_name(r.theorem));
    out["instance"] = instance_json(r.instance);
    out["part"] = r.part;
    out["status"] = std::string(outcome_name(r.outcome));
    out["pass"] = r.pass();
    if (r.outcome != Outcome::Skip) {
        out["lhs"] = rational_json(r.lhs);
        out["relation"] = std::string(relation_symbol(r.relation));
        out["rhs"] = rational_json(r.rhs);
    }
    if (r.witness)
        out["witness"] = set_json(*r.witness);
    if (!r.notes.empty())
        out["notes"] = r.notes;
    if (elapsed)
        out["elapsed_ms"] = r.elapsed_ms;
    return out;
}

nlohmann::json suite_json(const SuiteResult& result, bool elapsed)
{
    nlohmann::json out;
    out["run"] = {{"seed", result.seed}, {"budget", result.budget}};
    nlohmann::json reports = nlohmann::json::array();
    for (const auto& r : result.reports)
        reports.push_back(report_json(r, elapsed));
    out["reports"] = std::move(reports);
    out["summary"] = {{"pass", result.summary.pass}, {"fail", result.summary.fail}, {"skip", result.summary.skip}};
    nlohmann::json exploratory = nlohmann::json::array();
    for (const auto& e : result.exploratory)
        exploratory.push_back({{"name", e.name}, {"statement", e.statement}, {"agree", e.agree}, {"total", e.total}});
    out["exploratory"] = std::move(exploratory);
    return out;
}

} // namespace packprod
