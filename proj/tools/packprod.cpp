#include "packprod/constructions.hpp"
#include "packprod/error.hpp"
#include "packprod/families.hpp"
#include "packprod/io.hpp"
#include "packprod/products.hpp"
#include "packprod/report_json.hpp"
#include "packprod/solvers.hpp"
#include "packprod/verifier.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

using namespace packprod;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

std::string_view remedy(ErrorCode code)
{
    switch (code) {
    case ErrorCode::InvalidVertex: return "vertex indices must be below the graph order";
    case ErrorCode::LoopRejected: return "remove self-loops from the input";
    case ErrorCode::EmptyGraph: return "provide a graph with at least one vertex";
    case ErrorCode::BadParameters: return "see --help for the accepted parameter ranges";
    case ErrorCode::EmptyFactor: return "both factors need at least one vertex";
    case ErrorCode::UnsupportedKind: return "rooted products need --kind rooted with --root";
    case ErrorCode::NodeBudgetExceeded: return "raise --budget or PACKPROD_BUDGET";
    case ErrorCode::IsolatedVertex: return "gamma_t needs a graph without isolated vertices";
    case ErrorCode::EnumerationLimitExceeded: return "raise --limit";
    case ErrorCode::DisconnectedFactor: return "this construction needs connected factors";
    case ErrorCode::NotTwoIndependent: return "pass a set whose induced subgraph has maximum degree at most 1";
    case ErrorCode::TriangleFound: return "this construction needs a triangle-free graph";
    case ErrorCode::ChromaticExceedsR: return "raise --r to at least chi(G/S)";
    case ErrorCode::ParseError: return "check the input and --format";
    }
    return "see --help";
}

/// A graph given either as a family spec or as a file.
struct GraphArg {
    std::string spec;
    std::string file;

    bool given() const { return !spec.empty() || !file.empty(); }

    Graph load(GraphFormat format, std::uint64_t seed, const char* what) const
    {
        if (!spec.empty() && !file.empty())
            throw Error(ErrorCode::BadParameters, std::string("give either a spec or a file for ") + what);
        if (!file.empty())
            return read_graph_file(file, format);
        if (!spec.empty())
            return family(spec, seed);
        throw Error(ErrorCode::BadParameters, std::string("missing graph ") + what);
    }
};

void add_graph_options(CLI::App* app, GraphArg& arg, const std::string& name, const std::string& what)
{
    app->add_option("--" + name, arg.spec, what + " as a family spec such as P7, K3,3 or C5+E2");
    app->add_option("--" + name + "-file", arg.file, what + " as a file in --format");
}

struct Common {
    std::string format = "edgelist";
    std::uint64_t seed = 0;
    std::optional<std::uint64_t> budget;
    std::size_t limit = 1'000'000;
    std::string output;

    GraphFormat graph_format() const
    {
        if (format == "edgelist")
            return GraphFormat::EdgeList;
        if (format == "graph6")
            return GraphFormat::Graph6;
        throw Error(ErrorCode::ParseError, "unknown format '" + format + "'");
    }

    SearchLimits limits() const
    {
        SearchLimits out;
        out.enumeration_limit = limit;
        if (budget) {
            out.node_budget = *budget;
        } else if (const char* env = std::getenv("PACKPROD_BUDGET"); env != nullptr && *env != '\0') {
            try {
                std::size_t used = 0;
                out.node_budget = std::stoull(env, &used);
                if (used != std::string_view(env).size())
                    throw std::invalid_argument(env);
            } catch (const std::logic_error&) {
                throw Error(ErrorCode::BadParameters, "PACKPROD_BUDGET must be a positive integer");
            }
        }
        if (out.node_budget == 0)
            throw Error(ErrorCode::BadParameters, "the node budget must be positive");
        if (out.enumeration_limit == 0)
            throw Error(ErrorCode::BadParameters, "the enumeration limit must be positive");
        return out;
    }

    void emit(const std::string& text) const
    {
        if (output.empty()) {
            std::cout << text;
            return;
        }
        std::ofstream out(output);
        if (!out)
            throw Error(ErrorCode::ParseError, "cannot write '" + output + "'");
        out << text;
    }
};

void add_common(CLI::App* app, Common& c, bool graph_io)
{
    if (graph_io)
        app->add_option("--format", c.format, "input format")->check(CLI::IsMember({"edgelist", "graph6"}));
    app->add_option("--seed", c.seed, "seed for random families (default 0)");
    app->add_option("--budget", c.budget, "search node budget (default 1e8, or PACKPROD_BUDGET)");
    app->add_option("--limit", c.limit, "enumeration limit (default 1e6)");
}

json edges_json(const Graph& g)
{
    json out = json::array();
    for (const auto& [u, v] : g.edges())
        out.push_back({u, v});
    return out;
}

// compute

struct ComputeArgs {
    Common common;
    std::string invariant;
    GraphArg graph;
};

int run_compute(const ComputeArgs& a)
{
    const Graph g = a.graph.load(a.common.graph_format(), a.common.seed, "--input/--graph");
    const SearchLimits limits = a.common.limits();
    const Invariant inv = parse_invariant(a.invariant);
    json out;
    out["invariant"] = std::string(invariant_name(inv));
    out["order"] = g.order();
    switch (inv) {
    case Invariant::GammaFractional: {
        const FractionalSolution s = fractional_domination(g);
        out["value"] = to_string(s.value);
        json weights = json::array();
        for (const auto& w : s.weights)
            weights.push_back(to_string(w));
        out["weights"] = std::move(weights);
        break;
    }
    case Invariant::Chromatic: {
        const auto coloring = optimal_coloring(g, limits);
        out["value"] = color_count(coloring);
        out["coloring"] = coloring;
        break;
    }
    default: {
        InvariantResult r;
        switch (inv) {
        case Invariant::Rho: r = rho(g, limits); break;
        case Invariant::RhoOpen: r = rho_o(g, limits); break;
        case Invariant::Alpha2: r = alpha2(g, limits); break;
        case Invariant::Gamma: r = gamma(g, limits); break;
        case Invariant::GammaTotal: r = gamma_t(g, limits); break;
        default: break;
        }
        out["value"] = r.value;
        out["witness"] = set_json(r.witness);
        out["nodes"] = r.nodes_explored;
    }
    }
    a.common.emit(out.dump(2) + "\n");
    return kOk;
}

// product

struct ProductArgs {
    Common common;
    std::string kind;
    GraphArg g, h;
    std::optional<Vertex> root;
};

int run_product(const ProductArgs& a)
{
    const GraphFormat fmt = a.common.graph_format();
    const Graph g = a.g.load(fmt, a.common.seed, "--g");
    const Graph h = a.h.load(fmt, derive_seed(a.common.seed, 1), "--h");
    const ProductKind kind = parse_product_kind(a.kind);
    ProductGraph p;
    if (kind == ProductKind::Rooted) {
        if (!a.root)
            throw Error(ErrorCode::BadParameters, "--kind rooted needs --root");
        p = rooted_product({g, h, *a.root});
    } else {
        p = product(g, h, kind);
    }
    std::vector<std::string> header{
        "kind " + std::string(product_kind_name(kind)),
        "G " + describe(g) + " order " + std::to_string(g.order()),
        "H " + describe(h) + " order " + std::to_string(h.order()),
        "codec index = g * " + std::to_string(h.order()) + " + h",
    };
    if (p.root)
        header.push_back("root " + std::to_string(*p.root));
    std::ostringstream text;
    write_edge_list(text, p.graph, header);
    a.common.emit(text.str());
    return kOk;
}

// construct

struct ConstructArgs {
    Common common;
    std::string builder;
    GraphArg g, h;
    std::size_t r = 0, t = 0, n = 0;
    std::optional<Vertex> root;
    std::vector<Vertex> set;
    std::string product_out;
};

std::size_t lex_open_size(const Graph& g, const Graph& h, const SearchLimits& limits)
{
    const std::size_t ig = isolated_vertices(g).size();
    const bool h_isolated = !isolated_vertices(h).empty();
    const std::size_t head = h_isolated ? rho_o(g, limits).value : rho(g, limits).value;
    return head + ig * rho_o(h, limits).value - ig;
}

int run_construct(const ConstructArgs& a)
{
    const GraphFormat fmt = a.common.graph_format();
    const SearchLimits limits = a.common.limits();
    const std::string& b = a.builder;
    Graph host;
    VertexSet witness;
    std::size_t declared = 0;
    ConflictKind kind = ConflictKind::Open;
    std::string product_name;

    auto load_g = [&] { return a.g.load(fmt, a.common.seed, "--g"); };
    auto load_h = [&] { return a.h.load(fmt, derive_seed(a.common.seed, 1), "--h"); };
    auto size_of = [](std::size_t ig, std::size_t ih, std::size_t gn, std::size_t hn) {
        return ig * hn + ih * gn - ig * ih;
    };

    if (b == "prop_gap") {
        const Graph base = a.g.given() ? load_g() : complete_graph(a.r);
        witness = prop_gap_witness(a.r, a.t, a.n, base);
        host = product(pendant_expansion(base, a.t), complete_graph(a.n), ProductKind::Cartesian).graph;
        declared = a.r * a.t;
        kind = ConflictKind::Closed;
        product_name = "cartesian";
    } else if (b == "gkr_open") {
        const Graph g = load_g();
        const VertexSet s = a.set.empty() ? alpha2(g, limits).witness : VertexSet::from_members(g.order(), a.set);
        witness = gkr_open_packing(g, a.r, s, limits);
        host = product(g, complete_graph(a.r), ProductKind::Cartesian).graph;
        declared = s.size();
        product_name = "cartesian";
    } else if (b == "rooted_packing" || b == "rooted_open") {
        const Graph g = load_g(), h = load_h();
        if (!a.root)
            throw Error(ErrorCode::BadParameters, "rooted builders need --root");
        kind = b == "rooted_packing" ? ConflictKind::Closed : ConflictKind::Open;
        witness = rooted_witness(g, h, *a.root, kind, limits);
        host = rooted_product({g, h, *a.root}).graph;
        declared = kind == ConflictKind::Closed ? rooted_rho(g, h, *a.root, limits) : rooted_rho_o(g, h, *a.root, limits);
        product_name = "rooted";
    } else {
        const Graph g = load_g(), h = load_h();
        const std::size_t ig = isolated_vertices(g).size(), ih = isolated_vertices(h).size();
        const Graph gm = remove_isolated(g).graph, hm = remove_isolated(h).graph;
        if (b == "cartesian_open") {
            witness = cartesian_open_packing_product(g, h, limits);
            declared = rho_o(g, limits).value * rho(h, limits).value;
            product_name = "cartesian";
        } else if (b == "diametral_open") {
            witness = diametral_open_packing(g, h, limits);
            declared = eta_values(h, g).eta * rho_o(g, limits).value + eta_values(g, h).flag;
            product_name = "cartesian";
        } else if (b == "lex_packing") {
            witness = lex_packing(g, h, limits);
            declared = rho(g, limits).value + ig * rho(h, limits).value - ig;
            kind = ConflictKind::Closed;
            product_name = "lexicographic";
        } else if (b == "lex_open") {
            witness = lex_open_packing(g, h, limits);
            declared = lex_open_size(g, h, limits);
            product_name = "lexicographic";
        } else if (b == "strong_packing") {
            witness = strong_packing(g, h, limits);
            declared = rho(g, limits).value * rho(h, limits).value;
            kind = ConflictKind::Closed;
            product_name = "strong";
        } else if (b == "strong_open") {
            witness = strong_open_packing(g, h, limits);
            declared = rho(gm, limits).value * rho(hm, limits).value + ig * rho_o(h, limits).value +
                       ih * rho_o(g, limits).value - ig * ih;
            product_name = "strong";
        } else if (b == "direct_packing") {
            witness = direct_packing(g, h, limits);
            declared = std::max(rho_o(gm, limits).value * rho(hm, limits).value,
                                rho_o(hm, limits).value * rho(gm, limits).value) +
                       size_of(ig, ih, g.order(), h.order());
            kind = ConflictKind::Closed;
            product_name = "direct";
        } else if (b == "direct_open") {
            witness = direct_open_packing(g, h, limits);
            declared = rho_o(gm, limits).value * rho_o(hm, limits).value + size_of(ig, ih, g.order(), h.order());
            product_name = "direct";
        } else {
            throw Error(ErrorCode::BadParameters, "unknown builder '" + b + "'");
        }
        host = product(g, h, parse_product_kind(product_name)).graph;
    }

    const bool valid = kind == ConflictKind::Closed ? is_packing(host, witness) : is_open_packing(host, witness);
    json out;
    out["builder"] = b;
    out["product"] = {{"kind", product_name}, {"order", host.order()}, {"edges", edges_json(host)}};
    out["predicate"] = kind == ConflictKind::Closed ? "packing" : "open_packing";
    out["witness"] = set_json(witness);
    out["size"] = witness.size();
    out["declared_size"] = declared;
    out["valid"] = valid;
    if (!a.product_out.empty()) {
        std::ofstream file(a.product_out);
        if (!file)
            throw Error(ErrorCode::ParseError, "cannot write '" + a.product_out + "'");
        write_edge_list(file, host, {"kind " + product_name, "builder " + b});
    }
    a.common.emit(out.dump(2) + "\n");
    return valid && witness.size() == declared ? kOk : kFailed;
}

// verify

struct VerifyArgs {
    Common common;
    std::string theorems = "all";
    std::string json_path;
    unsigned threads = std::max(1u, std::thread::hardware_concurrency());
    bool elapsed = false;
};

std::vector<TheoremId> parse_theorem_list(const std::string& text)
{
    if (text == "all")
        return all_theorems();
    std::vector<TheoremId> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ','))
        if (!item.empty())
            out.push_back(parse_theorem(item));
    if (out.empty())
        throw Error(ErrorCode::ParseError, "empty theorem list");
    return out;
}

int run_verify(VerifyArgs a)
{
    const auto theorems = parse_theorem_list(a.theorems);
    const SuiteResult result = run_suite(theorems, a.common.seed, a.common.limits(), a.threads);
    a.common.output = a.json_path;
    a.common.emit(suite_json(result, a.elapsed).dump(2) + "\n");
    std::cerr << "pass " << result.summary.pass << ", fail " << result.summary.fail << ", skip "
              << result.summary.skip << "\n";
    return result.summary.fail == 0 ? kOk : kFailed;
}

// enumerate

struct EnumerateArgs {
    Common common;
    std::string kind = "closed";
    GraphArg graph;
};

int run_enumerate(const EnumerateArgs& a)
{
    const Graph g = a.graph.load(a.common.graph_format(), a.common.seed, "--input/--graph");
    const ConflictKind kind = a.kind == "open" ? ConflictKind::Open : ConflictKind::Closed;
    const auto sets = enumerate_maximum(g, kind, a.common.limits());
    json out;
    out["kind"] = a.kind;
    out["value"] = sets.empty() ? 0 : sets.front().size();
    out["count"] = sets.size();
    json list = json::array();
    for (const auto& s : sets)
        list.push_back(set_json(s));
    out["sets"] = std::move(list);
    a.common.emit(out.dump(2) + "\n");
    return kOk;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Packing and open packing numbers of graphs and graph products"};
    app.require_subcommand(1);

    ComputeArgs compute;
    auto* c = app.add_subcommand("compute", "compute an invariant of one graph");
    c->add_option("--invariant", compute.invariant, "rho, rho_o, alpha2, gamma, gamma_t, gamma_f or chi")->required();
    c->add_option("--input", compute.graph.file, "graph file");
    c->add_option("--graph", compute.graph.spec, "family spec such as P7 or G6,0.5");
    c->add_option("--json", compute.common.output, "write the JSON result to this file instead of stdout");
    add_common(c, compute.common, true);

    ProductArgs prod;
    auto* p = app.add_subcommand("product", "build a product graph and print it as an edge list");
    p->set_help_flag("--help", "print this help message and exit"); // frees --h for the second factor
    p->add_option("--kind", prod.kind, "cartesian, strong, direct, lexicographic or rooted")->required();
    add_graph_options(p, prod.g, "g", "first factor");
    add_graph_options(p, prod.h, "h", "second factor");
    p->add_option("--root", prod.root, "root vertex of H for rooted products");
    p->add_option("--output", prod.common.output, "write the edge list here instead of stdout");
    add_common(p, prod.common, true);

    ConstructArgs cons;
    auto* k = app.add_subcommand("construct", "build a witness set and validate it");
    k->set_help_flag("--help", "print this help message and exit");
    k->add_option("--builder", cons.builder,
                  "cartesian_open, diametral_open, gkr_open, lex_packing, lex_open, strong_packing, strong_open, "
                  "direct_packing, direct_open, rooted_packing, rooted_open or prop_gap")
        ->required();
    add_graph_options(k, cons.g, "g", "first factor (base graph for prop_gap)");
    add_graph_options(k, cons.h, "h", "second factor");
    k->add_option("--r", cons.r, "r for gkr_open and prop_gap");
    k->add_option("--t", cons.t, "pendants per base vertex for prop_gap");
    k->add_option("--n", cons.n, "order of K_n for prop_gap");
    k->add_option("--root", cons.root, "root vertex of H for rooted builders");
    k->add_option("--set", cons.set, "2-independent set S for gkr_open (default: a maximum one)")->delimiter(',');
    k->add_option("--product-out", cons.product_out, "also write the product as an edge list");
    k->add_option("--json", cons.common.output, "write the JSON result to this file instead of stdout");
    add_common(k, cons.common, true);

    VerifyArgs ver;
    auto* v = app.add_subcommand("verify", "check the theorem catalog over its default grids");
    v->add_option("--theorems", ver.theorems, "comma-separated theorem ids, or all");
    v->add_option("--json", ver.json_path, "write the report here instead of stdout");
    v->add_option("--threads", ver.threads, "worker threads")->check(CLI::PositiveNumber);
    v->add_flag("--elapsed", ver.elapsed, "include per-report wall-clock times");
    add_common(v, ver.common, false);

    EnumerateArgs en;
    auto* e = app.add_subcommand("enumerate", "list every maximum packing or open packing");
    e->add_option("--kind", en.kind, "closed or open")->check(CLI::IsMember({"closed", "open"}));
    e->add_option("--input", en.graph.file, "graph file");
    e->add_option("--graph", en.graph.spec, "family spec");
    e->add_option("--json", en.common.output, "write the JSON result to this file instead of stdout");
    add_common(e, en.common, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& err) {
        return app.exit(err);
    } catch (const CLI::ParseError& err) {
        app.exit(err);
        return kUsage;
    }

    try {
        if (c->parsed())
            return run_compute(compute);
        if (p->parsed())
            return run_product(prod);
        if (k->parsed())
            return run_construct(cons);
        if (v->parsed())
            return run_verify(ver);
        if (e->parsed())
            return run_enumerate(en);
    } catch (const Error& err) {
        std::cerr << "packprod: " << err.what() << " (" << remedy(err.code()) << ")\n";
        return kUsage;
    }
    return kUsage;
}
