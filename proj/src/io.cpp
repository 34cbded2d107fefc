#include "packprod/io.hpp"

#include "packprod/error.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace packprod {

namespace {

[[noreturn]] void parse_error(std::size_t line, const std::string& what)
{
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + what);
}

/// Next line with comments stripped that still holds tokens; false at EOF.
bool next_data_line(std::istream& in, std::string& line, std::size_t& line_no)
{
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        if (line.find_first_not_of(" \t\r") != std::string::npos)
            return true;
    }
    return false;
}

long long read_count(std::istringstream& fields, std::size_t line_no, const char* what)
{
    long long value = 0;
    if (!(fields >> value))
        parse_error(line_no, std::string("expected ") + what);
    if (value < 0)
        parse_error(line_no, std::string(what) + " must be non-negative");
    return value;
}

} // namespace

Graph read_edge_list(std::istream& in)
{
    std::string line;
    std::size_t line_no = 0;
    if (!next_data_line(in, line, line_no))
        parse_error(line_no, "missing header \"n m\"");
    std::istringstream header(line);
    const auto n = read_count(header, line_no, "vertex count");
    const auto m = read_count(header, line_no, "edge count");
    std::string extra;
    if (header >> extra)
        parse_error(line_no, "unexpected token '" + extra + "' in header");

    GraphBuilder builder(static_cast<std::size_t>(n));
    for (long long k = 0; k < m; ++k) {
        if (!next_data_line(in, line, line_no))
            parse_error(line_no, "expected " + std::to_string(m) + " edges, found " + std::to_string(k));
        std::istringstream fields(line);
        const auto u = read_count(fields, line_no, "edge endpoint");
        const auto v = read_count(fields, line_no, "edge endpoint");
        if (fields >> extra)
            parse_error(line_no, "unexpected token '" + extra + "'");
        if (u >= n || v >= n)
            throw Error(ErrorCode::InvalidVertex, "line " + std::to_string(line_no) + ": endpoint out of range");
        builder.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    if (next_data_line(in, line, line_no))
        parse_error(line_no, "trailing data after the declared edges");
    return std::move(builder).build();
}

Graph parse_edge_list(std::string_view text)
{
    std::istringstream in{std::string(text)};
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g, const std::vector<std::string>& header)
{
    for (const auto& line : header)
        out << "# " << line << '\n';
    out << g.order() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges())
        out << u << ' ' << v << '\n';
}

Graph parse_graph6(std::string_view text)
{
    constexpr std::string_view prefix = ">>graph6<<";
    if (text.substr(0, prefix.size()) == prefix)
        text.remove_prefix(prefix.size());
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' '))
        text.remove_suffix(1);
    if (text.empty())
        throw Error(ErrorCode::ParseError, "empty graph6 string");
    for (char c : text)
        if (c < 63 || c > 126)
            throw Error(ErrorCode::ParseError, "graph6 character out of range");
    const std::size_t n = static_cast<std::size_t>(text[0] - 63);
    if (n > 62)
        throw Error(ErrorCode::ParseError, "graph6 strings above 62 vertices are not supported");
    const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::size_t expected = (bits + 5) / 6;
    if (text.size() - 1 != expected)
        throw Error(ErrorCode::ParseError, "graph6 length mismatch for " + std::to_string(n) + " vertices");

    GraphBuilder builder(n);
    std::size_t k = 0;
    // bits list the upper triangle column by column: (0,1), (0,2), (1,2), (0,3), ...
    for (std::size_t v = 1; v < n; ++v) {
        for (std::size_t u = 0; u < v; ++u, ++k) {
            const int chunk = text[1 + k / 6] - 63;
            if ((chunk >> (5 - k % 6)) & 1)
                builder.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
        }
    }
    return std::move(builder).build();
}

std::string write_graph6(const Graph& g)
{
    const std::size_t n = g.order();
    if (n > 62)
        throw Error(ErrorCode::BadParameters, "graph6 output is limited to 62 vertices");
    std::string out(1, static_cast<char>(63 + n));
    int chunk = 0;
    std::size_t k = 0;
    for (Vertex v = 1; v < n; ++v)
        for (Vertex u = 0; u < v; ++u, ++k) {
            chunk = (chunk << 1) | (g.adjacent(u, v) ? 1 : 0);
            if (k % 6 == 5) {
                out.push_back(static_cast<char>(63 + chunk));
                chunk = 0;
            }
        }
    if (k % 6 != 0)
        out.push_back(static_cast<char>(63 + (chunk << (6 - k % 6))));
    return out;
}

Graph read_graph_file(const std::string& path, GraphFormat format)
{
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
    if (format == GraphFormat::EdgeList)
        return read_edge_list(in);
    std::string line;
    while (std::getline(in, line))
        if (line.find_first_not_of(" \t\r") != std::string::npos)
            return parse_graph6(line);
    throw Error(ErrorCode::ParseError, "'" + path + "' holds no graph6 line");
}

} // namespace packprod
