#include "udg/graph.hpp"

#include "udg/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <sstream>

namespace udg {

using ordered_json = nlohmann::ordered_json;

std::string to_dimacs(const UdGraph& g) {
    std::ostringstream out;
    out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& e : g.edges()) out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
    return out.str();
}

namespace {

[[noreturn]] void parse_fail(std::size_t line, const std::string& what) {
    fail(Errc::ParseError, "line " + std::to_string(line) + ": " + what);
}

std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
        if (j > i)
            out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

std::size_t to_count(std::string_view token, std::size_t line) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size())
        parse_fail(line, "expected a nonnegative integer, got '" + std::string(token) + "'");
    return value;
}

} // namespace

UdGraph from_dimacs(std::string_view text) {
    std::size_t line_no = 0;
    std::optional<std::size_t> n;
    std::size_t declared_m = 0;
    std::vector<Edge> edges;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        auto line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        auto tok = split_ws(line);
        if (tok.empty() || tok[0] == "c")
            continue;
        if (tok[0] == "p") {
            if (n)
                parse_fail(line_no, "duplicate problem line");
            if (tok.size() != 4 || (tok[1] != "edge" && tok[1] != "col"))
                parse_fail(line_no, "expected 'p edge <n> <m>'");
            n = to_count(tok[2], line_no);
            declared_m = to_count(tok[3], line_no);
        } else if (tok[0] == "e") {
            if (!n)
                parse_fail(line_no, "edge before problem line");
            if (tok.size() != 3)
                parse_fail(line_no, "expected 'e <u> <v>'");
            auto u = to_count(tok[1], line_no);
            auto v = to_count(tok[2], line_no);
            if (u == 0 || v == 0 || u > *n || v > *n)
                parse_fail(line_no, "vertex id out of range 1.." + std::to_string(*n));
            if (u == v)
                parse_fail(line_no, "self-loop");
            edges.push_back({u - 1, v - 1});
        } else {
            parse_fail(line_no, "unknown line type '" + std::string(tok[0]) + "'");
        }
    }
    if (!n)
        parse_fail(line_no, "missing problem line");
    if (edges.size() != declared_m)
        parse_fail(line_no, "declared " + std::to_string(declared_m) + " edges, found " +
                                std::to_string(edges.size()));
    return UdGraph::from_edges(*n, edges);
}

std::string to_json(const UdGraph& g) {
    ordered_json j;
    j["n"] = g.vertex_count();
    if (g.is_geometric()) {
        auto pts = ordered_json::array();
        for (const auto& p : *g.points())
            pts.push_back(ordered_json::array({p.x.to_string(), p.y.to_string()}));
        j["points"] = std::move(pts);
    }
    auto edges = ordered_json::array();
    for (const auto& e : g.edges()) edges.push_back(ordered_json::array({e.u, e.v}));
    j["edges"] = std::move(edges);
    return j.dump(2) + "\n";
}

UdGraph from_json(std::string_view text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        fail(Errc::ParseError, e.what());
    }
    try {
        if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
            fail(Errc::ParseError, "graph JSON needs 'n' and 'edges'");
        auto n = j.at("n").get<std::size_t>();
        std::vector<Edge> edges;
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2)
                fail(Errc::ParseError, "edge entries must be [u, v]");
            auto u = e[0].get<std::size_t>();
            auto v = e[1].get<std::size_t>();
            edges.push_back({std::min(u, v), std::max(u, v)});
        }
        if (!j.contains("points"))
            return UdGraph::from_edges(n, edges);

        std::vector<EPoint> points;
        for (const auto& p : j.at("points")) {
            if (!p.is_array() || p.size() != 2)
                fail(Errc::ParseError, "point entries must be [\"x\", \"y\"]");
            points.push_back({QNum::parse(p[0].get<std::string>()),
                              QNum::parse(p[1].get<std::string>())});
        }
        if (points.size() != n)
            fail(Errc::ParseError, "'n' is " + std::to_string(n) + " but " +
                                       std::to_string(points.size()) + " points given");
        auto g = UdGraph::from_points(std::move(points));
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
        if (edges != g.edges())
            fail(Errc::GeometryMismatch, "listed edges differ from the exact unit-distance pairs");
        return g;
    } catch (const nlohmann::json::exception& e) {
        fail(Errc::ParseError, e.what());
    }
}

} // namespace udg
