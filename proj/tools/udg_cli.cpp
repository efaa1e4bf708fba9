// udg: command-line front end.  Talks to the library only through udg.h.

#include "udg/udg.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kUsageError = 1;
constexpr int kComputationError = 2;

struct CliFailure {
    int exit_code;
    std::string code;
    std::string message;
};

[[noreturn]] void usage_error(const std::string& code, const std::string& message) {
    throw CliFailure{kUsageError, code, message};
}

// Statuses caused by what the user typed rather than by a computation.
bool is_usage_status(udg_status s) {
    return s == UDG_E_UNKNOWN_GRAPH || s == UDG_E_UNKNOWN_CLAIM;
}

void check(udg_status s, bool argument_input = false) {
    if (s == UDG_OK)
        return;
    int exit_code = (argument_input || is_usage_status(s)) ? kUsageError : kComputationError;
    throw CliFailure{exit_code, udg_status_name(s), udg_last_error()};
}

struct GraphDeleter {
    void operator()(udg_graph* g) const { udg_graph_free(g); }
};
using GraphPtr = std::unique_ptr<udg_graph, GraphDeleter>;

struct StringDeleter {
    void operator()(char* s) const { udg_string_free(s); }
};

std::string take(char* s) {
    std::unique_ptr<char, StringDeleter> owned(s);
    return std::string(owned.get());
}

bool is_catalog_name(const std::string& name) {
    for (size_t i = 0; i < udg_catalog_size(); ++i) {
        const char* entry = nullptr;
        check(udg_catalog_entry(i, &entry, nullptr));
        if (name == entry)
            return true;
    }
    return false;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        usage_error("UnknownGraph", "'" + path + "' is neither a catalog graph nor a readable file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

udg_graph_format sniff_format(const std::string& text) {
    for (char c : text) {
        if (c == ' ' || c == '\n' || c == '\r' || c == '\t')
            continue;
        return c == '{' ? UDG_FORMAT_JSON : UDG_FORMAT_DIMACS;
    }
    return UDG_FORMAT_DIMACS;
}

// Catalog names win over file paths.
GraphPtr load_graph(const std::string& ref) {
    udg_graph* g = nullptr;
    if (is_catalog_name(ref)) {
        check(udg_catalog_get(ref.c_str(), &g));
        return GraphPtr(g);
    }
    auto text = read_file(ref);
    check(udg_graph_parse(text.c_str(), sniff_format(text), &g));
    return GraphPtr(g);
}

std::string join(const std::vector<uint32_t>& v) {
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i)
            out += ' ';
        out += std::to_string(v[i]);
    }
    return out;
}

struct Globals {
    uint64_t seed = 0;
    unsigned threads = 1;
    bool json = false;
};

int cmd_catalog_list(const Globals& g) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (size_t i = 0; i < udg_catalog_size(); ++i) {
        const char* name = nullptr;
        const char* description = nullptr;
        check(udg_catalog_entry(i, &name, &description));
        udg_graph* graph = nullptr;
        check(udg_catalog_get(name, &graph));
        GraphPtr owned(graph);
        auto n = udg_graph_vertex_count(graph);
        auto m = udg_graph_edge_count(graph);
        if (g.json)
            arr.push_back({{"name", name}, {"vertices", n}, {"edges", m}, {"description", description}});
        else
            std::printf("%-12s %4zu vertices %4zu edges  %s\n", name, n, m, description);
    }
    if (g.json)
        std::cout << arr.dump(2) << "\n";
    return 0;
}

int cmd_catalog_show(const std::string& name) {
    if (!is_catalog_name(name))
        usage_error("UnknownGraph", "no catalog graph named '" + name + "'");
    auto graph = load_graph(name);
    char* out = nullptr;
    check(udg_graph_serialize(graph.get(), UDG_FORMAT_JSON, &out));
    std::cout << take(out);
    return 0;
}

int cmd_chromatic(const Globals& g, const std::string& ref, uint64_t node_limit) {
    auto graph = load_graph(ref);
    auto n = udg_graph_vertex_count(graph.get());
    udg_solve_options options{node_limit, g.threads};
    size_t k = 0;
    uint64_t below_nodes = 0;
    std::vector<uint32_t> colors(n);
    check(udg_chromatic_number(graph.get(), &options, &k, colors.data(), &below_nodes));
    int proper = 0;
    check(udg_verify_coloring(graph.get(), colors.data(), colors.size(), &proper));
    if (g.json) {
        nlohmann::ordered_json j;
        j["graph"] = ref;
        j["vertices"] = n;
        j["edges"] = udg_graph_edge_count(graph.get());
        j["chromatic_number"] = k;
        j["witness"] = colors;
        j["witness_verified"] = proper == 1;
        if (k > 1) {
            j["infeasible_k"] = k - 1;
            j["infeasible_nodes"] = below_nodes;
        }
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "graph " << ref << " (" << n << " vertices, " << udg_graph_edge_count(graph.get())
              << " edges)\n";
    std::cout << "chromatic_number " << k << "\n";
    std::cout << "witness " << join(colors) << "\n";
    std::cout << "witness_verified " << (proper ? "yes" : "no") << "\n";
    if (k > 1)
        std::cout << "infeasible k=" << k - 1 << " nodes=" << below_nodes << "\n";
    return 0;
}

int cmd_degeneracy(const Globals& g, const std::string& ref) {
    auto graph = load_graph(ref);
    auto n = udg_graph_vertex_count(graph.get());
    size_t degeneracy = 0, min_degree = 0;
    std::vector<size_t> order(n);
    check(udg_degeneracy(graph.get(), &degeneracy, &min_degree, order.data()));
    size_t used = 0;
    check(udg_greedy_coloring(graph.get(), &used, nullptr));
    if (g.json) {
        nlohmann::ordered_json j;
        j["graph"] = ref;
        j["min_degree"] = min_degree;
        j["degeneracy"] = degeneracy;
        j["elimination_order"] = order;
        j["greedy_colors"] = used;
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "min_degree " << min_degree << "\n";
    std::cout << "degeneracy " << degeneracy << "\n";
    std::cout << "elimination_order";
    for (auto v : order) std::cout << ' ' << v;
    std::cout << "\ngreedy_colors " << used << "\n";
    return 0;
}

int cmd_product(const Globals& g, const std::string& ref, const std::string& t,
                const std::string& t2) {
    auto graph = load_graph(ref);
    auto step = [](const udg_graph* in, const std::string& param) {
        udg_graph* out = nullptr;
        auto s = udg_minkowski_pyth(in, param.c_str(), &out);
        check(s, s == UDG_E_PARSE || s == UDG_E_INVALID_ARGUMENT);
        return GraphPtr(out);
    };
    GraphPtr result = step(graph.get(), t);
    if (!t2.empty())
        result = step(result.get(), t2);
    if (g.json) {
        char* out = nullptr;
        check(udg_graph_serialize(result.get(), UDG_FORMAT_JSON, &out));
        std::cout << take(out);
        return 0;
    }
    size_t degeneracy = 0, min_degree = 0, clique = 0;
    check(udg_degeneracy(result.get(), &degeneracy, &min_degree, nullptr));
    check(udg_max_clique(result.get(), &clique));
    std::cout << "vertices " << udg_graph_vertex_count(result.get()) << "\n";
    std::cout << "edges " << udg_graph_edge_count(result.get()) << "\n";
    std::cout << "min_degree " << min_degree << "\n";
    std::cout << "degeneracy " << degeneracy << "\n";
    std::cout << "max_clique " << clique << "\n";
    return 0;
}

int cmd_claims(const Globals& g, const std::string& id, uint64_t samples) {
    char* out = nullptr;
    check(udg_claims_run(id.empty() ? nullptr : id.c_str(), g.seed, samples, g.json ? 1 : 0, &out));
    std::cout << take(out);
    return 0;
}

double parse_double(const std::string& s) {
    try {
        size_t used = 0;
        double v = std::stod(s, &used);
        if (used != s.size())
            throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        usage_error("ParseError", "not a number: '" + s + "'");
    }
}

int cmd_hexcolor(const Globals& g, const std::string& xs, const std::string& ys) {
    double x = parse_double(xs), y = parse_double(ys);
    int color = 0;
    auto s = udg_hex7_color(x, y, &color);
    check(s, s == UDG_E_NON_FINITE_INPUT);
    if (g.json)
        std::cout << nlohmann::ordered_json{{"x", x}, {"y", y}, {"color", color}}.dump() << "\n";
    else
        std::cout << color << "\n";
    return 0;
}

int cmd_hexverify(const Globals& g, uint64_t samples) {
    char* out = nullptr;
    check(udg_hex7_verify(samples, g.seed, g.threads, &out));
    std::cout << take(out);
    return 0;
}

int cmd_ratcolor(const Globals& g, const std::string& x, const std::string& y) {
    int color = 0;
    auto s = udg_rational2_color(x.c_str(), y.c_str(), &color);
    check(s, s == UDG_E_PARSE || s == UDG_E_INVALID_ARGUMENT);
    if (g.json)
        std::cout << nlohmann::ordered_json{{"x", x}, {"y", y}, {"color", color}}.dump() << "\n";
    else
        std::cout << color << "\n";
    return 0;
}

int cmd_export(const std::string& ref, const std::string& format, size_t k) {
    auto graph = load_graph(ref);
    char* out = nullptr;
    if (format == "dimacs")
        check(udg_graph_serialize(graph.get(), UDG_FORMAT_DIMACS, &out));
    else if (format == "json")
        check(udg_graph_serialize(graph.get(), UDG_FORMAT_JSON, &out));
    else {
        if (k == 0)
            usage_error("InvalidArgument", "--format cnf needs --k >= 1");
        check(udg_graph_to_cnf(graph.get(), k, &out));
    }
    std::cout << take(out);
    return 0;
}

int cmd_import(const Globals& g, const std::string& path, const std::string& format) {
    auto text = read_file(path);
    udg_graph_format f = format == "json"     ? UDG_FORMAT_JSON
                         : format == "dimacs" ? UDG_FORMAT_DIMACS
                                              : sniff_format(text);
    udg_graph* raw = nullptr;
    check(udg_graph_parse(text.c_str(), f, &raw));
    GraphPtr graph(raw);
    if (g.json) {
        char* out = nullptr;
        check(udg_graph_serialize(graph.get(), UDG_FORMAT_JSON, &out));
        std::cout << take(out);
        return 0;
    }
    std::cout << "vertices " << udg_graph_vertex_count(graph.get()) << "\n";
    std::cout << "edges " << udg_graph_edge_count(graph.get()) << "\n";
    std::cout << "geometric " << (udg_graph_is_geometric(graph.get()) ? "yes" : "no") << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"udg: exact unit-distance graph workbench"};
    app.require_subcommand(1);
    // global flags may follow the subcommand
    app.fallthrough();
    app.set_version_flag("--version", std::string(udg_version()));

    Globals globals;
    app.add_option("--seed", globals.seed, "Seed for every random stream")->capture_default_str();
    app.add_option("--threads", globals.threads, "Solver / sampler worker threads")
        ->check(CLI::Range(1U, 1024U))
        ->capture_default_str();
    app.add_flag("--json", globals.json, "JSON output");

    auto* catalog = app.add_subcommand("catalog", "Named graphs");
    catalog->require_subcommand(1);
    auto* catalog_list = catalog->add_subcommand("list", "Names with vertex and edge counts");
    std::string show_name;
    auto* catalog_show = catalog->add_subcommand("show", "Print a catalog graph as JSON");
    catalog_show->add_option("name", show_name)->required();

    std::string graph_ref;
    uint64_t node_limit = 0;
    auto* chromatic = app.add_subcommand("chromatic", "Exact chromatic number with witness");
    chromatic->add_option("graph", graph_ref, "Catalog name or graph file")->required();
    chromatic->add_option("--node-limit", node_limit, "Search node budget (0 = none)");

    auto* degen = app.add_subcommand("degeneracy", "Degeneracy, min degree, elimination order");
    degen->add_option("graph", graph_ref, "Catalog name or graph file")->required();

    std::string t1, t2;
    auto* product = app.add_subcommand("product", "Minkowski sum with Pythagorean unit vectors");
    product->add_option("graph", graph_ref, "Catalog name or graph file")->required();
    product->add_option("--t", t1, "Parameter of the first direction, p/q")->required();
    product->add_option("--t2", t2, "Parameter of an optional second direction");

    std::string claim_id;
    uint64_t claim_samples = 0;
    auto* claims = app.add_subcommand("claims", "Claim verdict report");
    claims->require_subcommand(1);
    auto* claims_run = claims->add_subcommand("run", "Evaluate claims");
    claims_run->add_option("--id", claim_id, "Single claim id (C1..C6)");
    claims_run->add_option("--samples", claim_samples, "Hexagon sampling size (default 1000000)");
    claims_run->add_flag("--json", globals.json, "JSON output");

    std::string hx, hy;
    uint64_t hex_samples = 1000000;
    auto* hexcolor = app.add_subcommand("hexcolor", "Hexagonal 7-coloring of the plane");
    hexcolor->add_option("x", hx);
    hexcolor->add_option("y", hy);
    auto* hexverify = hexcolor->add_subcommand("verify", "Sample unit pairs and report");
    hexverify->add_option("--samples", hex_samples)->capture_default_str();
    hexverify->add_option("--seed", globals.seed);

    std::string rx, ry;
    auto* ratcolor = app.add_subcommand("ratcolor", "2-coloring of the rational plane");
    ratcolor->add_option("x", rx, "p/q")->required();
    ratcolor->add_option("y", ry, "p/q")->required();

    std::string format = "dimacs";
    size_t k = 0;
    auto* exporter = app.add_subcommand("export", "Write a graph as DIMACS, JSON or CNF");
    exporter->add_option("graph", graph_ref, "Catalog name or graph file")->required();
    exporter->add_option("--format", format)
        ->check(CLI::IsMember({"dimacs", "json", "cnf"}))
        ->capture_default_str();
    exporter->add_option("--k", k, "Color count for --format cnf");

    std::string import_path, import_format = "auto";
    auto* importer = app.add_subcommand("import", "Read a DIMACS or JSON graph file");
    importer->add_option("file", import_path)->required();
    importer->add_option("--format", import_format)
        ->check(CLI::IsMember({"auto", "dimacs", "json"}))
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kUsageError;
    }

    try {
        if (*catalog_list) return cmd_catalog_list(globals);
        if (*catalog_show) return cmd_catalog_show(show_name);
        if (*chromatic) return cmd_chromatic(globals, graph_ref, node_limit);
        if (*degen) return cmd_degeneracy(globals, graph_ref);
        if (*product) return cmd_product(globals, graph_ref, t1, t2);
        if (*claims_run) return cmd_claims(globals, claim_id, claim_samples);
        if (*hexverify) return cmd_hexverify(globals, hex_samples);
        if (*hexcolor) {
            if (hx.empty() || hy.empty())
                usage_error("Usage", "hexcolor needs <x> <y> or 'verify'");
            return cmd_hexcolor(globals, hx, hy);
        }
        if (*ratcolor) return cmd_ratcolor(globals, rx, ry);
        if (*exporter) return cmd_export(graph_ref, format, k);
        if (*importer) return cmd_import(globals, import_path, import_format);
    } catch (const CliFailure& f) {
        std::cerr << "error[" << f.code << "]: " << f.message << "\n";
        return f.exit_code;
    }
    return kUsageError;
}
