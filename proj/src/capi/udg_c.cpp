#include "udg/udg.h"

#include "udg/catalog.hpp"
#include "udg/claims.hpp"
#include "udg/error.hpp"
#include "udg/plane.hpp"
#include "udg/solver.hpp"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

struct udg_graph {
    udg::UdGraph graph;
};

namespace {

thread_local std::string last_error;

udg_status to_status(udg::Errc code) {
    using udg::Errc;
    switch (code) {
    case Errc::InvalidArgument: return UDG_E_INVALID_ARGUMENT;
    case Errc::ParseError: return UDG_E_PARSE;
    case Errc::NegativeRadicand: return UDG_E_NEGATIVE_RADICAND;
    case Errc::UnfactorableRadicand: return UDG_E_UNFACTORABLE_RADICAND;
    case Errc::CoincidentCenters: return UDG_E_COINCIDENT_CENTERS;
    case Errc::UnsupportedRadicand: return UDG_E_UNSUPPORTED_RADICAND;
    case Errc::DisjointCircles: return UDG_E_DISJOINT_CIRCLES;
    case Errc::DuplicatePoint: return UDG_E_DUPLICATE_POINT;
    case Errc::InvalidGraph: return UDG_E_INVALID_GRAPH;
    case Errc::GeometryMismatch: return UDG_E_GEOMETRY_MISMATCH;
    case Errc::NotGeometric: return UDG_E_NOT_GEOMETRIC;
    case Errc::VertexCollision: return UDG_E_VERTEX_COLLISION;
    case Errc::EmptyGraph: return UDG_E_EMPTY_GRAPH;
    case Errc::SizeMismatch: return UDG_E_SIZE_MISMATCH;
    case Errc::InvalidColoring: return UDG_E_INVALID_COLORING;
    case Errc::BudgetExceeded: return UDG_E_BUDGET_EXCEEDED;
    case Errc::NonFiniteInput: return UDG_E_NON_FINITE_INPUT;
    case Errc::UnknownGraph: return UDG_E_UNKNOWN_GRAPH;
    case Errc::UnknownClaim: return UDG_E_UNKNOWN_CLAIM;
    case Errc::IoError: return UDG_E_IO;
    case Errc::Internal: return UDG_E_INTERNAL;
    }
    return UDG_E_INTERNAL;
}

udg_status fail_with(udg_status status, const char* message) {
    last_error = message;
    return status;
}

template <class F>
udg_status guarded(F&& body) {
    try {
        last_error.clear();
        body();
        return UDG_OK;
    } catch (const udg::Error& e) {
        return fail_with(to_status(e.code()), e.what());
    } catch (const std::bad_alloc&) {
        return fail_with(UDG_E_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail_with(UDG_E_INTERNAL, e.what());
    }
}

char* dup_string(const std::string& s) {
    auto* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out)
        throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void require(bool condition, const char* what) {
    if (!condition)
        udg::fail(udg::Errc::InvalidArgument, what);
}

udg::SolveOptions solve_options(const udg_solve_options* options) {
    udg::SolveOptions out;
    if (options) {
        if (options->node_limit != 0)
            out.node_limit = options->node_limit;
        out.threads = options->threads == 0 ? 1 : options->threads;
    }
    return out;
}

void copy_colors(const udg::Coloring& c, uint32_t* out) {
    for (std::size_t v = 0; v < c.colors().size(); ++v) out[v] = c.colors()[v];
}

} // namespace

extern "C" {

const char* udg_version(void) {
    static const std::string version(udg::kVersion);
    return version.c_str();
}

const char* udg_status_name(udg_status status) {
    static const char* const names[] = {
        "Ok", "InvalidArgument", "ParseError", "NegativeRadicand", "UnfactorableRadicand",
        "CoincidentCenters", "UnsupportedRadicand", "DisjointCircles", "DuplicatePoint",
        "InvalidGraph", "GeometryMismatch", "NotGeometric", "VertexCollision", "EmptyGraph",
        "SizeMismatch", "InvalidColoring", "BudgetExceeded", "NonFiniteInput", "UnknownGraph",
        "UnknownClaim", "IoError", "Internal"};
    auto i = static_cast<std::size_t>(status);
    return i < sizeof(names) / sizeof(names[0]) ? names[i] : "Internal";
}

const char* udg_last_error(void) { return last_error.c_str(); }

void udg_string_free(char* s) { std::free(s); }

size_t udg_catalog_size(void) { return udg::catalog_entries().size(); }

udg_status udg_catalog_entry(size_t index, const char** name, const char** description) {
    return guarded([&] {
        require(name != nullptr, "name must not be null");
        const auto& entries = udg::catalog_entries();
        require(index < entries.size(), "catalog index out of range");
        *name = entries[index].name.c_str();
        if (description)
            *description = entries[index].description.c_str();
    });
}

udg_status udg_catalog_get(const char* name, udg_graph** out) {
    return guarded([&] {
        require(name && out, "null argument");
        *out = new udg_graph{udg::catalog_graph(name)};
    });
}

udg_status udg_graph_parse(const char* text, udg_graph_format format, udg_graph** out) {
    return guarded([&] {
        require(text && out, "null argument");
        switch (format) {
        case UDG_FORMAT_JSON: *out = new udg_graph{udg::from_json(text)}; return;
        case UDG_FORMAT_DIMACS: *out = new udg_graph{udg::from_dimacs(text)}; return;
        }
        udg::fail(udg::Errc::InvalidArgument, "unknown graph format");
    });
}

udg_status udg_graph_from_edges(size_t n, const size_t* pairs, size_t edge_count, udg_graph** out) {
    return guarded([&] {
        require(out && (pairs || edge_count == 0), "null argument");
        std::vector<udg::Edge> edges;
        for (std::size_t i = 0; i < edge_count; ++i) edges.push_back({pairs[2 * i], pairs[2 * i + 1]});
        *out = new udg_graph{udg::UdGraph::from_edges(n, edges)};
    });
}

udg_status udg_graph_clone(const udg_graph* g, udg_graph** out) {
    return guarded([&] {
        require(g && out, "null argument");
        *out = new udg_graph{g->graph};
    });
}

void udg_graph_free(udg_graph* g) { delete g; }

int udg_graph_equal(const udg_graph* a, const udg_graph* b) {
    return a && b && a->graph == b->graph ? 1 : 0;
}

size_t udg_graph_vertex_count(const udg_graph* g) { return g ? g->graph.vertex_count() : 0; }

size_t udg_graph_edge_count(const udg_graph* g) { return g ? g->graph.edge_count() : 0; }

int udg_graph_is_geometric(const udg_graph* g) { return g && g->graph.is_geometric() ? 1 : 0; }

udg_status udg_graph_point(const udg_graph* g, size_t v, char** out) {
    return guarded([&] {
        require(g && out, "null argument");
        if (!g->graph.is_geometric())
            udg::fail(udg::Errc::NotGeometric, "graph has no coordinates");
        require(v < g->graph.vertex_count(), "vertex out of range");
        *out = dup_string((*g->graph.points())[v].to_string());
    });
}

udg_status udg_graph_serialize(const udg_graph* g, udg_graph_format format, char** out) {
    return guarded([&] {
        require(g && out, "null argument");
        switch (format) {
        case UDG_FORMAT_JSON: *out = dup_string(udg::to_json(g->graph)); return;
        case UDG_FORMAT_DIMACS: *out = dup_string(udg::to_dimacs(g->graph)); return;
        }
        udg::fail(udg::Errc::InvalidArgument, "unknown graph format");
    });
}

udg_status udg_graph_to_cnf(const udg_graph* g, size_t k, char** out) {
    return guarded([&] {
        require(g && out, "null argument");
        *out = dup_string(udg::to_cnf(g->graph, k));
    });
}

udg_status udg_minkowski_pyth(const udg_graph* g, const char* t, udg_graph** out) {
    return guarded([&] {
        require(g && t && out, "null argument");
        auto u = udg::pyth_unit_vector(udg::Rat::parse(t));
        *out = new udg_graph{udg::minkowski_sum(g->graph, u)};
    });
}

udg_status udg_degeneracy(const udg_graph* g, size_t* degeneracy, size_t* min_degree,
                          size_t* elimination_order) {
    return guarded([&] {
        require(g != nullptr, "null argument");
        auto report = udg::degeneracy(g->graph);
        if (degeneracy)
            *degeneracy = report.degeneracy;
        if (min_degree)
            *min_degree = report.min_degree;
        if (elimination_order)
            for (std::size_t i = 0; i < report.elimination_order.size(); ++i)
                elimination_order[i] = report.elimination_order[i];
    });
}

udg_status udg_max_clique(const udg_graph* g, size_t* size) {
    return guarded([&] {
        require(g && size, "null argument");
        *size = udg::max_clique(g->graph);
    });
}

udg_status udg_is_k_colorable(const udg_graph* g, size_t k, const udg_solve_options* options,
                              int* colorable, uint32_t* colors, uint64_t* nodes_explored) {
    return guarded([&] {
        require(g && colorable, "null argument");
        auto answer = udg::is_k_colorable(g->graph, k, solve_options(options));
        *colorable = answer.colorable ? 1 : 0;
        if (answer.witness && colors)
            copy_colors(*answer.witness, colors);
        if (nodes_explored)
            *nodes_explored = answer.nodes_explored;
    });
}

udg_status udg_chromatic_number(const udg_graph* g, const udg_solve_options* options, size_t* k,
                                uint32_t* colors, uint64_t* below_nodes) {
    return guarded([&] {
        require(g && k, "null argument");
        auto result = udg::chromatic_number(g->graph, solve_options(options));
        *k = result.chromatic_number;
        if (colors)
            copy_colors(result.witness, colors);
        if (below_nodes)
            *below_nodes = result.below ? result.below->nodes_explored : 0;
    });
}

udg_status udg_greedy_coloring(const udg_graph* g, size_t* colors_used, uint32_t* colors) {
    return guarded([&] {
        require(g != nullptr, "null argument");
        auto c = udg::greedy_degeneracy_coloring(g->graph);
        if (colors_used)
            *colors_used = c.used();
        if (colors)
            copy_colors(c, colors);
    });
}

udg_status udg_verify_coloring(const udg_graph* g, const uint32_t* colors, size_t count, int* proper) {
    return guarded([&] {
        require(g && proper && (colors || count == 0), "null argument");
        std::vector<udg::Color> c(colors, colors + count);
        std::size_t k = 0;
        for (auto col : c) k = std::max<std::size_t>(k, col + 1);
        *proper = udg::verify_coloring(g->graph, udg::Coloring(std::move(c), k)) ? 1 : 0;
    });
}

udg_status udg_cnf_decode(const udg_graph* g, size_t k, const long long* literals, size_t count,
                          uint32_t* colors) {
    return guarded([&] {
        require(g && colors && (literals || count == 0), "null argument");
        auto c = udg::decode_cnf_assignment(g->graph, k, {literals, count});
        copy_colors(c, colors);
    });
}

udg_status udg_hex7_color(double x, double y, int* color) {
    return guarded([&] {
        require(color != nullptr, "null argument");
        *color = udg::hex7_color({x, y});
    });
}

udg_status udg_hex7_window(double* s_min, double* s_max) {
    return guarded([&] {
        require(s_min && s_max, "null argument");
        auto w = udg::hex7_validity_window();
        *s_min = w.s_min;
        *s_max = w.s_max;
    });
}

udg_status udg_hex7_verify(uint64_t samples, uint64_t seed, unsigned workers, char** json) {
    return guarded([&] {
        require(json != nullptr, "null argument");
        *json = dup_string(udg::hex7_verify(samples, seed, workers).to_json());
    });
}

udg_status udg_rational2_color(const char* x, const char* y, int* color) {
    return guarded([&] {
        require(x && y && color, "null argument");
        *color = udg::rational2_color({udg::Rat::parse(x), udg::Rat::parse(y)});
    });
}

udg_status udg_claims_run(const char* id, uint64_t seed, uint64_t hex_samples, int json, char** out) {
    return guarded([&] {
        require(out != nullptr, "null argument");
        udg::ClaimsConfig config;
        config.seed = seed;
        if (hex_samples != 0)
            config.hex_samples = hex_samples;
        auto report = id ? udg::evaluate_one(id, config) : udg::evaluate_all(config);
        *out = dup_string(json ? report.to_json() : report.to_text());
    });
}

} // extern "C"
