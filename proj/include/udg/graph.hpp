#pragma once

#include "udg/geometry.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace udg {

using Vertex = std::size_t;

struct Edge {
    Vertex u;
    Vertex v;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Finite simple undirected graph with a dense bit-row adjacency matrix.
// When points are present the edge set is exactly the set of unit-distance
// pairs; every constructor enforces that.
class UdGraph {
public:
    UdGraph() = default;

    // Throws DuplicatePoint (message carries the index pair).
    static UdGraph from_points(std::vector<EPoint> points);
    // Abstract graph; throws InvalidGraph on self-loops or out-of-range ids.
    // Repeated edges collapse.
    static UdGraph from_edges(std::size_t n, std::span<const Edge> edges);

    std::size_t vertex_count() const { return n_; }
    std::size_t edge_count() const { return m_; }
    bool is_geometric() const { return points_.has_value(); }
    const std::optional<std::vector<EPoint>>& points() const { return points_; }

    bool adjacent(Vertex u, Vertex v) const {
        return (rows_[u * words_ + v / 64] >> (v % 64)) & 1U;
    }
    std::span<const std::uint64_t> row(Vertex v) const {
        return {rows_.data() + v * words_, words_};
    }
    std::size_t words_per_row() const { return words_; }
    std::size_t degree(Vertex v) const;
    std::vector<Vertex> neighbors(Vertex v) const;
    // u < v, lexicographically sorted.
    std::vector<Edge> edges() const;
    std::size_t min_degree() const;
    std::size_t max_degree() const;

    friend bool operator==(const UdGraph& a, const UdGraph& b) {
        return a.n_ == b.n_ && a.rows_ == b.rows_ && a.points_ == b.points_;
    }

private:
    explicit UdGraph(std::size_t n);
    void add_edge(Vertex u, Vertex v);

    std::size_t n_ = 0;
    std::size_t m_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> rows_;
    std::optional<std::vector<EPoint>> points_;
};

struct DegeneracyReport {
    std::size_t degeneracy = 0;
    std::vector<Vertex> elimination_order;
    std::size_t min_degree = 0;
};

// Repeatedly removes a minimum-degree vertex (smallest id on ties).
// Throws EmptyGraph for n == 0.
DegeneracyReport degeneracy(const UdGraph& g);

// Vertices of a maximum clique, ascending; the first maximum found by a
// deterministic branch and bound.
std::vector<Vertex> max_clique_vertices(const UdGraph& g);
std::size_t max_clique(const UdGraph& g);

// DIMACS .col: "p edge n m" then "e u v" (1-based, u < v, sorted).
std::string to_dimacs(const UdGraph& g);
UdGraph from_dimacs(std::string_view text);

// {"n": .., "points": [["x", "y"], ..], "edges": [[u, v], ..]}; points optional.
std::string to_json(const UdGraph& g);
UdGraph from_json(std::string_view text);

} // namespace udg
