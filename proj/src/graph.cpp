#include "udg/graph.hpp"

#include "udg/error.hpp"

#include <algorithm>
#include <bit>
#include <limits>

namespace udg {

UdGraph::UdGraph(std::size_t n)
    : n_(n), words_((n + 63) / 64), rows_(n * ((n + 63) / 64), 0) {}

void UdGraph::add_edge(Vertex u, Vertex v) {
    if (adjacent(u, v))
        return;
    rows_[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
    rows_[v * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
    ++m_;
}

UdGraph UdGraph::from_points(std::vector<EPoint> points) {
    UdGraph g(points.size());
    for (Vertex i = 0; i < points.size(); ++i) {
        for (Vertex j = i + 1; j < points.size(); ++j) {
            QNum d2 = sq_dist(points[i], points[j]);
            if (d2.is_zero())
                fail(Errc::DuplicatePoint, "points " + std::to_string(i) + " and " +
                                               std::to_string(j) + " coincide at " +
                                               points[i].to_string());
            if (d2 == QNum(1))
                g.add_edge(i, j);
        }
    }
    g.points_ = std::move(points);
    return g;
}

UdGraph UdGraph::from_edges(std::size_t n, std::span<const Edge> edges) {
    UdGraph g(n);
    for (const auto& e : edges) {
        if (e.u >= n || e.v >= n)
            fail(Errc::InvalidGraph, "edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                                         ") out of range for n = " + std::to_string(n));
        if (e.u == e.v)
            fail(Errc::InvalidGraph, "self-loop at vertex " + std::to_string(e.u));
        g.add_edge(e.u, e.v);
    }
    return g;
}

std::size_t UdGraph::degree(Vertex v) const {
    std::size_t d = 0;
    for (auto w : row(v)) d += static_cast<std::size_t>(std::popcount(w));
    return d;
}

std::vector<Vertex> UdGraph::neighbors(Vertex v) const {
    std::vector<Vertex> out;
    auto r = row(v);
    for (std::size_t w = 0; w < r.size(); ++w) {
        auto bits = r[w];
        while (bits != 0) {
            out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
            bits &= bits - 1;
        }
    }
    return out;
}

std::vector<Edge> UdGraph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v : neighbors(u))
            if (u < v)
                out.push_back({u, v});
    return out;
}

std::size_t UdGraph::min_degree() const {
    if (n_ == 0)
        return 0;
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (Vertex v = 0; v < n_; ++v) best = std::min(best, degree(v));
    return best;
}

std::size_t UdGraph::max_degree() const {
    std::size_t best = 0;
    for (Vertex v = 0; v < n_; ++v) best = std::max(best, degree(v));
    return best;
}

DegeneracyReport degeneracy(const UdGraph& g) {
    const std::size_t n = g.vertex_count();
    if (n == 0)
        fail(Errc::EmptyGraph, "degeneracy of the empty graph is undefined");
    std::vector<std::size_t> deg(n);
    for (Vertex v = 0; v < n; ++v) deg[v] = g.degree(v);
    std::vector<bool> removed(n, false);

    DegeneracyReport report;
    report.min_degree = *std::min_element(deg.begin(), deg.end());
    report.elimination_order.reserve(n);
    for (std::size_t step = 0; step < n; ++step) {
        Vertex pick = n;
        for (Vertex v = 0; v < n; ++v)
            if (!removed[v] && (pick == n || deg[v] < deg[pick]))
                pick = v;
        report.degeneracy = std::max(report.degeneracy, deg[pick]);
        report.elimination_order.push_back(pick);
        removed[pick] = true;
        for (Vertex w : g.neighbors(pick))
            if (!removed[w])
                --deg[w];
    }
    return report;
}

namespace {

// Branch and bound for maximum clique with a greedy-coloring bound.
class CliqueSearch {
public:
    explicit CliqueSearch(const UdGraph& g) : g_(g), words_(g.words_per_row()) {}

    std::vector<Vertex> run() {
        std::vector<std::uint64_t> all(words_, 0);
        for (Vertex v = 0; v < g_.vertex_count(); ++v) all[v / 64] |= std::uint64_t{1} << (v % 64);
        std::vector<Vertex> current;
        expand(current, all);
        std::sort(best_.begin(), best_.end());
        return best_;
    }

private:
    using Bits = std::vector<std::uint64_t>;

    static bool empty(const Bits& b) {
        return std::all_of(b.begin(), b.end(), [](auto w) { return w == 0; });
    }

    static Vertex first(const Bits& b) {
        for (std::size_t w = 0; w < b.size(); ++w)
            if (b[w] != 0)
                return w * 64 + static_cast<std::size_t>(std::countr_zero(b[w]));
        return std::numeric_limits<Vertex>::max();
    }

    // Sequential coloring in id order; vertices listed by non-decreasing
    // color with color bounds, so order[i] can extend a clique by at most
    // bound[i] vertices.
    void color_sort(const Bits& p, std::vector<Vertex>& order, std::vector<std::size_t>& bound) const {
        Bits uncolored = p;
        std::size_t color = 0;
        while (!empty(uncolored)) {
            ++color;
            Bits q = uncolored;
            while (!empty(q)) {
                Vertex v = first(q);
                q[v / 64] &= ~(std::uint64_t{1} << (v % 64));
                uncolored[v / 64] &= ~(std::uint64_t{1} << (v % 64));
                auto r = g_.row(v);
                for (std::size_t w = 0; w < words_; ++w) q[w] &= ~r[w];
                order.push_back(v);
                bound.push_back(color);
            }
        }
    }

    void expand(std::vector<Vertex>& current, Bits p) {
        std::vector<Vertex> order;
        std::vector<std::size_t> bound;
        color_sort(p, order, bound);
        for (std::size_t i = order.size(); i-- > 0;) {
            if (current.size() + bound[i] <= best_.size())
                return;
            Vertex v = order[i];
            current.push_back(v);
            Bits next(words_);
            auto r = g_.row(v);
            for (std::size_t w = 0; w < words_; ++w) next[w] = p[w] & r[w];
            if (empty(next)) {
                if (current.size() > best_.size())
                    best_ = current;
            } else {
                expand(current, std::move(next));
            }
            current.pop_back();
            p[v / 64] &= ~(std::uint64_t{1} << (v % 64));
        }
    }

    const UdGraph& g_;
    std::size_t words_;
    std::vector<Vertex> best_;
};

} // namespace

std::vector<Vertex> max_clique_vertices(const UdGraph& g) {
    if (g.vertex_count() == 0)
        return {};
    return CliqueSearch(g).run();
}

std::size_t max_clique(const UdGraph& g) { return max_clique_vertices(g).size(); }

} // namespace udg
