#include "udg/solver.hpp"

#include "udg/error.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <sstream>
#include <thread>

namespace udg {

Coloring::Coloring(std::vector<Color> colors, std::size_t k) : colors_(std::move(colors)), k_(k) {
    for (std::size_t v = 0; v < colors_.size(); ++v)
        if (colors_[v] >= k_)
            fail(Errc::InvalidColoring, "vertex " + std::to_string(v) + " has color " +
                                            std::to_string(colors_[v]) + " >= k = " +
                                            std::to_string(k_));
}

std::size_t Coloring::used() const {
    std::vector<bool> seen(k_, false);
    std::size_t count = 0;
    for (auto c : colors_)
        if (!seen[c]) {
            seen[c] = true;
            ++count;
        }
    return count;
}

namespace {

constexpr int kUncolored = -1;

struct SharedControl {
    std::atomic<bool> stop{false};
    std::atomic<bool> budget_hit{false};
    std::atomic<std::uint64_t> nodes{0};
    std::optional<std::uint64_t> limit;
};

class DsaturSearch {
public:
    DsaturSearch(const UdGraph& g, std::size_t k)
        : k_(k), color_(g.vertex_count(), kUncolored), count_(g.vertex_count() * k, 0),
          saturation_(g.vertex_count(), 0), degree_(g.vertex_count()),
          remaining_uncolored_(g.vertex_count()) {
        adj_.reserve(g.vertex_count());
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            adj_.push_back(g.neighbors(v));
            degree_[v] = adj_.back().size();
        }
    }

    void assign(Vertex v, Color c) {
        color_[v] = static_cast<int>(c);
        for (Vertex w : adj_[v])
            if (count_[w * k_ + c]++ == 0)
                ++saturation_[w];
        --remaining_uncolored_;
    }

    void unassign(Vertex v) {
        auto c = static_cast<std::size_t>(color_[v]);
        color_[v] = kUncolored;
        for (Vertex w : adj_[v])
            if (--count_[w * k_ + c] == 0)
                --saturation_[w];
        ++remaining_uncolored_;
    }

    bool is_free(Vertex v, Color c) const { return count_[v * k_ + c] == 0; }

    // Max saturation, then max degree, then min id; n if all colored.
    Vertex select() const {
        Vertex best = color_.size();
        for (Vertex v = 0; v < color_.size(); ++v) {
            if (color_[v] != kUncolored)
                continue;
            if (best == color_.size() || saturation_[v] > saturation_[best] ||
                (saturation_[v] == saturation_[best] && degree_[v] > degree_[best]))
                best = v;
        }
        return best;
    }

    std::size_t saturation(Vertex v) const { return saturation_[v]; }

    // Returns true when a complete proper coloring has been reached.
    bool search(SharedControl& ctl) {
        ++nodes_;
        if (ctl.limit) {
            auto total = ctl.nodes.fetch_add(1, std::memory_order_relaxed) + 1;
            if (total > *ctl.limit) {
                ctl.budget_hit = true;
                ctl.stop = true;
                return false;
            }
        }
        if (ctl.stop.load(std::memory_order_relaxed))
            return false;
        if (remaining_uncolored_ == 0)
            return true;
        Vertex v = select();
        if (saturation_[v] >= k_)
            return false;
        for (Color c = 0; c < k_; ++c) {
            if (!is_free(v, c))
                continue;
            assign(v, c);
            if (search(ctl))
                return true;
            unassign(v);
            if (ctl.stop.load(std::memory_order_relaxed))
                return false;
        }
        return false;
    }

    std::vector<Color> colors() const {
        std::vector<Color> out(color_.size());
        for (std::size_t v = 0; v < out.size(); ++v) out[v] = static_cast<Color>(color_[v]);
        return out;
    }

    std::uint64_t nodes() const { return nodes_; }

private:
    std::size_t k_;
    std::vector<int> color_;
    std::vector<std::uint32_t> count_;  // count_[v*k + c]: neighbors of v with color c
    std::vector<std::size_t> saturation_;
    std::vector<std::size_t> degree_;
    std::vector<std::vector<Vertex>> adj_;
    std::size_t remaining_uncolored_ = 0;
    std::uint64_t nodes_ = 0;
};

} // namespace

ColorabilityAnswer is_k_colorable(const UdGraph& g, std::size_t k, const SolveOptions& options) {
    if (k == 0)
        fail(Errc::InvalidArgument, "k must be at least 1");
    const std::size_t n = g.vertex_count();
    ColorabilityAnswer answer;
    if (n == 0) {
        answer.colorable = true;
        answer.witness = Coloring({}, k);
        return answer;
    }

    auto clique = max_clique_vertices(g);
    if (clique.size() > k) {
        answer.nodes_explored = 1;
        return answer;
    }

    DsaturSearch root(g, k);
    for (std::size_t i = 0; i < clique.size(); ++i) root.assign(clique[i], static_cast<Color>(i));

    SharedControl ctl;
    ctl.limit = options.node_limit;

    Vertex branch = root.select();
    std::vector<Color> choices;
    if (branch < n && root.saturation(branch) < k)
        for (Color c = 0; c < k; ++c)
            if (root.is_free(branch, c))
                choices.push_back(c);

    if (options.threads <= 1 || choices.size() < 2) {
        bool found = root.search(ctl);
        if (ctl.budget_hit)
            fail(Errc::BudgetExceeded, "node limit of " + std::to_string(*ctl.limit) + " exceeded");
        answer.colorable = found;
        answer.nodes_explored = root.nodes();
        if (found)
            answer.witness = Coloring(root.colors(), k);
        return answer;
    }

    // Parallel mode: the root node is counted here, each root branch is a task.
    if (ctl.limit)
        ctl.nodes = 1;
    std::atomic<std::size_t> next{0};
    std::atomic<std::uint64_t> nodes{1};
    std::mutex mu;
    std::optional<std::vector<Color>> found;
    auto worker = [&] {
        for (;;) {
            auto i = next.fetch_add(1);
            if (i >= choices.size() || ctl.stop)
                return;
            DsaturSearch local = root;
            local.assign(branch, choices[i]);
            bool ok = local.search(ctl);
            nodes += local.nodes();
            if (ok) {
                std::lock_guard lock(mu);
                if (!found)
                    found = local.colors();
                ctl.stop = true;
            }
        }
    };
    std::vector<std::thread> pool;
    auto workers = std::min<std::size_t>(options.threads, choices.size());
    for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    if (!found && ctl.budget_hit)
        fail(Errc::BudgetExceeded, "node limit of " + std::to_string(*ctl.limit) + " exceeded");
    answer.colorable = found.has_value();
    answer.nodes_explored = nodes;
    answer.canonical = false;
    if (found)
        answer.witness = Coloring(*found, k);
    return answer;
}

ChromaticResult chromatic_number(const UdGraph& g, const SolveOptions& options) {
    if (g.vertex_count() == 0)
        fail(Errc::EmptyGraph, "chromatic number of the empty graph is undefined");
    ChromaticResult result;
    const std::size_t omega = max_clique(g);
    std::optional<ColorabilityAnswer> previous;
    for (std::size_t k = std::max<std::size_t>(1, omega - 1);; ++k) {
        auto answer = is_k_colorable(g, k, options);
        result.nodes_explored += answer.nodes_explored;
        if (answer.colorable) {
            result.chromatic_number = k;
            result.witness = *answer.witness;
            result.below = std::move(previous);
            return result;
        }
        previous = std::move(answer);
    }
}

Coloring greedy_degeneracy_coloring(const UdGraph& g) {
    const auto report = degeneracy(g);
    const std::size_t n = g.vertex_count();
    std::vector<int> color(n, kUncolored);
    std::size_t used = 0;
    for (auto it = report.elimination_order.rbegin(); it != report.elimination_order.rend(); ++it) {
        std::vector<bool> taken(report.degeneracy + 2, false);
        for (Vertex w : g.neighbors(*it))
            if (color[w] != kUncolored && static_cast<std::size_t>(color[w]) < taken.size())
                taken[static_cast<std::size_t>(color[w])] = true;
        std::size_t c = 0;
        while (taken[c]) ++c;
        color[*it] = static_cast<int>(c);
        used = std::max(used, c + 1);
    }
    std::vector<Color> out(color.begin(), color.end());
    return Coloring(std::move(out), used);
}

bool verify_coloring(const UdGraph& g, const Coloring& c) {
    if (c.colors().size() != g.vertex_count())
        fail(Errc::SizeMismatch, "coloring has " + std::to_string(c.colors().size()) +
                                     " entries for " + std::to_string(g.vertex_count()) +
                                     " vertices");
    for (const auto& e : g.edges())
        if (c.colors()[e.u] == c.colors()[e.v])
            return false;
    return true;
}

std::size_t cnf_variable_count(const UdGraph& g, std::size_t k) { return g.vertex_count() * k; }

std::size_t cnf_clause_count(const UdGraph& g, std::size_t k) {
    return g.vertex_count() + g.edge_count() * k;
}

std::string to_cnf(const UdGraph& g, std::size_t k) {
    if (k == 0)
        fail(Errc::InvalidArgument, "k must be at least 1");
    auto var = [k](Vertex v, std::size_t c) { return v * k + c + 1; };
    std::ostringstream out;
    out << "p cnf " << cnf_variable_count(g, k) << ' ' << cnf_clause_count(g, k) << '\n';
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        for (std::size_t c = 0; c < k; ++c) out << var(v, c) << ' ';
        out << "0\n";
    }
    for (const auto& e : g.edges())
        for (std::size_t c = 0; c < k; ++c)
            out << '-' << var(e.u, c) << " -" << var(e.v, c) << " 0\n";
    return out.str();
}

Coloring decode_cnf_assignment(const UdGraph& g, std::size_t k, std::span<const long long> literals) {
    if (k == 0)
        fail(Errc::InvalidArgument, "k must be at least 1");
    const auto vars = static_cast<long long>(cnf_variable_count(g, k));
    std::vector<bool> truth(static_cast<std::size_t>(vars) + 1, false);
    for (auto lit : literals) {
        if (lit == 0)
            continue;
        if (lit > vars || lit < -vars)
            fail(Errc::InvalidArgument, "literal " + std::to_string(lit) + " out of range");
        if (lit > 0)
            truth[static_cast<std::size_t>(lit)] = true;
    }
    std::vector<Color> colors(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        std::size_t c = 0;
        while (c < k && !truth[v * k + c + 1]) ++c;
        if (c == k)
            fail(Errc::InvalidColoring, "assignment leaves vertex " + std::to_string(v) + " uncolored");
        colors[v] = static_cast<Color>(c);
    }
    return Coloring(std::move(colors), k);
}

} // namespace udg
