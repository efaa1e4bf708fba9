#pragma once

#include "udg/graph.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace udg {

using Color = std::uint32_t;

// Vertex -> color in [0, k).  Properness is not implied; see verify_coloring.
class Coloring {
public:
    Coloring() = default;
    // Throws InvalidColoring if any color is >= k.
    Coloring(std::vector<Color> colors, std::size_t k);

    const std::vector<Color>& colors() const { return colors_; }
    std::size_t k() const { return k_; }
    // Number of distinct colors actually used.
    std::size_t used() const;

    friend bool operator==(const Coloring&, const Coloring&) = default;

private:
    std::vector<Color> colors_;
    std::size_t k_ = 0;
};

struct SolveOptions {
    // Exceeding the limit throws BudgetExceeded; it never yields an answer.
    std::optional<std::uint64_t> node_limit;
    // > 1 splits the root branches across threads.  The colorable verdict
    // is unchanged; witnesses and node counts may differ and are flagged
    // non-canonical.
    unsigned threads = 1;
};

struct ColorabilityAnswer {
    bool colorable = false;
    std::optional<Coloring> witness;
    std::uint64_t nodes_explored = 0;
    bool canonical = true;
};

// Exact DSATUR branch and bound: one maximum clique is precolored
// 0..q-1, then the uncolored vertex of maximum saturation (ties: maximum
// degree, then minimum id) is branched on in color order.
ColorabilityAnswer is_k_colorable(const UdGraph& g, std::size_t k, const SolveOptions& options = {});

struct ChromaticResult {
    std::size_t chromatic_number = 0;
    Coloring witness;
    // Answer for chromatic_number - 1 (absent when chromatic_number == 1).
    std::optional<ColorabilityAnswer> below;
    std::uint64_t nodes_explored = 0;
};

// Throws EmptyGraph for n == 0.
ChromaticResult chromatic_number(const UdGraph& g, const SolveOptions& options = {});

// Smallest available color along the reverse degeneracy elimination order;
// uses at most degeneracy + 1 colors.
Coloring greedy_degeneracy_coloring(const UdGraph& g);

// True iff no edge is monochromatic.  Throws SizeMismatch.
bool verify_coloring(const UdGraph& g, const Coloring& c);

// DIMACS CNF for k-colorability.  x(v, c) = v*k + c + 1; one at-least-one
// clause per vertex, then (-x(u,c) -x(v,c)) per edge (sorted) and color.
std::string to_cnf(const UdGraph& g, std::size_t k);
std::size_t cnf_variable_count(const UdGraph& g, std::size_t k);
std::size_t cnf_clause_count(const UdGraph& g, std::size_t k);

// Each vertex takes the smallest color whose variable is true.  Literals
// are DIMACS-signed; a trailing 0 is ignored.  Throws InvalidArgument for
// out-of-range literals and InvalidColoring if a vertex has no true variable.
Coloring decode_cnf_assignment(const UdGraph& g, std::size_t k, std::span<const long long> literals);

} // namespace udg
