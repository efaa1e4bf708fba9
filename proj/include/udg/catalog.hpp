#pragma once

#include "udg/graph.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace udg {

// Two unit rhombi sharing the vertex (0, 0), the second rotated by
// (5/6, √11/6) so that the far tips are at distance 1.  7 vertices, 11 edges.
UdGraph moser_spindle();

// Center, unit hexagon, and a unit triangle of circumradius 1/√3 whose
// vertices each touch one of three alternating hexagon vertices.
// 10 vertices, 18 edges.
UdGraph golomb_graph();

// Equilateral unit triangle (0,0), (1,0), (1/2, √3/2).
UdGraph unit_triangle();

// Union of the points of g and their translates by u; edges forced by geometry.
// Throws NotGeometric, or VertexCollision naming (original, translated) ids.
UdGraph minkowski_sum(const UdGraph& g, const UnitVector& u);

// Triangular-lattice points i(1,0) + j(1/2, √3/2) with |i|, |j|, |i+j| <= R,
// ordered by (i, j).
UdGraph triangular_patch(unsigned radius);

// Random subset of triangular_patch(radius); each point kept with probability
// 1/2.  Deterministic in the seed.
UdGraph random_lattice_subset(unsigned radius, std::uint64_t seed);

struct CatalogEntry {
    std::string name;
    std::string description;
};

// Names resolvable by catalog_graph(), in listing order.
const std::vector<CatalogEntry>& catalog_entries();

// Throws UnknownGraph.
UdGraph catalog_graph(std::string_view name);

} // namespace udg
