#include "udg/catalog.hpp"

#include "udg/error.hpp"

#include <random>

namespace udg {

namespace {

const QNum& sqrt3() {
    static const QNum value = sqrt_rational(3);
    return value;
}

EPoint lattice_point(long i, long j) {
    // i(1,0) + j(1/2, √3/2)
    Rat half(1, 2);
    return {QNum(Rat(i) + Rat(j) * half), sqrt3() * (Rat(j) * half)};
}

} // namespace

UdGraph unit_triangle() {
    return UdGraph::from_points({lattice_point(0, 0), lattice_point(1, 0), lattice_point(0, 1)});
}

UdGraph moser_spindle() {
    const EPoint a = lattice_point(0, 0);
    const EPoint b = lattice_point(1, 0);
    const EPoint c = lattice_point(0, 1);
    const EPoint tip = lattice_point(1, 1);  // (3/2, √3/2), |tip|^2 = 3
    // cos θ = 5/6 gives |tip - rot(tip)|^2 = 2·3·(1 - 5/6) = 1
    const UnitVector turn(QNum(Rat(5, 6)), sqrt_rational(11) * Rat(1, 6));
    return UdGraph::from_points(
        {a, b, c, tip, rotate(b, turn), rotate(c, turn), rotate(tip, turn)});
}

UdGraph golomb_graph() {
    const EPoint center{QNum(0), QNum(0)};
    std::vector<EPoint> points{center};

    // Hexagon: each next vertex is the +60° apex over the previous spoke.
    EPoint h{QNum(1), QNum(0)};
    for (int k = 0; k < 6; ++k) {
        points.push_back(h);
        h = unit_circle_pair(center, h).first;
    }

    // Inner triangle vertex at unit distance from hexagon vertex 0 with
    // |t0|^2 = 1/3: t0 = (1, 0) + (-5/6, √11/6) = (1/6, √11/6).
    const UnitVector step(QNum(Rat(-5, 6)), sqrt_rational(11) * Rat(1, 6));
    const EPoint t0 = points[1] + step.as_point();
    const UnitVector third_turn(QNum(Rat(-1, 2)), sqrt3() * Rat(1, 2));
    const EPoint t1 = rotate(t0, third_turn);
    // The apex of the triangle over t0 t1 on the center's side.
    auto [p, q] = unit_circle_pair(t0, t1);
    const EPoint t2 = (sq_dist(p, center) == QNum(Rat(1, 3))) ? p : q;
    points.insert(points.end(), {t0, t1, t2});
    return UdGraph::from_points(std::move(points));
}

UdGraph minkowski_sum(const UdGraph& g, const UnitVector& u) {
    if (!g.is_geometric())
        fail(Errc::NotGeometric, "Minkowski sum needs vertex coordinates");
    const auto& base = *g.points();
    const EPoint shift = u.as_point();
    std::vector<EPoint> points = base;
    points.reserve(base.size() * 2);
    for (const auto& p : base) points.push_back(p + shift);
    for (Vertex i = 0; i < base.size(); ++i)
        for (Vertex j = 0; j < base.size(); ++j)
            if (base[i] == points[base.size() + j])
                fail(Errc::VertexCollision,
                     "translate of vertex " + std::to_string(j) + " collides with vertex " +
                         std::to_string(i) + " at " + base[i].to_string());
    return UdGraph::from_points(std::move(points));
}

UdGraph triangular_patch(unsigned radius) {
    const long r = static_cast<long>(radius);
    std::vector<EPoint> points;
    for (long i = -r; i <= r; ++i)
        for (long j = -r; j <= r; ++j)
            if (std::abs(i + j) <= r)
                points.push_back(lattice_point(i, j));
    return UdGraph::from_points(std::move(points));
}

UdGraph random_lattice_subset(unsigned radius, std::uint64_t seed) {
    const long r = static_cast<long>(radius);
    std::mt19937_64 rng(seed);
    std::vector<EPoint> points;
    for (long i = -r; i <= r; ++i)
        for (long j = -r; j <= r; ++j)
            if (std::abs(i + j) <= r && (rng() >> 63) != 0)
                points.push_back(lattice_point(i, j));
    if (points.empty())
        points.push_back(lattice_point(0, 0));
    return UdGraph::from_points(std::move(points));
}

const std::vector<CatalogEntry>& catalog_entries() {
    static const std::vector<CatalogEntry> entries{
        {"k1", "single vertex at the origin"},
        {"c3", "unit equilateral triangle"},
        {"moser", "Moser spindle"},
        {"golomb", "Golomb graph"},
        {"c3_mink1", "unit triangle + pyth(1/2) translate (triangular prism)"},
        {"c3_mink2", "c3_mink1 + pyth(1/3) translate (min degree 4)"},
        {"tri_patch1", "hexagonal patch of the triangular lattice, radius 1"},
        {"tri_patch2", "hexagonal patch of the triangular lattice, radius 2"},
    };
    return entries;
}

UdGraph catalog_graph(std::string_view name) {
    if (name == "k1")
        return UdGraph::from_points({EPoint{QNum(0), QNum(0)}});
    if (name == "c3")
        return unit_triangle();
    if (name == "moser")
        return moser_spindle();
    if (name == "golomb")
        return golomb_graph();
    if (name == "c3_mink1")
        return minkowski_sum(unit_triangle(), pyth_unit_vector(Rat(1, 2)));
    if (name == "c3_mink2")
        return minkowski_sum(minkowski_sum(unit_triangle(), pyth_unit_vector(Rat(1, 2))),
                             pyth_unit_vector(Rat(1, 3)));
    if (name == "tri_patch1")
        return triangular_patch(1);
    if (name == "tri_patch2")
        return triangular_patch(2);
    fail(Errc::UnknownGraph, "no catalog graph named '" + std::string(name) + "'");
}

} // namespace udg
