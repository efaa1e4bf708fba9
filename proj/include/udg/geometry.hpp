#pragma once

#include "udg/exactnum.hpp"

#include <string>
#include <string_view>
#include <utility>

namespace udg {

struct EPoint {
    QNum x;
    QNum y;

    // "(x; y)" with exactnum textual coordinates.
    static EPoint parse(std::string_view text);
    std::string to_string() const;

    friend bool operator==(const EPoint&, const EPoint&) = default;
    friend EPoint operator+(const EPoint& a, const EPoint& b) { return {a.x + b.x, a.y + b.y}; }
    friend EPoint operator-(const EPoint& a, const EPoint& b) { return {a.x - b.x, a.y - b.y}; }
};

// Exact direction on the unit circle: ux^2 + uy^2 == 1 is checked on construction.
class UnitVector {
public:
    UnitVector(QNum ux, QNum uy);

    const QNum& ux() const { return ux_; }
    const QNum& uy() const { return uy_; }
    EPoint as_point() const { return {ux_, uy_}; }

    friend bool operator==(const UnitVector&, const UnitVector&) = default;

private:
    QNum ux_;
    QNum uy_;
};

QNum sq_dist(const EPoint& p, const EPoint& q);
bool is_unit(const EPoint& p, const EPoint& q);

// ((1 - t^2) / (1 + t^2), 2t / (1 + t^2))
UnitVector pyth_unit_vector(const Rat& t);

// Rotation about the origin by the angle of u.
EPoint rotate(const EPoint& p, const UnitVector& u);

// The two points at distance 1 from both a and b.  The first uses the +90°
// perpendicular of (b - a).  Equal exactly when |ab| = 2.
// Throws CoincidentCenters, DisjointCircles (|ab| > 2) or UnsupportedRadicand
// (|ab|^2 irrational).
std::pair<EPoint, EPoint> unit_circle_pair(const EPoint& a, const EPoint& b);

} // namespace udg
