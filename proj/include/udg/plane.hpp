#pragma once

#include "udg/exactnum.hpp"

#include <array>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace udg {

struct HexCell {
    std::int64_t i = 0;
    std::int64_t j = 0;

    friend bool operator==(const HexCell&, const HexCell&) = default;
};

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

// Open interval of hexagon side lengths for which a coloring is valid.
struct ValidityWindow {
    double s_min = 0.0;
    double s_max = 0.0;

    bool contains(double s) const { return s_min < s && s < s_max; }
};

// Flat-top regular hexagons of side s centered at i(3s/2, √3 s/2) + j(0, √3 s);
// cell (i, j) gets color (alpha i + beta j) mod 7.
class HexScheme {
public:
    static constexpr double kDefaultSide = 0.45;

    // s = 0.45 with the lexicographically smallest valid (alpha, beta).
    static const HexScheme& canonical();

    // Throws InvalidArgument unless the seven cells of every flower get
    // distinct colors and side lies in the validity window.
    HexScheme(double side, int alpha, int beta);

    double side() const { return side_; }
    int alpha() const { return alpha_; }
    int beta() const { return beta_; }

    // Cube rounding of axial coordinates; throws NonFiniteInput.
    HexCell cell_of(Vec2 p) const;
    Vec2 center(HexCell c) const;
    int cell_color(HexCell c) const;
    int color(Vec2 p) const { return cell_color(cell_of(p)); }

    // Distance from p to the boundary of its own cell.
    double boundary_distance(Vec2 p) const;
    // Distance from p to the nearest cell of the same color other than its own.
    double nearest_same_color_distance(Vec2 p) const;

    // Offsets to the six nearest cells sharing the origin cell's color.
    const std::vector<HexCell>& same_color_offsets() const { return repeats_; }

private:
    double side_;
    int alpha_;
    int beta_;
    std::vector<HexCell> repeats_;
};

// True iff the origin cell and its six neighbors get seven distinct colors.
bool distinct_flower(int alpha, int beta);

// s_max = 1/2 (diameter below 1); s_min = 1 / D where D is the smallest
// boundary-to-boundary distance between the origin cell and a same-colored
// cell within hexagonal distance 5, for unit side.  Empty window if D == 0.
ValidityWindow hex7_validity_window(int alpha, int beta);
ValidityWindow hex7_validity_window();

// Throws NonFiniteInput.
int hex7_color(Vec2 p);

struct HexVerifyReport {
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    double side = 0.0;
    int alpha = 0;
    int beta = 0;
    ValidityWindow window;
    std::uint64_t failures = 0;
    std::uint64_t regenerated = 0;
    double min_same_color_distance = 0.0;

    std::string to_json() const;
};

// Samples p uniformly in [-50, 50]^2 and an angle θ, and checks that p and
// p + (cos θ, sin θ) get different colors.  Samples within 1e-9 of a cell
// boundary are redrawn.  The stream is split into fixed chunks, chunk c
// seeded with seed + c, so the report does not depend on the worker count.
HexVerifyReport hex7_verify(std::uint64_t samples, std::uint64_t seed, unsigned workers = 1);

struct RatPoint {
    Rat x;
    Rat y;

    friend bool operator==(const RatPoint&, const RatPoint&) = default;
};

// x = dyadic part in [0, 1) with power-of-two denominator + part with odd
// denominator.
std::pair<Rat, Rat> dyadic_split(const Rat& x);

// (par(x_odd) + par(y_odd)) mod 2, par(a/b) = a mod 2 for odd b.
int rational2_color(const RatPoint& p);

// Base point with small random rationals plus a Pythagorean unit step.
class RationalPairSampler {
public:
    explicit RationalPairSampler(std::uint64_t seed) : rng_(seed) {}
    std::pair<RatPoint, RatPoint> next();

private:
    std::mt19937_64 rng_;
};

// (base, base + pyth(t)).
std::pair<RatPoint, RatPoint> unit_rational_pair(const RatPoint& base, const Rat& t);

std::pair<RatPoint, RatPoint> random_unit_rational_pair(std::uint64_t seed);

} // namespace udg
