#include "oracles.hpp"
#include "support.hpp"

#include "udg/plane.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

using udg::Errc;
using udg::HexCell;
using udg::RatPoint;
using udg::Rat;
using udg::Vec2;

namespace {

constexpr double kSide = 0.45;

// Flat-top hexagon cells are the Voronoi regions of their centers, so the
// cell is the nearest center.  No cube rounding involved.
HexCell nearest_cell(Vec2 p, double side = kSide) {
    double ci = p.x / (1.5 * side);
    double cj = p.y / (std::sqrt(3.0) * side) - ci / 2.0;
    HexCell best{};
    double best_d = std::numeric_limits<double>::infinity();
    for (auto i = static_cast<std::int64_t>(std::floor(ci)) - 2; i <= static_cast<std::int64_t>(std::floor(ci)) + 3; ++i)
        for (auto j = static_cast<std::int64_t>(std::floor(cj)) - 2; j <= static_cast<std::int64_t>(std::floor(cj)) + 3; ++j) {
            double x = 1.5 * side * static_cast<double>(i);
            double y = std::sqrt(3.0) * side * (static_cast<double>(i) / 2.0 + static_cast<double>(j));
            double d = std::hypot(p.x - x, p.y - y);
            if (d < best_d) {
                best_d = d;
                best = {i, j};
            }
        }
    return best;
}

int oracle_color(Vec2 p, int alpha, int beta) {
    auto c = nearest_cell(p);
    return static_cast<int>(((alpha * c.i + beta * c.j) % 7 + 7) % 7);
}

bool oracle_flower(int alpha, int beta) {
    static constexpr int kOffsets[6][2] = {{1, 0}, {1, -1}, {0, -1}, {-1, 0}, {-1, 1}, {0, 1}};
    bool seen[7] = {true, false, false, false, false, false, false};
    for (auto [i, j] : kOffsets) {
        int c = ((alpha * i + beta * j) % 7 + 7) % 7;
        if (seen[c])
            return false;
        seen[c] = true;
    }
    return true;
}

// Boundary-to-boundary gap between unit-side hexagons by dense sampling of
// both boundaries: an upper bound converging from above.
double sampled_gap(HexCell c) {
    auto boundary = [](double cx, double cy, int steps) {
        std::vector<Vec2> pts;
        for (int k = 0; k < 6; ++k) {
            double a0 = std::numbers::pi / 3 * k, a1 = std::numbers::pi / 3 * (k + 1);
            for (int s = 0; s < steps; ++s) {
                double t = static_cast<double>(s) / steps;
                pts.push_back({cx + (1 - t) * std::cos(a0) + t * std::cos(a1),
                               cy + (1 - t) * std::sin(a0) + t * std::sin(a1)});
            }
        }
        return pts;
    };
    auto a = boundary(0, 0, 200);
    auto b = boundary(1.5 * static_cast<double>(c.i),
                      std::sqrt(3.0) * (static_cast<double>(c.i) / 2 + static_cast<double>(c.j)), 200);
    double best = std::numeric_limits<double>::infinity();
    for (auto p : a)
        for (auto q : b) best = std::min(best, std::hypot(p.x - q.x, p.y - q.y));
    return best;
}

} // namespace

TEST_CASE("hex7_color examples") {
    CHECK(udg::hex7_color({0, 0}) == 0);
    CHECK_ERRC(udg::hex7_color({std::numeric_limits<double>::quiet_NaN(), 0}), Errc::NonFiniteInput);
    CHECK_ERRC(udg::hex7_color({0, std::numeric_limits<double>::infinity()}), Errc::NonFiniteInput);
}

TEST_CASE("canonical scheme") {
    const auto& s = udg::HexScheme::canonical();
    CHECK(s.side() == kSide);
    CHECK(2 * s.side() < 1.0);
    CHECK(oracle_flower(s.alpha(), s.beta()));
    // no lexicographically smaller pair is valid at this side
    for (int a = 0; a < 7; ++a)
        for (int b = 0; b < 7; ++b) {
            if (std::pair{a, b} >= std::pair{s.alpha(), s.beta()})
                continue;
            bool valid = oracle_flower(a, b) && udg::hex7_validity_window(a, b).contains(kSide);
            CHECK_FALSE(valid);
        }
    CHECK(udg::distinct_flower(s.alpha(), s.beta()));
    CHECK_FALSE(udg::distinct_flower(1, 1));
    CHECK_ERRC(udg::HexScheme(0.45, 1, 1), Errc::InvalidArgument);
    CHECK_ERRC(udg::HexScheme(0.5, s.alpha(), s.beta()), Errc::InvalidArgument);
}

TEST_CASE("property: flower colors agree with the oracle") {
    for (int a = 0; a < 7; ++a)
        for (int b = 0; b < 7; ++b) CHECK(udg::distinct_flower(a, b) == oracle_flower(a, b));
}

TEST_CASE("validity window") {
    auto w = udg::hex7_validity_window();
    CHECK(w.contains(0.45));
    CHECK_FALSE(w.contains(0.5));
    CHECK_FALSE(w.contains(0.1));
    CHECK(w.s_max == 0.5);

    // independent gap estimate over the same neighborhood
    const auto& s = udg::HexScheme::canonical();
    double gap = std::numeric_limits<double>::infinity();
    for (std::int64_t i = -5; i <= 5; ++i)
        for (std::int64_t j = -5; j <= 5; ++j) {
            auto d = (std::llabs(i) + std::llabs(j) + std::llabs(i + j)) / 2;
            if (d < 2 || d > 5 || s.cell_color({i, j}) != 0)
                continue;
            gap = std::min(gap, sampled_gap({i, j}));
        }
    CHECK(gap >= 1.0 / w.s_min - 1e-12);
    CHECK(gap == doctest::Approx(1.0 / w.s_min).epsilon(1e-4));
}

TEST_CASE("periodicity along the color sublattice") {
    const auto& s = udg::HexScheme::canonical();
    REQUIRE(s.same_color_offsets().size() == 6);
    std::mt19937_64 rng(61);
    std::uniform_real_distribution<double> u(-20, 20);
    for (int n = 0; n < 2000; ++n) {
        Vec2 p{u(rng), u(rng)};
        if (s.boundary_distance(p) < 1e-9)
            continue;
        for (auto off : s.same_color_offsets()) {
            auto shift = s.center(off);
            CHECK(s.color({p.x + shift.x, p.y + shift.y}) == s.color(p));
        }
    }
}

TEST_CASE("property: cell assignment matches nearest center") {
    const auto& s = udg::HexScheme::canonical();
    std::mt19937_64 rng(62);
    std::uniform_real_distribution<double> u(-60, 60);
    for (int n = 0; n < 20000; ++n) {
        Vec2 p{u(rng), u(rng)};
        if (s.boundary_distance(p) < 1e-9)
            continue;
        CHECK(s.cell_of(p) == nearest_cell(p));
    }
}

TEST_CASE("property: unit pairs are bichromatic under the oracle coloring") {
    const auto& s = udg::HexScheme::canonical();
    std::mt19937_64 rng(63);
    std::uniform_real_distribution<double> u(-50, 50), angle(0, 2 * std::numbers::pi);
    for (int n = 0; n < 20000; ++n) {
        Vec2 p{u(rng), u(rng)};
        double t = angle(rng);
        Vec2 q{p.x + std::cos(t), p.y + std::sin(t)};
        if (s.boundary_distance(p) < 1e-9 || s.boundary_distance(q) < 1e-9)
            continue;
        CHECK(oracle_color(p, s.alpha(), s.beta()) != oracle_color(q, s.alpha(), s.beta()));
        CHECK(s.color(p) == oracle_color(p, s.alpha(), s.beta()));
    }
}

TEST_CASE("hex7_verify is worker-independent") {
    auto one = udg::hex7_verify(200000, 7, 1);
    auto four = udg::hex7_verify(200000, 7, 4);
    CHECK(one.failures == 0);
    CHECK(one.to_json() == four.to_json());
    CHECK(one.min_same_color_distance > 1.0);
    CHECK(udg::hex7_verify(1000, 8).to_json() != one.to_json());
}

TEST_CASE("rational2_color examples") {
    CHECK(udg::rational2_color({Rat(0), Rat(0)}) == 0);
    CHECK(udg::rational2_color({Rat(3, 5), Rat(4, 5)}) == 1);
    CHECK(udg::rational2_color({Rat(1, 2), Rat(0)}) == 0);
    CHECK(udg::rational2_color({Rat(1), Rat(0)}) == 1);
}

TEST_CASE("dyadic_split examples") {
    auto [d, o] = udg::dyadic_split(Rat(1, 2));
    CHECK(d == Rat(1, 2));
    CHECK(o == Rat(0));
    auto [d2, o2] = udg::dyadic_split(Rat(1, 6));
    CHECK(d2 == Rat(1, 2));
    CHECK(o2 == Rat(-1, 3));
    auto [d3, o3] = udg::dyadic_split(Rat(7, 5));
    CHECK(d3 == Rat(0));
    CHECK(o3 == Rat(7, 5));
}

TEST_CASE("property: dyadic_split decomposes") {
    std::mt19937_64 rng(64);
    for (int n = 0; n < 2000; ++n) {
        auto x = gen::rat(rng, 1000, 96);
        auto [d, o] = udg::dyadic_split(x);
        CHECK(d + o == x);
        CHECK(d >= Rat(0));
        CHECK(d < Rat(1));
        mpz_class den = d.denominator();
        CHECK(mpz_popcount(den.get_mpz_t()) == 1);
        CHECK(mpz_odd_p(o.denominator().get_mpz_t()));
    }
}

TEST_CASE("unit_rational_pair examples") {
    auto [a, b] = udg::unit_rational_pair({Rat(0), Rat(0)}, Rat(1, 2));
    CHECK(a == RatPoint{Rat(0), Rat(0)});
    CHECK(b == RatPoint{Rat(3, 5), Rat(4, 5)});
}

TEST_CASE("property: sampled rational pairs are unit and bichromatic") {
    udg::RationalPairSampler sampler(65);
    udg::RationalPairSampler again(65);
    for (int n = 0; n < 5000; ++n) {
        auto [p, q] = sampler.next();
        CHECK(again.next() == std::pair{p, q});
        Rat dx = q.x - p.x, dy = q.y - p.y;
        CHECK(dx * dx + dy * dy == Rat(1));
        CHECK(udg::rational2_color(p) != udg::rational2_color(q));
    }
    CHECK(udg::random_unit_rational_pair(3) == udg::random_unit_rational_pair(3));
}

TEST_CASE("property: BFS 2-coloring agrees with rational2_color") {
    std::mt19937_64 rng(66);
    for (int trial = 0; trial < 20; ++trial) {
        auto pts = oracle::rational_cloud(rng, 120);
        auto bfs = oracle::bfs_two_color(pts);
        CHECK(bfs.bipartite);
        CHECK(oracle::bfs_matches_rational2(pts, bfs));
        std::size_t edges = 0;
        for (const auto& a : bfs.adj) edges += a.size();
        CHECK(edges > 0);
    }
}
