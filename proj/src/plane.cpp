#include "udg/plane.hpp"

#include "udg/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numbers>
#include <thread>

namespace udg {

namespace {

constexpr std::array<HexCell, 6> kNeighbors{
    {{1, 0}, {1, -1}, {0, -1}, {-1, 0}, {-1, 1}, {0, 1}}};

constexpr double kSqrt3 = std::numbers::sqrt3;

int mod7(std::int64_t v) { return static_cast<int>(((v % 7) + 7) % 7); }

std::int64_t hex_distance(HexCell c) {
    return (std::llabs(c.i) + std::llabs(c.j) + std::llabs(c.i + c.j)) / 2;
}

Vec2 unit_center(HexCell c) {
    return {1.5 * static_cast<double>(c.i),
            kSqrt3 * (0.5 * static_cast<double>(c.i) + static_cast<double>(c.j))};
}

std::array<Vec2, 6> hexagon(Vec2 center, double side) {
    std::array<Vec2, 6> v;
    for (int k = 0; k < 6; ++k) {
        double a = std::numbers::pi / 3.0 * k;
        v[static_cast<std::size_t>(k)] = {center.x + side * std::cos(a), center.y + side * std::sin(a)};
    }
    return v;
}

double segment_distance(Vec2 p, Vec2 a, Vec2 b) {
    double ex = b.x - a.x, ey = b.y - a.y;
    double t = ((p.x - a.x) * ex + (p.y - a.y) * ey) / (ex * ex + ey * ey);
    t = std::clamp(t, 0.0, 1.0);
    return std::hypot(p.x - (a.x + t * ex), p.y - (a.y + t * ey));
}

double polygon_boundary_distance(Vec2 p, const std::array<Vec2, 6>& poly) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < 6; ++k) best = std::min(best, segment_distance(p, poly[k], poly[(k + 1) % 6]));
    return best;
}

// Distance between two convex hexagons assumed not to overlap.
double hexagon_gap(const std::array<Vec2, 6>& a, const std::array<Vec2, 6>& b) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& p : a) best = std::min(best, polygon_boundary_distance(p, b));
    for (const auto& p : b) best = std::min(best, polygon_boundary_distance(p, a));
    return best;
}

int color_of(int alpha, int beta, HexCell c) { return mod7(alpha * c.i + beta * c.j); }

void require_finite(Vec2 p) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y))
        fail(Errc::NonFiniteInput, "point coordinates must be finite");
}

} // namespace

bool distinct_flower(int alpha, int beta) {
    std::array<bool, 7> seen{};
    seen[0] = true;
    for (auto c : kNeighbors) {
        int col = color_of(alpha, beta, c);
        if (seen[static_cast<std::size_t>(col)])
            return false;
        seen[static_cast<std::size_t>(col)] = true;
    }
    return true;
}

ValidityWindow hex7_validity_window(int alpha, int beta) {
    const auto origin = hexagon({0.0, 0.0}, 1.0);
    double gap = std::numeric_limits<double>::infinity();
    for (std::int64_t i = -5; i <= 5; ++i) {
        for (std::int64_t j = -5; j <= 5; ++j) {
            HexCell c{i, j};
            auto d = hex_distance(c);
            if (d == 0 || d > 5 || color_of(alpha, beta, c) != 0)
                continue;
            // adjacent cells share an edge: gap 0
            gap = std::min(gap, d == 1 ? 0.0 : hexagon_gap(origin, hexagon(unit_center(c), 1.0)));
        }
    }
    ValidityWindow w;
    w.s_max = 0.5;
    w.s_min = gap > 0.0 ? 1.0 / gap : std::numeric_limits<double>::infinity();
    return w;
}

ValidityWindow hex7_validity_window() {
    const auto& s = HexScheme::canonical();
    return hex7_validity_window(s.alpha(), s.beta());
}

HexScheme::HexScheme(double side, int alpha, int beta)
    : side_(side), alpha_(mod7(alpha)), beta_(mod7(beta)) {
    if (!std::isfinite(side) || side <= 0.0)
        fail(Errc::InvalidArgument, "hexagon side must be positive and finite");
    if (!distinct_flower(alpha_, beta_))
        fail(Errc::InvalidArgument, "coefficients repeat a color within a flower");
    if (!hex7_validity_window(alpha_, beta_).contains(side_))
        fail(Errc::InvalidArgument, "side outside the validity window");

    double nearest = std::numeric_limits<double>::infinity();
    std::vector<std::pair<double, HexCell>> candidates;
    for (std::int64_t i = -5; i <= 5; ++i)
        for (std::int64_t j = -5; j <= 5; ++j) {
            HexCell c{i, j};
            auto d = hex_distance(c);
            if (d == 0 || d > 5 || cell_color(c) != 0)
                continue;
            auto u = unit_center(c);
            double r = std::hypot(u.x, u.y);
            nearest = std::min(nearest, r);
            candidates.emplace_back(r, c);
        }
    for (const auto& [r, c] : candidates)
        if (r < nearest + 1e-9)
            repeats_.push_back(c);
}

const HexScheme& HexScheme::canonical() {
    static const HexScheme scheme = [] {
        for (int a = 0; a < 7; ++a)
            for (int b = 0; b < 7; ++b)
                if (distinct_flower(a, b) && hex7_validity_window(a, b).contains(kDefaultSide))
                    return HexScheme(kDefaultSide, a, b);
        fail(Errc::Internal, "no valid seven-color coefficients");
    }();
    return scheme;
}

HexCell HexScheme::cell_of(Vec2 p) const {
    require_finite(p);
    double q = (2.0 / 3.0 * p.x) / side_;
    double r = (-p.x / 3.0 + kSqrt3 / 3.0 * p.y) / side_;
    double s = -q - r;
    double rq = std::round(q), rr = std::round(r), rs = std::round(s);
    double dq = std::abs(rq - q), dr = std::abs(rr - r), ds = std::abs(rs - s);
    if (dq > dr && dq > ds)
        rq = -rr - rs;
    else if (dr > ds)
        rr = -rq - rs;
    return {static_cast<std::int64_t>(rq), static_cast<std::int64_t>(rr)};
}

Vec2 HexScheme::center(HexCell c) const {
    auto u = unit_center(c);
    return {u.x * side_, u.y * side_};
}

int HexScheme::cell_color(HexCell c) const { return color_of(alpha_, beta_, c); }

double HexScheme::boundary_distance(Vec2 p) const {
    auto c = center(cell_of(p));
    double dx = p.x - c.x, dy = p.y - c.y;
    double apothem = side_ * kSqrt3 / 2.0;
    double reach = -std::numeric_limits<double>::infinity();
    for (int k = 0; k < 6; ++k) {
        double a = std::numbers::pi / 6.0 + std::numbers::pi / 3.0 * k;
        reach = std::max(reach, dx * std::cos(a) + dy * std::sin(a));
    }
    return apothem - reach;
}

double HexScheme::nearest_same_color_distance(Vec2 p) const {
    auto own = cell_of(p);
    double best = std::numeric_limits<double>::infinity();
    for (auto off : repeats_) {
        auto poly = hexagon(center({own.i + off.i, own.j + off.j}), side_);
        best = std::min(best, polygon_boundary_distance(p, poly));
    }
    return best;
}

int hex7_color(Vec2 p) { return HexScheme::canonical().color(p); }

std::string HexVerifyReport::to_json() const {
    nlohmann::ordered_json j;
    j["samples"] = samples;
    j["seed"] = seed;
    j["side"] = side;
    j["coefficients"] = {alpha, beta};
    j["window"] = {window.s_min, window.s_max};
    j["failures"] = failures;
    j["regenerated"] = regenerated;
    j["min_same_color_distance"] = min_same_color_distance;
    return j.dump(2) + "\n";
}

namespace {

constexpr std::uint64_t kChunk = 1 << 16;
constexpr double kBox = 50.0;
constexpr double kGuard = 1e-9;

double unit_double(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

struct ChunkResult {
    std::uint64_t failures = 0;
    std::uint64_t regenerated = 0;
    double min_distance = std::numeric_limits<double>::infinity();
};

ChunkResult run_chunk(const HexScheme& scheme, std::uint64_t seed, std::uint64_t count) {
    std::mt19937_64 rng(seed);
    ChunkResult out;
    for (std::uint64_t n = 0; n < count; ++n) {
        Vec2 p, q;
        for (;;) {
            p = {-kBox + 2 * kBox * unit_double(rng), -kBox + 2 * kBox * unit_double(rng)};
            double theta = 2 * std::numbers::pi * unit_double(rng);
            q = {p.x + std::cos(theta), p.y + std::sin(theta)};
            if (scheme.boundary_distance(p) >= kGuard && scheme.boundary_distance(q) >= kGuard)
                break;
            ++out.regenerated;
        }
        if (scheme.color(p) == scheme.color(q))
            ++out.failures;
        out.min_distance = std::min({out.min_distance, scheme.nearest_same_color_distance(p),
                                     scheme.nearest_same_color_distance(q)});
    }
    return out;
}

} // namespace

HexVerifyReport hex7_verify(std::uint64_t samples, std::uint64_t seed, unsigned workers) {
    const auto& scheme = HexScheme::canonical();
    HexVerifyReport report;
    report.samples = samples;
    report.seed = seed;
    report.side = scheme.side();
    report.alpha = scheme.alpha();
    report.beta = scheme.beta();
    report.window = hex7_validity_window(scheme.alpha(), scheme.beta());

    const std::uint64_t chunks = (samples + kChunk - 1) / kChunk;
    std::vector<ChunkResult> results(chunks);
    std::atomic<std::uint64_t> next{0};
    auto worker = [&] {
        for (auto c = next.fetch_add(1); c < chunks; c = next.fetch_add(1)) {
            auto count = std::min(kChunk, samples - c * kChunk);
            results[c] = run_chunk(scheme, seed + c, count);
        }
    };
    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    double min_distance = std::numeric_limits<double>::infinity();
    for (const auto& r : results) {
        report.failures += r.failures;
        report.regenerated += r.regenerated;
        min_distance = std::min(min_distance, r.min_distance);
    }
    report.min_same_color_distance = samples == 0 ? 0.0 : min_distance;
    return report;
}

// ---------------------------------------------------------------- rational plane

std::pair<Rat, Rat> dyadic_split(const Rat& x) {
    const mpz_class& a = x.numerator();
    const mpz_class& b = x.denominator();
    auto twos = mpz_scan1(b.get_mpz_t(), 0);
    if (twos == 0)
        return {Rat(), x};
    mpz_class pow2 = 1;
    pow2 <<= twos;
    mpz_class odd = b / pow2;
    // c ≡ a * odd^-1 (mod 2^e), so that (a - c*odd) / (2^e odd) has odd denominator
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), odd.get_mpz_t(), pow2.get_mpz_t());
    mpz_class c = a * inv;
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), pow2.get_mpz_t());
    Rat dyadic(c, pow2);
    return {dyadic, x - dyadic};
}

int rational2_color(const RatPoint& p) {
    auto parity = [](const Rat& v) {
        auto odd_part = dyadic_split(v).second;
        return mpz_odd_p(odd_part.numerator().get_mpz_t()) ? 1 : 0;
    };
    return (parity(p.x) + parity(p.y)) % 2;
}

std::pair<RatPoint, RatPoint> unit_rational_pair(const RatPoint& base, const Rat& t) {
    Rat t2 = t * t;
    Rat den = Rat(1) + t2;
    RatPoint step{(Rat(1) - t2) / den, Rat(2) * t / den};
    return {base, RatPoint{base.x + step.x, base.y + step.y}};
}

namespace {

long uniform_in(std::mt19937_64& rng, long lo, long hi) {
    auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(rng() % span);
}

} // namespace

std::pair<RatPoint, RatPoint> RationalPairSampler::next() {
    RatPoint base{Rat(uniform_in(rng_, -30, 30), uniform_in(rng_, 1, 16)),
                  Rat(uniform_in(rng_, -30, 30), uniform_in(rng_, 1, 16))};
    Rat t(uniform_in(rng_, -12, 12), uniform_in(rng_, 1, 12));
    return unit_rational_pair(base, t);
}

std::pair<RatPoint, RatPoint> random_unit_rational_pair(std::uint64_t seed) {
    return RationalPairSampler(seed).next();
}

} // namespace udg
