#include "udg/geometry.hpp"

#include "udg/error.hpp"

namespace udg {

EPoint EPoint::parse(std::string_view text) {
    auto open = text.find('(');
    auto close = text.rfind(')');
    auto semi = text.find(';');
    if (open == std::string_view::npos || close == std::string_view::npos ||
        semi == std::string_view::npos || !(open < semi && semi < close))
        fail(Errc::ParseError, "expected '(x; y)', got '" + std::string(text) + "'");
    for (std::size_t i = 0; i < open; ++i)
        if (text[i] != ' ' && text[i] != '\t')
            fail(Errc::ParseError, "unexpected text before '(' in '" + std::string(text) + "'");
    for (std::size_t i = close + 1; i < text.size(); ++i)
        if (text[i] != ' ' && text[i] != '\t')
            fail(Errc::ParseError, "unexpected text after ')' in '" + std::string(text) + "'");
    return {QNum::parse(text.substr(open + 1, semi - open - 1)),
            QNum::parse(text.substr(semi + 1, close - semi - 1))};
}

std::string EPoint::to_string() const {
    return "(" + x.to_string() + "; " + y.to_string() + ")";
}

UnitVector::UnitVector(QNum ux, QNum uy) : ux_(std::move(ux)), uy_(std::move(uy)) {
    if (ux_ * ux_ + uy_ * uy_ != QNum(1))
        fail(Errc::InvalidArgument, "not a unit vector: " + as_point().to_string());
}

QNum sq_dist(const EPoint& p, const EPoint& q) {
    QNum dx = p.x - q.x;
    QNum dy = p.y - q.y;
    return dx * dx + dy * dy;
}

bool is_unit(const EPoint& p, const EPoint& q) { return sq_dist(p, q) == QNum(1); }

UnitVector pyth_unit_vector(const Rat& t) {
    Rat t2 = t * t;
    Rat den = Rat(1) + t2;
    return UnitVector(QNum((Rat(1) - t2) / den), QNum(Rat(2) * t / den));
}

EPoint rotate(const EPoint& p, const UnitVector& u) {
    return {p.x * u.ux() - p.y * u.uy(), p.x * u.uy() + p.y * u.ux()};
}

std::pair<EPoint, EPoint> unit_circle_pair(const EPoint& a, const EPoint& b) {
    if (a == b)
        fail(Errc::CoincidentCenters, "unit circles share center " + a.to_string());
    QNum d2 = sq_dist(a, b);
    if (!d2.is_rational())
        fail(Errc::UnsupportedRadicand,
             "squared center distance " + d2.to_string() + " is irrational");
    Rat dist2 = d2.to_rational();
    if (dist2 > Rat(4))
        fail(Errc::DisjointCircles, "centers at squared distance " + dist2.to_string() + " > 4");
    // midpoint ± (h / d) * perp(b - a), with h / d = sqrt(1/d^2 - 1/4)
    QNum scale = sqrt_rational(Rat(1) / dist2 - Rat(1, 4));
    Rat half(1, 2);
    EPoint mid{(a.x + b.x) * half, (a.y + b.y) * half};
    EPoint perp{-(b.y - a.y), b.x - a.x};
    EPoint offset{perp.x * scale, perp.y * scale};
    return {mid + offset, mid - offset};
}

} // namespace udg
