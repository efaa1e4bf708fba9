#include "udg/exactnum.hpp"

#include "udg/error.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cmath>
#include <limits>
#include <ostream>
#include <utility>

namespace udg {

// ---------------------------------------------------------------- Rat

Rat::Rat(long numerator, long denominator) : q_(numerator, denominator) {
    if (denominator == 0)
        fail(Errc::InvalidArgument, "zero denominator");
    q_.canonicalize();
}

Rat::Rat(const mpz_class& numerator, const mpz_class& denominator)
    : q_(numerator, denominator) {
    if (denominator == 0)
        fail(Errc::InvalidArgument, "zero denominator");
    q_.canonicalize();
}

Rat::Rat(const mpq_class& value) : q_(value) { q_.canonicalize(); }

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero())
        fail(Errc::InvalidArgument, "division by zero");
    q_ /= o.q_;
    return *this;
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

mpz_class parse_integer(std::string_view s, std::string_view whole) {
    s = trim(s);
    std::string digits;
    std::size_t i = 0;
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
        if (s[0] == '-')
            digits.push_back('-');
        i = 1;
    }
    if (i == s.size())
        fail(Errc::ParseError, "expected integer in '" + std::string(whole) + "'");
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            fail(Errc::ParseError, "invalid character in '" + std::string(whole) + "'");
        digits.push_back(s[i]);
    }
    return mpz_class(digits, 10);
}

} // namespace

Rat Rat::parse(std::string_view text) {
    auto t = trim(text);
    auto slash = t.find('/');
    if (slash == std::string_view::npos)
        return Rat(parse_integer(t, text), mpz_class(1));
    auto num = parse_integer(t.substr(0, slash), text);
    auto den_text = trim(t.substr(slash + 1));
    if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+'))
        fail(Errc::ParseError, "signed denominator in '" + std::string(text) + "'");
    auto den = parse_integer(den_text, text);
    if (den == 0)
        fail(Errc::ParseError, "zero denominator in '" + std::string(text) + "'");
    return Rat(num, den);
}

std::string Rat::to_string() const { return q_.get_str(10); }

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.to_string(); }

// ---------------------------------------------------------------- helpers

namespace {

constexpr unsigned long kTrialLimit = 1000000;

struct SquarefreeSplit {
    mpz_class root = 1;                 // n = root^2 * prod(primes)
    std::vector<std::uint64_t> primes;  // ascending
};

SquarefreeSplit split_squarefree(mpz_class n) {
    SquarefreeSplit out;
    unsigned long p = 2;
    for (; p <= kTrialLimit; p += (p == 2 ? 1 : 2)) {
        if (mpz_class(p) * p > n)
            break;
        unsigned e = 0;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
            ++e;
        }
        if (e % 2 == 1)
            out.primes.push_back(p);
        for (unsigned k = 0; k < e / 2; ++k)
            out.root *= p;
    }
    if (n > 1) {
        bool fully_divided = mpz_class(p) * p > n;
        if (mpz_perfect_square_p(n.get_mpz_t())) {
            out.root *= sqrt(n);
        } else if (fully_divided || mpz_probab_prime_p(n.get_mpz_t(), 40) > 0) {
            if (!n.fits_ulong_p() || sizeof(unsigned long) < sizeof(std::uint64_t))
                fail(Errc::UnfactorableRadicand, "radicand prime factor exceeds 64 bits");
            out.primes.push_back(n.get_ui());
        } else {
            fail(Errc::UnfactorableRadicand,
                 "cannot factor radicand cofactor " + n.get_str());
        }
    }
    std::sort(out.primes.begin(), out.primes.end());
    return out;
}

std::uint64_t remap_mask(std::uint64_t mask, const std::vector<int>& index_map) {
    std::uint64_t out = 0;
    while (mask != 0) {
        int bit = std::countr_zero(mask);
        mask &= mask - 1;
        out |= std::uint64_t{1} << index_map[static_cast<std::size_t>(bit)];
    }
    return out;
}

// Merges two sorted generator lists; fills per-side index maps into the union.
std::vector<std::uint64_t> merge_generators(const std::vector<std::uint64_t>& a,
                                            const std::vector<std::uint64_t>& b,
                                            std::vector<int>& map_a,
                                            std::vector<int>& map_b) {
    std::vector<std::uint64_t> merged;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(merged));
    if (merged.size() > 64)
        fail(Errc::InvalidArgument, "more than 64 field generators");
    auto index_of = [&](std::uint64_t g) {
        return static_cast<int>(std::lower_bound(merged.begin(), merged.end(), g) - merged.begin());
    };
    map_a.clear();
    map_b.clear();
    for (auto g : a) map_a.push_back(index_of(g));
    for (auto g : b) map_b.push_back(index_of(g));
    return merged;
}

mpz_class basis_radicand(const std::vector<std::uint64_t>& gens, std::uint64_t mask) {
    mpz_class m = 1;
    while (mask != 0) {
        int bit = std::countr_zero(mask);
        mask &= mask - 1;
        m *= static_cast<unsigned long>(gens[static_cast<std::size_t>(bit)]);
    }
    return m;
}

double round_down(const mpq_class& q) {
    double d = q.get_d();
    if (cmp(mpq_class(d), q) > 0)
        d = std::nextafter(d, -std::numeric_limits<double>::infinity());
    return d;
}

double round_up(const mpq_class& q) {
    double d = q.get_d();
    if (cmp(mpq_class(d), q) < 0)
        d = std::nextafter(d, std::numeric_limits<double>::infinity());
    return d;
}

} // namespace

// ---------------------------------------------------------------- QNum

QNum::QNum(const Rat& r) {
    if (!r.is_zero())
        terms_.push_back({0, r});
}

QNum::QNum(std::vector<std::uint64_t> gens, std::vector<Term> terms)
    : gens_(std::move(gens)), terms_(std::move(terms)) {
    canonicalize();
}

void QNum::canonicalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return a.mask < b.mask; });
    std::vector<Term> merged;
    merged.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!merged.empty() && merged.back().mask == t.mask)
            merged.back().coeff += t.coeff;
        else
            merged.push_back(std::move(t));
    }
    std::erase_if(merged, [](const Term& t) { return t.coeff.is_zero(); });
    terms_ = std::move(merged);

    std::uint64_t used = 0;
    for (const auto& t : terms_) used |= t.mask;
    if (std::popcount(used) == static_cast<int>(gens_.size()))
        return;
    std::vector<std::uint64_t> kept;
    std::vector<int> index_map(gens_.size(), 0);
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (used & (std::uint64_t{1} << i)) {
            index_map[i] = static_cast<int>(kept.size());
            kept.push_back(gens_[i]);
        }
    }
    for (auto& t : terms_) t.mask = remap_mask(t.mask, index_map);
    gens_ = std::move(kept);
}

Rat QNum::to_rational() const {
    if (!is_rational())
        fail(Errc::InvalidArgument, "value " + to_string() + " is irrational");
    return terms_.empty() ? Rat() : terms_.front().coeff;
}

Rat QNum::coefficient_of(std::uint64_t squarefree) const {
    if (squarefree == 0)
        fail(Errc::InvalidArgument, "basis radicand must be positive");
    auto split = split_squarefree(mpz_class(static_cast<unsigned long>(squarefree)));
    if (split.root != 1)
        fail(Errc::InvalidArgument, "basis radicand must be square-free");
    std::uint64_t mask = 0;
    for (auto p : split.primes) {
        auto it = std::lower_bound(gens_.begin(), gens_.end(), p);
        if (it == gens_.end() || *it != p)
            return Rat();
        mask |= std::uint64_t{1} << (it - gens_.begin());
    }
    for (const auto& t : terms_)
        if (t.mask == mask)
            return t.coeff;
    return Rat();
}

QNum QNum::operator-() const {
    QNum out = *this;
    for (auto& t : out.terms_) t.coeff = -t.coeff;
    return out;
}

QNum& QNum::operator+=(const QNum& o) {
    if (gens_ == o.gens_) {
        terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
        canonicalize();
        return *this;
    }
    std::vector<int> map_a, map_b;
    auto merged = merge_generators(gens_, o.gens_, map_a, map_b);
    std::vector<Term> terms;
    terms.reserve(terms_.size() + o.terms_.size());
    for (const auto& t : terms_) terms.push_back({remap_mask(t.mask, map_a), t.coeff});
    for (const auto& t : o.terms_) terms.push_back({remap_mask(t.mask, map_b), t.coeff});
    *this = QNum(std::move(merged), std::move(terms));
    return *this;
}

QNum& QNum::operator-=(const QNum& o) { return *this += -o; }

QNum& QNum::operator*=(const Rat& r) {
    if (r.is_zero()) {
        *this = QNum();
        return *this;
    }
    for (auto& t : terms_) t.coeff *= r;
    return *this;
}

QNum& QNum::operator*=(const QNum& o) {
    *this = *this * o;
    return *this;
}

QNum operator*(const QNum& a, const QNum& b) {
    if (a.is_zero() || b.is_zero())
        return QNum();
    std::vector<int> map_a, map_b;
    auto gens = merge_generators(a.gens_, b.gens_, map_a, map_b);
    std::vector<QNum::Term> terms;
    terms.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& ta : a.terms_) {
        auto ma = remap_mask(ta.mask, map_a);
        for (const auto& tb : b.terms_) {
            auto mb = remap_mask(tb.mask, map_b);
            // (√d)^2 = d for every generator present on both sides
            Rat coeff = ta.coeff * tb.coeff;
            if (auto common = ma & mb; common != 0)
                coeff *= Rat(basis_radicand(gens, common), mpz_class(1));
            terms.push_back({ma ^ mb, std::move(coeff)});
        }
    }
    return QNum(std::move(gens), std::move(terms));
}

bool structural_less(const QNum& a, const QNum& b) {
    if (a.gens_ != b.gens_)
        return a.gens_ < b.gens_;
    if (a.terms_.size() != b.terms_.size())
        return a.terms_.size() < b.terms_.size();
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
        const auto& x = a.terms_[i];
        const auto& y = b.terms_[i];
        if (x.mask != y.mask)
            return x.mask < y.mask;
        if (x.coeff != y.coeff)
            return x.coeff < y.coeff;
    }
    return false;
}

QNum sqrt_rational(const Rat& r) {
    if (r.sign() < 0)
        fail(Errc::NegativeRadicand, "square root of negative rational " + r.to_string());
    if (r.is_zero())
        return QNum();
    // √(a/b) = √(ab) / b
    const mpz_class& a = r.numerator();
    const mpz_class& b = r.denominator();
    auto split = split_squarefree(a * b);
    Rat coeff(split.root, b);
    if (split.primes.empty())
        return QNum(coeff);
    std::uint64_t mask = (split.primes.size() == 64) ? ~std::uint64_t{0}
                                                     : (std::uint64_t{1} << split.primes.size()) - 1;
    return QNum(std::move(split.primes), {QNum::Term{mask, coeff}});
}

Interval QNum::to_interval(unsigned precision_bits) const {
    if (is_zero())
        return {0.0, 0.0};
    if (is_rational()) {
        const auto& q = terms_.front().coeff.value();
        return {round_down(q), round_up(q)};
    }
    std::vector<mpz_class> radicands;
    radicands.reserve(terms_.size());
    for (const auto& t : terms_) radicands.push_back(basis_radicand(gens_, t.mask));

    for (unsigned bits = precision_bits + 8;; bits += 32) {
        mpq_class lo = 0, hi = 0;
        mpz_class scale = 1;
        scale <<= bits;
        for (std::size_t i = 0; i < terms_.size(); ++i) {
            const mpq_class& c = terms_[i].coeff.value();
            if (radicands[i] == 1) {
                lo += c;
                hi += c;
                continue;
            }
            mpz_class scaled = radicands[i] * scale * scale;
            mpz_class root = sqrt(scaled);
            mpq_class below(root, scale);
            mpq_class above = (root * root == scaled) ? below : mpq_class(root + 1, scale);
            below.canonicalize();
            above.canonicalize();
            if (sgn(c) > 0) {
                lo += c * below;
                hi += c * above;
            } else {
                lo += c * above;
                hi += c * below;
            }
        }
        mpq_class magnitude = 1;
        if (sgn(lo) > 0 && lo > magnitude) magnitude = lo;
        if (sgn(hi) < 0 && -hi > magnitude) magnitude = -hi;
        mpq_class width = hi - lo;
        mpz_class target_scale = 1;
        target_scale <<= (precision_bits + 1);
        if (width * target_scale <= magnitude)
            return {round_down(lo), round_up(hi)};
    }
}

double QNum::to_double() const {
    auto iv = to_interval(60);
    return iv.lo + (iv.hi - iv.lo) / 2;
}

// ---------------------------------------------------------------- text form

std::string QNum::to_string() const {
    if (is_zero())
        return "0";
    std::vector<std::pair<mpz_class, const Term*>> ordered;
    for (const auto& t : terms_) ordered.emplace_back(basis_radicand(gens_, t.mask), &t);
    std::sort(ordered.begin(), ordered.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    std::string out;
    bool first = true;
    for (const auto& [radicand, term] : ordered) {
        Rat c = term->coeff;
        bool negative = c.sign() < 0;
        if (negative) c = -c;
        std::string body;
        if (radicand == 1)
            body = c.to_string();
        else if (c == Rat(1))
            body = "sqrt(" + radicand.get_str() + ")";
        else
            body = c.to_string() + "*sqrt(" + radicand.get_str() + ")";
        if (first)
            out += negative ? "-" + body : body;
        else
            out += (negative ? " - " : " + ") + body;
        first = false;
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const QNum& q) { return os << q.to_string(); }

namespace {

QNum parse_term(std::string_view term, bool negative, std::string_view whole) {
    term = trim(term);
    if (term.empty())
        fail(Errc::ParseError, "empty term in '" + std::string(whole) + "'");
    Rat coeff(1);
    std::string_view radical;
    auto star = term.find('*');
    if (star != std::string_view::npos) {
        coeff = Rat::parse(term.substr(0, star));
        radical = trim(term.substr(star + 1));
    } else if (term.starts_with("sqrt")) {
        radical = term;
    } else {
        coeff = Rat::parse(term);
    }
    QNum value(negative ? -coeff : coeff);
    if (radical.empty())
        return value;
    if (!radical.starts_with("sqrt"))
        fail(Errc::ParseError, "expected sqrt(...) in '" + std::string(whole) + "'");
    auto inner = trim(radical.substr(4));
    if (inner.size() < 2 || inner.front() != '(' || inner.back() != ')')
        fail(Errc::ParseError, "malformed sqrt(...) in '" + std::string(whole) + "'");
    Rat radicand = Rat::parse(inner.substr(1, inner.size() - 2));
    if (radicand.sign() < 0)
        fail(Errc::ParseError, "negative radicand in '" + std::string(whole) + "'");
    return value * sqrt_rational(radicand);
}

} // namespace

QNum QNum::parse(std::string_view text) {
    auto t = trim(text);
    if (t.empty())
        fail(Errc::ParseError, "empty number");
    QNum sum;
    int depth = 0;
    bool negative = false;
    std::size_t start = 0;
    std::size_t i = 0;
    // A leading sign belongs to the first term.
    if (t[0] == '-' || t[0] == '+') {
        negative = t[0] == '-';
        start = i = 1;
    }
    bool seen_body = false;
    for (; i < t.size(); ++i) {
        char ch = t[i];
        if (ch == '(') {
            ++depth;
        } else if (ch == ')') {
            if (--depth < 0)
                fail(Errc::ParseError, "unbalanced ')' in '" + std::string(text) + "'");
        } else if ((ch == '+' || ch == '-') && depth == 0 && seen_body) {
            // a sign directly after '*' or '/' is part of the coefficient
            auto prev = trim(t.substr(start, i - start));
            if (!prev.empty() && (prev.back() == '*' || prev.back() == '/')) {
                continue;
            }
            sum += parse_term(t.substr(start, i - start), negative, text);
            negative = ch == '-';
            start = i + 1;
            seen_body = false;
            continue;
        }
        if (!std::isspace(static_cast<unsigned char>(ch)))
            seen_body = true;
    }
    if (depth != 0)
        fail(Errc::ParseError, "unbalanced '(' in '" + std::string(text) + "'");
    sum += parse_term(t.substr(start), negative, text);
    return sum;
}

} // namespace udg
