#pragma once

// Exact rationals and exact arithmetic in multi-quadratic fields Q(√p1,...,√pk).
//
// A QNum is a finite sum of rational multiples of basis elements ∏_{i∈S} √p_i
// over a sorted list of distinct primes p_i.  Since square roots of distinct
// primes are multiplicatively independent modulo squares, these products form
// a Q-basis, so equality is structural once zero terms and unused generators
// are pruned.  Every value is kept in that canonical form.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace udg {

class Rat {
public:
    Rat() = default;
    Rat(long value) : q_(value) {}
    Rat(int value) : q_(value) {}
    Rat(long numerator, long denominator);
    Rat(const mpz_class& numerator, const mpz_class& denominator);
    explicit Rat(const mpq_class& value);

    // Accepts "p", "-p", "p/q" with decimal integers; throws ParseError.
    static Rat parse(std::string_view text);

    const mpz_class& numerator() const { return q_.get_num(); }
    const mpz_class& denominator() const { return q_.get_den(); }
    const mpq_class& value() const { return q_; }

    int sign() const { return sgn(q_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    double to_double() const { return q_.get_d(); }
    std::string to_string() const;

    Rat operator-() const { return Rat(mpq_class(-q_)); }
    Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
    Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
    Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

private:
    mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

// Outward-rounded double enclosure of a real value.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    bool contains(double x) const { return lo <= x && x <= hi; }
    double width() const { return hi - lo; }
};

class QNum {
public:
    struct Term {
        std::uint64_t mask;  // subset of generator indices
        Rat coeff;           // never zero

        friend bool operator==(const Term&, const Term&) = default;
    };

    QNum() = default;
    QNum(const Rat& r);
    QNum(long value) : QNum(Rat(value)) {}
    QNum(int value) : QNum(Rat(value)) {}

    // Textual form: sum of terms `c*sqrt(m)` with exact rationals, e.g.
    // "5/6 + 1/6*sqrt(11)".  Throws ParseError.
    static QNum parse(std::string_view text);
    std::string to_string() const;

    const std::vector<std::uint64_t>& generators() const { return gens_; }
    const std::vector<Term>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_rational() const { return gens_.empty(); }
    // Throws InvalidArgument when the value is irrational.
    Rat to_rational() const;
    // Coefficient of the basis element √m (m square-free, 1 for the rational part).
    Rat coefficient_of(std::uint64_t squarefree) const;

    double to_double() const;
    // lo <= value <= hi with hi - lo <= 2^-precision * max(1, |value|), up to
    // double resolution.
    Interval to_interval(unsigned precision_bits) const;

    QNum operator-() const;
    QNum& operator+=(const QNum& o);
    QNum& operator-=(const QNum& o);
    QNum& operator*=(const QNum& o);
    QNum& operator*=(const Rat& r);

    friend QNum operator+(QNum a, const QNum& b) { return a += b; }
    friend QNum operator-(QNum a, const QNum& b) { return a -= b; }
    friend QNum operator*(const QNum& a, const QNum& b);
    friend QNum operator*(QNum a, const Rat& b) { return a *= b; }
    friend QNum operator*(const Rat& a, QNum b) { return b *= a; }

    friend bool operator==(const QNum& a, const QNum& b) {
        return a.gens_ == b.gens_ && a.terms_ == b.terms_;
    }

    // Strict total order on the canonical representation; has no numeric
    // meaning, used only for deterministic containers.
    friend bool structural_less(const QNum& a, const QNum& b);

private:
    friend QNum sqrt_rational(const Rat& r);

    QNum(std::vector<std::uint64_t> gens, std::vector<Term> terms);
    void canonicalize();

    std::vector<std::uint64_t> gens_;  // sorted primes
    std::vector<Term> terms_;          // sorted by mask, nonzero coefficients
};

std::ostream& operator<<(std::ostream& os, const QNum& q);

// Exact square root of a nonnegative rational.  Throws NegativeRadicand or
// UnfactorableRadicand.
QNum sqrt_rational(const Rat& r);

inline QNum sqrt_rational(long r) { return sqrt_rational(Rat(r)); }

// Free-function spellings of the core operations.
inline QNum qnum_mul(const QNum& a, const QNum& b) { return a * b; }
inline bool qnum_eq(const QNum& a, const QNum& b) { return a == b; }
inline Interval qnum_to_interval(const QNum& a, unsigned precision_bits) {
    return a.to_interval(precision_bits);
}

} // namespace udg
