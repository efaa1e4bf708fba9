#include "oracles.hpp"
#include "support.hpp"

#include "udg/exactnum.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using udg::Errc;
using udg::QNum;
using udg::Rat;
using udg::sqrt_rational;

TEST_CASE("Rat is kept in lowest terms") {
    CHECK(Rat(2, 4) == Rat(1, 2));
    CHECK(Rat(3, -6).to_string() == "-1/2");
    CHECK(Rat(0, 7).to_string() == "0");
    CHECK(Rat::parse("-3/6") == Rat(-1, 2));
    CHECK(Rat::parse("42") == Rat(42));
    CHECK(Rat(1, 3) < Rat(1, 2));
}

TEST_CASE("Rat parse errors") {
    CHECK_ERRC(Rat::parse(""), Errc::ParseError);
    CHECK_ERRC(Rat::parse("1/0"), Errc::ParseError);
    CHECK_ERRC(Rat::parse("1/-2"), Errc::ParseError);
    CHECK_ERRC(Rat::parse("0.5"), Errc::ParseError);
    CHECK_ERRC(Rat::parse("x"), Errc::ParseError);
    CHECK_ERRC(Rat(1, 0), Errc::InvalidArgument);
}

TEST_CASE("qnum_mul examples") {
    auto s3 = sqrt_rational(3);
    auto s11 = sqrt_rational(11);

    CHECK(udg::qnum_mul(s3, s3) == QNum(3));
    CHECK(udg::qnum_mul(QNum(1) + s3, QNum(1) - s3) == QNum(-2));

    auto p = udg::qnum_mul(s3, s11);
    CHECK(p.generators() == std::vector<std::uint64_t>{3, 11});
    REQUIRE(p.terms().size() == 1);
    CHECK(p.coefficient_of(33) == Rat(1));
    CHECK(p.to_string() == "sqrt(33)");
}

TEST_CASE("qnum_eq examples") {
    CHECK(udg::qnum_eq(QNum(Rat(2, 4)), QNum(Rat(1, 2))));
    CHECK(udg::qnum_eq(sqrt_rational(3), sqrt_rational(3)));
    CHECK_FALSE(udg::qnum_eq(sqrt_rational(3), sqrt_rational(11)));
    CHECK(udg::qnum_eq(sqrt_rational(12), sqrt_rational(3) * Rat(2)));
    CHECK(udg::qnum_eq(sqrt_rational(2) * sqrt_rational(3), sqrt_rational(6)));
}

TEST_CASE("unused generators are pruned") {
    auto s2 = sqrt_rational(2);
    auto q = s2 * s2;
    CHECK(q.is_rational());
    CHECK(q.generators().empty());
    auto z = (QNum(1) + s2) - s2;
    CHECK(z == QNum(1));
    CHECK(z.generators().empty());
}

TEST_CASE("sqrt_rational examples") {
    CHECK(sqrt_rational(Rat(4, 9)) == QNum(Rat(2, 3)));
    CHECK(sqrt_rational(0).is_zero());
    CHECK(sqrt_rational(12).coefficient_of(3) == Rat(2));
    CHECK(sqrt_rational(Rat(3, 4)).coefficient_of(3) == Rat(1, 2));
    CHECK(sqrt_rational(Rat(2, 3)).coefficient_of(6) == Rat(1, 3));
    CHECK_ERRC(sqrt_rational(-2), Errc::NegativeRadicand);
}

TEST_CASE("to_rational only for rational values") {
    CHECK((sqrt_rational(5) * sqrt_rational(5)).to_rational() == Rat(5));
    CHECK_ERRC(sqrt_rational(5).to_rational(), Errc::InvalidArgument);
}

TEST_CASE("qnum_to_interval examples") {
    auto iv = udg::qnum_to_interval(sqrt_rational(3), 20);
    CHECK(iv.contains(1.7320508075688772));
    CHECK(iv.width() <= std::ldexp(2.0, -20));

    auto zero = udg::qnum_to_interval(QNum(0), 40);
    CHECK(zero.lo == 0.0);
    CHECK(zero.hi == 0.0);

    auto q = QNum::parse("5/6 + 1/6*sqrt(11)");
    auto iq = udg::qnum_to_interval(q, 40);
    CHECK(iq.contains((5.0 + std::sqrt(11.0)) / 6.0));
}

TEST_CASE("parse and print") {
    auto q = QNum::parse("5/6 + 1/6*sqrt(11)");
    CHECK(q.to_string() == "5/6 + 1/6*sqrt(11)");
    CHECK(QNum::parse("-sqrt(3)") == -sqrt_rational(3));
    CHECK(QNum::parse("1/2 - 1/2*sqrt(3)") == QNum(Rat(1, 2)) - sqrt_rational(3) * Rat(1, 2));
    CHECK(QNum::parse("sqrt(12)") == sqrt_rational(3) * Rat(2));
    CHECK(QNum::parse("0").to_string() == "0");

    CHECK_ERRC(QNum::parse(""), Errc::ParseError);
    CHECK_ERRC(QNum::parse("1 +"), Errc::ParseError);
    CHECK_ERRC(QNum::parse("sqrt(-2)"), Errc::ParseError);
    CHECK_ERRC(QNum::parse("sqrt(2"), Errc::ParseError);
    CHECK_ERRC(QNum::parse("abc"), Errc::ParseError);
}

TEST_CASE("property: field axioms") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        auto a = gen::qnum(rng), b = gen::qnum(rng), c = gen::qnum(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == QNum(0));
        CHECK(a * QNum(1) == a);
    }
}

TEST_CASE("property: arithmetic agrees with high-precision evaluation") {
    std::mt19937_64 rng(12);
    for (int i = 0; i < 200; ++i) {
        auto a = gen::qnum(rng), b = gen::qnum(rng);
        auto va = oracle::evaluate(a), vb = oracle::evaluate(b);
        CHECK(oracle::near(oracle::evaluate(a + b), mpf_class(va + vb, oracle::kBits)));
        CHECK(oracle::near(oracle::evaluate(a * b), mpf_class(va * vb, oracle::kBits)));
        // structural equality matches numeric equality
        CHECK((a == b) == oracle::near(va, vb));
    }
}

TEST_CASE("property: sqrt_rational squares back") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 300; ++i) {
        auto r = gen::rat(rng, 500, 200);
        if (r.sign() < 0)
            r = -r;
        auto s = sqrt_rational(r);
        CHECK(s * s == QNum(r));
        CHECK(oracle::evaluate(s) >= 0);
    }
}

TEST_CASE("property: interval encloses the value") {
    std::mt19937_64 rng(14);
    for (int i = 0; i < 300; ++i) {
        auto q = gen::qnum(rng);
        for (unsigned bits : {10U, 30U, 50U}) {
            auto iv = q.to_interval(bits);
            auto v = oracle::evaluate(q);
            CHECK(mpf_class(iv.lo, oracle::kBits) <= v);
            CHECK(v <= mpf_class(iv.hi, oracle::kBits));
            double scale = std::max(1.0, std::abs(q.to_double()));
            CHECK(iv.width() <= std::ldexp(scale, -static_cast<int>(bits)) + 4 * scale * 0x1p-52);
        }
    }
}

TEST_CASE("property: parse(to_string(q)) == q") {
    std::mt19937_64 rng(15);
    for (int i = 0; i < 300; ++i) {
        auto q = gen::qnum(rng);
        CHECK(QNum::parse(q.to_string()) == q);
    }
}
