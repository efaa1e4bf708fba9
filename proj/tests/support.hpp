#pragma once

#include "udg/error.hpp"
#include "udg/geometry.hpp"

#include <doctest.h>

#include <random>

#define CHECK_ERRC(expr, errc)                                          \
    do {                                                                \
        bool thrown_ = false;                                           \
        try {                                                           \
            (void)(expr);                                               \
        } catch (const udg::Error& e_) {                                \
            thrown_ = true;                                             \
            CHECK_MESSAGE(e_.code() == (errc), e_.what());              \
        }                                                               \
        CHECK_MESSAGE(thrown_, "expected " << udg::errc_name(errc));    \
    } while (false)

namespace gen {

inline udg::Rat rat(std::mt19937_64& rng, long span = 20, long max_den = 12) {
    std::uniform_int_distribution<long> num(-span, span);
    std::uniform_int_distribution<long> den(1, max_den);
    return udg::Rat(num(rng), den(rng));
}

// r0 + r1 √a + r2 √b with a, b drawn from small square-free radicands.
inline udg::QNum qnum(std::mt19937_64& rng) {
    static constexpr long kRadicands[] = {2, 3, 5, 6, 7, 10, 11, 15, 33};
    std::uniform_int_distribution<std::size_t> pick(0, std::size(kRadicands) - 1);
    udg::QNum q = rat(rng);
    q += udg::sqrt_rational(kRadicands[pick(rng)]) * rat(rng);
    q += udg::sqrt_rational(kRadicands[pick(rng)]) * rat(rng);
    return q;
}

inline udg::EPoint point(std::mt19937_64& rng) { return {qnum(rng), qnum(rng)}; }

} // namespace gen
