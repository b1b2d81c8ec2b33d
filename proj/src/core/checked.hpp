#pragma once

#include <cstdlib>
#include <numeric>

#include "errors.hpp"

namespace symcurve {

// All lattice arithmetic runs through these; silent wraparound would corrupt every
// downstream invariant, so overflow throws instead.
inline long long cadd(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw internal_error("integer overflow in addition");
    return r;
}

inline long long csub(long long a, long long b) {
    long long r;
    if (__builtin_sub_overflow(a, b, &r)) throw internal_error("integer overflow in subtraction");
    return r;
}

inline long long cmul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw internal_error("integer overflow in multiplication");
    return r;
}

inline long long cneg(long long a) { return csub(0, a); }

inline long long exact_div(long long a, long long b, const char* what) {
    if (b == 0 || a % b != 0) throw internal_error(std::string("exact division failed: ") + what);
    return a / b;
}

inline long long gcd_ll(long long a, long long b) {
    return std::gcd(std::llabs(a), std::llabs(b));
}

} // namespace symcurve
