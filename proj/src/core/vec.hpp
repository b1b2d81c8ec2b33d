#pragma once

#include <array>
#include <ostream>

#include "checked.hpp"

namespace symcurve {

// Lattice point or integer covector with a runtime ambient dimension in {1,2,3}.
// Unused trailing coordinates stay zero, so lexicographic comparison and hashing
// work uniformly.
struct Vec {
    int dim = 0;
    std::array<long long, 3> c{0, 0, 0};

    Vec() = default;
    Vec(int d) : dim(d) {}
    Vec(long long x) : dim(1), c{x, 0, 0} {}
    Vec(long long x, long long y) : dim(2), c{x, y, 0} {}
    Vec(long long x, long long y, long long z) : dim(3), c{x, y, z} {}

    long long& operator[](int i) { return c[static_cast<size_t>(i)]; }
    long long operator[](int i) const { return c[static_cast<size_t>(i)]; }

    friend bool operator==(const Vec& a, const Vec& b) { return a.dim == b.dim && a.c == b.c; }
    friend bool operator!=(const Vec& a, const Vec& b) { return !(a == b); }
    friend bool operator<(const Vec& a, const Vec& b) {
        if (a.dim != b.dim) return a.dim < b.dim;
        return a.c < b.c;
    }

    friend Vec operator+(const Vec& a, const Vec& b) {
        Vec r(a.dim);
        for (int i = 0; i < a.dim; ++i) r[i] = cadd(a[i], b[i]);
        return r;
    }
    friend Vec operator-(const Vec& a, const Vec& b) {
        Vec r(a.dim);
        for (int i = 0; i < a.dim; ++i) r[i] = csub(a[i], b[i]);
        return r;
    }
    friend Vec operator-(const Vec& a) {
        Vec r(a.dim);
        for (int i = 0; i < a.dim; ++i) r[i] = cneg(a[i]);
        return r;
    }
    friend Vec operator*(long long k, const Vec& a) {
        Vec r(a.dim);
        for (int i = 0; i < a.dim; ++i) r[i] = cmul(k, a[i]);
        return r;
    }

    bool is_zero() const {
        for (int i = 0; i < dim; ++i)
            if (c[static_cast<size_t>(i)] != 0) return false;
        return true;
    }

    friend std::ostream& operator<<(std::ostream& os, const Vec& v) {
        os << '(';
        for (int i = 0; i < v.dim; ++i) os << (i ? "," : "") << v[i];
        return os << ')';
    }
};

inline long long dot(const Vec& a, const Vec& b) {
    long long s = 0;
    for (int i = 0; i < a.dim; ++i) s = cadd(s, cmul(a[i], b[i]));
    return s;
}

inline long long content(const Vec& v) {
    long long g = 0;
    for (int i = 0; i < v.dim; ++i) g = gcd_ll(g, v[i]);
    return g;
}

// v / gcd(v), direction preserved.
inline Vec primitive(const Vec& v) {
    long long g = content(v);
    if (g == 0) throw precondition_error("zero has no primitive representative");
    Vec r(v.dim);
    for (int i = 0; i < v.dim; ++i) r[i] = v[i] / g;
    return r;
}

// Canonical sign: first nonzero coordinate positive.
inline Vec lex_positive(const Vec& v) {
    for (int i = 0; i < v.dim; ++i) {
        if (v[i] > 0) return v;
        if (v[i] < 0) return -v;
    }
    return v;
}

inline Vec cross(const Vec& a, const Vec& b) {
    Vec r(3);
    r[0] = csub(cmul(a[1], b[2]), cmul(a[2], b[1]));
    r[1] = csub(cmul(a[2], b[0]), cmul(a[0], b[2]));
    r[2] = csub(cmul(a[0], b[1]), cmul(a[1], b[0]));
    return r;
}

// 2D cross product (a.x*b.y - a.y*b.x).
inline long long cross2(const Vec& a, const Vec& b) {
    return csub(cmul(a[0], b[1]), cmul(a[1], b[0]));
}

} // namespace symcurve
