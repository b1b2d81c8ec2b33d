#pragma once

#include <random>

#include "involution.hpp"

namespace symcurve::testutil {

inline SupportSet set3(std::vector<Vec> pts) { return SupportSet::of(3, std::move(pts)); }
inline SupportSet set2(std::vector<Vec> pts) { return SupportSet::of(2, std::move(pts)); }
inline SupportSet set1(std::vector<long long> xs) {
    std::vector<Vec> pts;
    for (long long x : xs) pts.push_back(Vec(x));
    return SupportSet::of(1, std::move(pts));
}

// all lattice points of k * (standard simplex) in dimension 3
inline SupportSet dilated_simplex3(long long k) {
    std::vector<Vec> pts;
    for (long long x = 0; x <= k; ++x)
        for (long long y = 0; x + y <= k; ++y)
            for (long long z = 0; x + y + z <= k; ++z) pts.push_back(Vec(x, y, z));
    return SupportSet::of(3, std::move(pts));
}

inline SupportSet dilated_simplex2(long long k) {
    std::vector<Vec> pts;
    for (long long x = 0; x <= k; ++x)
        for (long long y = 0; x + y <= k; ++y) pts.push_back(Vec(x, y));
    return SupportSet::of(2, std::move(pts));
}

inline SupportSet unit_cube3() {
    std::vector<Vec> pts;
    for (long long x = 0; x <= 1; ++x)
        for (long long y = 0; y <= 1; ++y)
            for (long long z = 0; z <= 1; ++z) pts.push_back(Vec(x, y, z));
    return SupportSet::of(3, std::move(pts));
}

// random unimodular map: a product of elementary shears and coordinate swaps
inline Mat3 random_unimodular(std::mt19937_64& rng) {
    Mat3 M = Mat3::identity();
    std::uniform_int_distribution<int> pick(0, 2);
    std::uniform_int_distribution<long long> shear(-2, 2);
    for (int step = 0; step < 6; ++step) {
        int i = pick(rng), j = pick(rng);
        if (i == j) {
            for (int c = 0; c < 3; ++c) std::swap(M.a[static_cast<size_t>(i)][c], M.a[(static_cast<size_t>(i) + 1) % 3][c]);
            continue;
        }
        long long s = shear(rng);
        for (int c = 0; c < 3; ++c)
            M.a[static_cast<size_t>(i)][c] =
                cadd(M.a[static_cast<size_t>(i)][c], cmul(s, M.a[static_cast<size_t>(j)][c]));
    }
    return M;
}

inline SupportSet apply(const Mat3& M, const SupportSet& A) {
    std::vector<Vec> pts;
    for (const auto& p : A.pts) pts.push_back(M.mul(p));
    return SupportSet::of(3, std::move(pts));
}

} // namespace symcurve::testutil
