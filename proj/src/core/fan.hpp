#pragma once

#include "support_set.hpp"

namespace symcurve {

// Weighted rays with primitive pairwise distinct generators, kept sorted.
struct TropicalFan {
    std::vector<std::pair<Vec, long long>> rays;

    void add(const Vec& gen, long long mult);
    void normalize(); // sort, merge, drop zeros; throws on negative multiplicity
    bool balanced() const;
    long long multiplicity_sum() const;
    long long multiplicity_of(const Vec& gen) const;

    friend bool operator==(const TropicalFan& a, const TropicalFan& b) { return a.rays == b.rays; }
};

void assert_balanced(const TropicalFan& f, const char* what);

// Exterior edge normals of conv(B) weighted by lattice edge lengths; a segment
// contributes its two opposite normals.
TropicalFan dual_fan_2d(const SupportSet& B);

// Embed a fan on Z^2 through the dual of the antidiagonal projection
// (a1,a2,a3) -> (a1+a2, a3): generators (g1,g2) become (g1,g1,g2).
TropicalFan pullback_antidiagonal(const TropicalFan& f);

// total - scale * sub, asserting no ray goes negative.
TropicalFan fan_subtract(const TropicalFan& total, long long scale, const TropicalFan& sub);

} // namespace symcurve
