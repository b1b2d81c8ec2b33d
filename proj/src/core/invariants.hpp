#pragma once

#include "fan.hpp"
#include "involution.hpp"

namespace symcurve {

// Euler characteristic of the symmetric curve f = f∘I = 0 (any support not of
// type D): -MV(A, I(A), A+I(A)) + d*sharp_A + sum of Covol(E)*Vol_Z(E).
long long euler_symmetric(const SupportSet& A);

// Euler characteristic of the proper part (non-exceptional supports only).
long long euler_proper(const SupportSet& A);

// Tropical fan of the symmetric curve (not type D).
TropicalFan tropical_fan_symmetric(const SupportSet& A);

// Fan of the proper part: the curve fan minus d copies of the pulled-back dual
// fan of A/m (non-exceptional supports only).
TropicalFan tropical_fan_proper(const SupportSet& A);

// Genus of the proper part: (2 - e_prop - S)/2 with S the multiplicity sum of its fan.
long long genus_proper(const SupportSet& A);

struct DiagonalInfo {
    long long count = 0;          // d
    SupportSet support;           // A/m
    long long euler_each = 0;     // -Vol_Z(A/m)
    long long genus_each = 0;     // interior lattice points of conv(A/m)
    long long intersections_each = 0; // sharp_A
};

struct CurveReport {
    Classification cls;
    std::string kind;             // "curve" | "surface" | "empty"
    std::optional<long long> d;
    std::optional<long long> sharp;
    std::optional<long long> euler_total;
    std::optional<long long> euler_proper;
    std::optional<long long> genus_proper;
    std::optional<TropicalFan> fan_total;
    std::optional<TropicalFan> fan_proper;
    std::optional<long long> ray_sum; // S over fan_proper
    std::optional<DiagonalInfo> diagonal;
    std::vector<BlinderRecord> blinders;
    bool connected = false;
    std::string connectivity_reason;
    std::optional<long long> components_diagonal;
    std::optional<long long> components_proper;
    std::optional<long long> components_total;
    std::optional<long long> singular_points_total; // d * sharp, non-exceptional
    std::optional<long long> blinder_sum;           // sum h_E * Vol_Z(E)
    std::optional<long long> blinder_sum_scaled;    // d * that sum (used in e_prop)
    std::optional<bool> sheet_irreducible;          // C2 sheets
};

// One entry point covering every classification type.
CurveReport curve_report(const SupportSet& A);

} // namespace symcurve
