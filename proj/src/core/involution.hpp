#pragma once

#include <optional>

#include "lattice.hpp"

namespace symcurve {

// Fixed frame for the coordinate-swap involution I(a1,a2,a3) = (a2,a1,a3):
// m spans the antidiagonal line (the -I fixed line), t cuts out the diagonal
// plane {a1 = a2}, and t(m) = 2.
inline Vec antidiagonal() { return Vec(1, -1, 0); }
inline long long t_of(const Vec& a) { return csub(a[0], a[1]); }

inline Vec involute(const Vec& a) { return Vec(a[1], a[0], a[2]); }
SupportSet involute(const SupportSet& A);

enum class CurveType { D, E, C1, C2, I10, I1, I2, NonExceptional };
const char* curve_type_name(CurveType t);

struct Classification {
    CurveType canonical = CurveType::NonExceptional;
    bool flag_D = false, flag_E = false, flag_C1 = false, flag_C2 = false;
    bool flag_I10 = false, flag_I1 = false, flag_I2 = false;
    std::optional<long long> denominator; // empty exactly for type D

    // witnesses for the raw flags that hold
    std::optional<Vec> e_direction;
    std::optional<Vec> c1_normal;          // s with s(m) = 0, constant on A
    std::optional<long long> c2_plane_t;   // t-level of the plane part
    std::optional<long long> q;            // lattice length of the Newton segment of f - f∘I
    std::optional<Vec> i10_direction;
    std::optional<std::array<long long, 2>> i1_levels;
    std::optional<long long> i2_tau, i2_c;
    std::optional<Vec> i2_direction;
    std::optional<long long> d_prime;      // I2 component count

    bool exceptional() const { return canonical != CurveType::NonExceptional; }
};

// gcd of the pairwise differences of t over A; empty for type D.
std::optional<long long> denominator(const SupportSet& A);

// Guarded classification D -> E -> C1 -> C2 -> I10 -> I1 -> I2.
Classification classify(const SupportSet& A);

struct BlinderRecord {
    SupportSet edge;          // the blinder E, an edge of A parallel to the diagonal plane
    Vec direction;            // primitive edge direction (d1 == d2)
    Vec gamma;                // the unique primitive covector with gamma(m) = 0 exposing E
    long long h = 0;          // multiplicity: gamma(E) - max gamma(A minus the plane of E)
    long long length = 0;     // Vol_Z(E)
    long long plane_t = 0;    // t-level of E
    SupportSet coblinder;     // A_E in Z^2 (quotient by the edge direction, E shifted to 0)
    long long covol = 0;      // lattice area of conv(A_E ∪ {0}) \ conv(A_E)
    long long l = 0;          // blinder distance: steps from 0 to the nearest coblinder
                              // point along either hull edge of conv(A_E ∪ {0}) at 0
    std::vector<Vec> critical; // covectors exposing exactly (E, I(E)) with an edge coblinder face
    std::vector<Vec> adjacent; // facet normals exposing strictly more than (E, I(E))
    LineQuotient quot;         // quotient map used for the coblinder
    Vec base;                  // point of E shifted to the origin
};

std::vector<BlinderRecord> blinders(const SupportSet& A);

// Number of intersections of the proper part with each diagonal component:
// Vol_Z(A/m) - sum of h_E * Vol_Z(E) over blinders.
long long sharp_A(const SupportSet& A);

// (#1, #2) of the slice through a generic shifted torus mu = c: the mixed area of
// the projections and d times the length of the shadow along span(m, mu).
std::pair<long long, long long> slice_counts(const SupportSet& A, const Vec& mu);

enum class WitnessShape { Triangle, SkewTetra, HighTetra, LowTetra };
const char* witness_shape_name(WitnessShape s);

struct MinimalWitness {
    SupportSet subset;
    WitnessShape shape;
};

// Search for a minimal non-exceptional subset (3 or 4 points) whose projection
// along the diagonal plane matches that of A. Returns the lexicographically first
// hit; empty exactly when A is exceptional.
std::optional<MinimalWitness> minimal_witness(const SupportSet& A);

} // namespace symcurve
