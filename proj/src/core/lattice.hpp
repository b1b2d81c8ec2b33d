#pragma once

#include "hull.hpp"
#include "mat.hpp"
#include "support_set.hpp"

namespace symcurve {

struct Hull2;

// Coordinates on the saturated rank-2 sublattice ker(gamma) for a primitive
// covector gamma, via a unimodular completion. map() restricts to an affine
// isomorphism of every plane {gamma = c} onto Z^2.
struct PlaneCoords {
    Mat3 V;    // gamma * V = e1
    Mat3 Vinv;

    Vec map(const Vec& x) const {
        Vec y = Vinv.mul(x);
        return Vec(y[1], y[2]);
    }
    // 2D covector -> 3D covector vanishing on nothing but pairing as w(map(x))
    Vec lift(const Vec& w) const {
        Vec r = w[0] * Vinv.row(1) + w[1] * Vinv.row(2);
        return r;
    }
};

PlaneCoords plane_coords(const Vec& gamma);

// Quotient Z^3 -> Z^3/(Z*dir) for a primitive direction, with a section for
// descending covectors that vanish on dir.
struct LineQuotient {
    Mat3 U;    // U * dir = e1
    Mat3 Uinv;

    Vec map(const Vec& x) const {
        Vec y = U.mul(x);
        return Vec(y[1], y[2]);
    }
    Vec lift(const Vec& w) const { return w[0] * U.row(1) + w[1] * U.row(2); }
    // descend a covector gamma with gamma(dir) == 0
    Vec descend(const Vec& gamma) const {
        return Vec(dot(gamma, Uinv.col(1)), dot(gamma, Uinv.col(2)));
    }
};

LineQuotient line_quotient(const Vec& dir);

long long shoelace(const std::vector<Vec>& ccw_cycle); // = 2 * Euclidean area

// |conv(A) ∩ lattice| - 1 for a collinear set (any ambient dimension); 0 for a point.
long long lattice_length(const SupportSet& A);

// 2 * Euclidean area of conv(A), ambient dimension 2; 0 when degenerate.
long long lattice_area(const SupportSet& A);

// 6 * Euclidean volume of conv(A), ambient dimension 3; 0 when degenerate.
long long lattice_volume3(const SupportSet& A);

// 6 * Euclidean volume of conv(A_1 + ... + A_k) computed from summand data,
// without building the hull of the Minkowski sum.
long long lattice_volume3_of_sum(const std::vector<const SupportSet*>& summands);

// Lattice mixed area: Vol(P+Q) - Vol(P) - Vol(Q) in Euclidean normalization,
// integer-valued; MV(P,P) = lattice_area(P).
long long mixed_area(const SupportSet& P, const SupportSet& Q);

// Lattice mixed volume, MV(P,P,P) = lattice_volume3(P); inclusion-exclusion over
// Minkowski sums with the divisibility by 6 asserted.
long long mixed_volume3(const SupportSet& P, const SupportSet& Q, const SupportSet& R);

// Mixed area of two sets each lying in a plane {gamma = const}, computed inside
// the saturated sublattice ker(gamma).
long long mixed_area_in_plane(const SupportSet& F1, const SupportSet& F2, const Vec& gamma);

// Image of A under a surjection Z^3 -> Z^2 with kernel Z*mu. For the antidiagonal
// mu = ±(1,-1,0) the map is pinned to (a1,a2,a3) -> (a1+a2, a3).
SupportSet project_along(const SupportSet& A, const Vec& mu);

long long interior_lattice_points(const SupportSet& A);

struct SublatticeIndex {
    int rank = 0;
    long long index = 1;
};

// Rank of the differences of A and the index of the lattice they generate in its
// saturation.
SublatticeIndex sublattice_index(const SupportSet& A);

} // namespace symcurve
