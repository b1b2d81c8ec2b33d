#pragma once

#include <map>
#include <optional>

#include "lattice.hpp"

namespace symcurve {

// Support of a one-parameter family of univariate polynomials: points
// (x-exponent, t-exponent) in Z^2.
struct FamilySupport {
    SupportSet pts; // dim 2

    static FamilySupport from_points(const SupportSet& s);
    static FamilySupport from_coefficients(const std::map<long long, std::vector<long long>>& coeffs);

    std::vector<long long> x_exponents() const; // sorted distinct, "B"
    SupportSet column(long long x) const;       // A_j as a 1D set of t-exponents
};

// gcd of the pairwise differences of the occupied x-exponents; empty when only
// one exponent occurs (no nonzero roots to permute).
std::optional<long long> family_d(const FamilySupport& F);

struct BranchCounts {
    long long n = 0, N = 0; // extreme x-exponents
    long long q = 0, Q = 0; // gaps to the second smallest / second largest
    long long sharp1 = 0;   // Vol_Z(A_n)
    long long sharp2 = 0;   // Vol_Z(A_N)
    long long sharp3 = 0;   // Vol_Z(A) - Q Vol_Z(A_N) - q Vol_Z(A_n)
    bool rh_identity_ok = false;
};

BranchCounts branch_counts(const FamilySupport& F);

struct GaloisVerdict {
    std::optional<long long> d;
    long long n = 0, N = 0, q = 0, Q = 0;
    long long sharp1 = 0, sharp2 = 0, sharp3 = 0;
    bool rh_identity_ok = true;
    bool full_symmetric = false;
    std::string reason;
};

// Decides whether the Galois group of the generic family is the full symmetric
// group on its N - n nonzero roots.
GaloisVerdict galois_verdict(const FamilySupport& F);

} // namespace symcurve
