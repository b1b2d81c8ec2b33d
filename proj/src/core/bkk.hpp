#pragma once

#include "fan.hpp"
#include "lattice.hpp"

namespace symcurve {

// Root count of a generic square system: the lattice mixed volume of the n
// supports in dimension n (n <= 3).
long long bkk_count(const std::vector<SupportSet>& sets);

// Euler characteristic of a generic complete intersection of k hypersurfaces in
// the n-torus: (-1)^(n-k) * sum over positive compositions d1+..+dk = n of the
// mixed volumes with A_i repeated d_i times.
long long ci_euler(const std::vector<SupportSet>& sets, int n);

// Tropical fan of a generic complete-intersection curve (n-1 supports in
// dimension n, n in {2,3}).
TropicalFan ci_tropical_fan(const std::vector<SupportSet>& sets);

// Genus of a connected generic complete-intersection curve.
long long ci_genus(const std::vector<SupportSet>& sets);

struct Irreducibility {
    enum Kind { Empty, Reducible, Irreducible } kind = Irreducible;
    long long components = 1; // meaningful for Reducible in the enumerated cases
    std::string reason;
};

Irreducibility irreducibility_check(const std::vector<SupportSet>& sets, int n);

struct MvLengthVerdict {
    enum Shape { None, VerticalLine, Stripe, SpikedLine } shape = None;
    bool strict = false;
    long long mv = 0;   // MV(P, J(P)) with J(x,y) = (x,-y)
    long long twoL = 0; // twice the length of the horizontal shadow
};

// MV(P, J(P)) > 2 L(P) holds exactly outside three exceptional shapes; evaluates
// both sides and asserts the equivalence.
MvLengthVerdict mv_vs_length(const SupportSet& P);

} // namespace symcurve
