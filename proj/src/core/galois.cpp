#include "galois.hpp"

namespace symcurve {

FamilySupport FamilySupport::from_points(const SupportSet& s) {
    if (s.dim != 2) throw precondition_error("family support needs ambient dimension 2");
    return FamilySupport{s};
}

FamilySupport FamilySupport::from_coefficients(const std::map<long long, std::vector<long long>>& coeffs) {
    std::vector<Vec> pts;
    for (const auto& [j, ts] : coeffs)
        for (long long t : ts) pts.push_back(Vec(j, t));
    if (pts.empty()) throw precondition_error("family support is empty");
    return FamilySupport{SupportSet::of(2, std::move(pts))};
}

std::vector<long long> FamilySupport::x_exponents() const {
    std::vector<long long> xs;
    for (const auto& p : pts.pts) xs.push_back(p[0]);
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    return xs;
}

SupportSet FamilySupport::column(long long x) const {
    std::vector<Vec> ts;
    for (const auto& p : pts.pts)
        if (p[0] == x) ts.push_back(Vec(p[1]));
    return SupportSet::of(1, std::move(ts));
}

std::optional<long long> family_d(const FamilySupport& F) {
    auto xs = F.x_exponents();
    if (xs.empty()) throw precondition_error("family support is empty");
    if (xs.size() == 1) return std::nullopt;
    long long g = 0;
    for (long long x : xs) g = gcd_ll(g, csub(x, xs.front()));
    return g;
}

BranchCounts branch_counts(const FamilySupport& F) {
    auto xs = F.x_exponents();
    if (xs.size() < 2) throw precondition_error("branch counts need at least two occupied exponents");
    BranchCounts bc;
    bc.n = xs.front();
    bc.N = xs.back();
    bc.q = csub(xs[1], xs.front());
    bc.Q = csub(xs.back(), xs[xs.size() - 2]);
    bc.sharp1 = lattice_length(F.column(bc.n));
    bc.sharp2 = lattice_length(F.column(bc.N));
    long long vol = lattice_area(F.pts);
    bc.sharp3 = csub(vol, cadd(cmul(bc.Q, bc.sharp2), cmul(bc.q, bc.sharp1)));
    if (bc.sharp3 < 0) throw internal_error("negative branch count");
    // Riemann-Hurwitz: -(q-1)#1 - (Q-1)#2 - #3 matches the Euler characteristic
    // -Vol_Z(A) + Vol_Z(A_N) + Vol_Z(A_n)
    long long lhs = cneg(cadd(cadd(cmul(csub(bc.q, 1), bc.sharp1), cmul(csub(bc.Q, 1), bc.sharp2)), bc.sharp3));
    long long rhs = cadd(csub(bc.sharp2, vol), bc.sharp1);
    bc.rh_identity_ok = lhs == rhs;
    if (!bc.rh_identity_ok) throw internal_error("Riemann-Hurwitz identity violated");
    return bc;
}

GaloisVerdict galois_verdict(const FamilySupport& F) {
    GaloisVerdict v;
    auto xs = F.x_exponents();
    v.d = family_d(F);
    if (!v.d) {
        v.n = v.N = xs.front();
        v.full_symmetric = true;
        v.reason = "degenerate family: a single occupied exponent, no nonzero roots to permute";
        return v;
    }
    BranchCounts bc = branch_counts(F);
    v.n = bc.n;
    v.N = bc.N;
    v.q = bc.q;
    v.Q = bc.Q;
    v.sharp1 = bc.sharp1;
    v.sharp2 = bc.sharp2;
    v.sharp3 = bc.sharp3;
    v.rh_identity_ok = bc.rh_identity_ok;

    long long deg = csub(v.N, v.n);
    long long d = *v.d;
    bool collinear = F.pts.affdim() <= 1;

    if (deg == 1) {
        v.full_symmetric = true;
        v.reason = "a single nonzero root; the symmetric group on one letter is trivial";
        return v;
    }
    if (d == 1) {
        if (!collinear) {
            v.full_symmetric = true;
            v.reason = "d = 1 and the support is not contained in an affine line";
        } else {
            v.full_symmetric = false;
            v.reason = "support lies on an affine line: the covering is trivial, and so is the monodromy";
        }
        return v;
    }
    if (deg > d) {
        v.full_symmetric = false;
        v.reason = "necklace obstruction: more than one necklace of length d > 1";
        return v;
    }
    // deg == d >= 2 here, so only the extreme exponents are occupied
    if (d > 2) {
        v.full_symmetric = false;
        v.reason = "necklace obstruction: a single necklace of length > 2";
        return v;
    }
    if (F.pts.size() != 2) {
        v.full_symmetric = false;
        v.reason = "necklace obstruction: d = 2 with more than two support points";
        return v;
    }
    Vec sum = F.pts.pts[0] + F.pts.pts[1];
    if (sum[0] % 2 == 0 && sum[1] % 2 == 0) {
        v.full_symmetric = false;
        v.reason = "two points whose barycenter lies in the lattice";
    } else {
        v.full_symmetric = true;
        v.reason = "d = N - n = 2 and the barycenter of the two points is not in the lattice";
    }
    return v;
}

} // namespace symcurve
