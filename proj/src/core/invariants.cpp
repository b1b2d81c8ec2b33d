#include "invariants.hpp"

#include <set>

#include "bkk.hpp"

namespace symcurve {

namespace {

std::vector<Vec> facetish_normals(const SupportSet& S) {
    Hull3 h = hull3(S);
    std::vector<Vec> out;
    if (h.affdim == 3)
        for (const auto& f : h.facets) out.push_back(f.normal);
    else if (h.affdim == 2) {
        out.push_back(h.plane_normal);
        out.push_back(-h.plane_normal);
    }
    return out;
}

bool contains_all(const SupportSet& big, const SupportSet& small) {
    for (const auto& p : small.pts)
        if (!big.contains(p)) return false;
    return true;
}

long long blinder_weight_sum(const std::vector<BlinderRecord>& recs) {
    long long s = 0;
    for (const auto& b : recs) s = cadd(s, cmul(b.h, b.length));
    return s;
}

} // namespace

long long euler_symmetric(const SupportSet& A) {
    auto d = denominator(A);
    if (!d) throw precondition_error("euler_symmetric is undefined for type D");
    SupportSet IA = involute(A);
    long long e = cneg(mixed_volume3(A, IA, minkowski_sum(A, IA)));
    e = cadd(e, cmul(*d, sharp_A(A)));
    for (const auto& b : blinders(A)) e = cadd(e, cmul(b.covol, b.length));
    return e;
}

long long euler_proper(const SupportSet& A) {
    Classification cls = classify(A);
    if (cls.exceptional()) throw precondition_error("euler_proper needs a non-exceptional support");
    long long d = *cls.denominator;
    long long e = euler_symmetric(A);
    e = cadd(e, cmul(2 * d, sharp_A(A)));
    e = cadd(e, cmul(d, blinder_weight_sum(blinders(A))));
    return e;
}

TropicalFan tropical_fan_symmetric(const SupportSet& A) {
    if (!denominator(A)) throw precondition_error("tropical fan is undefined for type D");
    SupportSet IA = involute(A);
    auto recs = blinders(A);

    std::set<Vec> candidates;
    for (const auto& n : facetish_normals(A)) candidates.insert(n);
    for (const auto& n : facetish_normals(IA)) candidates.insert(n);
    for (const auto& n : facetish_normals(minkowski_sum(A, IA))) candidates.insert(n);
    for (const auto& rec : recs) {
        for (const auto& g : rec.critical) candidates.insert(g);
        for (const auto& g : rec.adjacent) candidates.insert(g);
    }

    TropicalFan fan;
    for (const auto& g : candidates) {
        SupportSet fa = support_face(A, g);
        SupportSet fi = support_face(IA, g);

        const BlinderRecord* crit = nullptr;
        for (const auto& rec : recs)
            if (fa == rec.edge && fi == involute(rec.edge)) {
                crit = &rec;
                break;
            }
        if (crit) {
            // exposes exactly the blinder pair: counts via the coblinder face
            Vec gq = crit->quot.descend(g);
            SupportSet face = support_face(crit->coblinder, gq);
            if (face.size() < 2) continue; // not critical, and MV(E, I(E)) = 0
            fan.add(g, cmul(crit->length, lattice_length(face)));
            continue;
        }

        long long correction = 0;
        for (const auto& rec : recs) {
            SupportSet ie = involute(rec.edge);
            if (contains_all(fa, rec.edge) && contains_all(fi, ie) &&
                !(fa == rec.edge && fi == ie))
                correction = cadd(correction, cmul(rec.length, rec.l));
        }
        long long mv = mixed_area_in_plane(fa, fi, g);
        long long mult = csub(mv, correction);
        if (mult < 0) throw internal_error("adjacent ray multiplicity went negative");
        if (mult > 0) fan.add(g, mult);
    }
    fan.normalize();
    assert_balanced(fan, "symmetric curve fan");
    return fan;
}

TropicalFan tropical_fan_proper(const SupportSet& A) {
    Classification cls = classify(A);
    if (cls.exceptional()) throw precondition_error("tropical_fan_proper needs a non-exceptional support");
    TropicalFan total = tropical_fan_symmetric(A);
    TropicalFan diag = pullback_antidiagonal(dual_fan_2d(project_along(A, antidiagonal())));
    TropicalFan proper = fan_subtract(total, *cls.denominator, diag);
    assert_balanced(proper, "proper part fan");
    return proper;
}

long long genus_proper(const SupportSet& A) {
    long long e = euler_proper(A);
    long long s = tropical_fan_proper(A).multiplicity_sum();
    long long twice = csub(csub(2, e), s);
    if (twice % 2 != 0) throw internal_error("genus parity violated");
    long long g = twice / 2;
    if (g < 0) throw internal_error("negative genus");
    return g;
}

CurveReport curve_report(const SupportSet& A) {
    if (A.size() < 2) throw precondition_error("curve_report needs at least two points");
    CurveReport r;
    r.cls = classify(A);
    CurveType ty = r.cls.canonical;

    if (ty == CurveType::D) {
        r.kind = "surface";
        r.connected = false;
        r.connectivity_reason =
            "support lies in a plane parallel to the diagonal plane; the two equations "
            "agree up to a monomial and cut out the surface f = 0";
        return r;
    }
    if (ty == CurveType::E) {
        r.kind = "empty";
        r.d = r.cls.denominator;
        r.connected = false;
        r.connectivity_reason = "support lies on an antidiagonal line; the curve is empty";
        r.components_diagonal = 0;
        r.components_proper = 0;
        r.components_total = 0;
        return r;
    }

    r.kind = "curve";
    long long d = *r.cls.denominator;
    r.d = d;
    r.blinders = blinders(A);
    r.sharp = sharp_A(A);
    r.euler_total = euler_symmetric(A);
    r.fan_total = tropical_fan_symmetric(A);
    r.blinder_sum = blinder_weight_sum(r.blinders);
    r.blinder_sum_scaled = cmul(d, *r.blinder_sum);

    SupportSet Am = project_along(A, antidiagonal());

    if (ty == CurveType::C1) {
        long long count = mixed_area_in_plane(A, involute(A), *r.cls.c1_normal);
        r.components_total = count;
        r.connected = count == 1;
        r.connectivity_reason = count == 1
            ? "a single shifted one-dimensional subtorus"
            : "several disjoint shifted copies of a one-dimensional subtorus";
        return r;
    }

    if (ty == CurveType::C2) {
        long long q = *r.cls.q;
        auto verdict = irreducibility_check({Am}, 2);
        r.sheet_irreducible = verdict.kind == Irreducibility::Irreducible;
        r.components_total = q;
        r.connected = q == 1;
        r.connectivity_reason = q == 1 ? "a single diagonal sheet"
                                       : "disjoint sheets over the roots of the antidiagonal binomial";
        return r;
    }

    // diagonal components are genuine plane curves supported at A/m from here on
    DiagonalInfo di;
    di.count = d;
    di.support = Am;
    di.euler_each = cneg(lattice_area(Am));
    di.genus_each = interior_lattice_points(Am);
    di.intersections_each = *r.sharp;
    r.diagonal = di;

    if (ty == CurveType::I10) {
        r.components_diagonal = d;
        r.components_proper = 0;
        r.components_total = d;
        r.connected = d == 1;
        r.connectivity_reason = d == 1 ? "one diagonal component and empty proper part"
                                       : "several diagonal components and empty proper part";
        return r;
    }
    if (ty == CurveType::I1) {
        auto lv = *r.cls.i1_levels;
        std::vector<Vec> lower, upper;
        for (const auto& p : A.pts) (t_of(p) == lv[0] ? lower : upper).push_back(p);
        long long copies = mixed_area_in_plane(SupportSet::of(3, lower), SupportSet::of(3, upper),
                                               Vec(1, -1, 0));
        r.components_diagonal = d;
        r.components_proper = copies;
        r.components_total = cadd(d, copies);
        r.connected = true;
        r.connectivity_reason = "every proper component meets every diagonal component";
        return r;
    }
    if (ty == CurveType::I2) {
        r.components_diagonal = d;
        r.components_proper = r.cls.d_prime;
        r.components_total = cadd(d, *r.cls.d_prime);
        r.connected = true;
        r.connectivity_reason = "every proper component meets every diagonal component";
        return r;
    }

    r.euler_proper = euler_proper(A);
    r.fan_proper = tropical_fan_proper(A);
    r.ray_sum = r.fan_proper->multiplicity_sum();
    r.genus_proper = genus_proper(A);
    r.components_diagonal = d;
    r.components_proper = 1;
    r.components_total = cadd(d, 1);
    r.singular_points_total = cmul(d, *r.sharp);
    r.connected = true;
    r.connectivity_reason =
        "the irreducible proper part meets every diagonal component; all crossings transversal";
    return r;
}

} // namespace symcurve
