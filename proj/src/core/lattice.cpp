#include "lattice.hpp"

#include <set>

namespace symcurve {

PlaneCoords plane_coords(const Vec& gamma) {
    if (content(gamma) != 1) throw precondition_error("plane coordinates need a primitive covector");
    PlaneCoords pc;
    pc.V = row_reduce(gamma);
    pc.Vinv = pc.V.unimodular_inverse();
    return pc;
}

LineQuotient line_quotient(const Vec& dir) {
    if (content(dir) != 1) throw precondition_error("line quotient needs a primitive direction");
    LineQuotient q;
    q.U = column_reduce(dir);
    q.Uinv = q.U.unimodular_inverse();
    return q;
}

long long shoelace(const std::vector<Vec>& cyc) {
    long long s = 0;
    size_t n = cyc.size();
    for (size_t i = 0; i < n; ++i) s = cadd(s, cross2(cyc[i], cyc[(i + 1) % n]));
    return s;
}

long long lattice_length(const SupportSet& A) {
    if (A.size() == 1) return 0;
    if (A.affdim() > 1) throw precondition_error("lattice_length needs a collinear set");
    Vec d = primitive(A.pts.back() - A.pts.front());
    long long lo = dot(d, A.pts.front()), hi = lo;
    for (const auto& p : A.pts) {
        lo = std::min(lo, dot(d, p));
        hi = std::max(hi, dot(d, p));
    }
    // d is primitive, so parameter differences count lattice steps exactly
    long long span = csub(hi, lo);
    long long dd = dot(d, d);
    return exact_div(span, dd, "lattice_length parameterization");
}

long long lattice_area(const SupportSet& A) {
    if (A.dim != 2) throw precondition_error("lattice_area needs ambient dimension 2");
    Hull2 h = hull2(A.pts);
    if (h.affdim < 2) return 0;
    long long s = shoelace(h.cycle);
    if (s <= 0) throw internal_error("hull cycle is not counterclockwise");
    return s;
}

namespace {

long long in_plane_area(const std::vector<Vec>& pts3, const PlaneCoords& pc) {
    std::vector<Vec> flat;
    flat.reserve(pts3.size());
    for (const auto& p : pts3) flat.push_back(pc.map(p));
    Hull2 h = hull2(flat);
    if (h.affdim < 2) return 0;
    return shoelace(h.cycle);
}

} // namespace

long long lattice_volume3_of_sum(const std::vector<const SupportSet*>& summands) {
    if (summands.empty()) throw precondition_error("empty Minkowski sum");
    for (const auto* s : summands)
        if (s->dim != 3) throw precondition_error("lattice_volume3 needs ambient dimension 3");

    // rank of the joint direction space
    std::vector<Vec> diffs;
    for (const auto* s : summands)
        for (size_t i = 1; i < s->size(); ++i) diffs.push_back(s->pts[i] - s->pts[0]);
    if (diffs.empty() || smith_diagonal(diffs, 3).size() < 3) return 0;

    // Candidate facet normals of the sum: primitive cross products of pairwise
    // difference directions (covers facet normals of every summand too).
    std::set<Vec> dirs;
    for (const auto* s : summands)
        for (size_t i = 0; i < s->size(); ++i)
            for (size_t j = i + 1; j < s->size(); ++j)
                dirs.insert(lex_positive(primitive(s->pts[j] - s->pts[i])));
    std::vector<Vec> dv(dirs.begin(), dirs.end());
    std::set<Vec> normals;
    for (size_t i = 0; i < dv.size(); ++i)
        for (size_t j = i + 1; j < dv.size(); ++j) {
            Vec n = cross(dv[i], dv[j]);
            if (n.is_zero()) continue;
            n = primitive(n);
            normals.insert(n);
            normals.insert(-n);
        }

    // 6V = sum over facets of (support value) * (in-plane lattice area of the facet)
    long long six_vol = 0;
    for (const auto& n : normals) {
        std::vector<Vec> face_sum{Vec(0, 0, 0)};
        long long h = 0;
        for (const auto* s : summands) {
            SupportSet f = support_face(*s, n);
            h = cadd(h, max_value(*s, n));
            std::vector<Vec> next;
            next.reserve(face_sum.size() * f.size());
            for (const auto& a : face_sum)
                for (const auto& b : f.pts) next.push_back(a + b);
            std::sort(next.begin(), next.end());
            next.erase(std::unique(next.begin(), next.end()), next.end());
            face_sum = std::move(next);
        }
        if (affine_rank(face_sum, 3) != 2) continue;
        PlaneCoords pc = plane_coords(n);
        six_vol = cadd(six_vol, cmul(h, in_plane_area(face_sum, pc)));
    }
    if (six_vol < 0) throw internal_error("negative volume");
    return six_vol;
}

long long lattice_volume3(const SupportSet& A) {
    return lattice_volume3_of_sum({&A});
}

long long mixed_area(const SupportSet& P, const SupportSet& Q) {
    if (P.dim != 2 || Q.dim != 2) throw precondition_error("mixed_area needs ambient dimension 2");
    long long s = lattice_area(minkowski_sum(P, Q));
    s = csub(s, lattice_area(P));
    s = csub(s, lattice_area(Q));
    return exact_div(s, 2, "mixed area polarization");
}

long long mixed_volume3(const SupportSet& P, const SupportSet& Q, const SupportSet& R) {
    if (P.dim != 3 || Q.dim != 3 || R.dim != 3)
        throw precondition_error("mixed_volume3 needs ambient dimension 3");
    long long s = lattice_volume3_of_sum({&P, &Q, &R});
    s = csub(s, lattice_volume3_of_sum({&P, &Q}));
    s = csub(s, lattice_volume3_of_sum({&P, &R}));
    s = csub(s, lattice_volume3_of_sum({&Q, &R}));
    s = cadd(s, lattice_volume3(P));
    s = cadd(s, lattice_volume3(Q));
    s = cadd(s, lattice_volume3(R));
    return exact_div(s, 6, "mixed volume polarization");
}

long long mixed_area_in_plane(const SupportSet& F1, const SupportSet& F2, const Vec& gamma) {
    if (F1.dim != 3 || F2.dim != 3 || gamma.dim != 3)
        throw precondition_error("mixed_area_in_plane needs ambient dimension 3");
    Vec g = primitive(gamma);
    for (const SupportSet* F : {&F1, &F2}) {
        long long v = dot(g, F->pts.front());
        for (const auto& p : F->pts)
            if (dot(g, p) != v) throw precondition_error("set does not lie in a plane {gamma = const}");
    }
    PlaneCoords pc = plane_coords(g);
    auto flatten = [&](const SupportSet& F) {
        std::vector<Vec> flat;
        for (const auto& p : F.pts) flat.push_back(pc.map(p));
        return SupportSet::of(2, std::move(flat));
    };
    return mixed_area(flatten(F1), flatten(F2));
}

SupportSet project_along(const SupportSet& A, const Vec& mu) {
    if (A.dim != 3) throw precondition_error("project_along needs ambient dimension 3");
    if (mu.dim != 3 || mu.is_zero() || content(mu) != 1)
        throw precondition_error("projection direction must be a primitive nonzero vector");
    std::vector<Vec> img;
    img.reserve(A.size());
    if (mu == Vec(1, -1, 0) || mu == Vec(-1, 1, 0)) {
        // pinned map for the antidiagonal, so reports are reproducible
        for (const auto& p : A.pts) img.push_back(Vec(cadd(p[0], p[1]), p[2]));
    } else if (mu == Vec(0, 0, 1) || mu == Vec(0, 0, -1)) {
        for (const auto& p : A.pts) img.push_back(Vec(p[0], p[1]));
    } else if (mu == Vec(0, 1, 0) || mu == Vec(0, -1, 0)) {
        for (const auto& p : A.pts) img.push_back(Vec(p[0], p[2]));
    } else if (mu == Vec(1, 0, 0) || mu == Vec(-1, 0, 0)) {
        for (const auto& p : A.pts) img.push_back(Vec(p[1], p[2]));
    } else {
        LineQuotient q = line_quotient(mu);
        for (const auto& p : A.pts) img.push_back(q.map(p));
    }
    return SupportSet::of(2, std::move(img));
}

long long interior_lattice_points(const SupportSet& A) {
    if (A.dim != 2) throw precondition_error("interior_lattice_points needs ambient dimension 2");
    Hull2 h = hull2(A.pts);
    if (h.affdim < 2) return 0;
    long long x0 = h.cycle[0][0], x1 = x0, y0 = h.cycle[0][1], y1 = y0;
    for (const auto& v : h.cycle) {
        x0 = std::min(x0, v[0]);
        x1 = std::max(x1, v[0]);
        y0 = std::min(y0, v[1]);
        y1 = std::max(y1, v[1]);
    }
    long long count = 0;
    size_t n = h.cycle.size();
    for (long long x = x0 + 1; x < x1; ++x)
        for (long long y = y0 + 1; y < y1; ++y) {
            Vec p(x, y);
            bool inside = true;
            for (size_t i = 0; i < n && inside; ++i)
                if (cross2(h.cycle[(i + 1) % n] - h.cycle[i], p - h.cycle[i]) <= 0) inside = false;
            if (inside) ++count;
        }
    return count;
}

SublatticeIndex sublattice_index(const SupportSet& A) {
    std::vector<Vec> diffs;
    for (size_t i = 1; i < A.size(); ++i) diffs.push_back(A.pts[i] - A.pts[0]);
    SublatticeIndex r;
    if (diffs.empty()) return r;
    auto diag = smith_diagonal(diffs, A.dim);
    r.rank = static_cast<int>(diag.size());
    for (long long d : diag) r.index = cmul(r.index, d);
    return r;
}

} // namespace symcurve
