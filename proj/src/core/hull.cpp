#include "hull.hpp"

#include <map>
#include <set>

#include "lattice.hpp"

namespace symcurve {

Hull2 hull2(const std::vector<Vec>& points) {
    std::vector<Vec> p(points);
    std::sort(p.begin(), p.end());
    p.erase(std::unique(p.begin(), p.end()), p.end());
    Hull2 h;
    if (p.empty()) throw precondition_error("hull of empty set");
    if (p.size() == 1) {
        h.affdim = 0;
        h.cycle = p;
        return h;
    }
    bool collinear = true;
    for (size_t i = 2; i < p.size() && collinear; ++i)
        if (cross2(p[i] - p[0], p[1] - p[0]) != 0) collinear = false;
    if (collinear) {
        h.affdim = 1;
        h.cycle = {p.front(), p.back()};
        return h;
    }
    // Andrew monotone chain with strict turns
    auto chain = [&](bool lower) {
        std::vector<Vec> out;
        for (size_t k = 0; k < p.size(); ++k) {
            const Vec& q = p[lower ? k : p.size() - 1 - k];
            while (out.size() >= 2 &&
                   cross2(out[out.size() - 1] - out[out.size() - 2], q - out[out.size() - 2]) <= 0)
                out.pop_back();
            out.push_back(q);
        }
        out.pop_back();
        return out;
    };
    h.affdim = 2;
    h.cycle = chain(true);
    auto upper = chain(false);
    h.cycle.insert(h.cycle.end(), upper.begin(), upper.end());
    return h;
}

namespace {

// Facet enumeration by exhausting triple cross products; adequate for the small
// support sets this library works with.
std::map<Vec, SupportSet> facet_map(const SupportSet& A) {
    std::map<Vec, SupportSet> facets;
    const auto& p = A.pts;
    std::set<Vec> seen;
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = i + 1; j < p.size(); ++j)
            for (size_t k = j + 1; k < p.size(); ++k) {
                Vec n = cross(p[j] - p[i], p[k] - p[i]);
                if (n.is_zero()) continue;
                n = primitive(n);
                for (const Vec& s : {n, -n}) {
                    if (!seen.insert(s).second) continue;
                    SupportSet f = support_face(A, s);
                    if (affine_rank(f.pts, 3) == 2) facets.emplace(s, f);
                }
            }
    return facets;
}

} // namespace

Hull3 hull3(const SupportSet& A) {
    if (A.dim != 3) throw precondition_error("hull3 needs ambient dimension 3");
    Hull3 h;
    h.affdim = A.affdim();
    if (h.affdim == 0) return h;
    if (h.affdim == 1) {
        h.line_dir = primitive(A.pts.back() - A.pts.front());
        // extremes along the direction
        Vec lo = A.pts.front(), hi = A.pts.front();
        for (const auto& q : A.pts) {
            if (dot(h.line_dir, q) < dot(h.line_dir, lo)) lo = q;
            if (dot(h.line_dir, q) > dot(h.line_dir, hi)) hi = q;
        }
        h.line_min = lo;
        h.line_max = hi;
        return h;
    }
    if (h.affdim == 2) {
        Vec d1, d2;
        bool have1 = false;
        for (size_t i = 1; i < A.size() && !have1; ++i)
            if (!(A.pts[i] - A.pts[0]).is_zero()) {
                d1 = A.pts[i] - A.pts[0];
                have1 = true;
            }
        for (size_t i = 1; i < A.size(); ++i) {
            Vec n = cross(d1, A.pts[i] - A.pts[0]);
            if (!n.is_zero()) {
                h.plane_normal = lex_positive(primitive(n));
                return h;
            }
        }
        throw internal_error("planar hull without a normal");
    }
    for (auto& [n, f] : facet_map(A))
        h.facets.push_back(Facet3{n, max_value(A, n), f});
    return h;
}

namespace {

void push_face(std::vector<Face>& out, std::set<SupportSet>& seen, SupportSet f, Vec w, int dim) {
    if (!seen.insert(f).second) return;
    out.push_back(Face{std::move(f), w, dim});
}

// Faces of a planar (or full) polygon given its in-plane cycle, lifting in-plane
// covectors through the plane coordinates.
void polygon_faces(const SupportSet& A, const Hull2& h2, const PlaneCoords& pc,
                   std::vector<Face>& out, std::set<SupportSet>& seen) {
    const auto& cyc = h2.cycle;
    size_t n = cyc.size();
    if (h2.affdim == 1) {
        for (const Vec& end : {cyc.front(), cyc.back()}) {
            Vec dir2 = cyc.back() - cyc.front();
            Vec nrm2(dir2[0], dir2[1]); // any covector separating the endpoints
            if (end == cyc.front()) nrm2 = -nrm2;
            Vec w = pc.lift(nrm2);
            push_face(out, seen, support_face(A, w), w, 0);
        }
        return;
    }
    std::vector<Vec> edge_normals(n);
    for (size_t i = 0; i < n; ++i) {
        Vec d = cyc[(i + 1) % n] - cyc[i];
        edge_normals[i] = primitive(Vec(d[1], -d[0])); // outward for ccw
    }
    for (size_t i = 0; i < n; ++i) {
        Vec w = pc.lift(edge_normals[i]);
        SupportSet e = support_face(A, w);
        push_face(out, seen, e, primitive(w), 1);
        Vec vw = pc.lift(edge_normals[i] + edge_normals[(i + n - 1) % n]);
        SupportSet v = support_face(A, vw);
        if (v.size() != 1) throw internal_error("vertex witness does not expose a vertex");
        push_face(out, seen, v, primitive(vw), 0);
    }
}

} // namespace

std::vector<Face> faces(const SupportSet& A) {
    std::vector<Face> out;
    std::set<SupportSet> seen;
    int ad = A.affdim();

    if (A.dim == 1 || A.dim == 2) {
        // embed in Z^3 with zero padding and reuse the 3D path
        std::vector<Vec> lifted;
        for (const auto& p : A.pts) lifted.push_back(Vec(p[0], A.dim >= 2 ? p[1] : 0, 0));
        auto fs = faces(SupportSet::of(3, lifted));
        for (auto& f : fs) {
            std::vector<Vec> back;
            for (const auto& p : f.pts.pts) back.push_back(A.dim == 1 ? Vec(p[0]) : Vec(p[0], p[1]));
            Vec w(A.dim);
            for (int i = 0; i < A.dim; ++i) w[i] = f.witness[i];
            out.push_back(Face{SupportSet::of(A.dim, back), w, f.dim});
        }
        return out;
    }

    if (ad == 0) {
        out.push_back(Face{A, Vec(3), 0});
        return out;
    }
    Hull3 h = hull3(A);
    if (ad == 1) {
        Vec w = column_reduce(h.line_dir).row(0); // pairs to 1 with the direction
        push_face(out, seen, support_face(A, w), w, 0);
        push_face(out, seen, support_face(A, -w), -w, 0);
        out.push_back(Face{A, Vec(3), 1});
        return out;
    }
    if (ad == 2) {
        PlaneCoords pc = plane_coords(h.plane_normal);
        std::vector<Vec> flat;
        for (const auto& p : A.pts) flat.push_back(pc.map(p));
        polygon_faces(A, hull2(flat), pc, out, seen);
        out.push_back(Face{A, Vec(3), 2});
        std::sort(out.begin(), out.end(), [](const Face& a, const Face& b) {
            if (a.dim != b.dim) return a.dim < b.dim;
            return a.pts < b.pts;
        });
        return out;
    }

    Hull3& h3 = h;
    // facets
    for (const auto& f : h3.facets) push_face(out, seen, f.face, f.normal, 2);
    // edges: intersections of adjacent facet point sets; witness is the
    // re-primitivized sum of the two facet normals
    for (size_t i = 0; i < h3.facets.size(); ++i)
        for (size_t j = i + 1; j < h3.facets.size(); ++j) {
            std::vector<Vec> common;
            for (const auto& p : h3.facets[i].face.pts)
                if (h3.facets[j].face.contains(p)) common.push_back(p);
            if (common.size() < 2) continue;
            SupportSet e = SupportSet::of(3, common);
            if (affine_rank(e.pts, 3) != 1) continue;
            Vec w = primitive(h3.facets[i].normal + h3.facets[j].normal);
            if (!(support_face(A, w) == e)) throw internal_error("edge witness does not expose the edge");
            push_face(out, seen, e, w, 1);
        }
    // vertices: points on at least three facets
    for (const auto& p : A.pts) {
        Vec sum(3);
        int cnt = 0;
        for (const auto& f : h3.facets)
            if (f.face.contains(p)) {
                sum = sum + f.normal;
                ++cnt;
            }
        if (cnt < 3) continue;
        Vec w = primitive(sum);
        SupportSet v = support_face(A, w);
        if (!(v.size() == 1 && v.pts[0] == p)) throw internal_error("vertex witness does not expose the vertex");
        push_face(out, seen, v, w, 0);
    }
    out.push_back(Face{A, Vec(3), 3});
    std::sort(out.begin(), out.end(), [](const Face& a, const Face& b) {
        if (a.dim != b.dim) return a.dim < b.dim;
        return a.pts < b.pts;
    });
    return out;
}

} // namespace symcurve
