#include "involution.hpp"

#include <map>
#include <set>

namespace symcurve {

SupportSet involute(const SupportSet& A) {
    if (A.dim != 3) throw precondition_error("involution acts on Z^3");
    std::vector<Vec> q;
    q.reserve(A.size());
    for (const auto& p : A.pts) q.push_back(involute(p));
    return SupportSet::of(3, std::move(q));
}

const char* curve_type_name(CurveType t) {
    switch (t) {
        case CurveType::D: return "D";
        case CurveType::E: return "E";
        case CurveType::C1: return "C1";
        case CurveType::C2: return "C2";
        case CurveType::I10: return "I10";
        case CurveType::I1: return "I1";
        case CurveType::I2: return "I2";
        default: return "NonExceptional";
    }
}

const char* witness_shape_name(WitnessShape s) {
    switch (s) {
        case WitnessShape::Triangle: return "Triangle";
        case WitnessShape::SkewTetra: return "SkewTetra";
        case WitnessShape::HighTetra: return "HighTetra";
        default: return "LowTetra";
    }
}

std::optional<long long> denominator(const SupportSet& A) {
    if (A.dim != 3) throw precondition_error("denominator needs ambient dimension 3");
    if (A.size() < 2) throw precondition_error("denominator needs at least two points");
    long long t0 = t_of(A.pts.front());
    long long g = 0;
    for (const auto& p : A.pts) g = gcd_ll(g, csub(t_of(p), t0));
    if (g == 0) return std::nullopt; // t constant: type D
    return g;
}

namespace {

// mirror conjugated by a shift of the diagonal plane to level tau:
// I_tau(x) = I(x) + tau * m
Vec mirror_at(const Vec& x, long long tau) {
    return involute(x) + tau * antidiagonal();
}

bool collinear(const std::vector<Vec>& pts) {
    return affine_rank(pts, pts.empty() ? 3 : pts.front().dim) <= 1;
}

std::optional<Vec> common_direction(const std::vector<Vec>& pts) {
    for (size_t i = 1; i < pts.size(); ++i)
        if (!(pts[i] - pts[0]).is_zero()) return lex_positive(primitive(pts[i] - pts[0]));
    return std::nullopt;
}

std::map<long long, std::vector<Vec>> t_levels(const SupportSet& A) {
    std::map<long long, std::vector<Vec>> lv;
    for (const auto& p : A.pts) lv[t_of(p)].push_back(p);
    return lv;
}

} // namespace

Classification classify(const SupportSet& A) {
    if (A.dim != 3) throw precondition_error("classify needs ambient dimension 3");
    if (A.size() < 2) throw precondition_error("classify needs at least two points");
    Classification r;
    auto levels = t_levels(A);
    r.denominator = denominator(A);

    r.flag_D = levels.size() == 1;

    // E: collinear with antidiagonal direction
    if (A.affdim() <= 1) {
        Vec d = lex_positive(primitive(A.pts.back() - A.pts.front()));
        if (d == Vec(1, -1, 0)) {
            r.flag_E = true;
            r.e_direction = d;
        }
    }

    // C1: some primitive s with s(m) = 0 constant on A, i.e. the pairs
    // (d1+d2, d3) over differences of A have rank <= 1
    {
        std::vector<Vec> pairs;
        for (size_t i = 1; i < A.size(); ++i) {
            Vec d = A.pts[i] - A.pts[0];
            pairs.push_back(Vec(cadd(d[0], d[1]), d[2]));
        }
        Vec first(2);
        bool have = false, rank1 = true;
        for (const auto& p : pairs) {
            if (p.is_zero()) continue;
            if (!have) {
                first = p;
                have = true;
            } else if (cross2(first, p) != 0) {
                rank1 = false;
                break;
            }
        }
        if (rank1) {
            r.flag_C1 = true;
            Vec xz = have ? primitive(Vec(first[1], cneg(first[0]))) : Vec(1, 0);
            r.c1_normal = lex_positive(Vec(xz[0], xz[0], xz[1]));
        }
    }

    // C2: one t-level removed leaves a set collinear along the antidiagonal
    {
        std::optional<long long> best_tau;
        size_t best_sz = 0;
        for (const auto& [tau, lv] : levels) {
            std::vector<Vec> rest;
            for (const auto& p : A.pts)
                if (t_of(p) != tau) rest.push_back(p);
            bool ok = rest.size() <= 1;
            if (!ok) {
                auto d = common_direction(rest);
                ok = collinear(rest) && d && *d == Vec(1, -1, 0);
            }
            if (ok && (!best_tau || lv.size() > best_sz)) {
                best_tau = tau;
                best_sz = lv.size();
            }
        }
        if (best_tau) {
            r.flag_C2 = true;
            r.c2_plane_t = *best_tau;
            std::vector<Vec> seg;
            for (const auto& p : A.pts)
                if (t_of(p) != *best_tau) {
                    seg.push_back(p);
                    seg.push_back(mirror_at(p, *best_tau));
                }
            if (!seg.empty()) r.q = lattice_length(SupportSet::of(3, seg));
        }
    }

    // I1 / I10: at most two t-levels
    r.flag_I1 = levels.size() <= 2;
    if (r.flag_I1) {
        bool lines = true;
        std::optional<Vec> dir;
        for (const auto& [tau, lv] : levels) {
            if (!collinear(lv)) {
                lines = false;
                break;
            }
            auto d = common_direction(lv);
            if (d) {
                if (dir && !(*dir == *d)) lines = false;
                dir = d;
            }
        }
        if (lines) {
            r.flag_I10 = true;
            if (dir) r.i10_direction = dir;
        }
        if (levels.size() == 2) {
            auto it = levels.begin();
            long long a = it->first;
            long long b = std::next(it)->first;
            r.i1_levels = std::array<long long, 2>{a, b};
        }
    }

    // I2: t-levels fit {tau - c, tau, tau + c}; after mirroring the bottom level
    // through the tau-plane, it must line up with the top level
    {
        std::vector<long long> ts;
        for (const auto& [tau, lv] : levels) ts.push_back(tau);
        auto try_pattern = [&](long long tau, long long c) -> bool {
            std::vector<Vec> line;
            for (const auto& p : A.pts) {
                long long t = t_of(p);
                if (t == tau + c) line.push_back(p);
                else if (t == tau - c) line.push_back(mirror_at(p, tau));
                else if (t != tau) return false;
            }
            if (!collinear(line)) return false;
            if (!r.flag_I2) {
                r.flag_I2 = true;
                r.i2_tau = tau;
                r.i2_c = c;
                if (!line.empty()) {
                    auto seg = SupportSet::of(3, line);
                    r.d_prime = lattice_length(seg);
                    auto d = common_direction(seg.pts);
                    if (d) r.i2_direction = d;
                }
            }
            return true;
        };
        if (ts.size() == 3 && csub(ts[1], ts[0]) == csub(ts[2], ts[1]))
            try_pattern(ts[1], csub(ts[1], ts[0]));
        if (ts.size() == 2) {
            long long gap = csub(ts[1], ts[0]);
            try_pattern(ts[0], gap);                       // plane below, line above
            try_pattern(ts[1], gap);                       // plane above, line below
            if ((cadd(ts[0], ts[1]) % 2) == 0)
                try_pattern(cadd(ts[0], ts[1]) / 2, gap / 2); // two mirror lines
        }
    }

    if (r.flag_D) r.canonical = CurveType::D;
    else if (r.flag_E) r.canonical = CurveType::E;
    else if (r.flag_C1) r.canonical = CurveType::C1;
    else if (r.flag_C2) r.canonical = CurveType::C2;
    else if (r.flag_I10) r.canonical = CurveType::I10;
    else if (r.flag_I1) r.canonical = CurveType::I1;
    else if (r.flag_I2) r.canonical = CurveType::I2;
    else r.canonical = CurveType::NonExceptional;
    return r;
}

namespace {

bool contains_all(const SupportSet& big, const SupportSet& small) {
    for (const auto& p : small.pts)
        if (!big.contains(p)) return false;
    return true;
}

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

} // namespace

std::vector<BlinderRecord> blinders(const SupportSet& A) {
    if (!denominator(A)) throw precondition_error("blinders are undefined for type D");
    SupportSet IA = involute(A);
    std::vector<BlinderRecord> out;

    std::vector<Vec> facet_pool = facetish_normals(A);
    for (const auto& n : facetish_normals(IA)) facet_pool.push_back(n);
    std::sort(facet_pool.begin(), facet_pool.end());
    facet_pool.erase(std::unique(facet_pool.begin(), facet_pool.end()), facet_pool.end());

    for (const auto& f : faces(A)) {
        if (f.dim != 1 || f.pts.size() == A.size()) continue;
        Vec delta = primitive(f.pts.pts.back() - f.pts.pts.front());
        if (t_of(delta) != 0) continue; // edge must be parallel to the diagonal plane

        // unique gamma with gamma(m) = 0 and gamma(delta) = 0, sign chosen to expose E
        Vec xz = primitive(Vec(delta[2], cneg(cmul(2, delta[0]))));
        BlinderRecord rec;
        bool exposed = false;
        for (const Vec& g : {Vec(xz[0], xz[0], xz[1]), -Vec(xz[0], xz[0], xz[1])}) {
            if (support_face(A, g) == f.pts) {
                rec.gamma = g;
                exposed = true;
                break;
            }
        }
        if (!exposed) continue;
        // gamma(m) = 0 makes gamma I-symmetric, so the mirror edge is exposed too
        if (!(support_face(IA, rec.gamma) == involute(f.pts)))
            throw internal_error("blinder covector does not expose the mirror edge");

        rec.edge = f.pts;
        rec.direction = delta;
        rec.plane_t = t_of(f.pts.pts.front());
        rec.length = lattice_length(f.pts);

        long long ge = dot(rec.gamma, f.pts.pts.front());
        bool any = false;
        long long other = 0;
        for (const auto& p : A.pts) {
            if (t_of(p) == rec.plane_t) continue;
            long long v = dot(rec.gamma, p);
            if (!any || v > other) other = v;
            any = true;
        }
        if (!any) throw internal_error("type-D support slipped through the blinder guard");
        rec.h = csub(ge, other);
        if (rec.h < 1) throw internal_error("blinder multiplicity must be positive");

        // coblinder: shift a point of E to 0, take (A ∪ I(A)) off the diagonal
        // plane, project along the edge direction
        rec.base = f.pts.pts.front();
        rec.quot = line_quotient(delta);
        auto build_coblinder = [&](const Vec& base) {
            std::vector<Vec> img;
            SupportSet shifted = A.translated(-base);
            SupportSet mirrored = involute(shifted);
            for (const SupportSet* S : {&shifted, &mirrored})
                for (const auto& p : S->pts)
                    if (t_of(p) != 0) img.push_back(rec.quot.map(p));
            return SupportSet::of(2, std::move(img));
        };
        rec.coblinder = build_coblinder(rec.base);
        if (f.pts.size() > 1 && !(build_coblinder(f.pts.pts[1]) == rec.coblinder))
            throw internal_error("coblinder depends on the base point");

        std::vector<Vec> with_zero = rec.coblinder.pts;
        with_zero.push_back(Vec(0, 0));
        SupportSet cob0 = SupportSet::of(2, with_zero);
        rec.covol = csub(lattice_area(cob0), lattice_area(rec.coblinder));
        if (rec.covol < 1) throw internal_error("blinder covolume must be positive");

        // blinder distance: for each hull edge of conv(A_E ∪ {0}) at the origin,
        // the least multiple of its primitive direction that lies in A_E
        Hull2 hz = hull2(cob0.pts);
        if (hz.affdim != 2) throw internal_error("coblinder hull is degenerate");
        size_t zi = hz.cycle.size();
        for (size_t i = 0; i < hz.cycle.size(); ++i)
            if (hz.cycle[i].is_zero()) zi = i;
        if (zi == hz.cycle.size()) throw internal_error("origin is not a vertex of the coblinder hull");
        std::array<long long, 2> ls{0, 0};
        int li = 0;
        for (const Vec& nb : {hz.cycle[(zi + 1) % hz.cycle.size()],
                              hz.cycle[(zi + hz.cycle.size() - 1) % hz.cycle.size()]}) {
            Vec u = primitive(nb);
            long long steps = content(nb);
            long long best = 0;
            for (long long k = 1; k <= steps; ++k)
                if (rec.coblinder.contains(k * u)) {
                    best = k;
                    break;
                }
            if (best == 0) throw internal_error("no coblinder point on the hull edge at 0");
            ls[static_cast<size_t>(li++)] = best;
        }
        if (ls[0] != ls[1]) throw internal_error("the two blinder-distance edges differ in length");
        rec.l = ls[0];

        // critical covectors: lifted edge normals of conv(A_E) exposing exactly (E, I(E))
        {
            std::set<Vec> crit;
            Hull2 hc = hull2(rec.coblinder.pts);
            std::vector<Vec> normals2;
            if (hc.affdim == 1) {
                Vec d2 = hc.cycle.back() - hc.cycle.front();
                normals2.push_back(primitive(Vec(d2[1], cneg(d2[0]))));
                normals2.push_back(-normals2.front());
            } else if (hc.affdim == 2) {
                size_t n = hc.cycle.size();
                for (size_t i = 0; i < n; ++i) {
                    Vec d2 = hc.cycle[(i + 1) % n] - hc.cycle[i];
                    normals2.push_back(primitive(Vec(d2[1], cneg(d2[0]))));
                }
            }
            SupportSet IE = involute(f.pts);
            for (const auto& nu : normals2) {
                Vec g = primitive(rec.quot.lift(nu));
                if (support_face(A, g) == f.pts && support_face(IA, g) == IE) crit.insert(g);
            }
            rec.critical.assign(crit.begin(), crit.end());
            if (rec.critical.empty()) throw internal_error("critical covector set is empty");
        }

        // adjacent covectors: facet normals exposing (E, I(E)) with room to spare
        {
            SupportSet IE = involute(f.pts);
            std::set<Vec> adj;
            for (const auto& nu : facet_pool) {
                SupportSet fa = support_face(A, nu);
                SupportSet fi = support_face(IA, nu);
                if (!contains_all(fa, f.pts) || !contains_all(fi, IE)) continue;
                if (fa == f.pts && fi == IE) continue;
                adj.insert(nu);
            }
            rec.adjacent.assign(adj.begin(), adj.end());
        }

        out.push_back(std::move(rec));
    }
    std::sort(out.begin(), out.end(),
              [](const BlinderRecord& a, const BlinderRecord& b) { return a.edge < b.edge; });
    return out;
}

long long sharp_A(const SupportSet& A) {
    if (!denominator(A)) throw precondition_error("sharp_A is undefined for type D");
    long long s = lattice_area(project_along(A, antidiagonal()));
    for (const auto& b : blinders(A)) s = csub(s, cmul(b.h, b.length));
    if (s < 0) throw internal_error("negative singularity count");
    return s;
}

std::pair<long long, long long> slice_counts(const SupportSet& A, const Vec& mu) {
    if (mu.dim != 3 || mu.is_zero() || content(mu) != 1)
        throw precondition_error("slice direction must be a primitive nonzero vector");
    if (mu[0] != mu[1]) throw precondition_error("slice direction must be fixed by the involution");
    auto d = denominator(A);
    if (!d) throw precondition_error("slice counts are undefined for type D");
    long long s1 = mixed_area(project_along(A, mu), project_along(involute(A), mu));
    // shadow along the plane spanned by m and mu: its integer coordinate is the
    // primitive covector vanishing on both
    Vec xz = primitive(Vec(mu[2], cneg(cmul(2, mu[0]))));
    Vec lam(xz[0], xz[0], xz[1]);
    long long lo = dot(lam, A.pts.front()), hi = lo;
    for (const auto& p : A.pts) {
        lo = std::min(lo, dot(lam, p));
        hi = std::max(hi, dot(lam, p));
    }
    long long s2 = cmul(*d, csub(hi, lo));
    return {s1, s2};
}

namespace {

Vec antidiag_proj(const Vec& p) { return Vec(cadd(p[0], p[1]), p[2]); }

bool witness_triangle(const std::vector<Vec>& b) {
    std::vector<Vec> s(b);
    std::sort(s.begin(), s.end(), [](const Vec& x, const Vec& y) { return t_of(x) < t_of(y); });
    long long t0 = t_of(s[0]), t1 = t_of(s[1]), t2 = t_of(s[2]);
    if (t0 == t1 || t1 == t2) return false;
    if (cmul(2, t1) == cadd(t0, t2)) return false;
    Vec e0 = antidiag_proj(s[0]), e1 = antidiag_proj(s[1]), e2 = antidiag_proj(s[2]);
    return cross2(e1 - e0, e2 - e0) != 0;
}

bool witness_skew(const std::vector<Vec>& b) {
    std::vector<Vec> s(b);
    std::sort(s.begin(), s.end(), [](const Vec& x, const Vec& y) { return t_of(x) < t_of(y); });
    std::array<long long, 4> t{t_of(s[0]), t_of(s[1]), t_of(s[2]), t_of(s[3])};
    if (t[0] == t[1] || t[1] == t[2] || t[2] == t[3]) return false;
    auto check = [&](int mid, int other) {
        // labels: b1,b4 = extremes, b3 = the midpoint level, b2 = the other middle
        Vec e1 = antidiag_proj(s[0]), e2 = antidiag_proj(s[static_cast<size_t>(other)]);
        Vec e3 = antidiag_proj(s[static_cast<size_t>(mid)]), e4 = antidiag_proj(s[3]);
        if (e1 == e4) return false;
        if (cross2(e2 - e1, e4 - e1) != 0) return false;
        return cross2(e3 - e1, e4 - e1) != 0;
    };
    if (cmul(2, t[2]) == cadd(t[0], t[3]) && check(2, 1)) return true;
    if (cmul(2, t[1]) == cadd(t[0], t[3]) && check(1, 2)) return true;
    return false;
}

bool witness_high(const std::vector<Vec>& b) {
    std::vector<Vec> s(b);
    std::sort(s.begin(), s.end(), [](const Vec& x, const Vec& y) { return t_of(x) < t_of(y); });
    std::array<long long, 4> t{t_of(s[0]), t_of(s[1]), t_of(s[2]), t_of(s[3])};
    if (t[0] == t[1] || t[1] == t[2] || t[2] == t[3]) return false;
    Vec e1 = antidiag_proj(s[0]), e2 = antidiag_proj(s[1]);
    Vec e3 = antidiag_proj(s[2]), e4 = antidiag_proj(s[3]);
    if (!(e1 == e4)) return false;
    return cross2(e2 - e1, e3 - e1) != 0;
}

bool witness_low(const std::vector<Vec>& b) {
    std::vector<Vec> s(b);
    std::sort(s.begin(), s.end(), [](const Vec& x, const Vec& y) { return t_of(x) < t_of(y); });
    std::array<long long, 4> t{t_of(s[0]), t_of(s[1]), t_of(s[2]), t_of(s[3])};
    auto check = [&](size_t d0, size_t d1, size_t mid, size_t other) {
        if (t[d0] != t[d1]) return false;
        if (t[d0] == t[mid] || t[mid] == t[other] || t[d0] == t[other]) return false;
        if (cmul(2, t[mid]) != cadd(t[d0], t[other])) return false;
        Vec e1 = antidiag_proj(s[d0]), e2 = antidiag_proj(s[d1]);
        Vec e3 = antidiag_proj(s[mid]), e4 = antidiag_proj(s[other]);
        if (cross2(e2 - e1, e4 - e1) == 0) return false; // {e1,e2,e4} must span the plane
        return !(e3 == e4);
    };
    // doubled minimum level or doubled maximum level
    return check(0, 1, 2, 3) || check(2, 3, 1, 0);
}

} // namespace

std::optional<MinimalWitness> minimal_witness(const SupportSet& A) {
    if (A.dim != 3) throw precondition_error("minimal_witness needs ambient dimension 3");
    if (A.size() < 2) throw precondition_error("minimal_witness needs at least two points");
    long long tmin = t_of(A.pts.front()), tmax = tmin;
    for (const auto& p : A.pts) {
        tmin = std::min(tmin, t_of(p));
        tmax = std::max(tmax, t_of(p));
    }
    auto spans = [&](const std::vector<Vec>& b) {
        long long lo = t_of(b.front()), hi = lo;
        for (const auto& p : b) {
            lo = std::min(lo, t_of(p));
            hi = std::max(hi, t_of(p));
        }
        return lo == tmin && hi == tmax;
    };
    size_t n = A.size();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            for (size_t k = j + 1; k < n; ++k) {
                std::vector<Vec> b{A.pts[i], A.pts[j], A.pts[k]};
                if (spans(b) && witness_triangle(b))
                    return MinimalWitness{SupportSet::of(3, b), WitnessShape::Triangle};
            }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            for (size_t k = j + 1; k < n; ++k)
                for (size_t l = k + 1; l < n; ++l) {
                    std::vector<Vec> b{A.pts[i], A.pts[j], A.pts[k], A.pts[l]};
                    if (!spans(b)) continue;
                    if (witness_skew(b)) return MinimalWitness{SupportSet::of(3, b), WitnessShape::SkewTetra};
                    if (witness_high(b)) return MinimalWitness{SupportSet::of(3, b), WitnessShape::HighTetra};
                    if (witness_low(b)) return MinimalWitness{SupportSet::of(3, b), WitnessShape::LowTetra};
                }
    return std::nullopt;
}

} // namespace symcurve
