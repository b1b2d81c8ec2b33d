#include "oracle.hpp"

#include <cstdlib>
#include <map>
#include <set>

namespace symcurve::oracle {

long long vol2_pick(const SupportSet& A) {
    if (A.dim != 2) throw precondition_error("vol2_pick needs ambient dimension 2");
    Hull2 h = hull2(A.pts);
    if (h.affdim < 2) return 0;
    long long x0 = h.cycle[0][0], x1 = x0, y0 = h.cycle[0][1], y1 = y0;
    for (const auto& v : h.cycle) {
        x0 = std::min(x0, v[0]);
        x1 = std::max(x1, v[0]);
        y0 = std::min(y0, v[1]);
        y1 = std::max(y1, v[1]);
    }
    long long interior = 0, boundary = 0;
    size_t n = h.cycle.size();
    for (long long x = x0; x <= x1; ++x)
        for (long long y = y0; y <= y1; ++y) {
            Vec p(x, y);
            bool outside = false, on_edge = false;
            for (size_t i = 0; i < n; ++i) {
                long long c = cross2(h.cycle[(i + 1) % n] - h.cycle[i], p - h.cycle[i]);
                if (c < 0) outside = true;
                if (c == 0) on_edge = true;
            }
            if (outside) continue;
            if (on_edge) ++boundary;
            else ++interior;
        }
    // Pick: area = I + B/2 - 1, lattice area doubles it
    return cadd(cmul(2, interior), csub(boundary, 2));
}

long long vol3_ehrhart(const SupportSet& A) {
    if (A.dim != 3) throw precondition_error("vol3_ehrhart needs ambient dimension 3");
    Hull3 h = hull3(A);
    if (h.affdim < 3) throw precondition_error("vol3_ehrhart needs a full-dimensional hull");
    auto count = [&](long long k) -> long long {
        if (k == 0) return 1;
        std::vector<Vec> scaled;
        for (const auto& p : A.pts) scaled.push_back(k * p);
        SupportSet S = SupportSet::of(3, std::move(scaled));
        Hull3 hs = hull3(S);
        long long lo[3], hi[3];
        for (int i = 0; i < 3; ++i) {
            lo[i] = S.pts.front()[i];
            hi[i] = lo[i];
        }
        for (const auto& p : S.pts)
            for (int i = 0; i < 3; ++i) {
                lo[i] = std::min(lo[i], p[i]);
                hi[i] = std::max(hi[i], p[i]);
            }
        long long c = 0;
        for (long long x = lo[0]; x <= hi[0]; ++x)
            for (long long y = lo[1]; y <= hi[1]; ++y)
                for (long long z = lo[2]; z <= hi[2]; ++z) {
                    Vec p(x, y, z);
                    bool inside = true;
                    for (const auto& f : hs.facets)
                        if (dot(f.normal, p) > f.offset) {
                            inside = false;
                            break;
                        }
                    if (inside) ++c;
                }
        return c;
    };
    long long l0 = count(0), l1 = count(1), l2 = count(2), l3 = count(3);
    // third finite difference of a cubic = 6 * leading coefficient = Vol_Z
    return csub(cadd(l3, cmul(3, l1)), cadd(cmul(3, l2), l0));
}

std::vector<Vec> covector_box(int dim, long long bound) {
    std::vector<Vec> out;
    std::array<long long, 3> w{0, 0, 0};
    std::function<void(int)> rec = [&](int i) {
        if (i == dim) {
            Vec g(dim);
            for (int k = 0; k < dim; ++k) g[k] = w[static_cast<size_t>(k)];
            if (!g.is_zero() && content(g) == 1) out.push_back(g);
            return;
        }
        for (long long v = -bound; v <= bound; ++v) {
            w[static_cast<size_t>(i)] = v;
            rec(i + 1);
        }
    };
    rec(0);
    return out;
}

std::vector<SupportSet> faces_by_enumeration(const SupportSet& A, long long bound) {
    std::set<SupportSet> faces;
    faces.insert(A);
    for (const auto& g : covector_box(A.dim, bound)) faces.insert(support_face(A, g));
    return {faces.begin(), faces.end()};
}

namespace {

long long coordinate_spread(const SupportSet& A) {
    long long spread = 0;
    for (int i = 0; i < A.dim; ++i) {
        long long lo = A.pts.front()[i], hi = lo;
        for (const auto& p : A.pts) {
            lo = std::min(lo, p[i]);
            hi = std::max(hi, p[i]);
        }
        spread = std::max(spread, csub(hi, lo));
    }
    return spread;
}

} // namespace

std::vector<SupportSet> faces_by_enumeration_stable(const SupportSet& A) {
    long long bound = std::max(coordinate_spread(A) + 1, 2LL);
    auto cur = faces_by_enumeration(A, bound);
    for (;;) {
        auto next = faces_by_enumeration(A, 2 * bound);
        if (cur == next) return cur;
        cur = std::move(next);
        bound *= 2;
        if (bound > 256) throw internal_error("face enumeration did not stabilize");
    }
}

TropicalFan fan_by_enumeration(const SupportSet& A, long long bound) {
    SupportSet IA = involute(A);
    auto recs = blinders(A);
    size_t na = A.size();
    if (na > 32) throw precondition_error("fan enumeration oracle is limited to 32 points");

    auto mask_of = [&](const SupportSet& whole, const SupportSet& sub) {
        uint64_t m = 0;
        for (size_t i = 0; i < whole.size(); ++i)
            if (sub.contains(whole.pts[i])) m |= (1ull << i);
        return m;
    };
    auto set_of_mask = [&](const SupportSet& whole, uint64_t m) {
        std::vector<Vec> pts;
        for (size_t i = 0; i < whole.size(); ++i)
            if (m & (1ull << i)) pts.push_back(whole.pts[i]);
        return SupportSet::of(3, std::move(pts));
    };

    struct Edge {
        uint64_t mask_a, mask_i;
        const BlinderRecord* rec;
    };
    std::vector<Edge> edges;
    for (const auto& rec : recs)
        edges.push_back({mask_of(A, rec.edge), mask_of(IA, involute(rec.edge)), &rec});

    // plain/adjacent multiplicities depend only on the exposed face pair; cache them
    std::map<std::pair<uint64_t, uint64_t>, long long> pair_cache;

    TropicalFan fan;
    for (const auto& g : covector_box(3, bound)) {
        auto argmax_mask = [&](const SupportSet& S) {
            uint64_t m = 0;
            long long best = 0;
            for (size_t i = 0; i < S.size(); ++i) {
                long long v = dot(g, S.pts[i]);
                if (i == 0 || v > best) {
                    best = v;
                    m = 0;
                }
                if (v == best) m |= (1ull << i);
            }
            return m;
        };
        uint64_t ma = argmax_mask(A), mi = argmax_mask(IA);

        const BlinderRecord* exact = nullptr;
        for (const auto& e : edges)
            if (ma == e.mask_a && mi == e.mask_i) {
                exact = e.rec;
                break;
            }
        if (exact) {
            Vec gq = exact->quot.descend(g);
            SupportSet face = support_face(exact->coblinder, gq);
            if (face.size() >= 2) fan.add(g, cmul(exact->length, lattice_length(face)));
            continue;
        }

        auto key = std::make_pair(ma, mi);
        auto it = pair_cache.find(key);
        long long mult;
        if (it != pair_cache.end()) {
            mult = it->second;
        } else {
            SupportSet fa = set_of_mask(A, ma);
            SupportSet fi = set_of_mask(IA, mi);
            long long correction = 0;
            for (const auto& e : edges)
                if ((ma & e.mask_a) == e.mask_a && (mi & e.mask_i) == e.mask_i)
                    correction = cadd(correction, cmul(e.rec->length, e.rec->l));
            mult = csub(mixed_area_in_plane(fa, fi, g), correction);
            pair_cache.emplace(key, mult);
        }
        if (mult > 0) fan.add(g, mult);
    }
    fan.normalize();
    return fan;
}

TropicalFan fan_by_enumeration_stable(const SupportSet& A, long long min_bound) {
    long long bound = std::max({coordinate_spread(A) + 1, min_bound, 2LL});
    TropicalFan f = fan_by_enumeration(A, bound);
    while (2 * bound <= 64) {
        TropicalFan g = fan_by_enumeration(A, 2 * bound);
        if (f == g) return f;
        f = g;
        bound *= 2;
    }
    return f;
}

void enumerate_small_sets(long long lo, long long hi, int min_size, int max_size,
                          const std::function<bool(const SupportSet&)>& fn) {
    std::vector<Vec> box;
    for (long long x = lo; x <= hi; ++x)
        for (long long y = lo; y <= hi; ++y)
            for (long long z = lo; z <= hi; ++z) box.push_back(Vec(x, y, z));
    int n = static_cast<int>(box.size());
    std::vector<int> idx;
    std::function<bool(int)> rec = [&](int start) {
        int sz = static_cast<int>(idx.size());
        if (sz >= min_size && sz <= max_size) {
            std::vector<Vec> pts;
            for (int i : idx) pts.push_back(box[static_cast<size_t>(i)]);
            if (!fn(SupportSet::of(3, std::move(pts)))) return false;
        }
        if (sz == max_size) return true;
        for (int i = start; i < n; ++i) {
            idx.push_back(i);
            bool keep = rec(i + 1);
            idx.pop_back();
            if (!keep) return false;
        }
        return true;
    };
    rec(0);
}

std::mt19937_64 seeded_rng() {
    unsigned long long seed = 20250810ULL;
    if (const char* env = std::getenv("SYMCURVE_SEED")) seed = std::strtoull(env, nullptr, 10);
    return std::mt19937_64(seed);
}

SupportSet random_support(std::mt19937_64& rng, int dim, int max_points, long long lo, long long hi) {
    std::uniform_int_distribution<long long> coord(lo, hi);
    std::uniform_int_distribution<int> count(2, max_points);
    int n = count(rng);
    std::vector<Vec> pts;
    for (int i = 0; i < n; ++i) {
        Vec p(dim);
        for (int k = 0; k < dim; ++k) p[k] = coord(rng);
        pts.push_back(p);
    }
    return SupportSet::of(dim, std::move(pts));
}

} // namespace symcurve::oracle
