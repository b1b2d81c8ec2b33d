#pragma once

#include <algorithm>
#include <vector>

#include "mat.hpp"

namespace symcurve {

// Deduplicated finite set of lattice points, kept sorted for deterministic output.
struct SupportSet {
    int dim = 0;
    std::vector<Vec> pts;
    bool had_duplicates = false;

    SupportSet() = default;

    static SupportSet of(int dim, std::vector<Vec> points) {
        SupportSet s;
        s.dim = dim;
        for (const auto& p : points)
            if (p.dim != dim) throw precondition_error("support set has mixed dimensions");
        std::sort(points.begin(), points.end());
        size_t before = points.size();
        points.erase(std::unique(points.begin(), points.end()), points.end());
        s.had_duplicates = points.size() < before;
        s.pts = std::move(points);
        if (s.pts.empty()) throw precondition_error("support set must be non-empty");
        return s;
    }

    size_t size() const { return pts.size(); }

    bool contains(const Vec& p) const {
        return std::binary_search(pts.begin(), pts.end(), p);
    }

    friend bool operator==(const SupportSet& a, const SupportSet& b) {
        return a.dim == b.dim && a.pts == b.pts;
    }
    friend bool operator<(const SupportSet& a, const SupportSet& b) {
        if (a.dim != b.dim) return a.dim < b.dim;
        return a.pts < b.pts;
    }

    SupportSet translated(const Vec& v) const {
        std::vector<Vec> q;
        q.reserve(pts.size());
        for (const auto& p : pts) q.push_back(p + v);
        return of(dim, std::move(q));
    }

    int affdim() const { return affine_rank(pts, dim); }
};

inline long long max_value(const SupportSet& A, const Vec& gamma) {
    long long best = dot(gamma, A.pts.front());
    for (const auto& p : A.pts) best = std::max(best, dot(gamma, p));
    return best;
}

// A^gamma: the points where gamma attains its maximum on A. A^0 = A.
inline SupportSet support_face(const SupportSet& A, const Vec& gamma) {
    if (gamma.dim != A.dim) throw precondition_error("covector dimension mismatch");
    long long best = max_value(A, gamma);
    std::vector<Vec> f;
    for (const auto& p : A.pts)
        if (dot(gamma, p) == best) f.push_back(p);
    return SupportSet::of(A.dim, std::move(f));
}

inline SupportSet minkowski_sum(const SupportSet& A, const SupportSet& B) {
    if (A.dim != B.dim) throw precondition_error("minkowski_sum dimension mismatch");
    std::vector<Vec> s;
    s.reserve(A.size() * B.size());
    for (const auto& a : A.pts)
        for (const auto& b : B.pts) s.push_back(a + b);
    return SupportSet::of(A.dim, std::move(s));
}

} // namespace symcurve
