#include "fan.hpp"

#include <map>

#include "lattice.hpp"

namespace symcurve {

void TropicalFan::add(const Vec& gen, long long mult) {
    rays.emplace_back(gen, mult);
}

void TropicalFan::normalize() {
    std::map<Vec, long long> acc;
    for (const auto& [g, m] : rays) acc[g] = cadd(acc.count(g) ? acc[g] : 0, m);
    rays.clear();
    for (const auto& [g, m] : acc) {
        if (m < 0) throw internal_error("negative ray multiplicity");
        if (m > 0) rays.emplace_back(g, m);
    }
}

bool TropicalFan::balanced() const {
    if (rays.empty()) return true;
    Vec s(rays.front().first.dim);
    for (const auto& [g, m] : rays) s = s + m * g;
    return s.is_zero();
}

long long TropicalFan::multiplicity_sum() const {
    long long s = 0;
    for (const auto& [g, m] : rays) s = cadd(s, m);
    return s;
}

long long TropicalFan::multiplicity_of(const Vec& gen) const {
    for (const auto& [g, m] : rays)
        if (g == gen) return m;
    return 0;
}

void assert_balanced(const TropicalFan& f, const char* what) {
    if (!f.balanced()) throw internal_error(std::string("unbalanced tropical fan: ") + what);
}

TropicalFan dual_fan_2d(const SupportSet& B) {
    if (B.dim != 2) throw precondition_error("dual_fan_2d needs ambient dimension 2");
    Hull2 h = hull2(B.pts);
    if (h.affdim == 0) throw precondition_error("dual fan of a single point is undefined");
    TropicalFan f;
    if (h.affdim == 1) {
        Vec d = h.cycle.back() - h.cycle.front();
        Vec n = primitive(Vec(d[1], cneg(d[0])));
        long long len = lattice_length(B);
        f.add(n, len);
        f.add(-n, len);
    } else {
        size_t n = h.cycle.size();
        for (size_t i = 0; i < n; ++i) {
            Vec d = h.cycle[(i + 1) % n] - h.cycle[i];
            f.add(primitive(Vec(d[1], cneg(d[0]))), content(d));
        }
    }
    f.normalize();
    assert_balanced(f, "dual fan of a polygon");
    return f;
}

TropicalFan pullback_antidiagonal(const TropicalFan& f2) {
    TropicalFan f;
    for (const auto& [g, m] : f2.rays) f.add(Vec(g[0], g[0], g[1]), m);
    f.normalize();
    return f;
}

TropicalFan fan_subtract(const TropicalFan& total, long long scale, const TropicalFan& sub) {
    TropicalFan f = total;
    for (const auto& [g, m] : sub.rays) f.add(g, cneg(cmul(scale, m)));
    f.normalize(); // throws if any ray went negative
    return f;
}

} // namespace symcurve
