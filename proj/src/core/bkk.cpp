#include "bkk.hpp"

#include <set>

namespace symcurve {

namespace {

long long mv_n(const std::vector<const SupportSet*>& args, int n) {
    if (n == 1) return lattice_length(*args[0]);
    if (n == 2) return mixed_area(*args[0], *args[1]);
    return mixed_volume3(*args[0], *args[1], *args[2]);
}

} // namespace

long long bkk_count(const std::vector<SupportSet>& sets) {
    int n = static_cast<int>(sets.size());
    if (n < 1 || n > 3) throw precondition_error("bkk_count supports 1 to 3 sets");
    std::vector<const SupportSet*> args;
    for (const auto& s : sets) {
        if (s.dim != n) throw precondition_error("bkk_count needs n sets in dimension n");
        args.push_back(&s);
    }
    return mv_n(args, n);
}

long long ci_euler(const std::vector<SupportSet>& sets, int n) {
    int k = static_cast<int>(sets.size());
    if (n < 1 || n > 3 || k < 1 || k > n) throw precondition_error("ci_euler needs 1 <= k <= n <= 3");
    for (const auto& s : sets)
        if (s.dim != n) throw precondition_error("ci_euler dimension mismatch");

    std::vector<std::vector<int>> comps;
    if (k == 1) comps = {{n}};
    else if (k == 2 && n == 2) comps = {{1, 1}};
    else if (k == 2 && n == 3) comps = {{1, 2}, {2, 1}};
    else comps = {{1, 1, 1}};

    long long total = 0;
    for (const auto& c : comps) {
        std::vector<const SupportSet*> args;
        for (int i = 0; i < k; ++i)
            for (int rep = 0; rep < c[static_cast<size_t>(i)]; ++rep) args.push_back(&sets[static_cast<size_t>(i)]);
        total = cadd(total, mv_n(args, n));
    }
    return (n - k) % 2 == 0 ? total : cneg(total);
}

TropicalFan ci_tropical_fan(const std::vector<SupportSet>& sets) {
    if (sets.size() == 1 && sets[0].dim == 2) return dual_fan_2d(sets[0]);
    if (sets.size() != 2 || sets[0].dim != 3 || sets[1].dim != 3)
        throw precondition_error("ci_tropical_fan needs one 2D set or two 3D sets");

    // candidate rays: primitive cross products of pooled difference directions
    std::set<Vec> dirs;
    for (const auto& s : sets)
        for (size_t i = 0; i < s.size(); ++i)
            for (size_t j = i + 1; j < s.size(); ++j)
                dirs.insert(lex_positive(primitive(s.pts[j] - s.pts[i])));
    std::vector<Vec> dv(dirs.begin(), dirs.end());
    std::set<Vec> candidates;
    for (size_t i = 0; i < dv.size(); ++i)
        for (size_t j = i + 1; j < dv.size(); ++j) {
            Vec n = cross(dv[i], dv[j]);
            if (n.is_zero()) continue;
            n = primitive(n);
            candidates.insert(n);
            candidates.insert(-n);
        }

    TropicalFan fan;
    for (const auto& g : candidates) {
        long long mv = mixed_area_in_plane(support_face(sets[0], g), support_face(sets[1], g), g);
        if (mv > 0) fan.add(g, mv);
    }
    fan.normalize();
    assert_balanced(fan, "complete intersection curve fan");
    return fan;
}

long long ci_genus(const std::vector<SupportSet>& sets) {
    int n = sets.size() == 1 ? 2 : 3;
    auto verdict = irreducibility_check(sets, n);
    if (verdict.kind != Irreducibility::Irreducible)
        throw precondition_error("ci_genus needs a connected curve: " + verdict.reason);
    long long mv_sum;
    if (n == 2) {
        mv_sum = lattice_area(sets[0]);
    } else {
        mv_sum = cadd(mixed_volume3(sets[0], sets[0], sets[1]),
                      mixed_volume3(sets[0], sets[1], sets[1]));
    }
    long long s = ci_tropical_fan(sets).multiplicity_sum();
    long long twice = csub(cadd(2, mv_sum), s);
    if (twice % 2 != 0) throw internal_error("genus parity violated");
    if (twice < 0) throw internal_error("negative genus");
    return twice / 2;
}

Irreducibility irreducibility_check(const std::vector<SupportSet>& sets, int n) {
    int k = static_cast<int>(sets.size());
    if (n < 1 || n > 3 || k < 1) throw precondition_error("irreducibility_check needs n <= 3");
    for (const auto& s : sets)
        if (s.dim != n) throw precondition_error("irreducibility_check dimension mismatch");

    auto joint_rank_and_diffs = [&](const std::vector<int>& idx) {
        std::vector<Vec> diffs;
        for (int i : idx) {
            const auto& s = sets[static_cast<size_t>(i)];
            for (size_t j = 1; j < s.size(); ++j) diffs.push_back(s.pts[j] - s.pts[0]);
        }
        int rank = diffs.empty() ? 0 : static_cast<int>(smith_diagonal(diffs, n).size());
        return std::make_pair(rank, diffs);
    };

    std::vector<std::vector<int>> subsets;
    for (int mask = 1; mask < (1 << k); ++mask) {
        std::vector<int> idx;
        for (int i = 0; i < k; ++i)
            if (mask & (1 << i)) idx.push_back(i);
        subsets.push_back(idx);
    }
    std::sort(subsets.begin(), subsets.end(),
              [](const auto& a, const auto& b) { return a.size() != b.size() ? a.size() < b.size() : a < b; });

    for (const auto& idx : subsets) {
        auto [rank, diffs] = joint_rank_and_diffs(idx);
        if (rank <= static_cast<int>(idx.size()) - 1)
            return {Irreducibility::Empty, 0,
                    std::to_string(idx.size()) + " support(s) fit in a common " +
                        std::to_string(idx.size() - 1) + "-dimensional affine subspace"};
    }
    for (const auto& idx : subsets) {
        int q = static_cast<int>(idx.size());
        if (q >= n) continue;
        auto [rank, diffs] = joint_rank_and_diffs(idx);
        if (rank != q) continue;
        if (q == 1) {
            long long len = lattice_length(sets[static_cast<size_t>(idx[0])]);
            if (len > 1)
                return {Irreducibility::Reducible, len, "a support is a segment of lattice length > 1"};
        } else if (q == 2 && n == 3) {
            Vec nu;
            bool found = false;
            for (size_t i = 0; i < diffs.size() && !found; ++i)
                for (size_t j = i + 1; j < diffs.size() && !found; ++j) {
                    Vec c = cross(diffs[i], diffs[j]);
                    if (!c.is_zero()) {
                        nu = primitive(c);
                        found = true;
                    }
                }
            if (!found) throw internal_error("rank-2 subset without a normal");
            long long mv = mixed_area_in_plane(sets[static_cast<size_t>(idx[0])],
                                               sets[static_cast<size_t>(idx[1])], nu);
            if (mv > 1)
                return {Irreducibility::Reducible, mv,
                        "two supports fit in parallel planes with in-plane mixed area > 1"};
        }
    }
    return {Irreducibility::Irreducible, 1, "no subset obstruction"};
}

MvLengthVerdict mv_vs_length(const SupportSet& P) {
    if (P.dim != 2) throw precondition_error("mv_vs_length needs ambient dimension 2");
    MvLengthVerdict v;
    std::vector<Vec> mirrored;
    for (const auto& p : P.pts) mirrored.push_back(Vec(p[0], cneg(p[1])));
    v.mv = mixed_area(P, SupportSet::of(2, mirrored));
    long long x0 = P.pts.front()[0], x1 = x0, y0 = P.pts.front()[1], y1 = y0;
    for (const auto& p : P.pts) {
        x0 = std::min(x0, p[0]);
        x1 = std::max(x1, p[0]);
        y0 = std::min(y0, p[1]);
        y1 = std::max(y1, p[1]);
    }
    v.twoL = cmul(2, csub(x1, x0));
    v.strict = v.mv > v.twoL;

    if (x0 == x1) v.shape = MvLengthVerdict::VerticalLine;
    else if (csub(y1, y0) <= 1) v.shape = MvLengthVerdict::Stripe;
    else {
        for (long long yy = y0; yy <= y1 && v.shape == MvLengthVerdict::None; ++yy) {
            bool ok = true, have_x = false;
            long long xx = 0;
            for (const auto& p : P.pts) {
                if (p[1] == yy) continue;
                if (std::llabs(csub(p[1], yy)) != 1) {
                    ok = false;
                    break;
                }
                if (have_x && p[0] != xx) {
                    ok = false;
                    break;
                }
                xx = p[0];
                have_x = true;
            }
            if (ok) v.shape = MvLengthVerdict::SpikedLine;
        }
    }
    if (v.strict != (v.shape == MvLengthVerdict::None))
        throw internal_error("mixed-area comparison lemma violated");
    return v;
}

} // namespace symcurve
