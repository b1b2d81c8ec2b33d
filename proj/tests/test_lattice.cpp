#include <doctest.h>

#include <set>

#include "lattice.hpp"
#include "oracle.hpp"
#include "test_util.hpp"

using namespace symcurve;
using namespace symcurve::testutil;

TEST_CASE("primitive vectors") {
    CHECK(primitive(Vec(2, -4, 6)) == Vec(1, -2, 3));
    CHECK(primitive(Vec(0, 0, 5)) == Vec(0, 0, 1));
    CHECK(primitive(Vec(1, 1, 0)) == Vec(1, 1, 0));
    CHECK_THROWS_AS(primitive(Vec(0, 0, 0)), precondition_error);
}

TEST_CASE("hull of planar and spatial sets") {
    Hull2 seg = hull2({Vec(0, 0), Vec(2, 0), Vec(1, 0)});
    CHECK(seg.affdim == 1);
    CHECK(seg.cycle == std::vector<Vec>{Vec(0, 0), Vec(2, 0)});

    Hull2 sq = hull2({Vec(0, 0), Vec(1, 0), Vec(0, 1), Vec(1, 1)});
    CHECK(sq.affdim == 2);
    CHECK(sq.cycle.size() == 4);

    Hull3 tet = hull3(set3({Vec(0, 0, 0), Vec(1, 0, 0), Vec(0, 1, 0), Vec(0, 0, 1)}));
    CHECK(tet.affdim == 3);
    CHECK(tet.facets.size() == 4);
}

TEST_CASE("support faces") {
    SupportSet tri = set2({Vec(0, 0), Vec(1, 0), Vec(0, 1)});
    CHECK(support_face(tri, Vec(1, 0)) == set2({Vec(1, 0)}));
    CHECK(support_face(tri, Vec(-1, -1)) == set2({Vec(0, 0)}));
    SupportSet s = set3({Vec(0, 0, 0), Vec(0, 0, 1), Vec(1, 0, 0)});
    CHECK(support_face(s, Vec(-1, -1, 0)) == set3({Vec(0, 0, 0), Vec(0, 0, 1)}));
    CHECK(support_face(tri, Vec(0, 0)) == tri);
}

TEST_CASE("face enumeration") {
    auto fs1 = faces(set1({0, 1}));
    CHECK(fs1.size() == 3);

    auto tri = faces(set2({Vec(0, 0), Vec(1, 0), Vec(0, 1)}));
    CHECK(tri.size() == 7); // 3 vertices + 3 edges + itself

    auto big = faces(dilated_simplex3(2));
    int v = 0, e = 0, f = 0, whole = 0;
    for (const auto& fc : big) {
        if (fc.pts.size() == dilated_simplex3(2).size()) { ++whole; continue; }
        if (fc.dim == 0) ++v;
        if (fc.dim == 1) ++e;
        if (fc.dim == 2) ++f;
    }
    CHECK(v == 4);
    CHECK(e == 6);
    CHECK(f == 4);
    CHECK(whole == 1);
}

TEST_CASE("faces agree with exhaustive covector enumeration") {
    auto check = [](const SupportSet& A) {
        auto enumerated = oracle::faces_by_enumeration_stable(A);
        auto structural = faces(A);
        std::set<SupportSet> s1(enumerated.begin(), enumerated.end());
        std::set<SupportSet> s2;
        for (const auto& f : structural) s2.insert(f.pts);
        CHECK(s1 == s2);
        // every stored witness exposes its face
        for (const auto& f : structural)
            if (!f.witness.is_zero()) CHECK(support_face(A, f.witness) == f.pts);
    };
    check(set3({Vec(0, 0, 0), Vec(1, 0, 0), Vec(0, 1, 0), Vec(0, 0, 1)}));
    check(dilated_simplex3(2));
    check(set3({Vec(0, 0, 0), Vec(1, 1, 0), Vec(0, 0, 3)}));     // planar
    check(set3({Vec(0, 0, 0), Vec(2, -2, 0)}));                  // segment
    check(set3({Vec(1, 2, 3)}));                                 // point
    auto rng = oracle::seeded_rng();
    for (int i = 0; i < 12; ++i) check(oracle::random_support(rng, 3, 6, -2, 2));
}

TEST_CASE("lattice length") {
    CHECK(lattice_length(set1({0, 3})) == 3);
    CHECK(lattice_length(set3({Vec(0, 0, 0), Vec(2, 2, 0)})) == 2);
    CHECK(lattice_length(set3({Vec(0, 0, 0)})) == 0);
    CHECK_THROWS_AS(lattice_length(set2({Vec(0, 0), Vec(1, 0), Vec(0, 1)})), precondition_error);
}

TEST_CASE("lattice area and volume") {
    CHECK(lattice_area(set2({Vec(0, 0), Vec(2, 0), Vec(0, 2)})) == 4);
    CHECK(lattice_area(set2({Vec(0, 0), Vec(1, 0), Vec(0, 1), Vec(1, 1)})) == 2);
    CHECK(lattice_area(set2({Vec(0, 0), Vec(5, 0)})) == 0);

    CHECK(lattice_volume3(set3({Vec(0, 0, 0), Vec(1, 0, 0), Vec(0, 1, 0), Vec(0, 0, 1)})) == 1);
    CHECK(lattice_volume3(dilated_simplex3(2)) == 8);
    CHECK(lattice_volume3(unit_cube3()) == 6);
    CHECK(lattice_volume3(set3({Vec(0, 0, 0), Vec(1, 1, 0), Vec(2, 0, 5)})) == 0); // planar
}

TEST_CASE("minkowski sums") {
    CHECK(minkowski_sum(set1({0, 1}), set1({0, 1})) == set1({0, 1, 2}));
    CHECK(minkowski_sum(set2({Vec(0, 0), Vec(1, 0)}), set2({Vec(0, 0), Vec(0, 1)})) ==
          set2({Vec(0, 0), Vec(1, 0), Vec(0, 1), Vec(1, 1)}));
    SupportSet A = set3({Vec(0, 0, 0), Vec(1, 2, 3)});
    CHECK(minkowski_sum(A, set3({Vec(5, 5, 5)})) == A.translated(Vec(5, 5, 5)));
}

TEST_CASE("mixed areas and volumes: pinned examples") {
    SupportSet tri = set2({Vec(0, 0), Vec(1, 0), Vec(0, 1)});
    CHECK(mixed_area(tri, tri) == 1);
    CHECK(mixed_area(set2({Vec(0, 0), Vec(1, 0)}), set2({Vec(0, 0), Vec(0, 1)})) == 1);
    CHECK(mixed_area(set2({Vec(0, 0), Vec(1, 0)}), set2({Vec(0, 0), Vec(2, 0)})) == 0);

    SupportSet t3 = set3({Vec(0, 0, 0), Vec(1, 0, 0), Vec(0, 1, 0), Vec(0, 0, 1)});
    CHECK(mixed_volume3(t3, t3, t3) == 1);
    SupportSet ex = set3({Vec(0, 0, 0), Vec(1, 0, 0)});
    SupportSet ey = set3({Vec(0, 0, 0), Vec(0, 1, 0)});
    SupportSet ez = set3({Vec(0, 0, 0), Vec(0, 0, 1)});
    CHECK(mixed_volume3(ex, ey, ez) == 1);

    auto scale = [](const SupportSet& s, long long k) {
        std::vector<Vec> p;
        for (const auto& q : s.pts) p.push_back(k * q);
        return SupportSet::of(3, std::move(p));
    };
    CHECK(mixed_volume3(scale(t3, 2), scale(t3, 2), scale(t3, 4)) == 16);
}

TEST_CASE("mixed volume properties on random instances") {
    auto rng = oracle::seeded_rng();
    for (int iter = 0; iter < 30; ++iter) {
        SupportSet P = oracle::random_support(rng, 3, 5, -2, 2);
        SupportSet Q = oracle::random_support(rng, 3, 5, -2, 2);
        SupportSet R = oracle::random_support(rng, 3, 5, -2, 2);
        long long pqr = mixed_volume3(P, Q, R);
        CHECK(pqr == mixed_volume3(Q, P, R));
        CHECK(pqr == mixed_volume3(R, Q, P));
        CHECK(mixed_volume3(P, P, P) == lattice_volume3(P));
        SupportSet P2 = oracle::random_support(rng, 3, 4, -2, 2);
        CHECK(mixed_volume3(minkowski_sum(P, P2), Q, R) ==
              cadd(pqr, mixed_volume3(P2, Q, R)));
        // unimodular and translation invariance
        Mat3 M = random_unimodular(rng);
        CHECK(mixed_volume3(apply(M, P), apply(M, Q), apply(M, R)) == pqr);
        CHECK(mixed_volume3(P.translated(Vec(3, -1, 2)), Q, R) == pqr);
    }
    for (int iter = 0; iter < 40; ++iter) {
        SupportSet P = oracle::random_support(rng, 2, 6, -3, 3);
        SupportSet Q = oracle::random_support(rng, 2, 6, -3, 3);
        CHECK(mixed_area(P, P) == lattice_area(P));
        CHECK(mixed_area(P, Q) == mixed_area(Q, P));
        // monotonicity: a subset can only shrink the mixed area
        if (P.size() > 2) {
            std::vector<Vec> sub(P.pts.begin(), P.pts.end() - 1);
            CHECK(mixed_area(SupportSet::of(2, sub), Q) <= mixed_area(P, Q));
        }
    }
}

TEST_CASE("volumes agree with Pick and Ehrhart oracles") {
    auto rng = oracle::seeded_rng();
    for (int iter = 0; iter < 60; ++iter) {
        SupportSet P = oracle::random_support(rng, 2, 8, -4, 4);
        CHECK(lattice_area(P) == oracle::vol2_pick(P));
    }
    for (int iter = 0; iter < 40; ++iter) {
        SupportSet P = oracle::random_support(rng, 3, 7, -3, 3);
        if (P.affdim() < 3) continue;
        CHECK(lattice_volume3(P) == oracle::vol3_ehrhart(P));
    }
}

TEST_CASE("mixed area in a plane") {
    SupportSet F = set3({Vec(0, 0, 0), Vec(1, 0, 0), Vec(0, 0, 1)});
    CHECK(mixed_area_in_plane(F, F, Vec(0, 1, 0)) == 1);
    CHECK(mixed_area_in_plane(set3({Vec(0, 0, 0)}), F, Vec(0, 1, 0)) == 0);
    CHECK(mixed_area_in_plane(set3({Vec(0, 0, 0), Vec(1, 1, 0)}),
                              set3({Vec(0, 0, 0), Vec(0, 0, 1)}), Vec(1, -1, 0)) == 1);
    CHECK_THROWS_AS(mixed_area_in_plane(set3({Vec(0, 0, 0), Vec(1, 0, 0)}), F, Vec(1, 0, 0)),
                    precondition_error);
}

TEST_CASE("projections along primitive directions") {
    SupportSet big = dilated_simplex3(2);
    SupportSet img = project_along(big, Vec(1, -1, 0));
    Hull2 h = hull2(img.pts);
    CHECK(h.affdim == 2);
    CHECK(lattice_area(img) == 4); // triangle (0,0),(2,0),(0,2)
    CHECK(img.contains(Vec(2, 0)));
    CHECK(img.contains(Vec(0, 2)));

    SupportSet s = set3({Vec(1, 2, 5), Vec(3, 4, 7)});
    CHECK(project_along(s, Vec(0, 0, 1)) == set2({Vec(1, 2), Vec(3, 4)}));

    SupportSet line = set3({Vec(0, 0, 0), Vec(1, -1, 0), Vec(2, -2, 0)});
    CHECK(project_along(line, Vec(1, -1, 0)).size() == 1);

    CHECK_THROWS_AS(project_along(s, Vec(2, 0, 0)), precondition_error);
}

TEST_CASE("projection areas do not depend on the basis completion") {
    auto rng = oracle::seeded_rng();
    std::vector<Vec> mus = {Vec(1, -1, 0), Vec(0, 0, 1), Vec(1, 2, 2), Vec(2, -1, 3)};
    for (const auto& mu : mus) {
        for (int iter = 0; iter < 10; ++iter) {
            SupportSet A = oracle::random_support(rng, 3, 6, -3, 3);
            // alternative completion: post-compose with a fixed shear of Z^2
            LineQuotient q = line_quotient(mu);
            std::vector<Vec> alt;
            for (const auto& p : A.pts) {
                Vec y = q.map(p);
                alt.push_back(Vec(cadd(y[0], cmul(3, y[1])), y[1]));
            }
            CHECK(lattice_area(project_along(A, mu)) == lattice_area(SupportSet::of(2, alt)));
        }
    }
}

TEST_CASE("interior lattice points") {
    CHECK(interior_lattice_points(dilated_simplex2(2)) == 0);
    CHECK(interior_lattice_points(dilated_simplex2(3)) == 1);
    CHECK(interior_lattice_points(set2({Vec(0, 0), Vec(1, 0), Vec(0, 1), Vec(1, 1)})) == 0);
}

TEST_CASE("sublattice index") {
    auto r1 = sublattice_index(set3({Vec(0, 0, 0), Vec(1, 0, 0), Vec(0, 1, 0), Vec(0, 0, 1)}));
    CHECK(r1.rank == 3);
    CHECK(r1.index == 1);
    auto r2 = sublattice_index(set2({Vec(0, 0), Vec(2, 0), Vec(0, 2)}));
    CHECK(r2.rank == 2);
    CHECK(r2.index == 4);
    auto r3 = sublattice_index(set3({Vec(7, 8, 9)}));
    CHECK(r3.rank == 0);
    CHECK(r3.index == 1);
}

TEST_CASE("area and volume are unimodular and translation invariant") {
    auto rng = oracle::seeded_rng();
    for (int iter = 0; iter < 20; ++iter) {
        SupportSet A = oracle::random_support(rng, 3, 7, -3, 3);
        Mat3 M = random_unimodular(rng);
        CHECK(lattice_volume3(apply(M, A)) == lattice_volume3(A));
        CHECK(lattice_volume3(A.translated(Vec(-2, 5, 1))) == lattice_volume3(A));
    }
}
