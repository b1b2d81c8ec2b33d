#pragma once

#include "support_set.hpp"

namespace symcurve {

// Convex hull of a planar point set: counterclockwise vertex cycle starting at the
// lexicographic minimum. Degenerate hulls keep affdim 0 (one vertex) or 1 (two).
struct Hull2 {
    int affdim = 0;
    std::vector<Vec> cycle;
};

Hull2 hull2(const std::vector<Vec>& points);

struct Facet3 {
    Vec normal;      // primitive outward normal
    long long offset; // max of normal over the set
    SupportSet face;  // all set points on the facet
};

struct Hull3 {
    int affdim = 0;
    // affdim == 3
    std::vector<Facet3> facets;
    // affdim == 2: primitive plane normal (lex-positive sign)
    Vec plane_normal;
    // affdim == 1: primitive direction and the two extreme points
    Vec line_dir;
    Vec line_min, line_max;
};

Hull3 hull3(const SupportSet& A);

// A face of the finite set A: its intersection with a face of conv(A), together
// with one exposing covector (0 for A itself) and the affine dimension.
struct Face {
    SupportSet pts;
    Vec witness;
    int dim = 0;
};

// All faces of A including A itself; deterministic order (by dimension, then points).
std::vector<Face> faces(const SupportSet& A);

} // namespace symcurve
