#pragma once

// Independent brute-force reimplementations used only in tests: alternative
// volume formulas, exhaustive covector enumeration, and small-instance
// generators. Intentionally slow; correctness anchors only.

#include <functional>
#include <random>

#include "fan.hpp"
#include "involution.hpp"

namespace symcurve::oracle {

// Lattice area via Pick: 2I + B - 2 with exhaustive boundary/interior counting.
long long vol2_pick(const SupportSet& A);

// Lattice volume via the Ehrhart counts of k*conv(A), k = 0..3 (full-dimensional
// hulls only).
long long vol3_ehrhart(const SupportSet& A);

// All integer covectors with max-norm <= bound, deduplicated up to positive
// scaling (i.e. primitive ones), excluding zero.
std::vector<Vec> covector_box(int dim, long long bound);

// {A^gamma} over a covector box, plus A itself.
std::vector<SupportSet> faces_by_enumeration(const SupportSet& A, long long bound);

// Doubles the bound from the coordinate spread until the face set stabilizes.
std::vector<SupportSet> faces_by_enumeration_stable(const SupportSet& A);

// Definitional evaluation of the symmetric-curve fan over a covector box.
TropicalFan fan_by_enumeration(const SupportSet& A, long long bound);

// Bound raised to min_bound (callers pass the largest candidate-ray entry so the
// box provably covers every positive-multiplicity family), then confirmed by one
// doubling fixed-point step while that stays affordable.
TropicalFan fan_by_enumeration_stable(const SupportSet& A, long long min_bound);

// Deterministic enumeration of all subsets of the lattice box [lo,hi]^3 with
// sizes in [min_size, max_size]; stops early if the callback returns false.
void enumerate_small_sets(long long lo, long long hi, int min_size, int max_size,
                          const std::function<bool(const SupportSet&)>& fn);

// Seeded corpora (env SYMCURVE_SEED overrides the default seed).
std::mt19937_64 seeded_rng();
SupportSet random_support(std::mt19937_64& rng, int dim, int max_points, long long lo, long long hi);

} // namespace symcurve::oracle
