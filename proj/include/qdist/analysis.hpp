/**
 * Copyright 2026, the qdist developers.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE.txt file in the root directory of this source tree.
 */

// Figure-level studies: the contractivity witness W and its landscape over the
// feasible (x, y, z) polytope, the damping-pair minimum law, the product-state
// vs transverse-correlated distance curves, a Monte-Carlo hypothesis test of
// d_rho, and the feasibility-polytope export.

#pragma once

#include <cstdint>
#include <vector>

#include "qdist/channels.hpp"

namespace qdist {

// Contractivity witness W = (d_in − d_out) / (d_in·(C − 1)) for one pair of
// states pushed through a non-unital map.  W >= -1 − 1e-9 always; W < 0 flags
// amplification beyond unital-map contractivity, W = -1 saturates the bound
// d_out = C·d_in.  x, y, z record the leading diagonal entries of Δ in the
// computational basis (the scan coordinates).
struct WitnessReport {
    double x;
    double y;
    double z;
    double d_in;
    double d_out;
    double c_const;
    double w;
};

// UnitalMap when m_q <= 1e-12 (denominator vanishes); ZeroInputDistance when
// d_rho(a, b) <= 1e-12.  d_in/d_out use the generic eigenvalue route.
WitnessReport witness(const KrausMap& e, const DensityMatrix& a, const DensityMatrix& b);

// Witness landscape over diagonal differences Δ = diag{x, y, z, -(x+y+z)} on
// a four-dimensional system at fixed z.
struct ScanGrid {
    double z = 0.0;
    std::size_t resolution = 0;
    std::vector<WitnessReport> rows; // row-major over (x, y), infeasible points skipped
    double min_w = 0.0;
    double min_x = 0.0; // grid location of the minimum (first hit in row order)
    double min_y = 0.0;
};

// Scans x, y over a resolution×resolution grid on [-1, 1]².  Grid points
// outside the feasibility polytope, or with d_in <= 1e-12, are skipped.
// d_in is the exact max{|x|,|y|,|z|,|x+y+z|}; d_out is the largest eigenvalue
// modulus of E[Δ].  An optional basis unitary u places Δ -> uΔu† before the
// map acts.  Rows are computed in parallel (threads = 0 picks the hardware
// count) and merged in deterministic row order, so the result is independent
// of the thread count.
ScanGrid witness_scan(const KrausMap& e, double z, std::size_t resolution, unsigned threads = 0,
                      const ComplexMatrix* basis = nullptr);

// Minimum of W over the feasible polytope for the damping pair (γ_a, γ_b),
// 0 < γ_a <= 1, 0 <= γ_b <= γ_a: W_min = 1 − 2γ_a/(γ_a + γ_b + γ_a·γ_b),
// attained on the ray (z, −z, z).  Negative iff γ_b < γ_a/(1 + γ_a).
double w_min(double gamma_a, double gamma_b);

// The same minimum measured by evaluating the witness along the ray
// (z, -z, z), |z| <= 1/2, through the full Kraus machinery; cross-validates
// the closed form.
double w_min_line_scan(double gamma_a, double gamma_b, std::size_t points);

// One point of the product-state vs transverse-correlated comparison:
// ρ_A = ((I + r·σz)/2)⊗((I + r·σz)/2) against ρ_B = (I₄ + s·σx⊗σx)/4, with
// eigenvalues ζ = (1/4){±s − r², r² ± √(4r² + s²)}.
struct CurvePoint {
    double s;
    double d_rho;
    double d_pi;
    double bound; // 2·d_rho, the dim-4 cap
};

// Sweeps s over s_steps equally spaced values in [0, 1] at fixed r in [0, 1].
// Distances come from the constructed states and are asserted against the
// closed-form eigenvalue expressions within 1e-10; d_rho = d_pi iff s <= r².
std::vector<CurvePoint> figure1_curves(double r, std::size_t s_steps);

// Monte-Carlo binary hypothesis test: equal priors, rank-1 projective
// measurement from max_expectation, success probability (1 + d_rho)/2.
struct HypothesisResult {
    std::size_t trials;
    std::size_t successes;
    double p_hat;
    double p_theory;
    double z_score; // (p_hat − p_theory)/√(p_theory(1−p_theory)/trials); 0 if variance vanishes
};

HypothesisResult hypothesis_test(const DensityMatrix& a, const DensityMatrix& b,
                                 std::size_t trials, Rng& rng);
HypothesisResult hypothesis_test(const DensityMatrix& a, const DensityMatrix& b,
                                 std::size_t trials, std::uint64_t seed);

// --- feasibility polytope -----------------------------------------------------------

// True iff diag{x, y, z, -(x+y+z)} is a valid difference of two states: all
// seven sums |x|, |y|, |z|, |x+y|, |x+z|, |y+z|, |x+y+z| at most 1.
bool xyz_feasible(double x, double y, double z);

// Label of the tightest of the fourteen polytope faces at the given point.
const char* active_face(double x, double y, double z);

struct DomainPoint {
    double x;
    double y;
    double z;
    const char* face;
};

struct DomainCloud {
    std::vector<DomainPoint> points; // accepted draws only
    std::size_t samples = 0;         // total draws
};

// Uniform rejection sampling of the feasible polytope from the [-1, 1]³ cube;
// the accepted fraction estimates the polytope volume over 8.
DomainCloud domain_export(std::size_t samples, Rng& rng);
DomainCloud domain_export(std::size_t samples, std::uint64_t seed);

} // namespace qdist
