/**
 * Copyright 2026, the qdist developers.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE.txt file in the root directory of this source tree.
 */

// Distinguishability measures built on the spectrum of Δ = ρ_A − ρ_B: the
// state-maximized distance d_rho (largest eigenvalue modulus), the projective
// trace distance d_pi (half the absolute eigenvalue sum), the Schatten-α
// interpolation between them, the classical fixed-basis distance, and the
// classification of the sandwich d_rho <= d_pi <= N·d_rho with N = Int[dim/2].

#pragma once

#include <cstddef>
#include <vector>

#include "qdist/states.hpp"

namespace qdist {

// Largest |eigenvalue| of a Hermitian operator together with the rank-1
// projector that attains it as an expectation value.
struct MaxExpectationResult {
    double value;            // max_i |λ_i|
    double signed_value;     // the signed eigenvalue at the chosen index
    std::size_t index;       // position in the descending eigenvalue order
    bool degenerate;         // more than one |λ_i| within 1e-9 of the maximum
    int degeneracy_order;    // how many |λ_i| sit within 1e-9 of the maximum
    DensityMatrix maximizer; // projector onto the chosen eigenvector
};

// Ties within 1e-9 of the maximum modulus resolve to the lowest index in the
// descending eigenvalue order (the most positive eigenvalue wins).
// NotHermitian if the input fails the 1e-10 Hermiticity gate.
MaxExpectationResult max_expectation(const ComplexMatrix& a);

// d_rho = max_i |ζ_i|: the largest expectation-value gap over all states.
double d_rho(const DifferenceOperator& delta);
double d_rho(const DensityMatrix& a, const DensityMatrix& b);

// d_pi = (1/2)·Σ_i |ζ_i| = Σ_{ζ_i > 0} ζ_i: the projective trace distance.
double d_pi(const DifferenceOperator& delta);
double d_pi(const DensityMatrix& a, const DensityMatrix& b);

// d_alpha = (Σ_i |ζ_i|^α)^(1/α) for α in [1, ∞); α = 1 gives 2·d_pi and the
// α → ∞ limit is d_rho.  AlphaOutOfRange below 1.
double d_alpha(const DifferenceOperator& delta, double alpha);
double d_alpha(const DensityMatrix& a, const DensityMatrix& b, double alpha);

// Classical distance for a fixed projective measurement: the largest
// probability gap max_k |<k|a|k> − <k|b|k>| over the basis outcomes.  Always
// at most d_rho; equality at the Δ eigenbasis.  The basis must be orthonormal
// within 1e-10 (BasisNotOrthonormal).
double d_classical(const DensityMatrix& a, const DensityMatrix& b,
                   const std::vector<std::vector<Complex>>& basis);

// d_rho(ρ, I/dim) = (1/dim)·max(dim·λ_max − 1, 1 − dim·λ_min), evaluated
// directly from the spectrum of ρ.
double d_rho_to_mixed(const DensityMatrix& rho);

// Where the pair sits inside d_rho <= d_pi <= N·d_rho.
enum class EqualityCase {
    Equal,  // d_pi = d_rho (a single positive or single negative eigenvalue)
    Strict, // strictly between the bounds
    MaxGap, // d_pi = N·d_rho (maximal eigenvalue-modulus degeneracy)
};

// "Equal" / "Strict" / "MaxGap".
const char* equality_case_name(EqualityCase c);

struct ComparisonReport {
    double d_rho;
    double d_pi;
    int n_plus;
    int n_minus;
    int cap_N; // Int[dim/2]
    EqualityCase equality_case;
};

ComparisonReport compare(const DifferenceOperator& delta);
ComparisonReport compare(const DensityMatrix& a, const DensityMatrix& b);

} // namespace qdist
