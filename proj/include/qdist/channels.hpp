/**
 * Copyright 2026, the qdist developers.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE.txt file in the root directory of this source tree.
 */

// CPTP maps in Kraus representation, their duals, and the spectral analysis of
// V_E = E[I]: the contraction constant C (largest eigenvalue of V_E) bounds
// d_rho(E[ρ_A], E[ρ_B]) <= C·d_rho(ρ_A, ρ_B), and M_Q = C − 1 quantifies how
// far the map is from unital.

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "qdist/distances.hpp"
#include "qdist/random.hpp"
#include "qdist/states.hpp"

namespace qdist {

// Trace-preservation gate tolerance for Kraus sets.
inline constexpr double kTracePreservingTol = 1e-10;
// Entrywise tolerance for classifying a map as unital.
inline constexpr double kUnitalTol = 1e-9;

// Completely positive trace-preserving map E[ρ] = Σ_k V_k ρ V_k†.
// Construction validates ‖Σ_k V_k† V_k − I‖_max <= 1e-10.
class KrausMap {
public:
    KrausMap(std::size_t dim, std::vector<ComplexMatrix> kraus);

    std::size_t dim() const { return dim_; }
    const std::vector<ComplexMatrix>& kraus() const { return kraus_; }

private:
    std::size_t dim_;
    std::vector<ComplexMatrix> kraus_;
};

// Forward action Σ V op V† on an arbitrary operator / on a validated state.
ComplexMatrix apply(const KrausMap& e, const ComplexMatrix& op);
DensityMatrix apply(const KrausMap& e, const DensityMatrix& rho);

// Dual (Heisenberg-picture) action Σ V† op V; satisfies
// Tr[A·E[ρ]] = Tr[E#[A]·ρ] and fixes the identity (Σ V†V = I).
ComplexMatrix dual_apply(const KrausMap& e, const ComplexMatrix& op);

struct MapAnalysis {
    std::size_t dim;
    ComplexMatrix v_e;               // E[I] = Σ V V†
    std::vector<double> v_spectrum;  // eigenvalues of V_E, descending
    double trace_v_e;                // equals dim up to round-off
    double c_const;                  // largest eigenvalue of V_E
    double m_q;                      // c_const − 1 (map quantumness)
    bool unital;                     // ‖V_E − I‖_max <= 1e-9
    // Deviation |m_q/dim − d_rho(E[I/dim], I/dim)| and whether it is below
    // 1e-10.  The two sides agree exactly when the upward spectral deviation
    // of V_E dominates (c − 1 >= 1 − min eigenvalue), which holds for every
    // constructor family in this header; a generic Kraus map can have a
    // downward-dominant spectrum, making the deviation strictly positive.
    double mq_identity_dev;
    bool mq_identity_ok;
};

MapAnalysis analyze(const KrausMap& e);

// --- constructors ---------------------------------------------------------------

// E[ρ] = w·ρ + (1−w)·Tr[ρ]·I/dim via the discrete Weyl (shift/clock) Kraus
// set; w in [0, 1).
KrausMap depolarizing(std::size_t dim, double w);

// Zero-temperature decay of the upper level (basis index 0) into the lower
// (index 1): V₀ = [[√(1−γ), 0], [0, 1]], V₁ = [[0, 0], [√γ, 0]]; γ in [0, 1].
// V_E = diag{1−γ, 1+γ}, so C = 1+γ.
KrausMap amplitude_damping(double gamma);

// Product map (E_a ⊗ E_b) with Kraus set {V_a ⊗ V_b}.
KrausMap tensor_map(const KrausMap& a, const KrausMap& b);

// E ⊗ Id on a system extended by a passive ancilla of dimension >= 2; the
// spectrum of V_E is unchanged, so C and M_Q are preserved.
KrausMap extend_with_ancilla(const KrausMap& e, std::size_t ancilla_dim);

// Σ_k p_k U_k ρ U_k†; always unital.  Probabilities must be nonnegative and
// sum to 1 within 1e-10 (BadProbabilities); each U unitary within 1e-10
// (NotUnitary).
KrausMap unitary_mixture(const std::vector<ComplexMatrix>& unitaries,
                         const std::vector<double>& probs);

// Generic CPTP map: Gaussian blocks G_k, whitened by S^{-1/2} with S = Σ G†G.
KrausMap random_kraus_map(std::size_t dim, std::size_t n_kraus, Rng& rng);
KrausMap random_kraus_map(std::size_t dim, std::size_t n_kraus, std::uint64_t seed);

// --- contraction-violation schemes ------------------------------------------------

// States and extended map realizing the maximal d_rho amplification of E:
// ρ_A/B = (I/dim) ⊗ |0/1><0/1| on system ⊗ qubit-ancilla, pushed through
// Ẽ = E ⊗ Id₂; the input distance is exactly 1/dim, the output distance
// C/dim, while the trace distance d_pi stays 1 on both sides.
struct ViolationScheme {
    DensityMatrix rho_a;
    DensityMatrix rho_b;
    KrausMap extended;
};

ViolationScheme max_violation_states(const KrausMap& e);

// Convex blend of the maximal scheme with one shared random state:
// ρ'_{A/B} = (1−w)·ϱ_sa + w·ρ_{A/B}, 0 < w <= 1.  The shared part cancels in
// Δ, so the amplification ratio C is preserved for every w.
ViolationScheme mixed_violation_states(const KrausMap& e, double w, Rng& rng);
ViolationScheme mixed_violation_states(const KrausMap& e, double w, std::uint64_t seed);

} // namespace qdist
