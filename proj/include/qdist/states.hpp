/**
 * Copyright 2026, the qdist developers.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE.txt file in the root directory of this source tree.
 */

// Density matrices (validated at construction), difference operators Δ = ρ_A −
// ρ_B with cached spectra, and the feasibility polytope for traceless spectra:
// a vector of eigenvalues arises from a pair of states iff every subset sum
// lies in [-1, 1].

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "qdist/linalg.hpp"
#include "qdist/random.hpp"

namespace qdist {

// Eigenvalues with modulus at or below this tolerance count as null (they
// enter neither n_plus nor n_minus).
inline constexpr double kNullTol = 1e-9;
// Slack for the positivity / trace / feasibility gates.
inline constexpr double kStateTol = 1e-10;

// Validated quantum state.  Construction is the gate: Hermitian within 1e-10,
// unit trace within 1e-10, smallest eigenvalue >= -1e-10.  The stored matrix
// is the symmetrised input.
class DensityMatrix {
public:
    explicit DensityMatrix(const ComplexMatrix& m);

    std::size_t dim() const { return m_.dim(); }
    const ComplexMatrix& matrix() const { return m_; }

private:
    ComplexMatrix m_;
};

// --- state constructors --------------------------------------------------------

// Pure state |v><v| from (unnormalised) amplitudes; ZeroVector if ‖v‖ < 1e-12.
DensityMatrix pure(const std::vector<Complex>& amplitudes);

// Qubit state (I + x·σx + y·σy + z·σz)/2; OutsideBlochBall if x²+y²+z² > 1.
DensityMatrix bloch_qubit(double x, double y, double z);

DensityMatrix maximally_mixed(std::size_t dim);

// Two-qubit product state ((I + r·σz)/2) ⊗ ((I + r·σz)/2), r in [-1, 1].
DensityMatrix separable_rr(double r);

// Two-qubit state (I₄ + s·σx⊗σx)/4, s in [-1, 1].
DensityMatrix bell_diagonal_s(double s);

// Random full-rank state G·G†/Tr[G·G†] with complex Gaussian G.
DensityMatrix random_density(std::size_t dim, Rng& rng);

// Tr[ρ²] (real part; imaginary part is round-off).
double purity(const DensityMatrix& rho);

// --- difference operators --------------------------------------------------------

// Traceless Hermitian Δ with a cached eigensystem and signed-eigenvalue
// bookkeeping.  Construction validates: trace within 1e-10 of zero, every
// eigenvalue in [-1, 1], and every binary-subset eigenvalue sum in [-1, 1]
// (the feasibility polytope; checked exhaustively up to dimension 16, by the
// equivalent positive/negative-part sums above that).
class DifferenceOperator {
public:
    const ComplexMatrix& matrix() const { return m_; }
    const EigenSystem& eigensystem() const { return es_; }
    const std::vector<double>& eigenvalues() const { return es_.eigenvalues; }
    std::size_t dim() const { return m_.dim(); }
    // Counts of eigenvalues above +1e-9 / below -1e-9.
    int n_plus() const { return n_plus_; }
    int n_minus() const { return n_minus_; }

    friend DifferenceOperator difference(const DensityMatrix& a, const DensityMatrix& b);
    friend DifferenceOperator difference_from_spectrum(const std::vector<double>& spectrum);

private:
    explicit DifferenceOperator(const ComplexMatrix& m);

    ComplexMatrix m_;
    EigenSystem es_;
    int n_plus_ = 0;
    int n_minus_ = 0;
};

// Δ = a - b.
DifferenceOperator difference(const DensityMatrix& a, const DensityMatrix& b);

// Diagonal Δ in the computational basis with the given spectrum;
// InfeasibleSpectrum if the trace is nonzero (beyond 1e-12) or any subset sum
// leaves [-1, 1] (the error names the worst subset).
DifferenceOperator difference_from_spectrum(const std::vector<double>& spectrum);

// Canonical state pair realizing Δ: ρ_A = Δ₊ + cI, ρ_B = Δ₋ + cI with
// c = (1 - Tr[Δ₊])/dim; feasibility of Δ guarantees both pass the state gate.
std::pair<DensityMatrix, DensityMatrix> realize_states(const DifferenceOperator& delta);

// Rejection-samples a feasible spectrum: dim-1 entries uniform in [-1, 1], the
// last fixed by tracelessness, accepted iff the feasibility polytope holds.
DifferenceOperator sample_difference(std::size_t dim, Rng& rng);
DifferenceOperator sample_difference(std::size_t dim, std::uint64_t seed);

// Feasibility test used by sample_difference and the polytope tooling: true
// iff the traceless completion keeps every subset sum inside [-1, 1].
bool spectrum_feasible(const std::vector<double>& spectrum, double tol = kStateTol);

} // namespace qdist
