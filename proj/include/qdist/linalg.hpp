/**
 * Copyright 2026, the qdist developers.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE.txt file in the root directory of this source tree.
 */

// Dense complex matrices and a cyclic Jacobi eigensolver for Hermitian
// operators.  Everything downstream (states, distances, channels) is built on
// the full eigensystems produced here.

#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "qdist/errors.hpp"

namespace qdist {

using Complex = std::complex<double>;

// Tolerance used when deciding whether an operator is Hermitian.
inline constexpr double kHermitianTol = 1e-10;

// Square complex matrix, row-major dense storage.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

    static ComplexMatrix identity(std::size_t dim);
    // Builds from explicit rows; throws DimensionMismatch unless square.
    static ComplexMatrix from_rows(const std::vector<std::vector<Complex>>& rows);
    static ComplexMatrix diagonal(const std::vector<double>& entries);

    std::size_t dim() const { return dim_; }

    Complex& at(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
    const Complex& at(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }

    const std::vector<Complex>& data() const { return data_; }

private:
    std::size_t dim_ = 0;
    std::vector<Complex> data_;
};

// --- arithmetic -------------------------------------------------------------

ComplexMatrix add(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix sub(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix scale(const Complex& s, const ComplexMatrix& a);
ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix adjoint(const ComplexMatrix& a);

Complex trace(const ComplexMatrix& a);
double frobenius_norm(const ComplexMatrix& a);
// Largest entrywise modulus.
double max_abs(const ComplexMatrix& a);
// Largest entrywise modulus of a - b; matrices must share a dimension.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

// |v><w| outer product of two vectors of equal length.
ComplexMatrix outer_product(const std::vector<Complex>& v, const std::vector<Complex>& w);

// Kronecker product, row-major convention: (a ⊗ b)[i*db+k][j*db+l] = a[i][j]·b[k][l].
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);

enum class Subsystem { A, B };

// Partial trace of a (dim_a·dim_b)-dimensional bipartite operator, keeping the
// requested factor.
ComplexMatrix partial_trace(const ComplexMatrix& m, std::size_t dim_a, std::size_t dim_b,
                            Subsystem keep);

// --- Hermitian structure ------------------------------------------------------

bool is_hermitian(const ComplexMatrix& a, double tol = kHermitianTol);
// (A + A†)/2; used to scrub representable round-off before eigendecomposition.
ComplexMatrix hermitize(const ComplexMatrix& a);

// Full eigensystem of a Hermitian operator.  Eigenvalues are sorted in
// descending order; eigenvectors are the matching columns of an exactly
// deterministic unitary (ties keep the rotation-order of the solver).
struct EigenSystem {
    std::vector<double> eigenvalues;
    ComplexMatrix eigenvectors; // column k pairs with eigenvalues[k]
};

// Cyclic Jacobi diagonalisation with complex 2x2 rotations.  Sweeps every
// off-diagonal pair in row order until the off-diagonal Frobenius mass drops
// below 1e-13·‖A‖_F; throws NoConvergence after 100 sweeps, NotHermitian if
// the input fails the 1e-10 Hermiticity gate.  Inputs within the gate are
// symmetrised before iterating.
EigenSystem eig_hermitian(const ComplexMatrix& a);

} // namespace qdist
