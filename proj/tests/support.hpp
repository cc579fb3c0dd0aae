/**
 * Copyright 2026, the qdist developers.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE.txt file in the root directory of this source tree.
 */

// Test-local oracles, deliberately independent of the library's eigensolver
// and channel machinery: an LU determinant, the 2x2 Hermitian closed form,
// the literal diagonal action of a product of two decay channels, and the
// qubit-decay output-distance closed form.

#pragma once

#include <array>
#include <cmath>
#include <cstdlib>
#include <vector>

#include "qdist/linalg.hpp"
#include "qdist/random.hpp"

namespace testsupport {

using qdist::Complex;
using qdist::ComplexMatrix;

// Determinant by Gaussian elimination with partial pivoting; shares no code
// with the Jacobi eigensolver.
inline Complex lu_det(ComplexMatrix a) {
    const std::size_t n = a.dim();
    Complex det = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        for (std::size_t r = k + 1; r < n; ++r)
            if (std::abs(a.at(r, k)) > std::abs(a.at(pivot, k))) pivot = r;
        if (std::abs(a.at(pivot, k)) == 0.0) return 0.0;
        if (pivot != k) {
            for (std::size_t c = 0; c < n; ++c) std::swap(a.at(k, c), a.at(pivot, c));
            det = -det;
        }
        det *= a.at(k, k);
        for (std::size_t r = k + 1; r < n; ++r) {
            const Complex f = a.at(r, k) / a.at(k, k);
            for (std::size_t c = k; c < n; ++c) a.at(r, c) -= f * a.at(k, c);
        }
    }
    return det;
}

// Eigenvalues of [[a, c], [conj(c), b]] (a, b real), descending.
inline std::array<double, 2> eig2_closed(double a, double b, Complex c) {
    const double mean = 0.5 * (a + b);
    const double disc = std::sqrt(0.25 * (a - b) * (a - b) + std::norm(c));
    return {mean + disc, mean - disc};
}

// Diagonal action of (decay γa) ⊗ (decay γb) on diag{x, y, z, w}: each factor
// moves population from its upper level (first index) to the lower, so the
// four output entries follow by applying the 2x2 rule to rows then columns.
inline std::array<double, 4> decay_pair_diagonal(double ga, double gb, double x, double y,
                                                 double z, double w) {
    const double r0x = (1.0 - ga) * x, r0y = (1.0 - ga) * y;
    const double r1z = z + ga * x, r1w = w + ga * y;
    return {(1.0 - gb) * r0x, r0y + gb * r0x, (1.0 - gb) * r1z, r1w + gb * r1z};
}

// Largest output eigenvalue modulus for a qubit decay channel acting on a
// difference [[dp, dc], [conj(dc), -dp]].
inline double decay_output_distance(double gamma, double dp, Complex dc) {
    return std::sqrt(1.0 - gamma) *
           std::sqrt((1.0 - gamma) * dp * dp + std::norm(dc));
}

inline ComplexMatrix random_hermitian(std::size_t dim, qdist::Rng& rng) {
    ComplexMatrix a(dim);
    for (std::size_t r = 0; r < dim; ++r) {
        a.at(r, r) = rng.normal();
        for (std::size_t c = r + 1; c < dim; ++c) {
            const Complex v = 0.5 * rng.complex_normal();
            a.at(r, c) = v;
            a.at(c, r) = std::conj(v);
        }
    }
    return a;
}

} // namespace testsupport
