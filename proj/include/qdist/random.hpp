/**
 * Copyright 2026, the qdist developers.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE.txt file in the root directory of this source tree.
 */

// Seeded randomness used across the toolkit.  All draws go through Rng so a
// fixed seed reproduces every ensemble byte-for-byte on any platform.

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "qdist/linalg.hpp"

namespace qdist {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // Uniform in [0, 1), 53-bit mantissa taken straight from the engine so
    // results do not depend on the standard library's distribution internals.
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    // Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // Standard normal via Box-Muller; consumes exactly two engine draws.
    double normal() {
        const double u1 = static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53; // (0, 1]
        const double u2 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
    }

    Complex complex_normal() {
        const double re = normal();
        const double im = normal();
        return Complex(re, im);
    }

    std::uint64_t raw() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

// Matrix with i.i.d. standard complex Gaussian entries.
ComplexMatrix random_gaussian_matrix(std::size_t dim, Rng& rng);

// Haar-flavoured random unitary: Gram-Schmidt orthonormalisation of the
// columns of a complex Gaussian matrix.
ComplexMatrix random_unitary(std::size_t dim, Rng& rng);

// Random normalized state vector (complex Gaussian, normalized).
std::vector<Complex> random_state_vector(std::size_t dim, Rng& rng);

} // namespace qdist
