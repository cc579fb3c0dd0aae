/**
 * Copyright 2026, the qdist developers.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE.txt file in the root directory of this source tree.
 */

#include "qdist/random.hpp"

#include <cmath>

namespace qdist {

ComplexMatrix random_gaussian_matrix(std::size_t dim, Rng& rng) {
    ComplexMatrix g(dim);
    for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t c = 0; c < dim; ++c) g.at(r, c) = rng.complex_normal();
    return g;
}

ComplexMatrix random_unitary(std::size_t dim, Rng& rng) {
    ComplexMatrix g = random_gaussian_matrix(dim, rng);
    // Modified Gram-Schmidt on the columns.
    for (std::size_t c = 0; c < dim; ++c) {
        for (std::size_t prev = 0; prev < c; ++prev) {
            Complex proj = 0.0;
            for (std::size_t r = 0; r < dim; ++r) proj += std::conj(g.at(r, prev)) * g.at(r, c);
            for (std::size_t r = 0; r < dim; ++r) g.at(r, c) -= proj * g.at(r, prev);
        }
        double norm2 = 0.0;
        for (std::size_t r = 0; r < dim; ++r) norm2 += std::norm(g.at(r, c));
        const double inv = 1.0 / std::sqrt(norm2);
        for (std::size_t r = 0; r < dim; ++r) g.at(r, c) *= inv;
    }
    return g;
}

std::vector<Complex> random_state_vector(std::size_t dim, Rng& rng) {
    std::vector<Complex> v(dim);
    double norm2 = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
        v[i] = rng.complex_normal();
        norm2 += std::norm(v[i]);
    }
    const double inv = 1.0 / std::sqrt(norm2);
    for (Complex& z : v) z *= inv;
    return v;
}

} // namespace qdist
