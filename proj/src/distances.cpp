/**
 * Copyright 2026, the qdist developers.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE.txt file in the root directory of this source tree.
 */

#include "qdist/distances.hpp"

#include <cmath>
#include <string>

namespace qdist {

namespace {

constexpr double kDegeneracyTol = 1e-9;
constexpr double kClassifyTol = 1e-9;

MaxExpectationResult max_expectation_from(const EigenSystem& es) {
    const std::vector<double>& eigs = es.eigenvalues;
    const std::size_t n = eigs.size();
    double value = 0.0;
    for (double v : eigs) value = std::max(value, std::abs(v));

    std::size_t chosen = 0;
    int order = 0;
    bool found = false;
    for (std::size_t i = 0; i < n; ++i) {
        if (std::abs(eigs[i]) >= value - kDegeneracyTol) {
            ++order;
            if (!found) {
                chosen = i;
                found = true;
            }
        }
    }

    std::vector<Complex> col(n);
    for (std::size_t r = 0; r < n; ++r) col[r] = es.eigenvectors.at(r, chosen);
    return MaxExpectationResult{value,
                                eigs[chosen],
                                chosen,
                                order > 1,
                                order,
                                DensityMatrix(outer_product(col, col))};
}

} // namespace

MaxExpectationResult max_expectation(const ComplexMatrix& a) {
    return max_expectation_from(eig_hermitian(a));
}

double d_rho(const DifferenceOperator& delta) {
    double value = 0.0;
    for (double v : delta.eigenvalues()) value = std::max(value, std::abs(v));
    return value;
}

double d_rho(const DensityMatrix& a, const DensityMatrix& b) {
    return d_rho(difference(a, b));
}

double d_pi(const DifferenceOperator& delta) {
    double sum = 0.0;
    for (double v : delta.eigenvalues()) sum += std::abs(v);
    return 0.5 * sum;
}

double d_pi(const DensityMatrix& a, const DensityMatrix& b) {
    return d_pi(difference(a, b));
}

double d_alpha(const DifferenceOperator& delta, double alpha) {
    if (std::isnan(alpha) || alpha < 1.0) {
        throw AlphaOutOfRange("d_alpha: alpha must be at least 1");
    }
    if (std::isinf(alpha)) return d_rho(delta);
    double m = 0.0;
    for (double v : delta.eigenvalues()) m = std::max(m, std::abs(v));
    if (m == 0.0) return 0.0;
    // Factor out the largest modulus so the powers stay in [0, 1]; exact at
    // alpha = 1 and overflow-free for arbitrarily large alpha.
    double sum = 0.0;
    for (double v : delta.eigenvalues()) sum += std::pow(std::abs(v) / m, alpha);
    return m * std::pow(sum, 1.0 / alpha);
}

double d_alpha(const DensityMatrix& a, const DensityMatrix& b, double alpha) {
    return d_alpha(difference(a, b), alpha);
}

double d_classical(const DensityMatrix& a, const DensityMatrix& b,
                   const std::vector<std::vector<Complex>>& basis) {
    const std::size_t n = a.dim();
    if (b.dim() != n) {
        throw DimensionMismatch("d_classical: state dimensions differ");
    }
    if (basis.size() != n) {
        throw BasisNotOrthonormal("d_classical: basis has " + std::to_string(basis.size()) +
                                  " vectors, expected " + std::to_string(n));
    }
    for (const auto& v : basis) {
        if (v.size() != n) {
            throw BasisNotOrthonormal("d_classical: basis vector length mismatch");
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            Complex ip = 0.0;
            for (std::size_t k = 0; k < n; ++k) ip += std::conj(basis[i][k]) * basis[j][k];
            const Complex expected = (i == j) ? Complex(1.0, 0.0) : Complex(0.0, 0.0);
            if (std::abs(ip - expected) > 1e-10) {
                throw BasisNotOrthonormal("d_classical: vectors " + std::to_string(i) + "," +
                                          std::to_string(j) + " deviate from orthonormal by " +
                                          std::to_string(std::abs(ip - expected)));
            }
        }
    }
    const ComplexMatrix delta = sub(a.matrix(), b.matrix());
    double best = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        Complex e = 0.0;
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c)
                e += std::conj(basis[i][r]) * delta.at(r, c) * basis[i][c];
        best = std::max(best, std::abs(e.real()));
    }
    return best;
}

double d_rho_to_mixed(const DensityMatrix& rho) {
    const EigenSystem es = eig_hermitian(rho.matrix());
    const double d = static_cast<double>(rho.dim());
    return std::max(d * es.eigenvalues.front() - 1.0, 1.0 - d * es.eigenvalues.back()) / d;
}

const char* equality_case_name(EqualityCase c) {
    switch (c) {
        case EqualityCase::Equal: return "Equal";
        case EqualityCase::Strict: return "Strict";
        case EqualityCase::MaxGap: return "MaxGap";
    }
    return "unknown";
}

ComparisonReport compare(const DifferenceOperator& delta) {
    ComparisonReport rep;
    rep.d_rho = d_rho(delta);
    rep.d_pi = d_pi(delta);
    rep.n_plus = delta.n_plus();
    rep.n_minus = delta.n_minus();
    rep.cap_N = static_cast<int>(delta.dim() / 2);
    // A nonzero traceless Δ has n_plus, n_minus >= 1, so <= 1 means exactly
    // one; the <= additionally classifies identical states (Δ = 0) as Equal.
    if (rep.n_plus <= 1 || rep.n_minus <= 1) {
        rep.equality_case = EqualityCase::Equal;
    } else if (std::abs(rep.d_pi - rep.cap_N * rep.d_rho) <=
               kClassifyTol * std::max(1.0, rep.cap_N * rep.d_rho)) {
        rep.equality_case = EqualityCase::MaxGap;
    } else {
        rep.equality_case = EqualityCase::Strict;
    }
    return rep;
}

ComparisonReport compare(const DensityMatrix& a, const DensityMatrix& b) {
    return compare(difference(a, b));
}

} // namespace qdist
