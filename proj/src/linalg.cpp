/**
 * Copyright 2026, the qdist developers.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE.txt file in the root directory of this source tree.
 */

#include "qdist/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace qdist {

namespace {

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
    if (a.dim() != b.dim()) {
        throw DimensionMismatch(std::string(op) + ": dimensions " + std::to_string(a.dim()) +
                                " and " + std::to_string(b.dim()) + " differ");
    }
}

} // namespace

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::from_rows(const std::vector<std::vector<Complex>>& rows) {
    const std::size_t dim = rows.size();
    ComplexMatrix m(dim);
    for (std::size_t r = 0; r < dim; ++r) {
        if (rows[r].size() != dim) {
            throw DimensionMismatch("from_rows: row " + std::to_string(r) + " has " +
                                    std::to_string(rows[r].size()) + " entries, expected " +
                                    std::to_string(dim));
        }
        for (std::size_t c = 0; c < dim; ++c) m.at(r, c) = rows[r][c];
    }
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<double>& entries) {
    ComplexMatrix m(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) m.at(i, i) = entries[i];
    return m;
}

ComplexMatrix add(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a, b, "add");
    ComplexMatrix out(a.dim());
    for (std::size_t r = 0; r < a.dim(); ++r)
        for (std::size_t c = 0; c < a.dim(); ++c) out.at(r, c) = a.at(r, c) + b.at(r, c);
    return out;
}

ComplexMatrix sub(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a, b, "sub");
    ComplexMatrix out(a.dim());
    for (std::size_t r = 0; r < a.dim(); ++r)
        for (std::size_t c = 0; c < a.dim(); ++c) out.at(r, c) = a.at(r, c) - b.at(r, c);
    return out;
}

ComplexMatrix scale(const Complex& s, const ComplexMatrix& a) {
    ComplexMatrix out(a.dim());
    for (std::size_t r = 0; r < a.dim(); ++r)
        for (std::size_t c = 0; c < a.dim(); ++c) out.at(r, c) = s * a.at(r, c);
    return out;
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a, b, "matmul");
    const std::size_t n = a.dim();
    ComplexMatrix out(n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t k = 0; k < n; ++k) {
            const Complex ark = a.at(r, k);
            if (ark == Complex(0.0, 0.0)) continue;
            for (std::size_t c = 0; c < n; ++c) out.at(r, c) += ark * b.at(k, c);
        }
    }
    return out;
}

ComplexMatrix adjoint(const ComplexMatrix& a) {
    ComplexMatrix out(a.dim());
    for (std::size_t r = 0; r < a.dim(); ++r)
        for (std::size_t c = 0; c < a.dim(); ++c) out.at(r, c) = std::conj(a.at(c, r));
    return out;
}

Complex trace(const ComplexMatrix& a) {
    Complex t = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) t += a.at(i, i);
    return t;
}

double frobenius_norm(const ComplexMatrix& a) {
    double s = 0.0;
    for (const Complex& z : a.data()) s += std::norm(z);
    return std::sqrt(s);
}

double max_abs(const ComplexMatrix& a) {
    double m = 0.0;
    for (const Complex& z : a.data()) m = std::max(m, std::abs(z));
    return m;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a, b, "max_abs_diff");
    double m = 0.0;
    for (std::size_t r = 0; r < a.dim(); ++r)
        for (std::size_t c = 0; c < a.dim(); ++c)
            m = std::max(m, std::abs(a.at(r, c) - b.at(r, c)));
    return m;
}

ComplexMatrix outer_product(const std::vector<Complex>& v, const std::vector<Complex>& w) {
    if (v.size() != w.size()) {
        throw DimensionMismatch("outer_product: vector lengths " + std::to_string(v.size()) +
                                " and " + std::to_string(w.size()) + " differ");
    }
    ComplexMatrix out(v.size());
    for (std::size_t r = 0; r < v.size(); ++r)
        for (std::size_t c = 0; c < w.size(); ++c) out.at(r, c) = v[r] * std::conj(w[c]);
    return out;
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
    const std::size_t da = a.dim(), db = b.dim();
    ComplexMatrix out(da * db);
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < da; ++j) {
            const Complex aij = a.at(i, j);
            if (aij == Complex(0.0, 0.0)) continue;
            for (std::size_t k = 0; k < db; ++k)
                for (std::size_t l = 0; l < db; ++l)
                    out.at(i * db + k, j * db + l) = aij * b.at(k, l);
        }
    return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, std::size_t dim_a, std::size_t dim_b,
                            Subsystem keep) {
    if (m.dim() != dim_a * dim_b) {
        throw DimensionMismatch("partial_trace: matrix dimension " + std::to_string(m.dim()) +
                                " is not " + std::to_string(dim_a) + "*" + std::to_string(dim_b));
    }
    if (keep == Subsystem::A) {
        ComplexMatrix out(dim_a);
        for (std::size_t i = 0; i < dim_a; ++i)
            for (std::size_t j = 0; j < dim_a; ++j) {
                Complex s = 0.0;
                for (std::size_t k = 0; k < dim_b; ++k) s += m.at(i * dim_b + k, j * dim_b + k);
                out.at(i, j) = s;
            }
        return out;
    }
    ComplexMatrix out(dim_b);
    for (std::size_t k = 0; k < dim_b; ++k)
        for (std::size_t l = 0; l < dim_b; ++l) {
            Complex s = 0.0;
            for (std::size_t i = 0; i < dim_a; ++i) s += m.at(i * dim_b + k, i * dim_b + l);
            out.at(k, l) = s;
        }
    return out;
}

bool is_hermitian(const ComplexMatrix& a, double tol) {
    for (std::size_t r = 0; r < a.dim(); ++r)
        for (std::size_t c = r; c < a.dim(); ++c)
            if (std::abs(a.at(r, c) - std::conj(a.at(c, r))) > tol) return false;
    return true;
}

ComplexMatrix hermitize(const ComplexMatrix& a) {
    ComplexMatrix out(a.dim());
    for (std::size_t r = 0; r < a.dim(); ++r)
        for (std::size_t c = 0; c < a.dim(); ++c)
            out.at(r, c) = 0.5 * (a.at(r, c) + std::conj(a.at(c, r)));
    return out;
}

namespace {

double offdiag_norm(const ComplexMatrix& a) {
    double s = 0.0;
    for (std::size_t r = 0; r < a.dim(); ++r)
        for (std::size_t c = 0; c < a.dim(); ++c)
            if (r != c) s += std::norm(a.at(r, c));
    return std::sqrt(s);
}

// One complex Jacobi rotation zeroing A[p][q].  U acts on the (p,q) plane as
//   [ c            -s·e^{iφ} ]
//   [ s·e^{-iφ}     c        ]
// with φ = arg(A[p][q]); A <- U†AU and V <- V·U.
void rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
    const Complex apq = a.at(p, q);
    const double b = std::abs(apq);
    if (b == 0.0) return;
    const double phi = std::arg(apq);
    const double alpha = a.at(p, p).real();
    const double gamma = a.at(q, q).real();
    const double theta = (alpha - gamma) / (2.0 * b);
    const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;
    const Complex eip(std::cos(phi), std::sin(phi));
    const Complex ein = std::conj(eip);

    const std::size_t n = a.dim();
    // Column update A <- A·U.
    for (std::size_t k = 0; k < n; ++k) {
        const Complex akp = a.at(k, p), akq = a.at(k, q);
        a.at(k, p) = c * akp + s * ein * akq;
        a.at(k, q) = -s * eip * akp + c * akq;
    }
    // Row update A <- U†·A.
    for (std::size_t k = 0; k < n; ++k) {
        const Complex apk = a.at(p, k), aqk = a.at(q, k);
        a.at(p, k) = c * apk + s * eip * aqk;
        a.at(q, k) = -s * ein * apk + c * aqk;
    }
    // The (p,q) element is zero by construction and the diagonals are real up
    // to round-off; pin both so the noise cannot accumulate across sweeps.
    a.at(p, q) = 0.0;
    a.at(q, p) = 0.0;
    a.at(p, p) = Complex(a.at(p, p).real(), 0.0);
    a.at(q, q) = Complex(a.at(q, q).real(), 0.0);

    // Accumulate the eigenvector basis V <- V·U.
    for (std::size_t k = 0; k < n; ++k) {
        const Complex vkp = v.at(k, p), vkq = v.at(k, q);
        v.at(k, p) = c * vkp + s * ein * vkq;
        v.at(k, q) = -s * eip * vkp + c * vkq;
    }
}

} // namespace

EigenSystem eig_hermitian(const ComplexMatrix& input) {
    if (!is_hermitian(input, kHermitianTol)) {
        throw NotHermitian("eig_hermitian: input deviates from Hermitian by more than " +
                           std::to_string(kHermitianTol));
    }
    const std::size_t n = input.dim();
    ComplexMatrix a = hermitize(input);
    ComplexMatrix v = ComplexMatrix::identity(n);

    const double threshold = 1e-13 * frobenius_norm(a);
    constexpr int kMaxSweeps = 100;
    bool converged = (n <= 1) || offdiag_norm(a) <= threshold;
    for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) rotate(a, v, p, q);
        converged = offdiag_norm(a) <= threshold;
    }
    if (!converged) {
        throw NoConvergence("eig_hermitian: off-diagonal mass still above threshold after " +
                            std::to_string(kMaxSweeps) + " sweeps");
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&a](std::size_t i, std::size_t j) {
        return a.at(i, i).real() > a.at(j, j).real();
    });

    EigenSystem es;
    es.eigenvalues.resize(n);
    es.eigenvectors = ComplexMatrix(n);
    for (std::size_t k = 0; k < n; ++k) {
        es.eigenvalues[k] = a.at(order[k], order[k]).real();
        for (std::size_t r = 0; r < n; ++r) es.eigenvectors.at(r, k) = v.at(r, order[k]);
    }
    return es;
}

} // namespace qdist
