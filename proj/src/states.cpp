/**
 * Copyright 2026, the qdist developers.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE.txt file in the root directory of this source tree.
 */

#include "qdist/states.hpp"

#include <cmath>
#include <cstdio>
#include <string>

namespace qdist {

namespace {

std::string fmt_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", x);
    return buf;
}

struct FeasibilityReport {
    bool ok = true;
    double worst_sum = 0.0;
    std::vector<int> worst_subset; // 0/1 mask over the spectrum as given
};

// Worst binary-subset sum of the spectrum.  Exhaustive up to dimension 16;
// beyond that, the extreme subsets are exactly the all-positive and
// all-negative ones, so only those two are formed.
FeasibilityReport check_subset_sums(const std::vector<double>& spectrum, double tol) {
    const std::size_t n = spectrum.size();
    FeasibilityReport rep;
    if (n <= 16) {
        const std::uint32_t total = 1u << n;
        for (std::uint32_t mask = 1; mask < total; ++mask) {
            double sum = 0.0;
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (1u << i)) sum += spectrum[i];
            if (std::abs(sum) > std::abs(rep.worst_sum)) {
                rep.worst_sum = sum;
                rep.worst_subset.assign(n, 0);
                for (std::size_t i = 0; i < n; ++i)
                    if (mask & (1u << i)) rep.worst_subset[i] = 1;
            }
        }
    } else {
        double pos = 0.0, neg = 0.0;
        for (double v : spectrum) (v > 0.0 ? pos : neg) += v;
        const bool pos_worse = pos >= -neg;
        rep.worst_sum = pos_worse ? pos : neg;
        rep.worst_subset.assign(n, 0);
        for (std::size_t i = 0; i < n; ++i)
            if ((spectrum[i] > 0.0) == pos_worse) rep.worst_subset[i] = 1;
    }
    rep.ok = std::abs(rep.worst_sum) <= 1.0 + tol;
    return rep;
}

std::string subset_to_string(const std::vector<int>& subset) {
    std::string s = "(";
    for (std::size_t i = 0; i < subset.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(subset[i]);
    }
    return s + ")";
}

} // namespace

bool spectrum_feasible(const std::vector<double>& spectrum, double tol) {
    double pos = 0.0, neg = 0.0;
    for (double v : spectrum) (v > 0.0 ? pos : neg) += v;
    return pos <= 1.0 + tol && neg >= -1.0 - tol;
}

DensityMatrix::DensityMatrix(const ComplexMatrix& m) {
    if (!is_hermitian(m, kHermitianTol)) {
        throw NotHermitian("density matrix deviates from Hermitian beyond 1e-10");
    }
    m_ = hermitize(m);
    const Complex tr = trace(m_);
    if (std::abs(tr - Complex(1.0, 0.0)) > kStateTol) {
        throw TraceNotOne("density matrix trace is " + fmt_double(tr.real()) +
                          (std::abs(tr.imag()) > 0.0 ? "+" + fmt_double(tr.imag()) + "i" : "") +
                          ", expected 1");
    }
    const EigenSystem es = eig_hermitian(m_);
    const double min_eig = es.eigenvalues.back();
    if (min_eig < -kStateTol) {
        throw NotPositive("density matrix has eigenvalue " + fmt_double(min_eig));
    }
}

DensityMatrix pure(const std::vector<Complex>& amplitudes) {
    double norm2 = 0.0;
    for (const Complex& a : amplitudes) norm2 += std::norm(a);
    const double norm = std::sqrt(norm2);
    if (norm < 1e-12) throw ZeroVector("pure: amplitude vector has norm below 1e-12");
    std::vector<Complex> v(amplitudes);
    for (Complex& a : v) a /= norm;
    return DensityMatrix(outer_product(v, v));
}

DensityMatrix bloch_qubit(double x, double y, double z) {
    const double r2 = x * x + y * y + z * z;
    if (r2 > 1.0 + 1e-12) {
        throw OutsideBlochBall("bloch_qubit: |r| = " + fmt_double(std::sqrt(r2)) + " exceeds 1");
    }
    ComplexMatrix m(2);
    m.at(0, 0) = 0.5 * (1.0 + z);
    m.at(0, 1) = 0.5 * Complex(x, -y);
    m.at(1, 0) = 0.5 * Complex(x, y);
    m.at(1, 1) = 0.5 * (1.0 - z);
    return DensityMatrix(m);
}

DensityMatrix maximally_mixed(std::size_t dim) {
    if (dim == 0) throw DimensionMismatch("maximally_mixed: dimension must be positive");
    return DensityMatrix(scale(1.0 / static_cast<double>(dim), ComplexMatrix::identity(dim)));
}

DensityMatrix separable_rr(double r) {
    if (std::abs(r) > 1.0 + 1e-12) {
        throw ParamOutOfRange("separable_rr: r = " + fmt_double(r) + " outside [-1, 1]");
    }
    const ComplexMatrix q = ComplexMatrix::diagonal({0.5 * (1.0 + r), 0.5 * (1.0 - r)});
    return DensityMatrix(tensor(q, q));
}

DensityMatrix bell_diagonal_s(double s) {
    if (std::abs(s) > 1.0 + 1e-12) {
        throw ParamOutOfRange("bell_diagonal_s: s = " + fmt_double(s) + " outside [-1, 1]");
    }
    ComplexMatrix m = scale(0.25, ComplexMatrix::identity(4));
    // s·σx⊗σx/4 fills the antidiagonal.
    for (std::size_t i = 0; i < 4; ++i) m.at(i, 3 - i) += 0.25 * s;
    return DensityMatrix(m);
}

DensityMatrix random_density(std::size_t dim, Rng& rng) {
    const ComplexMatrix g = random_gaussian_matrix(dim, rng);
    ComplexMatrix m = matmul(g, adjoint(g));
    const double tr = trace(m).real();
    return DensityMatrix(scale(1.0 / tr, m));
}

double purity(const DensityMatrix& rho) {
    return trace(matmul(rho.matrix(), rho.matrix())).real();
}

DifferenceOperator::DifferenceOperator(const ComplexMatrix& m) : m_(hermitize(m)) {
    if (!is_hermitian(m, kHermitianTol)) {
        throw NotHermitian("difference operator deviates from Hermitian beyond 1e-10");
    }
    const double tr = trace(m_).real();
    if (std::abs(tr) > kStateTol) {
        throw InfeasibleSpectrum("difference operator trace " + fmt_double(tr) + " is nonzero");
    }
    es_ = eig_hermitian(m_);
    for (double v : es_.eigenvalues) {
        if (std::abs(v) > 1.0 + kStateTol) {
            throw InfeasibleSpectrum("difference operator eigenvalue " + fmt_double(v) +
                                     " outside [-1, 1]");
        }
        if (v > kNullTol) ++n_plus_;
        else if (v < -kNullTol) ++n_minus_;
    }
    const FeasibilityReport rep = check_subset_sums(es_.eigenvalues, kStateTol);
    if (!rep.ok) {
        throw InfeasibleSpectrum("eigenvalue subset " + subset_to_string(rep.worst_subset) +
                                 " sums to " + fmt_double(rep.worst_sum) + ", outside [-1, 1]");
    }
}

DifferenceOperator difference(const DensityMatrix& a, const DensityMatrix& b) {
    if (a.dim() != b.dim()) {
        throw DimensionMismatch("difference: state dimensions " + std::to_string(a.dim()) +
                                " and " + std::to_string(b.dim()) + " differ");
    }
    return DifferenceOperator(sub(a.matrix(), b.matrix()));
}

DifferenceOperator difference_from_spectrum(const std::vector<double>& spectrum) {
    if (spectrum.empty()) throw InfeasibleSpectrum("spectrum is empty");
    double sum = 0.0;
    for (double v : spectrum) sum += v;
    if (std::abs(sum) > 1e-12) {
        throw InfeasibleSpectrum("spectrum trace " + fmt_double(sum) + " is nonzero");
    }
    for (double v : spectrum) {
        if (std::abs(v) > 1.0 + kStateTol) {
            throw InfeasibleSpectrum("spectrum entry " + fmt_double(v) + " outside [-1, 1]");
        }
    }
    const FeasibilityReport rep = check_subset_sums(spectrum, kStateTol);
    if (!rep.ok) {
        throw InfeasibleSpectrum("subset " + subset_to_string(rep.worst_subset) + " sums to " +
                                 fmt_double(rep.worst_sum) + ", outside [-1, 1]");
    }
    std::vector<double> diag(spectrum);
    return DifferenceOperator(ComplexMatrix::diagonal(diag));
}

std::pair<DensityMatrix, DensityMatrix> realize_states(const DifferenceOperator& delta) {
    const std::size_t n = delta.dim();
    const EigenSystem& es = delta.eigensystem();
    ComplexMatrix plus(n), minus(n);
    double trace_plus = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double v = es.eigenvalues[k];
        if (v == 0.0) continue;
        std::vector<Complex> col(n);
        for (std::size_t r = 0; r < n; ++r) col[r] = es.eigenvectors.at(r, k);
        const ComplexMatrix proj = outer_product(col, col);
        if (v > 0.0) {
            plus = add(plus, scale(v, proj));
            trace_plus += v;
        } else {
            minus = add(minus, scale(-v, proj));
        }
    }
    const double c = (1.0 - trace_plus) / static_cast<double>(n);
    const ComplexMatrix shift = scale(c, ComplexMatrix::identity(n));
    return {DensityMatrix(add(plus, shift)), DensityMatrix(add(minus, shift))};
}

DifferenceOperator sample_difference(std::size_t dim, Rng& rng) {
    if (dim < 2) throw DimensionMismatch("sample_difference: dimension must be at least 2");
    constexpr long kMaxAttempts = 10'000'000;
    std::vector<double> spectrum(dim);
    for (long attempt = 0; attempt < kMaxAttempts; ++attempt) {
        double sum = 0.0;
        for (std::size_t i = 0; i + 1 < dim; ++i) {
            spectrum[i] = rng.uniform(-1.0, 1.0);
            sum += spectrum[i];
        }
        spectrum[dim - 1] = -sum;
        if (std::abs(spectrum[dim - 1]) > 1.0) continue;
        if (!spectrum_feasible(spectrum, kStateTol)) continue;
        return difference_from_spectrum(spectrum);
    }
    throw Error("sample_difference: no feasible spectrum after " + std::to_string(kMaxAttempts) +
                " attempts at dimension " + std::to_string(dim));
}

DifferenceOperator sample_difference(std::size_t dim, std::uint64_t seed) {
    Rng rng(seed);
    return sample_difference(dim, rng);
}

} // namespace qdist
