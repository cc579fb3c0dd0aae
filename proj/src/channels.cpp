/**
 * Copyright 2026, the qdist developers.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE.txt file in the root directory of this source tree.
 */

#include "qdist/channels.hpp"

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

} // namespace

KrausMap::KrausMap(std::size_t dim, std::vector<ComplexMatrix> kraus)
    : dim_(dim), kraus_(std::move(kraus)) {
    if (dim_ == 0) throw DimensionMismatch("KrausMap: dimension must be positive");
    if (kraus_.empty()) throw DimensionMismatch("KrausMap: at least one Kraus operator required");
    for (std::size_t k = 0; k < kraus_.size(); ++k) {
        if (kraus_[k].dim() != dim_) {
            throw DimensionMismatch("KrausMap: operator " + std::to_string(k) + " has dimension " +
                                    std::to_string(kraus_[k].dim()) + ", expected " +
                                    std::to_string(dim_));
        }
    }
    ComplexMatrix sum(dim_);
    for (const ComplexMatrix& v : kraus_) sum = add(sum, matmul(adjoint(v), v));
    const double dev = max_abs_diff(sum, ComplexMatrix::identity(dim_));
    if (dev > kTracePreservingTol) {
        throw NotTracePreserving("KrausMap: Σ V†V deviates from identity by " + fmt_double(dev));
    }
}

ComplexMatrix apply(const KrausMap& e, const ComplexMatrix& op) {
    if (op.dim() != e.dim()) {
        throw DimensionMismatch("apply: operator dimension " + std::to_string(op.dim()) +
                                " does not match map dimension " + std::to_string(e.dim()));
    }
    ComplexMatrix out(e.dim());
    for (const ComplexMatrix& v : e.kraus()) out = add(out, matmul(matmul(v, op), adjoint(v)));
    return out;
}

DensityMatrix apply(const KrausMap& e, const DensityMatrix& rho) {
    return DensityMatrix(apply(e, rho.matrix()));
}

ComplexMatrix dual_apply(const KrausMap& e, const ComplexMatrix& op) {
    if (op.dim() != e.dim()) {
        throw DimensionMismatch("dual_apply: operator dimension " + std::to_string(op.dim()) +
                                " does not match map dimension " + std::to_string(e.dim()));
    }
    ComplexMatrix out(e.dim());
    for (const ComplexMatrix& v : e.kraus()) out = add(out, matmul(matmul(adjoint(v), op), v));
    return out;
}

MapAnalysis analyze(const KrausMap& e) {
    MapAnalysis a;
    a.dim = e.dim();
    a.v_e = hermitize(apply(e, ComplexMatrix::identity(e.dim())));
    const EigenSystem es = eig_hermitian(a.v_e);
    a.v_spectrum = es.eigenvalues;
    a.trace_v_e = trace(a.v_e).real();
    if (std::abs(a.trace_v_e - static_cast<double>(a.dim)) > 1e-9 * static_cast<double>(a.dim)) {
        throw Error("analyze: Tr[E[I]] = " + fmt_double(a.trace_v_e) + " deviates from " +
                    std::to_string(a.dim));
    }
    a.c_const = es.eigenvalues.front();
    // V_E is positive semidefinite, so the top eigenvalue must agree with the
    // largest eigenvalue modulus; disagreement flags a solver defect.
    const double cross = max_expectation(a.v_e).value;
    if (std::abs(cross - a.c_const) > 1e-12) {
        throw Error("analyze: spectral forms of C disagree by " + fmt_double(cross - a.c_const));
    }
    a.m_q = a.c_const - 1.0;
    a.unital = max_abs_diff(a.v_e, ComplexMatrix::identity(e.dim())) <= kUnitalTol;

    const DensityMatrix mixed = maximally_mixed(e.dim());
    const DensityMatrix image = apply(e, mixed);
    a.mq_identity_dev = std::abs(a.m_q / static_cast<double>(a.dim) - d_rho(image, mixed));
    a.mq_identity_ok = a.mq_identity_dev <= 1e-10;
    return a;
}

KrausMap depolarizing(std::size_t dim, double w) {
    if (dim == 0) throw DimensionMismatch("depolarizing: dimension must be positive");
    if (w < 0.0 || w >= 1.0) {
        throw ParamOutOfRange("depolarizing: w = " + fmt_double(w) + " outside [0, 1)");
    }
    const double d = static_cast<double>(dim);
    const double base = (1.0 - w) / (d * d);
    std::vector<ComplexMatrix> kraus;
    kraus.reserve(dim * dim);
    const double two_pi = 6.283185307179586476925286766559;
    for (std::size_t aa = 0; aa < dim; ++aa) {
        for (std::size_t bb = 0; bb < dim; ++bb) {
            const double coeff = (aa == 0 && bb == 0) ? std::sqrt(w + base) : std::sqrt(base);
            // Weyl operator X^a Z^b: |j> -> ω^{b·j} |j+a mod dim>.
            ComplexMatrix u(dim);
            for (std::size_t j = 0; j < dim; ++j) {
                const double phase = two_pi * static_cast<double>(bb * j) / d;
                u.at((j + aa) % dim, j) = coeff * Complex(std::cos(phase), std::sin(phase));
            }
            kraus.push_back(u);
        }
    }
    return KrausMap(dim, std::move(kraus));
}

KrausMap amplitude_damping(double gamma) {
    if (gamma < 0.0 || gamma > 1.0) {
        throw ParamOutOfRange("amplitude_damping: gamma = " + fmt_double(gamma) +
                              " outside [0, 1]");
    }
    ComplexMatrix v0(2), v1(2);
    v0.at(0, 0) = std::sqrt(1.0 - gamma);
    v0.at(1, 1) = 1.0;
    v1.at(1, 0) = std::sqrt(gamma);
    return KrausMap(2, {v0, v1});
}

KrausMap tensor_map(const KrausMap& a, const KrausMap& b) {
    std::vector<ComplexMatrix> kraus;
    kraus.reserve(a.kraus().size() * b.kraus().size());
    for (const ComplexMatrix& va : a.kraus())
        for (const ComplexMatrix& vb : b.kraus()) kraus.push_back(tensor(va, vb));
    return KrausMap(a.dim() * b.dim(), std::move(kraus));
}

KrausMap extend_with_ancilla(const KrausMap& e, std::size_t ancilla_dim) {
    if (ancilla_dim < 2) {
        throw ParamOutOfRange("extend_with_ancilla: ancilla dimension must be at least 2");
    }
    const ComplexMatrix id = ComplexMatrix::identity(ancilla_dim);
    std::vector<ComplexMatrix> kraus;
    kraus.reserve(e.kraus().size());
    for (const ComplexMatrix& v : e.kraus()) kraus.push_back(tensor(v, id));
    return KrausMap(e.dim() * ancilla_dim, std::move(kraus));
}

KrausMap unitary_mixture(const std::vector<ComplexMatrix>& unitaries,
                         const std::vector<double>& probs) {
    if (probs.size() != unitaries.size() || probs.empty()) {
        throw BadProbabilities("unitary_mixture: need matching, nonempty unitaries/probabilities");
    }
    double sum = 0.0;
    for (double p : probs) {
        if (p < 0.0) throw BadProbabilities("unitary_mixture: negative probability " + fmt_double(p));
        sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-10) {
        throw BadProbabilities("unitary_mixture: probabilities sum to " + fmt_double(sum));
    }
    const std::size_t dim = unitaries.front().dim();
    std::vector<ComplexMatrix> kraus;
    kraus.reserve(probs.size());
    for (std::size_t k = 0; k < probs.size(); ++k) {
        const ComplexMatrix& u = unitaries[k];
        if (u.dim() != dim) throw DimensionMismatch("unitary_mixture: mixed dimensions");
        const double dev = max_abs_diff(matmul(adjoint(u), u), ComplexMatrix::identity(dim));
        if (dev > 1e-10) {
            throw NotUnitary("unitary_mixture: operator " + std::to_string(k) +
                             " deviates from unitary by " + fmt_double(dev));
        }
        kraus.push_back(scale(std::sqrt(probs[k]), u));
    }
    return KrausMap(dim, std::move(kraus));
}

KrausMap random_kraus_map(std::size_t dim, std::size_t n_kraus, Rng& rng) {
    if (n_kraus == 0) throw DimensionMismatch("random_kraus_map: need at least one Kraus operator");
    std::vector<ComplexMatrix> blocks;
    blocks.reserve(n_kraus);
    ComplexMatrix s(dim);
    for (std::size_t k = 0; k < n_kraus; ++k) {
        blocks.push_back(random_gaussian_matrix(dim, rng));
        s = add(s, matmul(adjoint(blocks.back()), blocks.back()));
    }
    // Whitening factor S^{-1/2} turns Σ G†G into the identity.
    const EigenSystem es = eig_hermitian(s);
    ComplexMatrix isqrt(dim);
    for (std::size_t k = 0; k < dim; ++k) {
        const double inv = 1.0 / std::sqrt(es.eigenvalues[k]);
        for (std::size_t r = 0; r < dim; ++r)
            for (std::size_t c = 0; c < dim; ++c)
                isqrt.at(r, c) +=
                    inv * es.eigenvectors.at(r, k) * std::conj(es.eigenvectors.at(c, k));
    }
    std::vector<ComplexMatrix> kraus;
    kraus.reserve(n_kraus);
    for (const ComplexMatrix& g : blocks) kraus.push_back(matmul(g, isqrt));
    return KrausMap(dim, std::move(kraus));
}

KrausMap random_kraus_map(std::size_t dim, std::size_t n_kraus, std::uint64_t seed) {
    Rng rng(seed);
    return random_kraus_map(dim, n_kraus, rng);
}

ViolationScheme max_violation_states(const KrausMap& e) {
    const std::size_t d = e.dim();
    const ComplexMatrix mixed = scale(1.0 / static_cast<double>(d), ComplexMatrix::identity(d));
    ComplexMatrix up(2), down(2);
    up.at(0, 0) = 1.0;
    down.at(1, 1) = 1.0;
    return ViolationScheme{DensityMatrix(tensor(mixed, up)), DensityMatrix(tensor(mixed, down)),
                           extend_with_ancilla(e, 2)};
}

ViolationScheme mixed_violation_states(const KrausMap& e, double w, Rng& rng) {
    if (w <= 0.0 || w > 1.0) {
        throw ParamOutOfRange("mixed_violation_states: w = " + fmt_double(w) + " outside (0, 1]");
    }
    ViolationScheme base = max_violation_states(e);
    const DensityMatrix shared = random_density(2 * e.dim(), rng);
    const ComplexMatrix blend_a =
        add(scale(1.0 - w, shared.matrix()), scale(w, base.rho_a.matrix()));
    const ComplexMatrix blend_b =
        add(scale(1.0 - w, shared.matrix()), scale(w, base.rho_b.matrix()));
    return ViolationScheme{DensityMatrix(blend_a), DensityMatrix(blend_b),
                           std::move(base.extended)};
}

ViolationScheme mixed_violation_states(const KrausMap& e, double w, std::uint64_t seed) {
    Rng rng(seed);
    return mixed_violation_states(e, w, rng);
}

} // namespace qdist
