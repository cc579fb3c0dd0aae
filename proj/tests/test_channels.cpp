/**
 * Copyright 2026, the qdist developers.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE.txt file in the root directory of this source tree.
 */

#include <cmath>
#include <vector>

#include "doctest.h"

#include "qdist/channels.hpp"
#include "qdist/distances.hpp"
#include "support.hpp"

using namespace qdist;
using testsupport::decay_pair_diagonal;
using testsupport::random_hermitian;

namespace {

Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
    return trace(matmul(a, b));
}

} // namespace

TEST_CASE("Kraus sets must preserve the trace") {
    // valid single-Kraus map: a unitary
    Rng rng(420);
    const ComplexMatrix u = random_unitary(3, rng);
    CHECK_NOTHROW(KrausMap(3, {u}));

    // a contraction alone is not trace preserving
    CHECK_THROWS_AS(KrausMap(2, {scale(0.5, ComplexMatrix::identity(2))}),
                    NotTracePreserving);
    // dimension mismatch between operators
    CHECK_THROWS_AS(KrausMap(2, {ComplexMatrix::identity(3)}), DimensionMismatch);
    CHECK_THROWS_AS(KrausMap(2, std::vector<ComplexMatrix>{}), DimensionMismatch);
}

TEST_CASE("zero-temperature decay acts by the textbook matrix rule") {
    const KrausMap damp = amplitude_damping(0.5);

    // population flows from the upper level (index 0) into the lower
    const ComplexMatrix out = apply(damp, ComplexMatrix::diagonal({1.0, 0.0}));
    CHECK(out.at(0, 0).real() == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(out.at(1, 1).real() == doctest::Approx(0.5).epsilon(1e-14));

    // general qubit rule: [[p, c], [c*, q]] -> [[(1-γ)p, √(1-γ)c], [·, q+γp]]
    Rng rng(421);
    for (int rep = 0; rep < 30; ++rep) {
        const double gamma = rng.uniform01();
        const KrausMap e = amplitude_damping(gamma);
        const ComplexMatrix rho = random_density(2, rng).matrix();
        const ComplexMatrix mapped = apply(e, rho);
        CHECK(std::abs(mapped.at(0, 0) - (1.0 - gamma) * rho.at(0, 0)) < 1e-13);
        CHECK(std::abs(mapped.at(0, 1) - std::sqrt(1.0 - gamma) * rho.at(0, 1)) < 1e-13);
        CHECK(std::abs(mapped.at(1, 1) - (rho.at(1, 1) + gamma * rho.at(0, 0))) < 1e-13);
    }

    CHECK_THROWS_AS(amplitude_damping(-0.1), ParamOutOfRange);
    CHECK_THROWS_AS(amplitude_damping(1.1), ParamOutOfRange);
}

TEST_CASE("the dual map satisfies the adjoint identity and fixes the identity") {
    const KrausMap damp = amplitude_damping(0.5);

    // dual action on the upper-level projector keeps only the survival weight
    const ComplexMatrix dual_p0 = dual_apply(damp, ComplexMatrix::diagonal({1.0, 0.0}));
    CHECK(dual_p0.at(0, 0).real() == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(std::abs(dual_p0.at(1, 1)) < 1e-14);

    // trace-preservation makes the dual unital
    CHECK(max_abs_diff(dual_apply(damp, ComplexMatrix::identity(2)),
                       ComplexMatrix::identity(2)) < 1e-14);

    // Tr[A·E[ρ]] = Tr[E#[A]·ρ] on random Hermitian pairs, several maps
    Rng rng(422);
    for (int rep = 0; rep < 30; ++rep) {
        const std::size_t dim = 2 + rep % 4;
        const KrausMap e = random_kraus_map(dim, 1 + rep % 3, rng);
        const ComplexMatrix a = random_hermitian(dim, rng);
        const ComplexMatrix rho = random_density(dim, rng).matrix();
        const Complex lhs = hs_inner(a, apply(e, rho));
        const Complex rhs = hs_inner(dual_apply(e, a), rho);
        CHECK(std::abs(lhs - rhs) < 1e-10);
    }
}

TEST_CASE("map analysis of the decay channel") {
    for (double gamma : {0.0, 0.25, 0.5, 0.9, 1.0}) {
        const MapAnalysis ana = analyze(amplitude_damping(gamma));
        CHECK(ana.dim == 2);
        CHECK(ana.v_e.at(0, 0).real() == doctest::Approx(1.0 - gamma).epsilon(1e-14));
        CHECK(ana.v_e.at(1, 1).real() == doctest::Approx(1.0 + gamma).epsilon(1e-14));
        CHECK(ana.trace_v_e == doctest::Approx(2.0).epsilon(1e-14));
        CHECK(ana.c_const == doctest::Approx(1.0 + gamma).epsilon(1e-13));
        CHECK(ana.m_q == doctest::Approx(gamma).epsilon(1e-13));
        CHECK(ana.unital == (gamma == 0.0));
        CHECK(ana.mq_identity_ok); // upward-dominant spectrum in dimension 2
    }
}

TEST_CASE("depolarizing maps shrink differences uniformly and stay unital") {
    Rng rng(423);
    for (std::size_t dim : {2, 3, 4}) {
        for (double w : {0.0, 0.3, 0.9}) {
            const KrausMap e = depolarizing(dim, w);
            CHECK(e.kraus().size() == dim * dim);

            const MapAnalysis ana = analyze(e);
            CHECK(ana.unital);
            CHECK(ana.c_const == doctest::Approx(1.0).epsilon(1e-12));
            CHECK(ana.m_q == doctest::Approx(0.0).epsilon(1e-12));
            CHECK(ana.mq_identity_ok);

            // exact shrink factor w on any difference
            const DensityMatrix a = random_density(dim, rng);
            const DensityMatrix b = random_density(dim, rng);
            CHECK(d_rho(apply(e, a), apply(e, b)) ==
                  doctest::Approx(w * d_rho(a, b)).epsilon(1e-10));

            // action: w·ρ + (1-w)·I/dim
            const ComplexMatrix expect = add(scale(w, a.matrix()),
                                             scale((1.0 - w) / double(dim),
                                                   ComplexMatrix::identity(dim)));
            CHECK(max_abs_diff(apply(e, a.matrix()), expect) < 1e-12);
        }
    }

    CHECK_THROWS_AS(depolarizing(2, 1.0), ParamOutOfRange);
    CHECK_THROWS_AS(depolarizing(2, -0.01), ParamOutOfRange);
}

TEST_CASE("product maps act factor-wise") {
    Rng rng(424);
    const KrausMap ea = amplitude_damping(0.4);
    const KrausMap eb = depolarizing(2, 0.6);
    const KrausMap prod = tensor_map(ea, eb);
    CHECK(prod.dim() == 4);
    CHECK(prod.kraus().size() == ea.kraus().size() * eb.kraus().size());

    const ComplexMatrix ra = random_density(2, rng).matrix();
    const ComplexMatrix rb = random_density(2, rng).matrix();
    const ComplexMatrix lhs = apply(prod, tensor(ra, rb));
    const ComplexMatrix rhs = tensor(apply(ea, ra), apply(eb, rb));
    CHECK(max_abs_diff(lhs, rhs) < 1e-12);

    // V_E of the product is the product of the factors' V_E
    const MapAnalysis ana = analyze(prod);
    CHECK(max_abs_diff(ana.v_e, tensor(analyze(ea).v_e, analyze(eb).v_e)) < 1e-12);
}

TEST_CASE("diagonal action of a decay pair matches the literal closed form") {
    Rng rng(425);
    for (int rep = 0; rep < 40; ++rep) {
        const double ga = rng.uniform01();
        const double gb = rng.uniform01();
        const double x = rng.uniform(-0.5, 0.5);
        const double y = rng.uniform(-0.5, 0.5);
        const double z = rng.uniform(-0.5, 0.5);
        const double w = -(x + y + z);

        const KrausMap pair = tensor_map(amplitude_damping(ga), amplitude_damping(gb));
        const ComplexMatrix out = apply(pair, ComplexMatrix::diagonal({x, y, z, w}));
        const auto closed = decay_pair_diagonal(ga, gb, x, y, z, w);
        for (std::size_t i = 0; i < 4; ++i) {
            CHECK(std::abs(out.at(i, i).real() - closed[i]) < 1e-13);
            for (std::size_t j = 0; j < 4; ++j)
                if (i != j) CHECK(std::abs(out.at(i, j)) < 1e-14); // stays diagonal
        }
    }
}

TEST_CASE("ancilla extension preserves the contraction spectrum") {
    const KrausMap damp = amplitude_damping(0.5);
    const KrausMap ext = extend_with_ancilla(damp, 3);
    CHECK(ext.dim() == 6);

    Rng rng(426);
    const ComplexMatrix rho = random_density(2, rng).matrix();
    const ComplexMatrix sig = random_density(3, rng).matrix();
    CHECK(max_abs_diff(apply(ext, tensor(rho, sig)), tensor(apply(damp, rho), sig)) <
          1e-12);

    const MapAnalysis base = analyze(damp);
    const MapAnalysis lifted = analyze(ext);
    CHECK(lifted.c_const == doctest::Approx(base.c_const).epsilon(1e-12));
    CHECK(lifted.m_q == doctest::Approx(base.m_q).epsilon(1e-12));

    CHECK_THROWS_AS(extend_with_ancilla(damp, 1), ParamOutOfRange);
}

TEST_CASE("unitary mixtures are unital and distance-preserving when pure") {
    Rng rng(427);
    const ComplexMatrix u1 = random_unitary(3, rng);
    const ComplexMatrix u2 = random_unitary(3, rng);

    const KrausMap mix = unitary_mixture({u1, u2}, {0.3, 0.7});
    const MapAnalysis ana = analyze(mix);
    CHECK(ana.unital);
    CHECK(ana.c_const == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(ana.mq_identity_ok);

    // a single unitary leaves every distance unchanged
    const KrausMap rot = unitary_mixture({u1}, {1.0});
    const DensityMatrix a = random_density(3, rng);
    const DensityMatrix b = random_density(3, rng);
    CHECK(d_rho(apply(rot, a), apply(rot, b)) == doctest::Approx(d_rho(a, b)).epsilon(1e-11));
    CHECK(d_pi(apply(rot, a), apply(rot, b)) == doctest::Approx(d_pi(a, b)).epsilon(1e-11));

    CHECK_THROWS_AS(unitary_mixture({u1, u2}, {0.5, 0.6}), BadProbabilities);
    CHECK_THROWS_AS(unitary_mixture({u1, u2}, {-0.1, 1.1}), BadProbabilities);
    CHECK_THROWS_AS(unitary_mixture({scale(2.0, u1)}, {1.0}), NotUnitary);
    CHECK_THROWS_AS(unitary_mixture({u1, u2}, {1.0}), BadProbabilities);
}

TEST_CASE("random maps are trace preserving and seed-deterministic") {
    for (std::size_t dim = 2; dim <= 6; ++dim) {
        for (std::size_t n_kraus = 1; n_kraus <= 4; ++n_kraus) {
            const KrausMap e = random_kraus_map(dim, n_kraus, std::uint64_t{13});
            ComplexMatrix acc(dim);
            for (const ComplexMatrix& v : e.kraus())
                acc = add(acc, matmul(adjoint(v), v));
            CHECK(max_abs_diff(acc, ComplexMatrix::identity(dim)) < 1e-12);

            const MapAnalysis ana = analyze(e);
            CHECK(ana.trace_v_e == doctest::Approx(double(dim)).epsilon(1e-12));
            CHECK(ana.c_const >= 1.0 - 1e-12);
            CHECK(ana.c_const <= double(dim) + 1e-12);
        }
    }

    const KrausMap e1 = random_kraus_map(3, 2, std::uint64_t{99});
    const KrausMap e2 = random_kraus_map(3, 2, std::uint64_t{99});
    for (std::size_t k = 0; k < e1.kraus().size(); ++k)
        CHECK(max_abs_diff(e1.kraus()[k], e2.kraus()[k]) == 0.0);
}

TEST_CASE("the spectral-deviation shortcut for map quantumness has limits") {
    // For every named constructor family the upward deviation of the output
    // identity dominates, so M_Q/dim equals the distance from E[I/dim] to the
    // mixed state...
    for (double gamma : {0.1, 0.5, 0.9}) {
        CHECK(analyze(amplitude_damping(gamma)).mq_identity_ok);
        CHECK(analyze(tensor_map(amplitude_damping(gamma), amplitude_damping(0.3)))
                  .mq_identity_ok);
        CHECK(analyze(extend_with_ancilla(amplitude_damping(gamma), 2)).mq_identity_ok);
    }

    // ...but a generic map can push the smallest eigenvalue of E[I] further
    // below 1 than the largest rises above it, and then the shortcut breaks:
    // the distance tracks max(v_max - 1, 1 - v_min), not v_max - 1 alone.
    const KrausMap generic = random_kraus_map(3, 2, std::uint64_t{31});
    const MapAnalysis ana = analyze(generic);
    const double v_max = ana.v_spectrum.front();
    const double v_min = ana.v_spectrum.back();
    const double true_distance =
        std::max(v_max - 1.0, 1.0 - v_min) / double(ana.dim);
    const double measured =
        d_rho(apply(generic, maximally_mixed(3)), maximally_mixed(3));
    CHECK(measured == doctest::Approx(true_distance).epsilon(1e-12));
    REQUIRE(1.0 - v_min > v_max - 1.0); // this draw is downward-dominant
    CHECK_FALSE(ana.mq_identity_ok);
    CHECK(ana.mq_identity_dev ==
          doctest::Approx(true_distance - ana.m_q / double(ana.dim)).epsilon(1e-10));
}

TEST_CASE("maximal violation scheme doubles down on the contraction constant") {
    SUBCASE("decay channel, closed numbers") {
        const ViolationScheme scheme = max_violation_states(amplitude_damping(0.5));
        CHECK(d_rho(scheme.rho_a, scheme.rho_b) == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(d_pi(scheme.rho_a, scheme.rho_b) == doctest::Approx(1.0).epsilon(1e-12));

        const DensityMatrix out_a = apply(scheme.extended, scheme.rho_a);
        const DensityMatrix out_b = apply(scheme.extended, scheme.rho_b);
        CHECK(d_rho(out_a, out_b) == doctest::Approx(0.75).epsilon(1e-12));
        CHECK(d_pi(out_a, out_b) == doctest::Approx(1.0).epsilon(1e-12));
    }

    SUBCASE("generic channels reach exactly C/dim") {
        Rng rng(428);
        for (int rep = 0; rep < 10; ++rep) {
            const std::size_t dim = 2 + rep % 4;
            const KrausMap e = random_kraus_map(dim, 1 + rep % 4, rng);
            const double c = analyze(e).c_const;

            const ViolationScheme scheme = max_violation_states(e);
            CHECK(d_rho(scheme.rho_a, scheme.rho_b) ==
                  doctest::Approx(1.0 / double(dim)).epsilon(1e-11));
            const DensityMatrix out_a = apply(scheme.extended, scheme.rho_a);
            const DensityMatrix out_b = apply(scheme.extended, scheme.rho_b);
            CHECK(d_rho(out_a, out_b) == doctest::Approx(c / double(dim)).epsilon(1e-10));
            CHECK(d_pi(out_a, out_b) == doctest::Approx(1.0).epsilon(1e-11));
        }
    }
}

TEST_CASE("mixing in a shared state keeps the amplification ratio") {
    const KrausMap e = amplitude_damping(0.7);
    const double c = analyze(e).c_const;

    for (double w : {0.2, 0.6, 1.0}) {
        const ViolationScheme scheme = mixed_violation_states(e, w, std::uint64_t{7});
        const double din = d_rho(scheme.rho_a, scheme.rho_b);
        CHECK(din == doctest::Approx(w * 0.5).epsilon(1e-11)); // w·(1/dim)

        const DensityMatrix out_a = apply(scheme.extended, scheme.rho_a);
        const DensityMatrix out_b = apply(scheme.extended, scheme.rho_b);
        CHECK(d_rho(out_a, out_b) == doctest::Approx(c * din).epsilon(1e-10));
    }

    CHECK_THROWS_AS(mixed_violation_states(e, 0.0, std::uint64_t{7}), ParamOutOfRange);
    CHECK_THROWS_AS(mixed_violation_states(e, 1.5, std::uint64_t{7}), ParamOutOfRange);
}
