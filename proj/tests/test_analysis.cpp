/**
 * Copyright 2026, the qdist developers.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE.txt file in the root directory of this source tree.
 */

#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#include "doctest.h"

#include "qdist/analysis.hpp"
#include "qdist/distances.hpp"
#include "support.hpp"

using namespace qdist;
using testsupport::decay_pair_diagonal;

namespace {

KrausMap decay_pair(double ga, double gb) {
    return tensor_map(amplitude_damping(ga), amplitude_damping(gb));
}

std::pair<DensityMatrix, DensityMatrix> states_from_xyz(double x, double y, double z) {
    return realize_states(difference_from_spectrum({x, y, z, -(x + y + z)}));
}

} // namespace

TEST_CASE("witness values at the two pinned landscape points") {
    SUBCASE("sign-mixed decay pair, minimum -1/7") {
        const auto pair = states_from_xyz(0.5, -0.5, 0.5);
        const WitnessReport rep = witness(decay_pair(0.5, 0.25), pair.first, pair.second);
        CHECK(rep.x == doctest::Approx(0.5).epsilon(1e-13));
        CHECK(rep.y == doctest::Approx(-0.5).epsilon(1e-13));
        CHECK(rep.z == doctest::Approx(0.5).epsilon(1e-13));
        CHECK(rep.d_in == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(rep.d_out == doctest::Approx(0.5625).epsilon(1e-12));
        CHECK(rep.c_const == doctest::Approx(1.875).epsilon(1e-12));
        CHECK(rep.w == doctest::Approx(-1.0 / 7.0).epsilon(1e-10));
    }

    SUBCASE("single active decay saturates the bound") {
        const auto pair = states_from_xyz(0.3, -0.3, 0.3);
        const WitnessReport rep = witness(decay_pair(0.5, 0.0), pair.first, pair.second);
        CHECK(rep.d_in == doctest::Approx(0.3).epsilon(1e-12));
        CHECK(rep.d_out == doctest::Approx(0.45).epsilon(1e-12));
        CHECK(rep.w == doctest::Approx(-1.0).epsilon(1e-10));
    }
}

TEST_CASE("witness guards: unital maps and coincident states are rejected") {
    const auto pair = states_from_xyz(0.4, -0.2, 0.1);
    CHECK_THROWS_AS(witness(depolarizing(4, 0.5), pair.first, pair.second), UnitalMap);
    CHECK_THROWS_AS(witness(decay_pair(0.5, 0.25), pair.first, pair.first),
                    ZeroInputDistance);
}

TEST_CASE("witness output distances agree with the literal component formulas") {
    Rng rng(429);
    int tested = 0;
    while (tested < 40) {
        const double x = rng.uniform(-1.0, 1.0);
        const double y = rng.uniform(-1.0, 1.0);
        const double z = rng.uniform(-1.0, 1.0);
        if (!xyz_feasible(x, y, z)) continue;
        if (std::max({std::abs(x), std::abs(y), std::abs(z), std::abs(x + y + z)}) < 1e-3)
            continue;
        ++tested;

        const double ga = rng.uniform(0.05, 1.0);
        const double gb = rng.uniform(0.0, ga);
        const auto pair = states_from_xyz(x, y, z);
        const WitnessReport rep = witness(decay_pair(ga, gb), pair.first, pair.second);

        const auto comp = decay_pair_diagonal(ga, gb, x, y, z, -(x + y + z));
        double out = 0.0;
        for (double v : comp) out = std::max(out, std::abs(v));
        CHECK(rep.d_out == doctest::Approx(out).epsilon(1e-11));
        CHECK(rep.d_in ==
              doctest::Approx(std::max({std::abs(x), std::abs(y), std::abs(z),
                                        std::abs(x + y + z)}))
                  .epsilon(1e-11));
        CHECK(rep.w >= -1.0 - 1e-9); // the normalized gap never undershoots -1
    }
}

TEST_CASE("landscape scans are deterministic, bounded, and thread-invariant") {
    const KrausMap e = decay_pair(0.5, 0.0);
    const ScanGrid base = witness_scan(e, 0.3, 9, 1);

    CHECK(base.resolution == 9);
    CHECK(base.z == 0.3);
    CHECK_FALSE(base.rows.empty());
    // feasibility screening: every reported point is feasible, every witness
    // respects the lower bound
    for (const WitnessReport& r : base.rows) {
        CHECK(xyz_feasible(r.x, r.y, r.z));
        CHECK(r.w >= -1.0 - 1e-9);
        CHECK(r.z == 0.3);
    }
    // the tracked minimum matches a scan over the rows
    double min_w = 1e30, min_x = 0, min_y = 0;
    for (const WitnessReport& r : base.rows)
        if (r.w < min_w) {
            min_w = r.w;
            min_x = r.x;
            min_y = r.y;
        }
    CHECK(base.min_w == doctest::Approx(min_w).epsilon(1e-15));
    CHECK(base.min_x == doctest::Approx(min_x).epsilon(1e-15));
    CHECK(base.min_y == doctest::Approx(min_y).epsilon(1e-15));

    // thread counts must not change a single byte of the result
    for (unsigned threads : {0u, 2u, 5u}) {
        const ScanGrid alt = witness_scan(e, 0.3, 9, threads);
        REQUIRE(alt.rows.size() == base.rows.size());
        for (std::size_t i = 0; i < base.rows.size(); ++i) {
            CHECK(alt.rows[i].x == base.rows[i].x);
            CHECK(alt.rows[i].y == base.rows[i].y);
            CHECK(alt.rows[i].w == base.rows[i].w);
        }
        CHECK(alt.min_w == base.min_w);
    }

    // grid with 0.3 on it: the saturating point is found exactly
    const ScanGrid fine = witness_scan(e, 0.3, 21, 0);
    CHECK(fine.min_w == doctest::Approx(-1.0).epsilon(1e-10));
    CHECK(fine.min_x == doctest::Approx(0.3).epsilon(1e-12));
    CHECK(fine.min_y == doctest::Approx(-0.3).epsilon(1e-12));
}

TEST_CASE("scan guards") {
    const KrausMap e = decay_pair(0.5, 0.25);
    CHECK_THROWS_AS(witness_scan(e, 1.5, 9), ParamOutOfRange);
    CHECK_THROWS_AS(witness_scan(e, 0.3, 1), ParamOutOfRange);
    CHECK_THROWS_AS(witness_scan(amplitude_damping(0.5), 0.3, 9), DimensionMismatch);
    CHECK_THROWS_AS(witness_scan(depolarizing(4, 0.5), 0.3, 9), UnitalMap);

    // a basis rotation must be unitary
    ComplexMatrix not_unitary = ComplexMatrix::diagonal({2.0, 1.0, 1.0, 1.0});
    CHECK_THROWS_AS(witness_scan(e, 0.3, 9, 0, &not_unitary), NotUnitary);

    // the identity basis reproduces the plain scan
    const ComplexMatrix id = ComplexMatrix::identity(4);
    const ScanGrid plain = witness_scan(e, 0.3, 9, 0);
    const ScanGrid rotated = witness_scan(e, 0.3, 9, 0, &id);
    REQUIRE(plain.rows.size() == rotated.rows.size());
    for (std::size_t i = 0; i < plain.rows.size(); ++i)
        CHECK(plain.rows[i].w == doctest::Approx(rotated.rows[i].w).epsilon(1e-12));
}

TEST_CASE("minimum law for the decay pair") {
    CHECK(w_min(0.5, 0.25) == doctest::Approx(-1.0 / 7.0).epsilon(1e-14));
    CHECK(w_min(0.5, 0.0) == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(w_min(1.0, 1.0) == doctest::Approx(1.0 / 3.0).epsilon(1e-14));

    // the closed form matches the measured line minimum
    Rng rng(430);
    for (int rep = 0; rep < 15; ++rep) {
        const double ga = rng.uniform(0.05, 1.0);
        const double gb = rng.uniform(0.0, ga);
        CHECK(w_min_line_scan(ga, gb, 16) == doctest::Approx(w_min(ga, gb)).epsilon(1e-10));
    }

    // sign flip exactly at gb = ga/(1+ga)
    const double ga = 0.8;
    const double flip = ga / (1.0 + ga);
    CHECK(w_min(ga, flip) == doctest::Approx(0.0).epsilon(1e-13));
    CHECK(w_min(ga, flip - 0.01) < 0.0);
    CHECK(w_min(ga, flip + 0.01) > 0.0);

    CHECK_THROWS_AS(w_min(0.0, 0.0), ParamOutOfRange);   // ga must be positive
    CHECK_THROWS_AS(w_min(0.5, 0.6), ParamOutOfRange);   // gb above ga
    CHECK_THROWS_AS(w_min(1.1, 0.5), ParamOutOfRange);   // ga above 1
    CHECK_THROWS_AS(w_min_line_scan(0.5, 0.25, 0), ParamOutOfRange);
}

TEST_CASE("product versus transverse-correlation curves") {
    const auto curve = figure1_curves(0.5, 5); // s in {0, 0.25, 0.5, 0.75, 1}
    REQUIRE(curve.size() == 5);
    CHECK(curve.front().s == 0.0);
    CHECK(curve.back().s == 1.0);

    // closed-form spot values
    CHECK(curve[1].d_rho == doctest::Approx(0.320194101601).epsilon(1e-9));
    CHECK(curve[1].d_pi == doctest::Approx(curve[1].d_rho).epsilon(1e-12)); // s <= r²
    CHECK(curve[3].d_rho == doctest::Approx(0.375).epsilon(1e-12));
    CHECK(curve[3].d_pi == doctest::Approx(0.5).epsilon(1e-12));
    for (const CurvePoint& p : curve) {
        CHECK(p.bound == doctest::Approx(2.0 * p.d_rho).epsilon(1e-13));
        CHECK(p.d_pi <= p.bound + 1e-12);
        CHECK(p.d_rho <= p.d_pi + 1e-12);
    }

    // the coincidence region is exactly s <= r²
    const auto dense = figure1_curves(0.1, 101); // r² = 0.01, first two s only
    CHECK(dense[0].d_pi == doctest::Approx(dense[0].d_rho).epsilon(1e-12));
    CHECK(dense[1].d_pi == doctest::Approx(dense[1].d_rho).epsilon(1e-12)); // s = 0.01
    CHECK(dense[2].d_pi > dense[2].d_rho + 1e-6);                           // s = 0.02

    CHECK_THROWS_AS(figure1_curves(-0.1, 5), ParamOutOfRange);
    CHECK_THROWS_AS(figure1_curves(1.1, 5), ParamOutOfRange);
    CHECK_THROWS_AS(figure1_curves(0.5, 1), ParamOutOfRange);
}

TEST_CASE("hypothesis tests are seeded, calibrated, and guard degenerate cases") {
    const DensityMatrix zero = pure({1.0, 0.0});
    const DensityMatrix plus = pure({1.0, 1.0});

    const HypothesisResult a = hypothesis_test(zero, plus, 20000, std::uint64_t{5});
    const HypothesisResult b = hypothesis_test(zero, plus, 20000, std::uint64_t{5});
    CHECK(a.successes == b.successes); // bit-identical reruns
    CHECK(a.trials == 20000);
    CHECK(a.p_hat == doctest::Approx(double(a.successes) / 20000.0).epsilon(1e-15));
    CHECK(a.p_theory == doctest::Approx(0.8535533905932737).epsilon(1e-13));

    // healthy z-scores across seeds
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const HypothesisResult r = hypothesis_test(zero, plus, 100000, seed);
        CHECK(std::abs(r.z_score) <= 5.0);
    }

    // orthogonal pure states: success is certain, variance vanishes
    const HypothesisResult sure =
        hypothesis_test(pure({1.0, 0.0}), pure({0.0, 1.0}), 5000, std::uint64_t{3});
    CHECK(sure.p_theory == doctest::Approx(1.0));
    CHECK(sure.successes == 5000);
    CHECK(sure.z_score == 0.0);

    // identical states: the guess is a fair coin against chance level 1/2
    const HypothesisResult coin = hypothesis_test(zero, zero, 50000, std::uint64_t{4});
    CHECK(coin.p_theory == doctest::Approx(0.5));
    CHECK(std::abs(coin.z_score) <= 6.0);
}

TEST_CASE("feasible-domain predicates and face labels") {
    CHECK(xyz_feasible(0.5, -0.5, 0.5));
    CHECK(xyz_feasible(1.0, 0.0, 0.0));
    CHECK_FALSE(xyz_feasible(0.9, 0.9, 0.0));  // x+y = 1.8
    CHECK_FALSE(xyz_feasible(0.5, 0.4, 0.2));  // x+y+z = 1.1
    CHECK_FALSE(xyz_feasible(1.1, -0.5, 0.0)); // lone coordinate out of range

    CHECK(std::strcmp(active_face(0.9, -0.05, -0.03), "+x") == 0);
    CHECK(std::strcmp(active_face(-0.9, 0.05, 0.03), "-x") == 0);
    CHECK(std::strcmp(active_face(0.5, 0.4, -0.2), "+(x+y)") == 0);
    CHECK(std::strcmp(active_face(0.3, 0.3, 0.3), "+(x+y+z)") == 0);
    CHECK(std::strcmp(active_face(-0.3, -0.3, -0.3), "-(x+y+z)") == 0);
    CHECK(std::strcmp(active_face(0.05, -0.6, -0.3), "-(y+z)") == 0);
}

TEST_CASE("domain sampling is reproducible and fills the polytope") {
    const DomainCloud c1 = domain_export(20000, std::uint64_t{12});
    const DomainCloud c2 = domain_export(20000, std::uint64_t{12});
    REQUIRE(c1.points.size() == c2.points.size());
    CHECK(c1.samples == 20000);
    for (std::size_t i = 0; i < c1.points.size(); ++i) {
        CHECK(c1.points[i].x == c2.points[i].x);
        CHECK(std::strcmp(c1.points[i].face, c2.points[i].face) == 0);
    }

    // every accepted point is feasible and correctly labelled
    for (const DomainPoint& p : c1.points) {
        CHECK(xyz_feasible(p.x, p.y, p.z));
        CHECK(std::strcmp(p.face, active_face(p.x, p.y, p.z)) == 0);
    }

    // acceptance fraction: cross-check Monte Carlo against a deterministic
    // midpoint-grid integration of the same body
    std::size_t grid_hits = 0, grid_total = 0;
    const int n = 40;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                const double x = -1.0 + 2.0 * (i + 0.5) / n;
                const double y = -1.0 + 2.0 * (j + 0.5) / n;
                const double z = -1.0 + 2.0 * (k + 0.5) / n;
                ++grid_total;
                if (xyz_feasible(x, y, z)) ++grid_hits;
            }
    const double grid_frac = double(grid_hits) / double(grid_total);
    const double mc_frac = double(c1.points.size()) / double(c1.samples);
    const double sigma = std::sqrt(grid_frac * (1.0 - grid_frac) / double(c1.samples));
    CHECK(std::abs(mc_frac - grid_frac) < 4.0 * sigma + 2.0 / n); // grid bias bound

    // a second seed lands within binomial error of the first
    const DomainCloud c3 = domain_export(20000, std::uint64_t{13});
    const double frac3 = double(c3.points.size()) / double(c3.samples);
    CHECK(std::abs(mc_frac - frac3) < 6.0 * sigma);
}
