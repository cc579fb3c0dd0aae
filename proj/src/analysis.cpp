/**
 * Copyright 2026, the qdist developers.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE.txt file in the root directory of this source tree.
 */

#include "qdist/analysis.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>
#include <thread>

namespace qdist {

namespace {

std::string fmt_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", x);
    return buf;
}

double max_abs_eigenvalue(const ComplexMatrix& m) {
    const EigenSystem es = eig_hermitian(m);
    double v = 0.0;
    for (double e : es.eigenvalues) v = std::max(v, std::abs(e));
    return v;
}

void require_damping_params(double gamma_a, double gamma_b, const char* who) {
    if (gamma_a <= 0.0 || gamma_a > 1.0 + 1e-12) {
        throw ParamOutOfRange(std::string(who) + ": gamma_a = " + fmt_double(gamma_a) +
                              " outside (0, 1]");
    }
    if (gamma_b < 0.0 || gamma_b > gamma_a + 1e-12) {
        throw ParamOutOfRange(std::string(who) + ": gamma_b = " + fmt_double(gamma_b) +
                              " outside [0, gamma_a]");
    }
}

} // namespace

WitnessReport witness(const KrausMap& e, const DensityMatrix& a, const DensityMatrix& b) {
    const MapAnalysis ana = analyze(e);
    if (ana.m_q <= 1e-12) {
        throw UnitalMap("witness: map is unital (C = 1), the witness denominator vanishes");
    }
    const DifferenceOperator delta = difference(a, b);
    const double in = d_rho(delta);
    if (in <= 1e-12) {
        throw ZeroInputDistance("witness: input states coincide (d_rho = 0)");
    }
    const double out = d_rho(apply(e, a), apply(e, b));
    WitnessReport rep;
    rep.x = delta.dim() > 0 ? delta.matrix().at(0, 0).real() : 0.0;
    rep.y = delta.dim() > 1 ? delta.matrix().at(1, 1).real() : 0.0;
    rep.z = delta.dim() > 2 ? delta.matrix().at(2, 2).real() : 0.0;
    rep.d_in = in;
    rep.d_out = out;
    rep.c_const = ana.c_const;
    rep.w = (in - out) / (in * ana.m_q);
    return rep;
}

ScanGrid witness_scan(const KrausMap& e, double z, std::size_t resolution, unsigned threads,
                      const ComplexMatrix* basis) {
    if (e.dim() != 4) {
        throw DimensionMismatch("witness_scan: map dimension " + std::to_string(e.dim()) +
                                ", the x/y/z landscape needs dimension 4");
    }
    if (std::abs(z) > 1.0 + 1e-12) {
        throw ParamOutOfRange("witness_scan: z = " + fmt_double(z) + " outside [-1, 1]");
    }
    if (resolution < 2) {
        throw ParamOutOfRange("witness_scan: resolution must be at least 2");
    }
    if (basis != nullptr) {
        if (basis->dim() != 4) {
            throw DimensionMismatch("witness_scan: basis unitary must have dimension 4");
        }
        if (max_abs_diff(matmul(adjoint(*basis), *basis), ComplexMatrix::identity(4)) > 1e-10) {
            throw NotUnitary("witness_scan: basis matrix is not unitary within 1e-10");
        }
    }
    const MapAnalysis ana = analyze(e);
    if (ana.m_q <= 1e-12) {
        throw UnitalMap("witness_scan: map is unital (C = 1), the witness is undefined");
    }
    const double c = ana.c_const;

    std::vector<double> grid(resolution);
    for (std::size_t i = 0; i < resolution; ++i)
        grid[i] = -1.0 + 2.0 * static_cast<double>(i) / static_cast<double>(resolution - 1);

    std::vector<std::vector<WitnessReport>> rows(resolution);
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= resolution) return;
            const double x = grid[i];
            std::vector<WitnessReport>& row = rows[i];
            row.reserve(resolution);
            for (std::size_t j = 0; j < resolution; ++j) {
                const double y = grid[j];
                const double t = -(x + y + z);
                if (!spectrum_feasible({x, y, z, t}, kStateTol)) continue;
                const double in = std::max(std::max(std::abs(x), std::abs(y)),
                                           std::max(std::abs(z), std::abs(x + y + z)));
                if (in <= 1e-12) continue;
                ComplexMatrix delta(4);
                delta.at(0, 0) = x;
                delta.at(1, 1) = y;
                delta.at(2, 2) = z;
                delta.at(3, 3) = t;
                if (basis != nullptr) delta = matmul(matmul(*basis, delta), adjoint(*basis));
                const double out = max_abs_eigenvalue(apply(e, delta));
                row.push_back(
                    WitnessReport{x, y, z, in, out, c, (in - out) / (in * (c - 1.0))});
            }
        }
    };

    unsigned n_threads = threads != 0 ? threads : std::thread::hardware_concurrency();
    if (n_threads == 0) n_threads = 1;
    n_threads = std::min<unsigned>(n_threads, static_cast<unsigned>(resolution));
    if (n_threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(n_threads);
        for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }

    ScanGrid result;
    result.z = z;
    result.resolution = resolution;
    result.min_w = std::numeric_limits<double>::infinity();
    for (const auto& row : rows) {
        for (const WitnessReport& p : row) {
            if (p.w < result.min_w) {
                result.min_w = p.w;
                result.min_x = p.x;
                result.min_y = p.y;
            }
            result.rows.push_back(p);
        }
    }
    if (result.rows.empty()) {
        throw ParamOutOfRange("witness_scan: no feasible grid points");
    }
    return result;
}

double w_min(double gamma_a, double gamma_b) {
    require_damping_params(gamma_a, gamma_b, "w_min");
    return 1.0 - 2.0 * gamma_a / (gamma_a + gamma_b + gamma_a * gamma_b);
}

double w_min_line_scan(double gamma_a, double gamma_b, std::size_t points) {
    require_damping_params(gamma_a, gamma_b, "w_min_line_scan");
    if (points == 0) throw ParamOutOfRange("w_min_line_scan: need at least one point");
    const KrausMap e = tensor_map(amplitude_damping(gamma_a), amplitude_damping(gamma_b));
    const MapAnalysis ana = analyze(e);
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t k = 1; k <= points; ++k) {
        const double zz = 0.5 * static_cast<double>(k) / static_cast<double>(points);
        ComplexMatrix delta(4);
        delta.at(0, 0) = zz;
        delta.at(1, 1) = -zz;
        delta.at(2, 2) = zz;
        delta.at(3, 3) = -zz;
        const double out = max_abs_eigenvalue(apply(e, delta));
        best = std::min(best, (zz - out) / (zz * ana.m_q));
    }
    return best;
}

std::vector<CurvePoint> figure1_curves(double r, std::size_t s_steps) {
    if (r < 0.0 || r > 1.0 + 1e-12) {
        throw ParamOutOfRange("figure1_curves: r = " + fmt_double(r) + " outside [0, 1]");
    }
    if (s_steps < 2) throw ParamOutOfRange("figure1_curves: need at least two s-steps");
    const DensityMatrix a = separable_rr(r);
    std::vector<CurvePoint> curve;
    curve.reserve(s_steps);
    for (std::size_t k = 0; k < s_steps; ++k) {
        const double s = static_cast<double>(k) / static_cast<double>(s_steps - 1);
        const ComparisonReport rep = compare(a, bell_diagonal_s(s));
        const double root = std::sqrt(4.0 * r * r + s * s);
        const double cf_rho = 0.25 * (r * r + root);
        const double cf_pi = cf_rho + 0.25 * std::max(0.0, s - r * r);
        if (std::abs(rep.d_rho - cf_rho) > 1e-10 || std::abs(rep.d_pi - cf_pi) > 1e-10) {
            throw Error("figure1_curves: closed form deviates from constructed states at s = " +
                        fmt_double(s));
        }
        curve.push_back(CurvePoint{s, rep.d_rho, rep.d_pi, 2.0 * rep.d_rho});
    }
    return curve;
}

HypothesisResult hypothesis_test(const DensityMatrix& a, const DensityMatrix& b,
                                 std::size_t trials, Rng& rng) {
    if (trials == 0) throw ParamOutOfRange("hypothesis_test: need at least one trial");
    const MaxExpectationResult me = max_expectation(sub(a.matrix(), b.matrix()));
    const double p_theory = 0.5 * (1.0 + me.value);
    const ComplexMatrix& proj = me.maximizer.matrix();
    auto outcome_prob = [&proj](const DensityMatrix& rho) {
        const double p = trace(matmul(proj, rho.matrix())).real();
        return std::min(1.0, std::max(0.0, p));
    };
    const double p1_a = outcome_prob(a);
    const double p1_b = outcome_prob(b);
    // When the extreme eigenvalue is negative, outcome 1 is evidence for b.
    const bool outcome1_means_a = me.signed_value >= 0.0;

    std::size_t successes = 0;
    for (std::size_t t = 0; t < trials; ++t) {
        const bool actual_a = rng.uniform01() < 0.5;
        const bool outcome1 = rng.uniform01() < (actual_a ? p1_a : p1_b);
        const bool guess_a = outcome1 == outcome1_means_a;
        if (guess_a == actual_a) ++successes;
    }

    HypothesisResult res;
    res.trials = trials;
    res.successes = successes;
    res.p_theory = p_theory;
    res.p_hat = static_cast<double>(successes) / static_cast<double>(trials);
    const double variance = p_theory * (1.0 - p_theory);
    if (variance > 0.0) {
        res.z_score =
            (res.p_hat - p_theory) / std::sqrt(variance / static_cast<double>(trials));
    } else {
        res.z_score =
            (res.p_hat == p_theory) ? 0.0 : std::copysign(1e300, res.p_hat - p_theory);
    }
    return res;
}

HypothesisResult hypothesis_test(const DensityMatrix& a, const DensityMatrix& b,
                                 std::size_t trials, std::uint64_t seed) {
    Rng rng(seed);
    return hypothesis_test(a, b, trials, rng);
}

bool xyz_feasible(double x, double y, double z) {
    return spectrum_feasible({x, y, z, -(x + y + z)}, kStateTol);
}

const char* active_face(double x, double y, double z) {
    const double sums[7] = {x, y, z, x + y + z, x + y, x + z, y + z};
    static const char* kLabels[14] = {"+x",     "-x",     "+y",       "-y",       "+z",
                                      "-z",     "+(x+y+z)", "-(x+y+z)", "+(x+y)",   "-(x+y)",
                                      "+(x+z)", "-(x+z)", "+(y+z)",   "-(y+z)"};
    std::size_t best = 0;
    double best_mag = -1.0;
    for (std::size_t i = 0; i < 7; ++i) {
        const double mag = std::abs(sums[i]);
        if (mag > best_mag) {
            best_mag = mag;
            best = 2 * i + (sums[i] < 0.0 ? 1 : 0);
        }
    }
    return kLabels[best];
}

DomainCloud domain_export(std::size_t samples, Rng& rng) {
    if (samples == 0) throw ParamOutOfRange("domain_export: need at least one sample");
    DomainCloud cloud;
    cloud.samples = samples;
    for (std::size_t k = 0; k < samples; ++k) {
        const double x = rng.uniform(-1.0, 1.0);
        const double y = rng.uniform(-1.0, 1.0);
        const double z = rng.uniform(-1.0, 1.0);
        if (!xyz_feasible(x, y, z)) continue;
        cloud.points.push_back(DomainPoint{x, y, z, active_face(x, y, z)});
    }
    return cloud;
}

DomainCloud domain_export(std::size_t samples, std::uint64_t seed) {
    Rng rng(seed);
    return domain_export(samples, rng);
}

} // namespace qdist
