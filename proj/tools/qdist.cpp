/**
 * Copyright 2026, the qdist developers.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE.txt file in the root directory of this source tree.
 */

// Command-line front end: distance reports, map analysis, witness landscapes,
// curve/domain exports, and a Monte-Carlo hypothesis test.  All numeric output
// is fixed-precision (12 significant digits JSON, 6 CSV) and byte-reproducible
// for identical invocations including the seed.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "qdist/analysis.hpp"
#include "qdist/channels.hpp"
#include "qdist/distances.hpp"
#include "qdist/io.hpp"
#include "qdist/states.hpp"

namespace {

using namespace qdist;

void emit(const std::string& text, const std::string& out) {
    if (out == "-") {
        std::cout << text;
        std::cout.flush();
    } else {
        save_text(text, out);
    }
}

// Loads the state pair for subcommands accepting either two state files or a
// diagonal difference spectrum.
std::pair<DensityMatrix, DensityMatrix> load_pair(const std::string& a_path,
                                                  const std::string& b_path,
                                                  const std::string& delta_path) {
    if (!delta_path.empty()) {
        if (!a_path.empty() || !b_path.empty()) {
            throw ParamOutOfRange("give either --a/--b or --delta, not both");
        }
        return realize_states(difference_from_spectrum(load_spectrum(delta_path)));
    }
    if (a_path.empty() || b_path.empty()) {
        throw ParamOutOfRange("need both --a and --b (or --delta)");
    }
    return {load_state(a_path), load_state(b_path)};
}

std::string comparison_json(const ComparisonReport& rep) {
    return JsonWriter()
        .num("d_rho", rep.d_rho)
        .num("d_pi", rep.d_pi)
        .integer("n_plus", rep.n_plus)
        .integer("n_minus", rep.n_minus)
        .integer("cap_N", rep.cap_N)
        .str("equality_case", equality_case_name(rep.equality_case))
        .render();
}

std::string witness_json(const WitnessReport& rep) {
    return JsonWriter()
        .num("x", rep.x)
        .num("y", rep.y)
        .num("z", rep.z)
        .num("d_in", rep.d_in)
        .num("d_out", rep.d_out)
        .num("C", rep.c_const)
        .num("W", rep.w)
        .render();
}

std::string analysis_json(const MapAnalysis& ana) {
    return JsonWriter()
        .uinteger("dim", ana.dim)
        .num("C", ana.c_const)
        .num("M_Q", ana.m_q)
        .boolean("unital", ana.unital)
        .num("trace_V_E", ana.trace_v_e)
        .raw("V_E_spectrum", json_num_array(ana.v_spectrum))
        .num("mq_identity_dev", ana.mq_identity_dev)
        .boolean("mq_identity_ok", ana.mq_identity_ok)
        .render();
}

std::string hypothesis_json(const HypothesisResult& res, std::uint64_t seed) {
    return JsonWriter()
        .uinteger("trials", res.trials)
        .uinteger("successes", res.successes)
        .num("p_hat", res.p_hat)
        .num("p_theory", res.p_theory)
        .num("z_score", res.z_score)
        .uinteger("seed", seed)
        .render();
}

// --- selftest golden cases -------------------------------------------------------

struct Golden {
    const char* name;
    bool (*check)();
};

bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }

DensityMatrix diag_state(std::vector<double> entries) {
    return DensityMatrix(ComplexMatrix::diagonal(entries));
}

bool case_diagonal_equal() {
    const ComparisonReport rep = compare(diag_state({0.5, 0.2, 0.2, 0.1}), maximally_mixed(4));
    return near(rep.d_rho, 0.25, 1e-12) && near(rep.d_pi, 0.25, 1e-12) &&
           rep.equality_case == EqualityCase::Equal;
}

bool case_diagonal_strict() {
    const ComparisonReport rep = compare(diag_state({0.5, 0.3, 0.1, 0.1}), maximally_mixed(4));
    return near(rep.d_rho, 0.25, 1e-12) && near(rep.d_pi, 0.3, 1e-12) &&
           rep.equality_case == EqualityCase::Strict;
}

bool case_diagonal_max_gap() {
    const ComparisonReport rep = compare(diag_state({0.4, 0.4, 0.1, 0.1}), maximally_mixed(4));
    return near(rep.d_rho, 0.15, 1e-12) && near(rep.d_pi, 0.3, 1e-12) &&
           near(rep.d_pi, 2.0 * rep.d_rho, 1e-12) && rep.equality_case == EqualityCase::MaxGap;
}

bool case_pure_overlap() {
    const DensityMatrix a = pure({1.0, 0.0});
    const DensityMatrix b = pure({1.0, 1.0});
    const double expected = 0.7071067811865476;
    return near(d_rho(a, b), expected, 1e-12) && near(d_pi(a, b), expected, 1e-12);
}

bool case_bloch_pair() {
    return near(d_pi(bloch_qubit(0.0, 0.0, 1.0), bloch_qubit(0.0, 0.0, 0.0)), 0.5, 1e-12);
}

bool case_mixed_reference() {
    return near(d_rho_to_mixed(diag_state({0.5, 0.2, 0.2, 0.1})), 0.25, 1e-12);
}

bool case_damping_analysis() {
    const MapAnalysis ana = analyze(amplitude_damping(0.5));
    return near(ana.c_const, 1.5, 1e-12) && near(ana.m_q, 0.5, 1e-12) && !ana.unital;
}

bool case_damping_pair_analysis() {
    const MapAnalysis ana =
        analyze(tensor_map(amplitude_damping(0.5), amplitude_damping(0.25)));
    return near(ana.c_const, 1.875, 1e-12) && !ana.unital;
}

bool case_depolarizing() {
    const ComplexMatrix out =
        apply(depolarizing(2, 0.3), ComplexMatrix::diagonal({1.0, 0.0}));
    const MapAnalysis ana = analyze(depolarizing(2, 0.3));
    return near(out.at(0, 0).real(), 0.65, 1e-12) && near(out.at(1, 1).real(), 0.35, 1e-12) &&
           ana.unital && near(ana.c_const, 1.0, 1e-12);
}

bool case_ancilla_scheme() {
    const ViolationScheme scheme = max_violation_states(amplitude_damping(0.5));
    const DensityMatrix out_a = apply(scheme.extended, scheme.rho_a);
    const DensityMatrix out_b = apply(scheme.extended, scheme.rho_b);
    return near(d_rho(scheme.rho_a, scheme.rho_b), 0.5, 1e-10) &&
           near(d_rho(out_a, out_b), 0.75, 1e-10) &&
           near(d_pi(scheme.rho_a, scheme.rho_b), 1.0, 1e-10) &&
           near(d_pi(out_a, out_b), 1.0, 1e-10);
}

bool case_witness_saturation() {
    const auto pair = realize_states(difference_from_spectrum({0.3, -0.3, 0.3, -0.3}));
    const KrausMap e = tensor_map(amplitude_damping(0.5), amplitude_damping(0.0));
    return near(witness(e, pair.first, pair.second).w, -1.0, 1e-9);
}

bool case_witness_seventh() {
    const auto pair = realize_states(difference_from_spectrum({0.5, -0.5, 0.5, -0.5}));
    const KrausMap e = tensor_map(amplitude_damping(0.5), amplitude_damping(0.25));
    return near(witness(e, pair.first, pair.second).w, -1.0 / 7.0, 1e-9);
}

bool case_w_min_law() {
    return near(w_min(0.5, 0.25), -1.0 / 7.0, 1e-12) && near(w_min(0.5, 0.0), -1.0, 1e-12);
}

bool case_realize_states() {
    const auto pair = realize_states(difference_from_spectrum({0.5, -0.5}));
    return near(pair.first.matrix().at(0, 0).real(), 0.75, 1e-12) &&
           near(pair.first.matrix().at(1, 1).real(), 0.25, 1e-12) &&
           near(pair.second.matrix().at(0, 0).real(), 0.25, 1e-12) &&
           near(pair.second.matrix().at(1, 1).real(), 0.75, 1e-12);
}

bool case_alpha_family() {
    const DifferenceOperator delta =
        difference(diag_state({0.5, 0.2, 0.2, 0.1}), maximally_mixed(4));
    return near(d_alpha(delta, 1.0), 2.0 * d_pi(delta), 1e-12) &&
           near(d_alpha(delta, 512.0), 0.25, 1e-3);
}

bool case_classical_basis() {
    std::vector<std::vector<Complex>> basis(4, std::vector<Complex>(4));
    for (std::size_t i = 0; i < 4; ++i) basis[i][i] = 1.0;
    return near(d_classical(diag_state({0.5, 0.2, 0.2, 0.1}), maximally_mixed(4), basis), 0.25,
                1e-12);
}

int run_selftest() {
    const Golden cases[] = {
        {"diagonal pair, single positive eigenvalue (Equal)", case_diagonal_equal},
        {"diagonal pair, strict sandwich", case_diagonal_strict},
        {"diagonal pair, maximal gap d_pi = 2 d_rho", case_diagonal_max_gap},
        {"pure-state overlap distance sqrt(1/2)", case_pure_overlap},
        {"Bloch pole vs center trace distance 0.5", case_bloch_pair},
        {"distance to maximally mixed state", case_mixed_reference},
        {"zero-temperature damping: C = 1.5, M_Q = 0.5", case_damping_analysis},
        {"damping pair 0.5/0.25: C = 1.875", case_damping_pair_analysis},
        {"depolarizing w = 0.3: action and unitality", case_depolarizing},
        {"ancilla scheme: 0.5 -> 0.75 with d_pi fixed at 1", case_ancilla_scheme},
        {"witness saturation W = -1 at (0.3, -0.3, 0.3)", case_witness_saturation},
        {"witness W = -1/7 at (0.5, -0.5, 0.5)", case_witness_seventh},
        {"damping-pair minimum law values", case_w_min_law},
        {"canonical state pair from a spectrum", case_realize_states},
        {"Schatten family endpoints", case_alpha_family},
        {"classical distance in the computational basis", case_classical_basis},
    };
    bool all_ok = true;
    for (const Golden& g : cases) {
        bool ok = false;
        std::string error;
        try {
            ok = g.check();
        } catch (const std::exception& e) {
            error = e.what();
        }
        if (!ok) all_ok = false;
        std::printf("[%s] %s%s%s\n", ok ? "PASS" : "FAIL", g.name, error.empty() ? "" : " — ",
                    error.c_str());
    }
    std::printf("selftest: %s\n", all_ok ? "all golden cases pass" : "FAILURES present");
    return all_ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"quantum distinguishability toolkit"};
    app.require_subcommand(1);

    std::string a_path, b_path, delta_path, map_spec, basis_spec, out = "-";
    double z = 0.0, r = 0.0;
    std::size_t res = 201, steps = 200, trials = 100000, samples = 100000;
    unsigned threads = 0;
    std::uint64_t seed = 0;

    CLI::App* dist = app.add_subcommand("dist", "distance report for a state pair");
    dist->add_option("--a", a_path, "state JSON for the first argument");
    dist->add_option("--b", b_path, "state JSON for the second argument");
    dist->add_option("--delta", delta_path, "diagonal difference spectrum JSON (alternative)");
    dist->add_option("--out", out, "output path, - for stdout");

    CLI::App* map_analyze = app.add_subcommand("map-analyze", "contraction analysis of a map");
    map_analyze->add_option("--map", map_spec, "map spec (name:args or file:path)")->required();
    map_analyze->add_option("--out", out, "output path, - for stdout");

    CLI::App* wit = app.add_subcommand("witness", "contractivity witness for one state pair");
    wit->add_option("--map", map_spec, "map spec")->required();
    wit->add_option("--a", a_path, "state JSON for the first argument");
    wit->add_option("--b", b_path, "state JSON for the second argument");
    wit->add_option("--delta", delta_path, "diagonal difference spectrum JSON (alternative)");
    wit->add_option("--out", out, "output path, - for stdout");

    CLI::App* scan = app.add_subcommand("witness-scan", "witness landscape over (x, y) at fixed z");
    scan->add_option("--map", map_spec, "map spec")->required();
    scan->add_option("--z", z, "fixed z coordinate")->required();
    scan->add_option("--res", res, "grid resolution per axis");
    scan->add_option("--threads", threads, "worker threads (0 = available parallelism)");
    scan->add_option("--basis", basis_spec, "basis unitary (file:path.json)");
    scan->add_option("--out", out, "output path, - for stdout");

    CLI::App* fig1 = app.add_subcommand("fig1", "product vs transverse-correlated distance curves");
    fig1->add_option("--r", r, "product-state parameter r")->required();
    fig1->add_option("--steps", steps, "number of s samples in [0, 1]");
    fig1->add_option("--out", out, "output path, - for stdout");

    CLI::App* domain = app.add_subcommand("domain", "sample the feasible (x, y, z) polytope");
    domain->add_option("--samples", samples, "number of draws from [-1, 1]^3");
    domain->add_option("--seed", seed, "PRNG seed");
    domain->add_option("--out", out, "output path, - for stdout");

    CLI::App* hyp = app.add_subcommand("hypothesis", "Monte-Carlo two-state discrimination");
    hyp->add_option("--a", a_path, "state JSON for the first argument");
    hyp->add_option("--b", b_path, "state JSON for the second argument");
    hyp->add_option("--delta", delta_path, "diagonal difference spectrum JSON (alternative)");
    hyp->add_option("--trials", trials, "number of trials");
    hyp->add_option("--seed", seed, "PRNG seed");
    hyp->add_option("--out", out, "output path, - for stdout");

    CLI::App* selftest = app.add_subcommand("selftest", "run the golden-value suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        if (dist->parsed()) {
            const auto pair = load_pair(a_path, b_path, delta_path);
            emit(comparison_json(compare(pair.first, pair.second)), out);
        } else if (map_analyze->parsed()) {
            emit(analysis_json(analyze(parse_map_spec(map_spec))), out);
        } else if (wit->parsed()) {
            const auto pair = load_pair(a_path, b_path, delta_path);
            emit(witness_json(witness(parse_map_spec(map_spec), pair.first, pair.second)), out);
        } else if (scan->parsed()) {
            const KrausMap e = parse_map_spec(map_spec);
            std::optional<ComplexMatrix> basis;
            if (!basis_spec.empty()) basis = parse_basis_spec(basis_spec);
            emit(scan_csv(witness_scan(e, z, res, threads, basis ? &*basis : nullptr)), out);
        } else if (fig1->parsed()) {
            emit(curve_csv(figure1_curves(r, steps)), out);
        } else if (domain->parsed()) {
            emit(domain_csv(domain_export(samples, seed), seed), out);
        } else if (hyp->parsed()) {
            const auto pair = load_pair(a_path, b_path, delta_path);
            emit(hypothesis_json(hypothesis_test(pair.first, pair.second, trials, seed), seed),
                 out);
        } else if (selftest->parsed()) {
            return run_selftest();
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
