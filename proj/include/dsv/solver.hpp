/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The dsverify Authors
 */
#pragma once

#include "dsv/smt_script.hpp"

#include <chrono>
#include <string>
#include <utility>
#include <vector>

namespace dsv {

/// How to run the external SMT solver. One process per query; the script
/// goes to the child's stdin, the status token is read from its stdout.
struct SolverConfig {
    std::string path;                         // executable; see resolve_solver_path()
    std::vector<std::string> args = {"-in", "-smt2"};
    std::chrono::milliseconds timeout{30'000};
    bool produce_models = false;
    /// Extra (set-option ...) lines injected into every script; solver
    /// tuning only, never affects which verdicts are sound.
    std::vector<std::pair<std::string, std::string>> script_options;
};

enum class Outcome { holds, violated, unknown, error };

std::string to_string(Outcome outcome);

struct Verdict {
    Outcome outcome = Outcome::error;
    bool timed_out = false;   // Unknown caused by the wall-clock deadline
    double seconds = 0.0;     // wall time of the solver process
    std::string model;        // raw model block; only when holds and requested
    std::string message;      // diagnostic for error verdicts
};

/// Runs the solver on the rendered script and classifies the first status
/// token: sat -> holds, unsat -> violated, unknown -> unknown. The process
/// is killed at the deadline (verdict: unknown, timed_out). Process or
/// parse failures yield an error verdict carrying stderr/diagnostics;
/// check_sat itself throws only on invalid configuration.
Verdict check_sat(const SmtScript& script, const SolverConfig& cfg);

/// check_sat with model retrieval: the script is sent with model production
/// enabled and the raw model block is returned in Verdict::model. Requires
/// cfg.produce_models; errors if the script is not satisfiable.
Verdict get_model(const SmtScript& script, const SolverConfig& cfg);

/// Probes the solver with a trivial satisfiable script; throws solver_error
/// if it cannot be executed or does not answer "sat".
void probe_solver(const SolverConfig& cfg);

/// Resolution order: explicit value, DSV_SOLVER environment variable, `z3`
/// on PATH, the repository's bundled solver shim. Throws solver_error if
/// nothing is found.
std::string resolve_solver_path(const std::string& explicit_path = "");

} // namespace dsv
