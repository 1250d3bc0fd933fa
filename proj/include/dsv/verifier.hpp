/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The dsverify Authors
 */
#pragma once

#include "dsv/dataset.hpp"
#include "dsv/property.hpp"
#include "dsv/solver.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace dsv {

struct ReportEntry {
    std::string property;
    Verdict verdict;
};

/// Overall run classification. A Violated entry is definitive regardless of
/// other entries; Unknown makes an otherwise clean run inconclusive.
enum class RunStatus { holds, violated, inconclusive, error };

std::string to_string(RunStatus status);

struct Report {
    std::string dataset_id;
    std::vector<ReportEntry> entries;  // one per property, input order
    RunStatus overall() const;
};

struct VerifyOptions {
    int parallelism = 1;  // concurrent solver processes
};

/// Encodes the dataset once, then checks every property as an independent
/// conjunction with the dataset formula. Never short-circuits; solver
/// errors become per-property Error entries.
Report verify(const Dataset& ds, const LabelSet& ls, const Specification& spec,
              const SolverConfig& cfg, const VerifyOptions& options = {},
              const std::string& dataset_id = "");

struct ConsistencyEntry {
    std::size_t x = 0;
    std::size_t y = 0;  // x <= y; x == y is the property checked alone
    Verdict verdict;
};

/// Pairwise compatibility of the specification, checked over the bare
/// symbol environment (no dataset values). Any Violated pair makes the
/// specification inadmissible; Unknown entries are inconclusive only.
struct ConsistencyMatrix {
    std::vector<std::string> names;
    std::vector<ConsistencyEntry> entries;
    std::optional<Verdict> full_conjunction;
    bool admissible() const;
};

ConsistencyMatrix check_consistency(const Specification& spec, std::size_t feature_count,
                                    const SolverConfig& cfg, bool check_full_conjunction = false,
                                    const VerifyOptions& options = {});

struct IncrementalPoint {
    std::size_t m_prefix = 0;
    Report report;
};

/// Verifies ever-larger prefixes of the dataset (step, 2*step, ..., m; the
/// final partial prefix included). All (prefix, property) checks are
/// independent and run on one task pool bounded by options.parallelism.
std::vector<IncrementalPoint> incremental_verify(const Dataset& ds, const Specification& spec,
                                                 const SolverConfig& cfg, std::size_t step,
                                                 const VerifyOptions& options = {});

// Report serialization.
std::string to_text(const Report& report);
std::string to_csv(const Report& report);
std::string to_json(const Report& report);
std::string to_text(const ConsistencyMatrix& matrix);
std::string to_json(const ConsistencyMatrix& matrix);
std::string to_csv(const std::vector<IncrementalPoint>& series);

} // namespace dsv
