/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The dsverify Authors
 */
#pragma once

#include "dsv/dataset.hpp"

#include <cstdint>
#include <vector>

namespace dsv::kernels {

/// Exact scaled-integer view of a dataset: every value times 10^scale.
/// All native oracle arithmetic runs on this representation so that the
/// oracle decides with the same exact-rational semantics as the solver
/// (no binary floating point anywhere near a verdict).
struct ScaledDataset {
    std::size_t m = 0;
    std::size_t n = 0;
    std::size_t scale = 0;
    std::vector<std::int64_t> cells;    // row-major, m*n
    std::vector<std::int64_t> outputs;  // m

    std::int64_t cell(std::size_t i, std::size_t j) const { return cells[i * n + j]; }

    /// scale = max fraction length over all values, but at least min_scale.
    static ScaledDataset make(const Dataset& ds, std::size_t min_scale = 0);
};

using int128 = __int128;

/// Any cell outside [lo, hi]? (lo, hi in the same 10^-scale units.)
bool minmax_violation_serial(const ScaledDataset& ds, std::int64_t lo, std::int64_t hi);
bool minmax_violation(const ScaledDataset& ds, std::int64_t lo, std::int64_t hi);

/// Two equal rows with different outputs?
bool contradiction_exists_serial(const ScaledDataset& ds);
bool contradiction_exists(const ScaledDataset& ds);

/// How often each output value appears; counts[k] corresponds to the k-th
/// distinct output in first-occurrence order.
std::vector<std::int64_t> label_counts(const ScaledDataset& ds);

/// Exhaustive scan of the axis-aligned grid over [lo, hi]^n with the given
/// step (all in 10^-scale units; hi itself is always sampled): returns the
/// maximum over grid points of the minimum squared distance to any row, in
/// 10^-2*scale units. This is the independent oracle for the coverage
/// property: the result exceeds delta^2 exactly when some sampled point is
/// farther than delta from every training example.
int128 coverage_max_min_sqdist_serial(const ScaledDataset& ds, std::int64_t lo, std::int64_t hi,
                                      std::int64_t step);
int128 coverage_max_min_sqdist(const ScaledDataset& ds, std::int64_t lo, std::int64_t hi,
                               std::int64_t step);

/// Grid size guard used by both coverage implementations.
std::size_t coverage_grid_axis_points(std::int64_t lo, std::int64_t hi, std::int64_t step);

} // namespace dsv::kernels
