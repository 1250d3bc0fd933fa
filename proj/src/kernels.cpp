/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The dsverify Authors
 */
#include "dsv/kernels.hpp"

#include "dsv/errors.hpp"

#include <algorithm>

namespace dsv::kernels {

namespace {

// |value| * 10^scale must stay well inside int64 so squared sums over up to
// 64 features fit in int128.
constexpr std::int64_t kMaxScaled = 1'000'000'000'000'000;  // 10^15
constexpr std::size_t kMaxGridPoints = 200'000'000;
constexpr std::size_t kMaxFeaturesForCoverage = 64;

std::int64_t checked_scaled(const DecimalReal& v, std::size_t scale) {
    std::int64_t s = v.scaled(scale);
    if (s > kMaxScaled || s < -kMaxScaled)
        throw oracle_error("value " + v.to_string() + " is outside the exact oracle range");
    return s;
}

} // namespace

ScaledDataset ScaledDataset::make(const Dataset& ds, std::size_t min_scale) {
    std::size_t scale = min_scale;
    for (const auto& row : ds.rows())
        for (const auto& v : row) scale = std::max(scale, v.scale());
    for (const auto& v : ds.outputs()) scale = std::max(scale, v.scale());

    ScaledDataset out;
    out.m = ds.m();
    out.n = ds.n();
    out.scale = scale;
    out.cells.reserve(out.m * out.n);
    out.outputs.reserve(out.m);
    for (const auto& row : ds.rows())
        for (const auto& v : row) out.cells.push_back(checked_scaled(v, scale));
    for (const auto& v : ds.outputs()) out.outputs.push_back(checked_scaled(v, scale));
    return out;
}

bool minmax_violation_serial(const ScaledDataset& ds, std::int64_t lo, std::int64_t hi) {
    for (std::int64_t v : ds.cells)
        if (v < lo || v > hi) return true;
    return false;
}

bool minmax_violation(const ScaledDataset& ds, std::int64_t lo, std::int64_t hi) {
    bool found = false;
    const std::int64_t count = static_cast<std::int64_t>(ds.cells.size());
#pragma omp parallel for reduction(|| : found) schedule(static)
    for (std::int64_t idx = 0; idx < count; ++idx)
        found = found || ds.cells[static_cast<std::size_t>(idx)] < lo ||
                ds.cells[static_cast<std::size_t>(idx)] > hi;
    return found;
}

namespace {

bool rows_contradict(const ScaledDataset& ds, std::size_t i, std::size_t k) {
    if (ds.outputs[i] == ds.outputs[k]) return false;
    for (std::size_t j = 0; j < ds.n; ++j)
        if (ds.cell(i, j) != ds.cell(k, j)) return false;
    return true;
}

} // namespace

bool contradiction_exists_serial(const ScaledDataset& ds) {
    for (std::size_t i = 0; i < ds.m; ++i)
        for (std::size_t k = i + 1; k < ds.m; ++k)
            if (rows_contradict(ds, i, k)) return true;
    return false;
}

bool contradiction_exists(const ScaledDataset& ds) {
    bool found = false;
    const std::int64_t m = static_cast<std::int64_t>(ds.m);
#pragma omp parallel for reduction(|| : found) schedule(dynamic, 4)
    for (std::int64_t i = 0; i < m; ++i) {
        if (found) continue;
        for (std::size_t k = static_cast<std::size_t>(i) + 1; k < ds.m; ++k)
            if (rows_contradict(ds, static_cast<std::size_t>(i), k)) {
                found = true;
                break;
            }
    }
    return found;
}

std::vector<std::int64_t> label_counts(const ScaledDataset& ds) {
    std::vector<std::int64_t> labels;
    std::vector<std::int64_t> counts;
    for (std::int64_t o : ds.outputs) {
        bool seen = false;
        for (std::size_t k = 0; k < labels.size(); ++k)
            if (labels[k] == o) {
                ++counts[k];
                seen = true;
                break;
            }
        if (!seen) {
            labels.push_back(o);
            counts.push_back(1);
        }
    }
    return counts;
}

std::size_t coverage_grid_axis_points(std::int64_t lo, std::int64_t hi, std::int64_t step) {
    if (step <= 0 || lo >= hi)
        throw oracle_error("coverage grid needs step > 0 and lo < hi");
    std::int64_t span = hi - lo;
    std::size_t points = static_cast<std::size_t>(span / step) + 1;
    if (span % step != 0)
        ++points;  // hi sampled explicitly when the step does not land on it
    return points;
}

namespace {

struct GridGeometry {
    std::int64_t lo, hi, step;
    std::size_t axis_points;
    std::size_t dims;
    std::size_t total;

    std::int64_t coordinate(std::size_t index_on_axis) const {
        std::int64_t v = lo + static_cast<std::int64_t>(index_on_axis) * step;
        return v > hi ? hi : v;
    }
};

GridGeometry make_geometry(const ScaledDataset& ds, std::int64_t lo, std::int64_t hi,
                           std::int64_t step) {
    if (ds.n > kMaxFeaturesForCoverage)
        throw oracle_error("coverage oracle supports at most " +
                           std::to_string(kMaxFeaturesForCoverage) + " features");
    GridGeometry g{lo, hi, step, coverage_grid_axis_points(lo, hi, step), ds.n, 1};
    for (std::size_t k = 0; k < g.dims; ++k) {
        if (g.total > kMaxGridPoints / g.axis_points)
            throw oracle_error("coverage grid too large; raise the grid step");
        g.total *= g.axis_points;
    }
    return g;
}

int128 min_sqdist_to_rows(const ScaledDataset& ds, const std::int64_t* point) {
    int128 best = -1;
    for (std::size_t i = 0; i < ds.m; ++i) {
        int128 sum = 0;
        for (std::size_t j = 0; j < ds.n; ++j) {
            std::int64_t d = point[j] - ds.cell(i, j);
            sum += static_cast<int128>(d) * d;
        }
        if (best < 0 || sum < best) best = sum;
    }
    return best;
}

void decode_point(const GridGeometry& g, std::size_t flat, std::int64_t* point) {
    for (std::size_t k = 0; k < g.dims; ++k) {
        point[k] = g.coordinate(flat % g.axis_points);
        flat /= g.axis_points;
    }
}

} // namespace

int128 coverage_max_min_sqdist_serial(const ScaledDataset& ds, std::int64_t lo, std::int64_t hi,
                                      std::int64_t step) {
    GridGeometry g = make_geometry(ds, lo, hi, step);
    std::int64_t point[kMaxFeaturesForCoverage];
    int128 best = -1;
    for (std::size_t flat = 0; flat < g.total; ++flat) {
        decode_point(g, flat, point);
        int128 d = min_sqdist_to_rows(ds, point);
        if (d > best) best = d;
    }
    return best;
}

int128 coverage_max_min_sqdist(const ScaledDataset& ds, std::int64_t lo, std::int64_t hi,
                               std::int64_t step) {
    GridGeometry g = make_geometry(ds, lo, hi, step);
    const std::int64_t total = static_cast<std::int64_t>(g.total);
    int128 best = -1;
#pragma omp parallel
    {
        std::int64_t point[kMaxFeaturesForCoverage];
        int128 local_best = -1;
#pragma omp for schedule(static) nowait
        for (std::int64_t flat = 0; flat < total; ++flat) {
            decode_point(g, static_cast<std::size_t>(flat), point);
            int128 d = min_sqdist_to_rows(ds, point);
            if (d > local_best) local_best = d;
        }
#pragma omp critical(dsv_coverage_reduce)
        {
            if (local_best > best) best = local_best;
        }
    }
    return best;
}

} // namespace dsv::kernels
