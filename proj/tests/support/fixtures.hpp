/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The dsverify Authors
 */
#pragma once

#include "dsv/dataset.hpp"
#include "dsv/solver.hpp"

#include <cstdlib>
#include <random>
#include <string>
#include <vector>

namespace dsv::testing {

inline std::string data_path() {
    if (const char* env = std::getenv("DSV_DATA"); env && *env)
        return env;
    return "data";
}

inline SolverConfig solver_config(std::chrono::milliseconds timeout =
                                      std::chrono::milliseconds(30'000)) {
    SolverConfig cfg;
    cfg.path = resolve_solver_path();
    cfg.timeout = timeout;
    return cfg;
}

/// The ten-example two-feature dataset used across the documentation.
inline Dataset fixture_dataset() {
    return load_csv_file(data_path() + "/example10.csv");
}

inline Dataset make_dataset(const std::vector<std::vector<const char*>>& rows,
                            const std::vector<const char*>& outputs) {
    std::vector<std::vector<DecimalReal>> r;
    for (const auto& row : rows) {
        std::vector<DecimalReal> cells;
        for (const char* v : row) cells.push_back(DecimalReal::from_string(v));
        r.push_back(std::move(cells));
    }
    std::vector<DecimalReal> o;
    for (const char* v : outputs) o.push_back(DecimalReal::from_string(v));
    return Dataset(std::move(r), std::move(o));
}

/// value = units * 10^-scale, exactly.
inline DecimalReal decimal_scaled(std::int64_t units, std::size_t scale) {
    bool neg = units < 0;
    std::string digits = std::to_string(neg ? -units : units);
    if (digits.size() <= scale)
        digits.insert(0, scale + 1 - digits.size(), '0');
    digits.insert(digits.size() - scale, ".");
    return DecimalReal::from_string((neg ? "-" : "") + digits);
}

/// Random grid-valued dataset: every cell is a multiple of 0.05 in
/// [-1, 1], outputs drawn from a small label pool.
inline Dataset random_dataset(std::mt19937_64& rng, std::size_t max_m, std::size_t max_n,
                              int label_pool = 3, std::size_t min_n = 1) {
    std::uniform_int_distribution<std::size_t> m_dist(1, max_m);
    std::uniform_int_distribution<std::size_t> n_dist(min_n, max_n);
    std::uniform_int_distribution<int> cell_dist(-20, 20);
    std::uniform_int_distribution<int> label_dist(0, label_pool - 1);
    std::size_t m = m_dist(rng), n = n_dist(rng);
    std::vector<std::vector<DecimalReal>> rows(m);
    std::vector<DecimalReal> outputs;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            rows[i].push_back(decimal_scaled(cell_dist(rng) * 5, 2));
        outputs.push_back(DecimalReal::from_int(label_dist(rng)));
    }
    return Dataset(std::move(rows), std::move(outputs));
}

/// The synthetic 118-row benchmark dataset: the ten documented examples
/// followed by 108 deterministic grid points in [-0.95, 0.95]^2 with labels
/// cycling over the same three classes. Plain integer arithmetic only, so
/// the dataset is bit-identical everywhere.
inline Dataset synthetic118() {
    Dataset fx = fixture_dataset();
    auto rows = fx.rows();
    auto outputs = fx.outputs();
    for (int i = 10; i < 118; ++i) {
        int a = (17 * i + 3) % 39 - 19;   // -19..19
        int b = (29 * i + 11) % 37 - 18;  // -18..18
        rows.push_back({decimal_scaled(a * 5, 2), decimal_scaled(b * 5, 2)});
        int r = i % 9;
        outputs.push_back(DecimalReal::from_int(r == 0 ? 1 : (r == 1 ? 0 : -1)));
    }
    return Dataset(std::move(rows), std::move(outputs));
}

} // namespace dsv::testing
