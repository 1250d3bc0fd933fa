/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The dsverify Authors
 */
#include "dsv/errors.hpp"
#include "dsv/kernels.hpp"

#include "support/fixtures.hpp"

#include <doctest.h>

#include <random>

using namespace dsv;
using namespace dsv::kernels;

TEST_CASE("scaled view uses the maximum fraction length") {
    Dataset ds = testing::make_dataset({{"0.5", "1"}, {"-0.25", "2"}}, {"1", "0"});
    ScaledDataset view = ScaledDataset::make(ds);
    CHECK(view.scale == 2);
    CHECK(view.cell(0, 0) == 50);
    CHECK(view.cell(1, 0) == -25);
    CHECK(view.cell(1, 1) == 200);
    CHECK(view.outputs == std::vector<std::int64_t>{100, 0});

    ScaledDataset wider = ScaledDataset::make(ds, 4);
    CHECK(wider.scale == 4);
    CHECK(wider.cell(0, 0) == 5000);
}

TEST_CASE("minmax scan, boundary inclusive") {
    Dataset ds = testing::make_dataset({{"-1", "0.5"}, {"1", "0"}}, {"0", "0"});
    ScaledDataset view = ScaledDataset::make(ds, 2);  // cells at -100, 50, 100, 0
    CHECK_FALSE(minmax_violation_serial(view, -100, 100));  // cells equal to the bounds are fine
    CHECK(minmax_violation_serial(view, -99, 100));
    CHECK(minmax_violation_serial(view, -100, 99));
}

TEST_CASE("contradiction scan") {
    Dataset contradicting = testing::make_dataset({{"1", "1"}, {"1", "1"}}, {"0", "1"});
    CHECK(contradiction_exists_serial(ScaledDataset::make(contradicting)));

    Dataset duplicated = testing::make_dataset({{"1", "1"}, {"1", "1"}}, {"1", "1"});
    CHECK_FALSE(contradiction_exists_serial(ScaledDataset::make(duplicated)));

    Dataset distinct = testing::make_dataset({{"1", "1"}, {"1", "2"}}, {"0", "1"});
    CHECK_FALSE(contradiction_exists_serial(ScaledDataset::make(distinct)));
}

TEST_CASE("label counts in first-occurrence order") {
    Dataset ds = testing::make_dataset({{"0"}, {"0"}, {"0"}, {"0"}, {"0"}},
                                       {"5", "5", "7", "5", "7"});
    CHECK(label_counts(ScaledDataset::make(ds)) == std::vector<std::int64_t>{3, 2});

    CHECK(label_counts(ScaledDataset::make(testing::fixture_dataset())) ==
          std::vector<std::int64_t>{1, 1, 8});
}

TEST_CASE("coverage grid geometry") {
    CHECK(coverage_grid_axis_points(-100, 100, 1) == 201);
    CHECK(coverage_grid_axis_points(0, 300, 200) == 3);  // 0, 200, then 300 sampled at the edge
    CHECK(coverage_grid_axis_points(0, 400, 200) == 3);
    CHECK_THROWS_AS(coverage_grid_axis_points(0, 400, 0), oracle_error);
    CHECK_THROWS_AS(coverage_grid_axis_points(4, 4, 1), oracle_error);
}

TEST_CASE("coverage scan: single row at the origin") {
    // grid [-1,1]^2 at step 0.5 with a single example at (0,0): the
    // farthest grid point is a corner at squared distance 2.
    Dataset ds = testing::make_dataset({{"0", "0"}}, {"0"});
    ScaledDataset view = ScaledDataset::make(ds, 1);
    int128 far = coverage_max_min_sqdist_serial(view, -10, 10, 5);
    CHECK(far == int128(200));  // 2.0 in 10^-2 units
}

TEST_CASE("coverage scan samples hi when the step overshoots") {
    // grid {0, 0.3} on one axis; row at 0 -> farthest point is 0.3
    Dataset ds = testing::make_dataset({{"0"}}, {"0"});
    ScaledDataset view = ScaledDataset::make(ds, 1);
    int128 far = coverage_max_min_sqdist_serial(view, 0, 3, 2);
    CHECK(far == int128(9));
}

TEST_CASE("parallel kernels agree with the serial reference") {
    std::mt19937_64 rng(20260601);
    for (int iter = 0; iter < 120; ++iter) {
        Dataset ds = testing::random_dataset(rng, 24, 3, 2);
        ScaledDataset view = ScaledDataset::make(ds);
        std::int64_t lo = -80, hi = 80;

        CHECK(minmax_violation(view, lo, hi) == minmax_violation_serial(view, lo, hi));
        CHECK(contradiction_exists(view) == contradiction_exists_serial(view));

        if (ds.n() <= 2) {
            std::int64_t step = 10;
            CHECK(coverage_max_min_sqdist(view, -100, 100, step) ==
                  coverage_max_min_sqdist_serial(view, -100, 100, step));
        }
    }
}

TEST_CASE("duplicated rows with clashing outputs are found by both scans") {
    std::mt19937_64 rng(5150);
    for (int iter = 0; iter < 40; ++iter) {
        Dataset base = testing::random_dataset(rng, 12, 3, 2);
        auto rows = base.rows();
        auto outputs = base.outputs();
        rows.push_back(rows[iter % rows.size()]);  // duplicate some row
        outputs.push_back(DecimalReal::from_int(5));  // with a fresh output value
        Dataset ds(rows, outputs);
        ScaledDataset view = ScaledDataset::make(ds);
        CHECK(contradiction_exists_serial(view));
        CHECK(contradiction_exists(view));
    }
}

TEST_CASE("oracle range guard") {
    Dataset ds = testing::make_dataset({{"123456789.123456789"}}, {"0"});
    CHECK_THROWS_AS(ScaledDataset::make(ds, 9), oracle_error);
}
