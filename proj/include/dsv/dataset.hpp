/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The dsverify Authors
 */
#pragma once

#include "dsv/decimal.hpp"

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace dsv {

struct CsvOptions {
    bool skip_header = false;
};

/// A structured data set: feature matrix D (m rows, n columns) plus the
/// expected-output vector O (length m). Immutable after construction and
/// safe to share across threads.
class Dataset {
public:
    Dataset(std::vector<std::vector<DecimalReal>> rows, std::vector<DecimalReal> outputs);

    std::size_t m() const { return rows_.size(); }
    std::size_t n() const { return rows_.front().size(); }

    const std::vector<std::vector<DecimalReal>>& rows() const { return rows_; }
    const std::vector<DecimalReal>& outputs() const { return outputs_; }
    const DecimalReal& cell(std::size_t i, std::size_t j) const { return rows_[i][j]; }
    const DecimalReal& output(std::size_t i) const { return outputs_[i]; }

    /// The sub-dataset made of the first `count` rows (1 <= count <= m).
    Dataset prefix(std::size_t count) const;

    bool operator==(const Dataset& other) const = default;

private:
    std::vector<std::vector<DecimalReal>> rows_;
    std::vector<DecimalReal> outputs_;
};

/// Distinct output values in first-occurrence order.
struct LabelSet {
    std::vector<DecimalReal> labels;
    std::size_t l() const { return labels.size(); }
};

/// Parses comma-separated, newline-delimited decimal reals; the last column
/// of each record is the expected output, the rest are features. Throws
/// csv_error with 1-based row/column coordinates on structural or numeric
/// problems.
Dataset load_csv(std::istream& source, const CsvOptions& options = {});
Dataset load_csv_file(const std::string& path, const CsvOptions& options = {});

/// Serializes back to CSV, printing each value in its canonical decimal
/// form; reloading the result yields an equal Dataset.
std::string to_csv(const Dataset& ds);

LabelSet distinct_labels(const Dataset& ds);

} // namespace dsv
