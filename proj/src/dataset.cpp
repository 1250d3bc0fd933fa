/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The dsverify Authors
 */
#include "dsv/dataset.hpp"

#include "dsv/errors.hpp"

#include <fstream>
#include <istream>
#include <sstream>

namespace dsv {

Dataset::Dataset(std::vector<std::vector<DecimalReal>> rows, std::vector<DecimalReal> outputs)
    : rows_(std::move(rows)), outputs_(std::move(outputs)) {
    if (rows_.empty())
        throw error("dataset must have at least one training example");
    if (outputs_.size() != rows_.size())
        throw error("output vector length does not match row count");
    std::size_t n = rows_.front().size();
    if (n == 0)
        throw error("dataset must have at least one feature");
    for (const auto& row : rows_)
        if (row.size() != n)
            throw error("all rows must have the same feature count");
}

Dataset Dataset::prefix(std::size_t count) const {
    if (count < 1 || count > m())
        throw error("prefix size out of range");
    return Dataset(std::vector(rows_.begin(), rows_.begin() + count),
                   std::vector(outputs_.begin(), outputs_.begin() + count));
}

namespace {

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = line.find(',', start);
        if (comma == std::string::npos) {
            fields.push_back(line.substr(start));
            return fields;
        }
        fields.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
}

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

} // namespace

Dataset load_csv(std::istream& source, const CsvOptions& options) {
    std::vector<std::vector<DecimalReal>> rows;
    std::vector<DecimalReal> outputs;
    std::size_t field_count = 0;

    std::string line;
    std::size_t line_no = 0;
    bool header_pending = options.skip_header;
    while (std::getline(source, line)) {
        ++line_no;
        if (trim(line).empty())
            continue;  // blank lines (including a trailing newline) are not records
        if (header_pending) {
            header_pending = false;
            continue;
        }
        auto fields = split_fields(line);
        if (field_count == 0) {
            field_count = fields.size();
            if (field_count < 2)
                throw csv_error("record needs at least one feature and one output (got " +
                                    std::to_string(field_count) + " field)",
                                line_no);
        } else if (fields.size() != field_count) {
            throw csv_error("ragged row: expected " + std::to_string(field_count) +
                                " fields, got " + std::to_string(fields.size()),
                            line_no);
        }
        std::vector<DecimalReal> row;
        row.reserve(field_count - 1);
        for (std::size_t c = 0; c < fields.size(); ++c) {
            auto value = DecimalReal::parse(trim(fields[c]));
            if (!value)
                throw csv_error("field '" + trim(fields[c]) + "' is not a decimal real",
                                line_no, c + 1);
            if (c + 1 == fields.size())
                outputs.push_back(*value);
            else
                row.push_back(*value);
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty())
        throw csv_error("empty dataset: no records", 0);
    return Dataset(std::move(rows), std::move(outputs));
}

Dataset load_csv_file(const std::string& path, const CsvOptions& options) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw error("cannot open dataset file: " + path);
    return load_csv(in, options);
}

std::string to_csv(const Dataset& ds) {
    std::ostringstream out;
    for (std::size_t i = 0; i < ds.m(); ++i) {
        for (std::size_t j = 0; j < ds.n(); ++j)
            out << ds.cell(i, j).to_string() << ',';
        out << ds.output(i).to_string() << '\n';
    }
    return out.str();
}

LabelSet distinct_labels(const Dataset& ds) {
    LabelSet ls;
    for (const auto& o : ds.outputs()) {
        bool add = true;
        for (const auto& seen : ls.labels)
            if (seen == o) {
                add = false;
                break;
            }
        if (add)
            ls.labels.push_back(o);
    }
    return ls;
}

} // namespace dsv
