/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The dsverify Authors
 */
#pragma once

#include <stdexcept>
#include <string>

namespace dsv {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// CSV ingestion failure with 1-based coordinates (column 0 = whole row).
struct csv_error : error {
    csv_error(std::string msg, std::size_t row, std::size_t column = 0)
        : error(std::move(msg)), row(row), column(column) {}
    std::size_t row;
    std::size_t column;
};

/// Property file rejected (syntax, unknown symbol, disallowed command).
struct property_error : error {
    property_error(std::string msg, std::size_t offset = 0)
        : error(std::move(msg)), offset(offset) {}
    std::size_t offset;  // byte offset into the property text, when known
};

struct solver_error : error {
    using error::error;
};

/// Native oracle cannot evaluate exactly (precision or size limits).
struct oracle_error : error {
    using error::error;
};

} // namespace dsv
