/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The dsverify Authors
 */
#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace dsv {

/// A parsed SMT-LIB s-expression: an atom (symbol, keyword, numeral or
/// string literal) or a parenthesized list.
struct SExpr {
    bool is_atom = false;
    std::string atom;          // token text, quoting stripped for |symbols|
    std::vector<SExpr> items;  // children when !is_atom
    std::size_t offset = 0;    // byte offset of the token / opening paren

    bool is_list() const { return !is_atom; }
    std::string to_text() const;
};

/// Parses a whole script into top-level forms. Comments (; to end of line)
/// are skipped. Throws property_error on unbalanced parentheses, an
/// unterminated string/quoted symbol, or stray closing parens, with the
/// byte offset of the problem.
std::vector<SExpr> parse_sexprs(std::string_view text);

} // namespace dsv
