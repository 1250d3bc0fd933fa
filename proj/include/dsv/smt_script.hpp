/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The dsverify Authors
 */
#pragma once

#include "dsv/dataset.hpp"
#include "dsv/sexpr.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace dsv {

struct SmtDecl {
    std::string name;
    std::string sort;  // e.g. "Int", "Real", "(Array Int Real)"
    bool operator==(const SmtDecl&) const = default;
};

/// An SMT-LIB 2 script: options, one set-logic, declared constants,
/// function definitions, assertions (stored as bare terms), and the
/// check/model epilogue. Rendering is deterministic: structurally
/// identical scripts produce byte-identical text.
struct SmtScript {
    std::vector<std::pair<std::string, std::string>> options;  // key (without ':'), value
    std::string logic = "ALL";
    std::vector<SmtDecl> declarations;
    std::vector<std::string> definitions;  // complete commands, e.g. "(define-fun-rec ...)"
    std::vector<std::string> assertions;   // bare terms; rendered as (assert <term>)
    bool check_sat = true;
    bool request_model = false;

    bool declares(const std::string& name) const;
};

/// Renders one command per line. `extra_options` are emitted after the
/// script's own options (solver tuning injected per run).
std::string render(const SmtScript& script,
                   const std::vector<std::pair<std::string, std::string>>& extra_options = {});

/// Dataset-to-formula encoding. The returned script asserts, in order,
/// m and n, then per training example its feature cells, its output, and
/// (on first occurrence of the output value) the label-array binding,
/// then the distinct-label count l. `ls` must be the label set derived
/// from `ds`.
SmtScript encode_dataset(const Dataset& ds, const LabelSet& ls);

/// The shared symbol environment (m, n, l, D, O, L) without any dataset
/// value assertions. When `feature_count` > 0, n is fixed to it; the shape
/// axioms every dataset satisfies (m >= 1, n >= 1, 1 <= l <= m) are
/// asserted so that consistency verdicts match realizable datasets.
SmtScript environment_script(std::size_t feature_count = 0);

/// Validates SMT-LIB syntax of the rendered script and that every symbol
/// referenced by an assertion is declared (used by tests and the property
/// loader). Throws property_error on violations.
void validate_script(const SmtScript& script);

/// Free symbols of a term (everything that is not a literal, a theory
/// symbol, or bound by an enclosing exists/forall/let), with byte offsets,
/// in reference order.
std::vector<std::pair<std::string, std::size_t>> free_symbols(const SExpr& term);

} // namespace dsv
