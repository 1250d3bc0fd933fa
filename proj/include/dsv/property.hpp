/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The dsverify Authors
 */
#pragma once

#include "dsv/dataset.hpp"
#include "dsv/decimal.hpp"
#include "dsv/smt_script.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace dsv {

using ParamValue = std::variant<std::int64_t, DecimalReal>;

std::string param_sort(const ParamValue& v);     // "Int" or "Real"
std::string param_literal(const ParamValue& v);  // SMT-LIB literal text
std::string param_text(const ParamValue& v);     // human-readable text

struct PropertyParam {
    std::string name;
    ParamValue value;
    bool declare = true;  // metadata-only params are not emitted into scripts
    bool operator==(const PropertyParam& other) const = default;
};

enum class OracleVerdict { holds, violated };

/// Direct native evaluation of a property over the in-memory dataset,
/// used to cross-check solver verdicts.
using Oracle = std::function<OracleVerdict(const Dataset&, const LabelSet&)>;

/// A named satisfiability query fragment over the symbol environment
/// {m, n, l, D, O, L} and its parameter constants.
struct Property {
    std::string name;
    std::vector<PropertyParam> params;
    std::vector<std::string> definitions;  // e.g. the recursive count function
    std::vector<std::string> assertions;   // bare terms
    std::optional<Oracle> oracle;
};

/// An ordered, non-empty list of uniquely named properties (the data set
/// specification, sigma).
struct Specification {
    std::vector<Property> properties;
};

Specification make_specification(std::vector<Property> properties);

/// "The data set must contain at least T training examples": m >= T.
Property builtin_min_cardinality(std::int64_t threshold);

/// "The data set must be min-max normalized": no cell below lo or above hi.
Property builtin_minmax_normalized(const DecimalReal& lo, const DecimalReal& hi);

/// "The data set is sampled across the whole input space", array form: no
/// point p (an integer-indexed real array, bounded to [lo, hi] on the first
/// n coordinates) has squared Euclidean distance greater than delta^2 from
/// every training example. The summation needs the concrete feature count,
/// so `n` is taken from the dataset (or the check-spec schema). No native
/// oracle: solvers generally cannot decide the array-quantified form.
Property builtin_coverage_array(const DecimalReal& delta, const DecimalReal& lo,
                                const DecimalReal& hi, std::size_t n);

struct CoverageExpandedOptions {
    DecimalReal grid_step = DecimalReal::from_string("0.01");  // oracle resolution
    std::size_t expansion_limit = 8;                           // refuse larger n
};

/// Same semantics as the array form but existentially quantified over n
/// scalar reals, with both the feature sum and the row conjunction expanded
/// syntactically (m and n come from the dataset); decidable in practice.
/// The oracle scans the [lo, hi]^n grid at the configured resolution using
/// exact integer arithmetic.
Property builtin_coverage_expanded(const DecimalReal& delta, const DecimalReal& lo,
                                   const DecimalReal& hi, std::size_t m, std::size_t n,
                                   const CoverageExpandedOptions& options = {});

/// "There is no class with fewer than m/(beta*l) samples". Defines the
/// recursive count function S and asserts the inequality multiplied out to
/// integer-linear form (beta is cleared of its denominator).
Property builtin_balanced(const DecimalReal& beta);

/// "No two equal rows disagree on their outputs." The per-column equality
/// conjunction is expanded at compile time, so n is required.
Property builtin_no_contradictions(std::size_t n);

/// Wraps a user SMT-LIB property file: assert commands only; free symbols
/// other than {m, n, l, D, O, L} must be supplied as parameters, which the
/// tool declares and fixes ahead of the property text. Throws
/// property_error on syntax errors, disallowed commands or unknown symbols.
Property load_property_file(const std::string& path,
                            const std::vector<PropertyParam>& params);
Property load_property_text(const std::string& name, const std::string& text,
                            const std::vector<PropertyParam>& params);

/// Appends a property's parameter declarations, definitions and assertions
/// to a script. Parameters already present must agree in sort and value;
/// identical definitions are emitted once.
void append_property(SmtScript& script, const Property& property);

} // namespace dsv
