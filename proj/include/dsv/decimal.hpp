/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The dsverify Authors
 */
#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace dsv {

/// An exact decimal real: sign, integer digits, fraction digits.
///
/// Feature and output values are kept in this form (never binary floating
/// point) so that the SMT-LIB script asserts exactly the numbers that were
/// in the CSV. Scientific notation is accepted on input and normalized to
/// a plain decimal. Values are canonical: no leading zeros in the integer
/// part, no trailing zeros in the fraction, and zero is never negative.
class DecimalReal {
public:
    DecimalReal() = default;

    /// Parses "[+-]digits[.digits][(e|E)[+-]digits]". Returns nullopt on
    /// anything else (including empty strings, inf/nan, lone dots).
    static std::optional<DecimalReal> parse(std::string_view text);

    /// parse() or throw dsv::error.
    static DecimalReal from_string(std::string_view text);

    static DecimalReal from_int(std::int64_t v);

    bool negative() const { return negative_; }
    const std::string& int_digits() const { return int_digits_; }
    const std::string& frac_digits() const { return frac_digits_; }
    bool is_zero() const { return int_digits_ == "0" && frac_digits_.empty(); }

    /// Number of significant fraction digits.
    std::size_t scale() const { return frac_digits_.size(); }

    /// Canonical plain-decimal text, e.g. "-0.5", "42", "0.051267".
    std::string to_string() const;

    /// SMT-LIB 2 Real numeral. Non-negative values carry an explicit
    /// fractional part ("0.0", "0.051267"); negative values use the
    /// negation application form ("(- 0.092742)") since SMT-LIB has no
    /// signed numerals.
    std::string smt_literal() const;

    /// value * 10^scale as an exact integer. Throws dsv::oracle_error if
    /// the fraction has more than `scale` digits or the result overflows
    /// int64.
    std::int64_t scaled(std::size_t scale) const;

    std::strong_ordering operator<=>(const DecimalReal& other) const;
    bool operator==(const DecimalReal& other) const = default;

private:
    bool negative_ = false;
    std::string int_digits_ = "0";
    std::string frac_digits_;
};

} // namespace dsv
