/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The dsverify Authors
 */
#include "dsv/decimal.hpp"

#include "dsv/errors.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

namespace dsv {

namespace {

bool all_digits(std::string_view s) {
    return !s.empty() &&
           std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

} // namespace

std::optional<DecimalReal> DecimalReal::parse(std::string_view text) {
    std::string_view rest = text;
    bool negative = false;
    if (!rest.empty() && (rest.front() == '+' || rest.front() == '-')) {
        negative = rest.front() == '-';
        rest.remove_prefix(1);
    }

    long long exponent = 0;
    if (auto epos = rest.find_first_of("eE"); epos != std::string_view::npos) {
        std::string_view etext = rest.substr(epos + 1);
        rest = rest.substr(0, epos);
        bool eneg = false;
        if (!etext.empty() && (etext.front() == '+' || etext.front() == '-')) {
            eneg = etext.front() == '-';
            etext.remove_prefix(1);
        }
        if (!all_digits(etext) || etext.size() > 9)
            return std::nullopt;
        for (char c : etext) exponent = exponent * 10 + (c - '0');
        if (eneg) exponent = -exponent;
    }

    std::string int_part, frac_part;
    if (auto dot = rest.find('.'); dot != std::string_view::npos) {
        int_part = std::string(rest.substr(0, dot));
        frac_part = std::string(rest.substr(dot + 1));
        if (rest.find('.', dot + 1) != std::string_view::npos)
            return std::nullopt;
    } else {
        int_part = std::string(rest);
    }
    if (int_part.empty() && frac_part.empty())
        return std::nullopt;
    if (!int_part.empty() && !all_digits(int_part))
        return std::nullopt;
    if (!frac_part.empty() && !all_digits(frac_part))
        return std::nullopt;

    // Apply the exponent by moving the decimal point over the digit string.
    std::string digits = int_part + frac_part;
    long long point = static_cast<long long>(int_part.size()) + exponent;
    if (point < 0) {
        digits.insert(0, static_cast<std::size_t>(-point), '0');
        point = 0;
    } else if (point > static_cast<long long>(digits.size())) {
        digits.append(static_cast<std::size_t>(point) - digits.size(), '0');
    }

    DecimalReal out;
    out.int_digits_ = digits.substr(0, static_cast<std::size_t>(point));
    out.frac_digits_ = digits.substr(static_cast<std::size_t>(point));

    // Canonicalize.
    std::size_t lead = out.int_digits_.find_first_not_of('0');
    out.int_digits_ = lead == std::string::npos ? "0" : out.int_digits_.substr(lead);
    std::size_t tail = out.frac_digits_.find_last_not_of('0');
    out.frac_digits_ = tail == std::string::npos ? "" : out.frac_digits_.substr(0, tail + 1);
    out.negative_ = negative && !out.is_zero();
    return out;
}

DecimalReal DecimalReal::from_string(std::string_view text) {
    auto v = parse(text);
    if (!v)
        throw error("not a decimal real: '" + std::string(text) + "'");
    return *v;
}

DecimalReal DecimalReal::from_int(std::int64_t v) {
    DecimalReal out;
    out.negative_ = v < 0;
    out.int_digits_ =
        v < 0 ? std::to_string(static_cast<std::uint64_t>(-(v + 1)) + 1) : std::to_string(v);
    return out;
}

std::string DecimalReal::to_string() const {
    std::string out;
    if (negative_) out += '-';
    out += int_digits_;
    if (!frac_digits_.empty()) {
        out += '.';
        out += frac_digits_;
    }
    return out;
}

std::string DecimalReal::smt_literal() const {
    std::string magnitude = int_digits_ + "." + (frac_digits_.empty() ? "0" : frac_digits_);
    return negative_ ? "(- " + magnitude + ")" : magnitude;
}

std::int64_t DecimalReal::scaled(std::size_t scale) const {
    if (frac_digits_.size() > scale)
        throw oracle_error("decimal " + to_string() + " needs more than 10^-" +
                           std::to_string(scale) + " resolution");
    std::string digits = int_digits_ + frac_digits_;
    digits.append(scale - frac_digits_.size(), '0');

    std::int64_t value = 0;
    constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();
    for (char c : digits) {
        int d = c - '0';
        if (value > (kMax - d) / 10)
            throw oracle_error("decimal " + to_string() + " overflows the exact oracle range");
        value = value * 10 + d;
    }
    return negative_ ? -value : value;
}

std::strong_ordering DecimalReal::operator<=>(const DecimalReal& other) const {
    if (negative_ != other.negative_)
        return negative_ ? std::strong_ordering::less : std::strong_ordering::greater;

    auto magnitude = [](const DecimalReal& a, const DecimalReal& b) {
        if (a.int_digits_.size() != b.int_digits_.size())
            return a.int_digits_.size() < b.int_digits_.size() ? std::strong_ordering::less
                                                               : std::strong_ordering::greater;
        if (int c = a.int_digits_.compare(b.int_digits_); c != 0)
            return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
        std::size_t len = std::max(a.frac_digits_.size(), b.frac_digits_.size());
        for (std::size_t i = 0; i < len; ++i) {
            char ca = i < a.frac_digits_.size() ? a.frac_digits_[i] : '0';
            char cb = i < b.frac_digits_.size() ? b.frac_digits_[i] : '0';
            if (ca != cb)
                return ca < cb ? std::strong_ordering::less : std::strong_ordering::greater;
        }
        return std::strong_ordering::equal;
    };

    auto mag = magnitude(*this, other);
    if (!negative_) return mag;
    if (mag == std::strong_ordering::less) return std::strong_ordering::greater;
    if (mag == std::strong_ordering::greater) return std::strong_ordering::less;
    return std::strong_ordering::equal;
}

} // namespace dsv
