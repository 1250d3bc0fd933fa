/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The dsverify Authors
 */
#include "dsv/property.hpp"

#include "dsv/errors.hpp"
#include "dsv/kernels.hpp"
#include "dsv/sexpr.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

namespace dsv {

std::string param_sort(const ParamValue& v) {
    return std::holds_alternative<std::int64_t>(v) ? "Int" : "Real";
}

std::string param_literal(const ParamValue& v) {
    if (const auto* i = std::get_if<std::int64_t>(&v))
        return *i < 0 ? "(- " + std::to_string(-*i) + ")" : std::to_string(*i);
    return std::get<DecimalReal>(v).smt_literal();
}

std::string param_text(const ParamValue& v) {
    if (const auto* i = std::get_if<std::int64_t>(&v))
        return std::to_string(*i);
    return std::get<DecimalReal>(v).to_string();
}

Specification make_specification(std::vector<Property> properties) {
    if (properties.empty())
        throw error("specification must contain at least one property");
    std::set<std::string> names;
    for (const auto& p : properties)
        if (!names.insert(p.name).second)
            throw error("duplicate property name: " + p.name);
    return Specification{std::move(properties)};
}

namespace {

std::string select_cell(const std::string& i, const std::string& j) {
    return "(select (select D " + i + ") " + j + ")";
}

std::string squared_difference(const std::string& a, const std::string& b) {
    std::string d = "(- " + a + " " + b + ")";
    return "(* " + d + " " + d + ")";
}

std::string sum_of(const std::vector<std::string>& terms) {
    if (terms.size() == 1)
        return terms.front();
    std::string out = "(+";
    for (const auto& t : terms) out += " " + t;
    return out + ")";
}

kernels::ScaledDataset scaled_view(const Dataset& ds, std::initializer_list<DecimalReal> extra) {
    std::size_t scale = 0;
    for (const auto& v : extra) scale = std::max(scale, v.scale());
    return kernels::ScaledDataset::make(ds, scale);
}

} // namespace

Property builtin_min_cardinality(std::int64_t threshold) {
    if (threshold < 0)
        throw error("min_cardinality threshold must be >= 0");
    Property p;
    p.name = "min_cardinality";
    p.params = {{"T", threshold}};
    p.assertions = {"(>= m T)"};
    p.oracle = [threshold](const Dataset& ds, const LabelSet&) {
        return ds.m() >= static_cast<std::size_t>(threshold) ? OracleVerdict::holds
                                                             : OracleVerdict::violated;
    };
    return p;
}

Property builtin_minmax_normalized(const DecimalReal& lo, const DecimalReal& hi) {
    if (!(lo < hi))
        throw error("minmax_normalized needs min < max");
    Property p;
    p.name = "minmax_normalized";
    p.params = {{"min", lo}, {"max", hi}};
    p.assertions = {
        "(not (exists ((i Int) (j Int)) "
        "(and (>= i 0) (< i m) (>= j 0) (< j n) "
        "(or (< " + select_cell("i", "j") + " min) (> " + select_cell("i", "j") + " max)))))"};
    p.oracle = [lo, hi](const Dataset& ds, const LabelSet&) {
        auto view = scaled_view(ds, {lo, hi});
        bool bad = kernels::minmax_violation(view, lo.scaled(view.scale), hi.scaled(view.scale));
        return bad ? OracleVerdict::violated : OracleVerdict::holds;
    };
    return p;
}

Property builtin_coverage_array(const DecimalReal& delta, const DecimalReal& lo,
                                const DecimalReal& hi, std::size_t n) {
    if (!(DecimalReal{} < delta))
        throw error("coverage needs delta > 0");
    if (!(lo < hi))
        throw error("coverage needs min < max");
    if (n < 1)
        throw error("coverage needs at least one feature");

    std::vector<std::string> squares;
    for (std::size_t j = 0; j < n; ++j)
        squares.push_back(squared_difference("(select p " + std::to_string(j) + ")",
                                             select_cell("i", std::to_string(j))));

    Property p;
    p.name = "coverage_array";
    p.params = {{"delta", delta}, {"min", lo}, {"max", hi}};
    p.assertions = {
        "(not (exists ((p (Array Int Real))) (and "
        "(not (exists ((k Int)) (and (>= k 0) (< k n) "
        "(or (> (select p k) max) (< (select p k) min))))) "
        "(forall ((i Int)) (=> (and (>= i 0) (< i m)) "
        "(> " + sum_of(squares) + " (* delta delta)))))))"};
    return p;  // no oracle: the array form is not natively evaluable
}

Property builtin_coverage_expanded(const DecimalReal& delta, const DecimalReal& lo,
                                   const DecimalReal& hi, std::size_t m, std::size_t n,
                                   const CoverageExpandedOptions& options) {
    if (!(DecimalReal{} < delta))
        throw error("coverage needs delta > 0");
    if (!(lo < hi))
        throw error("coverage needs min < max");
    if (m < 1 || n < 1)
        throw error("coverage needs at least one training example and one feature");
    if (n > options.expansion_limit)
        throw error("coverage_expanded refuses n = " + std::to_string(n) +
                     " (expansion limit " + std::to_string(options.expansion_limit) +
                     "); raise the limit or use the array form");
    if (!(DecimalReal{} < options.grid_step))
        throw error("coverage oracle grid step must be > 0");

    std::vector<std::string> clauses;
    for (std::size_t k = 0; k < n; ++k) {
        std::string pk = "p" + std::to_string(k);
        clauses.push_back("(<= min " + pk + ")");
        clauses.push_back("(<= " + pk + " max)");
    }
    for (std::size_t i = 0; i < m; ++i) {
        std::vector<std::string> squares;
        for (std::size_t j = 0; j < n; ++j)
            squares.push_back(squared_difference("p" + std::to_string(j),
                                                 select_cell(std::to_string(i),
                                                             std::to_string(j))));
        clauses.push_back("(> " + sum_of(squares) + " (* delta delta))");
    }
    std::string binders;
    for (std::size_t k = 0; k < n; ++k)
        binders += std::string(k ? " " : "") + "(p" + std::to_string(k) + " Real)";
    std::string body = "(and";
    for (const auto& c : clauses) body += " " + c;
    body += ")";

    Property p;
    p.name = "coverage_expanded";
    p.params = {{"delta", delta}, {"min", lo}, {"max", hi}};
    p.assertions = {"(not (exists (" + binders + ") " + body + "))"};

    DecimalReal step = options.grid_step;
    p.oracle = [delta, lo, hi, step](const Dataset& ds, const LabelSet&) {
        auto view = scaled_view(ds, {delta, lo, hi, step});
        auto max_min = kernels::coverage_max_min_sqdist(view, lo.scaled(view.scale),
                                                        hi.scaled(view.scale),
                                                        step.scaled(view.scale));
        kernels::int128 d = delta.scaled(view.scale);
        return max_min > d * d ? OracleVerdict::violated : OracleVerdict::holds;
    };
    return p;
}

Property builtin_balanced(const DecimalReal& beta) {
    if (beta < DecimalReal::from_int(1))
        throw error("balanced needs beta >= 1");

    // beta = P / Q with Q = 10^scale, reduced. S(O, L[i], m) < m/(beta*l)
    // becomes P*l*S < Q*m, which stays in integer-linear arithmetic.
    std::int64_t numer = beta.scaled(beta.scale());
    std::int64_t denom = 1;
    for (std::size_t k = 0; k < beta.scale(); ++k) denom *= 10;
    std::int64_t g = std::gcd(numer, denom);
    numer /= g;
    denom /= g;

    Property p;
    p.name = "balanced";
    p.params = {{"beta", beta, /*declare=*/false}};
    p.definitions = {
        "(define-fun-rec S ((A (Array Int Real)) (v Real) (s Int)) Int "
        "(ite (<= s 0) 0 (+ (S A v (- s 1)) (ite (= (select A (- s 1)) v) 1 0))))"};
    p.assertions = {
        "(not (exists ((i Int)) (and (>= i 0) (< i l) "
        "(< (* " + std::to_string(numer) + " l (S O (select L i) m)) "
        "(* " + std::to_string(denom) + " m)))))"};
    p.oracle = [numer, denom](const Dataset& ds, const LabelSet& ls) {
        auto view = kernels::ScaledDataset::make(ds);
        auto counts = kernels::label_counts(view);
        kernels::int128 l = static_cast<kernels::int128>(ls.labels.size());
        kernels::int128 mm = static_cast<kernels::int128>(ds.m());
        for (std::int64_t count : counts)
            if (static_cast<kernels::int128>(numer) * l * count <
                static_cast<kernels::int128>(denom) * mm)
                return OracleVerdict::violated;
        return OracleVerdict::holds;
    };
    return p;
}

Property builtin_no_contradictions(std::size_t n) {
    if (n < 1)
        throw error("no_contradictions needs at least one feature");
    std::string body = "(and (>= i 0) (< i m) (>= k 0) (< k m) (not (= i k))";
    for (std::size_t j = 0; j < n; ++j)
        body += " (= " + select_cell("i", std::to_string(j)) + " " +
                select_cell("k", std::to_string(j)) + ")";
    body += " (not (= (select O i) (select O k))))";

    Property p;
    p.name = "no_contradictions";
    p.assertions = {"(not (exists ((i Int) (k Int)) " + body + "))"};
    p.oracle = [](const Dataset& ds, const LabelSet&) {
        auto view = kernels::ScaledDataset::make(ds);
        return kernels::contradiction_exists(view) ? OracleVerdict::violated
                                                   : OracleVerdict::holds;
    };
    return p;
}

namespace {

const std::set<std::string>& environment_symbols() {
    static const std::set<std::string> env = {"m", "n", "l", "D", "O", "L"};
    return env;
}

} // namespace

Property load_property_text(const std::string& name, const std::string& text,
                            const std::vector<PropertyParam>& params) {
    std::vector<SExpr> forms;
    forms = parse_sexprs(text);
    if (forms.empty())
        throw property_error("property file contains no commands");

    Property p;
    p.name = name;
    std::set<std::string> used_params;
    for (const auto& form : forms) {
        if (!form.is_list() || form.items.empty() || !form.items[0].is_atom)
            throw property_error("expected an (assert ...) command", form.offset);
        const std::string& head = form.items[0].atom;
        if (head != "assert")
            throw property_error(
                "command '" + head + "' is not allowed in a property file: properties are "
                "assertions only (the tool owns declarations and the check command)",
                form.offset);
        if (form.items.size() != 2)
            throw property_error("assert takes exactly one term", form.offset);

        for (const auto& [symbol, offset] : free_symbols(form.items[1])) {
            if (environment_symbols().count(symbol))
                continue;
            auto it = std::find_if(params.begin(), params.end(),
                                   [&](const PropertyParam& q) { return q.name == symbol; });
            if (it == params.end()) {
                std::string candidates = "m, n, l, D, O, L";
                for (const auto& q : params) candidates += ", " + q.name;
                throw property_error("unknown symbol '" + symbol +
                                         "'; available symbols: " + candidates,
                                     offset);
            }
            used_params.insert(symbol);
        }
        p.assertions.push_back(form.items[1].to_text());
    }
    for (const auto& q : params)
        if (used_params.count(q.name))
            p.params.push_back(q);
    return p;
}

Property load_property_file(const std::string& path,
                            const std::vector<PropertyParam>& params) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw error("cannot open property file: " + path);
    std::ostringstream text;
    text << in.rdbuf();

    std::string stem = path;
    if (auto slash = stem.find_last_of('/'); slash != std::string::npos)
        stem = stem.substr(slash + 1);
    if (auto dot = stem.find_last_of('.'); dot != std::string::npos && dot > 0)
        stem = stem.substr(0, dot);

    try {
        return load_property_text(stem, text.str(), params);
    } catch (const property_error& e) {
        throw property_error(path + ": " + e.what() + " (at byte " + std::to_string(e.offset) +
                                 ")",
                             e.offset);
    }
}

void append_property(SmtScript& script, const Property& property) {
    for (const auto& param : property.params) {
        if (!param.declare)
            continue;
        std::string equality = "(= " + param.name + " " + param_literal(param.value) + ")";
        if (script.declares(param.name)) {
            bool same = std::find(script.assertions.begin(), script.assertions.end(),
                                  equality) != script.assertions.end();
            if (!same)
                throw property_error("parameter '" + param.name +
                                     "' bound to conflicting values across properties");
            continue;
        }
        script.declarations.push_back({param.name, param_sort(param.value)});
        script.assertions.push_back(equality);
    }
    for (const auto& def : property.definitions)
        if (std::find(script.definitions.begin(), script.definitions.end(), def) ==
            script.definitions.end())
            script.definitions.push_back(def);
    for (const auto& term : property.assertions)
        script.assertions.push_back(term);
}

} // namespace dsv
