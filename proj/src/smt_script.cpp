/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The dsverify Authors
 */
#include "dsv/smt_script.hpp"

#include "dsv/errors.hpp"
#include "dsv/sexpr.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <unordered_set>

namespace dsv {

bool SmtScript::declares(const std::string& name) const {
    return std::any_of(declarations.begin(), declarations.end(),
                       [&](const SmtDecl& d) { return d.name == name; });
}

std::string render(const SmtScript& script,
                   const std::vector<std::pair<std::string, std::string>>& extra_options) {
    std::string out;
    if (script.request_model)
        out += "(set-option :produce-models true)\n";
    for (const auto& [key, value] : script.options)
        out += "(set-option :" + key + " " + value + ")\n";
    for (const auto& [key, value] : extra_options)
        out += "(set-option :" + key + " " + value + ")\n";
    if (!script.logic.empty())
        out += "(set-logic " + script.logic + ")\n";
    for (const auto& decl : script.declarations)
        out += "(declare-const " + decl.name + " " + decl.sort + ")\n";
    for (const auto& def : script.definitions)
        out += def + "\n";
    for (const auto& term : script.assertions)
        out += "(assert " + term + ")\n";
    if (script.check_sat)
        out += "(check-sat)\n";
    if (script.request_model)
        out += "(get-model)\n";
    return out;
}

SmtScript encode_dataset(const Dataset& ds, const LabelSet& ls) {
    SmtScript script;
    script.declarations = {
        {"m", "Int"},
        {"n", "Int"},
        {"l", "Int"},
        {"D", "(Array Int (Array Int Real))"},
        {"O", "(Array Int Real)"},
        {"L", "(Array Int Real)"},
    };
    script.assertions.push_back("(= m " + std::to_string(ds.m()) + ")");
    script.assertions.push_back("(= n " + std::to_string(ds.n()) + ")");

    std::vector<DecimalReal> labels;
    for (std::size_t i = 0; i < ds.m(); ++i) {
        const std::string row_index = std::to_string(i);
        for (std::size_t j = 0; j < ds.n(); ++j)
            script.assertions.push_back("(= (select (select D " + row_index + ") " +
                                        std::to_string(j) + ") " + ds.cell(i, j).smt_literal() +
                                        ")");
        const DecimalReal& output = ds.output(i);
        script.assertions.push_back("(= (select O " + row_index + ") " + output.smt_literal() +
                                    ")");
        bool add = true;
        for (const auto& seen : labels)
            if (seen == output) {
                add = false;
                break;
            }
        if (add) {
            script.assertions.push_back("(= (select L " + std::to_string(labels.size()) + ") " +
                                        output.smt_literal() + ")");
            labels.push_back(output);
        }
    }
    script.assertions.push_back("(= l " + std::to_string(labels.size()) + ")");

    if (labels != ls.labels)
        throw error("label set is not the one derived from this dataset");
    return script;
}

SmtScript environment_script(std::size_t feature_count) {
    SmtScript script;
    script.declarations = {
        {"m", "Int"},
        {"n", "Int"},
        {"l", "Int"},
        {"D", "(Array Int (Array Int Real))"},
        {"O", "(Array Int Real)"},
        {"L", "(Array Int Real)"},
    };
    script.assertions.push_back("(>= m 1)");
    if (feature_count > 0)
        script.assertions.push_back("(= n " + std::to_string(feature_count) + ")");
    else
        script.assertions.push_back("(>= n 1)");
    script.assertions.push_back("(>= l 1)");
    script.assertions.push_back("(<= l m)");
    return script;
}

namespace {

const std::unordered_set<std::string>& theory_symbols() {
    static const std::unordered_set<std::string> symbols = {
        "and", "or",  "not", "=>",  "xor",    "ite",     "=",      "distinct", "true",
        "false", "+", "-",   "*",   "/",      "div",     "mod",    "abs",      "to_real",
        "to_int", "is_int",  "<",   "<=",     ">",       ">=",     "select",   "store",
        "Int",   "Real",     "Bool", "Array", "const",   "divisible"};
    return symbols;
}

bool is_literal_atom(const std::string& atom) {
    if (atom.empty()) return true;
    char c = atom.front();
    if (std::isdigit(static_cast<unsigned char>(c))) return true;  // numeral or decimal
    if (c == '"' || c == '#' || c == ':') return true;             // string, bitvec, keyword
    return false;
}

void collect_free_symbols(const SExpr& e, std::set<std::string>& bound,
                          std::vector<std::pair<std::string, std::size_t>>& out) {
    if (e.is_atom) {
        if (is_literal_atom(e.atom) || theory_symbols().count(e.atom) || bound.count(e.atom))
            return;
        out.emplace_back(e.atom, e.offset);
        return;
    }
    if (e.items.empty())
        return;
    const SExpr& head = e.items.front();
    if (head.is_atom && (head.atom == "exists" || head.atom == "forall") && e.items.size() == 3 &&
        e.items[1].is_list()) {
        std::vector<std::string> added;
        for (const SExpr& binding : e.items[1].items) {
            if (binding.is_list() && !binding.items.empty() && binding.items[0].is_atom) {
                if (bound.insert(binding.items[0].atom).second)
                    added.push_back(binding.items[0].atom);
                for (std::size_t k = 1; k < binding.items.size(); ++k)
                    collect_free_symbols(binding.items[k], bound, out);
            }
        }
        collect_free_symbols(e.items[2], bound, out);
        for (const auto& name : added) bound.erase(name);
        return;
    }
    if (head.is_atom && head.atom == "let" && e.items.size() == 3 && e.items[1].is_list()) {
        std::vector<std::string> added;
        for (const SExpr& binding : e.items[1].items)
            if (binding.is_list() && binding.items.size() == 2 && binding.items[0].is_atom)
                collect_free_symbols(binding.items[1], bound, out);
        for (const SExpr& binding : e.items[1].items)
            if (binding.is_list() && binding.items.size() == 2 && binding.items[0].is_atom)
                if (bound.insert(binding.items[0].atom).second)
                    added.push_back(binding.items[0].atom);
        collect_free_symbols(e.items[2], bound, out);
        for (const auto& name : added) bound.erase(name);
        return;
    }
    if (head.is_atom && head.atom == "_")
        return;  // indexed identifier; indices are literals
    if (head.is_atom && head.atom == "!") {
        // annotation: walk the annotated term, skip the keyword/value tail
        if (e.items.size() >= 2) collect_free_symbols(e.items[1], bound, out);
        return;
    }
    for (const SExpr& item : e.items)
        collect_free_symbols(item, bound, out);
}

} // namespace

std::vector<std::pair<std::string, std::size_t>> free_symbols(const SExpr& term) {
    std::set<std::string> bound;
    std::vector<std::pair<std::string, std::size_t>> out;
    collect_free_symbols(term, bound, out);
    return out;
}

void validate_script(const SmtScript& script) {
    std::set<std::string> known;
    for (const auto& decl : script.declarations) {
        if (!known.insert(decl.name).second)
            throw property_error("symbol '" + decl.name + "' declared more than once");
    }
    for (const auto& def : script.definitions) {
        auto forms = parse_sexprs(def);
        for (const auto& form : forms) {
            if (form.is_list() && form.items.size() >= 2 && form.items[1].is_atom) {
                if (!known.insert(form.items[1].atom).second)
                    throw property_error("symbol '" + form.items[1].atom +
                                         "' defined more than once");
            }
        }
    }
    for (const auto& term : script.assertions) {
        auto forms = parse_sexprs(term);
        if (forms.size() != 1)
            throw property_error("assertion must be a single term: " + term);
        for (const auto& [symbol, offset] : free_symbols(forms[0]))
            if (!known.count(symbol))
                throw property_error("assertion references undeclared symbol '" + symbol + "'",
                                     offset);
    }
}

} // namespace dsv
