/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The dsverify Authors
 */
#include "dsv/sexpr.hpp"

#include "dsv/errors.hpp"

#include <cctype>

namespace dsv {

std::string SExpr::to_text() const {
    if (is_atom)
        return atom;
    std::string out = "(";
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) out += ' ';
        out += items[i].to_text();
    }
    out += ')';
    return out;
}

namespace {

struct Parser {
    std::string_view text;
    std::size_t pos = 0;

    bool at_end() const { return pos >= text.size(); }

    void skip_trivia() {
        while (!at_end()) {
            char c = text[pos];
            if (c == ';') {
                while (!at_end() && text[pos] != '\n') ++pos;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos;
            } else {
                return;
            }
        }
    }

    SExpr parse_form() {
        skip_trivia();
        if (at_end())
            throw property_error("unexpected end of input", pos);
        std::size_t start = pos;
        char c = text[pos];
        if (c == '(') {
            ++pos;
            SExpr list;
            list.offset = start;
            while (true) {
                skip_trivia();
                if (at_end())
                    throw property_error("unbalanced parentheses: '(' never closed", start);
                if (text[pos] == ')') {
                    ++pos;
                    return list;
                }
                list.items.push_back(parse_form());
            }
        }
        if (c == ')')
            throw property_error("stray ')'", pos);

        SExpr atom;
        atom.is_atom = true;
        atom.offset = start;
        if (c == '"') {
            ++pos;
            atom.atom = "\"";
            while (true) {
                if (at_end())
                    throw property_error("unterminated string literal", start);
                char d = text[pos++];
                if (d == '"') {
                    if (!at_end() && text[pos] == '"') {  // "" escape
                        atom.atom += '"';
                        ++pos;
                        continue;
                    }
                    atom.atom += '"';
                    return atom;
                }
                atom.atom += d;
            }
        }
        if (c == '|') {
            ++pos;
            while (true) {
                if (at_end())
                    throw property_error("unterminated quoted symbol", start);
                char d = text[pos++];
                if (d == '|') return atom;
                atom.atom += d;
            }
        }
        while (!at_end()) {
            char d = text[pos];
            if (d == '(' || d == ')' || d == ';' || d == '"' || d == '|' ||
                std::isspace(static_cast<unsigned char>(d)))
                break;
            atom.atom += d;
            ++pos;
        }
        return atom;
    }
};

} // namespace

std::vector<SExpr> parse_sexprs(std::string_view text) {
    Parser parser{text};
    std::vector<SExpr> forms;
    while (true) {
        parser.skip_trivia();
        if (parser.at_end())
            return forms;
        forms.push_back(parser.parse_form());
    }
}

} // namespace dsv
