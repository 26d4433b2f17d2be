#pragma once

// Textual form expressions: "s+2s+3t" denotes x^2 + 2y^2 + 3t_z. Grammar:
//
//   form := term "+" term "+" term
//   term := [coefficient ["*"]] ("s" | "t")
//
// where `s` is a squared variable, `t` a triangular one, and a missing
// coefficient means 1. Slot identity is positional. Printing produces the
// canonical spelling (no "*", coefficient 1 omitted), so parse(print(f))
// returns f.

#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "mixedrep/arith.hpp"
#include "mixedrep/forms.hpp"

namespace mixedrep::form_text {

class ParseError : public std::runtime_error {
public:
    ParseError(size_t position, std::string expected)
        : std::runtime_error("parse error at position " + std::to_string(position) +
                             ": expected " + expected),
          position_(position),
          expected_(std::move(expected)) {}

    size_t position() const { return position_; }
    const std::string& expected() const { return expected_; }

private:
    size_t position_;
    std::string expected_;
};

inline forms::MixedForm parse(std::string_view text) {
    size_t pos = 0;
    auto skip_spaces = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };

    auto parse_term = [&]() -> forms::Term {
        skip_spaces();
        int64_t coefficient = 1;
        if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            const size_t coefficient_start = pos;
            coefficient = 0;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                coefficient = arith::checked_add(arith::checked_mul(coefficient, 10),
                                                 text[pos] - '0');
                ++pos;
            }
            if (coefficient < 1) throw ParseError(coefficient_start, "a positive coefficient");
            if (pos < text.size() && text[pos] == '*') ++pos;
        }
        skip_spaces();
        if (pos >= text.size() || (text[pos] != 's' && text[pos] != 't')) {
            throw ParseError(pos, "term kind 's' (square) or 't' (triangular)");
        }
        const forms::TermKind kind =
            text[pos] == 's' ? forms::TermKind::square : forms::TermKind::triangular;
        ++pos;
        return forms::Term{coefficient, kind};
    };

    const forms::Term t0 = parse_term();
    forms::Term rest[2];
    for (auto& term : rest) {
        skip_spaces();
        if (pos >= text.size() || text[pos] != '+') {
            throw ParseError(pos, "'+' (a form has exactly three terms)");
        }
        ++pos;
        term = parse_term();
    }
    skip_spaces();
    if (pos != text.size()) {
        throw ParseError(pos, "end of input (a form has exactly three terms)");
    }
    return forms::MixedForm{t0, rest[0], rest[1]};
}

inline std::string to_text(const forms::MixedForm& form) {
    std::string out;
    for (int slot = 0; slot < 3; ++slot) {
        const auto& term = form.term(slot);
        if (slot > 0) out += '+';
        if (term.coefficient != 1) out += std::to_string(term.coefficient);
        out += term.kind == forms::TermKind::square ? 's' : 't';
    }
    return out;
}

// Conventional algebraic rendering with positional variables x, y, z:
// "x^2+2y^2+3t_z".
inline std::string to_algebraic(const forms::MixedForm& form) {
    static constexpr char vars[3] = {'x', 'y', 'z'};
    std::string out;
    for (int slot = 0; slot < 3; ++slot) {
        const auto& term = form.term(slot);
        if (slot > 0) out += '+';
        if (term.coefficient != 1) out += std::to_string(term.coefficient);
        if (term.kind == forms::TermKind::square) {
            out += vars[slot];
            out += "^2";
        } else {
            out += "t_";
            out += vars[slot];
        }
    }
    return out;
}

}  // namespace mixedrep::form_text
