#include <random>

#include "doctest.h"

#include "mixedrep/form_text.hpp"

using namespace mixedrep;
using forms::TermKind;

TEST_CASE("parsing form expressions") {
    const auto form = form_text::parse("s+2s+3t");
    CHECK(form.term(0).kind == TermKind::square);
    CHECK(form.term(0).coefficient == 1);
    CHECK(form.term(1).kind == TermKind::square);
    CHECK(form.term(1).coefficient == 2);
    CHECK(form.term(2).kind == TermKind::triangular);
    CHECK(form.term(2).coefficient == 3);

    CHECK(form_text::parse("2*s+t+t") == form_text::parse("2s+t+t"));
    CHECK(form_text::parse(" 4s + 2t + t ") == form_text::parse("4s+2t+t"));
}

TEST_CASE("parse errors carry position and expectation") {
    CHECK_THROWS_AS(form_text::parse("s+t"), form_text::ParseError);
    CHECK_THROWS_AS(form_text::parse("s+t+t+t"), form_text::ParseError);
    CHECK_THROWS_AS(form_text::parse("x+t+t"), form_text::ParseError);
    CHECK_THROWS_AS(form_text::parse("0s+t+t"), form_text::ParseError);
    CHECK_THROWS_AS(form_text::parse(""), form_text::ParseError);

    try {
        form_text::parse("s+q+t");
        FAIL("expected a parse error");
    } catch (const form_text::ParseError& e) {
        CHECK(e.position() == 2);
        CHECK(e.expected().find("'s'") != std::string::npos);
    }
}

TEST_CASE("printing round-trips") {
    CHECK(form_text::to_text(form_text::parse("s+2s+3t")) == "s+2s+3t");
    CHECK(form_text::to_text(form_text::parse("1s+1t+1t")) == "s+t+t");
    CHECK(form_text::to_text(form_text::parse("2*s + 4t + t")) == "2s+4t+t");

    std::mt19937 rng(1872);
    std::uniform_int_distribution<int64_t> coeff(1, 40);
    std::uniform_int_distribution<int> kind(0, 1);
    for (int round = 0; round < 50; ++round) {
        auto term = [&] {
            return forms::Term{coeff(rng),
                               kind(rng) == 0 ? TermKind::square : TermKind::triangular};
        };
        const forms::MixedForm form{term(), term(), term()};
        CHECK(form_text::parse(form_text::to_text(form)) == form);
    }
}

TEST_CASE("algebraic rendering") {
    CHECK(form_text::to_algebraic(form_text::parse("s+5s+2t")) == "x^2+5y^2+2t_z");
    CHECK(form_text::to_algebraic(form_text::parse("t+t+2t")) == "t_x+t_y+2t_z");
    CHECK(form_text::to_algebraic(form_text::parse("4s+t+t")) == "4x^2+t_y+t_z");
}
