#include <algorithm>
#include <cstdint>
#include <random>

#include "doctest.h"

#include "mixedrep/arith.hpp"
#include "mixedrep/forms.hpp"

using namespace mixedrep;
using forms::MixedForm;
using forms::RepTriple;
using forms::Term;
using forms::TermKind;

namespace {

MixedForm sst(int64_t a, int64_t b, int64_t c) {
    return forms::make_form({TermKind::square, TermKind::square, TermKind::triangular}, {a, b, c});
}

MixedForm stt(int64_t a, int64_t b, int64_t c) {
    return forms::make_form({TermKind::square, TermKind::triangular, TermKind::triangular},
                            {a, b, c});
}

MixedForm ttt(int64_t a, int64_t b, int64_t c) {
    return forms::make_form({TermKind::triangular, TermKind::triangular, TermKind::triangular},
                            {a, b, c});
}

MixedForm random_form(std::mt19937& rng) {
    std::uniform_int_distribution<int64_t> coeff(1, 6);
    std::uniform_int_distribution<int> kind(0, 1);
    auto term = [&] {
        return Term{coeff(rng), kind(rng) == 0 ? TermKind::square : TermKind::triangular};
    };
    return MixedForm{term(), term(), term()};
}

// Count over all three indices ranging over Z, triangular symmetry included.
int64_t signed_bruteforce_count(const MixedForm& form, int64_t n) {
    auto slot_range = [&](int slot) {
        // Large enough that every contributing index is covered.
        const int64_t c = form.term(slot).coefficient;
        int64_t hi = 0;
        if (form.term(slot).kind == TermKind::square) {
            while (c * hi * hi <= n) ++hi;
        } else {
            while (c * arith::triangular(hi) <= n) ++hi;
        }
        return hi + 1;
    };
    const int64_t r0 = slot_range(0), r1 = slot_range(1), r2 = slot_range(2);
    auto value = [&](int slot, int64_t idx) {
        const auto& t = form.term(slot);
        return t.coefficient * (t.kind == TermKind::square ? idx * idx : arith::triangular(idx));
    };
    int64_t count = 0;
    for (int64_t i = -r0; i <= r0; ++i) {
        for (int64_t j = -r1; j <= r1; ++j) {
            for (int64_t k = -r2; k <= r2; ++k) {
                if (value(0, i) + value(1, j) + value(2, k) == n) ++count;
            }
        }
    }
    return count;
}

}  // namespace

TEST_CASE("evaluate") {
    CHECK(forms::evaluate(stt(1, 1, 1), RepTriple{{0, 0, 0}}) == 0);
    CHECK(forms::evaluate(sst(1, 5, 1), RepTriple{{-2, 1, 3}}) == 15);  // 4 + 5 + 6
    CHECK(forms::evaluate(sst(2, 4, 1), RepTriple{{1, 2, 0}}) == 18);
    CHECK_THROWS_AS(forms::evaluate(stt(1, 1, 1), RepTriple{{0, -1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(sst(0, 1, 1), std::invalid_argument);
}

TEST_CASE("representability witnesses") {
    CHECK_FALSE(forms::is_representable(sst(1, 5, 1), 13));
    CHECK_FALSE(forms::is_representable(sst(1, 6, 1), 47));
    CHECK(forms::is_representable(stt(1, 1, 1), 2));
    CHECK(forms::is_representable(stt(1, 1, 1), 0));
    CHECK_FALSE(forms::is_representable(stt(1, 1, 1), -1));
}

TEST_CASE("count_representations of x^2 + t_y + t_z") {
    const auto form = stt(1, 1, 1);
    CHECK(forms::count_representations(form, 0) == 1);  // (0,0,0)
    CHECK(forms::count_representations(form, 1) == 4);  // (0,0,1) (0,1,0) (+-1,0,0)
    CHECK(forms::count_representations(form, 2) == 5);  // (0,1,1) (+-1,0,1) (+-1,1,0)
}

TEST_CASE("parity split") {
    const auto form = stt(1, 1, 1);
    const auto at2 = forms::parity_split_count(form, 0, 2);
    CHECK(at2.total == 5);
    CHECK(at2.even == 1);
    CHECK(at2.odd == 4);

    const auto at0 = forms::parity_split_count(form, 0, 0);
    CHECK(at0.total == 1);
    CHECK(at0.even == 1);
    CHECK(at0.odd == 0);

    const auto at1 = forms::parity_split_count(form, 0, 1);
    CHECK(at1.total == 4);
    CHECK(at1.even == 2);
    CHECK(at1.odd == 2);

    CHECK_THROWS_AS(forms::parity_split_count(form, 1, 2), std::invalid_argument);
    CHECK_THROWS_AS(forms::parity_split_count(form, 3, 2), std::invalid_argument);
}

TEST_CASE("exceptions") {
    CHECK(forms::exceptions(sst(1, 2, 3), 2000) == std::vector<int64_t>{23});
    CHECK(forms::exceptions(sst(1, 6, 1), 2000) == std::vector<int64_t>{47});
    CHECK(forms::exceptions(stt(1, 1, 1), 1000).empty());
}

TEST_CASE("value set comparison") {
    CHECK_FALSE(forms::value_sets_equal_up_to(sst(4, 1, 2), stt(4, 1, 1), 5000).has_value());
    CHECK_FALSE(forms::value_sets_equal_up_to(stt(1, 2, 1), ttt(1, 1, 1), 5000).has_value());
    CHECK(forms::value_sets_equal_up_to(stt(1, 1, 1), sst(1, 5, 1), 100) == 13);
}

TEST_CASE("eliminate reproduces the triple-triangular classification") {
    forms::EliminationConfig config;
    config.pattern = {TermKind::triangular, TermKind::triangular, TermKind::triangular};
    config.box = {12, 12, 12};
    config.ordering = forms::Ordering::ascending;
    config.rep_bound = 2000;
    const auto result = forms::eliminate(config);

    const std::vector<std::array<int64_t, 3>> expected{
        {1, 1, 1}, {1, 1, 2}, {1, 1, 4}, {1, 1, 5}, {1, 2, 2}, {1, 2, 3}, {1, 2, 4}};
    CHECK(result.survivors == expected);

    // Witnesses agree with the exception scan.
    int bad = 0;
    for (const auto& [vec, witness] : result.eliminated) {
        const auto form = forms::make_form(config.pattern, vec);
        const auto missing = forms::exceptions(form, witness);
        if (missing.empty() || missing.front() != witness) ++bad;
    }
    CHECK(bad == 0);
}

TEST_CASE("eliminate on a shrunken box yields a survivor subset") {
    forms::EliminationConfig big;
    big.pattern = {TermKind::square, TermKind::square, TermKind::triangular};
    big.box = {16, 16, 16};
    big.ordering = forms::Ordering::first_le_second;
    big.rep_bound = 2000;
    const auto full = forms::eliminate(big);

    forms::EliminationConfig small = big;
    small.box = {2, 2, 16};
    const auto sub = forms::eliminate(small);
    for (const auto& v : sub.survivors) {
        CHECK(std::find(full.survivors.begin(), full.survivors.end(), v) != full.survivors.end());
    }
}

TEST_CASE("eliminate rejects degenerate configurations") {
    forms::EliminationConfig config;
    config.box = {0, 4, 4};
    CHECK_THROWS_AS(forms::eliminate(config), std::invalid_argument);
    config.box = {4, 4, 4};
    config.rep_bound = 0;
    CHECK_THROWS_AS(forms::eliminate(config), std::invalid_argument);
}

TEST_CASE("count positivity matches representability") {
    std::mt19937 rng(40127);
    int bad = 0;
    for (int round = 0; round < 8; ++round) {
        const auto form = random_form(rng);
        for (int64_t n = 0; n <= 500; ++n) {
            if ((forms::count_representations(form, n) > 0) != forms::is_representable(form, n)) {
                ++bad;
            }
        }
    }
    CHECK(bad == 0);
}

TEST_CASE("representability table agrees with pointwise search") {
    std::mt19937 rng(926);
    int bad = 0;
    for (int round = 0; round < 6; ++round) {
        const auto form = random_form(rng);
        const auto table = forms::representability_table(form, 300);
        for (int64_t n = 0; n <= 300; ++n) {
            if (table[static_cast<size_t>(n)] != forms::is_representable(form, n)) ++bad;
        }
    }
    CHECK(bad == 0);
}

TEST_CASE("term order never affects representability") {
    std::mt19937 rng(3511);
    int bad = 0;
    for (int round = 0; round < 6; ++round) {
        const auto form = random_form(rng);
        const auto& t = form.terms();
        const MixedForm rotated{t[1], t[2], t[0]};
        const MixedForm swapped{t[2], t[1], t[0]};
        for (int64_t n = 0; n <= 500; ++n) {
            const bool base = forms::is_representable(form, n);
            if (base != forms::is_representable(rotated, n)) ++bad;
            if (base != forms::is_representable(swapped, n)) ++bad;
        }
    }
    CHECK(bad == 0);
}

TEST_CASE("parity split components always sum to the total") {
    std::mt19937 rng(65537);
    std::uniform_int_distribution<int64_t> coeff(1, 5);
    int bad = 0;
    for (int round = 0; round < 5; ++round) {
        const auto form = sst(coeff(rng), coeff(rng), coeff(rng));
        for (int64_t n = 0; n <= 500; ++n) {
            const auto split = forms::parity_split_count(form, 1, n);
            if (split.even + split.odd != split.total) ++bad;
            if (split.total != forms::count_representations(form, n)) ++bad;
        }
    }
    CHECK(bad == 0);
}

TEST_CASE("canonical triangular domains carry the full signed symmetry") {
    // Over all-integer index domains each triangular slot doubles, so the
    // signed count is 4x the canonical one for x^2 + t_y + t_z.
    const auto form = stt(1, 1, 1);
    int bad = 0;
    for (int64_t n = 0; n <= 200; ++n) {
        if (signed_bruteforce_count(form, n) != 4 * forms::count_representations(form, n)) ++bad;
    }
    CHECK(bad == 0);
}
