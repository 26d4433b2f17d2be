#include <cstdint>
#include <random>
#include <vector>

#include "doctest.h"

#include "mixedrep/counts.hpp"
#include "mixedrep/series.hpp"

using namespace mixedrep;
using series::TruncatedSeries;

namespace {

TruncatedSeries make(std::vector<int64_t> c) {
    return TruncatedSeries::from_coefficients(std::move(c));
}

TruncatedSeries random_series(std::mt19937& rng, int64_t order) {
    std::uniform_int_distribution<int64_t> coeff(-50, 50);
    std::vector<int64_t> c(static_cast<size_t>(order) + 1);
    for (auto& v : c) v = coeff(rng);
    return make(std::move(c));
}

}  // namespace

TEST_CASE("phi and psi expansions") {
    CHECK(series::phi(10).coefficients() ==
          std::vector<int64_t>{1, 2, 0, 0, 2, 0, 0, 0, 0, 2, 0});
    CHECK(series::phi(0).coefficients() == std::vector<int64_t>{1});
    CHECK(series::phi(1).coefficients() == std::vector<int64_t>{1, 2});

    CHECK(series::psi(10).coefficients() ==
          std::vector<int64_t>{1, 1, 0, 1, 0, 0, 1, 0, 0, 0, 1});
    CHECK(series::psi(0).coefficients() == std::vector<int64_t>{1});
    CHECK(series::psi(2).coefficients() == std::vector<int64_t>{1, 1, 0});
}

TEST_CASE("multiply") {
    CHECK(series::multiply(make({1, 1, 0}), make({1, -1, 0})).coefficients() ==
          std::vector<int64_t>{1, 0, -1});
    CHECK_THROWS_AS(series::multiply(make({1, 1}), make({1})), std::invalid_argument);

    // Coefficient 2 of phi * psi^2 counts the representations of 2.
    const auto psi = series::psi(50);
    const auto product = series::multiply(series::phi(50), series::multiply(psi, psi));
    CHECK(product[2] == 5);
    CHECK(product[2] == counts::r(2));
}

TEST_CASE("multiply is commutative and associative up to truncation") {
    std::mt19937 rng(20070213);
    int bad = 0;
    for (int round = 0; round < 20; ++round) {
        std::uniform_int_distribution<int64_t> ord(0, 200);
        const int64_t order = ord(rng);
        const auto a = random_series(rng, order);
        const auto b = random_series(rng, order);
        const auto c = random_series(rng, order);
        if (series::multiply(a, b) != series::multiply(b, a)) ++bad;
        if (series::multiply(series::multiply(a, b), c) !=
            series::multiply(a, series::multiply(b, c))) {
            ++bad;
        }
    }
    CHECK(bad == 0);
}

TEST_CASE("negate_q") {
    CHECK(series::negate_q(series::phi(10)).coefficients() ==
          std::vector<int64_t>{1, -2, 0, 0, 2, 0, 0, 0, 0, -2, 0});
    CHECK(series::negate_q(make({1, 1, 1})).coefficients() == std::vector<int64_t>{1, -1, 1});

    std::mt19937 rng(577);
    for (int round = 0; round < 10; ++round) {
        const auto s = random_series(rng, 64);
        CHECK(series::negate_q(series::negate_q(s)) == s);
    }
}

TEST_CASE("substitute_power") {
    CHECK(series::substitute_power(make({1, 1, 0, 0}), 2).coefficients() ==
          std::vector<int64_t>{1, 0, 1, 0});
    const auto s = make({3, -1, 4, 1, -5});
    CHECK(series::substitute_power(s, 1) == s);
    CHECK_THROWS_AS(series::substitute_power(s, 0), std::invalid_argument);

    const auto doubled = series::substitute_power(series::psi(20), 2);
    for (int64_t i = 0; i <= 20; ++i) {
        const bool expect_one = i == 0 || i == 2 || i == 6 || i == 12 || i == 20;
        CHECK(doubled[i] == (expect_one ? 1 : 0));
    }
}

TEST_CASE("signed odd theta") {
    CHECK(series::signed_odd_theta(6, 1).coefficients() ==
          std::vector<int64_t>{1, -3, 0, 5, 0, 0, -7});
    const auto scaled = series::signed_odd_theta(12, 2);
    CHECK(scaled[0] == 1);
    CHECK(scaled[2] == -3);
    CHECK(scaled[6] == 5);
    CHECK(scaled[12] == -7);
    CHECK(scaled[1] == 0);
    CHECK(series::signed_odd_theta(0, 1).coefficients() == std::vector<int64_t>{1});
}

TEST_CASE("restricted euler products") {
    // prod (1-q^n)^3 begins 1 - 3q + 5q^3 - 7q^6 (coefficients at t_m).
    CHECK(series::restricted_euler_product({{1, 0, 3}}, 6).coefficients() ==
          std::vector<int64_t>{1, -3, 0, 5, 0, 0, -7});
    // prod (1-q^{2n}) to order 2 is its first factor.
    CHECK(series::restricted_euler_product({{2, 0, 1}}, 2).coefficients() ==
          std::vector<int64_t>{1, 0, -1});
    // phi(-q) = prod (1-q^{2n-1})^2 (1-q^{2n}).
    CHECK(series::restricted_euler_product({{2, 1, 2}, {2, 0, 1}}, 20) ==
          series::negate_q(series::phi(20)));
    // Euler's pentagonal expansion of prod (1-q^n).
    const auto euler = series::restricted_euler_product({{1, 0, 1}}, 15);
    CHECK(euler.coefficients() ==
          std::vector<int64_t>{1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1, 0, 0, -1});

    CHECK_THROWS_AS(series::restricted_euler_product({{0, 0, 1}}, 5), std::invalid_argument);
    CHECK_THROWS_AS(series::restricted_euler_product({{2, 3, 1}}, 5), std::invalid_argument);
    CHECK_THROWS_AS(series::restricted_euler_product({{1, 0, -1}}, 5), std::invalid_argument);
}

TEST_CASE("theta identities at moderate order") {
    const int64_t order = 2000;
    const auto phi = series::phi(order);
    const auto psi = series::psi(order);
    const auto psi_sq = series::multiply(psi, psi);

    // psi(q)^2 = phi(q) psi(q^2)
    CHECK(psi_sq == series::multiply(phi, series::substitute_power(psi, 2)));

    // phi(-q) psi(q)^2 = sum (-1)^m (2m+1) q^{2 t_m}
    CHECK(series::multiply(series::negate_q(phi), psi_sq) ==
          series::signed_odd_theta(order, 2));
}

TEST_CASE("series arithmetic overflow raises") {
    const auto big = make({INT64_MAX / 2 + 1, INT64_MAX / 2 + 1, 0});
    CHECK_THROWS_AS(series::multiply(big, big), std::overflow_error);
    CHECK_THROWS_AS(series::add(big, big), std::overflow_error);
    CHECK_THROWS_AS(series::scale(big, 3), std::overflow_error);
}
