#pragma once

// Elementary number-theoretic primitives shared by every other module.
// All arithmetic is 64-bit signed with explicit overflow detection; a
// computation that would wrap throws std::overflow_error instead.

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace mixedrep::arith {

inline int64_t checked_add(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_add_overflow(a, b, &r)) {
        throw std::overflow_error("64-bit overflow in addition");
    }
    return r;
}

inline int64_t checked_sub(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) {
        throw std::overflow_error("64-bit overflow in subtraction");
    }
    return r;
}

inline int64_t checked_mul(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) {
        throw std::overflow_error("64-bit overflow in multiplication");
    }
    return r;
}

// Floor of sqrt(n) for n >= 0, exact. Seeded from floating point, then
// corrected by exact re-squaring so no rounding edge case survives.
inline int64_t integer_sqrt(int64_t n) {
    if (n < 0) throw std::invalid_argument("integer_sqrt of negative value");
    if (n == 0) return 0;
    auto r = static_cast<int64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r > n / r) --r;
    while ((r + 1) <= n / (r + 1)) ++r;
    return r;
}

// Returns the nonnegative root when n is a perfect square.
inline std::optional<int64_t> square_root_exact(int64_t n) {
    if (n < 0) return std::nullopt;
    const int64_t r = integer_sqrt(n);
    if (r * r == n) return r;
    return std::nullopt;
}

// t_k = k(k+1)/2. Valid for negative k as well: t_{-k-1} = t_k.
inline int64_t triangular(int64_t k) {
    const int64_t p = checked_mul(k, checked_add(k, 1));
    return p / 2;
}

// Inverse of t: the m in N with t_m = n, when 8n+1 is a perfect square.
inline std::optional<int64_t> triangular_index(int64_t n) {
    if (n < 0) return std::nullopt;
    const int64_t disc = checked_add(checked_mul(8, n), 1);
    if (auto s = square_root_exact(disc)) return (*s - 1) / 2;
    return std::nullopt;
}

struct Factorization {
    int64_t n = 1;
    // (prime, exponent), primes strictly increasing.
    std::vector<std::pair<int64_t, int64_t>> factors;
};

// Deterministic trial division up to sqrt(n). Inputs here never exceed
// ~1e8, so nothing faster is warranted.
inline Factorization factorize(int64_t n) {
    if (n < 1) throw std::invalid_argument("factorize requires n >= 1");
    Factorization out;
    out.n = n;
    int64_t m = n;
    for (int64_t d = 2; d <= m / d; d == 2 ? d = 3 : d += 2) {
        if (m % d != 0) continue;
        int64_t e = 0;
        while (m % d == 0) {
            m /= d;
            ++e;
        }
        out.factors.emplace_back(d, e);
    }
    if (m > 1) out.factors.emplace_back(m, 1);
    return out;
}

// Gauss-Legendre three-square test: n = x^2+y^2+z^2 is solvable over Z
// exactly when n is not of the form 4^k(8l+7).
inline bool three_square_admissible(int64_t n) {
    if (n < 0) return false;
    while (n != 0 && n % 4 == 0) n /= 4;
    return n % 8 != 7;
}

struct OddSplit {
    int64_t clean = 1;  // part with no prime factor congruent to 3 mod 4
    std::vector<std::pair<int64_t, int64_t>> bad;  // primes p = 3 (mod 4)
};

// Splits odd n as clean * prod p_i^a_i over the primes p_i = 3 (mod 4).
inline OddSplit odd_split(int64_t n) {
    if (n < 1 || n % 2 == 0) {
        throw std::invalid_argument("odd_split requires odd n >= 1");
    }
    OddSplit out;
    for (const auto& [p, e] : factorize(n).factors) {
        if (p % 4 == 3) {
            out.bad.emplace_back(p, e);
        } else {
            for (int64_t i = 0; i < e; ++i) out.clean = checked_mul(out.clean, p);
        }
    }
    return out;
}

// Sum of all positive divisors, as prod_p (1 + p + ... + p^a).
inline int64_t sigma(const Factorization& f) {
    int64_t total = 1;
    for (const auto& [p, e] : f.factors) {
        int64_t geom = 1;
        int64_t power = 1;
        for (int64_t i = 0; i < e; ++i) {
            power = checked_mul(power, p);
            geom = checked_add(geom, power);
        }
        total = checked_mul(total, geom);
    }
    return total;
}

inline int64_t divisor_count(const Factorization& f) {
    int64_t total = 1;
    for (const auto& [p, e] : f.factors) total = checked_mul(total, e + 1);
    return total;
}

}  // namespace mixedrep::arith
