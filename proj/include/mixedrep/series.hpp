#pragma once

// Truncated formal power series over the 64-bit integers, plus builders
// for the theta constants
//
//   phi(q) = sum_{n in Z} q^{n^2},   psi(q) = sum_{n >= 0} q^{t_n}
//
// and for restricted Euler products prod (1-q^n)^e. Everything is exact:
// arithmetic on two series of order N yields order N, and a coefficient
// that would overflow 64 bits raises instead of wrapping.

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mixedrep/arith.hpp"
#include "mixedrep/parallel.hpp"

namespace mixedrep::series {

class TruncatedSeries {
public:
    explicit TruncatedSeries(int64_t order) : coeff_(checked_size(order), 0) {}

    static TruncatedSeries from_coefficients(std::vector<int64_t> c) {
        if (c.empty()) throw std::invalid_argument("series needs a constant term");
        TruncatedSeries s(static_cast<int64_t>(c.size()) - 1);
        s.coeff_ = std::move(c);
        return s;
    }

    int64_t order() const { return static_cast<int64_t>(coeff_.size()) - 1; }

    int64_t operator[](int64_t i) const { return coeff_[static_cast<size_t>(i)]; }

    const std::vector<int64_t>& coefficients() const { return coeff_; }

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    static size_t checked_size(int64_t order) {
        if (order < 0) throw std::invalid_argument("series order must be >= 0");
        return static_cast<size_t>(order) + 1;
    }

    friend TruncatedSeries multiply(const TruncatedSeries&, const TruncatedSeries&);
    friend TruncatedSeries add(const TruncatedSeries&, const TruncatedSeries&);
    friend TruncatedSeries scale(const TruncatedSeries&, int64_t);
    friend TruncatedSeries negate_q(const TruncatedSeries&);
    friend TruncatedSeries substitute_power(const TruncatedSeries&, int64_t);
    friend TruncatedSeries phi(int64_t);
    friend TruncatedSeries psi(int64_t);
    friend TruncatedSeries signed_odd_theta(int64_t, int64_t);

    std::vector<int64_t> coeff_;
};

inline TruncatedSeries phi(int64_t order) {
    TruncatedSeries s(order);
    s.coeff_[0] = 1;
    for (int64_t k = 1; k * k <= order; ++k) s.coeff_[static_cast<size_t>(k * k)] = 2;
    return s;
}

inline TruncatedSeries psi(int64_t order) {
    TruncatedSeries s(order);
    for (int64_t k = 0;; ++k) {
        const int64_t t = arith::triangular(k);
        if (t > order) break;
        s.coeff_[static_cast<size_t>(t)] = 1;
    }
    return s;
}

// Coefficient (-1)^m (2m+1) at index scale*t_m, zero elsewhere.
inline TruncatedSeries signed_odd_theta(int64_t order, int64_t scale) {
    if (scale < 1) throw std::invalid_argument("scale must be >= 1");
    TruncatedSeries s(order);
    for (int64_t m = 0;; ++m) {
        const int64_t idx = arith::checked_mul(scale, arith::triangular(m));
        if (idx > order) break;
        s.coeff_[static_cast<size_t>(idx)] = (m % 2 == 0 ? 1 : -1) * (2 * m + 1);
    }
    return s;
}

// Truncated Cauchy product. The sparser operand drives the outer loop, so
// multiplying by phi or psi costs O(sqrt(N) * N) instead of O(N^2).
inline TruncatedSeries multiply(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.order() != b.order()) {
        throw std::invalid_argument("series orders must match for multiplication");
    }
    const int64_t n = a.order();

    auto nonzero_count = [](const TruncatedSeries& s) {
        int64_t c = 0;
        for (int64_t v : s.coeff_) c += (v != 0);
        return c;
    };
    const TruncatedSeries& outer = nonzero_count(a) <= nonzero_count(b) ? a : b;
    const TruncatedSeries& inner = (&outer == &a) ? b : a;

    std::vector<std::pair<int64_t, int64_t>> terms;  // (index, value) of outer
    for (int64_t i = 0; i <= n; ++i) {
        if (outer[i] != 0) terms.emplace_back(i, outer[i]);
    }

    TruncatedSeries out(n);
    parallel::for_blocks(0, n + 1, [&](int64_t lo, int64_t hi) {
        for (const auto& [i, v] : terms) {
            const int64_t from = std::max(lo, i);
            for (int64_t k = from; k < hi; ++k) {
                out.coeff_[static_cast<size_t>(k)] = arith::checked_add(
                    out.coeff_[static_cast<size_t>(k)],
                    arith::checked_mul(v, inner[k - i]));
            }
        }
    });
    return out;
}

inline TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.order() != b.order()) {
        throw std::invalid_argument("series orders must match for addition");
    }
    TruncatedSeries out(a.order());
    for (int64_t i = 0; i <= a.order(); ++i) {
        out.coeff_[static_cast<size_t>(i)] = arith::checked_add(a[i], b[i]);
    }
    return out;
}

inline TruncatedSeries scale(const TruncatedSeries& a, int64_t factor) {
    TruncatedSeries out(a.order());
    for (int64_t i = 0; i <= a.order(); ++i) {
        out.coeff_[static_cast<size_t>(i)] = arith::checked_mul(a[i], factor);
    }
    return out;
}

// q -> -q: negate the odd-index coefficients.
inline TruncatedSeries negate_q(const TruncatedSeries& a) {
    TruncatedSeries out = a;
    for (int64_t i = 1; i <= a.order(); i += 2) {
        out.coeff_[static_cast<size_t>(i)] = -out.coeff_[static_cast<size_t>(i)];
    }
    return out;
}

// q -> q^k, truncated at the original order.
inline TruncatedSeries substitute_power(const TruncatedSeries& a, int64_t k) {
    if (k < 1) throw std::invalid_argument("substitute_power requires k >= 1");
    TruncatedSeries out(a.order());
    for (int64_t i = 0; i * k <= a.order(); ++i) {
        out.coeff_[static_cast<size_t>(i * k)] = a[i];
    }
    return out;
}

// One congruence-restricted family of an Euler product:
// prod over n >= 1 with n = residue (mod modulus) of (1-q^n)^exponent.
struct ProductFactor {
    int64_t modulus = 1;
    int64_t residue = 0;
    int64_t exponent = 1;
};

// Expands prod (1-q^n)^e over the requested residue classes, truncated.
//
// Applying the factors one by one overflows 64 bits long before order
// 20000 (partial products of (q;q)_k reach ~2^81 even though the final
// coefficients are tiny), so the expansion uses the logarithmic-derivative
// recurrence instead: with a_j = sum of n*e over factors with n | j,
//
//   k p_k = - sum_{j=1..k} a_j p_{k-j},   p_0 = 1,
//
// every intermediate is an exact 64-bit integer for the products handled
// here, and the division by k is exact (checked, never rounded).
inline TruncatedSeries restricted_euler_product(std::span<const ProductFactor> factors,
                                                int64_t order) {
    if (order < 0) throw std::invalid_argument("series order must be >= 0");

    std::vector<int64_t> log_weight(static_cast<size_t>(order) + 1, 0);  // a_j
    for (const auto& f : factors) {
        if (f.modulus < 1) throw std::invalid_argument("factor modulus must be >= 1");
        if (f.residue < 0 || f.residue >= f.modulus) {
            throw std::invalid_argument("factor residue must lie in [0, modulus)");
        }
        if (f.exponent < 0) {
            throw std::invalid_argument("negative exponents are not supported; "
                                        "verify such identities cross-multiplied");
        }
        // First n >= 1 in the residue class; factors beyond the truncation
        // order contribute nothing and are skipped.
        const int64_t start = f.residue == 0 ? f.modulus : f.residue;
        for (int64_t n = start; n <= order; n += f.modulus) {
            for (int64_t j = n; j <= order; j += n) {
                log_weight[static_cast<size_t>(j)] = arith::checked_add(
                    log_weight[static_cast<size_t>(j)], arith::checked_mul(n, f.exponent));
            }
        }
    }

    std::vector<int64_t> p(static_cast<size_t>(order) + 1, 0);
    p[0] = 1;
    for (int64_t k = 1; k <= order; ++k) {
        int64_t acc = 0;
        for (int64_t j = 1; j <= k; ++j) {
            acc = arith::checked_add(
                acc, arith::checked_mul(log_weight[static_cast<size_t>(j)],
                                        p[static_cast<size_t>(k - j)]));
        }
        if (acc % k != 0) {
            throw std::logic_error("product expansion produced a non-integer coefficient");
        }
        p[static_cast<size_t>(k)] = -acc / k;
    }
    return TruncatedSeries::from_coefficients(std::move(p));
}

inline TruncatedSeries restricted_euler_product(std::initializer_list<ProductFactor> factors,
                                                int64_t order) {
    return restricted_euler_product(std::span<const ProductFactor>(factors.begin(), factors.size()),
                                    order);
}

// Index of the first differing coefficient, if any.
inline std::optional<int64_t> first_mismatch(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.order() != b.order()) {
        throw std::invalid_argument("series orders must match for comparison");
    }
    for (int64_t i = 0; i <= a.order(); ++i) {
        if (a[i] != b[i]) return i;
    }
    return std::nullopt;
}

}  // namespace mixedrep::series
