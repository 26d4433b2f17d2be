#pragma once

// The named counting functions:
//
//   r(n)  = #{(x,y,z) in Z x N x N : x^2 + t_y + t_z = n}
//   r0/r1 = the even-x / odd-x halves of r
//
// together with lattice-point counts on spheres (signed three-square
// representations and Hurwitz's closed form for odd radii), two-square
// representations, and the pair counts behind t_y + t_z ~ y^2 + 2t_z.

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mixedrep/arith.hpp"
#include "mixedrep/forms.hpp"

namespace mixedrep::counts {

inline const forms::MixedForm& square_two_triangular_form() {
    static const forms::MixedForm form{
        forms::Term{1, forms::TermKind::square},
        forms::Term{1, forms::TermKind::triangular},
        forms::Term{1, forms::TermKind::triangular}};
    return form;
}

inline forms::ParityCounts parity(int64_t n) {
    return forms::parity_split_count(square_two_triangular_form(), 0, n);
}

inline int64_t r(int64_t n) { return parity(n).total; }
inline int64_t r0(int64_t n) { return parity(n).even; }
inline int64_t r1(int64_t n) { return parity(n).odd; }

// r, r0, r1 for every n <= bound in one histogram pass over the index box.
inline std::vector<forms::ParityCounts> parity_table(int64_t bound) {
    if (bound < 0) throw std::invalid_argument("bound must be >= 0");
    std::vector<forms::ParityCounts> table(static_cast<size_t>(bound) + 1);
    for (int64_t n = 0; n <= bound; ++n) table[static_cast<size_t>(n)].n = n;
    for (int64_t x = 0; x * x <= bound; ++x) {
        const int64_t weight = x == 0 ? 1 : 2;
        const bool even = x % 2 == 0;
        for (int64_t y = 0;; ++y) {
            const int64_t base = x * x + arith::triangular(y);
            if (base > bound) break;
            for (int64_t z = 0;; ++z) {
                const int64_t n = base + arith::triangular(z);
                if (n > bound) break;
                auto& row = table[static_cast<size_t>(n)];
                row.total += weight;
                (even ? row.even : row.odd) += weight;
            }
        }
    }
    return table;
}

// #{(x,y,z) in Z^3 : x^2 + y^2 + z^2 = target}, by enumerating the sorted
// orbit representatives 0 <= x <= y <= z and unfolding permutations and
// sign choices.
inline int64_t r3_bruteforce(int64_t target) {
    if (target < 0) return 0;
    int64_t total = 0;
    for (int64_t x = 0; x * x <= target / 3; ++x) {
        for (int64_t y = x; y * y <= (target - x * x) / 2; ++y) {
            const auto z = arith::square_root_exact(target - x * x - y * y);
            if (!z || *z < y) continue;
            int64_t perms;
            if (x == y && y == *z) {
                perms = 1;
            } else if (x == y || y == *z) {
                perms = 3;
            } else {
                perms = 6;
            }
            const int64_t signs = 1LL << ((x != 0) + (y != 0) + (*z != 0));
            total = arith::checked_add(total, perms * signs);
        }
    }
    return total;
}

// Hurwitz's count of lattice points on the sphere of odd radius n:
// with n = n0 * prod p_i^{a_i} over the primes p_i = 3 (mod 4),
//
//   #{x^2+y^2+z^2 = n^2} = 6 n0 prod (p_i^{a_i} + 2 (p_i^{a_i}-1)/(p_i-1)).
//
// The geometric sum is accumulated by iterated integer addition.
inline int64_t hurwitz_count(int64_t n) {
    const auto split = arith::odd_split(n);
    int64_t result = arith::checked_mul(6, split.clean);
    for (const auto& [p, e] : split.bad) {
        int64_t p_alpha = 1;
        int64_t geom = 0;   // 1 + p + ... + p^(e-1)
        int64_t power = 1;
        for (int64_t i = 0; i < e; ++i) {
            geom = arith::checked_add(geom, power);
            power = arith::checked_mul(power, p);
            p_alpha = arith::checked_mul(p_alpha, p);
        }
        result = arith::checked_mul(result,
                                    arith::checked_add(p_alpha, arith::checked_mul(2, geom)));
    }
    return result;
}

// All (x, y) with x > 0, y >= 0 and x^2 + y^2 = n, ascending by x.
inline std::vector<std::pair<int64_t, int64_t>> two_square_reps(int64_t n) {
    std::vector<std::pair<int64_t, int64_t>> out;
    for (int64_t x = 1; n > 0 && x <= n / x; ++x) {
        if (auto y = arith::square_root_exact(n - x * x)) out.emplace_back(x, *y);
    }
    return out;
}

// #{(y,z) in N^2 : t_y + t_z = n}.
inline int64_t triangular_pair_count(int64_t n) {
    if (n < 0) return 0;
    int64_t count = 0;
    for (int64_t y = 0;; ++y) {
        const int64_t t = arith::triangular(y);
        if (t > n) break;
        if (arith::triangular_index(n - t)) ++count;
    }
    return count;
}

// #{(y,z) in Z x N : y^2 + 2 t_z = n}.
inline int64_t square_plus_double_triangular_count(int64_t n) {
    if (n < 0) return 0;
    int64_t count = 0;
    for (int64_t y = 0; y * y <= n; ++y) {
        const int64_t rest = n - y * y;
        if (rest % 2 != 0) continue;
        if (arith::triangular_index(rest / 2)) count += y == 0 ? 1 : 2;
    }
    return count;
}

struct TwoSquareTriangularSplit {
    int64_t mixed = 0;  // x and y of opposite parity
    int64_t equal = 0;  // x and y of equal parity
};

// #{(x,y,z) in Z x Z x N : x^2 + y^2 + t_z = n}, split by whether the two
// square indices agree mod 2.
inline TwoSquareTriangularSplit two_square_triangular_split(int64_t n) {
    TwoSquareTriangularSplit out;
    if (n < 0) return out;
    for (int64_t x = 0; x * x <= n; ++x) {
        const int64_t wx = x == 0 ? 1 : 2;
        for (int64_t y = 0; x * x + y * y <= n; ++y) {
            if (!arith::triangular_index(n - x * x - y * y)) continue;
            const int64_t w = wx * (y == 0 ? 1 : 2);
            ((x + y) % 2 != 0 ? out.mixed : out.equal) += w;
        }
    }
    return out;
}

}  // namespace mixedrep::counts
