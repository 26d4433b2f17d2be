#pragma once

// Mixed ternary forms: three terms, each a positive coefficient times
// either the square of an integer or a triangular number. Counting follows
// the slot-domain convention throughout: a square slot's index runs over
// all of Z (signs counted), a triangular slot's index over N only, the
// canonical side of the t_{-y-1} = t_y symmetry.

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mixedrep/arith.hpp"
#include "mixedrep/parallel.hpp"

namespace mixedrep::forms {

enum class TermKind { square, triangular };

struct Term {
    int64_t coefficient = 1;
    TermKind kind = TermKind::square;

    friend bool operator==(const Term&, const Term&) = default;
};

class MixedForm {
public:
    MixedForm(Term a, Term b, Term c) : terms_{a, b, c} {
        for (const Term& t : terms_) {
            if (t.coefficient < 1) {
                throw std::invalid_argument("form coefficients must be >= 1");
            }
        }
    }

    const std::array<Term, 3>& terms() const { return terms_; }
    const Term& term(int slot) const { return terms_.at(static_cast<size_t>(slot)); }

    std::array<int64_t, 3> coefficients() const {
        return {terms_[0].coefficient, terms_[1].coefficient, terms_[2].coefficient};
    }

    friend bool operator==(const MixedForm&, const MixedForm&) = default;

private:
    std::array<Term, 3> terms_;
};

inline MixedForm make_form(const std::array<TermKind, 3>& pattern,
                           const std::array<int64_t, 3>& coefficients) {
    return MixedForm{Term{coefficients[0], pattern[0]},
                     Term{coefficients[1], pattern[1]},
                     Term{coefficients[2], pattern[2]}};
}

struct RepTriple {
    std::array<int64_t, 3> index{0, 0, 0};
};

struct ParityCounts {
    int64_t n = 0;
    int64_t total = 0;
    int64_t even = 0;
    int64_t odd = 0;
};

inline int64_t evaluate(const MixedForm& form, const RepTriple& triple) {
    int64_t sum = 0;
    for (int slot = 0; slot < 3; ++slot) {
        const Term& t = form.term(slot);
        const int64_t idx = triple.index[static_cast<size_t>(slot)];
        int64_t base;
        if (t.kind == TermKind::square) {
            base = arith::checked_mul(idx, idx);
        } else {
            if (idx < 0) {
                throw std::invalid_argument("triangular slot index must be a natural number");
            }
            base = arith::triangular(idx);
        }
        sum = arith::checked_add(sum, arith::checked_mul(t.coefficient, base));
    }
    return sum;
}

namespace detail {

// Value of term t at nonnegative index i; strictly increasing in i.
inline int64_t term_value(const Term& t, int64_t i) {
    const int64_t base =
        t.kind == TermKind::square ? arith::checked_mul(i, i) : arith::triangular(i);
    return arith::checked_mul(t.coefficient, base);
}

// How many signed indices share the value at nonnegative index i.
inline int64_t term_multiplicity(const Term& t, int64_t i) {
    return (t.kind == TermKind::square && i > 0) ? 2 : 1;
}

// Solves coefficient * (index^2 or t_index) = residual for the canonical
// index; returns (count of slot-domain solutions, canonical index).
inline std::pair<int64_t, int64_t> complete_term(const Term& t, int64_t residual) {
    if (residual % t.coefficient != 0) return {0, 0};
    const int64_t base = residual / t.coefficient;
    if (t.kind == TermKind::square) {
        if (auto w = arith::square_root_exact(base)) return {*w > 0 ? 2 : 1, *w};
        return {0, 0};
    }
    if (auto m = arith::triangular_index(base)) return {1, *m};
    return {0, 0};
}

struct SplitCount {
    int64_t total = 0;
    int64_t even = 0;
    int64_t odd = 0;
};

// Exhaustive count over the finite index box; slots 0 and 1 are iterated,
// slot 2 is inverted. parity_slot < 0 disables the even/odd split.
inline SplitCount count_core(const MixedForm& form, int parity_slot, int64_t n) {
    SplitCount out;
    if (n < 0) return out;
    const Term& s0 = form.term(0);
    const Term& s1 = form.term(1);
    const Term& s2 = form.term(2);
    for (int64_t i0 = 0;; ++i0) {
        const int64_t v0 = term_value(s0, i0);
        if (v0 > n) break;
        const int64_t m0 = term_multiplicity(s0, i0);
        for (int64_t i1 = 0;; ++i1) {
            const int64_t v1 = term_value(s1, i1);
            if (v0 + v1 > n) break;
            const auto [m2, i2] = complete_term(s2, n - v0 - v1);
            if (m2 == 0) continue;
            const int64_t count = m0 * term_multiplicity(s1, i1) * m2;
            out.total = arith::checked_add(out.total, count);
            if (parity_slot >= 0) {
                const int64_t idx = parity_slot == 0 ? i0 : parity_slot == 1 ? i1 : i2;
                (idx % 2 == 0 ? out.even : out.odd) += count;
            }
        }
    }
    return out;
}

}  // namespace detail

inline bool is_representable(const MixedForm& form, int64_t n) {
    if (n < 0) return false;
    const Term& s0 = form.term(0);
    const Term& s1 = form.term(1);
    const Term& s2 = form.term(2);
    for (int64_t i0 = 0;; ++i0) {
        const int64_t v0 = detail::term_value(s0, i0);
        if (v0 > n) break;
        for (int64_t i1 = 0;; ++i1) {
            const int64_t v1 = detail::term_value(s1, i1);
            if (v0 + v1 > n) break;
            if (detail::complete_term(s2, n - v0 - v1).first != 0) return true;
        }
    }
    return false;
}

inline int64_t count_representations(const MixedForm& form, int64_t n) {
    return detail::count_core(form, -1, n).total;
}

// Splits count_representations by the parity of the designated square
// slot's index.
inline ParityCounts parity_split_count(const MixedForm& form, int slot, int64_t n) {
    if (slot < 0 || slot > 2) throw std::invalid_argument("slot must be 0, 1 or 2");
    if (form.term(slot).kind != TermKind::square) {
        throw std::invalid_argument("parity split requires a square slot");
    }
    const auto split = detail::count_core(form, slot, n);
    return ParityCounts{n, split.total, split.even, split.odd};
}

// Sieve of representable values up to bound, slot domains as above.
inline std::vector<bool> representability_table(const MixedForm& form, int64_t bound) {
    if (bound < 0) throw std::invalid_argument("bound must be >= 0");
    std::vector<bool> table(static_cast<size_t>(bound) + 1, false);
    const Term& s0 = form.term(0);
    const Term& s1 = form.term(1);
    const Term& s2 = form.term(2);
    for (int64_t i0 = 0;; ++i0) {
        const int64_t v0 = detail::term_value(s0, i0);
        if (v0 > bound) break;
        for (int64_t i1 = 0;; ++i1) {
            const int64_t v01 = v0 + detail::term_value(s1, i1);
            if (v01 > bound) break;
            for (int64_t i2 = 0;; ++i2) {
                const int64_t v = v01 + detail::term_value(s2, i2);
                if (v > bound) break;
                table[static_cast<size_t>(v)] = true;
            }
        }
    }
    return table;
}

// All non-representable n <= bound, ascending. Exhaustive, not heuristic:
// a listed n is a proof of non-representability.
inline std::vector<int64_t> exceptions(const MixedForm& form, int64_t bound) {
    const auto table = representability_table(form, bound);
    std::vector<int64_t> out;
    for (int64_t n = 0; n <= bound; ++n) {
        if (!table[static_cast<size_t>(n)]) out.push_back(n);
    }
    return out;
}

// Least n <= bound on which representability of f and g differs; absent if
// the two value sets agree on [0, bound].
inline std::optional<int64_t> value_sets_equal_up_to(const MixedForm& f, const MixedForm& g,
                                                     int64_t bound) {
    const auto tf = representability_table(f, bound);
    const auto tg = representability_table(g, bound);
    for (int64_t n = 0; n <= bound; ++n) {
        if (tf[static_cast<size_t>(n)] != tg[static_cast<size_t>(n)]) return n;
    }
    return std::nullopt;
}

enum class Ordering { none, first_le_second, second_ge_third, ascending };

inline bool satisfies(Ordering o, const std::array<int64_t, 3>& c) {
    switch (o) {
        case Ordering::none: return true;
        case Ordering::first_le_second: return c[0] <= c[1];
        case Ordering::second_ge_third: return c[1] >= c[2];
        case Ordering::ascending: return c[0] <= c[1] && c[1] <= c[2];
    }
    return false;
}

struct EliminationConfig {
    std::array<TermKind, 3> pattern{TermKind::square, TermKind::square, TermKind::triangular};
    std::array<int64_t, 3> box{1, 1, 1};  // inclusive upper bound per slot
    Ordering ordering = Ordering::none;
    int64_t rep_bound = 2000;
};

struct Elimination {
    // Coefficient vectors with no non-representable n <= rep_bound. These
    // are candidates passing a bounded check, not proven-universal forms.
    std::vector<std::array<int64_t, 3>> survivors;
    // Every other vector in the box, with its least witness.
    std::vector<std::pair<std::array<int64_t, 3>, int64_t>> eliminated;
};

// Finite elimination over a coefficient box: a candidate is dropped as
// soon as some n <= rep_bound is exhaustively shown non-representable,
// and that least n is recorded as its witness.
inline Elimination eliminate(
    const EliminationConfig& config,
    const std::function<bool(const MixedForm&, int64_t)>& rep_override = {}) {
    for (int64_t b : config.box) {
        if (b < 1) throw std::invalid_argument("elimination box is empty");
    }
    if (config.rep_bound < 1) {
        throw std::invalid_argument("elimination bound must be >= 1");
    }

    std::vector<std::array<int64_t, 3>> candidates;
    for (int64_t a = 1; a <= config.box[0]; ++a) {
        for (int64_t b = 1; b <= config.box[1]; ++b) {
            for (int64_t c = 1; c <= config.box[2]; ++c) {
                const std::array<int64_t, 3> v{a, b, c};
                if (satisfies(config.ordering, v)) candidates.push_back(v);
            }
        }
    }

    // witness per candidate, -1 = survivor; slots are disjoint, so the
    // candidate list can be scanned in parallel and merged in order.
    std::vector<int64_t> witness(candidates.size(), -1);
    parallel::for_blocks(0, static_cast<int64_t>(candidates.size()), [&](int64_t lo, int64_t hi) {
        for (int64_t i = lo; i < hi; ++i) {
            const MixedForm form = make_form(config.pattern, candidates[static_cast<size_t>(i)]);
            if (rep_override) {
                for (int64_t n = 0; n <= config.rep_bound; ++n) {
                    if (!rep_override(form, n)) {
                        witness[static_cast<size_t>(i)] = n;
                        break;
                    }
                }
            } else {
                const auto table = representability_table(form, config.rep_bound);
                for (int64_t n = 0; n <= config.rep_bound; ++n) {
                    if (!table[static_cast<size_t>(n)]) {
                        witness[static_cast<size_t>(i)] = n;
                        break;
                    }
                }
            }
        }
    });

    Elimination out;
    for (size_t i = 0; i < candidates.size(); ++i) {
        if (witness[i] < 0) {
            out.survivors.push_back(candidates[i]);
        } else {
            out.eliminated.emplace_back(candidates[i], witness[i]);
        }
    }
    return out;
}

}  // namespace mixedrep::forms
