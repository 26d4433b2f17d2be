#pragma once

// Named, parameterized checks binding the arithmetic, series, counting and
// form-search modules to specific classical statements, each producing a
// structured VerificationReport.
//
// Status taxonomy: `pass` is reserved for claims that are finite in full,
// `boundedPass` marks an unbounded claim verified exhaustively up to a
// stated bound, and `fail` carries witnesses. Non-representability results
// are absolute (finite search); universality results are always bounded.
//
// Every check accepts an optional override for its core counter so a test
// harness can verify that a corrupted counter flips the check to fail.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "mixedrep/arith.hpp"
#include "mixedrep/counts.hpp"
#include "mixedrep/form_text.hpp"
#include "mixedrep/forms.hpp"
#include "mixedrep/series.hpp"

namespace mixedrep::verify {

enum class Status { pass, fail, bounded_pass };

inline std::string to_string(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::bounded_pass: return "boundedPass";
    }
    return "fail";
}

using Witness = std::variant<int64_t, std::vector<int64_t>>;

struct VerificationReport {
    std::string check;
    std::vector<std::pair<std::string, std::string>> params;
    Status status = Status::bounded_pass;
    std::vector<Witness> witnesses;
    std::chrono::milliseconds elapsed{0};
    std::string bound_note;

    void param(const std::string& key, int64_t value) {
        params.emplace_back(key, std::to_string(value));
    }
    void param(const std::string& key, std::string value) {
        params.emplace_back(key, std::move(value));
    }
};

namespace detail {

class Stopwatch {
public:
    std::chrono::milliseconds elapsed() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
            std::chrono::steady_clock::now() - start_);
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// Reports keep at most this many witnesses; a fail never loses its first
// (least) witness.
constexpr size_t max_witnesses = 50;

inline void seal(VerificationReport& report, const Stopwatch& sw) {
    if (report.witnesses.size() > max_witnesses) {
        report.witnesses.resize(max_witnesses);
        report.bound_note += " [witness list truncated to first 50]";
    }
    report.status = report.witnesses.empty() ? Status::bounded_pass : Status::fail;
    report.elapsed = sw.elapsed();
}

inline forms::MixedForm sst(int64_t a, int64_t b, int64_t c) {
    return forms::make_form({forms::TermKind::square, forms::TermKind::square,
                             forms::TermKind::triangular},
                            {a, b, c});
}

inline forms::MixedForm stt(int64_t a, int64_t b, int64_t c) {
    return forms::make_form({forms::TermKind::square, forms::TermKind::triangular,
                             forms::TermKind::triangular},
                            {a, b, c});
}

inline forms::MixedForm ttt(int64_t a, int64_t b, int64_t c) {
    return forms::make_form({forms::TermKind::triangular, forms::TermKind::triangular,
                             forms::TermKind::triangular},
                            {a, b, c});
}

inline std::string vec_text(const std::array<int64_t, 3>& v) {
    std::ostringstream os;
    os << "(" << v[0] << "," << v[1] << "," << v[2] << ")";
    return os.str();
}

// Representable n <= bound by (2a+1)^2 + (2b)^2 + t_z.
inline std::vector<bool> odd_even_square_triangular_table(int64_t bound) {
    std::vector<bool> table(static_cast<size_t>(bound) + 1, false);
    for (int64_t a = 0; (2 * a + 1) * (2 * a + 1) <= bound; ++a) {
        const int64_t odd_sq = (2 * a + 1) * (2 * a + 1);
        for (int64_t b = 0; odd_sq + 4 * b * b <= bound; ++b) {
            const int64_t base = odd_sq + 4 * b * b;
            for (int64_t z = 0;; ++z) {
                const int64_t v = base + arith::triangular(z);
                if (v > bound) break;
                table[static_cast<size_t>(v)] = true;
            }
        }
    }
    return table;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Known classification lists: the complete candidate coefficient vectors
// for universal mixed forms of each shape, and the non-representability
// witnesses that eliminate everything else.
// ---------------------------------------------------------------------------

// a x^2 + b y^2 + c t_z with a <= b: the 10 vectors a universal form can have.
inline const std::vector<std::array<int64_t, 3>>& universal_sst_candidates() {
    static const std::vector<std::array<int64_t, 3>> v{
        {1, 1, 1}, {1, 1, 2}, {1, 2, 1}, {1, 2, 2}, {1, 2, 4},
        {1, 3, 1}, {1, 4, 1}, {1, 4, 2}, {1, 8, 1}, {2, 2, 1}};
    return v;
}

// a x^2 + b t_y + c t_z with b >= c: the 15 vectors a universal form can have.
inline const std::vector<std::array<int64_t, 3>>& universal_stt_candidates() {
    static const std::vector<std::array<int64_t, 3>> v{
        {1, 1, 1}, {1, 2, 1}, {1, 2, 2}, {1, 3, 1}, {1, 4, 1},
        {1, 4, 2}, {1, 5, 2}, {1, 6, 1}, {1, 8, 1}, {2, 1, 1},
        {2, 2, 1}, {2, 4, 1}, {3, 2, 1}, {4, 1, 1}, {4, 2, 1}};
    return v;
}

// a t_x + b t_y + c t_z with a <= b <= c: Liouville's 7 universal vectors.
inline const std::vector<std::array<int64_t, 3>>& universal_ttt_candidates() {
    static const std::vector<std::array<int64_t, 3>> v{
        {1, 1, 1}, {1, 1, 2}, {1, 1, 4}, {1, 1, 5}, {1, 2, 2}, {1, 2, 3}, {1, 2, 4}};
    return v;
}

struct NonRepresentabilityClaim {
    forms::MixedForm form;
    int64_t value;
};

// The registry of witnesses used by the finite elimination arguments; each
// value is non-representable by its form, provable by exhaustive search.
inline const std::vector<NonRepresentabilityClaim>& nonrepresentability_registry() {
    using detail::sst;
    using detail::stt;
    static const std::vector<NonRepresentabilityClaim> reg{
        {sst(1, 5, 1), 13}, {sst(1, 6, 1), 47}, {sst(1, 7, 1), 20}, {sst(1, 3, 2), 8},
        {sst(1, 5, 2), 19}, {sst(1, 1, 3), 6},  {sst(1, 2, 3), 23}, {sst(1, 2, 5), 10},
        {sst(2, 3, 1), 7},  {sst(2, 4, 1), 20}, {stt(1, 3, 2), 8},  {stt(1, 5, 1), 13},
        {stt(1, 7, 1), 20}, {stt(2, 3, 1), 7},  {stt(3, 1, 1), 8},  {stt(5, 1, 1), 19}};
    return reg;
}

// ---------------------------------------------------------------------------
// Series identities
// ---------------------------------------------------------------------------

// The six exact coefficientwise identities, checked to the given order:
//   gauss-phi          phi(-q) = prod (1-q^{2n-1})^2 (1-q^{2n})
//   gauss-psi          psi(q) prod (1-q^{2n-1}) = prod (1-q^{2n})
//   jacobi-cube        prod (1-q^n)^3 = sum (-1)^m (2m+1) q^{t_m}
//   parity-difference  phi(-q) psi(q)^2 = prod (1-q^{2n})^3
//                                       = sum (-1)^m (2m+1) q^{2 t_m}
//   psi-square         psi(q)^2 = phi(q) psi(q^2)
//   doubling           phi(q) psi(q)^2 + phi(-q) psi(-q)^2 = 2 phi(q^2)^2 psi(q^2)
inline const std::vector<std::string>& identity_names() {
    static const std::vector<std::string> names{
        "gauss-phi", "gauss-psi", "jacobi-cube", "parity-difference", "psi-square", "doubling"};
    return names;
}

inline std::optional<int64_t> run_series_identity(
    const std::string& name, int64_t order,
    const std::function<series::TruncatedSeries(int64_t)>& psi_override = {}) {
    using namespace series;
    auto make_psi = [&](int64_t n) { return psi_override ? psi_override(n) : psi(n); };
    const TruncatedSeries phi_s = phi(order);
    const TruncatedSeries psi_s = make_psi(order);
    const TruncatedSeries phi_neg = negate_q(phi_s);

    if (name == "gauss-phi") {
        const auto product = restricted_euler_product({{2, 1, 2}, {2, 0, 1}}, order);
        return first_mismatch(phi_neg, product);
    }
    if (name == "gauss-psi") {
        // psi(q) = prod (1-q^{2n}) / (1-q^{2n-1}), verified division-free in
        // two arrangements. The direct cross-multiplication
        //   psi(q) prod (1-q^{2n-1}) = prod (1-q^{2n})
        // is checked as written, but only to order 1000: the odd product's
        // own coefficients grow like e^{c sqrt(n)} and overflow 64 bits
        // between orders 1100 and 1200. Clearing the denominator with
        // prod (1-q^{2n}) once more and merging the residue classes gives
        // the equivalent
        //   psi(q) prod (1-q^n) = (prod (1-q^{2n}))^2,
        // whose terms all stay tiny; that form carries the check to the
        // full order.
        const int64_t direct_order = std::min<int64_t>(order, 1000);
        const auto odd_part = restricted_euler_product({{2, 1, 1}}, direct_order);
        const auto even_direct = restricted_euler_product({{2, 0, 1}}, direct_order);
        if (auto m = first_mismatch(multiply(make_psi(direct_order), odd_part), even_direct)) {
            return m;
        }
        const auto all_part = restricted_euler_product({{1, 0, 1}}, order);
        const auto even_part = restricted_euler_product({{2, 0, 1}}, order);
        return first_mismatch(multiply(psi_s, all_part), multiply(even_part, even_part));
    }
    if (name == "jacobi-cube") {
        const auto cube = restricted_euler_product({{1, 0, 3}}, order);
        return first_mismatch(cube, signed_odd_theta(order, 1));
    }
    if (name == "parity-difference") {
        const auto lhs = multiply(phi_neg, multiply(psi_s, psi_s));
        const auto middle = restricted_euler_product({{2, 0, 3}}, order);
        if (auto m = first_mismatch(lhs, middle)) return m;
        return first_mismatch(middle, signed_odd_theta(order, 2));
    }
    if (name == "psi-square") {
        const auto lhs = multiply(psi_s, psi_s);
        const auto rhs = multiply(phi_s, substitute_power(psi_s, 2));
        return first_mismatch(lhs, rhs);
    }
    if (name == "doubling") {
        const auto psi_neg = negate_q(psi_s);
        const auto lhs = add(multiply(phi_s, multiply(psi_s, psi_s)),
                             multiply(phi_neg, multiply(psi_neg, psi_neg)));
        const auto phi_q2 = substitute_power(phi_s, 2);
        const auto rhs = scale(multiply(multiply(phi_q2, phi_q2), substitute_power(psi_s, 2)), 2);
        return first_mismatch(lhs, rhs);
    }
    throw std::invalid_argument("unknown series identity: " + name);
}

inline VerificationReport check_identities(
    int64_t order = 20000,
    const std::function<series::TruncatedSeries(int64_t)>& psi_override = {}) {
    if (order < 1) throw std::invalid_argument("identity order must be >= 1");
    detail::Stopwatch sw;
    VerificationReport report;
    report.check = "identities";
    report.param("order", order);
    std::string failing;
    for (const auto& name : identity_names()) {
        if (auto mismatch = run_series_identity(name, order, psi_override)) {
            report.witnesses.emplace_back(*mismatch);
            failing += (failing.empty() ? "" : ", ") + name +
                       " first mismatch at q^" + std::to_string(*mismatch);
        }
    }
    report.bound_note = failing.empty()
        ? "all 6 identities hold coefficientwise for every order <= " + std::to_string(order)
        : "failed: " + failing;
    detail::seal(report, sw);
    return report;
}

// ---------------------------------------------------------------------------
// Hurwitz closed form vs. direct sphere count
// ---------------------------------------------------------------------------

inline VerificationReport check_hurwitz(
    int64_t odd_bound = 99, const std::function<int64_t(int64_t)>& closed_form_override = {}) {
    detail::Stopwatch sw;
    VerificationReport report;
    report.check = "hurwitz";
    report.param("odd_bound", odd_bound);
    for (int64_t n = 1; n <= odd_bound; n += 2) {
        const int64_t closed = closed_form_override ? closed_form_override(n)
                                                    : counts::hurwitz_count(n);
        if (closed != counts::r3_bruteforce(n * n)) report.witnesses.emplace_back(n);
    }
    report.bound_note = "closed form matches the exhaustive sphere count for every odd n <= " +
                        std::to_string(odd_bound);
    detail::seal(report, sw);
    return report;
}

// ---------------------------------------------------------------------------
// Even square plus two triangular numbers, with parity balance
// ---------------------------------------------------------------------------

inline VerificationReport check_theorem1i(
    int64_t bound = 10000,
    const std::function<bool(int64_t)>& rep_override = {},
    const std::function<forms::ParityCounts(int64_t)>& parity_override = {}) {
    if (bound < 0) throw std::invalid_argument("bound must be >= 0");
    detail::Stopwatch sw;
    VerificationReport report;
    report.check = "theorem1i";
    report.param("bound", bound);

    std::vector<bool> rep_table;
    if (!rep_override) rep_table = forms::representability_table(detail::stt(4, 1, 1), bound);
    std::vector<forms::ParityCounts> parity_table;
    if (!parity_override) parity_table = counts::parity_table(bound);

    for (int64_t n = 0; n <= bound; ++n) {
        const bool representable =
            rep_override ? rep_override(n) : static_cast<bool>(rep_table[static_cast<size_t>(n)]);
        bool ok = representable;
        if (ok) {
            // Parity balance applies unless n is twice a triangular number.
            const bool exempt = n % 2 == 0 && arith::triangular_index(n / 2).has_value();
            if (!exempt) {
                const forms::ParityCounts pc =
                    parity_override ? parity_override(n) : parity_table[static_cast<size_t>(n)];
                ok = pc.even == pc.odd;
            }
        }
        if (!ok) report.witnesses.emplace_back(n);
    }
    report.bound_note =
        "every n <= " + std::to_string(bound) +
        " is an even square plus two triangular numbers, and the even/odd square-index counts "
        "balance whenever n is not twice a triangular number";
    detail::seal(report, sw);
    return report;
}

// ---------------------------------------------------------------------------
// Two squares of opposite parity plus a triangular number
// ---------------------------------------------------------------------------

inline VerificationReport check_theorem1ii(
    int64_t bound = 5000,
    const std::function<forms::ParityCounts(int64_t)>& parity_override = {}) {
    if (bound < 0) throw std::invalid_argument("bound must be >= 0");
    detail::Stopwatch sw;
    VerificationReport report;
    report.check = "theorem1ii";
    report.param("bound", bound);
    const int64_t direct_bound = std::min<int64_t>(bound, 1000);
    report.param("direct_route_bound", direct_bound);

    std::vector<forms::ParityCounts> table;
    if (!parity_override) table = counts::parity_table(2 * bound);
    auto parity_at = [&](int64_t m) {
        return parity_override ? parity_override(m) : table[static_cast<size_t>(m)];
    };

    for (int64_t n = 0; n <= bound; ++n) {
        const forms::ParityCounts doubled = parity_at(2 * n);
        bool ok = true;
        if (n <= direct_bound) {
            // Independent route: direct enumeration of x^2+y^2+t_z = n must
            // agree with the doubled parity counts at every n.
            const auto split = counts::two_square_triangular_split(n);
            ok = split.mixed == doubled.odd && split.equal == doubled.even;
        }
        if (ok && !arith::triangular_index(n).has_value()) {
            ok = doubled.even == doubled.odd && doubled.even > 0;
        }
        if (!ok) report.witnesses.emplace_back(n);
    }
    report.bound_note =
        "for every non-triangular n <= " + std::to_string(bound) +
        ", the opposite-parity and equal-parity counts of x^2+y^2+t_z = n agree and are positive; "
        "direct enumeration agrees with the doubled-index route for n <= " +
        std::to_string(direct_bound);
    detail::seal(report, sw);
    return report;
}

// ---------------------------------------------------------------------------
// Odd square plus even square plus a triangular number
// ---------------------------------------------------------------------------

inline VerificationReport check_theorem1iii(
    int64_t m_bound = 140, const std::function<bool(int64_t)>& rep_override = {}) {
    if (m_bound < 1) throw std::invalid_argument("m_bound must be >= 1");
    detail::Stopwatch sw;
    VerificationReport report;
    report.check = "theorem1iii";
    report.param("m_bound", m_bound);
    const int64_t bound = arith::triangular(m_bound);
    report.param("scan_bound", bound);

    std::vector<bool> table;
    if (!rep_override) table = detail::odd_even_square_triangular_table(bound);
    auto representable = [&](int64_t n) {
        return rep_override ? rep_override(n) : static_cast<bool>(table[static_cast<size_t>(n)]);
    };

    int64_t exceptional = 0;
    int64_t converse_representable = 0;  // qualifying t_m that are representable anyway
    for (int64_t n = 1; n <= bound; ++n) {
        const auto m = arith::triangular_index(n);
        bool qualifying = false;
        if (m && *m > 0) {
            qualifying = true;
            for (const auto& [p, e] : arith::factorize(2 * *m + 1).factors) {
                if (p % 4 != 1) qualifying = false;
            }
        }
        if (representable(n)) {
            if (qualifying) ++converse_representable;
            continue;
        }
        // Non-representable n must be a qualifying triangular number t_m with
        // m even, and must decompose as 2x^2 + t_z with x = m/2 (mod 2).
        bool ok = qualifying && *m % 2 == 0;
        if (ok) {
            bool found = false;
            for (int64_t x = 1; 2 * x * x <= n; ++x) {
                if (x % 2 != (*m / 2) % 2) continue;
                if (arith::triangular_index(n - 2 * x * x)) {
                    found = true;
                    break;
                }
            }
            ok = found;
        }
        if (!ok) {
            report.witnesses.emplace_back(n);
        } else {
            ++exceptional;
        }
    }
    report.bound_note =
        "every n <= " + std::to_string(bound) +
        " not of the form odd^2 + even^2 + triangular is a triangular t_m whose 2m+1 has only "
        "prime factors = 1 (mod 4), with the 2x^2 + t_z decomposition and index-parity condition "
        "(" + std::to_string(exceptional) + " such n found); informational converse: " +
        std::to_string(converse_representable) +
        " qualifying t_m are nevertheless representable (sufficiency is not asserted)";
    detail::seal(report, sw);
    return report;
}

// ---------------------------------------------------------------------------
// Classifications by finite elimination, plus the witness registry
// ---------------------------------------------------------------------------

inline VerificationReport check_classifications(
    int64_t rep_bound = 2000,
    const std::function<bool(const forms::MixedForm&, int64_t)>& rep_override = {}) {
    detail::Stopwatch sw;
    VerificationReport report;
    report.check = "classifications";
    report.param("rep_bound", rep_bound);
    report.param("sst_box", "a,b<=16 (a<=b), c<=16");
    report.param("stt_box", "a<=16, b,c<=16 (b>=c)");
    report.param("ttt_box", "a<=b<=c<=12");

    using forms::Ordering;
    using forms::TermKind;
    struct Job {
        forms::EliminationConfig config;
        const std::vector<std::array<int64_t, 3>>* expected;
        std::string label;
    };
    const std::vector<Job> jobs{
        {{{TermKind::square, TermKind::square, TermKind::triangular},
          {16, 16, 16},
          Ordering::first_le_second,
          rep_bound},
         &universal_sst_candidates(),
         "ax^2+by^2+ct_z"},
        {{{TermKind::square, TermKind::triangular, TermKind::triangular},
          {16, 16, 16},
          Ordering::second_ge_third,
          rep_bound},
         &universal_stt_candidates(),
         "ax^2+bt_y+ct_z"},
        {{{TermKind::triangular, TermKind::triangular, TermKind::triangular},
          {12, 12, 12},
          Ordering::ascending,
          rep_bound},
         &universal_ttt_candidates(),
         "at_x+bt_y+ct_z"},
    };

    std::string mismatches;
    for (const auto& job : jobs) {
        const auto result = forms::eliminate(job.config, rep_override);
        if (result.survivors != *job.expected) {
            for (const auto& v : result.survivors) {
                const bool expected =
                    std::find(job.expected->begin(), job.expected->end(), v) != job.expected->end();
                if (!expected) {
                    report.witnesses.emplace_back(std::vector<int64_t>{v[0], v[1], v[2]});
                    mismatches += " unexpected survivor " + detail::vec_text(v) + " for " + job.label + ";";
                }
            }
            for (const auto& v : *job.expected) {
                const bool survived =
                    std::find(result.survivors.begin(), result.survivors.end(), v) !=
                    result.survivors.end();
                if (!survived) {
                    report.witnesses.emplace_back(std::vector<int64_t>{v[0], v[1], v[2]});
                    mismatches += " missing survivor " + detail::vec_text(v) + " for " + job.label + ";";
                }
            }
        }
    }

    // Each registry value is claimed non-representable; exhaustive search
    // over the finite index box decides it absolutely.
    for (const auto& claim : nonrepresentability_registry()) {
        const bool rep = rep_override ? rep_override(claim.form, claim.value)
                                      : forms::is_representable(claim.form, claim.value);
        if (rep) {
            report.witnesses.emplace_back(claim.value);
            mismatches += " registry value " + std::to_string(claim.value) + " for " +
                          form_text::to_algebraic(claim.form) + " is representable;";
        }
    }

    report.bound_note = mismatches.empty()
        ? "survivor sets match the known 10/15/7 vectors; all 16 registry witnesses confirmed "
          "non-representable by exhaustive search; survivors are bounded-check candidates "
          "(no non-representable n <= " + std::to_string(rep_bound) + "), not proven universal"
        : "mismatches:" + mismatches;
    detail::seal(report, sw);
    return report;
}

// ---------------------------------------------------------------------------
// Essential forms and value-set equivalences
// ---------------------------------------------------------------------------

struct EssentialForm {
    forms::MixedForm form;
    std::string source;
};

inline std::vector<EssentialForm> essential_form_list() {
    using detail::sst;
    using detail::stt;
    std::vector<EssentialForm> out;
    // ax^2+by^2+ct_z vectors with a known universality argument (all of the
    // sst candidates except x^2+3y^2+t_z, which is handled as a conjecture).
    for (const auto& v : universal_sst_candidates()) {
        if (v == std::array<int64_t, 3>{1, 3, 1}) continue;
        out.push_back({sst(v[0], v[1], v[2]), "sst"});
    }
    // ax^2+bt_y+ct_z vectors except x^2+8t_y+t_z, which is handled as a
    // conjecture.
    for (const auto& v : universal_stt_candidates()) {
        if (v == std::array<int64_t, 3>{1, 8, 1}) continue;
        out.push_back({stt(v[0], v[1], v[2]), "stt"});
    }
    // Goldbach's four essential forms.
    out.push_back({sst(1, 1, 2), "goldbach"});
    out.push_back({sst(1, 2, 1), "goldbach"});
    out.push_back({sst(1, 2, 2), "goldbach"});
    out.push_back({stt(2, 2, 1), "goldbach"});
    return out;
}

struct EquivalencePair {
    forms::MixedForm left;
    forms::MixedForm right;
};

// The displayed value-set equivalences used to reduce one form to another.
inline std::vector<EquivalencePair> equivalence_list() {
    using detail::sst;
    using detail::stt;
    using detail::ttt;
    return {
        {sst(4, 1, 2), stt(4, 1, 1)},  // 4x^2+y^2+2t_z ~ 4x^2+t_y+t_z
        {sst(1, 2, 4), stt(1, 2, 2)},  // x^2+2y^2+4t_z ~ x^2+2t_y+2t_z
        {stt(1, 2, 2), ttt(1, 1, 2)},  // x^2+2t_y+2t_z ~ t_x+t_y+2t_z
        {sst(1, 2, 4), ttt(1, 1, 2)},  // the composition of the two above
        {sst(2, 1, 2), stt(2, 1, 1)},  // 2x^2+y^2+2t_z ~ 2x^2+t_y+t_z
        {stt(1, 2, 1), ttt(1, 1, 1)},  // x^2+2t_y+t_z ~ t_x+t_y+t_z
        {stt(1, 4, 2), ttt(1, 4, 1)},  // x^2+4t_y+2t_z ~ t_x+4t_y+t_z
        {stt(1, 5, 2), ttt(1, 5, 1)},  // x^2+5t_y+2t_z ~ t_x+5t_y+t_z
        {stt(2, 4, 1), ttt(2, 2, 1)},  // 2x^2+4t_y+t_z ~ 2t_x+2t_y+t_z
    };
}

namespace detail {

// Representable n <= bound by u^2 + v^2 + t_z with u = v (mod 2).
inline std::vector<bool> equal_parity_two_square_triangular_table(int64_t bound) {
    std::vector<bool> table(static_cast<size_t>(bound) + 1, false);
    for (int64_t u = 0; u * u <= bound; ++u) {
        for (int64_t v = u % 2; u * u + v * v <= bound; v += 2) {
            const int64_t base = u * u + v * v;
            for (int64_t z = 0;; ++z) {
                const int64_t n = base + arith::triangular(z);
                if (n > bound) break;
                table[static_cast<size_t>(n)] = true;
            }
        }
    }
    return table;
}

}  // namespace detail

inline VerificationReport check_essential_forms(
    int64_t bound = 10000,
    const std::function<bool(const forms::MixedForm&, int64_t)>& rep_override = {}) {
    if (bound < 0) throw std::invalid_argument("bound must be >= 0");
    detail::Stopwatch sw;
    VerificationReport report;
    report.check = "essential_forms";
    report.param("bound", bound);

    auto first_exception = [&](const forms::MixedForm& form) -> std::optional<int64_t> {
        if (rep_override) {
            for (int64_t n = 0; n <= bound; ++n) {
                if (!rep_override(form, n)) return n;
            }
            return std::nullopt;
        }
        const auto table = forms::representability_table(form, bound);
        for (int64_t n = 0; n <= bound; ++n) {
            if (!table[static_cast<size_t>(n)]) return n;
        }
        return std::nullopt;
    };

    std::string failures;
    int64_t forms_checked = 0;
    for (const auto& entry : essential_form_list()) {
        ++forms_checked;
        if (auto n = first_exception(entry.form)) {
            report.witnesses.emplace_back(*n);
            failures += " " + form_text::to_algebraic(entry.form) + " misses " +
                        std::to_string(*n) + ";";
        }
    }

    auto mismatch_of = [&](const forms::MixedForm& f, const forms::MixedForm& g)
        -> std::optional<int64_t> {
        if (rep_override) {
            for (int64_t n = 0; n <= bound; ++n) {
                if (rep_override(f, n) != rep_override(g, n)) return n;
            }
            return std::nullopt;
        }
        return forms::value_sets_equal_up_to(f, g, bound);
    };

    int64_t pairs_checked = 0;
    for (const auto& pair : equivalence_list()) {
        ++pairs_checked;
        if (auto n = mismatch_of(pair.left, pair.right)) {
            report.witnesses.emplace_back(*n);
            failures += " " + form_text::to_algebraic(pair.left) + " ~ " +
                        form_text::to_algebraic(pair.right) + " differs at " +
                        std::to_string(*n) + ";";
        }
    }

    // 2x^2+2y^2+t_z = (x+y)^2+(x-y)^2+t_z: its value set equals the values
    // of u^2+v^2+t_z over pairs u = v (mod 2).
    {
        ++pairs_checked;
        const auto lhs = forms::representability_table(detail::sst(2, 2, 1), bound);
        const auto rhs = detail::equal_parity_two_square_triangular_table(bound);
        for (int64_t n = 0; n <= bound; ++n) {
            if (lhs[static_cast<size_t>(n)] != rhs[static_cast<size_t>(n)]) {
                report.witnesses.emplace_back(n);
                failures += " 2x^2+2y^2+t_z vs equal-parity u^2+v^2+t_z differs at " +
                            std::to_string(n) + ";";
                break;
            }
        }
    }

    report.bound_note = failures.empty()
        ? std::to_string(forms_checked) + " asserted-essential forms have no exception <= " +
          std::to_string(bound) + "; all " + std::to_string(pairs_checked) +
          " value-set equivalences hold on [0, " + std::to_string(bound) + "]"
        : "failures:" + failures;
    detail::seal(report, sw);
    return report;
}

// ---------------------------------------------------------------------------
// Conjecture scans at their published bounds
// ---------------------------------------------------------------------------

// The published scan bounds are the defaults; extend_to raises any scan
// whose default is lower (the expected exception sets are unchanged, since
// the conjectures assert them for all n).
inline VerificationReport scan_conjectures(
    std::optional<int64_t> extend_to = std::nullopt,
    const std::function<bool(const forms::MixedForm&, int64_t)>& rep_override = {}) {
    detail::Stopwatch sw;
    VerificationReport report;
    report.check = "conjectures";
    const int64_t floor = extend_to.value_or(0);
    report.param("bound_c1", std::max<int64_t>(15000, floor));
    report.param("bound_c2", std::max<int64_t>(10000, floor));
    report.param("bound_c3", std::max<int64_t>(10000, floor));

    using detail::sst;
    using detail::stt;
    struct Scan {
        forms::MixedForm form;
        int64_t bound;
        std::vector<int64_t> expected;
    };
    const std::vector<Scan> scans{
        {stt(1, 8, 1), 15000, {}},
        {sst(1, 3, 1), 10000, {}},
        {stt(1, 3, 1), 10000, {}},
        {stt(1, 6, 1), 10000, {}},
        {stt(3, 2, 1), 10000, {}},
        {stt(4, 2, 1), 10000, {}},
        {sst(1, 2, 3), 10000, {23}},
        {sst(1, 5, 2), 10000, {19}},
        {sst(1, 6, 1), 10000, {47}},
        {sst(2, 4, 1), 10000, {20}},
    };

    std::string failures;
    std::string confirmed;
    for (const auto& scan : scans) {
        const int64_t bound = std::max(scan.bound, floor);
        std::vector<int64_t> found;
        if (rep_override) {
            for (int64_t n = 0; n <= bound; ++n) {
                if (!rep_override(scan.form, n)) found.push_back(n);
            }
        } else {
            found = forms::exceptions(scan.form, bound);
        }
        if (found != scan.expected) {
            failures += " " + form_text::to_algebraic(scan.form) + " expected {";
            for (int64_t e : scan.expected) failures += std::to_string(e) + " ";
            failures += "} got {";
            for (size_t i = 0; i < std::min<size_t>(found.size(), 8); ++i) {
                failures += std::to_string(found[i]) + " ";
            }
            failures += "};";
            for (int64_t n : found) {
                const bool expected =
                    std::find(scan.expected.begin(), scan.expected.end(), n) != scan.expected.end();
                if (!expected) report.witnesses.emplace_back(n);
            }
            for (int64_t e : scan.expected) {
                const bool present = std::find(found.begin(), found.end(), e) != found.end();
                if (!present) report.witnesses.emplace_back(e);
            }
        } else if (!scan.expected.empty()) {
            confirmed += " " + form_text::to_algebraic(scan.form) + " misses exactly {";
            for (int64_t e : scan.expected) confirmed += std::to_string(e);
            confirmed += "};";
        }
    }

    report.bound_note = failures.empty()
        ? "x^2+8t_y+t_z covers [0, " + std::to_string(std::max<int64_t>(15000, floor)) +
          "]; the five conjectured forms cover [0, " +
          std::to_string(std::max<int64_t>(10000, floor)) + "];" + confirmed
        : "failures:" + failures;
    detail::seal(report, sw);
    return report;
}

// ---------------------------------------------------------------------------
// The x^2 + y^2 + 10 z^2 equivalence chain
// ---------------------------------------------------------------------------

// n = x^2+5y^2+2t_z is solvable exactly when 8n+2 = x^2+y^2+10z^2 has a
// solution with x != y (mod 4); both sides by exhaustive search.
inline VerificationReport check_dickson_chain(
    int64_t bound = 5000, const std::function<bool(int64_t)>& lhs_override = {}) {
    if (bound < 0) throw std::invalid_argument("bound must be >= 0");
    detail::Stopwatch sw;
    VerificationReport report;
    report.check = "dickson_chain";
    report.param("bound", bound);

    std::vector<bool> lhs_table;
    if (!lhs_override) lhs_table = forms::representability_table(detail::sst(1, 5, 2), bound);

    for (int64_t n = 0; n <= bound; ++n) {
        const bool lhs = lhs_override ? lhs_override(n)
                                      : static_cast<bool>(lhs_table[static_cast<size_t>(n)]);
        bool rhs = false;
        const int64_t target = 8 * n + 2;
        for (int64_t z = 0; !rhs && 10 * z * z <= target; ++z) {
            const int64_t rest = target - 10 * z * z;
            for (int64_t u = 0; u * u * 2 <= rest; ++u) {
                const auto v = arith::square_root_exact(rest - u * u);
                if (!v) continue;
                // Signed choices of (u, v): some pair differs mod 4 unless
                // both u-v and u+v vanish mod 4.
                if ((u - *v) % 4 != 0 || (u + *v) % 4 != 0) {
                    rhs = true;
                    break;
                }
            }
        }
        if (lhs != rhs) report.witnesses.emplace_back(n);
    }
    report.bound_note = "representability by x^2+5y^2+2t_z agrees with the mixed mod-4 "
                        "x^2+y^2+10z^2 condition at 8n+2 for every n <= " + std::to_string(bound);
    detail::seal(report, sw);
    return report;
}

// ---------------------------------------------------------------------------
// Fixed-order full run
// ---------------------------------------------------------------------------

inline std::vector<std::string> check_names() {
    return {"identities", "hurwitz",         "theorem1i",  "theorem1ii", "theorem1iii",
            "classifications", "essential_forms", "conjectures", "dickson_chain"};
}

inline VerificationReport run_check(const std::string& name,
                                    std::optional<int64_t> bound = std::nullopt) {
    if (name == "identities") return check_identities(bound.value_or(20000));
    if (name == "hurwitz") return check_hurwitz(bound.value_or(99));
    if (name == "theorem1i") return check_theorem1i(bound.value_or(10000));
    if (name == "theorem1ii") return check_theorem1ii(bound.value_or(5000));
    if (name == "theorem1iii") return check_theorem1iii(bound.value_or(140));
    if (name == "classifications") return check_classifications(bound.value_or(2000));
    if (name == "essential_forms") return check_essential_forms(bound.value_or(10000));
    if (name == "conjectures") return scan_conjectures(bound);
    if (name == "dickson_chain") return check_dickson_chain(bound.value_or(5000));
    throw std::invalid_argument("unknown check: " + name);
}

inline std::vector<VerificationReport> run_all() {
    std::vector<VerificationReport> reports;
    for (const auto& name : check_names()) reports.push_back(run_check(name));
    return reports;
}

}  // namespace mixedrep::verify
