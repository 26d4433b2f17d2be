// Command-line front end: count representations, scan forms for
// exceptions, compare value sets, run finite eliminations, and execute the
// named verification checks.
//
// Exit codes: 0 all reports pass, 1 some check failed, 2 usage or parse
// error, 3 internal error (e.g. 64-bit overflow).

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "mixedrep/form_text.hpp"
#include "mixedrep/forms.hpp"
#include "mixedrep/parallel.hpp"
#include "mixedrep/report_json.hpp"
#include "mixedrep/verify.hpp"

namespace {

using mixedrep::verify::Status;
using mixedrep::verify::VerificationReport;

struct OutputOptions {
    bool json = false;
    bool quiet = false;
};

void print_human(const VerificationReport& report) {
    std::cout << "[" << mixedrep::verify::to_string(report.status) << "] " << report.check;
    if (!report.params.empty()) {
        std::cout << " (";
        for (size_t i = 0; i < report.params.size(); ++i) {
            if (i > 0) std::cout << ", ";
            std::cout << report.params[i].first << "=" << report.params[i].second;
        }
        std::cout << ")";
    }
    std::cout << " " << report.elapsed.count() << "ms\n";
    if (!report.witnesses.empty()) {
        std::cout << "  witnesses:";
        for (const auto& w : report.witnesses) {
            if (const auto* n = std::get_if<int64_t>(&w)) {
                std::cout << " " << *n;
            } else {
                const auto& v = std::get<std::vector<int64_t>>(w);
                std::cout << " (";
                for (size_t i = 0; i < v.size(); ++i) {
                    if (i > 0) std::cout << ",";
                    std::cout << v[i];
                }
                std::cout << ")";
            }
        }
        std::cout << "\n";
    }
    if (!report.bound_note.empty()) std::cout << "  " << report.bound_note << "\n";
}

void emit(const VerificationReport& report, const OutputOptions& out) {
    if (out.json) {
        std::cout << mixedrep::report_json::to_json_line(report) << "\n";
    } else {
        print_human(report);
    }
}

void progress(const OutputOptions& out, const std::string& message) {
    if (!out.quiet) std::cerr << "[mixedrep] " << message << "\n";
}

int exit_code(const std::vector<VerificationReport>& reports) {
    for (const auto& r : reports) {
        if (r.status == Status::fail) return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"verification toolkit for representations of natural numbers by mixed "
                 "ternary sums of squares and triangular numbers"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    OutputOptions out;
    int threads = 0;
    app.add_flag("--json", out.json, "emit one JSON object per report (line-delimited)");
    app.add_flag("--quiet", out.quiet, "suppress progress output on stderr");
    app.add_option("--threads", threads,
                   "worker threads (default: MIXEDREP_THREADS or hardware parallelism)");

    // count <form> <n> [--split-slot k]
    auto* cmd_count = app.add_subcommand("count", "count representations of n by a form");
    std::string count_form;
    int64_t count_n = 0;
    int split_slot = -1;
    cmd_count->add_option("form", count_form, "form expression, e.g. \"s+t+t\"")->required();
    cmd_count->add_option("n", count_n, "target value")->required();
    cmd_count->add_option("--split-slot", split_slot, "square slot whose index parity splits the count");

    // scan <form> --bound N [--csv]
    auto* cmd_scan = app.add_subcommand("scan", "list all non-representable n <= bound");
    std::string scan_form;
    int64_t scan_bound = 10000;
    bool scan_csv = false;
    cmd_scan->add_option("form", scan_form, "form expression")->required();
    cmd_scan->add_option("--bound", scan_bound, "scan bound (default 10000)");
    cmd_scan->add_flag("--csv", scan_csv, "emit a per-n CSV table (columns: n, representable)");

    // equiv <form1> <form2> --bound N
    auto* cmd_equiv = app.add_subcommand("equiv", "compare the value sets of two forms");
    std::string equiv_left, equiv_right;
    int64_t equiv_bound = 10000;
    cmd_equiv->add_option("form1", equiv_left, "first form")->required();
    cmd_equiv->add_option("form2", equiv_right, "second form")->required();
    cmd_equiv->add_option("--bound", equiv_bound, "comparison bound (default 10000)");

    // eliminate --pattern sst|stt|ttt --box a,b,c --rep-bound R
    auto* cmd_elim = app.add_subcommand("eliminate",
                                        "finite elimination over a coefficient box");
    std::string elim_pattern = "sst";
    std::vector<int64_t> elim_box{16, 16, 16};
    int64_t elim_rep_bound = 2000;
    cmd_elim->add_option("--pattern", elim_pattern, "slot kinds: sst, stt or ttt")
        ->check(CLI::IsMember({"sst", "stt", "ttt"}));
    cmd_elim->add_option("--box", elim_box, "coefficient upper bounds a,b,c")
        ->delimiter(',')
        ->expected(3);
    cmd_elim->add_option("--rep-bound", elim_rep_bound, "representability check bound (default 2000)");

    // series --identity <name> --order N
    auto* cmd_series = app.add_subcommand("series", "verify one q-series identity");
    std::string series_identity;
    int64_t series_order = 20000;
    cmd_series->add_option("--identity", series_identity, "one of: gauss-phi, gauss-psi, "
                           "jacobi-cube, parity-difference, psi-square, doubling")
        ->required();
    cmd_series->add_option("--order", series_order, "truncation order (default 20000)");

    // verify <checkName>|all [--bound N]
    auto* cmd_verify = app.add_subcommand("verify", "run named verification checks");
    std::string verify_name = "all";
    std::optional<int64_t> verify_bound;
    cmd_verify->add_option("check", verify_name, "check name or \"all\"");
    cmd_verify->add_option("--bound", verify_bound,
                           "override the check's default bound (single checks only)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;  // --help exits 0, anything else is a usage error
    }

    if (threads > 0) mixedrep::parallel::set_thread_count(threads);

    try {
        namespace verify_mod = mixedrep::verify;
        namespace forms = mixedrep::forms;
        namespace form_text = mixedrep::form_text;

        if (cmd_count->parsed()) {
            const forms::MixedForm form = form_text::parse(count_form);
            VerificationReport report;
            report.check = "count";
            report.param("form", form_text::to_text(form));
            report.param("n", count_n);
            if (split_slot >= 0) {
                const auto pc = forms::parity_split_count(form, split_slot, count_n);
                report.param("split_slot", static_cast<int64_t>(split_slot));
                report.param("total", pc.total);
                report.param("even", pc.even);
                report.param("odd", pc.odd);
                if (!out.json) {
                    std::cout << "total " << pc.total << ", even " << pc.even << ", odd "
                              << pc.odd << "\n";
                }
            } else {
                const int64_t total = forms::count_representations(form, count_n);
                report.param("total", total);
                if (!out.json) std::cout << "total " << total << "\n";
            }
            report.status = Status::pass;  // an exact finite count
            report.bound_note = "exact count under the slot-domain convention";
            if (out.json) emit(report, out);
            return 0;
        }

        if (cmd_scan->parsed()) {
            const forms::MixedForm form = form_text::parse(scan_form);
            progress(out, "scanning " + form_text::to_algebraic(form) + " up to " +
                              std::to_string(scan_bound));
            if (scan_csv) {
                const auto table = forms::representability_table(form, scan_bound);
                std::cout << "n,representable\n";
                for (int64_t n = 0; n <= scan_bound; ++n) {
                    std::cout << n << "," << (table[static_cast<size_t>(n)] ? 1 : 0) << "\n";
                }
                return 0;
            }
            verify_mod::detail::Stopwatch sw;
            const auto exceptions = forms::exceptions(form, scan_bound);
            VerificationReport report;
            report.check = "scan";
            report.param("form", form_text::to_text(form));
            report.param("bound", scan_bound);
            for (int64_t n : exceptions) report.witnesses.emplace_back(n);
            report.status = Status::bounded_pass;
            report.elapsed = sw.elapsed();
            report.bound_note = exceptions.empty()
                ? "no exception <= " + std::to_string(scan_bound) +
                      "; universality beyond the bound is not proven"
                : std::to_string(exceptions.size()) + " non-representable value(s) <= " +
                      std::to_string(scan_bound) + ", each proven by exhaustive search";
            emit(report, out);
            if (!out.json && !exceptions.empty()) {
                std::cout << "exceptions:";
                for (int64_t n : exceptions) std::cout << " " << n;
                std::cout << "\n";
            }
            return 0;
        }

        if (cmd_equiv->parsed()) {
            const forms::MixedForm left = form_text::parse(equiv_left);
            const forms::MixedForm right = form_text::parse(equiv_right);
            verify_mod::detail::Stopwatch sw;
            const auto mismatch = forms::value_sets_equal_up_to(left, right, equiv_bound);
            VerificationReport report;
            report.check = "equiv";
            report.param("form1", form_text::to_text(left));
            report.param("form2", form_text::to_text(right));
            report.param("bound", equiv_bound);
            if (mismatch) {
                report.status = Status::fail;
                report.witnesses.emplace_back(*mismatch);
                report.bound_note = "value sets differ first at " + std::to_string(*mismatch);
            } else {
                report.status = Status::bounded_pass;
                report.bound_note = "value sets agree on [0, " + std::to_string(equiv_bound) + "]";
            }
            report.elapsed = sw.elapsed();
            emit(report, out);
            if (!out.json) {
                if (mismatch) {
                    std::cout << "first mismatch at " << *mismatch << "\n";
                } else {
                    std::cout << "equal up to " << equiv_bound << "\n";
                }
            }
            return mismatch ? 1 : 0;
        }

        if (cmd_elim->parsed()) {
            forms::EliminationConfig config;
            config.rep_bound = elim_rep_bound;
            config.box = {elim_box[0], elim_box[1], elim_box[2]};
            if (elim_pattern == "sst") {
                config.pattern = {forms::TermKind::square, forms::TermKind::square,
                                  forms::TermKind::triangular};
                config.ordering = forms::Ordering::first_le_second;
            } else if (elim_pattern == "stt") {
                config.pattern = {forms::TermKind::square, forms::TermKind::triangular,
                                  forms::TermKind::triangular};
                config.ordering = forms::Ordering::second_ge_third;
            } else {
                config.pattern = {forms::TermKind::triangular, forms::TermKind::triangular,
                                  forms::TermKind::triangular};
                config.ordering = forms::Ordering::ascending;
            }
            progress(out, "eliminating " + elim_pattern + " candidates in box " +
                              std::to_string(config.box[0]) + "," + std::to_string(config.box[1]) +
                              "," + std::to_string(config.box[2]));
            verify_mod::detail::Stopwatch sw;
            const auto result = forms::eliminate(config);
            VerificationReport report;
            report.check = "eliminate";
            report.param("pattern", elim_pattern);
            report.param("box", std::to_string(config.box[0]) + "," +
                                    std::to_string(config.box[1]) + "," +
                                    std::to_string(config.box[2]));
            report.param("rep_bound", elim_rep_bound);
            report.param("survivors", static_cast<int64_t>(result.survivors.size()));
            report.param("eliminated", static_cast<int64_t>(result.eliminated.size()));
            for (const auto& v : result.survivors) {
                report.witnesses.emplace_back(std::vector<int64_t>{v[0], v[1], v[2]});
            }
            report.status = Status::bounded_pass;
            report.elapsed = sw.elapsed();
            report.bound_note = "survivors pass a bounded representability check (no exception <= " +
                                std::to_string(elim_rep_bound) +
                                "); they are candidates, not proven-universal forms";
            emit(report, out);
            if (!out.json) {
                std::cout << "survivors (" << result.survivors.size() << "):\n";
                for (const auto& v : result.survivors) {
                    std::cout << "  (" << v[0] << "," << v[1] << "," << v[2] << ")\n";
                }
                std::cout << "eliminated (" << result.eliminated.size()
                          << "), with least witness:\n";
                for (const auto& [v, w] : result.eliminated) {
                    std::cout << "  (" << v[0] << "," << v[1] << "," << v[2] << ") misses " << w
                              << "\n";
                }
            }
            return 0;
        }

        if (cmd_series->parsed()) {
            progress(out, "checking series identity " + series_identity + " to order " +
                              std::to_string(series_order));
            verify_mod::detail::Stopwatch sw;
            const auto mismatch = verify_mod::run_series_identity(series_identity, series_order);
            VerificationReport report;
            report.check = "series-identity";
            report.param("identity", series_identity);
            report.param("order", series_order);
            if (mismatch) {
                report.status = Status::fail;
                report.witnesses.emplace_back(*mismatch);
                report.bound_note = "first mismatching coefficient at q^" + std::to_string(*mismatch);
            } else {
                report.status = Status::bounded_pass;
                report.bound_note = "identity holds coefficientwise for every order <= " +
                                    std::to_string(series_order);
            }
            report.elapsed = sw.elapsed();
            emit(report, out);
            return mismatch ? 1 : 0;
        }

        if (cmd_verify->parsed()) {
            std::vector<VerificationReport> reports;
            if (verify_name == "all") {
                if (verify_bound) {
                    std::cerr << "--bound applies to a single named check, not \"all\"\n";
                    return 2;
                }
                for (const auto& name : verify_mod::check_names()) {
                    progress(out, "running " + name);
                    reports.push_back(verify_mod::run_check(name));
                    emit(reports.back(), out);
                }
            } else {
                progress(out, "running " + verify_name);
                reports.push_back(verify_mod::run_check(verify_name, verify_bound));
                emit(reports.back(), out);
            }
            return exit_code(reports);
        }
    } catch (const mixedrep::form_text::ParseError& e) {
        std::cerr << "form parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::overflow_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
