#include "antipow/cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "antipow/antipower.hpp"
#include "antipow/asymptotics.hpp"
#include "antipow/csv_io.hpp"
#include "antipow/errors.hpp"
#include "antipow/extremal.hpp"
#include "antipow/json_io.hpp"
#include "antipow/kappa.hpp"
#include "antipow/lemma_verify.hpp"
#include "antipow/tm_core.hpp"

namespace antipow::cli {

namespace {

std::string format_ratio(const ratio& r) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f",
                  static_cast<double>(r.num) / static_cast<double>(r.den));
    return buf;
}

std::string format_witness(const std::pair<std::uint64_t, std::uint64_t>& w) {
    return "(" + std::to_string(w.first) + "," + std::to_string(w.second) + ")";
}

void emit_json(std::ostream& out, const nlohmann::json& j) { out << j.dump(2) << '\n'; }

// Parses "N" or "LO..HI" into an inclusive range.
std::pair<unsigned, unsigned> parse_i_range(const std::string& text) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        const unsigned i = static_cast<unsigned>(std::stoul(text));
        return {i, i};
    }
    const unsigned lo = static_cast<unsigned>(std::stoul(text.substr(0, dots)));
    const unsigned hi = static_cast<unsigned>(std::stoul(text.substr(dots + 2)));
    if (hi < lo) throw std::invalid_argument("empty --i range: " + text);
    return {lo, hi};
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Thue-Morse antipower toolkit"};
    app.fallthrough();

    std::string format = "text";
    std::string out_path;
    unsigned jobs = 1;
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    app.add_option("--out", out_path, "write output to a file");
    app.add_option("--jobs", jobs, "worker threads for sweeps")
        ->check(CLI::Range(1u, 512u));
    app.require_subcommand(1);

    std::uint64_t letter_n = 0, letter_base = 2;
    auto* sc_letter = app.add_subcommand("letter", "letter of the word at an index");
    sc_letter->add_option("n", letter_n, "letter index")->required();
    sc_letter->add_option("--base", letter_base, "digit-sum base (default 2)");

    std::uint64_t prefix_len = 0;
    auto* sc_prefix = app.add_subcommand("prefix", "prefix of the word");
    sc_prefix->add_option("length", prefix_len)->required();

    std::uint64_t equiv_n = 0, equiv_m = 0;
    auto* sc_equiv = app.add_subcommand("equiv", "letter equivalence of two indices");
    sc_equiv->add_option("n", equiv_n)->required();
    sc_equiv->add_option("m", equiv_m)->required();

    std::uint64_t check_n = 0, check_k = 0;
    auto* sc_check = app.add_subcommand("check", "antipower verdict for the length-kn prefix");
    sc_check->add_option("--n", check_n, "block length")->required();
    sc_check->add_option("--k", check_k, "number of blocks")->required();

    std::uint64_t kappa_n = 0, kappa_cap = default_kappa_cap;
    auto* sc_kappa = app.add_subcommand("kappa", "least k whose prefix is not a k-antipower");
    sc_kappa->add_option("n", kappa_n, "odd block length")->required();
    sc_kappa->add_option("--cap", kappa_cap, "ordinal search cap");

    std::uint64_t extremal_k = 0;
    auto* sc_extremal = app.add_subcommand("extremal", "gamma, Gamma and the complement set");
    sc_extremal->add_option("k", extremal_k)->required();

    std::uint64_t sk_lo = 0, sk_hi = 0;
    auto* sc_sk = app.add_subcommand("sweep-kappa", "kappa over a range of odd n");
    sc_sk->add_option("lo", sk_lo)->required();
    sc_sk->add_option("hi", sk_hi)->required();

    std::uint64_t se_lo = 0, se_hi = 0;
    auto* sc_se = app.add_subcommand("sweep-extremal", "gamma/Gamma over a range of k");
    sc_se->add_option("lo", se_lo)->required();
    sc_se->add_option("hi", se_hi)->required();

    std::string verify_lemma, verify_i;
    unsigned verify_j_min = 3, verify_k_shift = 2, verify_max_exp = 20;
    auto* sc_verify = app.add_subcommand("verify", "finite-range lemma verification");
    sc_verify->add_option("lemma", verify_lemma,
                          "digit-tables | digit-sum-prop | 8x-family | 32x-family | "
                          "close-to-high | exact-families | window-17-6")
        ->required();
    sc_verify->add_option("--i", verify_i, "exponent, or LO..HI range");
    sc_verify->add_option("--j-min", verify_j_min, "minimum j for 8x-family");
    sc_verify->add_option("--k-shift", verify_k_shift, "i - j for close-to-high");
    sc_verify->add_option("--max-exp", verify_max_exp, "prefix exponent for digit-sum-prop");

    std::uint64_t conj_i = 0;
    std::string conj_margin = "0";
    auto* sc_conj = app.add_subcommand("conjecture", "scan a dyadic window against kappa(3*2^i+1)");
    sc_conj->add_option("i", conj_i)->required();
    sc_conj->add_option("--margin", conj_margin, "window shrink as P/Q");

    std::vector<const char*> argv;
    argv.push_back("antipow");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        err << app.help();
        return exit_usage;
    }

    // default --i per lemma
    if (verify_i.empty()) {
        if (verify_lemma == "exact-families") verify_i = "5..8";
        else if (verify_lemma == "close-to-high") verify_i = "19";
        else if (verify_lemma == "window-17-6") verify_i = "10";
        else verify_i = "8";
    }

    std::ofstream file;
    if (!out_path.empty()) {
        file.open(out_path, std::ios::binary);
        if (!file) {
            err << "cannot open output file: " << out_path << '\n';
            return exit_usage;
        }
    }
    std::ostream& sink = out_path.empty() ? out : file;

    try {
        if (app.got_subcommand("letter")) {
            const unsigned l = generalized_letter(letter_base, letter_n);
            if (format == "json")
                emit_json(sink, {{"n", letter_n}, {"base", letter_base}, {"letter", l}});
            else if (format == "csv")
                sink << "n,base,letter\n" << letter_n << ',' << letter_base << ',' << l << '\n';
            else
                sink << l << '\n';
            return exit_ok;
        }

        if (app.got_subcommand("prefix")) {
            const finite_word w = tm_prefix(prefix_len);
            if (format == "json")
                emit_json(sink, {{"length", w.size()}, {"word", w.to_string()}});
            else if (format == "csv")
                sink << "length,word\n" << w.size() << ',' << w.to_string() << '\n';
            else
                sink << w.to_string() << '\n';
            return exit_ok;
        }

        if (app.got_subcommand("equiv")) {
            const bool eq = tm_equiv(equiv_n, equiv_m);
            if (format == "json")
                emit_json(sink, {{"n", equiv_n}, {"m", equiv_m}, {"equivalent", eq}});
            else if (format == "csv")
                sink << "n,m,equivalent\n" << equiv_n << ',' << equiv_m << ',' << eq << '\n';
            else
                sink << (eq ? "true" : "false") << '\n';
            return exit_ok;
        }

        if (app.got_subcommand("check")) {
            antipower_verdict v;
            if (check_n % 2 == 1) {
                v = tm_prefix_is_antipower(check_n, check_k);
            } else {
                // even n: membership only; the witness comes from the raw search
                auto dup = detail::first_duplicate_block(check_n, check_k, 2, false);
                v.is_antipower = !dup.has_value();
                v.witness = dup;
            }
            if (format == "json") {
                nlohmann::json j{{"n", check_n}, {"k", check_k}, {"is_antipower", v.is_antipower}};
                j["witness"] = v.witness
                                   ? nlohmann::json::array({v.witness->first, v.witness->second})
                                   : nlohmann::json(nullptr);
                emit_json(sink, j);
            } else if (format == "csv") {
                sink << "n,k,is_antipower,witness_c,witness_cprime\n"
                     << check_n << ',' << check_k << ',' << v.is_antipower << ',';
                if (v.witness) sink << v.witness->first << ',' << v.witness->second;
                else sink << ',';
                sink << '\n';
            } else {
                if (v.is_antipower)
                    sink << "antipower\n";
                else
                    sink << "not-antipower witness=" << format_witness(*v.witness) << '\n';
            }
            return exit_ok;
        }

        if (app.got_subcommand("kappa")) {
            const kappa_record rec = kappa(kappa_n, kappa_cap);
            if (format == "json") {
                emit_json(sink, to_json(rec));
            } else if (format == "csv") {
                write_kappa_csv(sink, {{rec, {static_cast<std::int64_t>(rec.kappa), rec.n}}});
            } else {
                sink << "kappa(" << rec.n << ") = " << rec.kappa
                     << " witness=" << format_witness(rec.witness) << '\n';
            }
            return exit_ok;
        }

        if (app.got_subcommand("extremal")) {
            const extremal_record rec = extremal(extremal_k);
            if (format == "json") {
                emit_json(sink, to_json(rec));
            } else if (format == "csv") {
                sink << "k,gamma,Gamma,cap_used\n" << rec.k << ',' << rec.gamma << ',';
                if (rec.big_gamma) sink << *rec.big_gamma;
                sink << ',' << rec.cap_used << '\n';
            } else {
                sink << "k=" << rec.k << " gamma=" << rec.gamma << " Gamma=";
                if (rec.big_gamma) sink << *rec.big_gamma;
                else sink << "absent";
                sink << " cap=" << rec.cap_used << " complement=[";
                for (std::size_t idx = 0; idx < rec.complement.size(); ++idx) {
                    if (idx) sink << ',';
                    sink << rec.complement[idx];
                }
                sink << "]\n";
            }
            return exit_ok;
        }

        if (app.got_subcommand("sweep-kappa")) {
            const auto samples = sweep_kappa(sk_lo, sk_hi, jobs);
            if (format == "json") {
                nlohmann::json arr = nlohmann::json::array();
                for (const auto& s : samples) arr.push_back(to_json(s));
                emit_json(sink, arr);
            } else if (format == "csv") {
                write_kappa_csv(sink, samples);
            } else {
                for (const auto& s : samples)
                    sink << "n=" << s.record.n << " kappa=" << s.record.kappa
                         << " witness=" << format_witness(s.record.witness)
                         << " kappa/n=" << format_ratio(s.kappa_over_n) << '\n';
            }
            return exit_ok;
        }

        if (app.got_subcommand("sweep-extremal")) {
            const auto samples = sweep_extremal(se_lo, se_hi, jobs);
            const auto bands = dyadic_summary(samples);
            if (format == "json") {
                nlohmann::json arr = nlohmann::json::array();
                for (const auto& s : samples) arr.push_back(to_json(s));
                nlohmann::json bandj = nlohmann::json::array();
                for (const auto& b : bands) bandj.push_back(to_json(b));
                emit_json(sink, {{"samples", arr}, {"dyadic_summary", bandj}});
            } else if (format == "csv") {
                write_extremal_csv(sink, samples);
            } else {
                for (const auto& s : samples) {
                    sink << "k=" << s.k << " gamma=" << s.gamma << " Gamma=";
                    if (s.big_gamma) sink << *s.big_gamma;
                    else sink << "absent";
                    sink << " gamma/k=" << format_ratio(s.gamma_over_k);
                    if (s.big_gamma_over_k)
                        sink << " Gamma/k=" << format_ratio(*s.big_gamma_over_k)
                             << " diff/k=" << format_ratio(*s.diff_over_k);
                    sink << '\n';
                }
                for (const auto& b : bands) {
                    sink << "band [" << b.lo << ',' << b.hi << "] gamma/k in ["
                         << format_ratio(b.gamma_min) << ',' << format_ratio(b.gamma_max) << ']';
                    if (b.big_gamma_min)
                        sink << " Gamma/k in [" << format_ratio(*b.big_gamma_min) << ','
                             << format_ratio(*b.big_gamma_max) << ']';
                    if (b.diff_min)
                        sink << " diff/k in [" << format_ratio(*b.diff_min) << ','
                             << format_ratio(*b.diff_max) << ']';
                    sink << '\n';
                }
            }
            return exit_ok;
        }

        if (app.got_subcommand("verify")) {
            std::vector<lemma_report> reports;
            if (verify_lemma == "digit-tables") {
                reports.push_back(verify_digit_tables());
            } else if (verify_lemma == "digit-sum-prop") {
                reports.push_back(verify_digit_sum_prop(verify_max_exp));
            } else {
                auto [i_lo, i_hi] = parse_i_range(verify_i);
                for (unsigned i = i_lo; i <= i_hi; ++i) {
                    if (verify_lemma == "8x-family")
                        reports.push_back(verify_8x_family(i, verify_j_min, jobs));
                    else if (verify_lemma == "32x-family")
                        reports.push_back(verify_32x_family(i, jobs));
                    else if (verify_lemma == "close-to-high")
                        reports.push_back(verify_close_to_high(i, verify_k_shift, jobs));
                    else if (verify_lemma == "window-17-6")
                        reports.push_back(verify_window_17_6(i, jobs));
                    else
                        break; // exact-families takes the whole range at once
                }
                if (verify_lemma == "exact-families")
                    reports.push_back(verify_exact_families(i_lo, i_hi, jobs));
                else if (reports.empty())
                    throw std::invalid_argument(
                        "unknown lemma id: " + verify_lemma +
                        " (expected digit-tables, digit-sum-prop, 8x-family, 32x-family, "
                        "close-to-high, exact-families, window-17-6)");
            }

            if (format == "json") {
                nlohmann::json arr = nlohmann::json::array();
                for (const auto& r : reports) arr.push_back(to_json(r));
                emit_json(sink, arr);
            } else if (format == "csv") {
                write_lemma_csv(sink, reports);
            } else {
                for (const auto& r : reports) sink << to_text(r);
            }
            for (const auto& r : reports)
                if (!r.passed()) return exit_verification_failed;
            return exit_ok;
        }

        if (app.got_subcommand("conjecture")) {
            const auto rec = conjecture_scan(static_cast<unsigned>(conj_i),
                                             parse_rational(conj_margin), jobs);
            if (format == "json") {
                emit_json(sink, to_json(rec));
            } else if (format == "csv") {
                write_conjecture_csv(sink, rec);
            } else {
                sink << "i=" << rec.i << " margin=" << rec.margin.num << '/' << rec.margin.den
                     << " reference: kappa(" << rec.reference.n << ")=" << rec.reference.kappa
                     << " window=[" << rec.window_first << ',' << rec.window_last
                     << "] count=" << rec.window_count << " violations=[";
                for (std::size_t idx = 0; idx < rec.violations.size(); ++idx) {
                    if (idx) sink << ',';
                    sink << rec.violations[idx];
                }
                sink << "]\n";
            }
            return exit_ok;
        }

        return exit_usage;
    } catch (const cap_exceeded_error& e) {
        err << "resource cap: " << e.what() << '\n';
        return exit_resource;
    } catch (const resource_limit_error& e) {
        err << "resource cap: " << e.what() << '\n';
        return exit_resource;
    } catch (const antipow::error& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
}

} // namespace antipow::cli
