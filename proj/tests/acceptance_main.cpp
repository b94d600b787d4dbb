// Acceptance suite: one pass/fail line per criterion, exit code equals the
// number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include "antipow/antipower.hpp"
#include "antipow/asymptotics.hpp"
#include "antipow/cli.hpp"
#include "antipow/extremal.hpp"
#include "antipow/kappa.hpp"
#include "antipow/lemma_verify.hpp"
#include "antipow/tm_core.hpp"
#include "band_constants.hpp"
#include "oracle.hpp"

using namespace antipow;

namespace {

int failures = 0;
std::vector<std::string> info_lines;

unsigned default_jobs() {
    const unsigned hw = std::thread::hardware_concurrency();
    return std::clamp(hw == 0 ? 1u : hw, 1u, 8u);
}

void criterion(int number, const std::string& description,
               const std::function<bool()>& body) {
    info_lines.clear();
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string detail;
    try {
        ok = body();
    } catch (const std::exception& e) {
        detail = std::string(" [exception: ") + e.what() + "]";
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << number << ": "
              << description << " (" << timing << ")" << detail << '\n';
    for (const auto& line : info_lines) std::cout << "  " << line << '\n';
    if (!ok) ++failures;
}

bool check(bool cond, const std::string& what) {
    if (!cond) info_lines.push_back("failed: " + what);
    return cond;
}

std::string run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    cli::run(args, out, err);
    return out.str();
}

} // namespace

int main() {
    const unsigned jobs = default_jobs();

    criterion(1, "exact small values with unpruned oracle agreement", [] {
        bool ok = true;
        const kappa_record expected[] = {{1, 3, {2, 3}}, {3, 3, {1, 3}}, {5, 7, {5, 7}}};
        for (const auto& e : expected) {
            const kappa_record got = kappa(e.n);
            ok &= check(got == e, "kappa(" + std::to_string(e.n) + ") pruned");
            const auto brute = oracle::kappa_brute(e.n);
            ok &= check(brute && brute->kappa == e.kappa && brute->witness == e.witness,
                        "kappa(" + std::to_string(e.n) + ") brute");
        }
        return ok;
    });

    criterion(2, "exact families 2^i+1 (i in [5,14]) and 2^i+3 (i in [5,13])", [] {
        bool ok = true;
        for (unsigned i = 5; i <= 14; ++i) {
            const std::uint64_t n = (std::uint64_t{1} << i) + 1;
            const std::uint64_t expect = (std::uint64_t{1} << (i - 1)) + 2;
            ok &= check(kappa(n).kappa == expect, "kappa(2^" + std::to_string(i) + "+1)");
        }
        for (unsigned i = 5; i <= 13; ++i) {
            const std::uint64_t n = (std::uint64_t{1} << i) + 3;
            const std::uint64_t expect = (std::uint64_t{1} << i) + 5;
            ok &= check(kappa(n).kappa == expect, "kappa(2^" + std::to_string(i) + "+3)");
        }
        return ok;
    });

    criterion(3, "exact family 2^(2i)-3 for i in {3,4,5,6}", [] {
        bool ok = true;
        for (unsigned i = 3; i <= 6; ++i) {
            const std::uint64_t n = (std::uint64_t{1} << (2 * i)) - 3;
            const std::uint64_t expect = (std::uint64_t{1} << (2 * i)) + 10;
            ok &= check(kappa(n).kappa == expect, "kappa(2^" + std::to_string(2 * i) + "-3)");
        }
        return ok;
    });

    criterion(4, "17/6 window lemma witnesses for i in [10,14]", [=] {
        bool ok = true;
        for (unsigned i = 10; i <= 14; ++i) {
            const lemma_report r = verify_window_17_6(i, jobs);
            ok &= check(r.overall, "window witness at i=" + std::to_string(i));
            for (const auto& note : r.notes)
                if (note.rfind("witnesses:", 0) == 0)
                    info_lines.push_back("i=" + std::to_string(i) + " " + note);
        }
        return ok;
    });

    criterion(5, "phi and psi digit tables verify exhaustively", [] {
        const lemma_report r = verify_digit_tables();
        return check(r.overall && r.cases.size() == 50, "digit tables");
    });

    criterion(6, "shift criterion biconditional (odd n<=63, i<=6, c<=256)", [] {
        for (std::uint64_t n = 1; n <= 63; n += 2)
            for (unsigned i = 0; i <= 6; ++i)
                for (std::uint64_t c = 0; c <= 256; ++c) {
                    const bool via_shift = tm_blocks_equal_shift({n, c, i});
                    const bool via_direct = tm_blocks_equal_direct(
                        {n, c + 1}, {n, c + 1 + (std::uint64_t{1} << i)});
                    if (via_shift != via_direct)
                        return check(false, "n=" + std::to_string(n) + " i=" +
                                                std::to_string(i) + " c=" + std::to_string(c));
                }
        return true;
    });

    criterion(7, "equal-block congruence (odd n<=99, ordinals<=4096)", [] {
        for (std::uint64_t n = 1; n <= 99; n += 2) {
            const unsigned e = pruning_shift_exponent(n);
            const std::uint64_t mask = (std::uint64_t{1} << e) - 1;
            std::unordered_map<std::uint64_t, std::vector<std::uint64_t>> groups;
            for (std::uint64_t c = 1; c <= 4096; ++c)
                groups[tm_block_fingerprint(n, c)].push_back(c);
            for (const auto& [fp, members] : groups) {
                // split fingerprint groups into true content classes
                std::vector<std::uint64_t> reps;
                for (const std::uint64_t m : members) {
                    bool placed = false;
                    for (const std::uint64_t r : reps) {
                        if (tm_blocks_equal_direct({n, r}, {n, m})) {
                            if (((r ^ m) & mask) != 0)
                                return check(false, "n=" + std::to_string(n) + " pair (" +
                                                        std::to_string(r) + "," +
                                                        std::to_string(m) + ")");
                            placed = true;
                            break;
                        }
                    }
                    if (!placed) reps.push_back(m);
                }
            }
        }
        return true;
    });

    criterion(8, "extremal values equal the direct prefix-test oracle (k<=64)", [] {
        bool ok = true;
        ok &= check(gamma(3) == 5, "gamma(3)");
        ok &= check(big_gamma(3) == std::uint64_t{3}, "Gamma(3)");
        ok &= check(!big_gamma(2).has_value(), "Gamma(2) absent");
        for (std::uint64_t k = 2; k <= 64 && ok; ++k) {
            const extremal_record rec = extremal(k);
            ok &= check(rec.gamma == oracle::gamma_direct(k),
                        "gamma(" + std::to_string(k) + ")");
            ok &= check(rec.complement == oracle::complement_direct(k),
                        "complement(" + std::to_string(k) + ")");
        }
        return ok;
    });

    criterion(9, "doubling invariance of AP membership (n<=512, k<=32)", [] {
        for (std::uint64_t n = 1; n <= 512; ++n)
            for (std::uint64_t k = 1; k <= 32; ++k)
                if (ap_membership(n, k) != ap_membership(2 * n, k))
                    return check(false, "n=" + std::to_string(n) + " k=" + std::to_string(k));
        return true;
    });

    criterion(10, "prefix of 2^20 letters avoids 000, 111, 01010, 10101", [] {
        const finite_word w = tm_prefix(std::uint64_t{1} << 20);
        bool ok = true;
        for (const char* pattern : {"000", "111", "01010", "10101"})
            ok &= check(!w.contains(pattern), std::string("factor ") + pattern);
        return ok;
    });

    criterion(11, "regression bands and exact ratios over k in [1024,4096]", [=] {
        const auto samples = sweep_extremal(band_constants::k_lo, band_constants::k_hi, jobs);
        bool ok = check(samples.size() == band_constants::k_hi - band_constants::k_lo + 1,
                        "sample count");
        std::int64_t worst_gamma = INT64_MIN, worst_big = INT64_MIN;
        for (const auto& s : samples) {
            ok &= check(s.gamma_over_k.num == static_cast<std::int64_t>(s.gamma) &&
                            s.gamma_over_k.den == s.k,
                        "gamma ratio exactness");
            ok &= check(s.big_gamma.has_value(), "Gamma present");
            if (!ok) break;
            ok &= check(*s.big_gamma < 3 * s.k, "Gamma below 3k");
            ok &= check(s.gamma <= certified_cap(s.k), "gamma below certified cap");
            ok &= check(s.big_gamma_over_k->num == static_cast<std::int64_t>(*s.big_gamma) &&
                            s.diff_over_k->num ==
                                static_cast<std::int64_t>(*s.big_gamma) -
                                    static_cast<std::int64_t>(s.gamma),
                        "Gamma/diff ratio exactness");
            worst_gamma = std::max(worst_gamma, 2 * static_cast<std::int64_t>(s.gamma) -
                                                    3 * static_cast<std::int64_t>(s.k));
            worst_big = std::max(worst_big, static_cast<std::int64_t>(*s.big_gamma) -
                                                3 * static_cast<std::int64_t>(s.k));
        }
        info_lines.push_back("observed max 2*gamma-3k = " + std::to_string(worst_gamma) +
                             " (frozen bound " + std::to_string(band_constants::gamma_band_2x) + ")");
        info_lines.push_back("observed max Gamma-3k = " + std::to_string(worst_big) +
                             " (frozen bound " + std::to_string(band_constants::big_gamma_band) + ")");
        ok &= check(worst_gamma <= band_constants::gamma_band_2x, "gamma band");
        ok &= check(worst_big <= band_constants::big_gamma_band, "Gamma band");
        for (const auto& b : dyadic_summary(samples)) {
            char line[256];
            std::snprintf(line, sizeof line,
                          "band [%llu,%llu] gamma/k in [%.6f,%.6f] Gamma/k in [%.6f,%.6f]",
                          static_cast<unsigned long long>(b.lo),
                          static_cast<unsigned long long>(b.hi),
                          double(b.gamma_min.num) / double(b.gamma_min.den),
                          double(b.gamma_max.num) / double(b.gamma_max.den),
                          double(b.big_gamma_min->num) / double(b.big_gamma_min->den),
                          double(b.big_gamma_max->num) / double(b.big_gamma_max->den));
            info_lines.push_back(line);
        }
        return ok;
    });

    criterion(12, "byte-identical CSV/JSON on repeated commands", [] {
        const std::vector<std::vector<std::string>> cmds = {
            {"sweep-kappa", "1", "99", "--format", "csv"},
            {"sweep-extremal", "2", "64", "--format", "csv"},
            {"sweep-extremal", "2", "64", "--format", "json"},
            {"kappa", "35", "--format", "json"},
            {"verify", "exact-families", "--i", "5..7", "--format", "json"},
            {"verify", "window-17-6", "--i", "10", "--format", "csv"},
            {"conjecture", "6", "--margin", "0", "--format", "csv"},
        };
        for (const auto& cmd : cmds) {
            const std::string a = run_cli(cmd);
            const std::string b = run_cli(cmd);
            if (a != b || a.empty())
                return check(false, "rerun differs for " + cmd[0]);
            auto with_jobs = cmd;
            with_jobs.insert(with_jobs.end(), {"--jobs", "4"});
            if (run_cli(with_jobs) != a)
                return check(false, "--jobs changed bytes for " + cmd[0]);
        }
        return true;
    });

    std::cout << (failures == 0 ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED") << " ("
              << (12 - failures) << "/12)\n";
    return failures;
}
