#include "antipow/csv_io.hpp"

#include <sstream>

namespace antipow {

namespace {

std::string quoted(const std::string& field) {
    std::string out = "\"";
    for (char ch : field) {
        if (ch == '"') out += "\"\"";
        else out += ch;
    }
    out += '"';
    return out;
}

} // namespace

void write_kappa_csv(std::ostream& out, const std::vector<kappa_sample>& samples) {
    out << "n,kappa,witness_c,witness_cprime\n";
    for (const auto& s : samples)
        out << s.record.n << ',' << s.record.kappa << ',' << s.record.witness.first
            << ',' << s.record.witness.second << '\n';
}

void write_extremal_csv(std::ostream& out, const std::vector<extremal_sample>& samples) {
    out << "index,value_gamma,value_Gamma,ratio_gamma_num,ratio_gamma_den,"
           "ratio_Gamma_num,ratio_Gamma_den,ratio_diff_num,ratio_diff_den\n";
    for (const auto& s : samples) {
        out << s.k << ',' << s.gamma << ',';
        if (s.big_gamma) out << *s.big_gamma;
        out << ',' << s.gamma_over_k.num << ',' << s.gamma_over_k.den << ',';
        if (s.big_gamma) {
            out << s.big_gamma_over_k->num << ',' << s.big_gamma_over_k->den << ','
                << s.diff_over_k->num << ',' << s.diff_over_k->den;
        } else {
            out << ",,,";
        }
        out << '\n';
    }
}

namespace {

void write_lemma_rows(std::ostream& out, const lemma_report& report) {
    for (const auto& c : report.cases) {
        std::ostringstream params;
        bool first = true;
        for (const auto& [key, value] : c.params) {
            if (!first) params << ' ';
            params << key << '=' << value;
            first = false;
        }
        std::ostringstream cx;
        if (c.counterexample)
            cx << "n:" << c.counterexample->n << ",kappa:" << c.counterexample->kappa
               << ",witness:(" << c.counterexample->witness.first << ','
               << c.counterexample->witness.second << ')';
        out << report.lemma_id << ',' << quoted(params.str()) << ','
            << (c.pass ? "pass" : "fail") << ',' << quoted(c.note) << ','
            << quoted(cx.str()) << '\n';
    }
}

} // namespace

void write_lemma_csv(std::ostream& out, const lemma_report& report) {
    out << "lemma_id,params,verdict,note,counterexample\n";
    write_lemma_rows(out, report);
}

void write_lemma_csv(std::ostream& out, const std::vector<lemma_report>& reports) {
    out << "lemma_id,params,verdict,note,counterexample\n";
    for (const auto& r : reports) write_lemma_rows(out, r);
}

void write_conjecture_csv(std::ostream& out, const conjecture_scan_record& record) {
    out << "n,kappa_le_reference\n";
    if (record.window_count == 0) return;
    std::size_t v = 0;
    for (std::uint64_t n = record.window_first; n <= record.window_last; n += 2) {
        const bool violated = v < record.violations.size() && record.violations[v] == n;
        if (violated) ++v;
        out << n << ',' << (violated ? 0 : 1) << '\n';
    }
}

} // namespace antipow
