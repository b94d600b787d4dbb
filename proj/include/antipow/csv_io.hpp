#ifndef ANTIPOW_CSV_IO_HPP
#define ANTIPOW_CSV_IO_HPP

#include <ostream>
#include <vector>

#include "antipow/asymptotics.hpp"
#include "antipow/lemma_verify.hpp"

namespace antipow {

// Columns: n,kappa,witness_c,witness_cprime
void write_kappa_csv(std::ostream& out, const std::vector<kappa_sample>& samples);

// Columns: index,value_gamma,value_Gamma,ratio_gamma_num,ratio_gamma_den,
//          ratio_Gamma_num,ratio_Gamma_den,ratio_diff_num,ratio_diff_den
// Absent Gamma leaves its cells empty.
void write_extremal_csv(std::ostream& out, const std::vector<extremal_sample>& samples);

// Columns: lemma_id,params,verdict,note,counterexample
void write_lemma_csv(std::ostream& out, const lemma_report& report);
void write_lemma_csv(std::ostream& out, const std::vector<lemma_report>& reports);

// Columns: n,kappa_le_reference
void write_conjecture_csv(std::ostream& out, const conjecture_scan_record& record);

} // namespace antipow

#endif
