#ifndef ANTIPOW_JSON_IO_HPP
#define ANTIPOW_JSON_IO_HPP

#include <json.hpp>

#include "antipow/asymptotics.hpp"
#include "antipow/extremal.hpp"
#include "antipow/kappa.hpp"
#include "antipow/lemma_verify.hpp"

namespace antipow {

nlohmann::json to_json(const kappa_record& r);
kappa_record kappa_record_from_json(const nlohmann::json& j);

nlohmann::json to_json(const extremal_record& r);
extremal_record extremal_record_from_json(const nlohmann::json& j);

nlohmann::json to_json(const kappa_sample& s);
kappa_sample kappa_sample_from_json(const nlohmann::json& j);

nlohmann::json to_json(const extremal_sample& s);
extremal_sample extremal_sample_from_json(const nlohmann::json& j);

nlohmann::json to_json(const dyadic_band& b);

nlohmann::json to_json(const conjecture_scan_record& r);
conjecture_scan_record conjecture_scan_record_from_json(const nlohmann::json& j);

nlohmann::json to_json(const lemma_case& c);
lemma_case lemma_case_from_json(const nlohmann::json& j);

nlohmann::json to_json(const lemma_report& r);
lemma_report lemma_report_from_json(const nlohmann::json& j);

} // namespace antipow

#endif
