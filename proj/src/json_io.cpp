#include "antipow/json_io.hpp"

namespace antipow {

using nlohmann::json;

json to_json(const kappa_record& r) {
    return json{{"n", r.n},
                {"kappa", r.kappa},
                {"witness_c", r.witness.first},
                {"witness_cprime", r.witness.second}};
}

kappa_record kappa_record_from_json(const json& j) {
    kappa_record r;
    r.n = j.at("n").get<std::uint64_t>();
    r.kappa = j.at("kappa").get<std::uint64_t>();
    r.witness = {j.at("witness_c").get<std::uint64_t>(),
                 j.at("witness_cprime").get<std::uint64_t>()};
    return r;
}

json to_json(const extremal_record& r) {
    json j{{"k", r.k},
           {"gamma", r.gamma},
           {"complement", r.complement},
           {"cap_used", r.cap_used}};
    j["Gamma"] = r.big_gamma ? json(*r.big_gamma) : json(nullptr);
    return j;
}

extremal_record extremal_record_from_json(const json& j) {
    extremal_record r;
    r.k = j.at("k").get<std::uint64_t>();
    r.gamma = j.at("gamma").get<std::uint64_t>();
    if (!j.at("Gamma").is_null()) r.big_gamma = j.at("Gamma").get<std::uint64_t>();
    r.complement = j.at("complement").get<std::vector<std::uint64_t>>();
    r.cap_used = j.at("cap_used").get<std::uint64_t>();
    return r;
}

json to_json(const kappa_sample& s) {
    json j = to_json(s.record);
    j["ratio_num"] = s.kappa_over_n.num;
    j["ratio_den"] = s.kappa_over_n.den;
    return j;
}

kappa_sample kappa_sample_from_json(const json& j) {
    kappa_sample s;
    s.record = kappa_record_from_json(j);
    s.kappa_over_n = {j.at("ratio_num").get<std::int64_t>(),
                      j.at("ratio_den").get<std::uint64_t>()};
    return s;
}

json to_json(const extremal_sample& s) {
    json j{{"index", s.k},
           {"value_gamma", s.gamma},
           {"ratio_gamma_num", s.gamma_over_k.num},
           {"ratio_gamma_den", s.gamma_over_k.den}};
    if (s.big_gamma) {
        j["value_Gamma"] = *s.big_gamma;
        j["ratio_Gamma_num"] = s.big_gamma_over_k->num;
        j["ratio_Gamma_den"] = s.big_gamma_over_k->den;
        j["ratio_diff_num"] = s.diff_over_k->num;
        j["ratio_diff_den"] = s.diff_over_k->den;
    } else {
        j["value_Gamma"] = nullptr;
        j["ratio_Gamma_num"] = nullptr;
        j["ratio_Gamma_den"] = nullptr;
        j["ratio_diff_num"] = nullptr;
        j["ratio_diff_den"] = nullptr;
    }
    return j;
}

extremal_sample extremal_sample_from_json(const json& j) {
    extremal_sample s;
    s.k = j.at("index").get<std::uint64_t>();
    s.gamma = j.at("value_gamma").get<std::uint64_t>();
    s.gamma_over_k = {j.at("ratio_gamma_num").get<std::int64_t>(),
                      j.at("ratio_gamma_den").get<std::uint64_t>()};
    if (!j.at("value_Gamma").is_null()) {
        s.big_gamma = j.at("value_Gamma").get<std::uint64_t>();
        s.big_gamma_over_k = ratio{j.at("ratio_Gamma_num").get<std::int64_t>(),
                                   j.at("ratio_Gamma_den").get<std::uint64_t>()};
        s.diff_over_k = ratio{j.at("ratio_diff_num").get<std::int64_t>(),
                              j.at("ratio_diff_den").get<std::uint64_t>()};
    }
    return s;
}

json to_json(const dyadic_band& b) {
    json j{{"lo", b.lo},
           {"hi", b.hi},
           {"gamma_min_num", b.gamma_min.num},
           {"gamma_min_den", b.gamma_min.den},
           {"gamma_max_num", b.gamma_max.num},
           {"gamma_max_den", b.gamma_max.den}};
    if (b.big_gamma_min) {
        j["Gamma_min_num"] = b.big_gamma_min->num;
        j["Gamma_min_den"] = b.big_gamma_min->den;
        j["Gamma_max_num"] = b.big_gamma_max->num;
        j["Gamma_max_den"] = b.big_gamma_max->den;
    } else {
        j["Gamma_min_num"] = nullptr;
        j["Gamma_min_den"] = nullptr;
        j["Gamma_max_num"] = nullptr;
        j["Gamma_max_den"] = nullptr;
    }
    if (b.diff_min) {
        j["diff_min_num"] = b.diff_min->num;
        j["diff_min_den"] = b.diff_min->den;
        j["diff_max_num"] = b.diff_max->num;
        j["diff_max_den"] = b.diff_max->den;
    } else {
        j["diff_min_num"] = nullptr;
        j["diff_min_den"] = nullptr;
        j["diff_max_num"] = nullptr;
        j["diff_max_den"] = nullptr;
    }
    return j;
}

json to_json(const conjecture_scan_record& r) {
    return json{{"i", r.i},
                {"margin_num", r.margin.num},
                {"margin_den", r.margin.den},
                {"reference", to_json(r.reference)},
                {"window_first", r.window_first},
                {"window_last", r.window_last},
                {"window_count", r.window_count},
                {"violations", r.violations}};
}

conjecture_scan_record conjecture_scan_record_from_json(const json& j) {
    conjecture_scan_record r;
    r.i = j.at("i").get<unsigned>();
    r.margin = {j.at("margin_num").get<std::uint64_t>(),
                j.at("margin_den").get<std::uint64_t>()};
    r.reference = kappa_record_from_json(j.at("reference"));
    r.window_first = j.at("window_first").get<std::uint64_t>();
    r.window_last = j.at("window_last").get<std::uint64_t>();
    r.window_count = j.at("window_count").get<std::uint64_t>();
    r.violations = j.at("violations").get<std::vector<std::uint64_t>>();
    return r;
}

json to_json(const lemma_case& c) {
    json params = json::array();
    for (const auto& [key, value] : c.params)
        params.push_back(json::array({key, value}));
    json j{{"params", params},
           {"verdict", c.pass ? "pass" : "fail"},
           {"note", c.note}};
    j["counterexample"] = c.counterexample ? to_json(*c.counterexample) : json(nullptr);
    return j;
}

lemma_case lemma_case_from_json(const json& j) {
    lemma_case c;
    for (const auto& p : j.at("params"))
        c.params.emplace_back(p.at(0).get<std::string>(), p.at(1).get<long long>());
    c.pass = j.at("verdict").get<std::string>() == "pass";
    c.note = j.at("note").get<std::string>();
    if (!j.at("counterexample").is_null())
        c.counterexample = kappa_record_from_json(j.at("counterexample"));
    return c;
}

json to_json(const lemma_report& r) {
    json cases = json::array();
    for (const auto& c : r.cases) cases.push_back(to_json(c));
    return json{{"lemma_id", r.lemma_id},
                {"overall", r.overall},
                {"notes", r.notes},
                {"cases", cases}};
}

lemma_report lemma_report_from_json(const json& j) {
    lemma_report r;
    r.lemma_id = j.at("lemma_id").get<std::string>();
    r.overall = j.at("overall").get<bool>();
    r.notes = j.at("notes").get<std::vector<std::string>>();
    for (const auto& c : j.at("cases")) r.cases.push_back(lemma_case_from_json(c));
    return r;
}

} // namespace antipow
