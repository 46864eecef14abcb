#include "assprime/json_io.hpp"

namespace assprime {

using nlohmann::json;

json json_of(const PrimeSupport& p) { return json(p.names()); }

json json_of(const SupportSet& set) {
    json out = json::array();
    for (const auto& p : set) out.push_back(json_of(p));
    return out;
}

json json_of(const MonomialIdeal& I) {
    json gens = json::array();
    for (const auto& g : I.gens()) gens.push_back(to_string(g, I.ring()));
    return json{{"ring", I.ring().names()}, {"generators", gens}};
}

json json_of(const AssProfile& profile) {
    json ring_quotients = json::array();
    for (const auto& s : profile.ass_ring_quotients)
        ring_quotients.push_back(json_of(s));
    json consecutive = json::array();
    for (const auto& s : profile.ass_consecutive)
        consecutive.push_back(json_of(s));
    return json{
        {"ideal", json_of(profile.ideal)},
        {"max_n", profile.max_n},
        {"ass_ring_quotients", ring_quotients},
        {"ass_consecutive", consecutive},
        {"astab_window", profile.astab_window ? json(*profile.astab_window)
                                              : json(nullptr)},
    };
}

json json_of(const SumAssReport& report) {
    return json{
        {"n", report.n},
        {"lower_bound", json_of(report.lower_bound)},
        {"upper_bound", json_of(report.upper_bound)},
        {"formula_value", json_of(report.formula_value)},
        {"direct_value", json_of(report.direct_value)},
        {"match", report.match},
    };
}

json json_of(const AsymptoticReport& report) {
    return json{
        {"window", report.window},
        {"astab_left",
         report.astab_left ? json(*report.astab_left) : json(nullptr)},
        {"astab_right",
         report.astab_right ? json(*report.astab_right) : json(nullptr)},
        {"threshold",
         report.threshold ? json(*report.threshold) : json(nullptr)},
        {"conclusive", report.conclusive},
        {"asymptotic_set", json_of(report.asymptotic_set)},
        {"verified_from", report.verified_from},
        {"verified_to", report.verified_to},
        {"matches_direct", report.matches_direct},
    };
}

json json_of(const PersistenceReport& report) {
    json failure(nullptr);
    if (report.first_failure)
        failure = json{{"n", report.first_failure->first},
                       {"witness", json_of(report.first_failure->second)}};
    return json{
        {"ideal", json_of(report.ideal)},
        {"max_n", report.max_n},
        {"inclusions", report.inclusions},
        {"first_failure", failure},
        {"passed", report.passed()},
    };
}

json json_of(const RatliffRushReport& report) {
    return json{
        {"closure", json_of(report.closure)},
        {"stabilized_at", report.stabilized_at},
        {"cap_hit", report.cap_hit},
    };
}

json json_of(const EquivalenceReport& report) {
    return json{
        {"ideal", json_of(report.ideal)},
        {"max_n", report.max_n},
        {"colon_stable", report.colon_stable},
        {"colon_meet_stable", report.colon_meet_stable},
        {"ratliff_rush_closed", report.ratliff_rush_closed},
        {"verdicts_agree", report.verdicts_agree},
        {"implication_holds", report.implication_holds},
        {"omitted", "depth of the associated graded ring is not computed"},
    };
}

json json_of(const TransferReport& report) {
    const char* status = "passed";
    if (report.status == TransferStatus::hypothesis_not_met)
        status = "hypothesis-not-met";
    else if (report.status == TransferStatus::theorem_violation)
        status = "theorem-violation";
    return json{
        {"status", status},
        {"left", json_of(report.left)},
        {"sum_inclusions", report.sum_inclusions},
    };
}

json json_of(const NamedExampleReport& report) {
    json facts = json::array();
    for (const auto& fact : report.facts)
        facts.push_back(json{{"description", fact.description},
                             {"expected", fact.expected},
                             {"actual", fact.actual}});
    return json{
        {"name", report.name},
        {"instance", report.instance},
        {"characteristic", report.characteristic},
        {"char_proxy", report.char_proxy},
        {"dmax", report.dmax},
        {"facts", facts},
        {"generator_count", report.generator_count
                                ? json(*report.generator_count)
                                : json(nullptr)},
        {"expected_generator_count", report.expected_generator_count
                                         ? json(*report.expected_generator_count)
                                         : json(nullptr)},
        {"all_pass", report.all_pass},
    };
}

} // namespace assprime
