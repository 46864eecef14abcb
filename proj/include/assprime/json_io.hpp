#pragma once

#include "json.hpp"

#include "assprime/ass_engine.hpp"
#include "assprime/monomial_ideal.hpp"
#include "assprime/named_examples.hpp"
#include "assprime/persistence.hpp"
#include "assprime/sum_theorems.hpp"

namespace assprime {

// Canonical JSON views of the report types.  Prime supports serialize as
// arrays of variable names in ring order; sets of supports as sorted
// arrays of those; nlohmann objects keep keys sorted, so serialization is
// byte-stable.
nlohmann::json json_of(const PrimeSupport& p);
nlohmann::json json_of(const SupportSet& set);
nlohmann::json json_of(const MonomialIdeal& I);
nlohmann::json json_of(const AssProfile& profile);
nlohmann::json json_of(const SumAssReport& report);
nlohmann::json json_of(const AsymptoticReport& report);
nlohmann::json json_of(const PersistenceReport& report);
nlohmann::json json_of(const RatliffRushReport& report);
nlohmann::json json_of(const EquivalenceReport& report);
nlohmann::json json_of(const TransferReport& report);
nlohmann::json json_of(const NamedExampleReport& report);

} // namespace assprime
