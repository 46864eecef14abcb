#pragma once

#include <optional>
#include <string>
#include <vector>

namespace assprime {

struct MembershipFact {
    std::string description;
    bool expected = false;
    bool actual = false;
};

// Outcome of one registered polynomial instance: a batch of ideal
// membership verdicts compared against their registered expectations.
struct NamedExampleReport {
    std::string name;
    std::string instance; // human summary of the ring, ideal, and polynomial
    long long characteristic = 0;
    // True when the prime stands in for characteristic zero; such runs
    // carry a "char-proxy" caveat in reports.
    bool char_proxy = false;
    int dmax = 0;
    std::vector<MembershipFact> facts;
    std::optional<int> generator_count; // minimal generators, when counted
    std::optional<int> expected_generator_count;
    bool all_pass = false;
};

std::vector<std::string> named_example_ids();

// Runs a registered instance, optionally overriding the registered
// characteristic or truncation degree.  Unknown names are rejected.
NamedExampleReport run_named_example(const std::string& name,
                                     std::optional<long long> char_override,
                                     std::optional<int> dmax_override);

} // namespace assprime
