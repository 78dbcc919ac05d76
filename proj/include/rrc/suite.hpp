#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "rrc/generators.hpp"

namespace rrc {

/// One verification check. Laws quantified over all domains are exercised at
/// witness level only; `kind` records which reading applies:
///   property          - sampled/enumerated law, zero failures required
///   witness           - fixed named computation with pinned expected values
///   expected-failure  - the law must break here and a witness must be found
struct CheckResult {
    std::string name;
    std::string law;
    std::string kind;
    long cases = 0;
    long failures = 0;
    std::string counterexample;  // first failing input, replayable
    std::string witness;         // found witness or informational note
    bool pass = false;
    long long elapsed_ms = 0;
};

struct SuiteReport {
    std::uint64_t seed = 0;
    int cases = 0;
    std::vector<std::string> groups;
    std::vector<CheckResult> checks;  // sorted by name
    bool pass = false;
};

SuiteReport run_paper_suite(const GeneratorConfig& cfg);

std::string report_to_text(const SuiteReport& rep);
nlohmann::json report_to_json(const SuiteReport& rep);

// Timing fields zeroed; what reproducibility and golden-file tests compare.
nlohmann::json normalized_report_json(const SuiteReport& rep);

}  // namespace rrc
