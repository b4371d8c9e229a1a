#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hypsys/verifier.hpp"

// Report documents for the CLI: deterministic JSON / CSV / plain-text
// renderings of sweep records and oracle results. Identical inputs and
// version produce byte-identical output, apart from the timestamp field,
// which the deterministic flag removes.

namespace hypsys::report {

struct VerifyReport {
    std::string version;
    std::string command;
    std::vector<std::pair<std::string, std::string>> params;
    std::string timestamp;  // empty when deterministic
    std::vector<verifier::MarginRecord> records;
};

std::string iso_timestamp_utc();

// 12 significant digits, the report-wide numeric format.
std::string format_double(double x);

nlohmann::ordered_json record_to_json(const verifier::MarginRecord& r);
verifier::MarginRecord record_from_json(const nlohmann::ordered_json& j);

nlohmann::ordered_json to_json(const VerifyReport& rep);
VerifyReport verify_report_from_json(const std::string& text);

std::string to_csv(const VerifyReport& rep);
std::vector<verifier::MarginRecord> records_from_csv(const std::string& text);

// Plain-text rendering: one line per summary plus any non-passing records.
std::string human_verify(const VerifyReport& rep,
                         const std::vector<verifier::SweepSummary>& summaries);

}  // namespace hypsys::report
