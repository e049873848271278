#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "databus/presets.hpp"
#include "databus/protocol.hpp"
#include "databus/tradeoff.hpp"

namespace databus {

using Json = nlohmann::ordered_json;

/// Fixed CSV column order.
inline constexpr const char* kCsvHeader =
    "scale,d_wo,d_with,qc_wo,qc_with,improvement,hours_wo,hours_with,safety_wo,safety_with";

Json to_json(const ComputationProfile& profile);
Json to_json(const TradeoffReport& report);
Json to_json(const SweepResult& sweep);
Json to_json(const Preset& preset);
Json to_json(const CounterexampleReport& report);
Json to_json(const ParityResult& result);
Json presets_json();
Json table1_json(const std::vector<Table1Row>& rows);

/// {"profile": ..., "report": ...}; shared by the CLI and the service.
Json estimate_json(const ComputationProfile& profile, const TradeoffReport& report);
/// {"profile": ..., "points": [...], "bins": [...]}.
Json sweep_json(const ComputationProfile& profile, const SweepResult& sweep);

/// Shortest round-trip decimal form, independent of the global locale.
std::string format_number(double value);

std::string csv_row(double scale, const TradeoffReport& report);
std::string to_csv(const TradeoffReport& report);
std::string to_csv(const SweepResult& sweep);

/// Aligned plain-text renderings for terminals.
std::string to_table(const TradeoffReport& report);
std::string to_table(const SweepResult& sweep);
std::string table1_text(const std::vector<Table1Row>& rows);
std::string counterexample_text(const CounterexampleReport& report);

}  // namespace databus
