#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "databus/tradeoff.hpp"

namespace databus {

/// Published numbers for one column of the comparison table.
struct PublishedRow {
  int d_wo = 0;
  int d_with = 0;
  std::int64_t qc_wo = 0;
  std::int64_t qc_with = 0;
  double improvement = 0.0;
  std::optional<double> hours_wo;
  std::optional<double> hours_with;
};

struct Preset {
  std::string key;   // "shor1024"
  std::string name;  // "Shor 1024"
  ComputationProfile profile;
  PublishedRow published;
};

/// Q100, Chem 54, Chem 250, Shor 1024, Shor 4096 with p = 0.001, epsilon = 0.01.
const std::vector<Preset>& table1_presets();

/// Matches key or display name, ignoring case and spaces; throws std::out_of_range.
const Preset& find_preset(std::string_view name);

struct Table1Row {
  const Preset* preset = nullptr;
  /// Qubit counts and hours with the published distances forced.
  TradeoffReport injected;
  /// Distances from the estimator defaults.
  TradeoffReport pipeline;
  /// published - computed, with published distances.
  std::int64_t residual_wo = 0;
  std::int64_t residual_with = 0;
  bool exact() const { return residual_wo == 0 && residual_with == 0; }
};

std::vector<Table1Row> reproduce_table1();

/// Large-scale layout with 4096 data and 2048 routing patches at distances
/// 23 (no bus) and 25 (bus): published 6500352 and 5537792 qubits.
struct LargeScaleReference {
  std::int64_t q = 4096;
  std::int64_t a = 2048;
  int d_wo = 23;
  int d_with = 25;
  std::int64_t qc_wo = 6500352;
  std::int64_t qc_with = 5537792;
};

}  // namespace databus
