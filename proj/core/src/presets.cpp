#include "databus/presets.hpp"

#include <cctype>
#include <stdexcept>

namespace databus {

namespace {

Preset make(std::string key, std::string name, std::int64_t q, std::int64_t a, double volume,
            PublishedRow published) {
  Preset p;
  p.key = std::move(key);
  p.name = std::move(name);
  p.profile.q = q;
  p.profile.a = a;
  p.profile.volume = volume;
  p.published = published;
  return p;
}

std::string fold(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c != ' ' && c != '_' && c != '-') {
      out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
  }
  return out;
}

}  // namespace

const std::vector<Preset>& table1_presets() {
  static const std::vector<Preset> presets = {
      make("q100", "Q100", 100, 50, 1.31e11, {29, 31, 252300, 204800, 0.81, 7.53, 233.58}),
      make("chem54", "Chem 54", 123, 62, 4.59e9, {23, 25, 195730, 167648, 0.86, 0.21, 5.36}),
      make("chem250", "Chem 250", 341, 171, 7.56e11, {29, 31, 861184, 700416, 0.81, 12.7, 394.62}),
      make("shor1024", "Shor 1024", 3082, 1541, 3.27e14,
           {31, 35, 8885406, 7988544, 0.90, std::nullopt, std::nullopt}),
      make("shor4096", "Shor 4096", 12298, 6149, 8.37e16,
           {35, 39, 45195150, 39353600, 0.87, 49100.0, 1916243.0}),
  };
  return presets;
}

const Preset& find_preset(std::string_view name) {
  const auto wanted = fold(name);
  for (const auto& p : table1_presets()) {
    if (fold(p.key) == wanted || fold(p.name) == wanted) return p;
  }
  throw std::out_of_range("unknown preset \"" + std::string(name) + "\"");
}

std::vector<Table1Row> reproduce_table1() {
  std::vector<Table1Row> rows;
  for (const auto& p : table1_presets()) {
    Table1Row row;
    row.preset = &p;
    EstimateOptions forced;
    forced.force_d_wo = p.published.d_wo;
    forced.force_d_with = p.published.d_with;
    row.injected = estimate(p.profile, forced);
    row.pipeline = estimate(p.profile);
    row.residual_wo = p.published.qc_wo - row.injected.qc_wo;
    row.residual_with = p.published.qc_with - row.injected.qc_with;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace databus
