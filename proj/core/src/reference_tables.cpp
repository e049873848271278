#include "databus/reference_tables.hpp"

#include <algorithm>
#include <stdexcept>

#include "databus/stabilizer_group.hpp"

namespace databus {

namespace detail {
const std::vector<std::pair<std::string_view, std::string_view>>& embedded_tables();
}

std::vector<std::string_view> reference_table_names() {
  std::vector<std::string_view> names;
  for (const auto& [name, text] : detail::embedded_tables()) names.push_back(name);
  return names;
}

std::vector<PauliString> reference_table(std::string_view name) {
  for (const auto& [n, text] : detail::embedded_tables()) {
    if (n == name) return parse_generators(text);
  }
  throw std::out_of_range("no reference table named " + std::string(name));
}

std::vector<TableScenario> table_scenarios() {
  const PatchRequest x_std{2, false, LogicalBasis::X};
  const PatchRequest z_rot{2, true, LogicalBasis::Z};
  const PatchRequest y_rot{2, true, LogicalBasis::Y};
  return {
      {"xx_check_after", "XX check, two d=2 patches, after the CNOTs", {x_std, x_std}, 2, true},
      {"xz_check_before", "XZ check with a mixed-basis bus, before the CNOTs", {x_std, z_rot}, 0,
       true},
      {"xz_check_after", "XZ check with a mixed-basis bus, after the CNOTs", {x_std, z_rot}, 2,
       true},
      {"y_measure_before", "Y measurement, before the CNOTs", {y_rot}, 0, false},
      {"y_measure_first_layer", "Y measurement, after the first CNOT set", {y_rot}, 1, true},
      {"y_measure_after", "Y measurement, after both CNOT sets", {y_rot}, 2, true},
  };
}

std::vector<PauliString> simulate_scenario(const TableScenario& scenario) {
  const auto setup = make_setup(scenario.patches);
  auto group = bus_and_patch_group(setup);
  const auto schedule = attachment_schedule(setup.bus, AttachOrder::Standard);
  if (scenario.layers > schedule.size()) {
    throw std::invalid_argument("scenario asks for more layers than attachments");
  }
  for (std::size_t i = 0; i < scenario.layers; ++i) apply_attachment(group, setup, schedule[i]);
  return canonical_form(group.generators());
}

bool in_group(std::span<const PauliString> gens, const PauliString& g) {
  if (!g.is_hermitian()) return false;
  for (const auto& h : gens) {
    if (!h.commutes(g)) return false;
  }
  std::vector<PauliString> extended(gens.begin(), gens.end());
  extended.push_back(g);
  try {
    return canonical_form(extended).size() == canonical_form(gens).size();
  } catch (const std::invalid_argument&) {
    return false;  // -g is in the group
  }
}

}  // namespace databus
