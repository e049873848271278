#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "databus/pauli_string.hpp"
#include "databus/protocol.hpp"

namespace databus {

/// Names of the bundled stabilizer tables (core/data/tables/*.stab).
std::vector<std::string_view> reference_table_names();

/// Parsed generators of a bundled table; throws std::out_of_range for an
/// unknown name.
std::vector<PauliString> reference_table(std::string_view name);

/// A bundled table together with the simulation that should reproduce it.
struct TableScenario {
  std::string name;
  std::string description;
  std::vector<PatchRequest> patches;
  /// Number of scheduled transversal layers applied before comparing.
  std::size_t layers = 0;
  /// One of the published tables (as opposed to a supporting fixture).
  bool printed = true;
};

/// XX check table, mixed-basis tables before and after the CNOTs, and the
/// Y-measurement tables (pre, after the first CNOT set, after both).
std::vector<TableScenario> table_scenarios();

/// Simulated group for a scenario: GHZ prep on the bus, patch stabilizers,
/// then `layers` scheduled transversal layers; returned in canonical form.
std::vector<PauliString> simulate_scenario(const TableScenario& scenario);

/// True when `g` is an element of the signed group generated by `gens`.
bool in_group(std::span<const PauliString> gens, const PauliString& g);

}  // namespace databus
