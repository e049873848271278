#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "databus/pauli_string.hpp"

namespace databus {

class StabilizerTableau;

/// A list of commuting Pauli generators, not necessarily n of them: the
/// stabilizer group of a possibly mixed state. Supports the same Clifford
/// conjugations as the tableau, which makes it the natural target for
/// reproducing printed stabilizer tables where logical qubits are left free.
class StabilizerGroup {
 public:
  explicit StabilizerGroup(std::size_t num_qubits) : num_qubits_(num_qubits) {}
  StabilizerGroup(std::size_t num_qubits, std::vector<PauliString> generators);
  static StabilizerGroup from_tableau(const StabilizerTableau& tableau);

  std::size_t size() const { return num_qubits_; }
  const std::vector<PauliString>& generators() const { return generators_; }
  void add(PauliString generator);

  void apply_cnot(std::size_t control, std::size_t target);
  void apply_h(std::size_t qubit);

 private:
  std::size_t num_qubits_;
  std::vector<PauliString> generators_;
};

/// True when every generator is Hermitian and all pairs commute.
bool is_commuting_set(std::span<const PauliString> generators);

/// Reduced row-echelon form of the generated group over the symplectic matrix.
/// Pivot columns run X block first (qubit 0..n-1), then Z block; every pivot
/// column is cleared in all other rows and redundant generators are dropped.
/// Two generator lists produce identical output iff they generate the same
/// signed group. Throws std::invalid_argument if the generators do not commute
/// or generate -I.
std::vector<PauliString> canonical_form(std::span<const PauliString> generators);
std::vector<PauliString> canonical_form(const StabilizerTableau& tableau);

/// Throws std::invalid_argument when the generator sizes differ.
bool group_equals(std::span<const PauliString> a, std::span<const PauliString> b);

/// The subgroup acting as identity outside `keep`, re-indexed onto `keep`
/// (in the given order) and returned in canonical form.
std::vector<PauliString> restrict_to(std::span<const PauliString> generators,
                                     std::span<const std::size_t> keep);

/// One generator per line ("-XZIIY"); blank lines and '#' comments are skipped.
std::vector<PauliString> parse_generators(std::string_view text);
std::string format_generators(std::span<const PauliString> generators);

}  // namespace databus
