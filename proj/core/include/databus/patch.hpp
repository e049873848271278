#pragma once

#include <cstddef>
#include <vector>

#include "databus/pauli_string.hpp"

namespace databus {

enum class LogicalBasis : std::uint8_t { X, Z, Y };

/// An unrotated planar-code patch placed on a larger register.
///
/// Data qubits sit on the even sites (r + c even) of a (2d-1) x (2d-1) grid,
/// numbered row-major. In the standard orientation Z checks sit on
/// (even row, odd column) and X checks on (odd row, even column); a rotated
/// patch (turned by 90 degrees) swaps the two check types. For d = 2 the
/// standard patch has stabilizers X1X3X4, X2X3X5, Z1Z2Z3, Z3Z4Z5.
struct PatchSpec {
  std::size_t distance = 0;
  bool rotated = false;
  std::vector<std::size_t> data_qubits;
  std::vector<PauliString> stabilizers;
  /// Bottom row in the standard orientation, left column when rotated.
  std::vector<std::size_t> logical_x_chain;
  /// Left column in the standard orientation, bottom row when rotated.
  std::vector<std::size_t> logical_z_chain;

  std::size_t register_size() const;
  PauliString logical_x() const;
  PauliString logical_z() const;
  /// i * X_L * Z_L; Hermitian because the chains overlap on one qubit.
  PauliString logical_y() const;
  PauliString logical(LogicalBasis basis) const;
};

std::size_t planar_patch_qubits(std::size_t distance);

/// Builds a distance-d planar patch on qubits [offset, offset + d^2 + (d-1)^2)
/// of a `register_size`-qubit register. Throws for d < 2 or if it does not fit.
PatchSpec make_planar_patch(std::size_t distance, bool rotated, std::size_t offset,
                            std::size_t register_size);

/// Checks the stabilizers commute, each logical chain commutes with every
/// stabilizer, and the X and Z chains anticommute.
bool patch_is_consistent(const PatchSpec& patch);

}  // namespace databus
