#include "databus/patch.hpp"

#include <map>
#include <stdexcept>
#include <utility>

#include "databus/stabilizer_group.hpp"

namespace databus {

std::size_t planar_patch_qubits(std::size_t distance) {
  return distance * distance + (distance - 1) * (distance - 1);
}

std::size_t PatchSpec::register_size() const {
  return stabilizers.empty() ? 0 : stabilizers.front().size();
}

PauliString PatchSpec::logical_x() const {
  return PauliString::on(register_size(), logical_x_chain, Pauli::X);
}

PauliString PatchSpec::logical_z() const {
  return PauliString::on(register_size(), logical_z_chain, Pauli::Z);
}

PauliString PatchSpec::logical_y() const {
  PauliString y = logical_x() * logical_z();
  y.set_phase_exponent(y.phase_exponent() + 1);
  return y;
}

PauliString PatchSpec::logical(LogicalBasis basis) const {
  switch (basis) {
    case LogicalBasis::X: return logical_x();
    case LogicalBasis::Z: return logical_z();
    case LogicalBasis::Y: return logical_y();
  }
  throw std::invalid_argument("unknown logical basis");
}

PatchSpec make_planar_patch(std::size_t distance, bool rotated, std::size_t offset,
                            std::size_t register_size) {
  if (distance < 2) {
    throw std::invalid_argument("patch distance must be at least 2");
  }
  const std::size_t count = planar_patch_qubits(distance);
  if (offset + count > register_size) {
    throw std::out_of_range("patch does not fit in the register");
  }
  const long side = 2 * static_cast<long>(distance) - 1;

  PatchSpec patch;
  patch.distance = distance;
  patch.rotated = rotated;

  std::map<std::pair<long, long>, std::size_t> site_to_qubit;
  for (long r = 0; r < side; ++r) {
    for (long c = 0; c < side; ++c) {
      if ((r + c) % 2 == 0) {
        const std::size_t q = offset + site_to_qubit.size();
        site_to_qubit[{r, c}] = q;
        patch.data_qubits.push_back(q);
      }
    }
  }

  const Pauli row_even_check = rotated ? Pauli::X : Pauli::Z;
  const Pauli row_odd_check = rotated ? Pauli::Z : Pauli::X;
  // Checks in reading order of their center; matches the printed tables.
  std::vector<std::pair<Pauli, std::vector<std::size_t>>> checks;
  for (long r = 0; r < side; ++r) {
    for (long c = 0; c < side; ++c) {
      if ((r + c) % 2 == 0) continue;
      std::vector<std::size_t> support;
      for (auto [dr, dc] : {std::pair{-1L, 0L}, {0L, -1L}, {0L, 1L}, {1L, 0L}}) {
        auto it = site_to_qubit.find({r + dr, c + dc});
        if (it != site_to_qubit.end()) support.push_back(it->second);
      }
      checks.emplace_back(r % 2 == 0 ? row_even_check : row_odd_check, std::move(support));
    }
  }
  // X-type checks first, then Z-type, as in the printed tables.
  for (Pauli kind : {Pauli::X, Pauli::Z}) {
    for (const auto& [type, support] : checks) {
      if (type == kind) patch.stabilizers.push_back(PauliString::on(register_size, support, type));
    }
  }

  std::vector<std::size_t> bottom_row;
  std::vector<std::size_t> left_column;
  for (long c = 0; c < side; c += 2) bottom_row.push_back(site_to_qubit.at({side - 1, c}));
  for (long r = 0; r < side; r += 2) left_column.push_back(site_to_qubit.at({r, 0}));
  patch.logical_x_chain = rotated ? left_column : bottom_row;
  patch.logical_z_chain = rotated ? bottom_row : left_column;
  return patch;
}

bool patch_is_consistent(const PatchSpec& patch) {
  if (!is_commuting_set(patch.stabilizers)) return false;
  const auto lx = patch.logical_x();
  const auto lz = patch.logical_z();
  for (const auto& s : patch.stabilizers) {
    if (!s.commutes(lx) || !s.commutes(lz)) return false;
  }
  return !lx.commutes(lz) && patch.logical_y().is_hermitian();
}

}  // namespace databus
