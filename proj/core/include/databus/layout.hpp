#pragma once

#include <cstdint>
#include <vector>

namespace databus {

/// Physical qubits per logical patch: 2d^2 (TableModel, rotated patches with
/// their measure qubits) or 4d^2 (WorstCaseTile).
enum class LayoutVariant : std::uint8_t { TableModel, WorstCaseTile };

/// All counts below reject non-positive arguments with std::invalid_argument.
std::int64_t patch_tile(std::int64_t d, LayoutVariant variant = LayoutVariant::TableModel);

/// Bus qubits serving Q data patches: one data and one syndrome qubit along
/// each of two sides of every patch, 2Q(2d+1).
std::int64_t bus_qubits(std::int64_t q, std::int64_t d);

std::int64_t qc_without_bus(std::int64_t q, std::int64_t a, std::int64_t d,
                            LayoutVariant variant = LayoutVariant::TableModel);
std::int64_t qc_with_bus(std::int64_t q, std::int64_t d,
                         LayoutVariant variant = LayoutVariant::TableModel);

struct WorstCase {
  std::int64_t bus = 0;    // B
  std::int64_t total = 0;  // T = 4d^2 Q + B
};
WorstCase worstcase_total(std::int64_t q, std::int64_t d);

/// Two-patch experiment. With the bus: two rotated patches, 2(2d^2 - 1), plus a
/// 7d-qubit ring, for any d >= 2. Without: the reference layouts, 77 qubits at
/// d = 2 and 151 at d = 3; other d throw.
std::int64_t nisq_counts(std::int64_t d, bool with_bus);

/// A lattice site in doubled coordinates: patch data qubits sit at even/even
/// positions, measure qubits at odd/odd.
struct GridSite {
  std::int64_t y = 0;
  std::int64_t x = 0;
  bool operator==(const GridSite&) const = default;
};

/// Zig-zag GHZ chain through the merge sites around a rows x cols grid of
/// rotated distance-d patches.
///
/// Patch (r, c) has data qubits at y = r*S + 2 + 2i, x = c*S + 2 + 2j with
/// pitch S = 2d + 2, which leaves one data line between neighbours. The chain
/// runs along every horizontal gap line (above, between and below the patch
/// rows), turning down alternately at the right and left edge, so it snakes
/// through the whole grid. Data-line sites alternate with measure sites that
/// sit on alternating sides of the line.
struct BusPath {
  std::int64_t rows = 0;
  std::int64_t cols = 0;
  std::int64_t d = 0;
  std::vector<GridSite> sites;
};

/// Throws std::invalid_argument for rows or cols < 1, d < 2, or a 1 x 1 grid.
BusPath rotated_bus_path(std::int64_t rows, std::int64_t cols, std::int64_t d);

/// Number of patch sides (N, S, E, W) with a chain site diagonally adjacent to
/// one of the patch's boundary data qubits.
int patch_contacts(const BusPath& path, std::int64_t row, std::int64_t col);

}  // namespace databus
