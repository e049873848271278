#include "databus/layout.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace databus {

namespace {

void require_positive(std::int64_t v, const char* name) {
  if (v < 1) throw std::invalid_argument(std::string(name) + " must be positive");
}

}  // namespace

std::int64_t patch_tile(std::int64_t d, LayoutVariant variant) {
  require_positive(d, "distance");
  return (variant == LayoutVariant::TableModel ? 2 : 4) * d * d;
}

std::int64_t bus_qubits(std::int64_t q, std::int64_t d) {
  require_positive(q, "data patch count");
  require_positive(d, "distance");
  return 2 * q * (2 * d + 1);
}

std::int64_t qc_without_bus(std::int64_t q, std::int64_t a, std::int64_t d, LayoutVariant variant) {
  require_positive(q, "data patch count");
  require_positive(a, "ancilla patch count");
  return patch_tile(d, variant) * (q + a);
}

std::int64_t qc_with_bus(std::int64_t q, std::int64_t d, LayoutVariant variant) {
  return patch_tile(d, variant) * q + bus_qubits(q, d);
}

WorstCase worstcase_total(std::int64_t q, std::int64_t d) {
  const std::int64_t b = bus_qubits(q, d);
  return {b, patch_tile(d, LayoutVariant::WorstCaseTile) * q + b};
}

std::int64_t nisq_counts(std::int64_t d, bool with_bus) {
  if (d < 2) throw std::invalid_argument("distance must be at least 2");
  if (with_bus) return 2 * (2 * d * d - 1) + 7 * d;
  if (d == 2) return 77;
  if (d == 3) return 151;
  throw std::invalid_argument("no reference layout without a bus for d = " + std::to_string(d));
}

BusPath rotated_bus_path(std::int64_t rows, std::int64_t cols, std::int64_t d) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("patch grid needs at least one row and column");
  if (rows * cols < 2) throw std::invalid_argument("a bus needs at least two patches");
  if (d < 2) throw std::invalid_argument("distance must be at least 2");

  const std::int64_t pitch = 2 * d + 2;
  const std::int64_t width = cols * pitch;

  // Data-line sites first; consecutive entries are two steps apart.
  std::vector<GridSite> spine;
  for (std::int64_t g = 0; g <= rows; ++g) {
    const std::int64_t y = g * pitch;
    const bool rightward = g % 2 == 0;
    for (std::int64_t k = 0; k <= width; k += 2) spine.push_back({y, rightward ? k : width - k});
    if (g == rows) break;
    const std::int64_t x = rightward ? width : 0;
    for (std::int64_t dy = 2; dy < pitch; dy += 2) spine.push_back({y + dy, x});
  }

  BusPath path{rows, cols, d, {}};
  path.sites.push_back(spine.front());
  bool upper = true;
  for (std::size_t i = 1; i < spine.size(); ++i) {
    const GridSite a = spine[i - 1];
    const GridSite b = spine[i];
    const GridSite mid{(a.y + b.y) / 2, (a.x + b.x) / 2};
    const bool horizontal = a.y == b.y;
    auto offset = [&](bool side) {
      const std::int64_t s = side ? -1 : 1;
      return horizontal ? GridSite{mid.y + s, mid.x} : GridSite{mid.y, mid.x + s};
    };
    GridSite m = offset(upper);
    if (std::find(path.sites.begin(), path.sites.end(), m) != path.sites.end()) m = offset(!upper);
    path.sites.push_back(m);
    path.sites.push_back(b);
    upper = !upper;
  }
  return path;
}

int patch_contacts(const BusPath& path, std::int64_t row, std::int64_t col) {
  if (row < 0 || row >= path.rows || col < 0 || col >= path.cols) {
    throw std::out_of_range("patch index outside the grid");
  }
  const std::int64_t pitch = 2 * path.d + 2;
  const std::int64_t top = row * pitch + 2;
  const std::int64_t left = col * pitch + 2;
  const std::int64_t span = 2 * (path.d - 1);
  bool north = false, south = false, west = false, east = false;
  for (const auto& s : path.sites) {
    for (std::int64_t k = 0; k <= span; k += 2) {
      auto touches = [&](std::int64_t y, std::int64_t x) {
        return std::abs(s.y - y) == 1 && std::abs(s.x - x) == 1;
      };
      north = north || touches(top, left + k);
      south = south || touches(top + span, left + k);
      west = west || touches(top + k, left);
      east = east || touches(top + k, left + span);
    }
  }
  return int{north} + int{south} + int{west} + int{east};
}

}  // namespace databus
