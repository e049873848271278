#include "databus/stabilizer_group.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "databus/stabilizer_tableau.hpp"

namespace databus {

StabilizerGroup::StabilizerGroup(std::size_t num_qubits, std::vector<PauliString> generators)
    : num_qubits_(num_qubits) {
  for (auto& g : generators) add(std::move(g));
}

StabilizerGroup StabilizerGroup::from_tableau(const StabilizerTableau& tableau) {
  return StabilizerGroup(tableau.size(), tableau.stabilizers());
}

void StabilizerGroup::add(PauliString generator) {
  if (generator.size() != num_qubits_) {
    throw std::invalid_argument("generator " + generator.str() + " does not have " +
                                std::to_string(num_qubits_) + " qubits");
  }
  generators_.push_back(std::move(generator));
}

void StabilizerGroup::apply_cnot(std::size_t control, std::size_t target) {
  if (control >= num_qubits_ || target >= num_qubits_) {
    throw std::out_of_range("CNOT qubit out of range");
  }
  for (auto& g : generators_) g.apply_cnot(control, target);
}

void StabilizerGroup::apply_h(std::size_t qubit) {
  if (qubit >= num_qubits_) {
    throw std::out_of_range("H qubit out of range");
  }
  for (auto& g : generators_) g.apply_h(qubit);
}

bool is_commuting_set(std::span<const PauliString> generators) {
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (!generators[i].is_hermitian()) return false;
    for (std::size_t j = i + 1; j < generators.size(); ++j) {
      if (!generators[i].commutes(generators[j])) return false;
    }
  }
  return true;
}

namespace {

using ColumnBit = std::function<bool(const PauliString&)>;

// Gauss-Jordan elimination over the given column order. Returns the rank;
// rows [0, rank) hold one pivot each, in column order.
std::size_t eliminate(std::vector<PauliString>& rows, const std::vector<ColumnBit>& columns) {
  std::size_t rank = 0;
  for (const auto& bit : columns) {
    auto it = std::find_if(rows.begin() + static_cast<std::ptrdiff_t>(rank), rows.end(), bit);
    if (it == rows.end()) continue;
    std::iter_swap(rows.begin() + static_cast<std::ptrdiff_t>(rank), it);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i != rank && bit(rows[i])) rows[i] *= rows[rank];
    }
    ++rank;
  }
  return rank;
}

std::vector<ColumnBit> symplectic_columns(std::span<const std::size_t> qubits) {
  std::vector<ColumnBit> columns;
  columns.reserve(2 * qubits.size());
  for (auto q : qubits) columns.emplace_back([q](const PauliString& p) { return p.x(q); });
  for (auto q : qubits) columns.emplace_back([q](const PauliString& p) { return p.z(q); });
  return columns;
}

void validate(std::span<const PauliString> generators) {
  if (generators.empty()) return;
  const std::size_t n = generators.front().size();
  for (const auto& g : generators) {
    if (g.size() != n) {
      throw std::invalid_argument("generators have mismatched qubit counts");
    }
  }
  if (!is_commuting_set(generators)) {
    throw std::invalid_argument("generators are not a commuting set of Hermitian Paulis");
  }
}

void drop_identities(std::vector<PauliString>& rows, std::size_t rank) {
  for (std::size_t i = rank; i < rows.size(); ++i) {
    if (rows[i].phase_exponent() != 0) {
      throw std::invalid_argument("generators produce -I; no state has this stabilizer group");
    }
  }
  rows.resize(rank);
}

}  // namespace

std::vector<PauliString> canonical_form(std::span<const PauliString> generators) {
  validate(generators);
  std::vector<PauliString> rows(generators.begin(), generators.end());
  if (rows.empty()) return rows;
  std::vector<std::size_t> all(rows.front().size());
  for (std::size_t q = 0; q < all.size(); ++q) all[q] = q;
  const std::size_t rank = eliminate(rows, symplectic_columns(all));
  drop_identities(rows, rank);
  return rows;
}

std::vector<PauliString> canonical_form(const StabilizerTableau& tableau) {
  return canonical_form(tableau.stabilizers());
}

bool group_equals(std::span<const PauliString> a, std::span<const PauliString> b) {
  if (!a.empty() && !b.empty() && a.front().size() != b.front().size()) {
    throw std::invalid_argument("cannot compare groups on " + std::to_string(a.front().size()) +
                                " and " + std::to_string(b.front().size()) + " qubits");
  }
  return canonical_form(a) == canonical_form(b);
}

std::vector<PauliString> restrict_to(std::span<const PauliString> generators,
                                     std::span<const std::size_t> keep) {
  validate(generators);
  if (generators.empty()) return {};
  const std::size_t n = generators.front().size();
  std::vector<bool> kept(n, false);
  for (auto q : keep) {
    if (q >= n) throw std::out_of_range("kept qubit out of range");
    kept[q] = true;
  }
  std::vector<std::size_t> dropped;
  for (std::size_t q = 0; q < n; ++q) {
    if (!kept[q]) dropped.push_back(q);
  }
  std::vector<PauliString> rows(generators.begin(), generators.end());
  const std::size_t rank = eliminate(rows, symplectic_columns(dropped));
  std::vector<PauliString> subgroup;
  for (std::size_t i = rank; i < rows.size(); ++i) {
    subgroup.push_back(rows[i].select(keep));
  }
  return canonical_form(subgroup);
}

std::vector<PauliString> parse_generators(std::string_view text) {
  std::vector<PauliString> result;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) continue;
    const auto last = line.find_last_not_of(" \t\r");
    result.push_back(PauliString::parse(line.substr(first, last - first + 1)));
    if (result.back().size() != result.front().size()) {
      throw std::invalid_argument("generator \"" + result.back().str() +
                                  "\" has a different length than the first generator");
    }
  }
  return result;
}

std::string format_generators(std::span<const PauliString> generators) {
  std::string out;
  for (const auto& g : generators) {
    out += g.str();
    out += '\n';
  }
  return out;
}

}  // namespace databus
