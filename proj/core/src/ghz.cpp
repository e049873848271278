#include "databus/ghz.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "databus/stabilizer_tableau.hpp"

namespace databus {

namespace {

std::vector<SegmentBasis> segment_bases(std::size_t n_data, std::span<const Segment> segments) {
  std::vector<Segment> sorted(segments.begin(), segments.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const Segment& a, const Segment& b) { return a.begin < b.begin; });
  std::vector<SegmentBasis> basis;
  basis.reserve(n_data);
  std::size_t next = 0;
  for (const auto& s : sorted) {
    if (s.begin != next || s.end <= s.begin) {
      throw std::invalid_argument("segments must be non-empty and partition the chain");
    }
    for (std::size_t i = s.begin; i < s.end; ++i) basis.push_back(s.basis);
    next = s.end;
  }
  if (next != n_data) {
    throw std::invalid_argument("segments cover " + std::to_string(next) + " of " +
                                std::to_string(n_data) + " data qubits");
  }
  return basis;
}

// Component of a neighbour-parity check on a data qubit of the given basis.
Pauli check_pauli(SegmentBasis b) { return b == SegmentBasis::Z ? Pauli::Z : Pauli::X; }
Pauli flip_pauli(SegmentBasis b) { return b == SegmentBasis::Z ? Pauli::X : Pauli::Z; }

std::size_t to_global(const BusSpec& bus, std::size_t local) {
  return local % 2 == 0 ? bus.data_qubits[local / 2] : bus.syndrome_qubits[local / 2];
}

PauliString neighbour_parity(const StabilizerTableau& tableau, const BusSpec& bus, std::size_t k) {
  PauliString p(tableau.size());
  p.set(bus.data_qubits[k], check_pauli(bus.basis_at(k)));
  p.set(bus.data_qubits[k + 1], check_pauli(bus.basis_at(k + 1)));
  return p;
}

// Runs the gate list on the bus and returns the raw syndrome bits.
std::vector<std::uint8_t> run_gates(StabilizerTableau& tableau, const BusSpec& bus,
                                    const std::vector<Gate>& gates) {
  std::vector<std::uint8_t> bits;
  for (const auto& g : gates) {
    switch (g.kind) {
      case Gate::Kind::H: tableau.apply_h(to_global(bus, g.a)); break;
      case Gate::Kind::CX: tableau.apply_cnot(to_global(bus, g.a), to_global(bus, g.b)); break;
      case Gate::Kind::MeasureReset: {
        const std::size_t q = to_global(bus, g.a);
        const auto r = tableau.measure(PauliString::single(tableau.size(), q, Pauli::Z));
        bits.push_back(r.outcome < 0 ? 1 : 0);
        tableau.reset(q);
        break;
      }
    }
  }
  return bits;
}

void flip_data(StabilizerTableau& tableau, const BusSpec& bus, std::size_t position) {
  tableau.apply_pauli(
      PauliString::single(tableau.size(), bus.data_qubits[position], bus.bit_flip_at(position)));
}

}  // namespace

SegmentBasis BusSpec::basis_at(std::size_t position) const {
  for (const auto& s : segments) {
    if (position >= s.begin && position < s.end) return s.basis;
  }
  throw std::out_of_range("bus position " + std::to_string(position) + " is in no segment");
}

Pauli BusSpec::bit_flip_at(std::size_t position) const { return flip_pauli(basis_at(position)); }

Pauli BusSpec::readout_at(std::size_t position) const {
  return basis_at(position) == SegmentBasis::Z ? Pauli::X : Pauli::Z;
}

void validate_bus(const BusSpec& bus) {
  const std::size_t n = bus.length();
  if (n < 2) throw std::invalid_argument("bus needs at least 2 data qubits");
  if (bus.syndrome_qubits.size() + 1 != n) {
    throw std::invalid_argument("bus with " + std::to_string(n) + " data qubits needs " +
                                std::to_string(n - 1) + " syndrome qubits");
  }
  segment_bases(n, bus.segments);

  std::set<std::size_t> paired_positions;
  for (const auto& a : bus.attachments) {
    if (a.pairs.empty()) throw std::invalid_argument("attachment has no pairs");
    const bool want_control = a.chain == Chain::X;
    if (want_control != (a.direction == CnotDirection::BusIsControl)) {
      throw std::invalid_argument(a.chain == Chain::X
                                      ? "X-chain attachments must use the bus as control"
                                      : "Z-chain attachments must use the bus as target");
    }
    std::set<std::size_t> patch_qubits;
    std::set<std::size_t> positions;
    for (auto [pq, pos] : a.pairs) {
      if (pos >= n) throw std::out_of_range("attachment bus position out of range");
      if (!patch_qubits.insert(pq).second || !positions.insert(pos).second) {
        throw std::invalid_argument("attachment pairing is not a bijection");
      }
      if (!paired_positions.insert(pos).second) {
        throw std::invalid_argument("bus position " + std::to_string(pos) +
                                    " is paired by two attachments");
      }
    }
    if (*positions.rbegin() - *positions.begin() + 1 != positions.size()) {
      throw std::invalid_argument("attachment bus positions are not contiguous");
    }
  }
}

PauliString GhzCircuit::frame_correction(std::span<const std::uint8_t> syndrome) const {
  if (syndrome.size() + 1 != n_data) {
    throw std::invalid_argument("syndrome length must be n_data - 1");
  }
  PauliString fix(width());
  bool flip = false;
  for (std::size_t j = 1; j < n_data; ++j) {
    flip ^= syndrome[j - 1] != 0;
    if (flip) fix.set(2 * j, flip_pauli(basis[j]));
  }
  return fix;
}

GhzCircuit build_ghz_circuit(std::size_t n_data, std::span<const Segment> segments) {
  if (n_data < 2) throw std::invalid_argument("GHZ chain needs at least 2 data qubits");
  GhzCircuit c;
  c.n_data = n_data;
  c.basis = segment_bases(n_data, segments);
  for (std::size_t j = 0; j < n_data; ++j) {
    if (c.basis[j] == SegmentBasis::Z) c.prep.push_back({Gate::Kind::H, 2 * j});
  }
  for (std::size_t k = 0; k + 1 < n_data; ++k) {
    const std::size_t anc = 2 * k + 1;
    for (std::size_t j : {k, k + 1}) {
      const std::size_t data = 2 * j;
      if (c.basis[j] == SegmentBasis::X) {
        c.round.push_back({Gate::Kind::H, data});
        c.round.push_back({Gate::Kind::CX, data, anc});
        c.round.push_back({Gate::Kind::H, data});
      } else {
        c.round.push_back({Gate::Kind::CX, data, anc});
      }
    }
    c.round.push_back({Gate::Kind::MeasureReset, anc});
  }
  return c;
}

std::vector<PauliString> ghz_stabilizers(std::size_t n_data, std::span<const Segment> segments) {
  const auto basis = segment_bases(n_data, segments);
  std::vector<PauliString> gens;
  PauliString global(n_data);
  for (std::size_t j = 0; j < n_data; ++j) global.set(j, flip_pauli(basis[j]));
  gens.push_back(global);
  for (std::size_t k = 0; k + 1 < n_data; ++k) {
    PauliString p(n_data);
    p.set(k, check_pauli(basis[k]));
    p.set(k + 1, check_pauli(basis[k + 1]));
    gens.push_back(p);
  }
  return gens;
}

void validate_noise(const NoiseModel& noise) {
  if (!(noise.p_phys >= 0.0 && noise.p_phys < 0.5)) {
    throw std::invalid_argument("p_phys must satisfy 0 <= p < 0.5");
  }
}

void prepare_ghz(StabilizerTableau& tableau, const BusSpec& bus) {
  validate_bus(bus);
  const auto circuit = build_ghz_circuit(bus.length(), bus.segments);
  run_gates(tableau, bus, circuit.prep);
  const auto syndrome = run_gates(tableau, bus, circuit.round);
  const auto fix = circuit.frame_correction(syndrome);
  for (std::size_t j = 0; j < bus.length(); ++j) {
    if (fix.get(2 * j) != Pauli::I) flip_data(tableau, bus, j);
  }
}

std::vector<std::uint8_t> decode_repetition_chain(std::span<const std::uint8_t> syndrome) {
  std::vector<std::uint8_t> e(syndrome.size() + 1, 0);
  for (std::size_t i = 0; i < syndrome.size(); ++i) e[i + 1] = e[i] ^ (syndrome[i] ? 1 : 0);
  const auto weight = static_cast<std::size_t>(std::count(e.begin(), e.end(), 1));
  if (2 * weight > e.size()) {
    for (auto& b : e) b ^= 1;
  }
  return e;
}

VerifyRecord verify_ghz(StabilizerTableau& tableau, const BusSpec& bus, std::size_t rounds,
                        double p_phys, std::mt19937_64& noise_rng) {
  if (rounds < 1) throw std::invalid_argument("verify_ghz needs at least one round");
  validate_noise({p_phys, 0});
  validate_bus(bus);
  const auto circuit = build_ghz_circuit(bus.length(), bus.segments);
  std::bernoulli_distribution flip(p_phys);

  VerifyRecord record;
  record.injected.assign(bus.length(), 0);
  if (p_phys > 0.0) {
    for (std::size_t j = 0; j < bus.length(); ++j) {
      if (flip(noise_rng)) {
        record.injected[j] = 1;
        flip_data(tableau, bus, j);
      }
    }
  }

  std::vector<std::size_t> fired(bus.length() - 1, 0);
  for (std::size_t r = 0; r < rounds; ++r) {
    auto bits = run_gates(tableau, bus, circuit.round);
    if (p_phys > 0.0) {
      for (auto& b : bits) b ^= flip(noise_rng) ? 1 : 0;
    }
    for (std::size_t k = 0; k < bits.size(); ++k) fired[k] += bits[k];
    record.rounds.push_back(std::move(bits));
  }
  for (auto count : fired) record.voted.push_back(2 * count > rounds ? 1 : 0);

  record.correction = decode_repetition_chain(record.voted);
  for (std::size_t j = 0; j < bus.length(); ++j) {
    if (record.correction[j]) flip_data(tableau, bus, j);
  }
  return record;
}

bool chain_parities_even(const StabilizerTableau& tableau, const BusSpec& bus) {
  for (std::size_t k = 0; k + 1 < bus.length(); ++k) {
    const auto sign = tableau.expectation_sign(neighbour_parity(tableau, bus, k));
    if (sign.value_or(-1) != 1) return false;
  }
  return true;
}

}  // namespace databus
