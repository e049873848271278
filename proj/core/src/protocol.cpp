#include "databus/protocol.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace databus {

namespace {

Side side_of(const PatchSpec& patch, Chain chain) {
  // X_L runs along the bottom row of a standard patch, Z_L along the left column.
  const bool bottom = (chain == Chain::X) != patch.rotated;
  return bottom ? Side::South : Side::West;
}

std::size_t side_rank(Side s) { return static_cast<std::size_t>(s); }

template <class State>
void apply_layer(State& state, const ParitySetup& setup, std::size_t index) {
  if (index >= setup.bus.attachments.size()) {
    throw std::out_of_range("attachment index out of range");
  }
  const auto& a = setup.bus.attachments[index];
  const auto& data = setup.patches.at(a.patch).data_qubits;
  for (auto [patch_qubit, position] : a.pairs) {
    if (std::find(data.begin(), data.end(), patch_qubit) == data.end()) {
      throw std::invalid_argument("paired qubit " + std::to_string(patch_qubit) +
                                  " is not a data qubit of patch " + std::to_string(a.patch));
    }
    const std::size_t bus_qubit = setup.bus.data_qubits.at(position);
    if (a.direction == CnotDirection::BusIsControl) {
      state.apply_cnot(bus_qubit, patch_qubit);
    } else {
      state.apply_cnot(patch_qubit, bus_qubit);
    }
  }
}

template <class State>
void attach_all(State& state, const ParitySetup& setup, AttachOrder order) {
  validate_bus(setup.bus);
  for (auto index : attachment_schedule(setup.bus, order)) apply_layer(state, setup, index);
}

std::size_t max_distance(const ParitySetup& setup) {
  std::size_t d = 1;
  for (const auto& p : setup.patches) d = std::max(d, p.distance);
  return d;
}

void check_eigenvalues(const ParitySetup& setup, std::span<const int> eigenvalues) {
  if (eigenvalues.size() != setup.patches.size()) {
    throw std::invalid_argument("need one eigenvalue per patch");
  }
  for (int e : eigenvalues) {
    if (e != 1 && e != -1) throw std::invalid_argument("eigenvalues must be +1 or -1");
  }
}

}  // namespace

std::size_t ParitySetup::data_register_size() const {
  return num_qubits - bus.syndrome_qubits.size();
}

ParitySetup make_setup(std::span<const PatchRequest> requests) {
  if (requests.empty()) throw std::invalid_argument("joint parity needs at least one patch");

  std::size_t patch_total = 0;
  std::size_t bus_length = 0;
  for (const auto& r : requests) {
    if (r.distance < 2) throw std::invalid_argument("patch distance must be at least 2");
    patch_total += planar_patch_qubits(r.distance);
    bus_length += (r.basis == LogicalBasis::Y ? 2 : 1) * r.distance;
  }

  ParitySetup setup;
  setup.num_qubits = patch_total + 2 * bus_length - 1;
  for (std::size_t i = 0; i < bus_length; ++i) setup.bus.data_qubits.push_back(patch_total + i);
  for (std::size_t i = 0; i + 1 < bus_length; ++i) {
    setup.bus.syndrome_qubits.push_back(patch_total + bus_length + i);
  }

  std::size_t offset = 0;
  std::size_t position = 0;
  for (std::size_t p = 0; p < requests.size(); ++p) {
    const auto& r = requests[p];
    setup.patches.push_back(make_planar_patch(r.distance, r.rotated, offset, setup.num_qubits));
    setup.bases.push_back(r.basis);
    offset += planar_patch_qubits(r.distance);
    const PatchSpec& patch = setup.patches.back();

    auto attach = [&](Chain chain) {
      const auto& qubits = chain == Chain::X ? patch.logical_x_chain : patch.logical_z_chain;
      Attachment a;
      a.patch = p;
      a.chain = chain;
      a.direction = chain == Chain::X ? CnotDirection::BusIsControl : CnotDirection::BusIsTarget;
      a.side = side_of(patch, chain);
      for (std::size_t i = 0; i < qubits.size(); ++i) a.pairs.emplace_back(qubits[i], position + i);
      setup.bus.segments.push_back({position, position + qubits.size(),
                                    chain == Chain::X ? SegmentBasis::Z : SegmentBasis::X});
      position += qubits.size();
      setup.bus.attachments.push_back(std::move(a));
    };
    if (r.basis != LogicalBasis::Z) attach(Chain::X);
    if (r.basis != LogicalBasis::X) attach(Chain::Z);
  }
  validate_bus(setup.bus);

  const auto schedule = attachment_schedule(setup.bus, AttachOrder::Standard);
  for (std::size_t p = 0; p < setup.patches.size(); ++p) {
    if (setup.bases[p] != LogicalBasis::Y) continue;
    const auto& patch = setup.patches[p];
    std::size_t shared = 0;
    for (auto q : patch.logical_x_chain) {
      if (std::find(patch.logical_z_chain.begin(), patch.logical_z_chain.end(), q) !=
          patch.logical_z_chain.end()) {
        shared = q;
      }
    }
    const auto last = *std::find_if(schedule.rbegin(), schedule.rend(), [&](std::size_t i) {
      return setup.bus.attachments[i].patch == p;
    });
    for (auto [pq, pos] : setup.bus.attachments[last].pairs) {
      if (pq == shared) setup.y_readout_positions.push_back(pos);
    }
  }
  return setup;
}

std::vector<std::size_t> attachment_schedule(const BusSpec& bus, AttachOrder order) {
  std::vector<std::size_t> idx(bus.attachments.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return side_rank(bus.attachments[a].side) < side_rank(bus.attachments[b].side);
  });
  if (order == AttachOrder::Reversed) std::reverse(idx.begin(), idx.end());
  return idx;
}

void apply_attachment(StabilizerTableau& state, const ParitySetup& setup, std::size_t index) {
  apply_layer(state, setup, index);
}

void apply_attachment(StabilizerGroup& state, const ParitySetup& setup, std::size_t index) {
  apply_layer(state, setup, index);
}

void attach_transversal(StabilizerTableau& state, const ParitySetup& setup, AttachOrder order) {
  attach_all(state, setup, order);
}

void attach_transversal(StabilizerGroup& state, const ParitySetup& setup, AttachOrder order) {
  attach_all(state, setup, order);
}

PauliString logical_product(const ParitySetup& setup) {
  PauliString product(setup.num_qubits);
  for (std::size_t p = 0; p < setup.patches.size(); ++p) {
    product *= setup.patches[p].logical(setup.bases[p]);
  }
  return product;
}

void prepare_patches(StabilizerTableau& tableau, const ParitySetup& setup,
                     std::span<const int> eigenvalues) {
  check_eigenvalues(setup, eigenvalues);
  for (std::size_t p = 0; p < setup.patches.size(); ++p) {
    const auto& patch = setup.patches[p];
    for (const auto& s : patch.stabilizers) tableau.project(s, 1);
    // Measure, then fix a wrong outcome with a logical operator that anticommutes.
    if (tableau.measure(patch.logical(setup.bases[p])).outcome != eigenvalues[p]) {
      tableau.apply_pauli(setup.bases[p] == LogicalBasis::X ? patch.logical_z()
                                                            : patch.logical_x());
    }
  }
}

StabilizerGroup bus_and_patch_group(const ParitySetup& setup, std::uint64_t seed) {
  StabilizerTableau tableau(setup.num_qubits, seed);
  prepare_ghz(tableau, setup.bus);
  const auto bus_gens = restrict_to(tableau.stabilizers(), setup.bus.data_qubits);

  const std::size_t m = setup.data_register_size();
  std::vector<std::size_t> keep(m);
  std::iota(keep.begin(), keep.end(), 0);
  StabilizerGroup group(m);
  for (const auto& patch : setup.patches) {
    for (const auto& s : patch.stabilizers) group.add(s.select(keep));
  }
  const std::size_t bus_offset = setup.bus.data_qubits.front();
  for (const auto& g : bus_gens) group.add(g.embed(m, bus_offset));
  return group;
}

ParityResult run_joint_parity(StabilizerTableau& tableau, const ParitySetup& setup,
                              const ParityOptions& options, std::mt19937_64& noise_rng) {
  validate_noise(options.noise);
  const auto& bus = setup.bus;
  const std::size_t reps = options.repetitions ? options.repetitions : max_distance(setup);
  const std::size_t rounds = options.verify_rounds ? options.verify_rounds : max_distance(setup);
  const double p = options.noise.p_phys;
  std::bernoulli_distribution flip(p);
  const std::size_t y_patches = static_cast<std::size_t>(
      std::count(setup.bases.begin(), setup.bases.end(), LogicalBasis::Y));

  ParityResult result;
  std::vector<int> parities;
  for (std::size_t r = 0; r < reps; ++r) {
    RepetitionRecord rec;
    for (auto q : bus.data_qubits) tableau.reset(q);
    for (auto q : bus.syndrome_qubits) tableau.reset(q);
    prepare_ghz(tableau, bus);
    rec.verify = verify_ghz(tableau, bus, rounds, p, noise_rng);
    attach_transversal(tableau, setup, options.order);

    rec.readout_flips.assign(bus.length(), 0);
    for (std::size_t j = 0; j < bus.length() && p > 0.0; ++j) {
      if (!flip(noise_rng)) continue;
      rec.readout_flips[j] = 1;
      const Pauli e = bus.basis_at(j) == SegmentBasis::Z ? Pauli::Z : Pauli::X;
      tableau.apply_pauli(PauliString::single(tableau.size(), bus.data_qubits[j], e));
    }

    for (std::size_t j = 0; j < bus.length(); ++j) {
      const bool y = std::find(setup.y_readout_positions.begin(), setup.y_readout_positions.end(),
                               j) != setup.y_readout_positions.end();
      const Pauli basis = y ? Pauli::Y : bus.readout_at(j);
      const int outcome =
          tableau.measure(PauliString::single(tableau.size(), bus.data_qubits[j], basis)).outcome;
      rec.bus_outcomes.push_back(outcome);
      rec.parity *= outcome;
    }
    if (options.y_sign_flip && y_patches % 2 == 1) rec.parity = -rec.parity;
    parities.push_back(rec.parity);
    result.repetitions.push_back(std::move(rec));
  }
  result.parity = majority_vote(parities, &result.tie);
  return result;
}

ParityResult joint_parity(const ParitySetup& setup, std::span<const int> eigenvalues,
                          const ParityOptions& options) {
  validate_noise(options.noise);
  StabilizerTableau tableau(setup.num_qubits, options.noise.seed);
  prepare_patches(tableau, setup, eigenvalues);
  std::mt19937_64 noise_rng(split_seed(options.noise.seed, 1));
  return run_joint_parity(tableau, setup, options, noise_rng);
}

int oracle_parity(const ParitySetup& setup, std::span<const int> eigenvalues, std::uint64_t seed) {
  StabilizerTableau tableau(setup.num_qubits, seed);
  prepare_patches(tableau, setup, eigenvalues);
  return tableau.measure(logical_product(setup)).outcome;
}

int majority_vote(std::span<const int> values, bool* tie) {
  if (values.empty()) throw std::invalid_argument("majority vote of no values");
  long sum = 0;
  for (int v : values) sum += v;
  if (tie) *tie = sum == 0;
  if (sum == 0) return values.front();
  return sum > 0 ? 1 : -1;
}

std::uint64_t split_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + (stream + 1) * 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace databus
