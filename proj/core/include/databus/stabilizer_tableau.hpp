#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "databus/pauli_string.hpp"

namespace databus {

/// Per-qubit starting state for a fresh tableau.
enum class InitialBasis : std::uint8_t { Z0, Xp };

struct MeasureResult {
  int outcome = 1;  // +1 or -1
  bool deterministic = true;
};

/// Pure stabilizer state on n qubits in the Aaronson-Gottesman layout:
/// n stabilizer generators plus n destabilizers, every row with phase +-1.
/// Random measurement outcomes come from an owned std::mt19937_64.
///
/// Not thread-safe; separate instances are independent.
class StabilizerTableau {
 public:
  explicit StabilizerTableau(std::size_t num_qubits, std::uint64_t seed = 0);
  StabilizerTableau(std::span<const InitialBasis> basis, std::uint64_t seed = 0);

  std::size_t size() const { return num_qubits_; }
  const std::vector<PauliString>& stabilizers() const { return stabilizers_; }
  const std::vector<PauliString>& destabilizers() const { return destabilizers_; }

  void apply_cnot(std::size_t control, std::size_t target);
  void apply_h(std::size_t qubit);
  /// Applies a Pauli operator as a gate (phase of `p` is irrelevant).
  void apply_pauli(const PauliString& p);

  /// Measures a Hermitian Pauli observable and collapses the state.
  MeasureResult measure(const PauliString& observable);
  /// Measures `observable` and, if the outcome differs from `desired`, applies
  /// the destabilizer paired with it. Afterwards desired * observable is a
  /// stabilizer. Throws if the outcome is deterministic and wrong.
  MeasureResult project(const PauliString& observable, int desired);
  /// Sign of `observable` if it is (up to sign) in the stabilizer group.
  std::optional<int> expectation_sign(const PauliString& observable) const;

  /// Measures Z on `qubit` and flips it back to |0> when needed.
  void reset(std::size_t qubit);

  void reseed(std::uint64_t seed) { rng_.seed(seed); }
  std::mt19937_64& rng() { return rng_; }

  /// Checks count, pairwise commutation, +-1 phases and the destabilizer pairing.
  bool satisfies_invariants() const;

 private:
  void check_observable(const PauliString& observable) const;
  void check_index(std::size_t qubit) const;
  // Index of the first stabilizer anticommuting with `observable`, if any.
  std::optional<std::size_t> first_anticommuting(const PauliString& observable) const;
  int deterministic_outcome(const PauliString& observable) const;

  std::size_t num_qubits_;
  std::vector<PauliString> stabilizers_;
  std::vector<PauliString> destabilizers_;
  std::mt19937_64 rng_;
};

}  // namespace databus
