#include "databus/stabilizer_tableau.hpp"

#include <stdexcept>
#include <string>

namespace databus {

namespace {

std::vector<InitialBasis> all_z0(std::size_t n) {
  if (n == 0) {
    throw std::invalid_argument("a tableau needs at least one qubit");
  }
  return std::vector<InitialBasis>(n, InitialBasis::Z0);
}

}  // namespace

StabilizerTableau::StabilizerTableau(std::size_t num_qubits, std::uint64_t seed)
    : StabilizerTableau(all_z0(num_qubits), seed) {}

StabilizerTableau::StabilizerTableau(std::span<const InitialBasis> basis, std::uint64_t seed)
    : num_qubits_(basis.size()), rng_(seed) {
  if (num_qubits_ == 0) {
    throw std::invalid_argument("a tableau needs at least one qubit");
  }
  stabilizers_.reserve(num_qubits_);
  destabilizers_.reserve(num_qubits_);
  for (std::size_t q = 0; q < num_qubits_; ++q) {
    const bool plus = basis[q] == InitialBasis::Xp;
    stabilizers_.push_back(PauliString::single(num_qubits_, q, plus ? Pauli::X : Pauli::Z));
    destabilizers_.push_back(PauliString::single(num_qubits_, q, plus ? Pauli::Z : Pauli::X));
  }
}

void StabilizerTableau::check_index(std::size_t qubit) const {
  if (qubit >= num_qubits_) {
    throw std::out_of_range("qubit " + std::to_string(qubit) + " out of range for a " +
                            std::to_string(num_qubits_) + "-qubit tableau");
  }
}

void StabilizerTableau::check_observable(const PauliString& observable) const {
  if (observable.size() != num_qubits_) {
    throw std::invalid_argument("observable size " + std::to_string(observable.size()) +
                                " does not match tableau size " + std::to_string(num_qubits_));
  }
  if (!observable.is_hermitian()) {
    throw std::invalid_argument("observable " + observable.str() + " is not Hermitian");
  }
}

void StabilizerTableau::apply_cnot(std::size_t control, std::size_t target) {
  check_index(control);
  check_index(target);
  if (control == target) {
    throw std::invalid_argument("CNOT control and target must differ");
  }
  for (auto& row : stabilizers_) row.apply_cnot(control, target);
  for (auto& row : destabilizers_) row.apply_cnot(control, target);
}

void StabilizerTableau::apply_h(std::size_t qubit) {
  check_index(qubit);
  for (auto& row : stabilizers_) row.apply_h(qubit);
  for (auto& row : destabilizers_) row.apply_h(qubit);
}

void StabilizerTableau::apply_pauli(const PauliString& p) {
  if (p.size() != num_qubits_) {
    throw std::invalid_argument("Pauli gate size does not match tableau size");
  }
  for (auto& row : stabilizers_) {
    if (!row.commutes(p)) row.negate();
  }
  for (auto& row : destabilizers_) {
    if (!row.commutes(p)) row.negate();
  }
}

std::optional<std::size_t> StabilizerTableau::first_anticommuting(
    const PauliString& observable) const {
  for (std::size_t i = 0; i < num_qubits_; ++i) {
    if (!stabilizers_[i].commutes(observable)) return i;
  }
  return std::nullopt;
}

int StabilizerTableau::deterministic_outcome(const PauliString& observable) const {
  // observable = +-(product of the stabilizers whose destabilizer anticommutes with it).
  PauliString product(num_qubits_);
  for (std::size_t i = 0; i < num_qubits_; ++i) {
    if (!destabilizers_[i].commutes(observable)) product *= stabilizers_[i];
  }
  PauliString letters = observable;
  letters.set_phase_exponent(0);
  PauliString check = product;
  check.set_phase_exponent(0);
  if (!(check == letters)) {
    throw std::logic_error("observable " + observable.str() +
                           " commutes with all stabilizers but is not in the group");
  }
  return product.sign() * observable.sign();
}

MeasureResult StabilizerTableau::measure(const PauliString& observable) {
  check_observable(observable);
  const auto pivot = first_anticommuting(observable);
  if (!pivot) {
    return {deterministic_outcome(observable), true};
  }
  const std::size_t p = *pivot;
  for (std::size_t i = 0; i < num_qubits_; ++i) {
    if (i != p && !stabilizers_[i].commutes(observable)) {
      stabilizers_[i] *= stabilizers_[p];
    }
    if (!destabilizers_[i].commutes(observable)) {
      if (i == p) continue;
      destabilizers_[i] *= stabilizers_[p];
    }
  }
  destabilizers_[p] = stabilizers_[p];
  const int outcome = (rng_() & 1u) ? -1 : 1;
  stabilizers_[p] = observable;
  if (outcome != observable.sign()) {
    stabilizers_[p].set_phase_exponent(2);
  } else {
    stabilizers_[p].set_phase_exponent(0);
  }
  return {outcome, false};
}

MeasureResult StabilizerTableau::project(const PauliString& observable, int desired) {
  if (desired != 1 && desired != -1) {
    throw std::invalid_argument("desired outcome must be +1 or -1");
  }
  const auto pivot = first_anticommuting(observable);
  auto result = measure(observable);
  if (result.outcome == desired) {
    return result;
  }
  if (result.deterministic) {
    throw std::logic_error("cannot project onto the " + std::to_string(desired) +
                           " eigenspace of " + observable.str() + ": outcome is fixed");
  }
  // The destabilizer at the pivot anticommutes only with the new stabilizer.
  apply_pauli(destabilizers_[*pivot]);
  result.outcome = desired;
  return result;
}

std::optional<int> StabilizerTableau::expectation_sign(const PauliString& observable) const {
  check_observable(observable);
  if (first_anticommuting(observable)) {
    return std::nullopt;
  }
  return deterministic_outcome(observable);
}

void StabilizerTableau::reset(std::size_t qubit) {
  check_index(qubit);
  const auto z = PauliString::single(num_qubits_, qubit, Pauli::Z);
  if (measure(z).outcome == -1) {
    apply_pauli(PauliString::single(num_qubits_, qubit, Pauli::X));
  }
}

bool StabilizerTableau::satisfies_invariants() const {
  if (stabilizers_.size() != num_qubits_ || destabilizers_.size() != num_qubits_) return false;
  for (std::size_t i = 0; i < num_qubits_; ++i) {
    if (!stabilizers_[i].is_hermitian() || !destabilizers_[i].is_hermitian()) return false;
    for (std::size_t j = 0; j < num_qubits_; ++j) {
      if (!stabilizers_[i].commutes(stabilizers_[j])) return false;
      if (!destabilizers_[i].commutes(destabilizers_[j])) return false;
      const bool anti = !destabilizers_[i].commutes(stabilizers_[j]);
      if (anti != (i == j)) return false;
    }
  }
  return true;
}

}  // namespace databus
