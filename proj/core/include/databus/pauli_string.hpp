#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace databus {

/// Single-qubit Pauli letter. Bit 0 is the X component, bit 1 the Z component.
enum class Pauli : std::uint8_t { I = 0, X = 1, Z = 2, Y = 3 };

char to_char(Pauli p);

/// Signed n-qubit Pauli operator `i^k * P_0 (x) ... (x) P_{n-1}`.
///
/// Letters are stored as packed symplectic bits with Y = (x=1, z=1) meaning the
/// Hermitian Y, and the global phase is a separate exponent k mod 4. Products
/// track the phase exactly, so `X * Z == -iY`.
class PauliString {
 public:
  PauliString() = default;
  explicit PauliString(std::size_t num_qubits);

  /// Parses "+XZIY", "-ZZ", "XX" (implicit +), "+iXY" or "-iZ".
  static PauliString parse(std::string_view text);
  static PauliString single(std::size_t num_qubits, std::size_t qubit, Pauli p);
  static PauliString on(std::size_t num_qubits, std::span<const std::size_t> qubits, Pauli p);
  static PauliString on(std::size_t num_qubits, std::initializer_list<std::size_t> qubits, Pauli p);

  std::size_t size() const { return num_qubits_; }

  Pauli get(std::size_t qubit) const;
  void set(std::size_t qubit, Pauli p);
  bool x(std::size_t qubit) const;
  bool z(std::size_t qubit) const;

  /// Exponent k of the global phase i^k, in [0, 4).
  std::uint8_t phase_exponent() const { return phase_; }
  void set_phase_exponent(std::uint8_t k) { phase_ = k & 3u; }
  bool is_hermitian() const { return (phase_ & 1u) == 0; }
  /// +1 or -1. Throws std::domain_error for a +-i phase.
  int sign() const;
  void negate() { phase_ = (phase_ + 2) & 3u; }

  bool is_identity() const;
  std::size_t weight() const;
  bool commutes(const PauliString& other) const;

  PauliString& operator*=(const PauliString& rhs);
  friend PauliString operator*(PauliString lhs, const PauliString& rhs) { return lhs *= rhs; }
  bool operator==(const PauliString& other) const = default;

  /// Conjugation P -> U P U^dagger for CNOT(control, target).
  void apply_cnot(std::size_t control, std::size_t target);
  /// Conjugation P -> H P H on one qubit.
  void apply_h(std::size_t qubit);

  /// Letters restricted to (or re-indexed onto) the given qubits, phase kept.
  PauliString select(std::span<const std::size_t> qubits) const;
  /// Copies this operator onto qubits [offset, offset + size()) of a wider register.
  PauliString embed(std::size_t num_qubits, std::size_t offset) const;

  std::string str() const;

 private:
  friend class StabilizerTableau;

  void check_index(std::size_t qubit) const;
  void check_same_size(const PauliString& other) const;

  std::size_t num_qubits_ = 0;
  std::vector<std::uint64_t> xs_;
  std::vector<std::uint64_t> zs_;
  std::uint8_t phase_ = 0;
};

std::ostream& operator<<(std::ostream& out, const PauliString& p);

}  // namespace databus
