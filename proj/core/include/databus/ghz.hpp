#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "databus/pauli_string.hpp"

namespace databus {

class StabilizerTableau;

/// Basis of a GHZ segment. A Z segment holds |0...0> + |1...1> on its data
/// qubits and is read out in X; an X segment holds |+...+> + |-...->
/// and is read out in Z.
enum class SegmentBasis : std::uint8_t { Z, X };

/// Contiguous range [begin, end) of bus data positions.
struct Segment {
  std::size_t begin = 0;
  std::size_t end = 0;
  SegmentBasis basis = SegmentBasis::Z;
};

enum class Chain : std::uint8_t { X, Z };
enum class CnotDirection : std::uint8_t { BusIsControl, BusIsTarget };
/// CNOT layers are applied north, south, east, west.
enum class Side : std::uint8_t { North, South, East, West };

/// One transversal CNOT layer between a patch chain and a bus sub-range.
struct Attachment {
  std::size_t patch = 0;
  Chain chain = Chain::X;
  /// (patch qubit, bus data position) pairs; positions index BusSpec::data_qubits.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  CnotDirection direction = CnotDirection::BusIsControl;
  Side side = Side::South;
};

/// The GHZ chain of a data bus: N data qubits, N-1 syndrome qubits between
/// them, basis segments, and how patches attach.
struct BusSpec {
  std::vector<std::size_t> data_qubits;
  std::vector<std::size_t> syndrome_qubits;
  std::vector<Segment> segments;
  std::vector<Attachment> attachments;

  std::size_t length() const { return data_qubits.size(); }
  SegmentBasis basis_at(std::size_t position) const;
  /// The error that flips a repetition-code bit at `position`: X in a Z
  /// segment, Z in an X segment.
  Pauli bit_flip_at(std::size_t position) const;
  /// The single-qubit readout basis: X in a Z segment, Z in an X segment.
  Pauli readout_at(std::size_t position) const;
};

/// Throws std::invalid_argument when segments do not partition the chain,
/// syndrome count is not N-1, a pairing is not a bijection onto a contiguous
/// sub-range, a bus position is paired twice, or a direction contradicts the
/// chain (X chains need bus_is_control, Z chains bus_is_target).
void validate_bus(const BusSpec& bus);

struct Gate {
  enum class Kind : std::uint8_t { H, CX, MeasureReset };
  Kind kind;
  std::size_t a;
  std::size_t b = 0;
};

/// Gate list for building and checking a GHZ chain on 2N-1 local qubits.
/// Local qubit 2i is data i and 2i+1 is the syndrome between data i and i+1.
struct GhzCircuit {
  std::size_t n_data = 0;
  std::vector<SegmentBasis> basis;
  /// Puts Z-segment data into |+> and leaves X-segment data in |0>.
  std::vector<Gate> prep;
  /// One round of neighbour-parity checks; measurement k is syndrome k.
  std::vector<Gate> round;

  std::size_t width() const { return 2 * n_data - 1; }
  /// Local Pauli flipping every data qubit beyond each fired syndrome. It
  /// anticommutes with exactly the fired checks and commutes with the global
  /// GHZ stabilizer.
  PauliString frame_correction(std::span<const std::uint8_t> syndrome) const;
};

/// Throws if n_data < 2 or the segments do not partition [0, n_data).
GhzCircuit build_ghz_circuit(std::size_t n_data, std::span<const Segment> segments);

/// Expected stabilizers of the ideal chain on N data qubits: the global
/// operator (X on Z-segment qubits, Z on X-segment qubits) and the N-1
/// neighbour parities.
std::vector<PauliString> ghz_stabilizers(std::size_t n_data, std::span<const Segment> segments);

struct NoiseModel {
  double p_phys = 0.0;
  std::uint64_t seed = 0;
};

/// Throws std::invalid_argument unless 0 <= p_phys < 0.5.
void validate_noise(const NoiseModel& noise);

/// Runs the prep gates, one syndrome round and the frame correction on the
/// bus qubits of `tableau`. Bus qubits must start in |0>.
void prepare_ghz(StabilizerTableau& tableau, const BusSpec& bus);

struct VerifyRecord {
  /// rounds x (N-1) raw syndrome bits, 1 = check fired.
  std::vector<std::vector<std::uint8_t>> rounds;
  std::vector<std::uint8_t> voted;
  /// Data positions flipped by the decoder.
  std::vector<std::uint8_t> correction;
  std::vector<std::uint8_t> injected;
};

/// Measures every neighbour parity `rounds` times, majority-votes each
/// syndrome (a tie counts as not fired) and corrects the chain by flipping
/// the lighter of the two error patterns consistent with the votes. With
/// p > 0, bit flips are injected on the data before the rounds and each
/// syndrome readout is flipped with probability p.
VerifyRecord verify_ghz(StabilizerTableau& tableau, const BusSpec& bus, std::size_t rounds,
                        double p_phys, std::mt19937_64& noise_rng);

/// Neighbour-parity signs of the chain (deterministic on a GHZ-like state).
/// True when every parity is +1.
bool chain_parities_even(const StabilizerTableau& tableau, const BusSpec& bus);

/// Minimum-weight error pattern on a line with open ends that reproduces the
/// given syndrome. Of the two consistent patterns, the lighter one is returned
/// (the one starting with 0 on a tie).
std::vector<std::uint8_t> decode_repetition_chain(std::span<const std::uint8_t> syndrome);

}  // namespace databus
