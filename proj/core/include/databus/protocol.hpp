#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "databus/ghz.hpp"
#include "databus/patch.hpp"
#include "databus/stabilizer_group.hpp"
#include "databus/stabilizer_tableau.hpp"

namespace databus {

struct PatchRequest {
  std::size_t distance = 2;
  bool rotated = false;
  LogicalBasis basis = LogicalBasis::X;
};

/// Patches plus the bus that measures the product of their logical operators.
///
/// Register layout: patch qubits first (in request order), then the N bus data
/// qubits, then the N-1 bus syndrome qubits. Each X request contributes a
/// Z segment attached to the X chain, each Z request an X segment attached to
/// the Z chain, and a Y request both (Z segment on the X chain, then X segment
/// on the Z chain).
struct ParitySetup {
  std::vector<PatchSpec> patches;
  std::vector<LogicalBasis> bases;
  BusSpec bus;
  std::size_t num_qubits = 0;
  /// Bus positions read out in Y instead of the segment basis, one per Y patch:
  /// the partner of the qubit shared by both chains, in the attachment that
  /// runs last under the standard schedule.
  std::vector<std::size_t> y_readout_positions;

  /// Qubits [0, patch qubits + N): patches and bus data, no syndromes.
  std::size_t data_register_size() const;
};

/// Throws std::invalid_argument for an empty request list.
ParitySetup make_setup(std::span<const PatchRequest> requests);

enum class AttachOrder : std::uint8_t { Standard, Reversed };

/// Attachment indices in application order: north, south, east, west
/// (stable within a side); Reversed runs the same list backwards.
std::vector<std::size_t> attachment_schedule(const BusSpec& bus, AttachOrder order);

/// One transversal CNOT layer. Throws if a paired patch qubit is not a data
/// qubit of the attached patch.
void apply_attachment(StabilizerTableau& state, const ParitySetup& setup, std::size_t index);
void apply_attachment(StabilizerGroup& state, const ParitySetup& setup, std::size_t index);

/// All layers in schedule order, one logical time step.
void attach_transversal(StabilizerTableau& state, const ParitySetup& setup,
                        AttachOrder order = AttachOrder::Standard);
void attach_transversal(StabilizerGroup& state, const ParitySetup& setup,
                        AttachOrder order = AttachOrder::Standard);

/// Product of the measured logical operators (i X_L Z_L for Y patches).
PauliString logical_product(const ParitySetup& setup);

/// Projects every patch stabilizer onto +1, then measures each patch's logical
/// operator and corrects a wrong outcome with an anticommuting logical, leaving
/// the requested eigenvalue (+1 or -1).
void prepare_patches(StabilizerTableau& tableau, const ParitySetup& setup,
                     std::span<const int> eigenvalues);

/// The patch stabilizers and the ideal bus stabilizers as one group on
/// data_register_size() qubits; the logical qubits are left free. The bus part
/// comes from running prepare_ghz on a tableau and restricting to the bus data.
StabilizerGroup bus_and_patch_group(const ParitySetup& setup, std::uint64_t seed = 0);

struct ParityOptions {
  NoiseModel noise;
  /// 0 selects the largest patch distance.
  std::size_t repetitions = 0;
  /// Syndrome rounds per GHZ verification; 0 selects the largest patch distance.
  std::size_t verify_rounds = 0;
  AttachOrder order = AttachOrder::Standard;
  /// Turn off to observe the raw bus product of a Y measurement.
  bool y_sign_flip = true;
};

struct RepetitionRecord {
  VerifyRecord verify;
  /// Injected readout flips per bus position.
  std::vector<std::uint8_t> readout_flips;
  /// +1 / -1 per bus data position.
  std::vector<int> bus_outcomes;
  int parity = 1;
};

struct ParityResult {
  int parity = 1;
  /// Even repetition count with a split vote; parity is then the first repetition's.
  bool tie = false;
  std::vector<RepetitionRecord> repetitions;
};

/// Steps 1-3 (prepare and verify the GHZ chain, attach, read the bus) once per
/// repetition, with the bus reset in between, then a majority vote. Patch
/// state lives in `tableau`; bus noise draws from `noise_rng`.
ParityResult run_joint_parity(StabilizerTableau& tableau, const ParitySetup& setup,
                              const ParityOptions& options, std::mt19937_64& noise_rng);

/// Fresh register seeded with options.noise.seed, patches prepared in the given
/// eigenstates, then run_joint_parity. Throws for p >= 0.5 or bad eigenvalues.
ParityResult joint_parity(const ParitySetup& setup, std::span<const int> eigenvalues,
                          const ParityOptions& options);

/// The same preparation as joint_parity with the same seed, followed by a
/// direct measurement of logical_product.
int oracle_parity(const ParitySetup& setup, std::span<const int> eigenvalues, std::uint64_t seed);

/// Majority of +-1 values; a tie returns the first value and sets `tie`.
int majority_vote(std::span<const int> values, bool* tie = nullptr);

/// SplitMix64 step; derives independent per-trial and per-purpose seeds.
std::uint64_t split_seed(std::uint64_t seed, std::uint64_t stream);

}  // namespace databus
