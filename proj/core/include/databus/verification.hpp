#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "databus/noise_stats.hpp"
#include "databus/pauli_string.hpp"

namespace databus {

struct TableCheck {
  std::string name;
  bool printed = true;
  bool equal = false;
  std::vector<PauliString> expected;
  std::vector<PauliString> simulated;
  /// Empty when equal; otherwise the first generator found on only one side.
  std::string mismatch;
};

/// Compares every table scenario against its bundled fixture.
std::vector<TableCheck> check_reference_tables();

struct OracleSuite {
  std::size_t distance = 2;
  std::size_t trials = 0;
  /// joint_parity differs from the prepared eigenvalue product.
  std::size_t product_mismatches = 0;
  /// joint_parity differs from the direct logical measurement on the replay.
  std::size_t oracle_mismatches = 0;
  std::size_t y_trials = 0;
  std::size_t y_mismatches = 0;
  /// Y runs without the sign flip that agree with the eigenvalue (should be 0).
  std::size_t y_unflipped_agreements = 0;
  /// Y runs with the CNOT sets swapped that agree with the eigenvalue (should be 0).
  std::size_t y_reversed_agreements = 0;
  std::string first_failure;

  bool passed() const {
    return product_mismatches == 0 && oracle_mismatches == 0 && y_mismatches == 0 &&
           y_unflipped_agreements == 0 && y_reversed_agreements == 0;
  }
};

/// Cycles through the 16 basis/eigenvalue combinations of two patches for
/// `trials` noiseless seeded runs, then checks Y measurements on standard and
/// rotated patches for both eigenvalues (trials / 4 runs, at least 4).
OracleSuite run_oracle_suite(std::size_t distance, std::size_t trials, std::uint64_t seed);

struct NoiseSuite {
  ParityErrorStats parity;  // n = 4, p = 0.1
  ParityErrorStats vote;    // per-repetition odd probability 0.1, 3 repetitions
  bool parity_within_3_sigma = false;
  bool vote_within_3_sigma = false;
  /// Empirical and analytic vote failure non-increasing over 1, 3, 5, 7 repetitions.
  bool monotone = false;
  std::vector<double> monotone_rates;

  bool passed() const { return parity_within_3_sigma && vote_within_3_sigma && monotone; }
};

/// p for which a two-qubit bus has per-repetition odd probability q.
double flip_probability_for_pair_odd_rate(double q);

NoiseSuite run_noise_suite(std::size_t trials, std::uint64_t seed);

}  // namespace databus
