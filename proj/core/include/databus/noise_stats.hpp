#pragma once

#include <cstddef>
#include <cstdint>

namespace databus {

/// Probability that an odd number of n independent flips (each w.p. p) occur:
/// (1 - (1-2p)^n) / 2.
double odd_parity_probability(std::size_t n, double p);

/// Probability that at least ceil(r/2) of r repetitions come out odd when each
/// does so independently w.p. q. For even r a split vote counts as a failure.
double majority_failure_probability(double q, std::size_t repetitions);

struct ParityErrorStats {
  std::size_t trials = 0;
  double empirical_p_odd = 0.0;
  double analytic_p_odd = 0.0;
  double empirical_vote_failure = 0.0;
  double analytic_vote_failure = 0.0;
  /// Binomial standard errors of the two analytic values at this trial count.
  double sigma_p_odd = 0.0;
  double sigma_vote_failure = 0.0;
};

/// Samples a length-n all-Z GHZ bus on the stabilizer simulator: every
/// repetition re-prepares the chain, flips each readout w.p. p, and reads the
/// X parity. Trial t draws from seeds split off `seed` by index. Throws for
/// trials or repetitions of 0, n < 2, or p outside [0, 0.5).
ParityErrorStats parity_error_stats(std::size_t n, double p, std::size_t trials,
                                    std::size_t repetitions, std::uint64_t seed);

/// Fraction of trials in which a length-n chain still has an odd neighbour
/// parity after verify_ghz with the given rounds and noise.
double residual_chain_error_rate(std::size_t n, std::size_t rounds, double p, std::size_t trials,
                                 std::uint64_t seed);

}  // namespace databus
