#include "databus/noise_stats.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "databus/ghz.hpp"
#include "databus/protocol.hpp"
#include "databus/stabilizer_tableau.hpp"

namespace databus {

namespace {

BusSpec plain_bus(std::size_t n) {
  BusSpec bus;
  for (std::size_t i = 0; i < n; ++i) bus.data_qubits.push_back(i);
  for (std::size_t i = 0; i + 1 < n; ++i) bus.syndrome_qubits.push_back(n + i);
  bus.segments.push_back({0, n, SegmentBasis::Z});
  return bus;
}

}  // namespace

double odd_parity_probability(std::size_t n, double p) {
  validate_noise({p, 0});
  return 0.5 * (1.0 - std::pow(1.0 - 2.0 * p, static_cast<double>(n)));
}

double majority_failure_probability(double q, std::size_t repetitions) {
  if (repetitions == 0) throw std::invalid_argument("repetitions must be at least 1");
  if (!(q >= 0.0 && q <= 1.0)) throw std::invalid_argument("q must be a probability");
  const std::size_t need = (repetitions + 1) / 2;
  double total = 0.0;
  double binom = 1.0;
  for (std::size_t k = 0; k <= repetitions; ++k) {
    if (k > 0) binom = binom * static_cast<double>(repetitions - k + 1) / static_cast<double>(k);
    if (k >= need) {
      total += binom * std::pow(q, static_cast<double>(k)) *
               std::pow(1.0 - q, static_cast<double>(repetitions - k));
    }
  }
  return total;
}

ParityErrorStats parity_error_stats(std::size_t n, double p, std::size_t trials,
                                    std::size_t repetitions, std::uint64_t seed) {
  if (trials == 0) throw std::invalid_argument("trials must be at least 1");
  if (repetitions == 0) throw std::invalid_argument("repetitions must be at least 1");
  if (n < 2) throw std::invalid_argument("bus length must be at least 2");
  validate_noise({p, seed});

  const BusSpec bus = plain_bus(n);
  const std::size_t need = (repetitions + 1) / 2;
  std::bernoulli_distribution flip(p);
  std::size_t odd = 0;
  std::size_t failures = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    StabilizerTableau tableau(2 * n - 1, split_seed(seed, 2 * t));
    std::mt19937_64 noise_rng(split_seed(seed, 2 * t + 1));
    std::size_t odd_reps = 0;
    for (std::size_t r = 0; r < repetitions; ++r) {
      for (std::size_t q = 0; q < tableau.size(); ++q) tableau.reset(q);
      prepare_ghz(tableau, bus);
      int parity = 1;
      for (std::size_t j = 0; j < n; ++j) {
        if (flip(noise_rng)) tableau.apply_pauli(PauliString::single(tableau.size(), j, Pauli::Z));
        parity *= tableau.measure(PauliString::single(tableau.size(), j, Pauli::X)).outcome;
      }
      if (parity < 0) {
        ++odd_reps;
        if (r == 0) ++odd;
      }
    }
    if (odd_reps >= need) ++failures;
  }

  ParityErrorStats s;
  const double nt = static_cast<double>(trials);
  s.trials = trials;
  s.empirical_p_odd = static_cast<double>(odd) / nt;
  s.analytic_p_odd = odd_parity_probability(n, p);
  s.empirical_vote_failure = static_cast<double>(failures) / nt;
  s.analytic_vote_failure = majority_failure_probability(s.analytic_p_odd, repetitions);
  s.sigma_p_odd = std::sqrt(s.analytic_p_odd * (1.0 - s.analytic_p_odd) / nt);
  s.sigma_vote_failure = std::sqrt(s.analytic_vote_failure * (1.0 - s.analytic_vote_failure) / nt);
  return s;
}

double residual_chain_error_rate(std::size_t n, std::size_t rounds, double p, std::size_t trials,
                                 std::uint64_t seed) {
  if (trials == 0) throw std::invalid_argument("trials must be at least 1");
  const BusSpec bus = plain_bus(n);
  std::size_t bad = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    StabilizerTableau tableau(2 * n - 1, split_seed(seed, 2 * t));
    std::mt19937_64 noise_rng(split_seed(seed, 2 * t + 1));
    prepare_ghz(tableau, bus);
    verify_ghz(tableau, bus, rounds, p, noise_rng);
    if (!chain_parities_even(tableau, bus)) ++bad;
  }
  return static_cast<double>(bad) / static_cast<double>(trials);
}

}  // namespace databus
