#include "databus/verification.hpp"

#include <array>
#include <cmath>

#include "databus/protocol.hpp"
#include "databus/reference_tables.hpp"
#include "databus/stabilizer_group.hpp"

namespace databus {

std::vector<TableCheck> check_reference_tables() {
  std::vector<TableCheck> checks;
  for (const auto& scenario : table_scenarios()) {
    TableCheck c;
    c.name = scenario.name;
    c.printed = scenario.printed;
    const auto printed = reference_table(scenario.name);
    c.expected = canonical_form(printed);
    c.simulated = simulate_scenario(scenario);
    c.equal = c.expected == c.simulated;
    if (!c.equal) {
      for (const auto& g : printed) {
        if (!in_group(c.simulated, g)) {
          c.mismatch = "table generator " + g.str() + " is not in the simulated group";
          break;
        }
      }
      if (c.mismatch.empty()) {
        for (const auto& g : c.simulated) {
          if (!in_group(c.expected, g)) {
            c.mismatch = "simulated generator " + g.str() + " is not in the table group";
            break;
          }
        }
      }
    }
    checks.push_back(std::move(c));
  }
  return checks;
}

OracleSuite run_oracle_suite(std::size_t distance, std::size_t trials, std::uint64_t seed) {
  OracleSuite s;
  s.distance = distance;
  s.trials = trials;
  constexpr std::array<LogicalBasis, 2> kBases{LogicalBasis::X, LogicalBasis::Z};

  for (std::size_t t = 0; t < trials; ++t) {
    const std::size_t combo = t % 16;
    const std::array<PatchRequest, 2> requests{
        PatchRequest{distance, false, kBases[combo & 1]},
        PatchRequest{distance, false, kBases[(combo >> 1) & 1]}};
    const std::array<int, 2> eig{(combo & 4) ? -1 : 1, (combo & 8) ? -1 : 1};
    const auto setup = make_setup(requests);
    ParityOptions opt;
    opt.noise.seed = split_seed(seed, t);
    const int bus = joint_parity(setup, eig, opt).parity;
    const int oracle = oracle_parity(setup, eig, opt.noise.seed);
    const bool product_ok = bus == eig[0] * eig[1];
    if (!product_ok) ++s.product_mismatches;
    if (bus != oracle) ++s.oracle_mismatches;
    if ((!product_ok || bus != oracle) && s.first_failure.empty()) {
      s.first_failure = "combination " + std::to_string(combo) + " seed " +
                        std::to_string(opt.noise.seed) + ": bus " + std::to_string(bus) +
                        ", oracle " + std::to_string(oracle);
    }
  }

  const std::size_t y_runs = std::max<std::size_t>(4, trials / 4);
  for (std::size_t t = 0; t < y_runs; ++t) {
    const bool rotated = (t & 1) != 0;
    const int eig = (t & 2) ? -1 : 1;
    const std::array<PatchRequest, 1> request{PatchRequest{distance, rotated, LogicalBasis::Y}};
    const std::array<int, 1> eigs{eig};
    const auto setup = make_setup(request);
    ParityOptions opt;
    opt.noise.seed = split_seed(seed ^ 0x59ULL, t);
    ++s.y_trials;
    const int flipped = joint_parity(setup, eigs, opt).parity;
    if (flipped != eig) {
      ++s.y_mismatches;
      if (s.first_failure.empty()) {
        s.first_failure = std::string("Y measurement on a ") + (rotated ? "rotated" : "standard") +
                          " patch returned " + std::to_string(flipped) + " for eigenvalue " +
                          std::to_string(eig);
      }
    }
    opt.y_sign_flip = false;
    if (joint_parity(setup, eigs, opt).parity == eig) ++s.y_unflipped_agreements;
    opt.y_sign_flip = true;
    opt.order = AttachOrder::Reversed;
    if (joint_parity(setup, eigs, opt).parity == eig) ++s.y_reversed_agreements;
  }
  return s;
}

double flip_probability_for_pair_odd_rate(double q) { return 0.5 * (1.0 - std::sqrt(1.0 - 2.0 * q)); }

NoiseSuite run_noise_suite(std::size_t trials, std::uint64_t seed) {
  NoiseSuite s;
  s.parity = parity_error_stats(4, 0.1, trials, 1, split_seed(seed, 0));
  s.vote = parity_error_stats(2, flip_probability_for_pair_odd_rate(0.1), trials, 3,
                              split_seed(seed, 1));
  s.parity_within_3_sigma =
      std::abs(s.parity.empirical_p_odd - s.parity.analytic_p_odd) <= 3.0 * s.parity.sigma_p_odd;
  s.vote_within_3_sigma = std::abs(s.vote.empirical_vote_failure - s.vote.analytic_vote_failure) <=
                          3.0 * s.vote.sigma_vote_failure;

  s.monotone = true;
  double previous_empirical = 1.0;
  double previous_analytic = 1.0;
  for (std::size_t reps : {1, 3, 5, 7}) {
    const auto st = parity_error_stats(4, 0.01, trials, reps, split_seed(seed, 10 + reps));
    s.monotone_rates.push_back(st.empirical_vote_failure);
    s.monotone = s.monotone && st.empirical_vote_failure <= previous_empirical &&
                 st.analytic_vote_failure <= previous_analytic;
    previous_empirical = st.empirical_vote_failure;
    previous_analytic = st.analytic_vote_failure;
  }
  return s;
}

}  // namespace databus
