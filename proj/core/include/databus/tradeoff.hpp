#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

namespace databus {

inline constexpr int kMaxDistance = 201;
/// Safety factor reported when the failure probability rounds to zero or the
/// ratio does not fit in 64 bits.
inline constexpr std::int64_t kSafetySentinel = std::numeric_limits<std::int64_t>::max();

/// P_L = a0 * (p / p_th)^((d+1)/2).
struct ErrorModel {
  double a0 = 0.1;
  double p_th = 0.01;
};

struct ComputationProfile {
  std::int64_t q = 1;   // data patches
  std::int64_t a = 1;   // ancilla (routing) patches
  double volume = 1.0;  // logical patches x logical time steps
  double p_phys = 1e-3;
  double epsilon = 1e-2;
  double t_cycle = 1e-6;  // seconds per syndrome cycle
  ErrorModel model;

  double routing_factor() const { return static_cast<double>(a) / static_cast<double>(q); }
};

/// Throws std::invalid_argument naming the first offending field.
void validate(const ErrorModel& model);
void validate(const ComputationProfile& profile);

/// Throws std::invalid_argument for even d or d < 3.
double logical_error_rate(int d, double p, const ErrorModel& model = {});

/// 1 - (1 - P_L)^V, evaluated as -expm1(V log1p(-P_L)).
double total_failure(double volume, double p_logical);

/// Smallest odd d >= 3 with total_failure <= epsilon. Throws std::domain_error
/// when p >= p_th or no d <= kMaxDistance meets the budget.
int required_distance(double volume, double p, double epsilon, const ErrorModel& model = {});

/// floor(epsilon / total_failure), or kSafetySentinel when that is infinite or
/// too large for int64.
std::int64_t safety_factor(double volume, int d, double p, double epsilon,
                           const ErrorModel& model = {});

struct BusDistance {
  int d_b = 0;
  int iterations = 0;
  int d_s = 0;       // required distance of V_s at termination
  double v_s = 0.0;  // scale * V_a * d_b at termination
};

/// Iterates d_b from d_a in odd steps. Each pass sets V_s = scale * V_a * d_b
/// and d_s = required_distance(V_s); it stops once d_s <= d_b and the safety
/// factor of (V_s, d_b) beats that of (V_a, d_a). The comparison uses the
/// unsaturated floors; two infinite factors count as a win. Throws
/// std::domain_error if d_b would pass kMaxDistance.
BusDistance solve_bus_distance(const ComputationProfile& profile, int d_a, double scale = 0.5);

struct EstimateOptions {
  std::optional<int> force_d_wo;
  std::optional<int> force_d_with;
  double scale = 0.5;
};

struct TradeoffReport {
  int d_wo = 0;
  int d_with = 0;
  int iterations = 0;
  std::int64_t qc_wo = 0;
  std::int64_t qc_with = 0;
  double improvement = 0.0;  // qc_with / qc_wo
  double hours_wo = 0.0;
  double hours_with = 0.0;   // hours_wo * d_with
  std::int64_t safety_wo = 0;
  std::int64_t safety_with = 0;
  double v_a = 0.0;
  double v_b = 0.0;  // V_a * d_with
  double v_s = 0.0;
};

/// d_wo from required_distance (or forced), d_with from solve_bus_distance (or
/// forced; never below d_wo), table-model qubit counts, and
/// hours_wo = V / (Q + A) * d_wo * t_cycle / 3600.
TradeoffReport estimate(const ComputationProfile& profile, const EstimateOptions& options = {});

struct SweepPoint {
  double scale = 1.0;
  TradeoffReport report;
};

/// Volume scale at which d_wo steps from d_from to d_to.
struct BinBoundary {
  double scale = 0.0;
  int d_from = 0;
  int d_to = 0;
};

struct SweepResult {
  std::vector<SweepPoint> points;
  std::vector<BinBoundary> bins;
};

/// Largest volume that distance d still carries within the budget:
/// log1p(-epsilon) / log1p(-P_L(d)).
double max_volume(int d, double p, double epsilon, const ErrorModel& model = {});

/// `steps` evenly spaced scales over [scale_min, scale_max] (one point at
/// scale_min when steps == 1) and every bin boundary inside the range. Forced
/// distances in `options` are ignored. Throws std::invalid_argument for
/// steps == 0 or a non-positive or inverted range.
SweepResult sweep(const ComputationProfile& profile, double scale_min, double scale_max,
                  std::size_t steps, const EstimateOptions& options = {});

struct CounterexampleRow {
  int d_a = 0;
  int d_b = 0;
  int iterations = 0;
  std::int64_t qc_wo = 0;
  std::int64_t qc_with = 0;
  bool improved = false;
};

struct CounterexampleReport {
  double scale = 0.0;
  std::vector<CounterexampleRow> rows;
  bool any_improved() const;
};

/// Q = 7, A = 4, V = 253 circuit with d_a forced to every odd value in
/// [d_min, d_max]. The default scale is the 7/11 share of data patches.
ComputationProfile counterexample_profile();
CounterexampleReport counterexample(int d_min = 15, int d_max = 45, double scale = 7.0 / 11.0);

}  // namespace databus
