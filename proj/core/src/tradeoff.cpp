#include "databus/tradeoff.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "databus/layout.hpp"

namespace databus {

namespace {

void check_distance(int d) {
  if (d < 3 || d % 2 == 0) {
    throw std::invalid_argument("distance must be odd and at least 3, got " + std::to_string(d));
  }
}

// floor(epsilon / failure) without saturation; infinity when failure is 0.
double safety_ratio(double volume, int d, double p, double epsilon, const ErrorModel& model) {
  const double failure = total_failure(volume, logical_error_rate(d, p, model));
  if (failure <= 0.0) return std::numeric_limits<double>::infinity();
  return std::floor(epsilon / failure);
}

}  // namespace

void validate(const ErrorModel& model) {
  if (!(model.a0 > 0.0)) throw std::invalid_argument("a0 must be positive");
  if (!(model.p_th > 0.0 && model.p_th <= 1.0)) throw std::invalid_argument("p_th must be in (0, 1]");
}

void validate(const ComputationProfile& profile) {
  if (profile.q < 1) throw std::invalid_argument("q must be at least 1");
  if (profile.a < 1) throw std::invalid_argument("a must be at least 1");
  if (!(profile.volume >= 1.0) || !std::isfinite(profile.volume)) {
    throw std::invalid_argument("volume must be a finite number >= 1");
  }
  validate(profile.model);
  if (!(profile.p_phys > 0.0 && profile.p_phys < profile.model.p_th)) {
    throw std::invalid_argument("p_phys must be in (0, p_th)");
  }
  if (!(profile.epsilon > 0.0 && profile.epsilon < 1.0)) {
    throw std::invalid_argument("epsilon must be in (0, 1)");
  }
  if (!(profile.t_cycle > 0.0)) throw std::invalid_argument("t_cycle must be positive");
}

double logical_error_rate(int d, double p, const ErrorModel& model) {
  check_distance(d);
  return model.a0 * std::pow(p / model.p_th, (d + 1) / 2);
}

double total_failure(double volume, double p_logical) {
  if (p_logical <= 0.0) return 0.0;
  if (p_logical >= 1.0) return 1.0;
  return -std::expm1(volume * std::log1p(-p_logical));
}

int required_distance(double volume, double p, double epsilon, const ErrorModel& model) {
  if (!(p < model.p_th)) throw std::domain_error("p must be below the threshold p_th");
  for (int d = 3; d <= kMaxDistance; d += 2) {
    if (total_failure(volume, logical_error_rate(d, p, model)) <= epsilon) return d;
  }
  throw std::domain_error("no distance up to " + std::to_string(kMaxDistance) +
                          " meets the failure budget");
}

std::int64_t safety_factor(double volume, int d, double p, double epsilon,
                           const ErrorModel& model) {
  const double ratio = safety_ratio(volume, d, p, epsilon, model);
  if (!(ratio < 9.2e18)) return kSafetySentinel;
  return static_cast<std::int64_t>(ratio);
}

BusDistance solve_bus_distance(const ComputationProfile& profile, int d_a, double scale) {
  validate(profile);
  check_distance(d_a);
  if (!(scale > 0.0)) throw std::invalid_argument("scale must be positive");
  const auto& m = profile.model;
  const double base = safety_ratio(profile.volume, d_a, profile.p_phys, profile.epsilon, m);

  BusDistance r;
  r.d_b = d_a;
  while (true) {
    if (r.d_b > kMaxDistance) {
      throw std::domain_error("bus distance exceeds " + std::to_string(kMaxDistance));
    }
    ++r.iterations;
    r.v_s = scale * profile.volume * r.d_b;
    r.d_s = required_distance(r.v_s, profile.p_phys, profile.epsilon, m);
    if (r.d_s <= r.d_b) {
      const double s = safety_ratio(r.v_s, r.d_b, profile.p_phys, profile.epsilon, m);
      if (s > base || (std::isinf(s) && std::isinf(base))) return r;
    }
    r.d_b += 2;
  }
}

TradeoffReport estimate(const ComputationProfile& profile, const EstimateOptions& options) {
  validate(profile);
  TradeoffReport r;
  r.v_a = profile.volume;
  r.d_wo = options.force_d_wo.value_or(0);
  if (options.force_d_wo) {
    check_distance(r.d_wo);
  } else {
    r.d_wo = required_distance(profile.volume, profile.p_phys, profile.epsilon, profile.model);
  }
  if (options.force_d_with) {
    r.d_with = *options.force_d_with;
    check_distance(r.d_with);
    if (r.d_with < r.d_wo) throw std::invalid_argument("forced d_with is below d_wo");
    r.v_s = options.scale * profile.volume * r.d_with;
  } else {
    const auto solved = solve_bus_distance(profile, r.d_wo, options.scale);
    r.d_with = solved.d_b;
    r.iterations = solved.iterations;
    r.v_s = solved.v_s;
  }
  r.v_b = profile.volume * r.d_with;
  r.qc_wo = qc_without_bus(profile.q, profile.a, r.d_wo);
  r.qc_with = qc_with_bus(profile.q, r.d_with);
  r.improvement = static_cast<double>(r.qc_with) / static_cast<double>(r.qc_wo);
  r.hours_wo = profile.volume / static_cast<double>(profile.q + profile.a) * r.d_wo *
               profile.t_cycle / 3600.0;
  r.hours_with = r.hours_wo * r.d_with;
  r.safety_wo = safety_factor(profile.volume, r.d_wo, profile.p_phys, profile.epsilon, profile.model);
  r.safety_with = safety_factor(r.v_s, r.d_with, profile.p_phys, profile.epsilon, profile.model);
  return r;
}

double max_volume(int d, double p, double epsilon, const ErrorModel& model) {
  return std::log1p(-epsilon) / std::log1p(-logical_error_rate(d, p, model));
}

SweepResult sweep(const ComputationProfile& profile, double scale_min, double scale_max,
                  std::size_t steps, const EstimateOptions& options) {
  validate(profile);
  if (steps == 0) throw std::invalid_argument("steps must be at least 1");
  if (!(scale_min > 0.0) || !(scale_max >= scale_min) || !std::isfinite(scale_max)) {
    throw std::invalid_argument("scale range must satisfy 0 < scale_min <= scale_max");
  }
  EstimateOptions opts;
  opts.scale = options.scale;

  SweepResult result;
  for (std::size_t i = 0; i < steps; ++i) {
    const double t = steps == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(steps - 1);
    const double s = i + 1 == steps && steps > 1 ? scale_max : scale_min + t * (scale_max - scale_min);
    ComputationProfile scaled = profile;
    scaled.volume = profile.volume * s;
    if (scaled.volume < 1.0) {
      throw std::invalid_argument("scale_min takes the volume below 1");
    }
    result.points.push_back({s, estimate(scaled, opts)});
  }

  const auto& m = profile.model;
  int d = required_distance(profile.volume * scale_min, profile.p_phys, profile.epsilon, m);
  const int d_end = required_distance(profile.volume * scale_max, profile.p_phys, profile.epsilon, m);
  for (; d < d_end; d += 2) {
    result.bins.push_back(
        {max_volume(d, profile.p_phys, profile.epsilon, m) / profile.volume, d, d + 2});
  }
  return result;
}

bool CounterexampleReport::any_improved() const {
  return std::any_of(rows.begin(), rows.end(), [](const auto& r) { return r.improved; });
}

ComputationProfile counterexample_profile() {
  ComputationProfile p;
  p.q = 7;
  p.a = 4;
  p.volume = 11.0 * 23.0;
  return p;
}

CounterexampleReport counterexample(int d_min, int d_max, double scale) {
  if (d_min > d_max) throw std::invalid_argument("empty distance range");
  const auto profile = counterexample_profile();
  CounterexampleReport report;
  report.scale = scale;
  for (int d = d_min + (d_min % 2 == 0 ? 1 : 0); d <= d_max; d += 2) {
    const auto solved = solve_bus_distance(profile, d, scale);
    CounterexampleRow row;
    row.d_a = d;
    row.d_b = solved.d_b;
    row.iterations = solved.iterations;
    row.qc_wo = qc_without_bus(profile.q, profile.a, d);
    row.qc_with = qc_with_bus(profile.q, solved.d_b);
    row.improved = row.qc_with < row.qc_wo;
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace databus
