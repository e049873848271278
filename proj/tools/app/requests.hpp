#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "databus/tradeoff.hpp"

namespace databus::app {

/// A bad input value; `field` is the query key ("volume", "p", ...).
class FieldError : public std::invalid_argument {
 public:
  FieldError(std::string field, const std::string& message)
      : std::invalid_argument(field + ": " + message), field_(std::move(field)), message_(message) {}
  const std::string& field() const { return field_; }
  const std::string& message() const { return message_; }

 private:
  std::string field_;
  std::string message_;
};

/// Raw key/value inputs, keyed by query name. The CLI fills it from flags.
using Params = std::map<std::string, std::string>;

/// Command-line spelling of a query key ("p" -> "--p-phys").
std::string flag_for(const std::string& field);

/// Parses a finite decimal or scientific-notation number; the whole string
/// must be consumed.
double parse_number(const std::string& field, const std::string& text);

struct EstimateRequest {
  ComputationProfile profile;
  EstimateOptions options;
};

/// Keys: volume and patches (required), routing (0.5), p (0.001),
/// epsilon (0.01), t_cycle (1e-6), bus_scale (0.5), d_wo and d_with (optional
/// forced distances). Q = round(patches / (1 + routing)), A = patches - Q.
/// Estimator preconditions are checked here so errors name the field.
EstimateRequest parse_estimate(const Params& params);

struct SweepRequest {
  EstimateRequest base;
  double scale_min = 0.1;
  double scale_max = 10.0;
  std::size_t steps = 50;
};

/// parse_estimate plus scale_min, scale_max and steps (>= 1, at most 10000).
SweepRequest parse_sweep(const Params& params);

}  // namespace databus::app
