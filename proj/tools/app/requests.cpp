#include "requests.hpp"

#include <charconv>
#include <cmath>

namespace databus::app {

namespace {

constexpr std::size_t kMaxSteps = 10000;

std::optional<double> optional_number(const Params& params, const std::string& key) {
  const auto it = params.find(key);
  if (it == params.end()) return std::nullopt;
  return parse_number(key, it->second);
}

double number_or(const Params& params, const std::string& key, double fallback) {
  return optional_number(params, key).value_or(fallback);
}

double required_number(const Params& params, const std::string& key) {
  const auto v = optional_number(params, key);
  if (!v) throw FieldError(key, "required");
  return *v;
}

std::int64_t whole(const std::string& key, double v) {
  if (v != std::floor(v) || std::abs(v) > 9.0e15) throw FieldError(key, "must be an integer");
  return static_cast<std::int64_t>(v);
}

std::optional<int> optional_distance(const Params& params, const std::string& key) {
  const auto v = optional_number(params, key);
  if (!v) return std::nullopt;
  const auto d = whole(key, *v);
  if (d < 3 || d > kMaxDistance || d % 2 == 0) {
    throw FieldError(key, "must be an odd distance between 3 and " + std::to_string(kMaxDistance));
  }
  return static_cast<int>(d);
}

}  // namespace

std::string flag_for(const std::string& field) {
  static const std::map<std::string, std::string> flags = {
      {"volume", "--volume"},       {"patches", "--patches"},     {"routing", "--routing-factor"},
      {"p", "--p-phys"},            {"epsilon", "--epsilon"},     {"t_cycle", "--t-cycle"},
      {"bus_scale", "--bus-scale"}, {"d_wo", "--force-d"},        {"d_with", "--force-d-with"},
      {"scale_min", "--scale-min"}, {"scale_max", "--scale-max"}, {"steps", "--steps"},
      {"seed", "--seed"},           {"distance", "--distance"},   {"trials", "--trials"},
      {"oracle_trials", "--oracle-trials"}};
  const auto it = flags.find(field);
  return it == flags.end() ? field : it->second;
}

double parse_number(const std::string& field, const std::string& text) {
  double v = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  const auto res = std::from_chars(first, last, v);
  if (text.empty() || res.ec != std::errc{} || res.ptr != last || !std::isfinite(v)) {
    throw FieldError(field, "not a number: \"" + text + "\"");
  }
  return v;
}

EstimateRequest parse_estimate(const Params& params) {
  EstimateRequest req;
  auto& prof = req.profile;

  prof.volume = required_number(params, "volume");
  if (prof.volume < 1.0) throw FieldError("volume", "must be at least 1");
  const auto patches = whole("patches", required_number(params, "patches"));
  const double routing = number_or(params, "routing", 0.5);
  if (!(routing >= 0.0 && routing <= 1.0)) throw FieldError("routing", "must be in [0, 1]");
  prof.q = std::llround(static_cast<double>(patches) / (1.0 + routing));
  prof.a = patches - prof.q;
  if (prof.q < 1 || prof.a < 1) {
    throw FieldError("patches", "too few patches for at least one data and one routing patch");
  }

  prof.p_phys = number_or(params, "p", 1e-3);
  if (!(prof.p_phys > 0.0 && prof.p_phys < prof.model.p_th)) {
    throw FieldError("p", "must be in (0, 0.01), below the threshold");
  }
  prof.epsilon = number_or(params, "epsilon", 1e-2);
  if (!(prof.epsilon > 0.0 && prof.epsilon < 1.0)) throw FieldError("epsilon", "must be in (0, 1)");
  prof.t_cycle = number_or(params, "t_cycle", 1e-6);
  if (!(prof.t_cycle > 0.0)) throw FieldError("t_cycle", "must be positive");

  req.options.scale = number_or(params, "bus_scale", 0.5);
  if (!(req.options.scale > 0.0)) throw FieldError("bus_scale", "must be positive");
  req.options.force_d_wo = optional_distance(params, "d_wo");
  req.options.force_d_with = optional_distance(params, "d_with");
  if (req.options.force_d_with) {
    const int d_wo = req.options.force_d_wo.value_or(0);
    if (*req.options.force_d_with < d_wo) throw FieldError("d_with", "must not be below d_wo");
  }
  return req;
}

SweepRequest parse_sweep(const Params& params) {
  SweepRequest req;
  req.base = parse_estimate(params);
  req.scale_min = number_or(params, "scale_min", req.scale_min);
  req.scale_max = number_or(params, "scale_max", req.scale_max);
  if (!(req.scale_min > 0.0)) throw FieldError("scale_min", "must be positive");
  if (req.base.profile.volume * req.scale_min < 1.0) {
    throw FieldError("scale_min", "scales the volume below 1");
  }
  if (!(req.scale_max >= req.scale_min)) throw FieldError("scale_max", "must be >= scale_min");
  const auto steps = whole("steps", number_or(params, "steps", static_cast<double>(req.steps)));
  if (steps < 1 || steps > static_cast<std::int64_t>(kMaxSteps)) {
    throw FieldError("steps", "must be between 1 and " + std::to_string(kMaxSteps));
  }
  req.steps = static_cast<std::size_t>(steps);
  return req;
}

}  // namespace databus::app
