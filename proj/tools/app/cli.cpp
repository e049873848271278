#include "cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <iostream>

#include "databus/presets.hpp"
#include "databus/report_io.hpp"
#include "databus/verification.hpp"
#include "requests.hpp"
#include "service.hpp"

namespace databus::app {

namespace {

// Numeric flags are taken as text so every one accepts scientific notation and
// reports errors under its own name.
struct ProfileFlags {
  std::map<std::string, std::string> values;

  void add(CLI::App* cmd, const std::string& key, const std::string& help) {
    cmd->add_option(flag_for(key), values[key], help);
  }
  Params params(CLI::App* cmd) const {
    Params p;
    for (const auto& [key, value] : values) {
      if (cmd->get_option(flag_for(key))->count() > 0) p[key] = value;
    }
    return p;
  }
};

void add_profile_flags(CLI::App* cmd, ProfileFlags& f) {
  f.add(cmd, "volume", "Space-time volume in patch x time steps (required)");
  f.add(cmd, "patches", "Total patches Q + A (required)");
  f.add(cmd, "routing", "Routing factor A/Q [0.5]");
  f.add(cmd, "p", "Physical error rate [0.001]");
  f.add(cmd, "epsilon", "Failure budget for the whole computation [0.01]");
  f.add(cmd, "t_cycle", "Seconds per syndrome cycle [1e-6]");
  f.add(cmd, "bus_scale", "Factor on V_a * d_b when sizing the bus distance [0.5]");
  f.add(cmd, "d_wo", "Force the distance without bus");
  f.add(cmd, "d_with", "Force the distance with bus");
}

std::uint64_t parse_seed(const std::string& text) {
  std::uint64_t v = 0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || res.ec != std::errc{} || res.ptr != text.data() + text.size()) {
    throw FieldError("seed", "not an unsigned 64-bit integer: \"" + text + "\"");
  }
  return v;
}

std::size_t parse_count(const std::string& field, const std::string& text) {
  const double v = parse_number(field, text);
  if (v < 0 || v != static_cast<double>(static_cast<std::size_t>(v))) {
    throw FieldError(field, "must be a non-negative integer");
  }
  return static_cast<std::size_t>(v);
}

int verify_protocol(std::size_t distance, std::size_t trials, std::size_t oracle_trials,
                    std::uint64_t seed, std::ostream& out) {
  bool ok = true;
  auto line = [&](bool pass, const std::string& text) {
    out << (pass ? "PASS  " : "FAIL  ") << text << '\n';
    ok = ok && pass;
  };

  for (const auto& c : check_reference_tables()) {
    std::string text = "table " + c.name + (c.printed ? "" : " (supporting fixture)");
    if (!c.equal) text += ": " + c.mismatch;
    line(c.equal, text);
  }

  const auto oracle = run_oracle_suite(distance, oracle_trials, seed);
  line(oracle.product_mismatches == 0 && oracle.oracle_mismatches == 0,
       "oracle d=" + std::to_string(distance) + ": " + std::to_string(oracle.trials) +
           " two-patch runs, " + std::to_string(oracle.product_mismatches) +
           " eigenvalue mismatches, " + std::to_string(oracle.oracle_mismatches) +
           " replay mismatches" + (oracle.first_failure.empty() ? "" : "; " + oracle.first_failure));
  line(oracle.y_mismatches == 0 && oracle.y_unflipped_agreements == 0 &&
           oracle.y_reversed_agreements == 0,
       "Y measurement: " + std::to_string(oracle.y_trials) + " runs, " +
           std::to_string(oracle.y_mismatches) + " mismatches, " +
           std::to_string(oracle.y_unflipped_agreements) + " agree without the sign flip, " +
           std::to_string(oracle.y_reversed_agreements) + " agree with the CNOT sets swapped");

  if (trials == 0) {
    out << "SKIP  noise statistics (--trials 0)\n";
  } else {
    const auto noise = run_noise_suite(trials, seed);
    line(noise.parity_within_3_sigma,
         "P_odd(n=4, p=0.1): " + format_number(noise.parity.empirical_p_odd) + " vs " +
             format_number(noise.parity.analytic_p_odd) + " (sigma " +
             format_number(noise.parity.sigma_p_odd) + ")");
    line(noise.vote_within_3_sigma,
         "vote failure (q=0.1, 3 repetitions): " + format_number(noise.vote.empirical_vote_failure) +
             " vs " + format_number(noise.vote.analytic_vote_failure) + " (sigma " +
             format_number(noise.vote.sigma_vote_failure) + ")");
    std::string rates;
    for (double r : noise.monotone_rates) rates += " " + format_number(r);
    line(noise.monotone, "vote failure at p=0.01 over 1,3,5,7 repetitions:" + rates);
  }
  return ok ? kExitOk : kExitFailed;
}

void emit_estimate(const EstimateRequest& req, const std::string& format, std::ostream& out) {
  const auto report = estimate(req.profile, req.options);
  if (format == "json") {
    out << estimate_json(req.profile, report).dump(2) << '\n';
  } else if (format == "csv") {
    out << to_csv(report);
  } else {
    out << to_table(report);
  }
}

void emit_sweep(const SweepRequest& req, const std::string& format, std::ostream& out) {
  const auto result =
      sweep(req.base.profile, req.scale_min, req.scale_max, req.steps, req.base.options);
  if (format == "json") {
    out << sweep_json(req.base.profile, result).dump(2) << '\n';
  } else if (format == "csv") {
    out << to_csv(result);
  } else {
    out << to_table(result);
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Data bus protocol verification and qubit-count trade-off estimator", "databus"};
  app.require_subcommand(1);

  auto* est = app.add_subcommand("estimate", "Distances, qubit counts and hours for one circuit");
  ProfileFlags est_flags;
  add_profile_flags(est, est_flags);
  std::string est_format = "json";
  est->add_option("--format", est_format, "json, csv or table")
      ->check(CLI::IsMember({"json", "csv", "table"}));

  auto* sw = app.add_subcommand("sweep", "Estimates over a range of volume scales");
  ProfileFlags sw_flags;
  add_profile_flags(sw, sw_flags);
  sw_flags.add(sw, "scale_min", "Smallest volume multiplier [0.1]");
  sw_flags.add(sw, "scale_max", "Largest volume multiplier [10]");
  sw_flags.add(sw, "steps", "Number of evenly spaced points [50]");
  std::string sw_format = "json";
  sw->add_option("--format", sw_format, "json, csv or table")
      ->check(CLI::IsMember({"json", "csv", "table"}));

  auto* t1 = app.add_subcommand("table1", "Reproduce the five-circuit comparison table");
  std::string t1_format = "table";
  t1->add_option("--format", t1_format, "json or table")->check(CLI::IsMember({"json", "table"}));

  auto* ce = app.add_subcommand("counterexample", "Q=7, A=4, V=253 circuit over forced distances");
  int ce_min = 15;
  int ce_max = 45;
  std::string ce_scale;
  std::string ce_format = "table";
  ce->add_option("--d-min", ce_min, "Smallest d_a [15]");
  ce->add_option("--d-max", ce_max, "Largest d_a [45]");
  ce->add_option("--bus-scale", ce_scale, "Single scale to report [both 7/11 and 0.5]");
  ce->add_option("--format", ce_format, "json or table")->check(CLI::IsMember({"json", "table"}));

  auto* vp = app.add_subcommand("verify-protocol", "Simulate the bus protocol against its oracles");
  std::string vp_distance = "2";
  std::string vp_trials = "20000";
  std::string vp_oracle = "1000";
  std::string vp_seed = "1";
  vp->add_option("--distance", vp_distance, "Patch distance for the oracle suite, 2..5 [2]");
  vp->add_option("--trials", vp_trials, "Monte-Carlo trials; 0 skips the statistics [20000]");
  vp->add_option("--oracle-trials", vp_oracle, "Noiseless two-patch runs [1000]");
  vp->add_option("--seed", vp_seed, "Unsigned 64-bit seed [1]");

  auto* sv = app.add_subcommand("serve", "HTTP/JSON service on localhost");
  std::string sv_host = "127.0.0.1";
  int sv_port = 8080;
  sv->add_option("--host", sv_host, "Bind address [127.0.0.1]");
  sv->add_option("--port", sv_port, "Port; 0 picks a free one [8080]")->check(CLI::Range(0, 65535));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*est) {
      emit_estimate(parse_estimate(est_flags.params(est)), est_format, out);
    } else if (*sw) {
      emit_sweep(parse_sweep(sw_flags.params(sw)), sw_format, out);
    } else if (*t1) {
      const auto rows = reproduce_table1();
      if (t1_format == "json") {
        out << table1_json(rows).dump(2) << '\n';
      } else {
        out << table1_text(rows);
      }
    } else if (*ce) {
      std::vector<double> scales{7.0 / 11.0, 0.5};
      if (!ce_scale.empty()) scales = {parse_number("bus_scale", ce_scale)};
      Json all = Json::array();
      for (double s : scales) {
        if (!(s > 0.0)) throw FieldError("bus_scale", "must be positive");
        const auto report = counterexample(ce_min, ce_max, s);
        if (ce_format == "json") {
          all.push_back(to_json(report));
        } else {
          out << counterexample_text(report);
          std::size_t improved = 0;
          for (const auto& r : report.rows) improved += r.improved ? 1 : 0;
          out << "improved at " << improved << " of " << report.rows.size()
              << " distances; whether the bus never helps depends on the error model\n\n";
        }
      }
      if (ce_format == "json") out << all.dump(2) << '\n';
    } else if (*vp) {
      const auto distance = parse_count("distance", vp_distance);
      if (distance < 2 || distance > 5) throw FieldError("distance", "must be between 2 and 5");
      return verify_protocol(distance, parse_count("trials", vp_trials),
                             parse_count("oracle_trials", vp_oracle), parse_seed(vp_seed), out);
    } else if (*sv) {
      Server server;
      const int port = server.bind(sv_host, sv_port);
      out << "listening on http://" << sv_host << ':' << port << std::endl;
      server.listen();
    }
  } catch (const FieldError& e) {
    err << "error: " << flag_for(e.field()) << ": " << e.message() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailed;
  }
  return kExitOk;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args(argv + (argc > 0 ? 1 : 0), argv + argc);
  return run_cli(args, out, err);
}

}  // namespace databus::app
