#include "databus/report_io.hpp"

#include <charconv>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace databus {

namespace {

Json bits(const std::vector<std::uint8_t>& v) {
  Json out = Json::array();
  for (auto b : v) out.push_back(static_cast<int>(b));
  return out;
}

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

template <class T>
std::string str(T v) {
  return std::to_string(v);
}

}  // namespace

std::string format_number(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value);
  if (res.ec != std::errc{}) throw std::runtime_error("cannot format number");
  return std::string(buf, res.ptr);
}

Json to_json(const ComputationProfile& p) {
  return Json{{"q", p.q},
              {"a", p.a},
              {"patches", p.q + p.a},
              {"routing_factor", p.routing_factor()},
              {"volume", p.volume},
              {"p_phys", p.p_phys},
              {"epsilon", p.epsilon},
              {"t_cycle", p.t_cycle},
              {"a0", p.model.a0},
              {"p_th", p.model.p_th}};
}

Json to_json(const TradeoffReport& r) {
  return Json{{"d_wo", r.d_wo},
              {"d_with", r.d_with},
              {"qc_wo", r.qc_wo},
              {"qc_with", r.qc_with},
              {"improvement", r.improvement},
              {"hours_wo", r.hours_wo},
              {"hours_with", r.hours_with},
              {"safety_wo", r.safety_wo},
              {"safety_with", r.safety_with},
              {"v_a", r.v_a},
              {"v_b", r.v_b},
              {"v_s", r.v_s},
              {"iterations", r.iterations}};
}

Json to_json(const SweepResult& sweep) {
  Json points = Json::array();
  for (const auto& pt : sweep.points) {
    Json j{{"scale", pt.scale}};
    const Json report = to_json(pt.report);
    for (const auto& [k, v] : report.items()) j[k] = v;
    points.push_back(std::move(j));
  }
  Json bins = Json::array();
  for (const auto& b : sweep.bins) {
    bins.push_back(Json{{"scale", b.scale}, {"d_from", b.d_from}, {"d_to", b.d_to}});
  }
  return Json{{"points", std::move(points)}, {"bins", std::move(bins)}};
}

Json to_json(const Preset& preset) {
  const auto& pub = preset.published;
  Json published{{"d_wo", pub.d_wo},
                 {"d_with", pub.d_with},
                 {"qc_wo", pub.qc_wo},
                 {"qc_with", pub.qc_with},
                 {"improvement", pub.improvement},
                 {"hours_wo", pub.hours_wo ? Json(*pub.hours_wo) : Json(nullptr)},
                 {"hours_with", pub.hours_with ? Json(*pub.hours_with) : Json(nullptr)}};
  return Json{{"key", preset.key},
              {"name", preset.name},
              {"profile", to_json(preset.profile)},
              {"published", std::move(published)}};
}

Json presets_json() {
  Json out = Json::array();
  for (const auto& p : table1_presets()) out.push_back(to_json(p));
  return out;
}

Json to_json(const CounterexampleReport& report) {
  Json rows = Json::array();
  for (const auto& r : report.rows) {
    rows.push_back(Json{{"d_a", r.d_a},
                        {"d_b", r.d_b},
                        {"iterations", r.iterations},
                        {"qc_wo", r.qc_wo},
                        {"qc_with", r.qc_with},
                        {"improved", r.improved}});
  }
  return Json{{"scale", report.scale},
              {"profile", to_json(counterexample_profile())},
              {"any_improved", report.any_improved()},
              {"rows", std::move(rows)}};
}

Json to_json(const ParityResult& result) {
  Json reps = Json::array();
  for (const auto& r : result.repetitions) {
    Json syndromes = Json::array();
    for (const auto& round : r.verify.rounds) syndromes.push_back(bits(round));
    std::vector<std::uint8_t> bus_bits;
    for (int o : r.bus_outcomes) bus_bits.push_back(o < 0 ? 1 : 0);
    reps.push_back(Json{{"syndromes", std::move(syndromes)},
                        {"voted_syndromes", bits(r.verify.voted)},
                        {"correction", bits(r.verify.correction)},
                        {"injected", bits(r.verify.injected)},
                        {"readout_flips", bits(r.readout_flips)},
                        {"bus_bits", bits(bus_bits)},
                        {"parity", r.parity}});
  }
  return Json{{"vote", result.parity}, {"tie", result.tie}, {"repetitions", std::move(reps)}};
}

Json table1_json(const std::vector<Table1Row>& rows) {
  Json out = Json::array();
  for (const auto& row : rows) {
    out.push_back(Json{{"key", row.preset->key},
                       {"name", row.preset->name},
                       {"injected", to_json(row.injected)},
                       {"pipeline", to_json(row.pipeline)},
                       {"published", to_json(*row.preset)["published"]},
                       {"residual_wo", row.residual_wo},
                       {"residual_with", row.residual_with},
                       {"exact", row.exact()}});
  }
  return out;
}

Json estimate_json(const ComputationProfile& profile, const TradeoffReport& report) {
  return Json{{"profile", to_json(profile)}, {"report", to_json(report)}};
}

Json sweep_json(const ComputationProfile& profile, const SweepResult& sweep) {
  Json j = to_json(sweep);
  return Json{{"profile", to_json(profile)}, {"points", j["points"]}, {"bins", j["bins"]}};
}

std::string csv_row(double scale, const TradeoffReport& r) {
  std::string s = format_number(scale);
  for (const std::string& f :
       {str(r.d_wo), str(r.d_with), str(r.qc_wo), str(r.qc_with), format_number(r.improvement),
        format_number(r.hours_wo), format_number(r.hours_with), str(r.safety_wo),
        str(r.safety_with)}) {
    s += ',';
    s += f;
  }
  return s;
}

std::string to_csv(const TradeoffReport& report) {
  return std::string(kCsvHeader) + "\n" + csv_row(1.0, report) + "\n";
}

std::string to_csv(const SweepResult& sweep) {
  std::string out = std::string(kCsvHeader) + "\n";
  for (const auto& pt : sweep.points) out += csv_row(pt.scale, pt.report) + "\n";
  return out;
}

std::string to_table(const TradeoffReport& r) {
  std::ostringstream os;
  auto line = [&](const char* label, const std::string& wo, const std::string& with) {
    os << pad(label, 12) << pad(wo, 18) << pad(with, 18) << '\n';
  };
  line("", "without bus", "with bus");
  line("distance", str(r.d_wo), str(r.d_with));
  line("qubits", str(r.qc_wo), str(r.qc_with));
  line("hours", fixed(r.hours_wo, 4), fixed(r.hours_with, 4));
  line("safety", str(r.safety_wo), str(r.safety_with));
  os << pad("improvement", 12) << pad(fixed(r.improvement, 4), 18) << '\n';
  return os.str();
}

std::string to_table(const SweepResult& sweep) {
  std::ostringstream os;
  os << pad("scale", 12) << pad("d_wo", 6) << pad("d_with", 8) << pad("qc_wo", 14)
     << pad("qc_with", 14) << pad("improv", 9) << '\n';
  for (const auto& pt : sweep.points) {
    const auto& r = pt.report;
    os << pad(fixed(pt.scale, 4), 12) << pad(str(r.d_wo), 6) << pad(str(r.d_with), 8)
       << pad(str(r.qc_wo), 14) << pad(str(r.qc_with), 14) << pad(fixed(r.improvement, 3), 9)
       << '\n';
  }
  for (const auto& b : sweep.bins) {
    os << "bin boundary at scale " << format_number(b.scale) << ": d " << b.d_from << " -> "
       << b.d_to << '\n';
  }
  return os.str();
}

std::string table1_text(const std::vector<Table1Row>& rows) {
  std::ostringstream os;
  os << pad("circuit", 10) << pad("d pub", 8) << pad("d est", 8) << pad("qc_wo", 10)
     << pad("pub", 10) << pad("qc_with", 10) << pad("pub", 10) << pad("resid", 7)
     << pad("improv", 8) << pad("pub", 6) << pad("hours_wo", 12) << pad("pub", 12) << '\n';
  for (const auto& row : rows) {
    const auto& pub = row.preset->published;
    const auto& inj = row.injected;
    os << pad(row.preset->name, 10) << pad(str(pub.d_wo) + "/" + str(pub.d_with), 8)
       << pad(str(row.pipeline.d_wo) + "/" + str(row.pipeline.d_with), 8) << pad(str(inj.qc_wo), 10)
       << pad(str(pub.qc_wo), 10) << pad(str(inj.qc_with), 10) << pad(str(pub.qc_with), 10)
       << pad(str(row.residual_with), 7) << pad(fixed(inj.improvement, 2), 8)
       << pad(fixed(pub.improvement, 2), 6) << pad(fixed(row.pipeline.hours_wo, 2), 12)
       << pad(pub.hours_wo ? fixed(*pub.hours_wo, 2) : "n/a", 12)
       << (row.exact() ? "  exact" : "  residual") << '\n';
  }
  return os.str();
}

std::string counterexample_text(const CounterexampleReport& report) {
  std::ostringstream os;
  os << "scale " << format_number(report.scale) << '\n';
  os << pad("d_a", 5) << pad("d_b", 5) << pad("qc_wo", 9) << pad("qc_with", 9) << "  result\n";
  for (const auto& r : report.rows) {
    os << pad(str(r.d_a), 5) << pad(str(r.d_b), 5) << pad(str(r.qc_wo), 9) << pad(str(r.qc_with), 9)
       << (r.improved ? "  improved" : "  not improved") << '\n';
  }
  return os.str();
}

}  // namespace databus
