#include "virtemp/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "virtemp/core.hpp"
#include "virtemp/error.hpp"
#include "virtemp/heatflow.hpp"
#include "virtemp/models.hpp"
#include "virtemp/otto.hpp"
#include "virtemp/state_io.hpp"
#include "virtemp/sweep.hpp"
#include "virtemp/transforms.hpp"
#include "virtemp/virtual_temp.hpp"

namespace virtemp::cli {

namespace {

using nlohmann::json;

std::string num(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

// JSON has no infinity; infinite temperatures are written as "inf".
json temp_json(double t) { return std::isinf(t) ? json("inf") : json(t); }

json temps_json(const std::vector<double>& ts) {
  json arr = json::array();
  for (double t : ts) arr.push_back(temp_json(t));
  return arr;
}

std::string join(std::span<const double> xs) {
  std::string s = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + num(xs[i]);
  return s + "]";
}

json state_json(const DiagonalState& s) {
  const auto lv = s.spectrum().levels();
  const auto pr = s.population().probs();
  return {{"levels", std::vector<double>(lv.begin(), lv.end())},
          {"probs", std::vector<double>(pr.begin(), pr.end())}};
}

json profile_json(const VtProfile& p) {
  return {{"adjacent", temps_json(p.adjacent)},
          {"t_min", temp_json(p.t_min)},
          {"t_max", temp_json(p.t_max)},
          {"mean", temp_json(p.mean)},
          {"weights", p.weights}};
}

// ---------------------------------------------------------------- analyze

void analyze(const std::string& path, bool as_json, std::ostream& out) {
  const DiagonalState state = load_state_file(path);
  const bool passive = is_passive(state);
  json doc = {{"passive", passive},
              {"mean_energy", mean_energy(state)},
              {"entropy", entropy(state.population())}};
  std::optional<VtProfile> profile;
  std::optional<EnergyBounds> bounds;
  std::optional<double> t_star;
  std::string t_star_note;
  if (passive) {
    profile = adjacent_profile(state);
    bounds = energy_bounds(state);
    try {
      t_star = effective_temperature(state);
    } catch (const Error& e) {
      t_star_note = e.what();
    }
    doc["profile"] = profile_json(*profile);
    doc["energy_bounds"] = {{"u_min", bounds->u_min}, {"u", bounds->u}, {"u_max", bounds->u_max}};
    doc["effective_temperature"] = t_star ? json(*t_star) : json(nullptr);
  }

  if (as_json) {
    out << doc.dump(2) << '\n';
    return;
  }
  out << "levels        " << join(state.spectrum().levels()) << '\n'
      << "probs         " << join(state.population().probs()) << '\n'
      << "passive       " << (passive ? "yes" : "no") << '\n'
      << "mean energy   " << num(mean_energy(state)) << '\n'
      << "entropy       " << num(entropy(state.population())) << '\n';
  if (!passive) {
    out << "(state is not passive: virtual temperatures are not defined)\n";
    return;
  }
  out << "\n  pair      gap           T_i\n";
  for (std::size_t i = 0; i < profile->adjacent.size(); ++i) {
    char line[96];
    std::snprintf(line, sizeof line, "  %zu-%zu  %12s  %14s\n", i + 1, i + 2,
                  num(state.spectrum().gap(i)).c_str(), num(profile->adjacent[i]).c_str());
    out << line;
  }
  out << "\nT_min         " << num(profile->t_min) << '\n'
      << "T_max         " << num(profile->t_max) << '\n'
      << "mean T        " << num(profile->mean) << '\n'
      << "T*            " << (t_star ? num(*t_star) : "n/a (" + t_star_note + ")") << '\n'
      << "U(T_min)      " << num(bounds->u_min) << '\n'
      << "U             " << num(bounds->u) << '\n'
      << "U(T_max)      " << num(bounds->u_max) << '\n';
}

// ------------------------------------------------------------- compare-vt

void compare_vt(const std::string& path, bool as_json, std::ostream& out) {
  const DiagonalState state = load_state_file(path);
  const MeanVtComparison c = compare_mean_vt(state);
  if (as_json) {
    json doc = {{"t_isoentropic", c.t_isoentropic},
                {"t_isoenergetic", c.t_isoenergetic},
                {"isoentropic",
                 {{"state", state_json(c.isoentropic.passive_state)},
                  {"extracted_work", c.isoentropic.extracted_work}}},
                {"isoenergetic",
                 {{"state", state_json(c.isoenergetic.passive_state)},
                  {"mixing_parameter", c.isoenergetic.mixing_parameter}}}};
    out << doc.dump(2) << '\n';
    return;
  }
  out << "isoentropic  probs " << join(c.isoentropic.passive_state.population().probs())
      << "  work " << num(c.isoentropic.extracted_work) << '\n'
      << "isoenergetic probs " << join(c.isoenergetic.passive_state.population().probs())
      << "  mixing " << num(c.isoenergetic.mixing_parameter) << '\n'
      << "mean T (isoentropic)   " << num(c.t_isoentropic) << '\n'
      << "mean T (isoenergetic)  " << num(c.t_isoenergetic) << '\n';
}

// --------------------------------------------------------------- heatflow

void heatflow(const std::string& path, double t_env, bool as_json, std::ostream& out) {
  const DiagonalState state = load_state_file(path);
  const HeatFlowVerdict v = heat_flow_direction(state, t_env);
  if (as_json) {
    json doc = {{"direction", std::string(to_string(v.direction))},
                {"rule", std::string(to_string(v.rule))},
                {"heat", v.heat}};
    out << doc.dump(2) << '\n';
    return;
  }
  out << "direction  " << to_string(v.direction) << '\n'
      << "rule       " << to_string(v.rule) << '\n'
      << "heat       " << num(v.heat) << "  (positive = absorbed by the system)\n";
}

// ------------------------------------------------------------------- otto

struct OttoFlags {
  std::string model = "xy";
  double b1 = 2.8, b2 = 2.0, j = 0.5, gamma = 0.4, th = 1.0, tc = 0.5;
  std::vector<double> hot_levels, cold_levels;
  std::string csv;
};

OttoSpec otto_spec(const OttoFlags& f) {
  switch (parse_sweep_model(f.model)) {
    case SweepModel::XY: return xy_otto_spec(f.b1, f.b2, f.j, f.gamma, f.th, f.tc);
    case SweepModel::XXX: return xxx_otto_spec(f.b1, f.b2, f.j, f.th, f.tc);
    case SweepModel::CustomSpectraPair:
      return OttoSpec(EnergySpectrum(f.hot_levels), EnergySpectrum(f.cold_levels), f.th, f.tc);
  }
  throw Error(ErrorCode::InvalidParams, "unknown model");
}

void otto(const OttoFlags& f, bool as_json, std::ostream& out) {
  const OttoSpec spec = otto_spec(f);
  const OttoReport r = run_cycle(spec);
  const EngineDiagnostics d = engine_diagnostics(spec);
  const double product = r.t_min_stroke1 * r.t_max_stroke2;

  if (!f.csv.empty()) {
    std::ofstream csv(f.csv);
    if (!csv) throw Error(ErrorCode::IoError, "cannot write " + f.csv);
    csv << "eta,eta_ub,carnot,q_hot,q_cold,work,is_engine,t_min,t_max_prime\n"
        << (r.efficiency ? format_sci12(*r.efficiency) : "") << ','
        << format_sci12(r.efficiency_ub) << ',' << format_sci12(r.carnot) << ','
        << format_sci12(r.q_hot) << ',' << format_sci12(r.q_cold) << ',' << format_sci12(r.work)
        << ',' << (r.is_engine ? "true" : "false") << ',' << format_sci12(r.t_min_stroke1) << ','
        << format_sci12(r.t_max_stroke2) << '\n';
    if (!csv) throw Error(ErrorCode::IoError, "failed writing " + f.csv);
  }

  if (as_json) {
    json doc = {{"q_hot", r.q_hot},
                {"q_cold", r.q_cold},
                {"work", r.work},
                {"efficiency", r.efficiency ? json(*r.efficiency) : json(nullptr)},
                {"efficiency_ub", r.efficiency_ub},
                {"carnot", r.carnot},
                {"deficits", r.deficits},
                {"t_min_stroke1", r.t_min_stroke1},
                {"t_max_stroke2", r.t_max_stroke2},
                {"tmin_tmax_product", product},
                {"t_cold_t_hot_product", spec.t_cold() * spec.t_hot()},
                {"is_engine", r.is_engine},
                {"flags",
                 {{"hot_majorized_by_cold", d.hot_majorized_by_cold},
                  {"deficits_nonnegative", d.deficits_nonnegative},
                  {"tmin_above_cold", d.tmin_above_cold},
                  {"some_gap_shrinks", d.some_gap_shrinks},
                  {"within_carnot", d.within_carnot}}}};
    out << doc.dump(2) << '\n';
    return;
  }
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  out << "Q_h           " << num(r.q_hot) << '\n'
      << "Q_c           " << num(r.q_cold) << '\n'
      << "W             " << num(r.work) << '\n'
      << "eta           " << (r.efficiency ? num(*r.efficiency) : "undefined (Q_h <= 0)") << '\n'
      << "eta_ub        " << num(r.efficiency_ub) << '\n'
      << "Carnot        " << num(r.carnot) << '\n'
      << "M_i           " << join(r.deficits) << '\n'
      << "T_min         " << num(r.t_min_stroke1) << '\n'
      << "T_max'        " << num(r.t_max_stroke2) << '\n'
      << "T_min*T_max'  " << num(product) << "  (T_c*T_h = " << num(spec.t_cold() * spec.t_hot())
      << ")\n"
      << "engine        " << yn(r.is_engine) << '\n'
      << "P < P'        " << yn(d.hot_majorized_by_cold) << '\n'
      << "T_min > T_c   " << yn(d.tmin_above_cold) << '\n'
      << "gap shrinks   " << yn(d.some_gap_shrinks) << '\n'
      << "<= Carnot     " << yn(d.within_carnot) << '\n';
}

// ------------------------------------------------------------------ sweep

struct SweepFlags {
  std::string config_path;
  std::string model, axis;
  std::optional<double> b1, b2, j, gamma, th, tc, start, end;
  std::optional<std::size_t> steps;
  std::vector<double> hot_levels, cold_levels;
  std::string out_csv, out_svg;
  unsigned threads = 0;
};

SweepConfig sweep_config(const SweepFlags& f) {
  SweepConfig c;
  if (!f.config_path.empty()) {
    std::ifstream in(f.config_path);
    if (!in) throw Error(ErrorCode::IoError, "cannot open " + f.config_path);
    json doc;
    try {
      doc = json::parse(in);
    } catch (const json::parse_error& e) {
      throw Error(ErrorCode::ParseError, e.what());
    }
    c = sweep_config_from_json(doc);
  }
  // Flags override the config file.
  if (!f.model.empty()) c.model = parse_sweep_model(f.model);
  if (!f.axis.empty()) c.axis = parse_sweep_axis(f.axis);
  if (f.b1) c.b1 = *f.b1;
  if (f.b2) c.b2 = *f.b2;
  if (f.j) c.j = *f.j;
  if (f.gamma) c.gamma = *f.gamma;
  if (f.th) c.t_hot = *f.th;
  if (f.tc) c.t_cold = *f.tc;
  if (f.start) c.start = *f.start;
  if (f.end) c.end = *f.end;
  if (f.steps) c.steps = *f.steps;
  if (!f.hot_levels.empty()) c.hot_levels = f.hot_levels;
  if (!f.cold_levels.empty()) c.cold_levels = f.cold_levels;
  return c;
}

void sweep(const SweepFlags& f, bool as_json, std::ostream& out, std::ostream& err) {
  const SweepConfig config = sweep_config(f);
  const SweepResult result = run_sweep(config, f.threads);
  for (const auto& s : result.skipped) {
    err << "skipped " << to_string(config.axis) << "=" << num(s.axis_value) << ": " << s.reason
        << '\n';
  }
  {
    std::ofstream csv(f.out_csv);
    if (!csv) throw Error(ErrorCode::IoError, "cannot write " + f.out_csv);
    write_csv(csv, result);
    if (!csv) throw Error(ErrorCode::IoError, "failed writing " + f.out_csv);
  }
  if (!f.out_svg.empty()) {
    std::ofstream svg(f.out_svg);
    if (!svg) throw Error(ErrorCode::IoError, "cannot write " + f.out_svg);
    write_svg(svg, config, result);
    if (!svg) throw Error(ErrorCode::IoError, "failed writing " + f.out_svg);
  }
  if (as_json) {
    json skipped = json::array();
    for (const auto& s : result.skipped) {
      skipped.push_back({{"axis_value", s.axis_value}, {"reason", s.reason}});
    }
    json doc = {{"rows", result.rows.size()},
                {"skipped", skipped},
                {"csv", f.out_csv},
                {"svg", f.out_svg.empty() ? json(nullptr) : json(f.out_svg)}};
    out << doc.dump(2) << '\n';
    return;
  }
  out << "wrote " << result.rows.size() << " rows to " << f.out_csv;
  if (!f.out_svg.empty()) out << " and plot to " << f.out_svg;
  out << " (" << result.skipped.size() << " skipped)\n";
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Virtual temperatures of passive states and quantum Otto cycles", "virtemp"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Machine-readable output")->configurable(false);

  std::string state_path;
  auto* analyze_cmd = app.add_subcommand("analyze", "Virtual-temperature report for a state file");
  analyze_cmd->add_option("--state", state_path, "State JSON file")->required();
  analyze_cmd->add_flag("--json", as_json);

  auto* compare_cmd =
      app.add_subcommand("compare-vt", "Mean virtual temperatures after both passification routes");
  compare_cmd->add_option("--state", state_path, "State JSON file")->required();
  compare_cmd->add_flag("--json", as_json);

  double t_env = 0.0;
  auto* heat_cmd = app.add_subcommand("heatflow", "Heat-flow direction against an environment");
  heat_cmd->add_option("--state", state_path, "State JSON file")->required();
  heat_cmd->add_option("--temp", t_env, "Environment temperature")->required();
  heat_cmd->add_flag("--json", as_json);

  OttoFlags of;
  auto* otto_cmd = app.add_subcommand("otto", "Run one quasi-static Otto cycle");
  otto_cmd->add_option("--model", of.model, "xy, xxx or custom")->capture_default_str();
  otto_cmd->add_option("--b1", of.b1, "Field on the hot bath")->capture_default_str();
  otto_cmd->add_option("--b2", of.b2, "Field on the cold bath")->capture_default_str();
  otto_cmd->add_option("--j", of.j, "Coupling J")->capture_default_str();
  otto_cmd->add_option("--gamma", of.gamma, "XY anisotropy")->capture_default_str();
  otto_cmd->add_option("--th", of.th, "Hot bath temperature")->capture_default_str();
  otto_cmd->add_option("--tc", of.tc, "Cold bath temperature")->capture_default_str();
  otto_cmd->add_option("--hot-levels", of.hot_levels, "Custom model: hot spectrum");
  otto_cmd->add_option("--cold-levels", of.cold_levels, "Custom model: cold spectrum");
  otto_cmd->add_option("--csv", of.csv, "Also write the report as a CSV row");
  otto_cmd->add_flag("--json", as_json);

  SweepFlags sf;
  auto* sweep_cmd = app.add_subcommand("sweep", "Otto efficiency and bound along one parameter");
  sweep_cmd->add_option("--config", sf.config_path, "JSON sweep config (flags override it)");
  sweep_cmd->add_option("--model", sf.model, "xy, xxx or custom");
  sweep_cmd->add_option("--axis", sf.axis, "gamma, j, b2 or t_cold");
  sweep_cmd->add_option("--b1", sf.b1);
  sweep_cmd->add_option("--b2", sf.b2);
  sweep_cmd->add_option("--j", sf.j);
  sweep_cmd->add_option("--gamma", sf.gamma);
  sweep_cmd->add_option("--th", sf.th);
  sweep_cmd->add_option("--tc", sf.tc);
  sweep_cmd->add_option("--start", sf.start);
  sweep_cmd->add_option("--end", sf.end);
  sweep_cmd->add_option("--steps", sf.steps);
  sweep_cmd->add_option("--hot-levels", sf.hot_levels);
  sweep_cmd->add_option("--cold-levels", sf.cold_levels);
  sweep_cmd->add_option("--out", sf.out_csv, "CSV output path")->required();
  sweep_cmd->add_option("--svg", sf.out_svg, "SVG plot output path");
  sweep_cmd->add_option("--threads", sf.threads, "Worker threads (0 = hardware)");
  sweep_cmd->add_flag("--json", as_json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (*analyze_cmd) analyze(state_path, as_json, out);
    else if (*compare_cmd) compare_vt(state_path, as_json, out);
    else if (*heat_cmd) heatflow(state_path, t_env, as_json, out);
    else if (*otto_cmd) otto(of, as_json, out);
    else if (*sweep_cmd) sweep(sf, as_json, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::IoError ? kExitIo : kExitValidation;
  }
  return kExitOk;
}

}  // namespace virtemp::cli
