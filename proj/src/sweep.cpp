#include "virtemp/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <thread>
#include <variant>

#include "virtemp/error.hpp"
#include "virtemp/models.hpp"
#include "virtemp/otto.hpp"

namespace virtemp {

std::string_view to_string(SweepModel m) noexcept {
  switch (m) {
    case SweepModel::XY: return "xy";
    case SweepModel::XXX: return "xxx";
    case SweepModel::CustomSpectraPair: return "custom";
  }
  return "unknown";
}

std::string_view to_string(SweepAxis a) noexcept {
  switch (a) {
    case SweepAxis::Gamma: return "gamma";
    case SweepAxis::J: return "j";
    case SweepAxis::B2: return "b2";
    case SweepAxis::TCold: return "t_cold";
  }
  return "unknown";
}

SweepModel parse_sweep_model(std::string_view s) {
  if (s == "xy") return SweepModel::XY;
  if (s == "xxx") return SweepModel::XXX;
  if (s == "custom") return SweepModel::CustomSpectraPair;
  throw Error(ErrorCode::InvalidParams, "unknown model \"" + std::string(s) + "\"");
}

SweepAxis parse_sweep_axis(std::string_view s) {
  if (s == "gamma") return SweepAxis::Gamma;
  if (s == "j") return SweepAxis::J;
  if (s == "b2") return SweepAxis::B2;
  if (s == "t_cold" || s == "tc") return SweepAxis::TCold;
  throw Error(ErrorCode::InvalidParams, "unknown sweep axis \"" + std::string(s) + "\"");
}

void validate(const SweepConfig& c) {
  if (c.steps < 2) throw Error(ErrorCode::InvalidParams, "sweep needs steps >= 2");
  if (!(c.start < c.end)) throw Error(ErrorCode::InvalidParams, "sweep needs start < end");
  const bool axis_ok = [&] {
    switch (c.model) {
      case SweepModel::XY: return true;
      case SweepModel::XXX: return c.axis != SweepAxis::Gamma;
      case SweepModel::CustomSpectraPair: return c.axis == SweepAxis::TCold;
    }
    return false;
  }();
  if (!axis_ok) {
    throw Error(ErrorCode::InvalidParams, "model " + std::string(to_string(c.model)) +
                                              " cannot be swept along " +
                                              std::string(to_string(c.axis)));
  }
}

SweepConfig sweep_config_from_json(const nlohmann::json& doc) {
  SweepConfig c;
  try {
    if (!doc.is_object()) throw Error(ErrorCode::ParseError, "sweep config must be a JSON object");
    if (doc.contains("model")) c.model = parse_sweep_model(doc.at("model").get<std::string>());
    if (doc.contains("axis")) c.axis = parse_sweep_axis(doc.at("axis").get<std::string>());
    auto read = [&](const char* key, double& dst) {
      if (doc.contains(key)) dst = doc.at(key).get<double>();
    };
    read("b1", c.b1);
    read("b2", c.b2);
    read("j", c.j);
    read("gamma", c.gamma);
    read("t_hot", c.t_hot);
    read("t_cold", c.t_cold);
    read("start", c.start);
    read("end", c.end);
    if (doc.contains("steps")) c.steps = doc.at("steps").get<std::size_t>();
    if (doc.contains("hot_levels")) c.hot_levels = doc.at("hot_levels").get<std::vector<double>>();
    if (doc.contains("cold_levels")) c.cold_levels = doc.at("cold_levels").get<std::vector<double>>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  return c;
}

double grid_value(const SweepConfig& c, std::size_t index) {
  if (index + 1 == c.steps) return c.end;
  return c.start + (c.end - c.start) * static_cast<double>(index) / static_cast<double>(c.steps - 1);
}

namespace {

OttoSpec spec_at(const SweepConfig& c, double x) {
  double b2 = c.b2, j = c.j, gamma = c.gamma, t_cold = c.t_cold;
  switch (c.axis) {
    case SweepAxis::Gamma: gamma = x; break;
    case SweepAxis::J: j = x; break;
    case SweepAxis::B2: b2 = x; break;
    case SweepAxis::TCold: t_cold = x; break;
  }
  switch (c.model) {
    case SweepModel::XY:
      if (!(c.b1 >= b2)) throw Error(ErrorCode::InvalidParams, "need B1 >= B2");
      return xy_otto_spec(c.b1, b2, j, gamma, c.t_hot, t_cold);
    case SweepModel::XXX:
      if (!(c.b1 >= b2)) throw Error(ErrorCode::InvalidParams, "need B1 >= B2");
      return xxx_otto_spec(c.b1, b2, j, c.t_hot, t_cold);
    case SweepModel::CustomSpectraPair:
      return OttoSpec(EnergySpectrum(c.hot_levels), EnergySpectrum(c.cold_levels), c.t_hot, t_cold);
  }
  throw Error(ErrorCode::InvalidParams, "unknown model");
}

using PointOutcome = std::variant<SweepRow, SkippedPoint>;

PointOutcome evaluate(const SweepConfig& c, std::size_t index) {
  const double x = grid_value(c, index);
  try {
    const OttoReport r = run_cycle(spec_at(c, x));
    return SweepRow{index, x, r.efficiency, r.efficiency_ub, r.carnot,
                    r.q_hot, r.q_cold, r.work, r.is_engine};
  } catch (const Error& e) {
    return SkippedPoint{index, x, e.what()};
  }
}

}  // namespace

SweepResult run_sweep(const SweepConfig& config, unsigned threads) {
  validate(config);
  std::vector<std::optional<PointOutcome>> outcomes(config.steps);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, config.steps));

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < config.steps; i = next++) outcomes[i] = evaluate(config, i);
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }

  SweepResult result;
  for (auto& o : outcomes) {
    if (auto* row = std::get_if<SweepRow>(&*o)) {
      result.rows.push_back(*row);
    } else {
      result.skipped.push_back(std::get<SkippedPoint>(*o));
    }
  }
  if (result.rows.empty()) {
    throw Error(ErrorCode::InvalidParams, "no valid grid point in the sweep range");
  }
  return result;
}

std::string format_sci12(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.11e", x);
  return buf;
}

void write_csv(std::ostream& out, const SweepResult& result) {
  out << "axis_value,eta,eta_ub,carnot,q_hot,q_cold,work,is_engine\n";
  for (const auto& r : result.rows) {
    out << format_sci12(r.axis_value) << ',' << (r.eta ? format_sci12(*r.eta) : "") << ','
        << format_sci12(r.eta_ub) << ',' << format_sci12(r.carnot) << ',' << format_sci12(r.q_hot)
        << ',' << format_sci12(r.q_cold) << ',' << format_sci12(r.work) << ','
        << (r.is_engine ? "true" : "false") << '\n';
  }
  for (const auto& s : result.skipped) {
    std::string reason = s.reason;
    std::replace(reason.begin(), reason.end(), ',', ';');
    std::replace(reason.begin(), reason.end(), '\n', ' ');
    out << "# skipped," << format_sci12(s.axis_value) << ',' << reason << '\n';
  }
}

namespace {

std::string xml_escape(std::string_view s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

std::string fmt(double x, const char* pattern = "%.2f") {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, x);
  return buf;
}

}  // namespace

void write_svg(std::ostream& out, const SweepConfig& config, const SweepResult& result) {
  constexpr double width = 640, height = 420;
  constexpr double left = 70, right = 20, top = 30, bottom = 55;
  const double plot_w = width - left - right;
  const double plot_h = height - top - bottom;

  // Carnot is constant except along t_cold, where it is linear in the axis.
  auto carnot_at = [&](double x) {
    return config.axis == SweepAxis::TCold ? 1.0 - x / config.t_hot : result.rows.front().carnot;
  };
  const double carnot_start = carnot_at(config.start);
  const double carnot_end = carnot_at(config.end);
  double y_lo = std::min({0.0, carnot_start, carnot_end});
  double y_hi = std::max(carnot_start, carnot_end);
  for (const auto& r : result.rows) {
    y_lo = std::min(y_lo, r.eta_ub);
    y_hi = std::max(y_hi, r.eta_ub);
    if (r.eta) {
      y_lo = std::min(y_lo, *r.eta);
      y_hi = std::max(y_hi, *r.eta);
    }
  }
  y_hi += 0.05 * (y_hi - y_lo);
  if (!(y_hi > y_lo)) y_hi = y_lo + 1.0;

  auto sx = [&](double x) { return left + plot_w * (x - config.start) / (config.end - config.start); };
  auto sy = [&](double y) { return top + plot_h * (1.0 - (y - y_lo) / (y_hi - y_lo)); };

  std::string eta_pts, ub_pts;
  for (const auto& r : result.rows) {
    ub_pts += fmt(sx(r.axis_value)) + "," + fmt(sy(r.eta_ub)) + " ";
    if (r.eta) eta_pts += fmt(sx(r.axis_value)) + "," + fmt(sy(*r.eta)) + " ";
  }
  if (!eta_pts.empty()) eta_pts.pop_back();
  if (!ub_pts.empty()) ub_pts.pop_back();

  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n"
      << "<rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height
      << "\" fill=\"white\"/>\n";

  // Axes and ticks.
  out << "<path class=\"axes\" d=\"M" << fmt(left) << ',' << fmt(top) << " V" << fmt(top + plot_h)
      << " H" << fmt(left + plot_w) << "\" stroke=\"black\" fill=\"none\"/>\n";
  for (int t = 0; t <= 4; ++t) {
    const double xv = config.start + (config.end - config.start) * t / 4.0;
    const double yv = y_lo + (y_hi - y_lo) * t / 4.0;
    out << "<path class=\"tick\" d=\"M" << fmt(sx(xv)) << ',' << fmt(top + plot_h) << " v5 M"
        << fmt(left) << ',' << fmt(sy(yv)) << " h-5\" stroke=\"black\"/>\n";
    out << "<text x=\"" << fmt(sx(xv)) << "\" y=\"" << fmt(top + plot_h + 18)
        << "\" font-size=\"11\" text-anchor=\"middle\">" << fmt(xv, "%.3g") << "</text>\n";
    out << "<text x=\"" << fmt(left - 8) << "\" y=\"" << fmt(sy(yv) + 4)
        << "\" font-size=\"11\" text-anchor=\"end\">" << fmt(yv, "%.3g") << "</text>\n";
  }
  out << "<text x=\"" << fmt(left + plot_w / 2) << "\" y=\"" << fmt(height - 12)
      << "\" font-size=\"13\" text-anchor=\"middle\">" << xml_escape(to_string(config.axis))
      << "</text>\n";
  out << "<text x=\"16\" y=\"" << fmt(top + plot_h / 2) << "\" font-size=\"13\" "
      << "text-anchor=\"middle\" transform=\"rotate(-90 16 " << fmt(top + plot_h / 2)
      << ")\">efficiency</text>\n";

  out << "<line class=\"carnot\" x1=\"" << fmt(left) << "\" y1=\"" << fmt(sy(carnot_start)) << "\" x2=\""
      << fmt(left + plot_w) << "\" y2=\"" << fmt(sy(carnot_end))
      << "\" stroke=\"gray\" stroke-dasharray=\"6,4\"/>\n";
  out << "<polyline class=\"eta\" points=\"" << eta_pts
      << "\" fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"2\"/>\n";
  out << "<polyline class=\"eta_ub\" points=\"" << ub_pts
      << "\" fill=\"none\" stroke=\"#d62728\" stroke-width=\"2\"/>\n";

  const double lx = left + plot_w - 150;
  out << "<text x=\"" << fmt(lx) << "\" y=\"" << fmt(top + 14)
      << "\" font-size=\"12\" fill=\"#1f77b4\">eta</text>\n"
      << "<text x=\"" << fmt(lx) << "\" y=\"" << fmt(top + 30)
      << "\" font-size=\"12\" fill=\"#d62728\">eta_ub</text>\n"
      << "<text x=\"" << fmt(lx) << "\" y=\"" << fmt(top + 46)
      << "\" font-size=\"12\" fill=\"gray\">Carnot</text>\n"
      << "</svg>\n";
}

}  // namespace virtemp
