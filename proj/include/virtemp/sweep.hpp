#pragma once

// Parameter sweeps of the Otto cycle over one axis, with CSV and SVG
// writers for the results.

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace virtemp {

enum class SweepModel { XY, XXX, CustomSpectraPair };
enum class SweepAxis { Gamma, J, B2, TCold };

std::string_view to_string(SweepModel m) noexcept;
std::string_view to_string(SweepAxis a) noexcept;
SweepModel parse_sweep_model(std::string_view s);
SweepAxis parse_sweep_axis(std::string_view s);

struct SweepConfig {
  SweepModel model = SweepModel::XY;
  // Defaults are the operating point of the anisotropy figure.
  double b1 = 2.8;
  double b2 = 2.0;
  double j = 0.5;
  double gamma = 0.4;
  double t_hot = 1.0;
  double t_cold = 0.5;
  /// Only for CustomSpectraPair.
  std::vector<double> hot_levels;
  std::vector<double> cold_levels;

  SweepAxis axis = SweepAxis::Gamma;
  double start = 0.0;
  double end = 1.0;
  std::size_t steps = 101;
};

/// Throws InvalidParams for steps < 2, start >= end, or an axis the model
/// does not have.
void validate(const SweepConfig& config);

/// Reads the same fields from a JSON object. Throws ParseError.
SweepConfig sweep_config_from_json(const nlohmann::json& doc);

struct SweepRow {
  std::size_t index = 0;
  double axis_value = 0.0;
  std::optional<double> eta;
  double eta_ub = 0.0;
  double carnot = 0.0;
  double q_hot = 0.0;
  double q_cold = 0.0;
  double work = 0.0;
  bool is_engine = false;
};

struct SkippedPoint {
  std::size_t index = 0;
  double axis_value = 0.0;
  std::string reason;
};

struct SweepResult {
  std::vector<SweepRow> rows;        ///< grid order
  std::vector<SkippedPoint> skipped; ///< grid order
};

double grid_value(const SweepConfig& config, std::size_t index);

/// Evaluates every grid point, possibly on several threads; output is in
/// grid order. Invalid points are collected in `skipped`. Throws
/// InvalidParams for a bad config or when no grid point is valid.
SweepResult run_sweep(const SweepConfig& config, unsigned threads = 0);

/// Header plus one line per row, numbers as %.11e. Skipped points follow as
/// "# skipped,<axis_value>,<reason>" lines.
void write_csv(std::ostream& out, const SweepResult& result);

/// Self-contained SVG: eta and eta_ub polylines and a dashed Carnot line.
void write_svg(std::ostream& out, const SweepConfig& config, const SweepResult& result);

/// %.11e, i.e. 12 significant digits.
std::string format_sci12(double x);

}  // namespace virtemp
