#pragma once

// Quasi-static quantum Otto cycle.
//
// The working medium starts thermal at T_hot on the hot spectrum, is driven
// adiabatically to the cold spectrum (populations frozen), thermalizes at
// T_cold, and is driven back. With M_i = sum_{j > i} (p_j - p'_j):
//   Q_hot  =  sum_i w_i  M_i
//   Q_cold = -sum_i w'_i M_i
//   eta_ub = 1 - min_i (w'_i / w_i)

#include <optional>
#include <vector>

#include "virtemp/core.hpp"
#include "virtemp/virtual_temp.hpp"

namespace virtemp {

class OttoSpec {
 public:
  /// Throws LengthMismatch, or InvalidSpec unless t_hot > t_cold > 0.
  OttoSpec(EnergySpectrum hot_spectrum, EnergySpectrum cold_spectrum, double t_hot, double t_cold);

  /// Spectrum in contact with the hot bath (gaps w_i).
  const EnergySpectrum& hot_spectrum() const noexcept { return hot_; }
  /// Spectrum in contact with the cold bath (gaps w'_i).
  const EnergySpectrum& cold_spectrum() const noexcept { return cold_; }
  double t_hot() const noexcept { return t_hot_; }
  double t_cold() const noexcept { return t_cold_; }

 private:
  EnergySpectrum hot_;
  EnergySpectrum cold_;
  double t_hot_;
  double t_cold_;
};

struct OttoReport {
  double q_hot = 0.0;
  double q_cold = 0.0;
  /// q_hot + q_cold.
  double work = 0.0;
  /// work / q_hot; empty unless q_hot > 0.
  std::optional<double> efficiency;
  double efficiency_ub = 0.0;
  double carnot = 0.0;
  std::vector<double> deficits;
  /// Heats recomputed from level sums, sum_k E_k (p_k - p'_k) and its cold
  /// counterpart. Independent of the gap form above.
  double q_hot_level_sum = 0.0;
  double q_cold_level_sum = 0.0;
  DiagonalState passive_after_stroke1;
  DiagonalState passive_after_stroke2;
  double t_min_stroke1 = 0.0;
  double t_max_stroke2 = 0.0;
  /// q_hot > 0, q_cold < 0 and work > 0.
  bool is_engine = false;
  /// Every M_i >= -1e-12, the condition under which eta <= eta_ub is proven.
  bool deficits_nonnegative = false;
};

OttoReport run_cycle(const OttoSpec& spec);

struct IntermediateStates {
  DiagonalState after_stroke1;  ///< cold spectrum, hot Gibbs populations
  VtProfile profile1;
  DiagonalState after_stroke2;  ///< hot spectrum, cold Gibbs populations
  VtProfile profile2;
};

IntermediateStates intermediate_passive_states(const OttoSpec& spec);

struct EngineDiagnostics {
  /// P majorized by P' (hot Gibbs populations by cold Gibbs populations).
  bool hot_majorized_by_cold = false;
  bool deficits_nonnegative = false;
  /// T_min after stroke 1 exceeds T_cold; sufficient for Q_cold < 0.
  bool tmin_above_cold = false;
  /// Some w'_i < w_i; necessary for positive work.
  bool some_gap_shrinks = false;
  /// Efficiency (when defined) does not exceed 1 - T_cold/T_hot.
  bool within_carnot = false;
  /// P < gibbs_cold(T_min) and gibbs_cold(T_min) < P'. Only evaluated when
  /// tmin_above_cold holds.
  std::optional<bool> transitive_route = std::nullopt;
};

EngineDiagnostics engine_diagnostics(const OttoSpec& spec);

}  // namespace virtemp
