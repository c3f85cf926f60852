#include "virtemp/heatflow.hpp"

#include <cmath>
#include <string>

#include "virtemp/error.hpp"
#include "virtemp/virtual_temp.hpp"

namespace virtemp {

std::string_view to_string(FlowDirection d) noexcept {
  return d == FlowDirection::OutOfSystem ? "OutOfSystem" : "IntoSystem";
}

std::string_view to_string(FlowRule r) noexcept {
  switch (r) {
    case FlowRule::BelowTmin: return "BelowTmin";
    case FlowRule::AboveTmax: return "AboveTmax";
    case FlowRule::ViaEffectiveTemperature: return "ViaEffectiveTemperature";
  }
  return "Unknown";
}

EnergyBounds energy_bounds(const DiagonalState& state) {
  const VtProfile profile = adjacent_profile(state);
  const auto& spectrum = state.spectrum();
  EnergyBounds b;
  b.u_min = thermal_mean_energy(spectrum, profile.t_min);
  b.u = mean_energy(state);
  b.u_max = std::isinf(profile.t_max) ? spectrum.uniform_mean()
                                      : thermal_mean_energy(spectrum, profile.t_max);
  return b;
}

double thermalization_heat(const DiagonalState& state, double t_env) {
  return thermal_mean_energy(state.spectrum(), t_env) - mean_energy(state);
}

HeatFlowVerdict heat_flow_direction(const DiagonalState& state, double t_env) {
  const VtProfile profile = adjacent_profile(state);
  HeatFlowVerdict v;
  v.heat = thermalization_heat(state, t_env);
  if (std::abs(v.heat) <= 1e-12 * state.spectrum().width()) {
    throw Error(ErrorCode::EquilibriumNoFlow,
                "environment temperature " + std::to_string(t_env) +
                    " matches the effective temperature; no net heat flow");
  }

  if (t_env <= profile.t_min) {
    v.rule = FlowRule::BelowTmin;
    v.direction = FlowDirection::OutOfSystem;
  } else if (t_env >= profile.t_max) {
    v.rule = FlowRule::AboveTmax;
    v.direction = FlowDirection::IntoSystem;
  } else {
    v.rule = FlowRule::ViaEffectiveTemperature;
    const double t_star = effective_temperature(state);
    v.direction = t_star > t_env ? FlowDirection::OutOfSystem : FlowDirection::IntoSystem;
  }
  return v;
}

}  // namespace virtemp
