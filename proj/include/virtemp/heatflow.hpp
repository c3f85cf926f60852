#pragma once

// Direction of heat flow when a passive state is thermalized with an
// environment at temperature T_env.

#include <string_view>

#include "virtemp/core.hpp"

namespace virtemp {

enum class FlowDirection { OutOfSystem, IntoSystem };

enum class FlowRule {
  BelowTmin,                ///< T_env <= T_min: heat always leaves the system.
  AboveTmax,                ///< T_env >= T_max: heat always enters the system.
  ViaEffectiveTemperature,  ///< in between: decided by the sign of T* - T_env.
};

std::string_view to_string(FlowDirection d) noexcept;
std::string_view to_string(FlowRule r) noexcept;

struct HeatFlowVerdict {
  FlowDirection direction = FlowDirection::OutOfSystem;
  FlowRule rule = FlowRule::BelowTmin;
  /// Heat absorbed by the system, U(gibbs(T_env)) - U(state).
  double heat = 0.0;
};

struct EnergyBounds {
  double u_min = 0.0;  ///< U(gibbs(T_min))
  double u = 0.0;      ///< U(state)
  double u_max = 0.0;  ///< U(gibbs(T_max)), or sum(E_k)/n when T_max is infinite
};

/// Throws NotPassive (AllDegenerate for a uniform population).
EnergyBounds energy_bounds(const DiagonalState& state);

/// Throws NonPositiveTemperature.
double thermalization_heat(const DiagonalState& state, double t_env);

/// Throws NotPassive, NonPositiveTemperature, or EquilibriumNoFlow when
/// |heat| <= 1e-12 * (E_n - E_1).
HeatFlowVerdict heat_flow_direction(const DiagonalState& state, double t_env);

}  // namespace virtemp
