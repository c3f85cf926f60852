#include "virtemp/virtual_temp.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "virtemp/error.hpp"

namespace virtemp {

namespace {

void require_passive(const DiagonalState& state) {
  if (!is_passive(state)) {
    throw Error(ErrorCode::NotPassive, "populations must be non-increasing in energy");
  }
}

double virtual_temperature(double energy_gap, double p_low, double p_high) {
  if (p_low == p_high) return kInfiniteTemperature;
  return energy_gap / std::log(p_low / p_high);
}

bool close(double a, double b) {
  if (std::isinf(a) || std::isinf(b)) return a == b;
  return std::abs(a - b) <= 1e-12 * std::max(std::abs(a), std::abs(b));
}

std::vector<double> adjacent_temperatures(const DiagonalState& state) {
  const auto gaps = state.spectrum().gaps();
  const auto p = state.population().probs();
  std::vector<double> t(gaps.size());
  for (std::size_t i = 0; i < gaps.size(); ++i) {
    t[i] = virtual_temperature(gaps[i], p[i], p[i + 1]);
  }
  return t;
}

double harmonic_mean(const std::vector<double>& temps, const std::vector<double>& weights) {
  double inverse = 0.0;
  for (std::size_t k = 0; k < temps.size(); ++k) {
    if (!std::isinf(temps[k])) inverse += weights[k] / temps[k];
  }
  return 1.0 / inverse;
}

}  // namespace

double pair_virtual_temperature(const DiagonalState& state, std::size_t i, std::size_t j) {
  require_passive(state);
  if (i >= j || j >= state.size()) {
    throw Error(ErrorCode::IndexOutOfRange,
                "need i < j < " + std::to_string(state.size()) + ", got (" + std::to_string(i) +
                    ", " + std::to_string(j) + ")");
  }
  const auto& spectrum = state.spectrum();
  const auto& pop = state.population();
  return virtual_temperature(spectrum.level(j) - spectrum.level(i), pop[i], pop[j]);
}

VtProfile adjacent_profile(const DiagonalState& state) {
  require_passive(state);
  VtProfile profile;
  profile.adjacent = adjacent_temperatures(state);

  double t_min = kInfiniteTemperature;
  double t_max = 0.0;
  for (double t : profile.adjacent) {
    t_min = std::min(t_min, t);
    t_max = std::max(t_max, t);
  }
  if (std::isinf(t_min)) {
    throw Error(ErrorCode::AllDegenerate, "uniform population has no finite virtual temperature");
  }
  profile.t_min = t_min;
  profile.t_max = t_max;

  const auto gaps = state.spectrum().gaps();
  const double width = state.spectrum().width();
  profile.weights.reserve(gaps.size());
  for (double w : gaps) profile.weights.push_back(w / width);
  profile.mean = harmonic_mean(profile.adjacent, profile.weights);
  return profile;
}

double mean_virtual_temperature(const DiagonalState& state) { return adjacent_profile(state).mean; }

bool verify_minmax_lemma(const DiagonalState& state) {
  require_passive(state);
  const VtProfile profile = adjacent_profile(state);
  double lo = kInfiniteTemperature;
  double hi = 0.0;
  for (std::size_t i = 0; i < state.size(); ++i) {
    for (std::size_t j = i + 1; j < state.size(); ++j) {
      const double t = pair_virtual_temperature(state, i, j);
      lo = std::min(lo, t);
      hi = std::max(hi, t);
    }
  }
  return close(lo, profile.t_min) && close(hi, profile.t_max);
}

}  // namespace virtemp
