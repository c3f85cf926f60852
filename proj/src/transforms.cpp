#include "virtemp/transforms.hpp"

#include <string>
#include <vector>

#include "virtemp/error.hpp"
#include "virtemp/majorization.hpp"
#include "virtemp/virtual_temp.hpp"

namespace virtemp {

PassificationResult passify_isoentropic(const DiagonalState& state) {
  DiagonalState out(state.spectrum(), sort_descending(state.population()).population);
  const double work = mean_energy(state) - mean_energy(out);
  return {std::move(out), work, 0.0};
}

PassificationResult passify_isoenergetic(const DiagonalState& state) {
  const auto& spectrum = state.spectrum();
  const double target = mean_energy(state);
  const double uniform_energy = spectrum.uniform_mean();
  if (!(target < uniform_energy)) {
    throw Error(ErrorCode::EnergyAboveUniformMean,
                "mean energy " + std::to_string(target) + " is not below the uniform mean " +
                    std::to_string(uniform_energy));
  }

  const Population sorted = sort_descending(state.population()).population;
  const double sorted_energy = mean_energy(spectrum, sorted);
  // U(sigma(l)) is affine in l, so the energy match is a single division.
  // sorted_energy <= target < uniform_energy keeps l in [0, 1).
  const double mix = (target - sorted_energy) / (uniform_energy - sorted_energy);
  if (mix == 0.0) {
    return {DiagonalState(spectrum, sorted), 0.0, 0.0};
  }

  const double u = 1.0 / static_cast<double>(sorted.size());
  std::vector<double> sigma(sorted.size());
  for (std::size_t k = 0; k < sigma.size(); ++k) sigma[k] = (1.0 - mix) * sorted[k] + mix * u;
  return {DiagonalState(spectrum, Population(std::move(sigma))), 0.0, mix};
}

MeanVtComparison compare_mean_vt(const DiagonalState& state) {
  if (is_passive(state)) {
    throw Error(ErrorCode::AlreadyPassive, "both routes return the input unchanged");
  }
  auto entropic = passify_isoentropic(state);
  auto energetic = passify_isoenergetic(state);
  const double t_p = mean_virtual_temperature(entropic.passive_state);
  const double t_s = mean_virtual_temperature(energetic.passive_state);
  return {t_p, t_s, std::move(entropic), std::move(energetic)};
}

}  // namespace virtemp
