#include "virtemp/core.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <string>

#include "virtemp/error.hpp"

namespace virtemp {

namespace {

void require_finite(std::span<const double> values, const char* what) {
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (!std::isfinite(values[k])) {
      throw Error(ErrorCode::NonFiniteValue,
                  std::string(what) + "[" + std::to_string(k) + "] is not finite");
    }
  }
}

void require_positive_temperature(double temperature) {
  if (!(temperature > 0.0)) {
    throw Error(ErrorCode::NonPositiveTemperature,
                "temperature must be > 0, got " + std::to_string(temperature));
  }
}

// Unnormalized Boltzmann weights relative to the ground level.
std::vector<double> boltzmann_weights(const EnergySpectrum& spectrum, double temperature) {
  const auto levels = spectrum.levels();
  std::vector<double> w(levels.size());
  for (std::size_t k = 0; k < levels.size(); ++k) {
    w[k] = std::exp(-(levels[k] - levels[0]) / temperature);
  }
  return w;
}

}  // namespace

EnergySpectrum::EnergySpectrum(std::vector<double> levels) : levels_(std::move(levels)) {
  if (levels_.size() < 2) {
    throw Error(ErrorCode::TooFewLevels,
                "spectrum needs at least 2 levels, got " + std::to_string(levels_.size()));
  }
  require_finite(levels_, "levels");
  gaps_.resize(levels_.size() - 1);
  for (std::size_t i = 0; i + 1 < levels_.size(); ++i) {
    gaps_[i] = levels_[i + 1] - levels_[i];
    if (!(gaps_[i] > 0.0)) {
      throw Error(ErrorCode::NonIncreasingLevels,
                  "levels[" + std::to_string(i + 1) + "] <= levels[" + std::to_string(i) + "]");
    }
  }
}

double EnergySpectrum::uniform_mean() const noexcept {
  return std::accumulate(levels_.begin(), levels_.end(), 0.0) / static_cast<double>(levels_.size());
}

EnergySpectrum make_spectrum(std::vector<double> levels) { return EnergySpectrum(std::move(levels)); }

Population::Population(std::vector<double> probs) : probs_(std::move(probs)) {
  if (probs_.size() < 2) {
    throw Error(ErrorCode::TooFewLevels,
                "population needs at least 2 entries, got " + std::to_string(probs_.size()));
  }
  require_finite(probs_, "probs");
  for (std::size_t k = 0; k < probs_.size(); ++k) {
    if (!(probs_[k] > 0.0)) {
      throw Error(ErrorCode::NonPositiveProbability,
                  "probs[" + std::to_string(k) + "] must be > 0");
    }
  }
  const double total = std::accumulate(probs_.begin(), probs_.end(), 0.0);
  if (std::abs(total - 1.0) > kNormalizationTolerance) {
    throw Error(ErrorCode::NormalizationViolated,
                "probabilities sum to " + std::to_string(total) + ", expected 1");
  }
}

bool Population::is_non_increasing() const noexcept {
  return std::is_sorted(probs_.begin(), probs_.end(), std::greater<>());
}

DiagonalState::DiagonalState(EnergySpectrum spectrum, Population population)
    : spectrum_(std::move(spectrum)), population_(std::move(population)) {
  if (spectrum_.size() != population_.size()) {
    throw Error(ErrorCode::LengthMismatch,
                "spectrum has " + std::to_string(spectrum_.size()) + " levels but population has " +
                    std::to_string(population_.size()) + " entries");
  }
}

Population gibbs(const EnergySpectrum& spectrum, double temperature) {
  require_positive_temperature(temperature);
  auto w = boltzmann_weights(spectrum, temperature);
  const double z = std::accumulate(w.begin(), w.end(), 0.0);
  for (auto& x : w) x /= z;
  return Population(std::move(w));
}

DiagonalState gibbs_state(const EnergySpectrum& spectrum, double temperature) {
  return DiagonalState(spectrum, gibbs(spectrum, temperature));
}

double thermal_mean_energy(const EnergySpectrum& spectrum, double temperature) {
  require_positive_temperature(temperature);
  const auto w = boltzmann_weights(spectrum, temperature);
  const auto levels = spectrum.levels();
  double z = 0.0;
  double u = 0.0;
  for (std::size_t k = 0; k < w.size(); ++k) {
    z += w[k];
    u += w[k] * (levels[k] - levels[0]);
  }
  return levels[0] + u / z;
}

double mean_energy(const EnergySpectrum& spectrum, const Population& population) {
  if (spectrum.size() != population.size()) {
    throw Error(ErrorCode::LengthMismatch, "spectrum and population lengths differ");
  }
  const auto levels = spectrum.levels();
  const auto p = population.probs();
  return std::inner_product(levels.begin(), levels.end(), p.begin(), 0.0);
}

double mean_energy(const DiagonalState& state) {
  return mean_energy(state.spectrum(), state.population());
}

double entropy(const Population& population) {
  double s = 0.0;
  for (double p : population.probs()) s -= p * std::log(p);
  return s;
}

bool is_passive(const DiagonalState& state) { return state.population().is_non_increasing(); }

double effective_temperature(const DiagonalState& state) {
  const auto& spectrum = state.spectrum();
  const double u = mean_energy(state);
  const double ground = spectrum.level(0);
  const double ceiling = spectrum.uniform_mean();
  if (!(u > ground) || !(u < ceiling)) {
    throw Error(ErrorCode::EnergyOutOfRange,
                "mean energy " + std::to_string(u) + " outside (" + std::to_string(ground) + ", " +
                    std::to_string(ceiling) + "); no finite positive temperature matches it");
  }

  const double width = spectrum.width();
  double lo = std::log(1e-6 * width);
  double hi = std::log(1e9 * width);
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (thermal_mean_energy(spectrum, std::exp(mid)) < u) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double t_star = std::exp(0.5 * (lo + hi));
  if (std::abs(thermal_mean_energy(spectrum, t_star) - u) > 1e-10 * width) {
    throw Error(ErrorCode::EnergyOutOfRange,
                "mean energy " + std::to_string(u) +
                    " is not reachable inside the temperature bracket");
  }
  return t_star;
}

}  // namespace virtemp
