#pragma once

// Value types for diagonal (energy-basis) states and the thermodynamic
// primitives built on them. Boltzmann's constant is 1 throughout, so
// temperatures carry energy units.

#include <cstddef>
#include <span>
#include <vector>

namespace virtemp {

/// Tolerance on |sum(p) - 1| accepted by Population.
inline constexpr double kNormalizationTolerance = 1e-12;

/// Non-degenerate energy levels E_1 < ... < E_n (n >= 2) with their
/// adjacent gaps w_i = E_{i+1} - E_i.
class EnergySpectrum {
 public:
  /// Throws TooFewLevels, NonFiniteValue or NonIncreasingLevels.
  explicit EnergySpectrum(std::vector<double> levels);

  std::size_t size() const noexcept { return levels_.size(); }
  std::span<const double> levels() const noexcept { return levels_; }
  std::span<const double> gaps() const noexcept { return gaps_; }
  double level(std::size_t k) const { return levels_.at(k); }
  double gap(std::size_t i) const { return gaps_.at(i); }

  /// E_n - E_1.
  double width() const noexcept { return levels_.back() - levels_.front(); }
  /// Mean energy of the maximally mixed state, sum(E_k)/n.
  double uniform_mean() const noexcept;

  friend bool operator==(const EnergySpectrum&, const EnergySpectrum&) = default;

 private:
  std::vector<double> levels_;
  std::vector<double> gaps_;
};

/// Same as the EnergySpectrum constructor; kept for call sites that read
/// better as a factory.
EnergySpectrum make_spectrum(std::vector<double> levels);

/// Strictly positive probability vector summing to one.
class Population {
 public:
  /// Throws TooFewLevels, NonFiniteValue, NonPositiveProbability or
  /// NormalizationViolated. Never renormalizes.
  explicit Population(std::vector<double> probs);

  std::size_t size() const noexcept { return probs_.size(); }
  std::span<const double> probs() const noexcept { return probs_; }
  double operator[](std::size_t k) const { return probs_[k]; }

  /// True when p_k >= p_{k+1} for every k.
  bool is_non_increasing() const noexcept;

  friend bool operator==(const Population&, const Population&) = default;

 private:
  std::vector<double> probs_;
};

class DiagonalState {
 public:
  /// Throws LengthMismatch.
  DiagonalState(EnergySpectrum spectrum, Population population);

  const EnergySpectrum& spectrum() const noexcept { return spectrum_; }
  const Population& population() const noexcept { return population_; }
  std::size_t size() const noexcept { return spectrum_.size(); }

 private:
  EnergySpectrum spectrum_;
  Population population_;
};

/// Canonical populations exp(-E_k/T)/Z. Levels are shifted by E_1 before
/// exponentiating. Throws NonPositiveTemperature, and NonPositiveProbability
/// when a population underflows to zero.
Population gibbs(const EnergySpectrum& spectrum, double temperature);

DiagonalState gibbs_state(const EnergySpectrum& spectrum, double temperature);

/// U(gibbs(T)) evaluated without materializing a Population, so it stays
/// finite for temperatures where individual populations underflow.
double thermal_mean_energy(const EnergySpectrum& spectrum, double temperature);

double mean_energy(const EnergySpectrum& spectrum, const Population& population);
double mean_energy(const DiagonalState& state);

/// Shannon entropy -sum p ln p, in nats.
double entropy(const Population& population);

bool is_passive(const DiagonalState& state);

/// Temperature T* of the Gibbs state with the same mean energy. Bisection
/// in log T over [1e-6, 1e9] * (E_n - E_1). Throws EnergyOutOfRange when U
/// is not strictly inside (E_1, sum(E_k)/n).
double effective_temperature(const DiagonalState& state);

}  // namespace virtemp
