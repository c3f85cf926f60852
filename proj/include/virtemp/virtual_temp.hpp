#pragma once

// Virtual temperatures of passive diagonal states.
//
// For a pair of levels (i, j) with p_i > p_j the virtual temperature is
// (E_j - E_i) / ln(p_i / p_j). A tied pair (p_i == p_j) maps to +infinity,
// which is the limit of that expression. Indices are zero-based.

#include <cstddef>
#include <limits>
#include <vector>

#include "virtemp/core.hpp"

namespace virtemp {

inline constexpr double kInfiniteTemperature = std::numeric_limits<double>::infinity();

struct VtProfile {
  /// T_i for each adjacent pair (i, i+1); may hold kInfiniteTemperature.
  std::vector<double> adjacent;
  /// Smallest finite adjacent temperature.
  double t_min = 0.0;
  /// Largest adjacent temperature; kInfiniteTemperature if any pair is tied.
  double t_max = 0.0;
  /// Gap-weighted harmonic mean of the adjacent temperatures.
  double mean = 0.0;
  /// w_i / sum(w).
  std::vector<double> weights;
};

/// Throws NotPassive or IndexOutOfRange (also when i >= j).
double pair_virtual_temperature(const DiagonalState& state, std::size_t i, std::size_t j);

/// Throws NotPassive, or AllDegenerate when every adjacent pair is tied.
VtProfile adjacent_profile(const DiagonalState& state);

/// Weighted harmonic mean (sum_k W_k / T_k)^-1 with W_k = w_k / sum(w).
/// Infinite T_k contribute nothing. Throws NotPassive or AllDegenerate.
double mean_virtual_temperature(const DiagonalState& state);

/// Enumerates T_ij over every pair i < j and checks that the extremes are
/// the adjacent-pair extremes (to 1e-12 relative). Throws NotPassive.
bool verify_minmax_lemma(const DiagonalState& state);

}  // namespace virtemp
