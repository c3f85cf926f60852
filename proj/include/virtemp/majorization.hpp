#pragma once

// Majorization between probability vectors sorted in non-increasing order.
//
// P is majorized by Q (P "more spread out", written P < Q) when every tail
// partial sum of P is at least the corresponding tail of Q:
//   M_i = sum_{j > i} (p_j - q_j) >= 0,   i = 1 .. n-1.
// Callers must pass sorted inputs; sort_descending() is there for the rest.

#include <cstddef>
#include <optional>
#include <vector>

#include "virtemp/core.hpp"

namespace virtemp {

/// Slack applied to every partial-sum comparison.
inline constexpr double kMajorizationSlack = 1e-12;

struct MajorizationReport {
  /// M_1 .. M_{n-1}; deficits[i] is the tail sum over zero-based indices > i.
  std::vector<double> deficits;
  /// True iff every deficit is >= -kMajorizationSlack.
  bool holds = false;
};

struct SortedPopulation {
  Population population;
  /// permutation[k] is the index in the input that landed at position k.
  std::vector<std::size_t> permutation;
};

/// Stable descending sort; ties keep their input order.
SortedPopulation sort_descending(const Population& p);

/// Throws LengthMismatch or NotSorted.
MajorizationReport partial_sum_deficits(const Population& p, const Population& q);

/// True iff p is majorized by q. Same preconditions as partial_sum_deficits.
bool is_majorized_by(const Population& p, const Population& q);

/// chi_m = sum_{j = m+1}^{n} (p_j - q_j) in one-based terms, m = 0 .. n-1.
/// Throws LengthMismatch or IndexOutOfRange.
double chi(const Population& p, const Population& q, std::size_t m);

/// sum_{m=1}^{n-1} w_m chi_m(p, q); equals U(p) - U(q) by summation by parts.
/// Throws LengthMismatch.
double energy_difference_via_gaps(const EnergySpectrum& spectrum, const Population& p,
                                  const Population& q);

struct ThermalBounds {
  /// P majorized by gibbs(T_min).
  MajorizationReport below_tmin;
  /// gibbs(T_max) majorized by P; empty when T_max is infinite.
  std::optional<MajorizationReport> above_tmax;
};

/// Throws NotPassive (and AllDegenerate for a uniform population).
ThermalBounds thermal_majorization_bounds(const DiagonalState& state);

}  // namespace virtemp
