#pragma once

// Two ways of turning an active diagonal state into a passive one on the
// same spectrum:
//  - isoentropic: a permutation of the populations (what a cyclic unitary
//    can do); releases the ergotropy as work.
//  - isoenergetic: a unital map that keeps the mean energy. We use the
//    family sigma(l) = (1 - l) * sort(p) + l * uniform, which is doubly
//    stochastic and passive for every l, with l chosen to match U.

#include "virtemp/core.hpp"

namespace virtemp {

struct PassificationResult {
  DiagonalState passive_state;
  /// U(in) - U(out); zero for the isoenergetic route.
  double extracted_work = 0.0;
  /// Uniform-mixing weight l; zero for the isoentropic route.
  double mixing_parameter = 0.0;
};

PassificationResult passify_isoentropic(const DiagonalState& state);

/// Throws EnergyAboveUniformMean when U(state) >= sum(E_k)/n.
PassificationResult passify_isoenergetic(const DiagonalState& state);

struct MeanVtComparison {
  /// Mean virtual temperature after the isoentropic route.
  double t_isoentropic = 0.0;
  /// Mean virtual temperature after the isoenergetic route.
  double t_isoenergetic = 0.0;
  PassificationResult isoentropic;
  PassificationResult isoenergetic;
};

/// Throws AlreadyPassive for passive inputs, plus anything the two routes
/// throw.
MeanVtComparison compare_mean_vt(const DiagonalState& state);

}  // namespace virtemp
