#include "virtemp/otto.hpp"

#include <algorithm>
#include <string>

#include "virtemp/error.hpp"
#include "virtemp/majorization.hpp"

namespace virtemp {

OttoSpec::OttoSpec(EnergySpectrum hot_spectrum, EnergySpectrum cold_spectrum, double t_hot,
                   double t_cold)
    : hot_(std::move(hot_spectrum)), cold_(std::move(cold_spectrum)), t_hot_(t_hot), t_cold_(t_cold) {
  if (hot_.size() != cold_.size()) {
    throw Error(ErrorCode::LengthMismatch, "hot and cold spectra must have the same level count");
  }
  if (!(t_cold_ > 0.0) || !(t_hot_ > t_cold_)) {
    throw Error(ErrorCode::InvalidSpec, "need t_hot > t_cold > 0, got t_hot=" +
                                            std::to_string(t_hot_) +
                                            ", t_cold=" + std::to_string(t_cold_));
  }
}

namespace {

double min_gap_ratio(const OttoSpec& spec) {
  const auto w = spec.hot_spectrum().gaps();
  const auto w_cold = spec.cold_spectrum().gaps();
  double r = w_cold[0] / w[0];
  for (std::size_t i = 1; i < w.size(); ++i) r = std::min(r, w_cold[i] / w[i]);
  return r;
}

}  // namespace

IntermediateStates intermediate_passive_states(const OttoSpec& spec) {
  DiagonalState s1(spec.cold_spectrum(), gibbs(spec.hot_spectrum(), spec.t_hot()));
  DiagonalState s2(spec.hot_spectrum(), gibbs(spec.cold_spectrum(), spec.t_cold()));
  VtProfile v1 = adjacent_profile(s1);
  VtProfile v2 = adjacent_profile(s2);
  return {std::move(s1), std::move(v1), std::move(s2), std::move(v2)};
}

OttoReport run_cycle(const OttoSpec& spec) {
  IntermediateStates mid = intermediate_passive_states(spec);
  const Population& p = mid.after_stroke1.population();
  const Population& p_cold = mid.after_stroke2.population();

  // Both are Gibbs populations, hence sorted; no majorization verdict is
  // implied by computing the deficits.
  const MajorizationReport m = partial_sum_deficits(p, p_cold);
  const auto w = spec.hot_spectrum().gaps();
  const auto w_cold = spec.cold_spectrum().gaps();
  double q_hot = 0.0;
  double q_cold = 0.0;
  for (std::size_t i = 0; i < m.deficits.size(); ++i) {
    q_hot += w[i] * m.deficits[i];
    q_cold -= w_cold[i] * m.deficits[i];
  }

  const auto e = spec.hot_spectrum().levels();
  const auto e_cold = spec.cold_spectrum().levels();
  double q_hot_sum = 0.0;
  double q_cold_sum = 0.0;
  for (std::size_t k = 0; k < p.size(); ++k) {
    q_hot_sum += e[k] * (p[k] - p_cold[k]);
    q_cold_sum -= e_cold[k] * (p[k] - p_cold[k]);
  }

  const double work = q_hot + q_cold;
  std::optional<double> efficiency;
  if (q_hot > 0.0) efficiency = work / q_hot;

  return OttoReport{
      .q_hot = q_hot,
      .q_cold = q_cold,
      .work = work,
      .efficiency = efficiency,
      .efficiency_ub = 1.0 - min_gap_ratio(spec),
      .carnot = 1.0 - spec.t_cold() / spec.t_hot(),
      .deficits = m.deficits,
      .q_hot_level_sum = q_hot_sum,
      .q_cold_level_sum = q_cold_sum,
      .passive_after_stroke1 = std::move(mid.after_stroke1),
      .passive_after_stroke2 = std::move(mid.after_stroke2),
      .t_min_stroke1 = mid.profile1.t_min,
      .t_max_stroke2 = mid.profile2.t_max,
      .is_engine = q_hot > 0.0 && q_cold < 0.0 && work > 0.0,
      .deficits_nonnegative = m.holds,
  };
}

EngineDiagnostics engine_diagnostics(const OttoSpec& spec) {
  const OttoReport r = run_cycle(spec);
  const Population& p = r.passive_after_stroke1.population();
  const Population& p_cold = r.passive_after_stroke2.population();

  EngineDiagnostics d;
  d.hot_majorized_by_cold = is_majorized_by(p, p_cold);
  d.deficits_nonnegative = r.deficits_nonnegative;
  d.tmin_above_cold = r.t_min_stroke1 > spec.t_cold();
  d.some_gap_shrinks = min_gap_ratio(spec) < 1.0;
  d.within_carnot = !r.efficiency || *r.efficiency <= r.carnot + 1e-12;
  if (d.tmin_above_cold) {
    const Population bridge = gibbs(spec.cold_spectrum(), r.t_min_stroke1);
    d.transitive_route = is_majorized_by(p, bridge) && is_majorized_by(bridge, p_cold);
  }
  return d;
}

}  // namespace virtemp
