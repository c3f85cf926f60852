#include "virtemp/majorization.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "virtemp/error.hpp"
#include "virtemp/virtual_temp.hpp"

namespace virtemp {

namespace {

void require_same_length(std::size_t a, std::size_t b) {
  if (a != b) {
    throw Error(ErrorCode::LengthMismatch,
                "lengths differ: " + std::to_string(a) + " vs " + std::to_string(b));
  }
}

}  // namespace

SortedPopulation sort_descending(const Population& p) {
  const auto probs = p.probs();
  std::vector<std::size_t> order(probs.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return probs[a] > probs[b]; });
  std::vector<double> sorted;
  sorted.reserve(order.size());
  for (std::size_t k : order) sorted.push_back(probs[k]);
  return {Population(std::move(sorted)), std::move(order)};
}

MajorizationReport partial_sum_deficits(const Population& p, const Population& q) {
  require_same_length(p.size(), q.size());
  if (!p.is_non_increasing() || !q.is_non_increasing()) {
    throw Error(ErrorCode::NotSorted, "majorization inputs must be sorted non-increasingly");
  }
  const std::size_t n = p.size();
  MajorizationReport report;
  report.deficits.assign(n - 1, 0.0);
  double tail = 0.0;
  for (std::size_t j = n - 1; j >= 1; --j) {
    tail += p[j] - q[j];
    report.deficits[j - 1] = tail;
  }
  report.holds = std::all_of(report.deficits.begin(), report.deficits.end(),
                             [](double m) { return m >= -kMajorizationSlack; });
  return report;
}

bool is_majorized_by(const Population& p, const Population& q) {
  return partial_sum_deficits(p, q).holds;
}

double chi(const Population& p, const Population& q, std::size_t m) {
  require_same_length(p.size(), q.size());
  if (m >= p.size()) {
    throw Error(ErrorCode::IndexOutOfRange,
                "m must be < " + std::to_string(p.size()) + ", got " + std::to_string(m));
  }
  double sum = 0.0;
  for (std::size_t j = m; j < p.size(); ++j) sum += p[j] - q[j];
  return sum;
}

double energy_difference_via_gaps(const EnergySpectrum& spectrum, const Population& p,
                                  const Population& q) {
  require_same_length(spectrum.size(), p.size());
  require_same_length(p.size(), q.size());
  const auto gaps = spectrum.gaps();
  double total = 0.0;
  for (std::size_t m = 1; m < spectrum.size(); ++m) total += gaps[m - 1] * chi(p, q, m);
  return total;
}

ThermalBounds thermal_majorization_bounds(const DiagonalState& state) {
  const VtProfile profile = adjacent_profile(state);
  const Population& p = state.population();
  ThermalBounds bounds;
  bounds.below_tmin = partial_sum_deficits(p, gibbs(state.spectrum(), profile.t_min));
  if (!std::isinf(profile.t_max)) {
    bounds.above_tmax = partial_sum_deficits(gibbs(state.spectrum(), profile.t_max), p);
  }
  return bounds;
}

}  // namespace virtemp
