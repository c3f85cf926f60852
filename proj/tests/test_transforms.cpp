#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "doctest_helpers.hpp"
#include "test_support.hpp"
#include "virtemp/majorization.hpp"
#include "virtemp/transforms.hpp"
#include "virtemp/virtual_temp.hpp"

using namespace virtemp;
using doctest::Approx;
using testing::code_of;

namespace {

const EnergySpectrum kThreeLevels = make_spectrum({0, 1, 2});

// Active state with U below the uniform mean: positive weights, at least
// one inversion.
std::optional<DiagonalState> random_active_state(testing::Rng& rng) {
  const std::size_t n = testing::random_size(rng, 2, 8);
  const auto spectrum = testing::random_spectrum(rng, n);
  const auto pop = testing::random_population(rng, n);
  DiagonalState s(spectrum, pop);
  if (is_passive(s) || mean_energy(s) >= spectrum.uniform_mean()) return std::nullopt;
  return s;
}

}  // namespace

TEST_CASE("passify_isoentropic") {
  const auto swap = passify_isoentropic(DiagonalState(make_spectrum({0, 1}), Population({0.25, 0.75})));
  CHECK(swap.passive_state.population().probs()[0] == 0.75);
  CHECK(swap.passive_state.population().probs()[1] == 0.25);
  CHECK(swap.extracted_work == Approx(0.5).epsilon(1e-15));
  CHECK(swap.mixing_parameter == 0.0);

  const DiagonalState passive(kThreeLevels, Population({0.5, 0.3, 0.2}));
  const auto same = passify_isoentropic(passive);
  CHECK(same.passive_state.population() == passive.population());
  CHECK(same.extracted_work == 0.0);

  const auto three = passify_isoentropic(DiagonalState(kThreeLevels, Population({0.2, 0.5, 0.3})));
  const auto p = three.passive_state.population().probs();
  CHECK(p[0] == 0.5);
  CHECK(p[1] == 0.3);
  CHECK(p[2] == 0.2);
  CHECK(three.extracted_work == Approx(0.4).epsilon(1e-14));
}

TEST_CASE("passify_isoenergetic") {
  const DiagonalState passive(kThreeLevels, Population({0.5, 0.3, 0.2}));
  const auto same = passify_isoenergetic(passive);
  CHECK(same.mixing_parameter == 0.0);
  CHECK(same.passive_state.population() == passive.population());

  CHECK(code_of([] {
          passify_isoenergetic(DiagonalState(make_spectrum({0, 1}), Population({0.25, 0.75})));
        }) == ErrorCode::EnergyAboveUniformMean);
  CHECK(code_of([] {
          passify_isoenergetic(DiagonalState(kThreeLevels, Population({0.2, 0.5, 0.3})));
        }) == ErrorCode::EnergyAboveUniformMean);

  const DiagonalState active(kThreeLevels, Population({0.3, 0.45, 0.25}));
  const auto r = passify_isoenergetic(active);
  CHECK(r.mixing_parameter == Approx(0.75).epsilon(1e-14));
  const auto s = r.passive_state.population().probs();
  CHECK(s[0] == Approx(0.3625).epsilon(1e-14));
  CHECK(s[1] == Approx(0.325).epsilon(1e-14));
  CHECK(s[2] == Approx(0.3125).epsilon(1e-14));
  CHECK(mean_energy(r.passive_state) == Approx(0.95).epsilon(1e-14));
  CHECK(r.extracted_work == 0.0);
}

TEST_CASE("compare_mean_vt") {
  const DiagonalState active(kThreeLevels, Population({0.3, 0.45, 0.25}));
  const auto c = compare_mean_vt(active);
  // 2 / ln(p_1 / p_3) on both outputs, evaluated separately.
  CHECK(c.t_isoentropic == Approx(3.40259505603627360075).epsilon(1e-12));
  CHECK(c.t_isoenergetic == Approx(13.4752724095800654394).epsilon(1e-12));
  CHECK(c.t_isoenergetic > c.t_isoentropic);

  // Tiny inversion near a thermal state: still strict.
  const auto g = gibbs(kThreeLevels, 1.0);
  const double eps = 1e-6;
  const double mid = 0.5 * (g[1] + g[2]);
  const DiagonalState nearly(kThreeLevels, Population({g[0], mid - eps, mid + eps}));
  const auto cn = compare_mean_vt(nearly);
  CHECK(cn.t_isoenergetic > cn.t_isoentropic);
  CHECK(cn.t_isoenergetic - cn.t_isoentropic < 1e-3);

  CHECK(code_of([] { compare_mean_vt(DiagonalState(kThreeLevels, Population({0.5, 0.3, 0.2}))); }) ==
        ErrorCode::AlreadyPassive);
  CHECK(code_of([] { compare_mean_vt(DiagonalState(kThreeLevels, Population({0.2, 0.5, 0.3}))); }) ==
        ErrorCode::EnergyAboveUniformMean);
}

TEST_CASE("passification invariants on random active states") {
  testing::Rng rng(31);
  int checked = 0;
  while (checked < 1000) {
    const auto maybe = random_active_state(rng);
    if (!maybe) continue;
    const DiagonalState& state = *maybe;
    ++checked;

    const auto entropic = passify_isoentropic(state);
    REQUIRE(is_passive(entropic.passive_state));
    std::vector<double> in(state.population().probs().begin(), state.population().probs().end());
    std::vector<double> out(entropic.passive_state.population().probs().begin(),
                            entropic.passive_state.population().probs().end());
    std::sort(in.begin(), in.end());
    std::sort(out.begin(), out.end());
    REQUIRE(in == out);
    REQUIRE(std::abs(entropy(entropic.passive_state.population()) - entropy(state.population())) <=
            1e-12);
    REQUIRE(entropic.extracted_work > 0.0);
    // Idempotent.
    REQUIRE(passify_isoentropic(entropic.passive_state).passive_state.population() ==
            entropic.passive_state.population());

    const auto energetic = passify_isoenergetic(state);
    const auto& sigma = energetic.passive_state.population();
    REQUIRE(is_passive(energetic.passive_state));
    const double u_in = mean_energy(state);
    REQUIRE(std::abs(mean_energy(energetic.passive_state) - u_in) <= 1e-10 * std::abs(u_in) + 1e-14);
    REQUIRE(is_majorized_by(sigma, entropic.passive_state.population()));
    REQUIRE(entropy(sigma) >= entropy(state.population()) - 1e-12);
    const auto& sorted = entropic.passive_state.population();
    REQUIRE(sigma[0] < sorted[0]);
    REQUIRE(sigma[sigma.size() - 1] > sorted[sorted.size() - 1]);

    const auto c = compare_mean_vt(state);
    REQUIRE(c.t_isoenergetic > c.t_isoentropic);
  }
}
