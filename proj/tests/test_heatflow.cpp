#include <doctest.h>

#include <cmath>

#include "doctest_helpers.hpp"
#include "test_support.hpp"
#include "virtemp/heatflow.hpp"
#include "virtemp/virtual_temp.hpp"

using namespace virtemp;
using doctest::Approx;
using testing::code_of;

namespace {

const DiagonalState kThree(make_spectrum({0, 1, 2}), Population({0.5, 0.3, 0.2}));

}  // namespace

TEST_CASE("energy_bounds") {
  const auto g = energy_bounds(gibbs_state(make_spectrum({0, 1, 4}), 0.9));
  CHECK(g.u_min == Approx(g.u).epsilon(1e-12));
  CHECK(g.u_max == Approx(g.u).epsilon(1e-12));

  // U(gibbs(1/ln(5/3))) = 33/49 and U(gibbs(1/ln 1.5)) = 14/19 exactly.
  const auto b = energy_bounds(kThree);
  CHECK(b.u_min == Approx(33.0 / 49.0).epsilon(1e-13));
  CHECK(b.u == Approx(0.7).epsilon(1e-15));
  CHECK(b.u_max == Approx(14.0 / 19.0).epsilon(1e-13));
  CHECK(b.u_min <= b.u);
  CHECK(b.u <= b.u_max);

  const DiagonalState tied(make_spectrum({0, 1, 2}), Population({0.4, 0.4, 0.2}));
  CHECK(energy_bounds(tied).u_max == Approx(1.0));

  const DiagonalState active(make_spectrum({0, 1}), Population({0.25, 0.75}));
  CHECK(code_of([&] { energy_bounds(active); }) == ErrorCode::NotPassive);
}

TEST_CASE("thermalization_heat") {
  const double t_star = effective_temperature(kThree);
  CHECK(std::abs(thermalization_heat(kThree, t_star)) <= 1e-10);
  CHECK(thermalization_heat(gibbs_state(make_spectrum({0, 1}), 0.5), 0.8) > 0.0);
  CHECK(thermalization_heat(kThree, 1.0) == Approx(-0.27521038260444143153).epsilon(1e-13));
  CHECK(code_of([] { thermalization_heat(kThree, 0.0); }) == ErrorCode::NonPositiveTemperature);
}

TEST_CASE("heat_flow_direction rules") {
  const auto p = adjacent_profile(kThree);

  const auto below = heat_flow_direction(kThree, 0.5 * p.t_min);
  CHECK(below.rule == FlowRule::BelowTmin);
  CHECK(below.direction == FlowDirection::OutOfSystem);
  CHECK(below.heat < 0.0);

  const auto above = heat_flow_direction(kThree, 2.0 * p.t_max);
  CHECK(above.rule == FlowRule::AboveTmax);
  CHECK(above.direction == FlowDirection::IntoSystem);
  CHECK(above.heat > 0.0);

  const double t_star = effective_temperature(kThree);
  const auto mid_low = heat_flow_direction(kThree, 0.5 * (p.t_min + t_star));
  CHECK(mid_low.rule == FlowRule::ViaEffectiveTemperature);
  CHECK(mid_low.direction == FlowDirection::OutOfSystem);
  const auto mid_high = heat_flow_direction(kThree, 0.5 * (t_star + p.t_max));
  CHECK(mid_high.rule == FlowRule::ViaEffectiveTemperature);
  CHECK(mid_high.direction == FlowDirection::IntoSystem);

  const DiagonalState two(make_spectrum({0, 1}), Population({0.75, 0.25}));
  const auto v = heat_flow_direction(two, 1.5);
  CHECK(v.direction == FlowDirection::IntoSystem);
  CHECK(v.rule == FlowRule::AboveTmax);

  CHECK(code_of([&] { heat_flow_direction(kThree, t_star); }) == ErrorCode::EquilibriumNoFlow);
  CHECK(code_of([] { heat_flow_direction(gibbs_state(make_spectrum({0, 1, 3}), 0.6), 0.6); }) ==
        ErrorCode::EquilibriumNoFlow);
  const DiagonalState active(make_spectrum({0, 1}), Population({0.25, 0.75}));
  CHECK(code_of([&] { heat_flow_direction(active, 1.0); }) == ErrorCode::NotPassive);
}

TEST_CASE("heat-flow verdict agrees with the energy difference") {
  testing::Rng rng(77);
  for (int trial = 0; trial < 300; ++trial) {
    const auto state = testing::random_passive_state(rng);
    const auto p = adjacent_profile(state);
    const auto bounds = energy_bounds(state);
    REQUIRE(bounds.u_min <= bounds.u + 1e-12);
    REQUIRE(bounds.u <= bounds.u_max + 1e-12);
    for (double t = 0.25 * p.t_min; t < 4.0 * p.t_max; t *= 1.17) {
      HeatFlowVerdict v;
      try {
        v = heat_flow_direction(state, t);
      } catch (const Error& e) {
        REQUIRE(e.code() == ErrorCode::EquilibriumNoFlow);
        continue;
      }
      const double heat = thermalization_heat(state, t);
      REQUIRE((heat > 0.0) == (v.direction == FlowDirection::IntoSystem));
      if (t > p.t_min && t < p.t_max) REQUIRE(v.rule == FlowRule::ViaEffectiveTemperature);
    }
  }
}
