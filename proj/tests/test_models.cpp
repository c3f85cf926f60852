#include <doctest.h>

#include <cmath>

#include "doctest_helpers.hpp"
#include "test_support.hpp"
#include "virtemp/models.hpp"
#include "virtemp/otto.hpp"

using namespace virtemp;
using doctest::Approx;
using testing::code_of;

namespace {

double residual(const Matrix& m, const EigenDecomposition& e, std::size_t k) {
  double r = 0.0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    double mv = 0.0;
    for (std::size_t j = 0; j < m.size(); ++j) mv += m(i, j) * e.eigenvectors(j, k);
    const double d = mv - e.eigenvalues[k] * e.eigenvectors(i, k);
    r += d * d;
  }
  return std::sqrt(r);
}

}  // namespace

TEST_CASE("diagonalize_hermitian basics") {
  const auto id = diagonalize_hermitian(Matrix::identity(5));
  for (double v : id.eigenvalues) CHECK(v == 1.0);

  Matrix d(3);
  d(0, 0) = 3;
  d(1, 1) = 1;
  d(2, 2) = 2;
  const auto e = diagonalize_hermitian(d);
  CHECK(e.eigenvalues == std::vector<double>{1, 2, 3});
  CHECK(e.eigenvectors(1, 0) == 1.0);
  CHECK(e.eigenvectors(2, 1) == 1.0);
  CHECK(e.eigenvectors(0, 2) == 1.0);

  Matrix bad(2);
  bad(0, 1) = 1.0;
  CHECK(code_of([&] { diagonalize_hermitian(bad); }) == ErrorCode::NotHermitian);
  CHECK(code_of([] { diagonalize_hermitian(Matrix(9)); }) == ErrorCode::InvalidParams);
}

TEST_CASE("Jacobi on random symmetric matrices") {
  testing::Rng rng(17);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = testing::random_size(rng, 1, 8);
    Matrix m(n);
    double trace = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = u(rng);
      trace += m(i, i);
    }
    const auto e = diagonalize_hermitian(m);
    double sum = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      sum += e.eigenvalues[k];
      if (k) REQUIRE(e.eigenvalues[k - 1] <= e.eigenvalues[k]);
      REQUIRE(residual(m, e, k) <= 1e-10 * m.frobenius_norm());
    }
    REQUIRE(sum == Approx(trace).epsilon(1e-12).scale(m.frobenius_norm()));
  }
}

TEST_CASE("xy_spectrum") {
  const auto s = xy_spectrum({2.8, 0.5, 0.4});
  const double k = std::sqrt(7.88);
  CHECK(s.level(0) == Approx(-2 * k).epsilon(1e-15));
  CHECK(s.level(1) == -1.0);
  CHECK(s.level(2) == 1.0);
  CHECK(s.level(3) == Approx(2 * k).epsilon(1e-15));

  const auto iso = xy_spectrum({2.0, 0.5, 0.0});
  CHECK(iso.gap(0) == Approx(2 * 2.0 - 2 * 0.5));
  CHECK(iso.gap(1) == Approx(4 * 0.5));

  CHECK(code_of([] { xy_spectrum({2.0, 0.0, 0.3}); }) == ErrorCode::InvalidParams);
  CHECK(code_of([] { xy_spectrum({0.1, 0.5, 0.2}); }) == ErrorCode::InvalidParams);
  CHECK(code_of([] { xy_spectrum({2.0, 0.5, 1.5}); }) == ErrorCode::InvalidParams);
}

TEST_CASE("xy_hamiltonian_matrix") {
  const auto h = xy_hamiltonian_matrix({0.0, 0.7, 1.0});
  CHECK(h(0, 3) == Approx(2 * 0.7));
  CHECK(h(3, 0) == Approx(2 * 0.7));

  const XyParams p{2.8, 0.5, 0.4};
  const auto e = diagonalize_hermitian(xy_hamiltonian_matrix(p));
  const auto s = xy_spectrum(p);
  for (std::size_t k = 0; k < 4; ++k) CHECK(std::abs(e.eigenvalues[k] - s.level(k)) <= 1e-10);

  // Ground and top states live on {|00>, |11>}:
  //   (B -+ K)|00> + gamma J |11>, normalized by sqrt(2 (K^2 -+ B K)).
  const double b = p.b, k = p.k(), gj = p.gamma * p.j;
  const double n1 = std::sqrt(2 * (k * k - b * k));
  const double n4 = std::sqrt(2 * (k * k + b * k));
  const double psi1[4] = {(b - k) / n1, 0, 0, gj / n1};
  const double psi4[4] = {(b + k) / n4, 0, 0, gj / n4};
  double overlap1 = 0, overlap4 = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    overlap1 += psi1[i] * e.eigenvectors(i, 0);
    overlap4 += psi4[i] * e.eigenvectors(i, 3);
  }
  CHECK(std::abs(overlap1) == Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(overlap4) == Approx(1.0).epsilon(1e-12));
  // Middle states (|01> -+ |10>)/sqrt 2.
  CHECK(std::abs(e.eigenvectors(1, 1)) == Approx(std::sqrt(0.5)).epsilon(1e-12));
  CHECK(e.eigenvectors(1, 1) * e.eigenvectors(2, 1) < 0.0);
  CHECK(e.eigenvectors(1, 2) * e.eigenvectors(2, 2) > 0.0);
  // Sign convention: first non-negligible component positive.
  for (std::size_t k2 = 0; k2 < 4; ++k2) {
    for (std::size_t i = 0; i < 4; ++i) {
      if (std::abs(e.eigenvectors(i, k2)) > 1e-12) {
        CHECK(e.eigenvectors(i, k2) > 0.0);
        break;
      }
    }
  }
}

TEST_CASE("xy_eta_ub") {
  const double expected = (std::sqrt(7.88) - std::sqrt(4.04)) / (std::sqrt(7.88) - 0.5);
  CHECK(xy_eta_ub(2.8, 2.0, 0.5, 0.4) == Approx(expected).epsilon(1e-15));
  CHECK(xy_eta_ub(2.8, 2.0, 0.5, 0.4) == Approx(0.345519040044242145).epsilon(1e-14));
  CHECK(xy_eta_ub(2.8, 2.0, 0.5, 0.0) == Approx((2.8 - 2.0) / (2.8 - 0.5)).epsilon(1e-15));
  CHECK(xy_eta_ub(2.5, 2.5, 0.5, 0.3) == 0.0);
  CHECK(code_of([] { xy_eta_ub(2.0, 2.8, 0.5, 0.4); }) == ErrorCode::InvalidParams);
}

TEST_CASE("xxx model") {
  const auto s = xxx_spectrum({4.0, 0.5});
  CHECK(s.levels()[0] == -7.0);
  CHECK(s.levels()[1] == -3.0);
  CHECK(s.levels()[2] == 1.0);
  CHECK(s.levels()[3] == 9.0);
  CHECK(s.gap(0) == 4.0);
  CHECK(s.gap(1) == 4.0);
  CHECK(s.gap(2) == 8.0);

  CHECK(code_of([] { xxx_spectrum({4.0, 1.0}); }) == ErrorCode::InvalidParams);
  CHECK(code_of([] { xxx_spectrum({4.0, 0.0}); }) == ErrorCode::InvalidParams);

  const auto e = diagonalize_hermitian(xxx_hamiltonian_matrix({4.0, 0.5}));
  for (std::size_t k = 0; k < 4; ++k) CHECK(e.eigenvalues[k] == Approx(s.level(k)).epsilon(1e-12));

  CHECK(xxx_eta_ub(4.0, 3.0, 0.5) == 0.5);
  CHECK(xxx_eta_ub(4.0, 3.0, 1e-9) == Approx(0.25).epsilon(1e-8));
  CHECK(xxx_eta_ub(4.0, 4.0, 0.5) == 0.0);
  CHECK(code_of([] { xxx_eta_ub(4.0, 3.0, 1.0); }) == ErrorCode::InvalidParams);

  const auto r = run_cycle(xxx_otto_spec(4.0, 3.0, 0.5, 1.0, 0.4));
  CHECK(r.efficiency_ub == Approx(0.5).epsilon(1e-14));
  REQUIRE(r.efficiency.has_value());
  CHECK(*r.efficiency == Approx(0.486219657045334779778).epsilon(1e-10));
}

TEST_CASE("virtual-temperature ordering after the first stroke") {
  testing::Rng rng(99);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 500; ++trial) {
    // XY: T_1 = T_3 < T_2 = T_h.
    const double j = 0.1 + u(rng);
    const double gamma = u(rng);
    const double b2 = j + 0.2 + 2 * u(rng);
    const double b1 = b2 + 0.05 + 2 * u(rng);
    const auto xy = intermediate_passive_states(xy_otto_spec(b1, b2, j, gamma, 1.0, 0.3));
    const auto& t = xy.profile1.adjacent;
    REQUIRE(std::abs(t[0] - t[2]) <= 1e-12 * t[1]);
    REQUIRE(t[0] < t[1]);
    REQUIRE(std::abs(xy_eta_ub(b1, b2, j, gamma) - (1 - xy.profile1.t_min)) <= 1e-12);

    // XXX: T_2 = T_h > T_3 = T_h B2/B1 > T_1.
    const double jx = 0.05 + u(rng);
    const double bb2 = 4 * jx + 0.1 + 2 * u(rng);
    const double bb1 = bb2 + 0.05 + 2 * u(rng);
    const auto xxx = intermediate_passive_states(xxx_otto_spec(bb1, bb2, jx, 1.0, 0.3));
    const auto& tx = xxx.profile1.adjacent;
    REQUIRE(tx[1] > tx[2]);
    REQUIRE(tx[2] > tx[0]);
    REQUIRE(tx[1] == Approx(1.0).epsilon(1e-12));
    REQUIRE(tx[2] == Approx(bb2 / bb1).epsilon(1e-12));
    REQUIRE(tx[2] < 1.0);
  }
}
