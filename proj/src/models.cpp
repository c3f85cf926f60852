#include "virtemp/models.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "virtemp/error.hpp"

namespace virtemp {

Matrix::Matrix(std::size_t n, std::vector<double> row_major) : n_(n), data_(std::move(row_major)) {
  if (data_.size() != n * n) {
    throw Error(ErrorCode::LengthMismatch, "matrix data has " + std::to_string(data_.size()) +
                                               " entries, expected " + std::to_string(n * n));
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

double Matrix::frobenius_norm() const noexcept {
  return std::sqrt(std::inner_product(data_.begin(), data_.end(), data_.begin(), 0.0));
}

namespace {

double off_diagonal_norm(const Matrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (i != j) s += a(i, j) * a(i, j);
  return std::sqrt(s);
}

// Applies the rotation that zeroes a(p, q), accumulating it into v.
void rotate(Matrix& a, Matrix& v, std::size_t p, std::size_t q) {
  const double apq = a(p, q);
  const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
  const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;
  const std::size_t n = a.size();
  for (std::size_t k = 0; k < n; ++k) {
    const double akp = a(k, p);
    const double akq = a(k, q);
    a(k, p) = c * akp - s * akq;
    a(k, q) = s * akp + c * akq;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const double apk = a(p, k);
    const double aqk = a(q, k);
    a(p, k) = c * apk - s * aqk;
    a(q, k) = s * apk + c * aqk;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const double vkp = v(k, p);
    const double vkq = v(k, q);
    v(k, p) = c * vkp - s * vkq;
    v(k, q) = s * vkp + c * vkq;
  }
}

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::InvalidParams, what);
}

}  // namespace

EigenDecomposition diagonalize_hermitian(const Matrix& m) {
  const std::size_t n = m.size();
  require(n >= 1 && n <= 8, "eigensolver supports dimensions 1..8, got " + std::to_string(n));
  const double norm = m.frobenius_norm();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (std::abs(m(i, j) - m(j, i)) > 1e-12 * norm) {
        throw Error(ErrorCode::NotHermitian, "matrix is not symmetric at (" + std::to_string(i) +
                                                 ", " + std::to_string(j) + ")");
      }
    }
  }

  Matrix a = m;
  Matrix v = Matrix::identity(n);
  for (int sweep = 0; sweep < 100; ++sweep) {
    if (off_diagonal_norm(a) <= 1e-14 * norm) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (a(p, q) != 0.0) rotate(a, v, p, q);
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a(x, x) < a(y, y); });

  EigenDecomposition out{std::vector<double>(n), Matrix(n)};
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t src = order[k];
    out.eigenvalues[k] = a(src, src);
    double sign = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (std::abs(v(i, src)) > 1e-12) {
        sign = v(i, src) < 0.0 ? -1.0 : 1.0;
        break;
      }
    }
    for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, k) = sign * v(i, src);
  }
  return out;
}

double XyParams::k() const noexcept { return std::sqrt(b * b + gamma * gamma * j * j); }

void validate(const XyParams& p) {
  require(std::isfinite(p.b) && std::isfinite(p.j) && std::isfinite(p.gamma),
          "XY parameters must be finite");
  require(p.b >= 0.0, "XY field B must be >= 0");
  require(p.j > 0.0, "XY coupling J must be > 0 (J = 0 makes the middle levels degenerate)");
  require(p.gamma >= 0.0 && p.gamma <= 1.0, "XY anisotropy gamma must lie in [0, 1]");
  require(p.k() > p.j, "XY spectrum needs sqrt(B^2 + gamma^2 J^2) > J (B=" + std::to_string(p.b) +
                           ", J=" + std::to_string(p.j) + ", gamma=" + std::to_string(p.gamma) +
                           ")");
}

void validate(const XxxParams& p) {
  require(std::isfinite(p.b) && std::isfinite(p.j), "XXX parameters must be finite");
  require(p.j > 0.0 && p.j < p.b / 4.0, "XXX model needs 0 < J < B/4 (B=" + std::to_string(p.b) +
                                            ", J=" + std::to_string(p.j) + ")");
}

EnergySpectrum xy_spectrum(const XyParams& p) {
  validate(p);
  const double k = p.k();
  return EnergySpectrum({-2.0 * k, -2.0 * p.j, 2.0 * p.j, 2.0 * k});
}

Matrix xy_hamiltonian_matrix(const XyParams& p) {
  Matrix h(4);
  h(0, 0) = 2.0 * p.b;
  h(3, 3) = -2.0 * p.b;
  // sx.sx and sy.sy cancel on |00><11| up to the anisotropy and add on |01><10|.
  h(0, 3) = h(3, 0) = 2.0 * p.gamma * p.j;
  h(1, 2) = h(2, 1) = 2.0 * p.j;
  return h;
}

EnergySpectrum xxx_spectrum(const XxxParams& p) {
  validate(p);
  return EnergySpectrum({2.0 * p.j - 2.0 * p.b, -6.0 * p.j, 2.0 * p.j, 2.0 * p.j + 2.0 * p.b});
}

Matrix xxx_hamiltonian_matrix(const XxxParams& p) {
  Matrix h(4);
  h(0, 0) = 2.0 * p.b + 2.0 * p.j;
  h(1, 1) = -2.0 * p.j;
  h(2, 2) = -2.0 * p.j;
  h(3, 3) = -2.0 * p.b + 2.0 * p.j;
  h(1, 2) = h(2, 1) = 4.0 * p.j;
  return h;
}

double xy_eta_ub(double b1, double b2, double j, double gamma) {
  const XyParams hot{b1, j, gamma};
  const XyParams cold{b2, j, gamma};
  validate(hot);
  validate(cold);
  require(b1 >= b2, "field must not increase during the first stroke (B1 >= B2)");
  return (hot.k() - cold.k()) / (hot.k() - j);
}

double xxx_eta_ub(double b1, double b2, double j) {
  validate(XxxParams{b1, j});
  validate(XxxParams{b2, j});
  require(b1 >= b2, "field must not increase during the first stroke (B1 >= B2)");
  return (b1 - b2) / (b1 - 4.0 * j);
}

OttoSpec xy_otto_spec(double b1, double b2, double j, double gamma, double t_hot, double t_cold) {
  return OttoSpec(xy_spectrum({b1, j, gamma}), xy_spectrum({b2, j, gamma}), t_hot, t_cold);
}

OttoSpec xxx_otto_spec(double b1, double b2, double j, double t_hot, double t_cold) {
  return OttoSpec(xxx_spectrum({b1, j}), xxx_spectrum({b2, j}), t_hot, t_cold);
}

}  // namespace virtemp
