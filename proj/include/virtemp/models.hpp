#pragma once

// Two-qubit Heisenberg working media with closed-form spectra, and a small
// dense symmetric eigensolver used to cross-check them.
//
// Computational basis order is |00>, |01>, |10>, |11> with sigma_z|0> = |0>.

#include <cstddef>
#include <vector>

#include "virtemp/core.hpp"
#include "virtemp/otto.hpp"

namespace virtemp {

/// Dense row-major square matrix. Only what the eigensolver needs.
class Matrix {
 public:
  explicit Matrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}
  Matrix(std::size_t n, std::vector<double> row_major);

  static Matrix identity(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  double frobenius_norm() const noexcept;

 private:
  std::size_t n_;
  std::vector<double> data_;
};

struct EigenDecomposition {
  /// Ascending.
  std::vector<double> eigenvalues;
  /// Column k of this matrix is the eigenvector for eigenvalues[k], with its
  /// first non-negligible component made positive.
  Matrix eigenvectors;
};

/// Cyclic Jacobi rotations on a real symmetric matrix (dimension 1..8).
/// Throws NotHermitian when |m_ij - m_ji| > 1e-12 * ||m||, InvalidParams
/// for unsupported sizes.
EigenDecomposition diagonalize_hermitian(const Matrix& m);

/// H = B (sz x 1 + 1 x sz) + J [(1 + gamma) sx x sx + (1 - gamma) sy x sy].
struct XyParams {
  double b = 0.0;
  double j = 0.0;
  double gamma = 0.0;

  /// sqrt(B^2 + gamma^2 J^2).
  double k() const noexcept;
};

/// H = B (sz x 1 + 1 x sz) + 2 J (sx x sx + sy x sy + sz x sz).
struct XxxParams {
  double b = 0.0;
  double j = 0.0;
};

/// Throws InvalidParams unless B >= 0, J > 0, 0 <= gamma <= 1 and K > J.
void validate(const XyParams& p);
/// Throws InvalidParams unless 0 < J < B/4.
void validate(const XxxParams& p);

/// Levels (-2K, -2J, 2J, 2K).
EnergySpectrum xy_spectrum(const XyParams& p);
Matrix xy_hamiltonian_matrix(const XyParams& p);

/// Levels (2J - 2B, -6J, 2J, 2J + 2B).
EnergySpectrum xxx_spectrum(const XxxParams& p);
Matrix xxx_hamiltonian_matrix(const XxxParams& p);

/// Closed-form efficiency bound for a field quench b1 -> b2 (b1 >= b2):
/// (K_1 - K_2) / (K_1 - J).
double xy_eta_ub(double b1, double b2, double j, double gamma);

/// (B_1 - B_2) / (B_1 - 4J), for 0 < J < B_2/4 and B_1 >= B_2.
double xxx_eta_ub(double b1, double b2, double j);

/// Otto cycle with the field at b1 on the hot bath and b2 on the cold bath.
OttoSpec xy_otto_spec(double b1, double b2, double j, double gamma, double t_hot, double t_cold);
OttoSpec xxx_otto_spec(double b1, double b2, double j, double t_hot, double t_cold);

}  // namespace virtemp
