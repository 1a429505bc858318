#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "celliep/cell_matrix.hpp"
#include "celliep/matrix.hpp"
#include "celliep/spectrum.hpp"

namespace celliep {

inline constexpr double kJacobiTolerance = 1e-12;
inline constexpr int kJacobiMaxSweeps = 50;
inline constexpr std::size_t kCharPolyMaxOrder = 32;
inline constexpr double kRootTolerance = 1e-14;
inline constexpr int kRootMaxIterations = 500;
inline constexpr double kComplexRootTolerance = 1e-8;

/// Real polynomial, coefficients in ascending degree order.
class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(std::vector<double> ascending);

  [[nodiscard]] std::size_t degree() const noexcept;
  [[nodiscard]] const std::vector<double>& coefficients() const noexcept { return coeffs_; }
  [[nodiscard]] double leading() const noexcept { return coeffs_.empty() ? 0.0 : coeffs_.back(); }
  [[nodiscard]] bool is_monic() const noexcept { return leading() == 1.0; }
  [[nodiscard]] double max_abs_coefficient() const;

  /// Divide through by the leading coefficient.
  [[nodiscard]] Polynomial monic() const;

  [[nodiscard]] double operator()(double x) const;
  [[nodiscard]] std::complex<double> operator()(std::complex<double> z) const;

  /// sum |c_i| |z|^i, the natural scale for the residual at z.
  [[nodiscard]] double magnitude_bound(std::complex<double> z) const;

private:
  std::vector<double> coeffs_;
};

/// alpha = a1 + a2, beta = a1 + a3, gamma = a2 + a3 for a 3-entry generating vector.
struct PairSums {
  double alpha;
  double beta;
  double gamma;

  [[nodiscard]] static PairSums of(const PositiveVector& a);

  /// x^3 - (alpha^2 + beta^2 + gamma^2) x - 2 alpha beta gamma
  [[nodiscard]] Polynomial characteristic_polynomial() const;
};

/// All eigenvalues of a symmetric matrix by cyclic Jacobi rotations, sweeping until
/// the off-diagonal Frobenius norm is <= tol * ||M||_F. Throws DomainError for a
/// non-symmetric input and ConvergenceError after kJacobiMaxSweeps sweeps.
[[nodiscard]] Spectrum eig_symmetric(const Matrix& m, double tol = kJacobiTolerance);

/// Monic det(xI - M) by the Faddeev-LeVerrier trace recursion. Order <= 32.
[[nodiscard]] Polynomial char_poly(const Matrix& m);

/// All complex roots of p (made monic first). Degrees 1 and 2 are closed form;
/// higher degrees use Durand-Kerner simultaneous iteration.
[[nodiscard]] std::vector<std::complex<double>> poly_roots(const Polynomial& p,
                                                           double tol = kRootTolerance);

/// Eigenvalues of a small (possibly nonsymmetric) matrix through its characteristic
/// polynomial. Throws DomainError if a root has |Im| > tol * max(1, |root|).
[[nodiscard]] Spectrum eig_small_general(const Matrix& m, double tol = kComplexRootTolerance);

}  // namespace celliep
