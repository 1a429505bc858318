#include "celliep/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "celliep/errors.hpp"

namespace celliep {

Polynomial::Polynomial(std::vector<double> ascending) : coeffs_(std::move(ascending)) {
  while (coeffs_.size() > 1 && coeffs_.back() == 0.0) coeffs_.pop_back();
}

std::size_t Polynomial::degree() const noexcept {
  return coeffs_.empty() ? 0 : coeffs_.size() - 1;
}

double Polynomial::max_abs_coefficient() const {
  double m = 0.0;
  for (double c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

Polynomial Polynomial::monic() const {
  const double lead = leading();
  if (lead == 0.0) throw DomainError("zero polynomial has no monic form");
  std::vector<double> c(coeffs_);
  for (double& v : c) v /= lead;
  c.back() = 1.0;
  return Polynomial(std::move(c));
}

double Polynomial::operator()(double x) const {
  double r = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * x + *it;
  return r;
}

std::complex<double> Polynomial::operator()(std::complex<double> z) const {
  std::complex<double> r = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * z + *it;
  return r;
}

double Polynomial::magnitude_bound(std::complex<double> z) const {
  const double az = std::abs(z);
  double r = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * az + std::abs(*it);
  return r;
}

PairSums PairSums::of(const PositiveVector& a) {
  if (a.size() != 3) throw DomainError("pair sums need a 3-entry generating vector");
  return PairSums{a[0] + a[1], a[0] + a[2], a[1] + a[2]};
}

Polynomial PairSums::characteristic_polynomial() const {
  return Polynomial({-2.0 * alpha * beta * gamma,
                     -(alpha * alpha + beta * beta + gamma * gamma), 0.0, 1.0});
}

Spectrum eig_symmetric(const Matrix& m, double tol) {
  if (!m.is_square()) throw DomainError("matrix is not square");
  if (!(tol > 0.0)) throw DomainError("Jacobi tolerance must be positive");
  if (!is_symmetric(m, 1e-12 * std::max(1.0, m.max_abs())))
    throw DomainError("matrix is not symmetric");

  const std::size_t n = m.rows();
  Matrix a = m;
  // Work on the exactly symmetric part.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) a(i, j) = a(j, i) = 0.5 * (a(i, j) + a(j, i));

  const double target = tol * a.frobenius_norm();
  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) s += 2.0 * a(i, j) * a(i, j);
    return std::sqrt(s);
  };

  int sweep = 0;
  while (off_norm() > target) {
    if (sweep++ == kJacobiMaxSweeps)
      throw ConvergenceError("Jacobi eigensolver did not converge in " +
                             std::to_string(kJacobiMaxSweeps) + " sweeps");
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::hypot(theta, 1.0));
        const double c = 1.0 / std::hypot(t, 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);

        a(p, p) -= t * apq;
        a(q, q) += t * apq;
        a(p, q) = a(q, p) = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const double arp = a(r, p);
          const double arq = a(r, q);
          a(r, p) = a(p, r) = arp - s * (arq + tau * arp);
          a(r, q) = a(q, r) = arq + s * (arp - tau * arq);
        }
      }
    }
  }

  std::vector<double> values(n);
  for (std::size_t i = 0; i < n; ++i) values[i] = a(i, i);
  return Spectrum(std::move(values));
}

Polynomial char_poly(const Matrix& m) {
  if (!m.is_square()) throw DomainError("matrix is not square");
  const std::size_t n = m.rows();
  if (n > kCharPolyMaxOrder)
    throw DomainError("characteristic polynomial order " + std::to_string(n) +
                      " exceeds the limit of " + std::to_string(kCharPolyMaxOrder));

  std::vector<double> c(n + 1, 0.0);
  c[n] = 1.0;
  Matrix mk(n, n);  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    Matrix next = m * mk;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    mk = std::move(next);
    c[n - k] = -(m * mk).trace() / static_cast<double>(k);
  }
  return Polynomial(std::move(c));
}

std::vector<std::complex<double>> poly_roots(const Polynomial& p, double tol) {
  using cd = std::complex<double>;
  if (p.degree() < 1) throw DomainError("polynomial must have degree >= 1");
  const Polynomial q = p.monic();
  const auto& c = q.coefficients();
  const std::size_t n = q.degree();

  if (n == 1) return {cd(-c[0], 0.0)};
  if (n == 2) {
    const double b = c[1];
    const double k = c[0];
    const double disc = b * b - 4.0 * k;
    if (disc >= 0.0) {
      const double h = -0.5 * (b + std::copysign(std::sqrt(disc), b));
      if (h == 0.0) return {cd(0.0, 0.0), cd(0.0, 0.0)};
      return {cd(h, 0.0), cd(k / h, 0.0)};
    }
    const double im = 0.5 * std::sqrt(-disc);
    return {cd(-0.5 * b, im), cd(-0.5 * b, -im)};
  }

  double bound = 0.0;
  for (std::size_t i = 0; i < n; ++i) bound = std::max(bound, std::abs(c[i]));
  const double radius = 1.0 + bound;

  std::vector<cd> z(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double angle =
        2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n) + 0.4;
    z[j] = std::polar(radius, angle);
  }

  auto converged = [&] {
    for (const cd& r : z) {
      const double residual = std::abs(q(r));
      const double scale = q.magnitude_bound(r);
      if (!std::isfinite(residual) || !std::isfinite(scale) || residual > tol * scale)
        return false;
    }
    return true;
  };

  constexpr double kStall = 4.0 * std::numeric_limits<double>::epsilon();
  for (int iter = 0; iter < kRootMaxIterations; ++iter) {
    if (converged()) return z;
    bool moved = false;
    for (std::size_t j = 0; j < n; ++j) {
      cd denom = 1.0;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) denom *= z[j] - z[k];
      if (denom == cd(0.0)) denom = cd(kStall, kStall);
      const cd step = q(z[j]) / denom;
      z[j] -= step;
      if (std::abs(step) > kStall * std::max(1.0, std::abs(z[j]))) moved = true;
    }
    if (!moved) {
      if (converged()) return z;
      throw ConvergenceError("Durand-Kerner root finder stalled above the residual tolerance");
    }
  }
  if (converged()) return z;
  throw ConvergenceError("Durand-Kerner root finder did not converge in " +
                         std::to_string(kRootMaxIterations) + " iterations");
}

Spectrum eig_small_general(const Matrix& m, double tol) {
  const auto roots = poly_roots(char_poly(m));
  std::vector<double> values;
  values.reserve(roots.size());
  for (const auto& r : roots) {
    if (std::abs(r.imag()) > tol * std::max(1.0, std::abs(r)))
      throw DomainError("matrix has a complex eigenvalue (" + std::to_string(r.real()) +
                        (r.imag() < 0 ? " - " : " + ") + std::to_string(std::abs(r.imag())) +
                        "i)");
    values.push_back(r.real());
  }
  return Spectrum(std::move(values));
}

}  // namespace celliep
