#pragma once

// Test-only reference computations. Nothing here calls into the library's
// numerical routines; they are the independent side of each comparison.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <random>
#include <vector>

#include "celliep/cell_matrix.hpp"
#include "celliep/matrix.hpp"

namespace oracle {

/// Determinant by the Leibniz permutation sum. Fine up to order 8.
inline double leibniz_det(const celliep::Matrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  double total = 0.0;
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (p[i] > p[j]) ++inversions;
    double term = inversions % 2 ? -1.0 : 1.0;
    for (std::size_t i = 0; i < n; ++i) term *= m(i, p[i]);
    total += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

/// Cell matrix written straight from the definition.
inline celliep::Matrix cell(const std::vector<double>& x) {
  const std::size_t n = x.size();
  celliep::Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = i == j ? 0.0 : x[i] + x[j];
  return m;
}

/// Eigenvalues of a real 2 x 2 matrix with real spectrum, descending.
inline std::vector<double> eig2(double a, double b, double c, double d) {
  const double half_trace = (a + d) / 2.0;
  const double r = std::sqrt((a - d) * (a - d) / 4.0 + b * c);
  return {half_trace + r, half_trace - r};
}

inline std::vector<double> expand(const std::vector<double>& values,
                                  const std::vector<std::size_t>& mult) {
  std::vector<double> out;
  for (std::size_t i = 0; i < values.size(); ++i) out.insert(out.end(), mult[i], values[i]);
  return out;
}

inline double rel_err(double got, double want) {
  return std::abs(got - want) / std::max(1.0, std::abs(want));
}

inline std::vector<double> sorted_desc(std::vector<double> v) {
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}

}  // namespace oracle

namespace gen {

using Rng = std::mt19937_64;

inline std::vector<double> positive_vector(Rng& rng, std::size_t n, double lo = 0.1,
                                           double hi = 10.0) {
  std::uniform_real_distribution<double> u(lo, hi);
  std::vector<double> x(n);
  for (double& v : x) v = u(rng);
  return x;
}

/// k distinct values in [lo, hi] with group sizes >= 2, total order <= max_n.
struct Grouped {
  std::vector<double> values;
  std::vector<std::size_t> mult;
};

inline Grouped grouped(Rng& rng, std::size_t max_k, std::size_t max_n, double lo = 0.1,
                       double hi = 10.0) {
  std::uniform_int_distribution<std::size_t> kd(1, max_k);
  std::uniform_real_distribution<double> u(lo, hi);
  Grouped g;
  const std::size_t k = kd(rng);
  while (g.values.size() < k) {
    const double v = u(rng);
    if (std::all_of(g.values.begin(), g.values.end(),
                    [&](double w) { return std::abs(w - v) > 1e-6; }))
      g.values.push_back(v);
  }
  g.mult.assign(k, 2);
  std::size_t n = 2 * k;
  std::uniform_int_distribution<std::size_t> extra(0, max_n - n);
  std::size_t budget = extra(rng);
  std::uniform_int_distribution<std::size_t> which(0, k - 1);
  for (; budget > 0; --budget) ++g.mult[which(rng)];
  return g;
}

inline std::vector<double> shuffled(Rng& rng, std::vector<double> v) {
  std::shuffle(v.begin(), v.end(), rng);
  return v;
}

inline celliep::Matrix symmetric(Rng& rng, std::size_t n) {
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  celliep::Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j) m(i, j) = m(j, i) = u(rng);
  return m;
}

inline std::vector<std::size_t> permutation(Rng& rng, std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace gen
