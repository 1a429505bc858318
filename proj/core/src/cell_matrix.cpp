#include "celliep/cell_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "celliep/errors.hpp"

namespace celliep {

namespace {

// Entries of M must agree with x_i + x_j to this relative accuracy.
constexpr double kRecognizeTolerance = 1e-9;

}  // namespace

PositiveVector::PositiveVector(std::vector<double> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw DomainError("generating vector must have at least one entry");
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (!(entries_[i] > 0.0) || !std::isfinite(entries_[i]))
      throw DomainError("generating vector entry " + std::to_string(i + 1) +
                        " is not a finite positive number");
  }
}

GroupedVector::GroupedVector(std::vector<double> distinct_values,
                             std::vector<std::size_t> multiplicities)
    : values_(std::move(distinct_values)), mults_(std::move(multiplicities)) {
  if (values_.empty()) throw DomainError("grouped vector needs at least one group");
  if (values_.size() != mults_.size())
    throw DomainError("grouped vector: values and multiplicities differ in length");
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!(values_[i] > 0.0) || !std::isfinite(values_[i]))
      throw DomainError("grouped vector: value " + std::to_string(i + 1) + " is not positive");
    if (mults_[i] < 2)
      throw DomainError("grouped vector: group " + std::to_string(i + 1) +
                        " has multiplicity < 2");
    for (std::size_t j = 0; j < i; ++j)
      if (values_[i] == values_[j]) throw DomainError("grouped vector: values must be distinct");
  }
}

std::size_t GroupedVector::order() const noexcept {
  return std::accumulate(mults_.begin(), mults_.end(), std::size_t{0});
}

PositiveVector GroupedVector::expand() const {
  std::vector<double> x;
  x.reserve(order());
  for (std::size_t g = 0; g < values_.size(); ++g) x.insert(x.end(), mults_[g], values_[g]);
  return PositiveVector(std::move(x));
}

CellMatrix construct_cell_matrix(const PositiveVector& x) {
  const std::size_t n = x.size();
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) m(i, j) = x[i] + x[j];
  return CellMatrix(std::move(m));
}

PositiveVector recognize_cell(const Matrix& m) {
  if (!m.is_square()) throw DomainError("matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) throw DomainError("empty matrix");
  for (std::size_t i = 0; i < n; ++i)
    if (m(i, i) != 0.0) throw DomainError("nonzero diagonal entry at row " + std::to_string(i + 1));
  if (!is_symmetric(m, 0.0)) throw DomainError("matrix is not symmetric");
  if (n == 1) throw DomainError("order-1 matrix does not determine a generating vector");

  std::vector<double> x(n);
  if (n == 2) {
    x[0] = x[1] = m(0, 1) / 2.0;
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      // Any two other indices a, b give x_i = (M_ia + M_ib - M_ab) / 2.
      const std::size_t a = (i + 1) % n;
      const std::size_t b = (i + 2) % n;
      x[i] = (m(i, a) + m(i, b) - m(a, b)) / 2.0;
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        const double expect = x[i] + x[j];
        const double scale = std::max({1.0, std::abs(m(i, j)), std::abs(expect)});
        if (std::abs(m(i, j) - expect) > kRecognizeTolerance * scale)
          throw DomainError("entries are inconsistent with any generating vector (at " +
                            std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
      }
  }
  for (std::size_t i = 0; i < n; ++i)
    if (!(x[i] > 0.0))
      throw DomainError("recovered generating vector has nonpositive entry " +
                        std::to_string(i + 1));
  return PositiveVector(std::move(x));
}

double principal_subdeterminant(const PositiveVector& x, std::size_t i) {
  if (i < 1 || i > x.size())
    throw DomainError("principal order " + std::to_string(i) + " out of range 1.." +
                      std::to_string(x.size()));
  double bracket = 4.0 * static_cast<double>(i - 1);
  for (std::size_t j = 1; j < i; ++j)
    for (std::size_t l = 0; l < j; ++l) {
      const double d = x[j] - x[l];
      bracket += d * d / (x[j] * x[l]);
    }
  double product = 1.0;
  for (std::size_t k = 0; k < i; ++k) product *= x[k];
  const double sign = (i - 1) % 2 == 0 ? 1.0 : -1.0;
  const double power = std::ldexp(1.0, static_cast<int>(i) - 2);
  return sign * power * bracket * product;
}

double numeric_determinant(const Matrix& m) {
  if (!m.is_square()) throw DomainError("matrix is not square");
  Matrix a = m;
  const std::size_t n = a.rows();
  double det = 1.0;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (std::abs(a(r, c)) > std::abs(a(pivot, c))) pivot = r;
    if (a(pivot, c) == 0.0) return 0.0;
    if (pivot != c) {
      a.swap_rows(pivot, c);
      det = -det;
    }
    const double p = a(c, c);
    det *= p;
    for (std::size_t r = c + 1; r < n; ++r) {
      const double f = a(r, c) / p;
      if (f == 0.0) continue;
      for (std::size_t k = c; k < n; ++k) a(r, k) -= f * a(c, k);
    }
  }
  return det;
}

Grouping group_entries(const PositiveVector& x, double tol) {
  if (!(tol >= 0.0)) throw DomainError("grouping tolerance must be nonnegative");
  std::vector<double> reps;
  std::vector<std::vector<std::size_t>> members;
  for (std::size_t i = 0; i < x.size(); ++i) {
    auto it = std::find_if(reps.begin(), reps.end(),
                           [&](double r) { return std::abs(r - x[i]) <= tol; });
    if (it == reps.end()) {
      reps.push_back(x[i]);
      members.push_back({i});
    } else {
      members[static_cast<std::size_t>(it - reps.begin())].push_back(i);
    }
  }
  std::vector<std::size_t> mults;
  std::vector<std::size_t> order;
  order.reserve(x.size());
  for (std::size_t g = 0; g < reps.size(); ++g) {
    if (members[g].size() < 2)
      throw DomainError("value " + std::to_string(reps[g]) +
                        " occurs once; every group needs multiplicity >= 2");
    mults.push_back(members[g].size());
    order.insert(order.end(), members[g].begin(), members[g].end());
  }
  return Grouping{GroupedVector(std::move(reps), std::move(mults)), std::move(order)};
}

GroupedVector group_vector(const PositiveVector& x, double tol) {
  return group_entries(x, tol).grouped;
}

}  // namespace celliep
