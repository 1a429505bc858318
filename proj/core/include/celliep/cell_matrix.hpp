#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "celliep/matrix.hpp"

namespace celliep {

/// Default absolute tolerance when grouping equal entries of a generating vector.
inline constexpr double kGroupingTolerance = 1e-12;

/// Generating vector x of a cell matrix: n >= 1 strictly positive entries.
class PositiveVector {
public:
  explicit PositiveVector(std::vector<double> entries);
  PositiveVector(std::initializer_list<double> entries)
      : PositiveVector(std::vector<double>(entries)) {}

  [[nodiscard]] std::size_t size() const noexcept { return entries_.size(); }
  [[nodiscard]] double operator[](std::size_t i) const noexcept { return entries_[i]; }
  [[nodiscard]] std::span<const double> entries() const noexcept { return entries_; }
  [[nodiscard]] const std::vector<double>& to_vector() const noexcept { return entries_; }

  friend bool operator==(const PositiveVector&, const PositiveVector&) = default;

private:
  std::vector<double> entries_;
};

/// Symmetric hollow matrix with off-diagonal entries x_i + x_j.
class CellMatrix {
public:
  [[nodiscard]] std::size_t order() const noexcept { return entries_.rows(); }
  [[nodiscard]] const Matrix& matrix() const noexcept { return entries_; }
  double operator()(std::size_t i, std::size_t j) const noexcept { return entries_(i, j); }

private:
  explicit CellMatrix(Matrix m) : entries_(std::move(m)) {}
  friend CellMatrix construct_cell_matrix(const PositiveVector& x);

  Matrix entries_;
};

/// k distinct positive values with multiplicities l_i >= 2, sum l_i = n.
/// Group 1 is the first block of the canonical vector.
class GroupedVector {
public:
  GroupedVector(std::vector<double> distinct_values, std::vector<std::size_t> multiplicities);

  [[nodiscard]] std::size_t groups() const noexcept { return values_.size(); }
  [[nodiscard]] std::size_t order() const noexcept;
  [[nodiscard]] const std::vector<double>& distinct_values() const noexcept { return values_; }
  [[nodiscard]] const std::vector<std::size_t>& multiplicities() const noexcept { return mults_; }

  /// The canonical vector: value 1 repeated l_1 times, then value 2, ...
  [[nodiscard]] PositiveVector expand() const;

  friend bool operator==(const GroupedVector&, const GroupedVector&) = default;

private:
  std::vector<double> values_;
  std::vector<std::size_t> mults_;
};

/// Result of grouping an arbitrary positive vector: the grouped form plus the
/// permutation that sorts x into contiguous groups (sorted[i] = x[order[i]]).
struct Grouping {
  GroupedVector grouped;
  std::vector<std::size_t> order;
};

[[nodiscard]] CellMatrix construct_cell_matrix(const PositiveVector& x);

/// Recover the generating vector of a cell matrix. For n = 2 the single equation
/// x1 + x2 = M12 is resolved with the symmetric split x1 = x2 = M12 / 2.
/// Throws DomainError if M is not square, not symmetric, has a nonzero diagonal,
/// is inconsistent with any x, or the solution is not strictly positive.
[[nodiscard]] PositiveVector recognize_cell(const Matrix& m);

/// Closed-form determinant of the leading i x i submatrix of D(x), 1 <= i <= n.
[[nodiscard]] double principal_subdeterminant(const PositiveVector& x, std::size_t i);

/// Determinant by row-pivoted Gaussian elimination.
[[nodiscard]] double numeric_determinant(const Matrix& m);

/// Partition x into groups of equal entries (within tol, absolute). Groups are
/// ordered by first appearance. Throws DomainError if any group has size 1.
[[nodiscard]] Grouping group_entries(const PositiveVector& x, double tol = kGroupingTolerance);

[[nodiscard]] GroupedVector group_vector(const PositiveVector& x, double tol = kGroupingTolerance);

}  // namespace celliep
