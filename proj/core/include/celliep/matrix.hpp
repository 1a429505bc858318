#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace celliep {

/// Dense row-major real matrix. Sizes here are small (order a few hundred at most).
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0);
  Matrix(std::initializer_list<std::initializer_list<double>> rows);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<std::vector<double>>& rows);

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
  [[nodiscard]] bool is_square() const noexcept { return rows_ == cols_; }

  double& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * cols_ + j]; }

  [[nodiscard]] std::span<const double> row(std::size_t i) const noexcept {
    return {data_.data() + i * cols_, cols_};
  }
  [[nodiscard]] std::span<double> row(std::size_t i) noexcept {
    return {data_.data() + i * cols_, cols_};
  }

  /// Leading principal submatrix of order k.
  [[nodiscard]] Matrix leading(std::size_t k) const;

  [[nodiscard]] Matrix transpose() const;
  [[nodiscard]] double trace() const;
  [[nodiscard]] double frobenius_norm() const;
  [[nodiscard]] double max_abs() const;

  void swap_rows(std::size_t a, std::size_t b) noexcept;
  void swap_cols(std::size_t a, std::size_t b) noexcept;

  [[nodiscard]] std::vector<std::vector<double>> to_rows() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/// True if |a(i,j) - a(j,i)| <= tol for all i, j. Non-square matrices are never symmetric.
[[nodiscard]] bool is_symmetric(const Matrix& a, double tol = 0.0);

/// Largest entrywise |a - b|; matrices must have the same shape.
[[nodiscard]] double max_abs_diff(const Matrix& a, const Matrix& b);

}  // namespace celliep
