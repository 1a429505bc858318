#pragma once

#include <cstddef>
#include <vector>

namespace celliep {

/// Default radius for multiset eigenvalue matching (relative).
inline constexpr double kSpectrumTolerance = 1e-8;

/// Multiset of real eigenvalues. Values are kept sorted in descending order.
class Spectrum {
public:
  Spectrum() = default;
  explicit Spectrum(std::vector<double> values, double tolerance = kSpectrumTolerance);

  [[nodiscard]] const std::vector<double>& values() const noexcept { return values_; }
  [[nodiscard]] double tolerance() const noexcept { return tolerance_; }
  [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
  [[nodiscard]] double sum() const;
  [[nodiscard]] double sum_of_squares() const;
  [[nodiscard]] double max_abs() const;
  [[nodiscard]] std::size_t count_positive(double dead_zone = 0.0) const;
  [[nodiscard]] std::size_t count_negative(double dead_zone = 0.0) const;

  /// Multiset equality within this spectrum's tolerance.
  [[nodiscard]] bool matches(const Spectrum& other) const;

  /// Append values (multiset union).
  void merge(const std::vector<double>& more);

private:
  std::vector<double> values_;
  double tolerance_ = kSpectrumTolerance;
};

/// Sorts both lists and requires |a_i - b_i| <= tol * max(1, max|value|) elementwise.
/// Lists of different length never match.
[[nodiscard]] bool same_multiset(std::vector<double> a, std::vector<double> b, double tol);

/// Largest |a_i - b_i| over the sorted lists, divided by max(1, max|value|).
/// Returns +inf for lists of different length.
[[nodiscard]] double multiset_distance(std::vector<double> a, std::vector<double> b);

}  // namespace celliep
