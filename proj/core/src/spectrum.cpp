#include "celliep/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "celliep/errors.hpp"

namespace celliep {

Spectrum::Spectrum(std::vector<double> values, double tolerance)
    : values_(std::move(values)), tolerance_(tolerance) {
  if (!(tolerance >= 0.0)) throw DomainError("spectrum tolerance must be nonnegative");
  std::sort(values_.begin(), values_.end(), std::greater<>());
}

double Spectrum::sum() const {
  double s = 0.0;
  for (double v : values_) s += v;
  return s;
}

double Spectrum::sum_of_squares() const {
  double s = 0.0;
  for (double v : values_) s += v * v;
  return s;
}

double Spectrum::max_abs() const {
  double m = 0.0;
  for (double v : values_) m = std::max(m, std::abs(v));
  return m;
}

std::size_t Spectrum::count_positive(double dead_zone) const {
  return static_cast<std::size_t>(
      std::count_if(values_.begin(), values_.end(), [=](double v) { return v > dead_zone; }));
}

std::size_t Spectrum::count_negative(double dead_zone) const {
  return static_cast<std::size_t>(
      std::count_if(values_.begin(), values_.end(), [=](double v) { return v < -dead_zone; }));
}

bool Spectrum::matches(const Spectrum& other) const {
  return same_multiset(values_, other.values_, tolerance_);
}

void Spectrum::merge(const std::vector<double>& more) {
  values_.insert(values_.end(), more.begin(), more.end());
  std::sort(values_.begin(), values_.end(), std::greater<>());
}

double multiset_distance(std::vector<double> a, std::vector<double> b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  double scale = 1.0;
  for (double v : a) scale = std::max(scale, std::abs(v));
  for (double v : b) scale = std::max(scale, std::abs(v));
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst / scale;
}

bool same_multiset(std::vector<double> a, std::vector<double> b, double tol) {
  return multiset_distance(std::move(a), std::move(b)) <= tol;
}

}  // namespace celliep
