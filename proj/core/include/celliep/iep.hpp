#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "celliep/cell_matrix.hpp"
#include "celliep/spectrum.hpp"

namespace celliep {

/// Values within this (relative) distance of zero are treated as having no sign.
inline constexpr double kSignDeadZone = 1e-10;

/// Target {l1, l2, l3} for a 3 x 3 cell matrix with l1 > 0 > l3 >= l2 and l1 + l2 + l3 = 0.
class CubicSpectrumTarget {
public:
  /// Accepts the three values in any order; the negatives are ordered by magnitude.
  CubicSpectrumTarget(double a, double b, double c);

  [[nodiscard]] double lambda1() const noexcept { return l1_; }
  [[nodiscard]] double lambda2() const noexcept { return l2_; }
  [[nodiscard]] double lambda3() const noexcept { return l3_; }

private:
  double l1_;
  double l2_;
  double l3_;
};

/// Forced eigenvalues lambda_{k+1..2k} (distinct, negative) with group sizes l_i >= 2.
class GroupedSpec {
public:
  GroupedSpec(std::vector<double> tails, std::vector<std::size_t> multiplicities);

  [[nodiscard]] std::size_t groups() const noexcept { return tails_.size(); }
  [[nodiscard]] std::size_t order() const noexcept;
  [[nodiscard]] const std::vector<double>& tails() const noexcept { return tails_; }
  [[nodiscard]] const std::vector<std::size_t>& multiplicities() const noexcept { return mults_; }

  /// x_i = -tail_i / 2 with the same multiplicities.
  [[nodiscard]] GroupedVector generating_groups() const;

private:
  std::vector<double> tails_;
  std::vector<std::size_t> mults_;
};

struct IEPSolution {
  PositiveVector x;
  std::vector<double> head;  ///< core eigenvalues lambda_1..lambda_k, descending
  Spectrum full_spectrum;
  /// lambda_1 > |lambda_2| + ... + |lambda_k|; informational only.
  bool dominant_head = true;
};

[[nodiscard]] IEPSolution solve_cubic_iep(const CubicSpectrumTarget& t);

/// Spectrum {(n-1) lambda, -lambda x (n-1)} from x = (lambda/2, ..., lambda/2).
[[nodiscard]] IEPSolution solve_uniform(std::size_t n, double lambda);

/// Two groups: lambda_1, lambda_2 in closed form, cross-checked against the 2 x 2 core.
[[nodiscard]] IEPSolution solve_two_group(double lambda3, double lambda4, std::size_t l1,
                                          std::size_t l2);

[[nodiscard]] IEPSolution solve_grouped(const GroupedSpec& g);

struct MembershipReport {
  bool accepted = false;
  bool condition1 = false;  ///< exactly one positive value, the rest negative
  bool condition2 = false;  ///< head values are the roots of the core polynomial
  bool tails_present = false;  ///< each tail value occurs at least l_i - 1 times
  std::vector<std::string> failures;
};

/// Whether S is exactly the spectrum produced by solve_grouped(g), within tol.
[[nodiscard]] MembershipReport verify_membership(const Spectrum& s, const GroupedSpec& g,
                                                 double tol = kSpectrumTolerance);

}  // namespace celliep
