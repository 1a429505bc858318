#include "celliep/iep.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <numeric>
#include <string>

#include "celliep/eigen.hpp"
#include "celliep/errors.hpp"
#include "celliep/reduction.hpp"

namespace celliep {

namespace {

// Two-group closed form must agree with the 2 x 2 core roots to this relative accuracy.
constexpr double kTwoGroupCrossCheck = 1e-9;

double scale_of(const std::vector<double>& v) {
  double s = 1.0;
  for (double x : v) s = std::max(s, std::abs(x));
  return s;
}

bool dominates(const std::vector<double>& head_desc) {
  double rest = 0.0;
  for (std::size_t i = 1; i < head_desc.size(); ++i) rest += std::abs(head_desc[i]);
  return head_desc.front() > rest;
}

std::vector<double> with_tails(std::vector<double> head, const std::vector<double>& tails,
                               const std::vector<std::size_t>& mults) {
  for (std::size_t i = 0; i < tails.size(); ++i) head.insert(head.end(), mults[i] - 1, tails[i]);
  return head;
}

}  // namespace

CubicSpectrumTarget::CubicSpectrumTarget(double a, double b, double c) {
  std::array<double, 3> v{a, b, c};
  for (double x : v)
    if (!std::isfinite(x)) throw DomainError("cubic target values must be finite");
  std::sort(v.begin(), v.end(), std::greater<>());
  l1_ = v[0];
  l3_ = v[1];
  l2_ = v[2];
  if (!(l1_ >= 0.0)) throw DomainError("cubic target needs lambda1 >= 0");
  if (!(l3_ < 0.0)) throw DomainError("cubic target needs two negative values");
  const double scale = std::max({1.0, std::abs(l1_), std::abs(l2_)});
  if (std::abs(l1_ + l2_ + l3_) > 1e-12 * scale)
    throw DomainError("cubic target values must sum to zero (trace of a hollow matrix)");
}

GroupedSpec::GroupedSpec(std::vector<double> tails, std::vector<std::size_t> multiplicities)
    : tails_(std::move(tails)), mults_(std::move(multiplicities)) {
  if (tails_.empty()) throw DomainError("grouped spectrum needs at least one tail value");
  if (tails_.size() != mults_.size())
    throw DomainError("tails and multiplicities differ in length");
  for (std::size_t i = 0; i < tails_.size(); ++i) {
    if (!(tails_[i] < 0.0) || !std::isfinite(tails_[i]))
      throw DomainError("tail value " + std::to_string(i + 1) + " must be finite and negative");
    if (mults_[i] < 2)
      throw DomainError("multiplicity " + std::to_string(i + 1) + " must be at least 2");
    for (std::size_t j = 0; j < i; ++j)
      if (tails_[i] == tails_[j]) throw DomainError("tail values must be pairwise distinct");
  }
}

std::size_t GroupedSpec::order() const noexcept {
  return std::accumulate(mults_.begin(), mults_.end(), std::size_t{0});
}

GroupedVector GroupedSpec::generating_groups() const {
  std::vector<double> x(tails_.size());
  std::transform(tails_.begin(), tails_.end(), x.begin(), [](double t) { return -t / 2.0; });
  return GroupedVector(std::move(x), mults_);
}

IEPSolution solve_cubic_iep(const CubicSpectrumTarget& t) {
  if (!(t.lambda1() > 0.0))
    throw DomainError("lambda1 = 0 forces the zero spectrum, which no positive vector produces");
  const double half = std::abs(t.lambda3()) / 2.0;
  const double a1 = std::sqrt(std::abs(t.lambda1() * t.lambda2()) / 2.0) - half;
  PositiveVector x({a1, half, half});
  std::vector<double> values{t.lambda1(), t.lambda2(), t.lambda3()};
  Spectrum full(values);
  return IEPSolution{std::move(x), full.values(), full, dominates(full.values())};
}

IEPSolution solve_uniform(std::size_t n, double lambda) {
  if (n < 2) throw DomainError("uniform construction needs n >= 2");
  if (!(lambda > 0.0) || !std::isfinite(lambda))
    throw DomainError("uniform construction needs a finite lambda > 0");
  const double top = static_cast<double>(n - 1) * lambda;
  std::vector<double> values(n, -lambda);
  values.front() = top;
  return IEPSolution{PositiveVector(std::vector<double>(n, lambda / 2.0)), {top},
                     Spectrum(std::move(values)), true};
}

IEPSolution solve_two_group(double lambda3, double lambda4, std::size_t l1, std::size_t l2) {
  if (!(lambda3 < 0.0) || !(lambda4 < 0.0))
    throw DomainError("two-group construction needs lambda3, lambda4 < 0");
  if (lambda3 == lambda4)
    throw DomainError("lambda3 == lambda4 is a single group; use solve_uniform");
  if (l1 < 2 || l2 < 2) throw DomainError("two-group construction needs l1, l2 >= 2");

  const double n = static_cast<double>(l1 + l2);
  const double m1 = static_cast<double>(l1);
  const double m2 = static_cast<double>(l2);
  const double h3 = -lambda3 / 2.0;
  const double h4 = -lambda4 / 2.0;

  const double centre = (m1 - 1.0) * h3 + (m2 - 1.0) * h4;
  const double radicand = (m1 * (n - 2.0) + 1.0) * h3 * h3 + 0.5 * (n - 1.0) * lambda3 * lambda4 +
                          (n * n - n * (m1 + 2.0) + 2.0 * m1 + 1.0) * h4 * h4;
  if (radicand < 0.0)
    throw DomainError("two-group radicand is negative (" + std::to_string(radicand) + ")");
  const double root = std::sqrt(radicand);
  std::vector<double> head{centre + root, centre - root};

  const GroupedVector groups({h3, h4}, {l1, l2});
  const Spectrum core = eig_small_general(build_dk(groups));
  if (!same_multiset(head, core.values(), kTwoGroupCrossCheck))
    throw ConvergenceError("closed-form eigenvalues disagree with the 2x2 core");

  PositiveVector x = groups.expand();
  Spectrum full(with_tails(head, {lambda3, lambda4}, {l1, l2}));
  const bool dominant = dominates(head);
  return IEPSolution{std::move(x), std::move(head), std::move(full), dominant};
}

IEPSolution solve_grouped(const GroupedSpec& g) {
  const GroupedVector groups = g.generating_groups();
  std::vector<double> head = eig_small_general(build_dk(groups)).values();

  const double dead = kSignDeadZone * scale_of(with_tails(head, g.tails(), g.multiplicities()));
  std::size_t positive = 0;
  for (double v : head) {
    if (std::abs(v) <= dead)
      throw DomainError("core eigenvalue " + std::to_string(v) + " is numerically zero");
    if (v > 0.0) ++positive;
  }
  if (positive != 1)
    throw DomainError("core has " + std::to_string(positive) +
                      " positive eigenvalues; expected exactly one");

  Spectrum full(with_tails(head, g.tails(), g.multiplicities()));
  const bool dominant = dominates(head);
  return IEPSolution{groups.expand(), std::move(head), std::move(full), dominant};
}

MembershipReport verify_membership(const Spectrum& s, const GroupedSpec& g, double tol) {
  MembershipReport report;
  const auto& values = s.values();
  const double scale = scale_of(values);

  const double dead = kSignDeadZone * scale;
  report.condition1 = s.count_positive(dead) == 1 && s.count_negative(dead) + 1 == s.size();
  if (!report.condition1)
    report.failures.emplace_back("condition 1: need exactly one positive value, the rest negative");

  std::vector<double> remaining = values;
  report.tails_present = true;
  for (std::size_t i = 0; i < g.groups(); ++i) {
    for (std::size_t c = 0; c + 1 < g.multiplicities()[i]; ++c) {
      auto best = remaining.end();
      double best_gap = tol * scale;
      for (auto it = remaining.begin(); it != remaining.end(); ++it) {
        const double gap = std::abs(*it - g.tails()[i]);
        if (gap <= best_gap) {
          best_gap = gap;
          best = it;
        }
      }
      if (best == remaining.end()) {
        report.tails_present = false;
        break;
      }
      remaining.erase(best);
    }
  }
  if (!report.tails_present)
    report.failures.emplace_back("tail values missing or with too small multiplicity");

  std::vector<double> head;
  try {
    head = solve_grouped(g).head;
  } catch (const std::exception& e) {
    report.failures.emplace_back(std::string("construction failed: ") + e.what());
    return report;
  }

  report.condition2 = report.tails_present && same_multiset(remaining, head, tol);
  if (!report.condition2) {
    if (remaining.size() != head.size())
      report.failures.emplace_back("condition 2: expected " + std::to_string(head.size()) +
                                   " head values, found " + std::to_string(remaining.size()));
    else
      report.failures.emplace_back("condition 2: head values are not the core eigenvalues");
  }
  report.accepted = report.condition1 && report.condition2 && report.tails_present;
  return report;
}

}  // namespace celliep
