#include <doctest.h>

#include <cmath>

#include "celliep/eigen.hpp"
#include "celliep/errors.hpp"
#include "celliep/iep.hpp"
#include "celliep/reduction.hpp"
#include "oracles.hpp"

using namespace celliep;

namespace {

void check_sound(const IEPSolution& s) {
  const Spectrum jac = eig_symmetric(construct_cell_matrix(s.x).matrix());
  CHECK(same_multiset(jac.values(), s.full_spectrum.values(), 1e-8));
  const double n = static_cast<double>(s.full_spectrum.size());
  CHECK(std::abs(s.full_spectrum.sum()) <= 1e-10 * n * s.full_spectrum.max_abs());
  CHECK(s.full_spectrum.count_positive() == 1);
}

}  // namespace

TEST_CASE("cubic target validation") {
  const CubicSpectrumTarget t(-1, 3, -2);
  CHECK(t.lambda1() == 3);
  CHECK(t.lambda2() == -2);
  CHECK(t.lambda3() == -1);
  CHECK_THROWS_AS(CubicSpectrumTarget(3, -2, -2), DomainError);  // sum != 0
  CHECK_THROWS_AS(CubicSpectrumTarget(3, 1, -4), DomainError);   // only one negative
  CHECK_NOTHROW(CubicSpectrumTarget(2, -1, -1));
  CHECK_THROWS_AS((void)solve_cubic_iep(CubicSpectrumTarget(0, 0, 0)), DomainError);
}

TEST_CASE("solve_cubic_iep") {
  SUBCASE("{3, -2, -1}") {
    const IEPSolution s = solve_cubic_iep(CubicSpectrumTarget(3, -2, -1));
    CHECK(std::abs(s.x[0] - (std::sqrt(3.0) - 0.5)) <= 1e-12);
    CHECK(s.x[1] == 0.5);
    CHECK(s.x[2] == 0.5);
    const Matrix d = construct_cell_matrix(s.x).matrix();
    const double r3 = std::sqrt(3.0);
    CHECK(max_abs_diff(d, Matrix{{0, r3, r3}, {r3, 0, 1}, {r3, 1, 0}}) <= 1e-12);
    CHECK(same_multiset(eig_symmetric(d).values(), {3, -2, -1}, 1e-9));
  }
  SUBCASE("{2, -1, -1} is the uniform case") {
    const IEPSolution s = solve_cubic_iep(CubicSpectrumTarget(2, -1, -1));
    CHECK(s.x == PositiveVector{0.5, 0.5, 0.5});
    CHECK(s.x == solve_uniform(3, 1.0).x);
  }
  SUBCASE("{4, -3, -1}") {
    const IEPSolution s = solve_cubic_iep(CubicSpectrumTarget(4, -3, -1));
    CHECK(std::abs(s.x[0] - (std::sqrt(6.0) - 0.5)) <= 1e-12);
    CHECK(s.x[1] == 0.5);
    // The targets are roots of x^3 - (a^2 + b^2 + c^2) x - 2abc.
    const Polynomial p = PairSums::of(s.x).characteristic_polynomial();
    for (double v : {4.0, -3.0, -1.0}) CHECK(std::abs(p(v)) <= 1e-12);
  }
  SUBCASE("random targets") {
    gen::Rng rng(43);
    std::uniform_real_distribution<double> u(0.01, 10.0);
    for (int trial = 0; trial < 100; ++trial) {
      const double a = u(rng), b = u(rng);
      const IEPSolution s = solve_cubic_iep(CubicSpectrumTarget(a + b, -a, -b));
      CHECK(s.x[1] == s.x[2]);  // alpha == beta
      check_sound(s);
    }
  }
}

TEST_CASE("solve_uniform") {
  const IEPSolution two = solve_uniform(2, 2.0);
  CHECK(two.x == PositiveVector{1, 1});
  CHECK(two.full_spectrum.values() == std::vector<double>{2, -2});

  const IEPSolution four = solve_uniform(4, 2.0);
  CHECK(four.x == PositiveVector{1, 1, 1, 1});
  CHECK(four.full_spectrum.values() == std::vector<double>{6, -2, -2, -2});
  check_sound(four);

  const IEPSolution three = solve_uniform(3, 1.0);
  CHECK(same_multiset(three.full_spectrum.values(),
                      solve_cubic_iep(CubicSpectrumTarget(2, -1, -1)).full_spectrum.values(),
                      0.0));

  CHECK_THROWS_AS((void)solve_uniform(1, 1.0), DomainError);
  CHECK_THROWS_AS((void)solve_uniform(3, 0.0), DomainError);
  CHECK_THROWS_AS((void)solve_uniform(3, -1.0), DomainError);
}

TEST_CASE("solve_two_group") {
  SUBCASE("lambda3 = -2, lambda4 = -4, l = (5, 6)") {
    const IEPSolution s = solve_two_group(-2, -4, 5, 6);
    const double r = std::sqrt(306.0);
    CHECK(std::abs(s.head[0] - (14 + r)) <= 1e-10);
    CHECK(std::abs(s.head[1] - (14 - r)) <= 1e-10);
    CHECK(s.x == PositiveVector{1, 1, 1, 1, 1, 2, 2, 2, 2, 2, 2});
    check_sound(s);
  }
  SUBCASE("lambda3 = -1, lambda4 = -3, l = (2, 2)") {
    // n = 4: radicand = 5 (1/2)^2 + (3/2)(3) + 5 (3/2)^2 = 17, centre = 1/2 + 3/2 = 2.
    const double n = 4, l1 = 2;
    const double radicand = (l1 * (n - 2) + 1) * 0.25 + 0.5 * (n - 1) * 3.0 +
                            (n * n - n * (l1 + 2) + 2 * l1 + 1) * 2.25;
    CHECK(radicand == 17.0);
    // Independent route: the 2 x 2 core [[3, 4], [4, 1]] by the quadratic formula.
    const auto want = oracle::eig2(3, 4, 4, 1);
    CHECK(want[0] == doctest::Approx(2 + std::sqrt(17.0)));

    const IEPSolution s = solve_two_group(-1, -3, 2, 2);
    CHECK(std::abs(s.head[0] - want[0]) <= 1e-12);
    CHECK(std::abs(s.head[1] - want[1]) <= 1e-12);
    check_sound(s);
  }
  CHECK_THROWS_AS((void)solve_two_group(-2, -2, 3, 3), DomainError);
  CHECK_THROWS_AS((void)solve_two_group(-2, 1, 3, 3), DomainError);
  CHECK_THROWS_AS((void)solve_two_group(-2, -3, 1, 3), DomainError);
}

TEST_CASE("solve_grouped") {
  SUBCASE("k = 1") {
    const IEPSolution s = solve_grouped(GroupedSpec({-2}, {3}));
    CHECK(s.x == PositiveVector{1, 1, 1});
    CHECK(s.head == std::vector<double>{4});
    CHECK(s.full_spectrum.values() == std::vector<double>{4, -2, -2});
  }
  SUBCASE("k = 2") {
    const IEPSolution s = solve_grouped(GroupedSpec({-2, -4}, {5, 6}));
    const double r = std::sqrt(306.0);
    CHECK(same_multiset(s.head, {14 + r, 14 - r}, 1e-12));
  }
  SUBCASE("k = 3, head and tail share -5") {
    const IEPSolution s = solve_grouped(GroupedSpec({-2, -3, -5}, {4, 4, 5}));
    const double r = std::sqrt(511.0);
    CHECK(same_multiset(s.head, {20 + r, 20 - r, -5}, 1e-9));
    CHECK(same_multiset(s.full_spectrum.values(),
                        {20 + r, 20 - r, -5, -2, -2, -2, -3, -3, -3, -5, -5, -5, -5}, 1e-9));
    CHECK(s.dominant_head);
    check_sound(s);
  }
  CHECK_THROWS_AS(GroupedSpec({-2, 1}, {2, 2}), DomainError);
  CHECK_THROWS_AS(GroupedSpec({-2, -2}, {2, 2}), DomainError);
  CHECK_THROWS_AS(GroupedSpec({-2}, {1}), DomainError);
  CHECK_THROWS_AS(GroupedSpec({}, {}), DomainError);
}

TEST_CASE("solvers agree with each other") {
  gen::Rng rng(47);
  std::uniform_real_distribution<double> lam(0.1, 20.0);
  std::uniform_int_distribution<std::size_t> len(2, 25);
  for (int trial = 0; trial < 50; ++trial) {
    const double l = lam(rng);
    const std::size_t n = len(rng);
    const IEPSolution u = solve_uniform(n, l);
    const IEPSolution g = solve_grouped(GroupedSpec({-l}, {n}));
    CHECK(u.x == g.x);
    CHECK(u.head == g.head);
    CHECK(u.full_spectrum.values() == g.full_spectrum.values());

    double l3 = -lam(rng), l4 = -lam(rng);
    if (l3 == l4) l4 -= 1.0;
    const std::size_t m1 = len(rng), m2 = len(rng);
    const IEPSolution two = solve_two_group(l3, l4, m1, m2);
    const IEPSolution gen2 = solve_grouped(GroupedSpec({l3, l4}, {m1, m2}));
    CHECK(two.x == gen2.x);
    CHECK(same_multiset(two.full_spectrum.values(), gen2.full_spectrum.values(), 1e-10));
    check_sound(two);
  }
}

TEST_CASE("random grouped constructions are sound") {
  gen::Rng rng(53);
  for (int trial = 0; trial < 60; ++trial) {
    const auto g = gen::grouped(rng, 5, 40, 0.2, 20.0);
    std::vector<double> tails;
    for (double v : g.values) tails.push_back(-v);
    const IEPSolution s = solve_grouped(GroupedSpec(tails, g.mult));
    CHECK(s.head.size() == g.values.size());
    CHECK(s.dominant_head);
    check_sound(s);
  }
}

TEST_CASE("verify_membership") {
  const MembershipReport ok = verify_membership(Spectrum({4, -2, -2}), GroupedSpec({-2}, {3}));
  CHECK(ok.accepted);
  CHECK(ok.failures.empty());

  const double r = std::sqrt(306.0);
  CHECK(verify_membership(Spectrum({14 + r, 14 - r, -2, -2, -2, -2, -4, -4, -4, -4, -4}),
                          GroupedSpec({-2, -4}, {5, 6}))
            .accepted);

  const MembershipReport bad = verify_membership(Spectrum({5, -2, -3}), GroupedSpec({-2}, {2}));
  CHECK_FALSE(bad.accepted);
  CHECK(bad.condition1);
  CHECK_FALSE(bad.condition2);
  CHECK_FALSE(bad.failures.empty());

  SUBCASE("wrong head with the right shape") {
    const MembershipReport m =
        verify_membership(Spectrum({5, -1, -2, -2}), GroupedSpec({-2, -4}, {2, 2}));
    CHECK_FALSE(m.accepted);
  }
  SUBCASE("two positive values") {
    const MembershipReport m = verify_membership(Spectrum({3, 1, -2, -2}), GroupedSpec({-2}, {4}));
    CHECK_FALSE(m.condition1);
    CHECK_FALSE(m.accepted);
  }
  SUBCASE("missing tails") {
    const MembershipReport m = verify_membership(Spectrum({4, -2, -2}), GroupedSpec({-3}, {3}));
    CHECK_FALSE(m.tails_present);
    CHECK_FALSE(m.accepted);
  }
}
