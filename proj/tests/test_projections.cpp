#include <gtest/gtest.h>

#include <random>

#include "lnd/comm_poly.hpp"
#include "lnd/free_algebra.hpp"
#include "lnd/invariants.hpp"
#include "lnd/parser.hpp"
#include "lnd/projections.hpp"
#include "lnd/weyl.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

namespace lnd {
namespace {

using testing::expect_code;

const WeylSignature A10{1, 0};
const WeylSignature A11{1, 1};

template <class E>
E parse(const char* text, const E& like) {
  return parse_element(text, like);
}

// Moves a polynomial into a space with the same variables and a Laurent mask.
CommPoly lift(const CommPoly& p, const CommPoly& space) {
  std::vector<CommPoly> vars;
  for (std::size_t i = 0; i < p.num_vars(); ++i) vars.push_back(space.variable_like(i));
  return comm_substitute(p, vars);
}

TEST(Projections, OrderExamples) {
  const CommPoly p2(2);
  const auto sys = standard_system(p2);
  EXPECT_EQ(sys.order(parse("7/3", p2)), 0u);
  EXPECT_EQ(sys.order(parse("x1*x2", p2)), 2u);
  EXPECT_EQ(sys.order(parse("x1", p2)), 1u);
  expect_code([&] { (void)sys.order(p2); }, errc::system);
}

TEST(Projections, PhiPsiExamples) {
  const WeylElement w(A10);
  const auto sys = standard_system(w);
  EXPECT_EQ(sys.phi(parse("x1*x2 + 1", w)), w.constant_like(Rational(1)));
  for (std::size_t i = 0; i < 2; ++i)
    for (unsigned k = 1; k <= 4; ++k) {
      const WeylElement xk = w.variable_like(i).pow(k);
      EXPECT_TRUE(sys.phi(xk).is_zero());
      EXPECT_TRUE(sys.psi(xk).is_zero());
    }
  // A kernel element is fixed by both.
  const FreeElement f(2);
  const auto fsys = standard_system(f);
  const FreeElement c = parse("x1*x2 - x2*x1", f);
  EXPECT_EQ(fsys.phi(c), c);
  EXPECT_EQ(fsys.psi(c), c);
}

TEST(Projections, PsiEqualsPhiOnCommutativeCarriers) {
  std::mt19937 rng(31);
  const auto sys = standard_system(CommPoly(3));
  const auto wsys = weitzenboeck_system(4);
  for (int t = 0; t < 30; ++t) {
    const CommPoly a = testing::random_comm(rng, 3, 5);
    ASSERT_EQ(sys.phi(a), sys.psi(a));
    // lift into the Laurent space of the Weitzenboeck system
    const CommPoly lifted = lift(testing::random_comm(rng, 4, 4), wsys.slice(0));
    ASSERT_EQ(wsys.phi(lifted), wsys.psi(lifted));
  }
}

TEST(Projections, TaylorExamples) {
  const CommPoly p2(2);
  const auto sys = standard_system(p2);
  const auto coeffs = sys.taylor_decompose(parse("x1^2 + x1*x2", p2));
  ASSERT_EQ(coeffs.size(), 2u);
  EXPECT_EQ(coeffs.at(MultiIndex{2, 0}), p2.constant_like(Rational(1)));
  EXPECT_EQ(coeffs.at(MultiIndex{1, 1}), p2.constant_like(Rational(1)));

  const WeylElement w(A10);
  const auto wsys = standard_system(w);
  const auto wc = wsys.taylor_decompose(parse("x2*x1", w));
  ASSERT_EQ(wc.size(), 2u);
  EXPECT_EQ(wc.at(MultiIndex{0, 0}), w.constant_like(Rational(1)));
  EXPECT_EQ(wc.at(MultiIndex{1, 1}), w.constant_like(Rational(1)));

  const CommPoly q = parse("5/2", p2);
  const auto kc = sys.taylor_decompose(q);
  ASSERT_EQ(kc.size(), 1u);
  EXPECT_EQ(kc.at(MultiIndex{0, 0}), q);
}

TEST(Projections, ReconstructExamples) {
  const CommPoly p2(2);
  const auto sys = standard_system(p2);
  TaylorCoefficients<CommPoly> c;
  c.emplace(MultiIndex{0, 0}, parse("3", p2));
  EXPECT_EQ(sys.taylor_reconstruct(c), parse("3", p2));
  TaylorCoefficients<CommPoly> d;
  d.emplace(MultiIndex{1, 0}, parse("1", p2));
  EXPECT_EQ(sys.taylor_reconstruct(d), parse("x1", p2));
  TaylorCoefficients<CommPoly> bad;
  bad.emplace(MultiIndex{1, 0}, parse("x1", p2));
  expect_code([&] { (void)sys.taylor_reconstruct(bad); }, errc::kernel);
}

template <class E>
void check_round_trip(const LndSystem<E>& sys, const E& a) {
  const auto coeffs = sys.taylor_decompose(a);
  for (const auto& [alpha, c] : coeffs) ASSERT_TRUE(sys.in_kernel(c)) << alpha.to_string();
  ASSERT_EQ(sys.taylor_reconstruct(coeffs), a) << to_string(a);
}

TEST(ProjectionsProperty, TaylorRoundTripAllCarriers) {
  std::mt19937 rng(32);
  const auto psys = standard_system(CommPoly(3));
  const auto fsys = standard_system(FreeElement(2));
  const auto wsys = standard_system(WeylElement(A11));
  for (int t = 0; t < 50; ++t) {
    check_round_trip(psys, testing::random_comm(rng, 3, 6));
    check_round_trip(fsys, testing::random_free(rng, 2, 6));
    check_round_trip(wsys, testing::random_weyl(rng, A11, 6));
  }
}

TEST(ProjectionsProperty, TaylorRoundTripNonStandardSystems) {
  // F2 with d/dx1 only: the kernel is large and noncommutative.
  const FreeElement f(2);
  const LndSystem<FreeElement> fsys({Derivation<FreeElement>::partial(0)}, {f.variable_like(0)},
                                    {f.variable_like(1)});
  const auto wz = weitzenboeck_system(4);
  std::mt19937 rng(33);
  for (int t = 0; t < 30; ++t) {
    check_round_trip(fsys, testing::random_free(rng, 2, 5));
    check_round_trip(wz, lift(testing::random_comm(rng, 4, 3), wz.slice(0)));
  }
}

template <class E>
void check_projection_laws(const LndSystem<E>& sys, const E& a) {
  const E p = sys.phi(a), q = sys.psi(a);
  ASSERT_TRUE(sys.in_kernel(p));
  ASSERT_TRUE(sys.in_kernel(q));
  ASSERT_EQ(sys.phi(p), p);
  ASSERT_EQ(sys.psi(q), q);
  // phi(a) = 0 iff a in sum x_i A: a - phi(a) is such an element.
  ASSERT_TRUE(sys.phi(a - p).is_zero());
  ASSERT_TRUE(sys.psi(a - q).is_zero());
}

TEST(ProjectionsProperty, ProjectionLaws) {
  std::mt19937 rng(34);
  const auto psys = standard_system(CommPoly(3));
  const auto fsys = standard_system(FreeElement(2));
  const auto wsys = standard_system(WeylElement(A11));
  for (int t = 0; t < 40; ++t) {
    check_projection_laws(psys, testing::random_comm(rng, 3, 5));
    check_projection_laws(fsys, testing::random_free(rng, 2, 5));
    check_projection_laws(wsys, testing::random_weyl(rng, A11, 5));
  }
}

TEST(ProjectionsProperty, KernelCharacterizationConstructive) {
  // Commutative: phi(a) = 0 iff a lies in the ideal (x1, x2, x3).
  std::mt19937 rng(35);
  const CommPoly p(3);
  const auto psys = standard_system(p);
  for (int t = 0; t < 30; ++t) {
    CommPoly ideal = p;
    for (std::size_t i = 0; i < 3; ++i) ideal = ideal + p.variable_like(i) * testing::random_comm(rng, 3, 3);
    ASSERT_TRUE(psys.phi(ideal).is_zero());
    const CommPoly a = testing::random_comm(rng, 3, 4);
    ASSERT_EQ(psys.phi(a).is_zero(), !psys.taylor_decompose(a).contains(MultiIndex{0, 0, 0}));
  }
  // Noncommutative: x1 A is killed by phi and A x_s by psi.
  const FreeElement f(2);
  const auto fsys = standard_system(f);
  const auto wsys = standard_system(WeylElement(A11));
  for (int t = 0; t < 30; ++t) {
    const FreeElement b = testing::random_free(rng, 2, 4);
    ASSERT_TRUE(fsys.phi(f.variable_like(0) * b).is_zero());
    ASSERT_TRUE(fsys.psi(b * f.variable_like(1)).is_zero());
    ASSERT_FALSE(fsys.phi(f.variable_like(0) * b + f.constant_like(Rational(1))).is_zero());
    const WeylElement c = testing::random_weyl(rng, A11, 4);
    ASSERT_TRUE(wsys.phi(WeylElement::variable(A11, 0) * c).is_zero());
    ASSERT_TRUE(wsys.psi(c * WeylElement::variable(A11, 2)).is_zero());
  }
}

TEST(Projections, KernelIsSmallerThanSlicesIdealWhenSlicesDoNotCommute) {
  // x2*x1 lies in x2*A but its constant term is nonzero.
  const FreeElement f(2);
  EXPECT_EQ(standard_system(f).phi(parse("x2*x1", f)), parse("x2*x1 - x1*x2", f));
  const WeylElement w(A10);
  EXPECT_EQ(standard_system(w).phi(parse("x2*x1", w)), w.constant_like(Rational(1)));
}

TEST(ProjectionsProperty, RightModuleLaw) {
  // F2 with d/dx1: x2 and [x1,x2] are constants.
  const FreeElement f(2);
  const LndSystem<FreeElement> sys({Derivation<FreeElement>::partial(0)}, {f.variable_like(0)},
                                   {f.variable_like(1)});
  const FreeElement c = free_ad(f.variable_like(0), f.variable_like(1));
  const std::vector<FreeElement> ys{f.variable_like(1), c, c * f.variable_like(1) - Rational(2) * c * c};
  std::mt19937 rng(36);
  for (int t = 0; t < 40; ++t) {
    const FreeElement a = testing::random_free(rng, 2, 4);
    for (const FreeElement& y : ys) {
      ASSERT_TRUE(sys.in_kernel(y));
      ASSERT_EQ(sys.phi(a * y), sys.phi(a) * y);
      ASSERT_EQ(sys.psi(y * a), y * sys.psi(a));
    }
  }
}

TEST(ProjectionsProperty, CommutativeMultiplicativity) {
  std::mt19937 rng(37);
  const CommPoly p3(3);
  const auto full = standard_system(p3);
  const LndSystem<CommPoly> partial1({Derivation<CommPoly>::partial(0)}, {p3.variable_like(0)},
                                     {p3.variable_like(1), p3.variable_like(2)});
  // Triangular: delta = d/dx1 + x1 d/dx2 with slice x1 on P3.
  const LndSystem<CommPoly> tri(
      {Derivation<CommPoly>::partial(0) + Derivation<CommPoly>::partial(1).times(p3.variable_like(0))},
      {p3.variable_like(0)}, {p3.variable_like(1), p3.variable_like(2)});
  for (int t = 0; t < 40; ++t) {
    const CommPoly a = testing::random_comm(rng, 3, 4), b = testing::random_comm(rng, 3, 4);
    for (const auto* sys : {&full, &partial1, &tri}) {
      ASSERT_EQ(sys->phi(a * b), sys->phi(a) * sys->phi(b));
      ASSERT_EQ(sys->phi(a), sys->psi(a));
    }
  }
}

TEST(Projections, ValidationErrors) {
  const CommPoly p3(3);
  // wrong slice
  expect_code(
      [&] {
        LndSystem<CommPoly>({Derivation<CommPoly>::partial(0)}, {p3.variable_like(1)});
      },
      errc::system);
  // d/dx1 and d/dx2 + x1 d/dx3 do not commute on x3
  expect_code(
      [&] {
        LndSystem<CommPoly>(
            {Derivation<CommPoly>::partial(0),
             Derivation<CommPoly>::partial(1) + Derivation<CommPoly>::partial(2).times(p3.variable_like(0))},
            {p3.variable_like(0), p3.variable_like(1)}, {p3.variable_like(2)});
      },
      errc::system);
  // x2 d/dx2 is not locally nilpotent
  LndOptions small;
  small.nilpotence_cap = 10;
  expect_code(
      [&] {
        LndSystem<CommPoly>(
            {Derivation<CommPoly>::partial(0) + Derivation<CommPoly>::partial(1).times(p3.variable_like(1))},
            {p3.variable_like(0)}, {p3.variable_like(1)}, small);
      },
      errc::cap);
  expect_code([&] { LndSystem<CommPoly>({}, {}); }, errc::system);
}

}  // namespace
}  // namespace lnd
