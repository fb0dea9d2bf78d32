#include <gtest/gtest.h>

#include <random>

#include "lnd/free_algebra.hpp"
#include "lnd/parser.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

namespace lnd {
namespace {

using testing::expect_code;

FreeElement F(const char* text, unsigned gens = 2) {
  return parse_element(text, FreeElement(gens));
}
FreeElement x(std::size_t i, unsigned gens = 2) { return FreeElement::variable(gens, i); }

TEST(Free, ProductExamples) {
  EXPECT_EQ(free_mul(x(0), x(1)), FreeElement::word(2, {0, 1}));
  const FreeElement a = F("x1*x2 - 2*x2*x1 + 1/3");
  EXPECT_EQ(free_mul(FreeElement::constant(2, Rational(1)), a), a);
  const FreeElement prod = free_mul(x(0) + x(1), x(0) - x(1));
  EXPECT_EQ(prod, F("x1*x1 - x1*x2 + x2*x1 - x2*x2"));
  EXPECT_NE(free_mul(x(0), x(1)), free_mul(x(1), x(0)));
  expect_code([] { (void)free_mul(x(0), x(0, 3)); }, errc::signature);
}

TEST(Free, Printing) {
  EXPECT_EQ(to_string(F("x2*x1*x1 + x1*x2 - 1")), "x2*x1*x1 + x1*x2 - 1");
  EXPECT_EQ(to_string(FreeElement(2)), "0");
}

TEST(Free, PartialExamples) {
  EXPECT_EQ(free_partial(F("x1*x2*x1"), 0), F("x2*x1 + x1*x2"));
  EXPECT_TRUE(free_partial(x(0), 1).is_zero());
  EXPECT_TRUE(free_partial(F("x1*x2 - x2*x1"), 0).is_zero());
  expect_code([] { (void)free_partial(x(0), 2); }, errc::index);
}

TEST(Free, AdExamples) {
  EXPECT_EQ(free_ad(x(0), x(1)), F("x1*x2 - x2*x1"));
  const FreeElement u = F("x1*x2 + x2");
  EXPECT_TRUE(free_ad(u, u).is_zero());
  EXPECT_EQ(free_ad(x(0), free_ad(x(0), x(1))), F("x1*x1*x2 - 2*x1*x2*x1 + x2*x1*x1"));
}

TEST(FreeProperty, LeibnizAndCommutingPartials) {
  std::mt19937 rng(21);
  for (int t = 0; t < 60; ++t) {
    const FreeElement a = testing::random_free(rng, 3, 6), b = testing::random_free(rng, 3, 6);
    for (std::size_t i = 0; i < 3; ++i) {
      ASSERT_EQ(free_partial(a * b, i), free_partial(a, i) * b + a * free_partial(b, i));
      ASSERT_EQ(free_partial(a, i), testing::delete_occurrences(a, static_cast<unsigned>(i)));
      for (std::size_t j = 0; j < 3; ++j)
        ASSERT_EQ(free_partial(free_partial(a, i), j), free_partial(free_partial(a, j), i));
    }
  }
}

TEST(FreeProperty, PartialsAreLocallyNilpotentOnWords) {
  std::mt19937 rng(22);
  std::uniform_int_distribution<unsigned> len(0, 6), letter(0, 1);
  for (int t = 0; t < 50; ++t) {
    Word w(len(rng));
    for (auto& l : w) l = letter(rng);
    for (std::size_t i = 0; i < 2; ++i) {
      FreeElement d = FreeElement::word(2, w);
      for (std::size_t k = 0; k <= w.size(); ++k) d = free_partial(d, i);
      ASSERT_TRUE(d.is_zero());
    }
  }
}

TEST(FreeProperty, IteratedCommutatorsAreConstants) {
  // (ad x1)^a (ad x2)^b ([x_i, x_j]) up to degree 4
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      const FreeElement c = free_ad(x(i), x(j));
      for (unsigned a = 0; a <= 2; ++a)
        for (unsigned b = 0; a + b <= 2; ++b) {
          FreeElement f = c;
          for (unsigned k = 0; k < b; ++k) f = free_ad(x(1), f);
          for (unsigned k = 0; k < a; ++k) f = free_ad(x(0), f);
          ASSERT_TRUE(free_partial(f, 0).is_zero());
          ASSERT_TRUE(free_partial(f, 1).is_zero());
        }
    }
}

TEST(FreeProperty, AssociativeAndDistributive) {
  std::mt19937 rng(23);
  for (int t = 0; t < 40; ++t) {
    const FreeElement a = testing::random_free(rng, 2, 4), b = testing::random_free(rng, 2, 4),
                      c = testing::random_free(rng, 2, 4);
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
  }
}

TEST(Free, DeriveByValues) {
  const FreeElement u = F("x1*x1*x2");
  const std::vector<FreeElement> values{free_ad(u, x(0)), free_ad(u, x(1))};
  std::mt19937 rng(24);
  for (int t = 0; t < 20; ++t) {
    const FreeElement a = testing::random_free(rng, 2, 4);
    ASSERT_EQ(derive_by_values(a, values), free_ad(u, a));
  }
}

}  // namespace
}  // namespace lnd
