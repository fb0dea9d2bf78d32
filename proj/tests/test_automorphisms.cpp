#include <gtest/gtest.h>

#include <random>

#include "lnd/automorphism.hpp"
#include "lnd/parser.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

namespace lnd {
namespace {

using testing::expect_code;

const WeylSignature A10{1, 0};
const WeylSignature A11{1, 1};
const WeylSignature P1{0, 1};
const WeylSignature P2{0, 2};
const WeylSignature P3{0, 3};

WeylElement W(const char* text, WeylSignature sig) {
  return parse_element(text, WeylElement(sig));
}

std::vector<WeylElement> images(const char* text, WeylSignature sig) {
  return parse_images(text, WeylElement(sig));
}

Automorphism aut(const char* text, WeylSignature sig) { return aut_verify(sig, images(text, sig)); }

// Both compositions fix every generator.
void expect_inverse_pair(const Automorphism& s, const Automorphism& t) {
  const Automorphism st = aut_compose(s, t), ts = aut_compose(t, s);
  for (std::size_t i = 0; i < s.signature.s(); ++i) {
    const WeylElement xi = WeylElement::variable(s.signature, i);
    ASSERT_EQ(st.images[i], xi) << format_images(s.images);
    ASSERT_EQ(ts.images[i], xi) << format_images(s.images);
  }
}

TEST(Automorphisms, ApplyExamples) {
  const WeylElement a = W("x1^2*x2 - x2 + 3", A10);
  EXPECT_EQ(aut_apply(aut_identity(A10), a), a);
  EXPECT_EQ(aut_apply(aut("x1 -> x1 + 1; x2 -> x2 + x1", P2), W("x2", P2)), W("x2 + x1", P2));
  EXPECT_EQ(aut_apply(aut("x1 -> x1; x2 -> x2 + x1^2", A10), W("x2*x1", A10)),
            W("x1*x2 + x1^3 + 1", A10));
  const Automorphism raw{A10, images("x1 -> x1; x2 -> x2", A10), false};
  expect_code([&] { (void)aut_apply(raw, a); }, errc::unverified);
}

TEST(Automorphisms, VerifyExamples) {
  EXPECT_TRUE(aut_identity(A11).verified);
  EXPECT_TRUE(aut("x1 -> x1; x2 -> x2 + x1^2", A10).verified);
  try {
    (void)aut("x1 -> x1; x2 -> x2 + x2^2", A10);
    FAIL() << "expected a relation error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), errc::relation);
    EXPECT_STREQ(e.what(), "[s(x2),s(x1)] != 1");
  }
  // central image that is not central
  expect_code([] { (void)aut("x1 -> x1; x2 -> x2; x3 -> x3 + x1", A11); }, errc::relation);
  // non-constant and zero Jacobians
  expect_code([] { (void)aut("x1 -> x1^2", P1); }, errc::jacobian);
  expect_code([] { (void)aut("x1 -> x1 + x2; x2 -> x1 + x2", P2); }, errc::jacobian);
  expect_code([] { (void)aut_verify(A10, {WeylElement(A10)}); }, errc::signature);
}

TEST(Automorphisms, TwistedPartialsIdentity) {
  const auto ders = twisted_partials(aut_identity(A11));
  std::mt19937 rng(41);
  for (int t = 0; t < 10; ++t) {
    const WeylElement a = testing::random_weyl(rng, A11, 4);
    for (std::size_t i = 0; i < 3; ++i) ASSERT_EQ(ders[i](a), weyl_partial(a, i));
  }
}

TEST(Automorphisms, TwistedPartialsWeylExample) {
  const Automorphism s = aut("x1 -> x1; x2 -> x2 + x1^2", A10);
  const auto ders = twisted_partials(s);
  EXPECT_EQ(ders[0](W("x1", A10)), W("1", A10));
  EXPECT_EQ(ders[1](W("x2 + x1^2", A10)), W("1", A10));
  const WeylElement u1 = W("x2 + x1^2", A10), u2 = W("x1", A10);
  std::mt19937 rng(42);
  for (int t = 0; t < 10; ++t) {
    const WeylElement a = testing::random_weyl(rng, A10, 4);
    ASSERT_EQ(ders[0](a), weyl_ad(u1, a));
    ASSERT_EQ(ders[1](a), -weyl_ad(u2, a));
  }
}

TEST(Automorphisms, TwistedPartialsPolynomialCofactor) {
  // d'_1 = d1 - 3 x1^2 d2, d'_2 = d2
  const Automorphism s = aut("x1 -> x1; x2 -> x2 + x1^3", P2);
  const auto ders = twisted_partials(s);
  const WeylElement c = W("3*x1^2", P2);
  std::mt19937 rng(43);
  for (int t = 0; t < 15; ++t) {
    const WeylElement a = testing::random_weyl(rng, P2, 5);
    ASSERT_EQ(ders[0](a), weyl_partial(a, 0) - c * weyl_partial(a, 1));
    ASSERT_EQ(ders[1](a), weyl_partial(a, 1));
  }
}

TEST(AutomorphismsProperty, TwistedPartialsDualAndCommuting) {
  std::mt19937 rng(44);
  for (int t = 0; t < 10; ++t) {
    const Automorphism s = aut_verify(A11, testing::random_triangular_a11(rng, t % 2 == 1));
    const auto ders = twisted_partials(s);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        const auto v = ders[i](s.images[j]).constant_value();
        ASSERT_TRUE(v.has_value());
        ASSERT_EQ(*v, Rational(i == j ? 1 : 0));
        for (std::size_t k = 0; k < 3; ++k) {
          const WeylElement xk = WeylElement::variable(A11, k);
          ASSERT_EQ(ders[i](ders[j](xk)), ders[j](ders[i](xk)));
        }
      }
  }
}

TEST(Automorphisms, InvertExamples) {
  const Automorphism id = aut_identity(A11);
  EXPECT_EQ(invert(id).images, id.images);

  const Automorphism s = aut("x1 -> x1; x2 -> x2 + x1^2", A10);
  const Automorphism inv = invert(s);
  EXPECT_EQ(inv.images, images("x1 -> x1; x2 -> x2 - x1^2", A10));
  expect_inverse_pair(s, inv);

  const Automorphism p = aut("x1 -> x1 + 1; x2 -> x2 + x1", P2);
  const Automorphism pinv = invert(p);
  EXPECT_EQ(pinv.images, images("x1 -> x1 - 1; x2 -> x2 - x1 + 1", P2));
  expect_inverse_pair(p, pinv);
}

TEST(Automorphisms, InvertWithCentralDependence) {
  const Automorphism s = aut("x1 -> x1 + x3^2; x2 -> x2 + x1^2*x3 - 1; x3 -> x3 + 2", A11);
  expect_inverse_pair(s, invert(s));
  const Automorphism lin = aut("x1 -> 2*x1 + x3; x2 -> 1/2*x2; x3 -> -x3 + 1", A11);
  expect_inverse_pair(lin, invert(lin));
}

TEST(Automorphisms, InvertRejectsNonAutomorphism) {
  // Verified-looking images whose inverse needs a non-constant coefficient
  // cannot occur for genuine automorphisms; an unverified input is refused.
  const Automorphism raw{A10, images("x1 -> x1; x2 -> x2 + x2^2", A10), false};
  expect_code([&] { (void)invert(raw); }, errc::unverified);
}

TEST(AutomorphismsProperty, InvertRandomTriangularA11) {
  std::mt19937 rng(45);
  for (int t = 0; t < 20; ++t) {
    const Automorphism s = aut_verify(A11, testing::random_triangular_a11(rng, t % 2 == 1));
    expect_inverse_pair(s, invert(s));
  }
}

TEST(Automorphisms, ComposeExamples) {
  const Automorphism s = aut("x1 -> x1; x2 -> x2 + x1^2", A10);
  EXPECT_EQ(aut_compose(s, aut_identity(A10)).images, s.images);
  EXPECT_EQ(aut_compose(invert(s), s).images, aut_identity(A10).images);
  EXPECT_EQ(aut_compose(aut("x1 -> x1 + 2", P1), aut("x1 -> x1 - 1/3", P1)).images,
            images("x1 -> x1 + 5/3", P1));
  expect_code([&] { (void)aut_compose(s, aut_identity(A11)); }, errc::signature);
}

TEST(Automorphisms, LogExamples) {
  EXPECT_TRUE(log_aut(aut_identity(P2)).is_zero());
  EXPECT_EQ(log_aut(aut("x1 -> x1 + 1", P1)).values, images("x1 -> 1", P1));
  EXPECT_EQ(log_aut(aut("x1 -> x1 + 1; x2 -> x2 + x1", P2)).values,
            images("x1 -> 1; x2 -> x1 - 1/2", P2));
  LndOptions small;
  small.nilpotence_cap = 20;
  expect_code([&] { (void)log_aut(aut("x1 -> 2*x1", P1), small); }, errc::cap);
}

TEST(Automorphisms, ExpExamples) {
  EXPECT_EQ(exp_der(make_derivation(P2, images("x1 -> 0; x2 -> 0", P2))).images,
            aut_identity(P2).images);
  EXPECT_EQ(exp_der(make_derivation(P1, images("x1 -> 7/2", P1))).images,
            images("x1 -> x1 + 7/2", P1));
  EXPECT_EQ(exp_der(make_derivation(P2, images("x1 -> 1; x2 -> x1 - 1/2", P2))).images,
            images("x1 -> x1 + 1; x2 -> x2 + x1", P2));
  // ad(x1^2) on A(1,0) is locally nilpotent
  const Automorphism e = exp_der(make_derivation(A10, images("x1 -> 0; x2 -> -2*x1", A10)));
  EXPECT_EQ(e.images, images("x1 -> x1; x2 -> x2 - 2*x1", A10));
  expect_code([] { (void)make_derivation(A10, images("x1 -> x1; x2 -> 0", A10)); },
              errc::relation);
}

// Unipotent triangular data on P_m: x_i -> x_i + p_i(x_1..x_{i-1}).
std::vector<WeylElement> triangular_values(std::mt19937& rng, WeylSignature sig, bool with_var) {
  std::vector<WeylElement> v;
  for (std::size_t i = 0; i < sig.s(); ++i) {
    WeylElement p = WeylElement::constant(sig, testing::random_rational(rng));
    if (i > 0) {
      std::uniform_int_distribution<std::size_t> pick(0, i - 1);
      std::uniform_int_distribution<unsigned> deg(1, 2);
      for (int t = 0; t < 2; ++t) {
        MultiIndex alpha(sig.s());
        const unsigned d = deg(rng);
        for (unsigned k = 0; k < d; ++k) ++alpha[pick(rng)];
        p.add_term(alpha, testing::random_rational(rng));
      }
    }
    v.push_back(with_var ? WeylElement::variable(sig, i) + p : p);
  }
  return v;
}

TEST(AutomorphismsProperty, LogExpRoundTrips) {
  std::mt19937 rng(46);
  for (const WeylSignature sig : {P2, P3}) {
    for (int t = 0; t < 10; ++t) {
      const GeneratorDerivation d = make_derivation(sig, triangular_values(rng, sig, false));
      ASSERT_EQ(log_aut(exp_der(d)).values, d.values);
      const Automorphism s = aut_verify(sig, triangular_values(rng, sig, true));
      ASSERT_EQ(exp_der(log_aut(s)).images, s.images);
    }
  }
}

TEST(Automorphisms, SeriesExamples) {
  const DiffOpSeries id = aut_to_series(aut_identity(P1), 4);
  ASSERT_EQ(id.coeffs.size(), 1u);
  EXPECT_EQ(id.coeffs.at(MultiIndex{0}), W("1", P1));

  const DiffOpSeries dil = aut_to_series(aut("x1 -> 2*x1", P1), 6);
  const DiffOpSeries tr = aut_to_series(aut("x1 -> x1 + 3", P1), 6);
  for (unsigned k = 0; k <= 6; ++k) {
    const Rational inv = Rational::factorial(k).inverse();
    EXPECT_EQ(dil.coeffs.at(MultiIndex{k}), inv * WeylElement::variable(P1, 0).pow(k));
    EXPECT_EQ(tr.coeffs.at(MultiIndex{k}), WeylElement::constant(P1, inv * Rational(3).pow(int(k))));
  }
  EXPECT_EQ(series_apply(id, W("x1^3 - 1", P1)), W("x1^3 - 1", P1));
  EXPECT_EQ(series_apply(aut_to_series(aut("x1 -> 2*x1", P1), 2), W("x1^2", P1)), W("4*x1^2", P1));
  EXPECT_EQ(series_apply(tr, W("x1^2", P1)), W("(x1 + 3)^2", P1));
  expect_code([] { (void)aut_to_series(aut_identity(A10), 2); }, errc::signature);
}

TEST(Automorphisms, SeriesFormatting) {
  const DiffOpSeries tr = aut_to_series(aut("x1 -> x1 + 1", P1), 2);
  EXPECT_EQ(format_series(tr), "d^(0): 1\nd^(1): 1\nd^(2): 1/2");
}

TEST(Automorphisms, MapToSeriesExamples) {
  const LinearMapTable id = linear_map_table(aut_identity(P1), 4);
  const DiffOpSeries sid = map_to_series(id, 4);
  ASSERT_EQ(sid.coeffs.size(), 1u);
  EXPECT_EQ(sid.coeffs.at(MultiIndex{0}), W("1", P1));

  const DiffOpSeries tr = map_to_series(linear_map_table(aut("x1 -> x1 + 1", P1), 5), 5);
  for (unsigned k = 0; k <= 5; ++k)
    EXPECT_EQ(tr.coeffs.at(MultiIndex{k}),
              WeylElement::constant(P1, Rational::factorial(k).inverse()));

  // evaluation at 0
  LinearMapTable ev{P1, {}};
  for (unsigned k = 0; k <= 5; ++k)
    ev.set(WeylElement::variable(P1, 0).pow(k), k == 0 ? W("1", P1) : WeylElement(P1));
  const DiffOpSeries es = map_to_series(ev, 5);
  for (unsigned k = 0; k <= 5; ++k)
    EXPECT_EQ(es.coeffs.at(MultiIndex{k}),
              Rational::factorial(k).inverse() * W("-x1", P1).pow(k));
  for (unsigned j = 0; j <= 5; ++j) {
    const WeylElement xj = WeylElement::variable(P1, 0).pow(j);
    EXPECT_EQ(series_apply(es, xj), j == 0 ? W("1", P1) : WeylElement(P1));
  }
}

TEST(Automorphisms, TableErrors) {
  LinearMapTable t{P1, {}};
  t.set(W("1", P1), W("1", P1));
  expect_code([&] { (void)map_to_series(t, 1); }, errc::table);
  expect_code([&] { t.set(W("2*x1", P1), W("1", P1)); }, errc::table);
  expect_code([&] { t.set(W("x1 + 1", P1), W("1", P1)); }, errc::table);
}

TEST(AutomorphismsProperty, SeriesConsistency) {
  std::mt19937 rng(47);
  for (int t = 0; t < 10; ++t) {
    const Automorphism s = aut_verify(P2, triangular_values(rng, P2, true));
    const DiffOpSeries series = aut_to_series(s, 6);
    const DiffOpSeries solved = map_to_series(linear_map_table(s, 6), 6);
    ASSERT_EQ(solved.coeffs, series.coeffs);
    for (int u = 0; u < 5; ++u) {
      const WeylElement a = testing::random_weyl(rng, P2, 5);
      ASSERT_EQ(series_apply(series, a), aut_apply(s, a));
    }
  }
}

TEST(AutomorphismsProperty, SeriesIsMultiplicative) {
  std::mt19937 rng(48);
  for (int t = 0; t < 10; ++t) {
    const Automorphism s = aut_verify(P3, triangular_values(rng, P3, true));
    const DiffOpSeries series = aut_to_series(s, 6);
    const WeylElement a = testing::random_weyl(rng, P3, 3), b = testing::random_weyl(rng, P3, 3);
    ASSERT_EQ(series_apply(series, a * b), series_apply(series, a) * series_apply(series, b));
  }
}

TEST(Automorphisms, CentralConversions) {
  const WeylElement a = W("x3^2 - 2*x3 + 1", A11);
  const CommPoly p = central_to_comm(a);
  EXPECT_EQ(to_string(p), "x1^2 - 2*x1 + 1");
  EXPECT_EQ(comm_to_central(A11, p), a);
  expect_code([&] { (void)central_to_comm(W("x1", A11)); }, errc::signature);
}

}  // namespace
}  // namespace lnd
