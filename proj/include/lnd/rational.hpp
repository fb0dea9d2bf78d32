#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <string>
#include <string_view>

namespace lnd {

// Exact fraction over arbitrary-precision integers. Always kept in lowest
// terms with a positive denominator; zero is 0/1.
class Rational {
 public:
  Rational() = default;
  template <std::integral I>
  Rational(I value) : v_(static_cast<long>(value)) {}
  Rational(long numerator, long denominator);
  explicit Rational(mpq_class value);

  // Accepts "p" or "p/q" with an optional leading sign.
  static Rational parse(std::string_view text);
  static Rational factorial(unsigned n);
  static Rational binomial(unsigned n, unsigned k);

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational abs() const;
  Rational inverse() const;
  Rational pow(int exponent) const;

  const mpq_class& value() const { return v_; }
  std::string to_string() const;

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.v_ == b.v_;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }

 private:
  mpq_class v_;
};

}  // namespace lnd
