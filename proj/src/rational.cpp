#include "lnd/rational.hpp"

#include <cctype>

#include "lnd/error.hpp"

namespace lnd {

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw Error(errc::parse, "zero denominator");
  v_ = mpq_class(numerator, denominator);
  v_.canonicalize();
}

Rational::Rational(mpq_class value) : v_(std::move(value)) {
  v_.canonicalize();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1")
                                      : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw Error(errc::parse, "malformed rational '" + std::string(text) + "'");
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw Error(errc::parse, "zero denominator");
  if (negative) n = -n;
  return Rational(mpq_class(n, d));
}

Rational Rational::factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(mpq_class(f));
}

Rational Rational::binomial(unsigned n, unsigned k) {
  if (k > n) return Rational(0);
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return Rational(mpq_class(b));
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(v_))); }

Rational Rational::inverse() const {
  if (is_zero()) throw Error(errc::unit, "division by zero");
  return Rational(mpq_class(1 / v_));
}

Rational Rational::pow(int exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(mpq_class(n, d));
}

std::string Rational::to_string() const { return v_.get_str(10); }

Rational& Rational::operator+=(const Rational& o) {
  v_ += o.v_;
  return *this;
}
Rational& Rational::operator-=(const Rational& o) {
  v_ -= o.v_;
  return *this;
}
Rational& Rational::operator*=(const Rational& o) {
  v_ *= o.v_;
  return *this;
}
Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(errc::unit, "division by zero");
  v_ /= o.v_;
  return *this;
}

}  // namespace lnd
