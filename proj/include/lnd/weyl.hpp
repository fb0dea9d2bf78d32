#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lnd/multi_index.hpp"
#include "lnd/rational.hpp"

namespace lnd {

// A(n,m) := A_n (x) P_m on generators x_1..x_s, s = 2n+m, with
// [x_{n+i}, x_j] = delta_ij for i,j <= n and x_{2n+1..s} central.
struct WeylSignature {
  unsigned n = 0;
  unsigned m = 0;

  std::size_t s() const { return 2 * std::size_t{n} + m; }
  bool is_central(std::size_t i) const { return i >= 2 * std::size_t{n}; }
  // "A(n,m)"
  std::string to_string() const;

  friend bool operator==(const WeylSignature&, const WeylSignature&) = default;
};

inline constexpr unsigned kDefaultDegreeCap = 64;

// Element of A(n,m), stored as normal-ordered monomials x_1^a1 ... x_s^as
// (coordinates, then momenta, then central variables).
class WeylElement {
 public:
  using TermMap = std::map<MultiIndex, Rational, TermOrder>;

  explicit WeylElement(WeylSignature sig);

  static WeylElement constant(WeylSignature sig, const Rational& c);
  static WeylElement variable(WeylSignature sig, std::size_t i);
  static WeylElement monomial(WeylSignature sig, const MultiIndex& alpha,
                              const Rational& c = Rational(1));

  WeylElement zero_like() const { return WeylElement(sig_); }
  WeylElement constant_like(const Rational& c) const { return constant(sig_, c); }
  WeylElement variable_like(std::size_t i) const { return variable(sig_, i); }

  const WeylSignature& signature() const { return sig_; }
  std::size_t num_vars() const { return sig_.s(); }
  bool is_commutative() const { return sig_.n == 0; }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::optional<Rational> constant_value() const;
  bool is_constant() const { return constant_value().has_value(); }
  std::optional<int> total_degree() const;
  bool is_homogeneous() const;
  // True when only central variables occur.
  bool is_central() const;

  WeylElement pow(unsigned k) const;

  void add_term(const MultiIndex& alpha, const Rational& c);

  friend WeylElement operator+(const WeylElement& a, const WeylElement& b);
  friend WeylElement operator-(const WeylElement& a, const WeylElement& b);
  friend WeylElement operator*(const WeylElement& a, const WeylElement& b);
  friend WeylElement operator*(const Rational& q, const WeylElement& a);
  friend WeylElement operator-(const WeylElement& a);
  friend bool operator==(const WeylElement& a, const WeylElement& b) {
    return a.sig_ == b.sig_ && a.terms_ == b.terms_;
  }

 private:
  WeylSignature sig_;
  TermMap terms_;
};

// Normal-ordered product. Throws `cap` if a result term would exceed
// `degree_cap` in total degree.
WeylElement weyl_mul(const WeylElement& a, const WeylElement& b,
                     unsigned degree_cap = kDefaultDegreeCap);

// d/dx_i (0-based). Weyl indices go through the inner derivations
// ad(x_{n+i}) and -ad(x_i); central indices use the power rule.
WeylElement weyl_partial(const WeylElement& a, std::size_t i);
// Power rule applied directly to the normal-ordered monomials.
WeylElement power_rule_partial(const WeylElement& a, std::size_t i);
// [u, a] = ua - au
WeylElement weyl_ad(const WeylElement& u, const WeylElement& a);
// d^alpha(a), optionally divided by alpha!.
WeylElement apply_pd_multi(const WeylElement& a, const MultiIndex& alpha,
                           bool divide_by_factorial);

// Uniform carrier interface.
inline WeylElement partial(const WeylElement& a, std::size_t i) {
  return power_rule_partial(a, i);
}
// The derivation x_k -> values[k] extended to monomials by Leibniz. The
// caller is responsible for the values respecting the defining relations
// (see check_weyl_derivation).
WeylElement derive_by_values(const WeylElement& a, const std::vector<WeylElement>& values);
// Throws `relation` unless x_k -> values[k] extends to a derivation.
void check_weyl_derivation(WeylSignature sig, const std::vector<WeylElement>& values);
std::string to_string(const WeylElement& a);

}  // namespace lnd
