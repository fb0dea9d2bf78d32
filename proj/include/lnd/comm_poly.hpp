#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lnd/multi_index.hpp"
#include "lnd/rational.hpp"

namespace lnd {

using Exponent = std::vector<int>;

// Commutative multivariate polynomial over Q. Variables listed in the
// Laurent mask are invertible and may carry negative exponents.
class CommPoly {
 public:
  using TermMap = std::map<Exponent, Rational, TermOrder>;

  explicit CommPoly(std::size_t num_vars, std::vector<bool> laurent_mask = {});

  static CommPoly constant(std::size_t num_vars, const Rational& c,
                           std::vector<bool> laurent_mask = {});
  static CommPoly variable(std::size_t num_vars, std::size_t i,
                           std::vector<bool> laurent_mask = {});
  static CommPoly monomial(std::size_t num_vars, Exponent e, const Rational& c,
                           std::vector<bool> laurent_mask = {});

  CommPoly zero_like() const { return CommPoly(num_vars_, mask_); }
  CommPoly constant_like(const Rational& c) const;
  CommPoly variable_like(std::size_t i) const;

  std::size_t num_vars() const { return num_vars_; }
  const std::vector<bool>& laurent_mask() const { return mask_; }
  bool is_invertible(std::size_t i) const { return mask_[i]; }
  bool has_laurent() const;
  bool same_space(const CommPoly& other) const {
    return num_vars_ == other.num_vars_ && mask_ == other.mask_;
  }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::optional<Rational> constant_value() const;
  bool is_constant() const { return constant_value().has_value(); }
  // Largest total degree of a term; empty for zero.
  std::optional<int> total_degree() const;
  bool is_homogeneous() const;
  // c * x^e with e supported on invertible variables.
  bool is_unit() const;

  // Negative powers are allowed for units only.
  CommPoly pow(int exponent) const;

  // Appends c*x^e. Used while building values; results are canonical.
  void add_term(const Exponent& e, const Rational& c);

  friend CommPoly operator+(const CommPoly& a, const CommPoly& b);
  friend CommPoly operator-(const CommPoly& a, const CommPoly& b);
  friend CommPoly operator*(const CommPoly& a, const CommPoly& b);
  friend CommPoly operator*(const Rational& q, const CommPoly& a);
  friend CommPoly operator-(const CommPoly& a);
  friend bool operator==(const CommPoly& a, const CommPoly& b) {
    return a.same_space(b) && a.terms_ == b.terms_;
  }

 private:
  std::size_t num_vars_;
  std::vector<bool> mask_;
  TermMap terms_;
};

CommPoly comm_mul(const CommPoly& a, const CommPoly& b);
CommPoly comm_partial(const CommPoly& a, std::size_t i);
// a(images): substitutes images[i] for x_i. The result lives in the space
// of the images.
CommPoly comm_substitute(const CommPoly& a, const std::vector<CommPoly>& images);
// det(d images[i] / d x_j) for m images in m variables.
CommPoly jacobian_det(const std::vector<CommPoly>& images);

// Uniform carrier interface.
inline CommPoly partial(const CommPoly& a, std::size_t i) { return comm_partial(a, i); }
// The derivation with x_k -> values[k], extended by the chain rule.
CommPoly derive_by_values(const CommPoly& a, const std::vector<CommPoly>& values);
std::string to_string(const CommPoly& a);

}  // namespace lnd
