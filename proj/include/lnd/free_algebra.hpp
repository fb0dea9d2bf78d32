#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lnd/rational.hpp"

namespace lnd {

// A word over the generators x_1..x_k, stored as 0-based indices.
using Word = std::vector<unsigned>;

// Longer words first, then lexicographic on the index sequence.
struct WordOrder {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  }
};

// Element of the free associative algebra F_k over Q.
class FreeElement {
 public:
  using TermMap = std::map<Word, Rational, WordOrder>;

  explicit FreeElement(unsigned num_gens);

  static FreeElement constant(unsigned num_gens, const Rational& c);
  static FreeElement variable(unsigned num_gens, std::size_t i);
  static FreeElement word(unsigned num_gens, Word w, const Rational& c = Rational(1));

  FreeElement zero_like() const { return FreeElement(num_gens_); }
  FreeElement constant_like(const Rational& c) const { return constant(num_gens_, c); }
  FreeElement variable_like(std::size_t i) const { return variable(num_gens_, i); }

  unsigned num_gens() const { return num_gens_; }
  std::size_t num_vars() const { return num_gens_; }
  bool is_commutative() const { return num_gens_ <= 1; }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::optional<Rational> constant_value() const;
  bool is_constant() const { return constant_value().has_value(); }
  std::optional<int> total_degree() const;
  bool is_homogeneous() const;

  FreeElement pow(unsigned k) const;

  void add_term(const Word& w, const Rational& c);

  friend FreeElement operator+(const FreeElement& a, const FreeElement& b);
  friend FreeElement operator-(const FreeElement& a, const FreeElement& b);
  friend FreeElement operator*(const FreeElement& a, const FreeElement& b);
  friend FreeElement operator*(const Rational& q, const FreeElement& a);
  friend FreeElement operator-(const FreeElement& a);
  friend bool operator==(const FreeElement& a, const FreeElement& b) {
    return a.num_gens_ == b.num_gens_ && a.terms_ == b.terms_;
  }

 private:
  unsigned num_gens_;
  TermMap terms_;
};

FreeElement free_mul(const FreeElement& a, const FreeElement& b);
// The derivation with x_j -> delta_ij: on a word, the sum over occurrences
// of x_i of the word with that occurrence deleted.
FreeElement free_partial(const FreeElement& a, std::size_t i);
FreeElement free_ad(const FreeElement& u, const FreeElement& a);

inline FreeElement partial(const FreeElement& a, std::size_t i) { return free_partial(a, i); }
// x_k -> values[k], extended by Leibniz.
FreeElement derive_by_values(const FreeElement& a, const std::vector<FreeElement>& values);
std::string to_string(const FreeElement& a);

}  // namespace lnd
