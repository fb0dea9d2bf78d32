#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "lnd/rational.hpp"

namespace lnd {

// An element of N^s: exponent vectors, derivation orders, series indices.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::size_t length) : e_(length, 0) {}
  MultiIndex(std::initializer_list<unsigned> entries) : e_(entries) {}
  explicit MultiIndex(std::vector<unsigned> entries) : e_(std::move(entries)) {}

  static MultiIndex unit(std::size_t length, std::size_t i);

  std::size_t size() const { return e_.size(); }
  unsigned operator[](std::size_t i) const { return e_[i]; }
  unsigned& operator[](std::size_t i) { return e_[i]; }
  auto begin() const { return e_.begin(); }
  auto end() const { return e_.end(); }
  const std::vector<unsigned>& entries() const { return e_; }

  unsigned total() const;
  bool is_zero() const { return total() == 0; }
  // Product of the factorials of the entries.
  Rational factorial() const;
  // Componentwise <=.
  bool componentwise_le(const MultiIndex& other) const;

  MultiIndex operator+(const MultiIndex& other) const;
  MultiIndex plus_unit(std::size_t i) const;

  // "(a1,...,as)"
  std::string to_string() const;

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
  friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;

 private:
  std::vector<unsigned> e_;
};

// Ascending total degree, ties broken lexicographically with the first
// entry most significant and larger entries first: (2,0) < (1,1) < (0,2).
struct GradedLexLess {
  bool operator()(const MultiIndex& a, const MultiIndex& b) const;
};

// All multi-indices of the given length and total degree, in GradedLexLess
// order.
std::vector<MultiIndex> indices_of_degree(std::size_t length, unsigned degree);

// Canonical order for stored terms of polynomial-like carriers: `a` comes
// before `b` iff at the last position where they differ `a` is larger. This
// is lexicographic order with x_s > x_{s-1} > ... > x_1, printed descending.
struct TermOrder {
  template <class Seq>
  bool operator()(const Seq& a, const Seq& b) const {
    for (std::size_t k = a.size(); k-- > 0;) {
      if (a[k] != b[k]) return a[k] > b[k];
    }
    return false;
  }
};

}  // namespace lnd
