#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "lnd/error.hpp"
#include "lnd/rational.hpp"

namespace lnd {

// ad(u)(a) = ua - au, for any carrier.
template <class E>
E inner_derivative(const E& u, const E& a) {
  return u * a - a * u;
}

namespace detail {
template <class E>
E carrier_partial(const E& a, std::size_t i) {
  return partial(a, i);
}
}  // namespace detail

// A derivation of a carrier algebra described as a finite sum
//   sum_k q_k * c_k * D_k
// with rational q_k, optional carrier coefficients c_k (multiplied on the
// left) and primitive derivations D_k: a formal partial, an inner
// derivation ad(u), or the derivation determined by its generator values.
template <class E>
class Derivation {
 public:
  struct Partial {
    std::size_t index;
  };
  struct Inner {
    E element;
  };
  struct ByValues {
    std::vector<E> values;
  };
  using Primitive = std::variant<Partial, Inner, ByValues>;

  struct Term {
    Rational scalar;
    std::optional<E> coeff;
    Primitive op;
  };

  Derivation() = default;

  static Derivation partial(std::size_t i) { return Derivation({Term{1, std::nullopt, Partial{i}}}); }
  static Derivation inner(E u) { return Derivation({Term{1, std::nullopt, Inner{std::move(u)}}}); }
  static Derivation by_values(std::vector<E> values) {
    return Derivation({Term{1, std::nullopt, ByValues{std::move(values)}}});
  }

  Derivation scaled(const Rational& q) const {
    Derivation d = *this;
    for (auto& t : d.terms_) t.scalar *= q;
    return d;
  }

  // coeff * D
  Derivation times(const E& coeff) const {
    Derivation d = *this;
    for (auto& t : d.terms_) t.coeff = t.coeff ? coeff * *t.coeff : coeff;
    return d;
  }

  friend Derivation operator+(const Derivation& a, const Derivation& b) {
    Derivation d = a;
    d.terms_.insert(d.terms_.end(), b.terms_.begin(), b.terms_.end());
    return d;
  }

  const std::vector<Term>& terms() const { return terms_; }

  E operator()(const E& a) const {
    E result = a.zero_like();
    for (const auto& t : terms_) {
      if (t.scalar.is_zero()) continue;
      E v = std::visit([&](const auto& op) { return apply_primitive(op, a); }, t.op);
      if (v.is_zero()) continue;
      if (t.coeff) v = *t.coeff * v;
      result = result + t.scalar * v;
    }
    return result;
  }

 private:
  explicit Derivation(std::vector<Term> terms) : terms_(std::move(terms)) {}

  static E apply_primitive(const Partial& p, const E& a) { return detail::carrier_partial(a, p.index); }
  static E apply_primitive(const Inner& p, const E& a) { return inner_derivative(p.element, a); }
  static E apply_primitive(const ByValues& p, const E& a) { return derive_by_values(a, p.values); }

  std::vector<Term> terms_;
};

}  // namespace lnd
