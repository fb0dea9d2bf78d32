#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "lnd/derivation.hpp"
#include "lnd/error.hpp"
#include "lnd/multi_index.hpp"
#include "lnd/rational.hpp"

namespace lnd {

struct LndOptions {
  // Longest chain delta_i^k(a) != 0 tolerated before the system is declared
  // not locally nilpotent on `a`.
  std::size_t nilpotence_cap = 256;
};

// alpha -> coefficient in the joint kernel, alpha in graded-lex order.
template <class E>
using TaylorCoefficients = std::map<MultiIndex, E, GradedLexLess>;

// Commuting locally nilpotent derivations delta_1..delta_s with slices
// x_1..x_s, delta_i(x_j) = delta_ij. Validated on construction.
template <class E>
class LndSystem {
 public:
  // `probes` are extra elements (typically algebra generators) on which
  // commutation and local nilpotence are checked, in addition to the slices.
  LndSystem(std::vector<Derivation<E>> derivations, std::vector<E> slices,
            std::vector<E> probes = {}, LndOptions options = {})
      : ders_(std::move(derivations)), slices_(std::move(slices)), options_(options) {
    if (ders_.empty()) throw Error(errc::system, "an LND system needs at least one derivation");
    if (ders_.size() != slices_.size())
      throw Error(errc::system, "derivation and slice counts differ");
    validate(probes);
  }

  std::size_t size() const { return ders_.size(); }
  const Derivation<E>& derivation(std::size_t i) const { return ders_[i]; }
  const E& slice(std::size_t i) const { return slices_[i]; }
  const std::vector<E>& slices() const { return slices_; }
  const LndOptions& options() const { return options_; }

  E apply(std::size_t i, const E& a) const { return ders_.at(i)(a); }

  // delta^alpha(a), optionally divided by alpha!.
  E apply_multi(const MultiIndex& alpha, const E& a, bool divide_by_factorial) const {
    E r = a;
    for (std::size_t i = 0; i < alpha.size() && !r.is_zero(); ++i)
      for (unsigned k = 0; k < alpha[i] && !r.is_zero(); ++k) r = apply(i, r);
    if (divide_by_factorial) r = alpha.factorial().inverse() * r;
    return r;
  }

  bool in_kernel(const E& a) const {
    for (std::size_t i = 0; i < size(); ++i)
      if (!apply(i, a).is_zero()) return false;
    return true;
  }

  // Every nonzero delta^alpha(a), keyed by alpha. Built layer by layer in
  // |alpha|; the empty map stands for a = 0.
  std::map<MultiIndex, E, GradedLexLess> derivative_table(const E& a) const {
    std::map<MultiIndex, E, GradedLexLess> table;
    if (a.is_zero()) return table;
    std::map<MultiIndex, E, GradedLexLess> layer;
    layer.emplace(MultiIndex(size()), a);
    for (std::size_t depth = 0; !layer.empty(); ++depth) {
      if (depth > options_.nilpotence_cap)
        throw Error(errc::cap, "nilpotence cap " + std::to_string(options_.nilpotence_cap) +
                                   " exceeded on " + to_string(a));
      std::map<MultiIndex, E, GradedLexLess> next;
      std::set<MultiIndex> seen;
      for (const auto& [alpha, v] : layer) {
        for (std::size_t i = 0; i < size(); ++i) {
          MultiIndex beta = alpha.plus_unit(i);
          if (!seen.insert(beta).second) continue;
          E w = apply(i, v);
          if (!w.is_zero()) next.emplace(std::move(beta), std::move(w));
        }
      }
      table.merge(layer);
      layer = std::move(next);
    }
    return table;
  }

  // Least i with delta^alpha(a) = 0 for all |alpha| > i.
  unsigned order(const E& a) const {
    if (a.is_zero()) throw Error(errc::system, "the order of 0 is undefined");
    unsigned best = 0;
    for (const auto& [alpha, v] : derivative_table(a)) best = std::max(best, alpha.total());
    return best;
  }

  // phi_i = sum_k (-1)^k x_i^k/k! delta_i^k
  E phi_component(std::size_t i, const E& a) const {
    E result = a.zero_like();
    E power = a.constant_like(Rational(1));
    E d = a;
    for (std::size_t k = 0; !d.is_zero(); ++k) {
      check_chain(k, a);
      const Rational c = Rational(k % 2 ? -1 : 1) / Rational::factorial(static_cast<unsigned>(k));
      result = result + c * (power * d);
      d = apply(i, d);
      if (!d.is_zero()) power = power * slices_[i];
    }
    return result;
  }

  // psi_i = sum_k (-1)^k delta_i^k(.) x_i^k/k!
  E psi_component(std::size_t i, const E& a) const {
    E result = a.zero_like();
    E power = a.constant_like(Rational(1));
    E d = a;
    for (std::size_t k = 0; !d.is_zero(); ++k) {
      check_chain(k, a);
      const Rational c = Rational(k % 2 ? -1 : 1) / Rational::factorial(static_cast<unsigned>(k));
      result = result + c * (d * power);
      d = apply(i, d);
      if (!d.is_zero()) power = power * slices_[i];
    }
    return result;
  }

  // phi = phi_s o ... o phi_1: the constant term lambda_0 of a = sum x^alpha lambda_alpha.
  E phi(const E& a) const {
    E r = a;
    for (std::size_t i = 0; i < size(); ++i) r = phi_component(i, r);
    return r;
  }

  // psi = psi_1 o ... o psi_s: the constant term of a = sum lambda_alpha x^alpha.
  E psi(const E& a) const {
    E r = a;
    for (std::size_t i = size(); i-- > 0;) r = psi_component(i, r);
    return r;
  }

  // a = sum_alpha x^alpha phi(delta^alpha a / alpha!)
  TaylorCoefficients<E> taylor_decompose(const E& a) const {
    TaylorCoefficients<E> out;
    for (const auto& [alpha, v] : derivative_table(a)) {
      E c = phi(alpha.factorial().inverse() * v);
      if (!c.is_zero()) out.emplace(alpha, std::move(c));
    }
    return out;
  }

  E taylor_reconstruct(const TaylorCoefficients<E>& coeffs) const {
    E result = slices_.front().zero_like();
    for (const auto& [alpha, c] : coeffs) {
      if (alpha.size() != size()) throw Error(errc::signature, "multi-index length mismatch");
      if (!in_kernel(c))
        throw Error(errc::kernel, "coefficient " + to_string(c) + " at " + alpha.to_string() +
                                      " is not in the joint kernel");
      result = result + slice_power(alpha) * c;
    }
    return result;
  }

  // x^alpha = x_1^alpha_1 ... x_s^alpha_s
  E slice_power(const MultiIndex& alpha) const {
    E r = slices_.front().constant_like(Rational(1));
    for (std::size_t i = 0; i < alpha.size(); ++i)
      for (unsigned k = 0; k < alpha[i]; ++k) r = r * slices_[i];
    return r;
  }

 private:
  void check_chain(std::size_t k, const E& a) const {
    if (k > options_.nilpotence_cap)
      throw Error(errc::cap, "nilpotence cap " + std::to_string(options_.nilpotence_cap) +
                                 " exceeded on " + to_string(a));
  }

  void validate(const std::vector<E>& probes) const {
    const std::size_t s = size();
    for (std::size_t i = 0; i < s; ++i) {
      for (std::size_t j = 0; j < s; ++j) {
        const E v = apply(i, slices_[j]);
        const auto cv = v.constant_value();
        if (!cv || *cv != Rational(i == j ? 1 : 0))
          throw Error(errc::system, "delta_" + std::to_string(i + 1) + "(x_" +
                                        std::to_string(j + 1) + ") = " + to_string(v) +
                                        ", expected " + (i == j ? "1" : "0"));
      }
    }
    std::vector<E> all = slices_;
    all.insert(all.end(), probes.begin(), probes.end());
    for (const E& p : all) {
      for (std::size_t i = 0; i < s; ++i) {
        for (std::size_t j = i + 1; j < s; ++j) {
          if (!(apply(i, apply(j, p)) == apply(j, apply(i, p))))
            throw Error(errc::system, "delta_" + std::to_string(i + 1) + " and delta_" +
                                          std::to_string(j + 1) + " do not commute on " +
                                          to_string(p));
        }
      }
      for (std::size_t i = 0; i < s; ++i) {
        E d = p;
        for (std::size_t k = 0; !d.is_zero(); ++k) {
          check_chain(k, p);
          d = apply(i, d);
        }
      }
    }
  }

  std::vector<Derivation<E>> ders_;
  std::vector<E> slices_;
  LndOptions options_;
};

// The coordinate system (d/dx_1, ..., d/dx_s; x_1, ..., x_s) of a carrier
// with s generators; `like` fixes the algebra.
template <class E>
LndSystem<E> standard_system(const E& like, LndOptions options = {}) {
  std::vector<Derivation<E>> ders;
  std::vector<E> slices;
  for (std::size_t i = 0; i < like.num_vars(); ++i) {
    ders.push_back(Derivation<E>::partial(i));
    slices.push_back(like.variable_like(i));
  }
  return LndSystem<E>(std::move(ders), std::move(slices), {}, options);
}

}  // namespace lnd
