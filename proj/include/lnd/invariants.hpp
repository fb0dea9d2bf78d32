#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "lnd/automorphism.hpp"
#include "lnd/comm_poly.hpp"
#include "lnd/error.hpp"
#include "lnd/free_algebra.hpp"
#include "lnd/linear_algebra.hpp"
#include "lnd/multi_index.hpp"
#include "lnd/projections.hpp"
#include "lnd/weyl.hpp"

namespace lnd {

enum class WitnessKind { z, x };

// A word d = ad(x_{k1}) ad(x_{k2}) ... ad(x_{kL}) over the slices, stored as
// (k1, ..., kL) and applied right to left.
using AdWord = std::vector<std::size_t>;

// z: d(phi(delta^alpha y_source / alpha!)); x: d(x_source) with d nonempty.
template <class E>
struct GeneratorWitness {
  WitnessKind kind;
  AdWord word;
  MultiIndex alpha;
  std::size_t source;
  E value;
};

// "id" or "ad(x1)ad(x2)"
std::string format_word(const AdWord& word);

template <class E>
std::string format_witness(const GeneratorWitness<E>& w) {
  const bool z = w.kind == WitnessKind::z;
  return std::string(z ? "z " : "x ") + format_word(w.word) + " " +
         (z ? w.alpha.to_string() : std::string("-")) + " " + (z ? "y" : "x") +
         std::to_string(w.source + 1) + " : " + to_string(w.value);
}

namespace detail {

template <class E>
bool witness_less(const GeneratorWitness<E>& a, const GeneratorWitness<E>& b) {
  if (a.word.size() != b.word.size()) return a.word.size() < b.word.size();
  if (a.kind != b.kind) return a.kind == WitnessKind::z;
  if (a.word != b.word) return a.word < b.word;
  if (a.alpha != b.alpha) {
    if (a.alpha.size() != b.alpha.size()) return a.alpha.size() < b.alpha.size();
    return GradedLexLess{}(a.alpha, b.alpha);
  }
  return a.source < b.source;
}

// All words of length 1..bound applied to `base`, keyed by word.
template <class E>
std::vector<std::pair<AdWord, E>> apply_words(const LndSystem<E>& sys, const E& base,
                                              std::size_t bound, bool include_empty) {
  std::vector<std::pair<AdWord, E>> out;
  std::vector<std::pair<AdWord, E>> layer{{AdWord{}, base}};
  if (include_empty) out.push_back(layer.front());
  for (std::size_t len = 1; len <= bound; ++len) {
    std::vector<std::pair<AdWord, E>> next;
    for (const auto& [w, v] : layer) {
      for (std::size_t k = 0; k < sys.size(); ++k) {
        AdWord nw{k};
        nw.insert(nw.end(), w.begin(), w.end());
        next.emplace_back(std::move(nw), inner_derivative(sys.slice(k), v));
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

}  // namespace detail

// The generators z_{d,alpha,i} (len(d) <= word_bound) and x_{d',j}
// (1 <= len(d') <= word_bound) of the joint kernel, for algebra generators
// y. Witnesses whose value exceeds `degree_bound` in total degree are
// skipped. Sorted canonically; zero values and repeated values dropped.
template <class E>
std::vector<GeneratorWitness<E>> enumerate_generators(const LndSystem<E>& sys,
                                                      const std::vector<E>& generators,
                                                      std::size_t word_bound,
                                                      std::optional<int> degree_bound = {}) {
  std::vector<GeneratorWitness<E>> all;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    for (const auto& [alpha, v] : sys.derivative_table(generators[i])) {
      const E base = sys.phi(alpha.factorial().inverse() * v);
      for (auto& [word, value] : detail::apply_words(sys, base, word_bound, true))
        all.push_back({WitnessKind::z, std::move(word), alpha, i, std::move(value)});
    }
  }
  for (std::size_t j = 0; j < sys.size(); ++j) {
    for (auto& [word, value] : detail::apply_words(sys, sys.slice(j), word_bound, false))
      all.push_back({WitnessKind::x, std::move(word), MultiIndex(sys.size()), j, std::move(value)});
  }
  std::stable_sort(all.begin(), all.end(), detail::witness_less<E>);

  std::vector<GeneratorWitness<E>> out;
  for (auto& w : all) {
    if (w.value.is_zero()) continue;
    if (degree_bound && w.value.total_degree() > *degree_bound) continue;
    const bool duplicate = std::any_of(out.begin(), out.end(),
                                       [&](const auto& o) { return o.value == w.value; });
    if (duplicate) continue;
    if (!sys.in_kernel(w.value))
      throw Error(errc::kernel, "witness " + format_witness(w) + " is not a constant");
    out.push_back(std::move(w));
  }
  return out;
}

// True iff phi(value) = 0, i.e. value lies in sum_i x_i A.
template <class E>
bool relation_check(const LndSystem<E>& sys, const E& value) {
  return sys.phi(value).is_zero();
}

// Basis, in reduced echelon form, of the span of `elems`. Coordinates are
// the carrier's monomials in its term order.
template <class E>
std::vector<E> span_basis(const std::vector<E>& elems) {
  using Key = typename E::TermMap::key_type;
  using Cmp = typename E::TermMap::key_compare;
  if (elems.empty()) return {};
  std::map<Key, std::size_t, Cmp> cols;
  for (const E& e : elems)
    for (const auto& [k, c] : e.terms()) cols.emplace(k, 0);
  std::vector<Key> keys;
  for (auto& [k, idx] : cols) {
    idx = keys.size();
    keys.push_back(k);
  }
  Matrix m;
  for (const E& e : elems) {
    std::vector<Rational> row(keys.size());
    for (const auto& [k, c] : e.terms()) row[cols.at(k)] = c;
    m.push_back(std::move(row));
  }
  rref(m, keys.size());
  std::vector<E> out;
  for (const auto& row : m) {
    E e = elems.front().zero_like();
    for (std::size_t c = 0; c < keys.size(); ++c) e.add_term(keys[c], row[c]);
    out.push_back(std::move(e));
  }
  return out;
}

// dims[d] = dimension of the degree-d component of the subalgebra generated
// by homogeneous `generators`, for d = 0..max_degree. Built as the span of
// products u*w with u in lower components and w a generator.
template <class E>
std::vector<std::size_t> generated_dimensions(const std::vector<E>& generators,
                                              unsigned max_degree, const E& like) {
  std::map<int, std::vector<E>> by_degree;
  for (const E& g : generators) {
    if (g.is_zero()) continue;
    if (!g.is_homogeneous())
      throw Error(errc::homogeneity, to_string(g) + " is not homogeneous");
    const int d = *g.total_degree();
    if (d > 0 && d <= static_cast<int>(max_degree)) by_degree[d].push_back(g);
  }
  std::vector<std::vector<E>> component(max_degree + 1);
  component[0] = {like.constant_like(Rational(1))};
  for (unsigned d = 1; d <= max_degree; ++d) {
    std::vector<E> spanning;
    if (auto it = by_degree.find(static_cast<int>(d)); it != by_degree.end())
      spanning = it->second;
    for (unsigned a = 1; a < d; ++a) {
      auto it = by_degree.find(static_cast<int>(d - a));
      if (it == by_degree.end()) continue;
      for (const E& u : component[a])
        for (const E& w : it->second) spanning.push_back(u * w);
    }
    component[d] = span_basis(spanning);
  }
  std::vector<std::size_t> dims;
  for (const auto& c : component) dims.push_back(c.size());
  return dims;
}

// Basis of the joint kernel of `ders` on the degree-d component of F_k,
// computed by exact linear algebra on all words of length d. Throws
// `homogeneity` if a derivation does not lower the degree by one.
std::vector<FreeElement> graded_kernel_oracle(unsigned num_gens,
                                              const std::vector<Derivation<FreeElement>>& ders,
                                              unsigned degree);
// Same over P_m (no Laurent variables).
std::vector<CommPoly> graded_kernel_oracle(std::size_t num_vars,
                                           const std::vector<Derivation<CommPoly>>& ders,
                                           unsigned degree);

// phi(y_1), ..., phi(y_r) over a commutative carrier; each is checked to be a
// constant.
std::vector<CommPoly> commutative_invariant_images(const LndSystem<CommPoly>& sys,
                                                   const std::vector<CommPoly>& generators);

// K[x1^{+-1}][x2..xn] with delta = x1 d/dx2 + x2 d/dx3 + ... + x_{n-1} d/dx_n
// and slice x2/x1.
LndSystem<CommPoly> weitzenboeck_system(std::size_t n);
// sum_{k=0}^{i-1} (-1)^k (x2/x1)^k x_{i-k} / k!, i 1-based.
CommPoly weitzenboeck_closed_form(std::size_t n, std::size_t i);
// phi(x3), ..., phi(xn), each checked against the closed form and against
// delta.
std::vector<CommPoly> weitzenboeck_invariants(std::size_t n);

// sigma(x_i) = x_i + x_{i-1} on P_m, x_0 = 1.
Automorphism shift_automorphism(unsigned m);
// (log sigma; x1) for the shift automorphism.
LndSystem<WeylElement> shift_system(unsigned m);
// phi(x2), ..., phi(xm) for the shift system, each checked to be sigma-fixed.
std::vector<WeylElement> shift_invariants(unsigned m);

}  // namespace lnd
