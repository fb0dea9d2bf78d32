#include "lnd/invariants.hpp"

#include <map>
#include <string>

namespace lnd {

std::string format_word(const AdWord& word) {
  if (word.empty()) return "id";
  std::string out;
  for (std::size_t k : word) out += "ad(x" + std::to_string(k + 1) + ")";
  return out;
}

namespace {

template <class E>
std::vector<E> kernel_of(const std::vector<E>& basis, const std::vector<Derivation<E>>& ders,
                         unsigned degree) {
  using Key = typename E::TermMap::key_type;
  using Cmp = typename E::TermMap::key_compare;
  struct Entry {
    std::size_t row, col;
    Rational value;
  };
  std::vector<std::map<Key, std::size_t, Cmp>> row_index(ders.size());
  std::vector<Entry> entries;
  std::size_t rows = 0;
  for (std::size_t c = 0; c < basis.size(); ++c) {
    for (std::size_t i = 0; i < ders.size(); ++i) {
      const E img = ders[i](basis[c]);
      if (img.is_zero()) continue;
      if (!img.is_homogeneous() || *img.total_degree() + 1 != static_cast<int>(degree))
        throw Error(errc::homogeneity, "derivation " + std::to_string(i + 1) + " maps " +
                                           to_string(basis[c]) + " to " + to_string(img) +
                                           ", not of degree " + std::to_string(int(degree) - 1));
      for (const auto& [k, v] : img.terms()) {
        auto [it, inserted] = row_index[i].try_emplace(k, rows);
        if (inserted) ++rows;
        entries.push_back({it->second, c, v});
      }
    }
  }
  Matrix m(rows, std::vector<Rational>(basis.size()));
  for (const auto& e : entries) m[e.row][e.col] = e.value;
  std::vector<E> out;
  for (const auto& v : nullspace(std::move(m), basis.size())) {
    E e = basis.front().zero_like();
    for (std::size_t c = 0; c < basis.size(); ++c)
      if (!v[c].is_zero()) e = e + v[c] * basis[c];
    out.push_back(std::move(e));
  }
  return out;
}

void all_words(unsigned num_gens, unsigned length, Word& cur, std::vector<Word>& out) {
  if (cur.size() == length) {
    out.push_back(cur);
    return;
  }
  for (unsigned g = 0; g < num_gens; ++g) {
    cur.push_back(g);
    all_words(num_gens, length, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<FreeElement> graded_kernel_oracle(unsigned num_gens,
                                              const std::vector<Derivation<FreeElement>>& ders,
                                              unsigned degree) {
  if (num_gens == 0) throw Error(errc::signature, "free algebra needs at least one generator");
  std::vector<Word> words;
  Word cur;
  all_words(num_gens, degree, cur, words);
  std::vector<FreeElement> basis;
  for (auto& w : words) basis.push_back(FreeElement::word(num_gens, std::move(w)));
  return kernel_of(basis, ders, degree);
}

std::vector<CommPoly> graded_kernel_oracle(std::size_t num_vars,
                                           const std::vector<Derivation<CommPoly>>& ders,
                                           unsigned degree) {
  if (num_vars == 0) throw Error(errc::signature, "polynomial ring needs at least one variable");
  std::vector<CommPoly> basis;
  for (const MultiIndex& alpha : indices_of_degree(num_vars, degree)) {
    Exponent e(alpha.begin(), alpha.end());
    basis.push_back(CommPoly::monomial(num_vars, std::move(e), Rational(1)));
  }
  return kernel_of(basis, ders, degree);
}

std::vector<CommPoly> commutative_invariant_images(const LndSystem<CommPoly>& sys,
                                                   const std::vector<CommPoly>& generators) {
  std::vector<CommPoly> out;
  for (const auto& y : generators) {
    CommPoly v = sys.phi(y);
    if (!sys.in_kernel(v))
      throw Error(errc::kernel, "phi(" + to_string(y) + ") = " + to_string(v) +
                                    " is not a constant");
    out.push_back(std::move(v));
  }
  return out;
}

LndSystem<CommPoly> weitzenboeck_system(std::size_t n) {
  if (n < 2) throw Error(errc::index, "the Weitzenboeck derivation needs n >= 2");
  std::vector<bool> mask(n, false);
  mask[0] = true;
  const CommPoly like(n, mask);
  Derivation<CommPoly> delta;
  for (std::size_t k = 1; k < n; ++k)
    delta = delta + Derivation<CommPoly>::partial(k).times(like.variable_like(k - 1));
  const CommPoly slice = like.variable_like(1) * like.variable_like(0).pow(-1);
  std::vector<CommPoly> probes;
  for (std::size_t k = 0; k < n; ++k) probes.push_back(like.variable_like(k));
  return LndSystem<CommPoly>({delta}, {slice}, probes);
}

CommPoly weitzenboeck_closed_form(std::size_t n, std::size_t i) {
  if (i < 1 || i > n) throw Error(errc::index, "variable index out of range");
  std::vector<bool> mask(n, false);
  mask[0] = true;
  const CommPoly like(n, mask);
  const CommPoly t = like.variable_like(1) * like.variable_like(0).pow(-1);
  CommPoly out = like.zero_like();
  CommPoly tk = like.constant_like(Rational(1));
  for (std::size_t k = 0; k < i; ++k) {
    const Rational c = Rational(k % 2 ? -1 : 1) / Rational::factorial(static_cast<unsigned>(k));
    out = out + c * (tk * like.variable_like(i - 1 - k));
    tk = tk * t;
  }
  return out;
}

std::vector<CommPoly> weitzenboeck_invariants(std::size_t n) {
  if (n < 3) throw Error(errc::index, "Weitzenboeck invariants need n >= 3");
  const LndSystem<CommPoly> sys = weitzenboeck_system(n);
  std::vector<CommPoly> out;
  for (std::size_t i = 3; i <= n; ++i) {
    CommPoly v = sys.phi(sys.slice(0).variable_like(i - 1));
    if (!(v == weitzenboeck_closed_form(n, i)))
      throw Error(errc::system, "phi(x" + std::to_string(i) + ") = " + to_string(v) +
                                    " differs from the closed form");
    if (!sys.in_kernel(v))
      throw Error(errc::kernel, "phi(x" + std::to_string(i) + ") is not a constant");
    out.push_back(std::move(v));
  }
  return out;
}

Automorphism shift_automorphism(unsigned m) {
  if (m == 0) throw Error(errc::index, "shift automorphism needs m >= 1");
  const WeylSignature sig{0, m};
  std::vector<WeylElement> images;
  for (std::size_t i = 0; i < m; ++i) {
    const WeylElement prev =
        i == 0 ? WeylElement::constant(sig, Rational(1)) : WeylElement::variable(sig, i - 1);
    images.push_back(WeylElement::variable(sig, i) + prev);
  }
  return aut_verify(sig, std::move(images));
}

LndSystem<WeylElement> shift_system(unsigned m) {
  const Automorphism sigma = shift_automorphism(m);
  const GeneratorDerivation delta = log_aut(sigma);
  std::vector<WeylElement> probes;
  for (std::size_t i = 0; i < m; ++i) probes.push_back(WeylElement::variable(sigma.signature, i));
  return LndSystem<WeylElement>({Derivation<WeylElement>::by_values(delta.values)},
                                {WeylElement::variable(sigma.signature, 0)}, probes);
}

std::vector<WeylElement> shift_invariants(unsigned m) {
  const Automorphism sigma = shift_automorphism(m);
  const LndSystem<WeylElement> sys = shift_system(m);
  std::vector<WeylElement> out;
  for (std::size_t i = 1; i < m; ++i) {
    WeylElement v = sys.phi(WeylElement::variable(sigma.signature, i));
    if (!(aut_apply(sigma, v) == v))
      throw Error(errc::system, "phi(x" + std::to_string(i + 1) + ") is not shift-fixed");
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace lnd
