#include "lnd/weyl.hpp"

#include <algorithm>

#include "lnd/error.hpp"
#include "lnd/format.hpp"

namespace lnd {

namespace {

void require_same_signature(const WeylElement& a, const WeylElement& b) {
  if (!(a.signature() == b.signature()))
    throw Error(errc::signature, "signature mismatch: " + a.signature().to_string() +
                                     " vs " + b.signature().to_string());
}

}  // namespace

std::string WeylSignature::to_string() const {
  return "A(" + std::to_string(n) + "," + std::to_string(m) + ")";
}

WeylElement::WeylElement(WeylSignature sig) : sig_(sig) {
  if (sig.s() == 0) throw Error(errc::signature, "A(0,0) has no generators");
}

WeylElement WeylElement::constant(WeylSignature sig, const Rational& c) {
  WeylElement r(sig);
  r.add_term(MultiIndex(sig.s()), c);
  return r;
}

WeylElement WeylElement::variable(WeylSignature sig, std::size_t i) {
  if (i >= sig.s()) throw Error(errc::index, "variable index out of range");
  return monomial(sig, MultiIndex::unit(sig.s(), i));
}

WeylElement WeylElement::monomial(WeylSignature sig, const MultiIndex& alpha,
                                  const Rational& c) {
  if (alpha.size() != sig.s()) throw Error(errc::signature, "exponent length mismatch");
  WeylElement r(sig);
  r.add_term(alpha, c);
  return r;
}

void WeylElement::add_term(const MultiIndex& alpha, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(alpha, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::optional<Rational> WeylElement::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() != 1 || !terms_.begin()->first.is_zero()) return std::nullopt;
  return terms_.begin()->second;
}

std::optional<int> WeylElement::total_degree() const {
  std::optional<int> best;
  for (const auto& [alpha, c] : terms_) {
    const int d = static_cast<int>(alpha.total());
    if (!best || d > *best) best = d;
  }
  return best;
}

bool WeylElement::is_homogeneous() const {
  std::optional<unsigned> deg;
  for (const auto& [alpha, c] : terms_) {
    if (deg && *deg != alpha.total()) return false;
    deg = alpha.total();
  }
  return true;
}

bool WeylElement::is_central() const {
  for (const auto& [alpha, c] : terms_)
    for (std::size_t i = 0; i < 2 * std::size_t{sig_.n}; ++i)
      if (alpha[i]) return false;
  return true;
}

WeylElement WeylElement::pow(unsigned k) const {
  WeylElement result = constant_like(Rational(1));
  for (unsigned i = 0; i < k; ++i) result = result * *this;
  return result;
}

WeylElement operator+(const WeylElement& a, const WeylElement& b) {
  require_same_signature(a, b);
  WeylElement r = a;
  for (const auto& [alpha, c] : b.terms_) r.add_term(alpha, c);
  return r;
}

WeylElement operator-(const WeylElement& a, const WeylElement& b) {
  require_same_signature(a, b);
  WeylElement r = a;
  for (const auto& [alpha, c] : b.terms_) r.add_term(alpha, -c);
  return r;
}

WeylElement operator-(const WeylElement& a) {
  WeylElement r = a.zero_like();
  for (const auto& [alpha, c] : a.terms_) r.terms_.emplace(alpha, -c);
  return r;
}

WeylElement operator*(const Rational& q, const WeylElement& a) {
  WeylElement r = a.zero_like();
  if (q.is_zero()) return r;
  for (const auto& [alpha, c] : a.terms_) r.terms_.emplace(alpha, q * c);
  return r;
}

WeylElement operator*(const WeylElement& a, const WeylElement& b) {
  return weyl_mul(a, b);
}

namespace {

// Reordering d^b x^a for one Weyl pair:
//   d^b x^a = sum_j j! C(b,j) C(a,j) x^{a-j} d^{b-j}.
struct PairTerm {
  unsigned j;
  Rational coeff;
};

std::vector<PairTerm> pair_expansion(unsigned b, unsigned a) {
  std::vector<PairTerm> out;
  const unsigned top = std::min(a, b);
  for (unsigned j = 0; j <= top; ++j)
    out.push_back({j, Rational::factorial(j) * Rational::binomial(b, j) *
                          Rational::binomial(a, j)});
  return out;
}

void multiply_monomials(const WeylSignature& sig, const MultiIndex& lhs,
                        const MultiIndex& rhs, const Rational& coeff,
                        WeylElement& out) {
  const std::size_t n = sig.n;
  MultiIndex base = lhs + rhs;
  std::vector<std::vector<PairTerm>> pairs(n);
  for (std::size_t i = 0; i < n; ++i) pairs[i] = pair_expansion(lhs[n + i], rhs[i]);

  // Walk the cartesian product of per-pair reductions.
  std::vector<std::size_t> pick(n, 0);
  while (true) {
    MultiIndex mono = base;
    Rational c = coeff;
    for (std::size_t i = 0; i < n; ++i) {
      const PairTerm& t = pairs[i][pick[i]];
      mono[i] -= t.j;
      mono[n + i] -= t.j;
      c *= t.coeff;
    }
    out.add_term(mono, c);
    std::size_t k = 0;
    while (k < n && ++pick[k] == pairs[k].size()) pick[k++] = 0;
    if (k == n) break;
  }
}

}  // namespace

WeylElement weyl_mul(const WeylElement& a, const WeylElement& b, unsigned degree_cap) {
  require_same_signature(a, b);
  const auto da = a.total_degree(), db = b.total_degree();
  WeylElement r = a.zero_like();
  if (!da || !db) return r;
  if (static_cast<unsigned>(*da + *db) > degree_cap)
    throw Error(errc::cap, "normal form degree " + std::to_string(*da + *db) +
                               " exceeds cap " + std::to_string(degree_cap));
  for (const auto& [ea, ca] : a.terms())
    for (const auto& [eb, cb] : b.terms())
      multiply_monomials(a.signature(), ea, eb, ca * cb, r);
  return r;
}

WeylElement weyl_ad(const WeylElement& u, const WeylElement& a) {
  return weyl_mul(u, a) - weyl_mul(a, u);
}

WeylElement power_rule_partial(const WeylElement& a, std::size_t i) {
  if (i >= a.num_vars()) throw Error(errc::index, "partial derivative index out of range");
  WeylElement r = a.zero_like();
  for (const auto& [alpha, c] : a.terms()) {
    if (alpha[i] == 0) continue;
    MultiIndex beta = alpha;
    --beta[i];
    r.add_term(beta, c * Rational(alpha[i]));
  }
  return r;
}

WeylElement weyl_partial(const WeylElement& a, std::size_t i) {
  const WeylSignature& sig = a.signature();
  if (i >= sig.s()) throw Error(errc::index, "partial derivative index out of range");
  const std::size_t n = sig.n;
  if (i < n) return weyl_ad(WeylElement::variable(sig, n + i), a);
  if (i < 2 * n) return -weyl_ad(WeylElement::variable(sig, i - n), a);
  return power_rule_partial(a, i);
}

WeylElement apply_pd_multi(const WeylElement& a, const MultiIndex& alpha,
                           bool divide_by_factorial) {
  if (alpha.size() != a.num_vars())
    throw Error(errc::signature, "multi-index length does not match signature");
  WeylElement r = a;
  for (std::size_t i = 0; i < alpha.size() && !r.is_zero(); ++i)
    for (unsigned k = 0; k < alpha[i] && !r.is_zero(); ++k) r = power_rule_partial(r, i);
  if (divide_by_factorial) r = alpha.factorial().inverse() * r;
  return r;
}

WeylElement derive_by_values(const WeylElement& a, const std::vector<WeylElement>& values) {
  const WeylSignature& sig = a.signature();
  if (values.size() != sig.s())
    throw Error(errc::signature, "derivation needs one value per generator");
  WeylElement r = a.zero_like();
  const std::size_t s = sig.s();
  for (const auto& [alpha, c] : a.terms()) {
    for (std::size_t k = 0; k < s; ++k) {
      if (alpha[k] == 0 || values[k].is_zero()) continue;
      MultiIndex prefix(s), suffix(s);
      for (std::size_t l = 0; l < k; ++l) prefix[l] = alpha[l];
      for (std::size_t l = k + 1; l < s; ++l) suffix[l] = alpha[l];
      for (unsigned t = 0; t < alpha[k]; ++t) {
        MultiIndex left = prefix, right = suffix;
        left[k] = t;
        right[k] = alpha[k] - 1 - t;
        r = r + WeylElement::monomial(sig, left, c) * values[k] *
                    WeylElement::monomial(sig, right);
      }
    }
  }
  return r;
}

void check_weyl_derivation(WeylSignature sig, const std::vector<WeylElement>& values) {
  const std::size_t s = sig.s();
  if (values.size() != s)
    throw Error(errc::signature, "derivation needs one value per generator");
  for (const auto& v : values)
    if (!(v.signature() == sig)) throw Error(errc::signature, "derivation value signature mismatch");
  for (std::size_t i = 0; i < s; ++i) {
    const WeylElement xi = WeylElement::variable(sig, i);
    for (std::size_t j = i + 1; j < s; ++j) {
      const WeylElement xj = WeylElement::variable(sig, j);
      // [x_i, x_j] is a scalar, so its image must vanish.
      const WeylElement img = weyl_ad(values[i], xj) + weyl_ad(xi, values[j]);
      if (!img.is_zero())
        throw Error(errc::relation, "derivation does not respect [x" + std::to_string(i + 1) +
                                        ",x" + std::to_string(j + 1) + "]");
    }
  }
}

std::string to_string(const WeylElement& a) {
  std::vector<std::pair<Rational, std::string>> parts;
  for (const auto& [alpha, c] : a.terms()) {
    std::string mono;
    for (std::size_t i = 0; i < alpha.size(); ++i) {
      if (alpha[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += power_string(i, static_cast<int>(alpha[i]));
    }
    parts.emplace_back(c, std::move(mono));
  }
  return join_terms(parts);
}

}  // namespace lnd
