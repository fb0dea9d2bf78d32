#include "lnd/free_algebra.hpp"

#include "lnd/error.hpp"
#include "lnd/format.hpp"

namespace lnd {

namespace {

void require_same_gens(const FreeElement& a, const FreeElement& b) {
  if (a.num_gens() != b.num_gens())
    throw Error(errc::signature, "generator count mismatch: F" + std::to_string(a.num_gens()) +
                                     " vs F" + std::to_string(b.num_gens()));
}

}  // namespace

FreeElement::FreeElement(unsigned num_gens) : num_gens_(num_gens) {}

FreeElement FreeElement::constant(unsigned num_gens, const Rational& c) {
  FreeElement r(num_gens);
  r.add_term({}, c);
  return r;
}

FreeElement FreeElement::variable(unsigned num_gens, std::size_t i) {
  if (i >= num_gens) throw Error(errc::index, "generator index out of range");
  return word(num_gens, Word{static_cast<unsigned>(i)});
}

FreeElement FreeElement::word(unsigned num_gens, Word w, const Rational& c) {
  for (unsigned g : w)
    if (g >= num_gens) throw Error(errc::index, "generator index out of range");
  FreeElement r(num_gens);
  r.add_term(w, c);
  return r;
}

void FreeElement::add_term(const Word& w, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::optional<Rational> FreeElement::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() != 1 || !terms_.begin()->first.empty()) return std::nullopt;
  return terms_.begin()->second;
}

std::optional<int> FreeElement::total_degree() const {
  if (terms_.empty()) return std::nullopt;
  return static_cast<int>(terms_.begin()->first.size());
}

bool FreeElement::is_homogeneous() const {
  return terms_.empty() || terms_.begin()->first.size() == terms_.rbegin()->first.size();
}

FreeElement FreeElement::pow(unsigned k) const {
  FreeElement r = constant_like(Rational(1));
  for (unsigned i = 0; i < k; ++i) r = r * *this;
  return r;
}

FreeElement operator+(const FreeElement& a, const FreeElement& b) {
  require_same_gens(a, b);
  FreeElement r = a;
  for (const auto& [w, c] : b.terms_) r.add_term(w, c);
  return r;
}

FreeElement operator-(const FreeElement& a, const FreeElement& b) {
  require_same_gens(a, b);
  FreeElement r = a;
  for (const auto& [w, c] : b.terms_) r.add_term(w, -c);
  return r;
}

FreeElement operator-(const FreeElement& a) {
  FreeElement r = a.zero_like();
  for (const auto& [w, c] : a.terms_) r.terms_.emplace(w, -c);
  return r;
}

FreeElement operator*(const Rational& q, const FreeElement& a) {
  FreeElement r = a.zero_like();
  if (q.is_zero()) return r;
  for (const auto& [w, c] : a.terms_) r.terms_.emplace(w, q * c);
  return r;
}

FreeElement operator*(const FreeElement& a, const FreeElement& b) {
  require_same_gens(a, b);
  FreeElement r = a.zero_like();
  Word w;
  for (const auto& [wa, ca] : a.terms_) {
    for (const auto& [wb, cb] : b.terms_) {
      w.assign(wa.begin(), wa.end());
      w.insert(w.end(), wb.begin(), wb.end());
      r.add_term(w, ca * cb);
    }
  }
  return r;
}

FreeElement free_mul(const FreeElement& a, const FreeElement& b) { return a * b; }

FreeElement free_partial(const FreeElement& a, std::size_t i) {
  if (i >= a.num_gens()) throw Error(errc::index, "partial derivative index out of range");
  FreeElement r = a.zero_like();
  for (const auto& [w, c] : a.terms()) {
    for (std::size_t pos = 0; pos < w.size(); ++pos) {
      if (w[pos] != i) continue;
      Word v;
      v.reserve(w.size() - 1);
      v.insert(v.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
      v.insert(v.end(), w.begin() + static_cast<std::ptrdiff_t>(pos) + 1, w.end());
      r.add_term(v, c);
    }
  }
  return r;
}

FreeElement free_ad(const FreeElement& u, const FreeElement& a) { return u * a - a * u; }

FreeElement derive_by_values(const FreeElement& a, const std::vector<FreeElement>& values) {
  if (values.size() != a.num_gens())
    throw Error(errc::signature, "derivation needs one value per generator");
  FreeElement r = a.zero_like();
  const unsigned k = a.num_gens();
  for (const auto& [w, c] : a.terms()) {
    for (std::size_t pos = 0; pos < w.size(); ++pos) {
      const FreeElement& v = values[w[pos]];
      if (v.is_zero()) continue;
      Word left(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
      Word right(w.begin() + static_cast<std::ptrdiff_t>(pos) + 1, w.end());
      r = r + FreeElement::word(k, left, c) * v * FreeElement::word(k, right);
    }
  }
  return r;
}

std::string to_string(const FreeElement& a) {
  std::vector<std::pair<Rational, std::string>> parts;
  for (const auto& [w, c] : a.terms()) {
    std::string mono;
    for (unsigned g : w) {
      if (!mono.empty()) mono += '*';
      mono += power_string(g, 1);
    }
    parts.emplace_back(c, std::move(mono));
  }
  return join_terms(parts);
}

}  // namespace lnd
