#include "lnd/comm_poly.hpp"

#include <algorithm>

#include "lnd/error.hpp"
#include "lnd/format.hpp"

namespace lnd {

namespace {

std::vector<bool> normalize_mask(std::size_t n, std::vector<bool> mask) {
  if (mask.empty()) return std::vector<bool>(n, false);
  if (mask.size() != n)
    throw Error(errc::signature, "Laurent mask length does not match variable count");
  return mask;
}

void require_same_space(const CommPoly& a, const CommPoly& b) {
  if (!a.same_space(b))
    throw Error(errc::signature, "polynomials live in different rings");
}

}  // namespace

CommPoly::CommPoly(std::size_t num_vars, std::vector<bool> laurent_mask)
    : num_vars_(num_vars), mask_(normalize_mask(num_vars, std::move(laurent_mask))) {}

CommPoly CommPoly::constant(std::size_t num_vars, const Rational& c,
                            std::vector<bool> laurent_mask) {
  CommPoly p(num_vars, std::move(laurent_mask));
  p.add_term(Exponent(num_vars, 0), c);
  return p;
}

CommPoly CommPoly::variable(std::size_t num_vars, std::size_t i,
                            std::vector<bool> laurent_mask) {
  if (i >= num_vars) throw Error(errc::index, "variable index out of range");
  Exponent e(num_vars, 0);
  e[i] = 1;
  return monomial(num_vars, std::move(e), Rational(1), std::move(laurent_mask));
}

CommPoly CommPoly::monomial(std::size_t num_vars, Exponent e, const Rational& c,
                            std::vector<bool> laurent_mask) {
  CommPoly p(num_vars, std::move(laurent_mask));
  if (e.size() != num_vars) throw Error(errc::signature, "exponent length mismatch");
  p.add_term(e, c);
  return p;
}

CommPoly CommPoly::constant_like(const Rational& c) const {
  return constant(num_vars_, c, mask_);
}

CommPoly CommPoly::variable_like(std::size_t i) const {
  return variable(num_vars_, i, mask_);
}

bool CommPoly::has_laurent() const {
  return std::find(mask_.begin(), mask_.end(), true) != mask_.end();
}

void CommPoly::add_term(const Exponent& e, const Rational& c) {
  if (c.is_zero()) return;
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] < 0 && !mask_[i])
      throw Error(errc::unit, "negative exponent on non-invertible variable x" +
                                  std::to_string(i + 1));
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::optional<Rational> CommPoly::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() != 1) return std::nullopt;
  const auto& [e, c] = *terms_.begin();
  for (int v : e)
    if (v != 0) return std::nullopt;
  return c;
}

std::optional<int> CommPoly::total_degree() const {
  std::optional<int> best;
  for (const auto& [e, c] : terms_) {
    int d = 0;
    for (int v : e) d += v;
    if (!best || d > *best) best = d;
  }
  return best;
}

bool CommPoly::is_homogeneous() const {
  std::optional<int> deg;
  for (const auto& [e, c] : terms_) {
    int d = 0;
    for (int v : e) d += v;
    if (deg && *deg != d) return false;
    deg = d;
  }
  return true;
}

bool CommPoly::is_unit() const {
  if (terms_.size() != 1) return false;
  const auto& e = terms_.begin()->first;
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] != 0 && !mask_[i]) return false;
  return true;
}

CommPoly CommPoly::pow(int exponent) const {
  if (exponent < 0) {
    if (!is_unit())
      throw Error(errc::unit, "negative power of a non-unit " + to_string(*this));
    const auto& [e, c] = *terms_.begin();
    Exponent ne(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) ne[i] = e[i] * exponent;
    return monomial(num_vars_, std::move(ne), c.pow(exponent), mask_);
  }
  CommPoly result = constant_like(Rational(1));
  CommPoly base = *this;
  unsigned k = static_cast<unsigned>(exponent);
  while (k) {
    if (k & 1u) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

CommPoly operator+(const CommPoly& a, const CommPoly& b) {
  require_same_space(a, b);
  CommPoly r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(e, c);
  return r;
}

CommPoly operator-(const CommPoly& a, const CommPoly& b) {
  require_same_space(a, b);
  CommPoly r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
  return r;
}

CommPoly operator-(const CommPoly& a) {
  CommPoly r = a.zero_like();
  for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, -c);
  return r;
}

CommPoly operator*(const Rational& q, const CommPoly& a) {
  CommPoly r = a.zero_like();
  if (q.is_zero()) return r;
  for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, q * c);
  return r;
}

CommPoly operator*(const CommPoly& a, const CommPoly& b) {
  require_same_space(a, b);
  CommPoly r = a.zero_like();
  Exponent e(a.num_vars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

CommPoly comm_mul(const CommPoly& a, const CommPoly& b) { return a * b; }

CommPoly comm_partial(const CommPoly& a, std::size_t i) {
  if (i >= a.num_vars())
    throw Error(errc::index, "partial derivative index out of range");
  CommPoly r = a.zero_like();
  for (const auto& [e, c] : a.terms()) {
    if (e[i] == 0) continue;
    Exponent ne = e;
    --ne[i];
    r.add_term(ne, c * Rational(e[i]));
  }
  return r;
}

CommPoly comm_substitute(const CommPoly& a, const std::vector<CommPoly>& images) {
  if (images.size() != a.num_vars())
    throw Error(errc::signature, "substitution needs one image per variable");
  if (images.empty()) return a;
  const CommPoly& like = images.front();
  for (const auto& img : images) require_same_space(like, img);

  // Powers are cached per variable and exponent.
  std::vector<std::map<int, CommPoly>> cache(images.size());
  auto power = [&](std::size_t i, int k) -> const CommPoly& {
    auto it = cache[i].find(k);
    if (it == cache[i].end()) it = cache[i].emplace(k, images[i].pow(k)).first;
    return it->second;
  };

  CommPoly result = like.zero_like();
  for (const auto& [e, c] : a.terms()) {
    CommPoly term = like.constant_like(c);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) term = term * power(i, e[i]);
    result = result + term;
  }
  return result;
}

namespace {

// Laplace expansion over the remaining columns; rows are consumed in order.
CommPoly minor_det(const std::vector<std::vector<CommPoly>>& m, std::size_t row,
                   unsigned columns_left, std::map<unsigned, CommPoly>& memo,
                   const CommPoly& one) {
  if (row == m.size()) return one;
  if (auto it = memo.find(columns_left); it != memo.end()) return it->second;
  CommPoly acc = one.zero_like();
  int sign = 1;
  for (std::size_t col = 0; col < m.size(); ++col) {
    if (!(columns_left & (1u << col))) continue;
    if (!m[row][col].is_zero()) {
      CommPoly sub = minor_det(m, row + 1, columns_left & ~(1u << col), memo, one);
      CommPoly t = m[row][col] * sub;
      acc = sign > 0 ? acc + t : acc - t;
    }
    sign = -sign;
  }
  memo.emplace(columns_left, acc);
  return acc;
}

}  // namespace

CommPoly jacobian_det(const std::vector<CommPoly>& images) {
  const std::size_t m = images.size();
  for (const auto& img : images) {
    if (img.num_vars() != m)
      throw Error(errc::signature, "Jacobian needs m images in m variables");
    if (img.has_laurent())
      throw Error(errc::signature, "Jacobian is defined for polynomial images only");
  }
  if (m == 0) return CommPoly::constant(0, Rational(1));
  if (m > 16) throw Error(errc::signature, "Jacobian size too large");
  std::vector<std::vector<CommPoly>> jac;
  jac.reserve(m);
  for (const auto& img : images) {
    std::vector<CommPoly> row;
    for (std::size_t j = 0; j < m; ++j) row.push_back(comm_partial(img, j));
    jac.push_back(std::move(row));
  }
  std::map<unsigned, CommPoly> memo;
  return minor_det(jac, 0, (1u << m) - 1, memo, images.front().constant_like(Rational(1)));
}

CommPoly derive_by_values(const CommPoly& a, const std::vector<CommPoly>& values) {
  if (values.size() != a.num_vars())
    throw Error(errc::signature, "derivation needs one value per variable");
  CommPoly r = a.zero_like();
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (values[k].is_zero()) continue;
    r = r + values[k] * comm_partial(a, k);
  }
  return r;
}

std::string to_string(const CommPoly& a) {
  std::vector<std::pair<Rational, std::string>> parts;
  for (const auto& [e, c] : a.terms()) {
    std::string mono;
    auto emit = [&](bool negative) {
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0 || (e[i] < 0) != negative) continue;
        if (!mono.empty()) mono += '*';
        mono += power_string(i, e[i]);
      }
    };
    emit(false);
    emit(true);
    parts.emplace_back(c, std::move(mono));
  }
  return join_terms(parts);
}

}  // namespace lnd
