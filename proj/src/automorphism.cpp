#include "lnd/automorphism.hpp"

#include <map>
#include <optional>
#include <string>

#include "lnd/error.hpp"

namespace lnd {

namespace {

std::string gen_name(std::size_t i) { return "x" + std::to_string(i + 1); }

std::vector<WeylElement> generators(WeylSignature sig) {
  std::vector<WeylElement> out;
  for (std::size_t i = 0; i < sig.s(); ++i) out.push_back(WeylElement::variable(sig, i));
  return out;
}

void require_verified(const Automorphism& sigma) {
  if (!sigma.verified) throw Error(errc::unverified, "automorphism has not been verified");
}

// a(x'_1, ..., x'_s), substituting into normal-ordered monomials left to right.
WeylElement substitute(const std::vector<WeylElement>& images, const WeylElement& a) {
  const std::size_t s = images.size();
  std::vector<std::vector<WeylElement>> powers(s);
  auto power = [&](std::size_t i, unsigned k) -> const WeylElement& {
    auto& p = powers[i];
    if (p.empty()) p.push_back(images[i].constant_like(Rational(1)));
    while (p.size() <= k) p.push_back(p.back() * images[i]);
    return p[k];
  };
  WeylElement result = a.zero_like();
  for (const auto& [alpha, c] : a.terms()) {
    WeylElement t = a.constant_like(c);
    for (std::size_t i = 0; i < s; ++i)
      if (alpha[i]) t = t * power(i, alpha[i]);
    result = result + t;
  }
  return result;
}

bool fixes_generators(const std::vector<WeylElement>& outer,
                      const std::vector<WeylElement>& inner) {
  for (std::size_t i = 0; i < inner.size(); ++i)
    if (!(substitute(outer, inner[i]) == inner[i].variable_like(i))) return false;
  return true;
}

using WeylMatrix = std::vector<std::vector<WeylElement>>;

// Laplace expansion along rows; entries are central, so the order of
// factors does not matter.
WeylElement det_rec(const WeylMatrix& a, std::size_t row, unsigned cols,
                    std::map<unsigned, WeylElement>& memo, const WeylElement& one) {
  if (row == a.size()) return one;
  if (auto it = memo.find(cols); it != memo.end()) return it->second;
  WeylElement acc = one.zero_like();
  bool plus = true;
  for (std::size_t c = 0; c < a.size(); ++c) {
    if (!(cols & (1u << c))) continue;
    if (!a[row][c].is_zero()) {
      WeylElement t = a[row][c] * det_rec(a, row + 1, cols & ~(1u << c), memo, one);
      acc = plus ? acc + t : acc - t;
    }
    plus = !plus;
  }
  memo.emplace(cols, acc);
  return acc;
}

WeylElement determinant(const WeylMatrix& a, const WeylElement& one) {
  std::map<unsigned, WeylElement> memo;
  return det_rec(a, 0, (1u << a.size()) - 1, memo, one);
}

// (-1)^{j+k} times the minor of `a` without row j and column k.
WeylElement cofactor(const WeylMatrix& a, std::size_t j, std::size_t k, const WeylElement& one) {
  WeylMatrix sub;
  for (std::size_t r = 0; r < a.size(); ++r) {
    if (r == j) continue;
    std::vector<WeylElement> row;
    for (std::size_t c = 0; c < a.size(); ++c)
      if (c != k) row.push_back(a[r][c]);
    sub.push_back(std::move(row));
  }
  WeylElement d = determinant(sub, one);
  return (j + k) % 2 ? -d : d;
}

// Some w with sys.apply(k, w) = g[k] for every k, assuming the g[k] are
// compatible. Taylor expansion of w without its constant term: for alpha != 0
// with first nonzero entry k, delta^alpha(w) = delta^{alpha - e_k}(g_k).
WeylElement potential(const LndSystem<WeylElement>& sys, const std::vector<WeylElement>& g) {
  WeylElement w = g.front().zero_like();
  for (std::size_t k = 0; k < g.size(); ++k) {
    for (const auto& [beta, v] : sys.derivative_table(g[k])) {
      bool leading = true;
      for (std::size_t l = 0; l < k; ++l) leading = leading && beta[l] == 0;
      if (!leading) continue;
      const MultiIndex alpha = beta.plus_unit(k);
      w = w + sys.slice_power(alpha) * sys.phi(alpha.factorial().inverse() * v);
    }
  }
  return w;
}

Rational central_jacobian(const Automorphism& sigma) {
  const WeylSignature& sig = sigma.signature;
  std::vector<CommPoly> central;
  for (std::size_t j = 2 * std::size_t{sig.n}; j < sig.s(); ++j)
    central.push_back(central_to_comm(sigma.images[j]));
  const CommPoly det = jacobian_det(central);
  const auto c = det.constant_value();
  if (!c || c->is_zero())
    throw Error(errc::jacobian, "Jacobian determinant " + to_string(det) +
                                    " is not a nonzero constant");
  return *c;
}

}  // namespace

CommPoly central_to_comm(const WeylElement& a) {
  const WeylSignature& sig = a.signature();
  if (!a.is_central()) throw Error(errc::signature, to_string(a) + " is not central");
  const std::size_t off = 2 * std::size_t{sig.n};
  CommPoly p(sig.m);
  for (const auto& [alpha, c] : a.terms()) {
    Exponent e(sig.m);
    for (std::size_t k = 0; k < sig.m; ++k) e[k] = static_cast<int>(alpha[off + k]);
    p.add_term(e, c);
  }
  return p;
}

WeylElement comm_to_central(WeylSignature sig, const CommPoly& p) {
  if (p.num_vars() != sig.m || p.has_laurent())
    throw Error(errc::signature, "polynomial does not match the central variables");
  const std::size_t off = 2 * std::size_t{sig.n};
  WeylElement a(sig);
  for (const auto& [e, c] : p.terms()) {
    MultiIndex alpha(sig.s());
    for (std::size_t k = 0; k < sig.m; ++k) alpha[off + k] = static_cast<unsigned>(e[k]);
    a.add_term(alpha, c);
  }
  return a;
}

Automorphism aut_verify(WeylSignature sig, std::vector<WeylElement> images) {
  const std::size_t n = sig.n, s = sig.s();
  if (images.size() != s)
    throw Error(errc::signature, "expected " + std::to_string(s) + " images, got " +
                                     std::to_string(images.size()));
  for (const auto& img : images)
    if (!(img.signature() == sig))
      throw Error(errc::signature, "image signature does not match " + sig.to_string());

  auto require_bracket = [&](std::size_t a, std::size_t b, int expected) {
    const WeylElement br = weyl_ad(images[a], images[b]);
    const auto c = br.constant_value();
    if (!c || *c != Rational(expected))
      throw Error(errc::relation, "[s(" + gen_name(a) + "),s(" + gen_name(b) + ")] != " +
                                      std::to_string(expected));
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) require_bracket(n + i, j, i == j ? 1 : 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      require_bracket(i, j, 0);
      require_bracket(n + i, n + j, 0);
    }
  for (std::size_t k = 2 * n; k < s; ++k)
    if (!images[k].is_central())
      throw Error(errc::relation, "s(" + gen_name(k) + ") is not central");

  Automorphism sigma{sig, std::move(images), false};
  central_jacobian(sigma);
  sigma.verified = true;
  return sigma;
}

Automorphism aut_identity(WeylSignature sig) { return aut_verify(sig, generators(sig)); }

WeylElement aut_apply(const Automorphism& sigma, const WeylElement& a) {
  require_verified(sigma);
  if (!(a.signature() == sigma.signature))
    throw Error(errc::signature, "element signature does not match the automorphism");
  return substitute(sigma.images, a);
}

Automorphism aut_compose(const Automorphism& sigma, const Automorphism& tau) {
  require_verified(sigma);
  require_verified(tau);
  if (!(sigma.signature == tau.signature))
    throw Error(errc::signature, "cannot compose automorphisms of different algebras");
  std::vector<WeylElement> images;
  for (const auto& t : tau.images) images.push_back(substitute(sigma.images, t));
  return aut_verify(sigma.signature, std::move(images));
}

bool GeneratorDerivation::is_zero() const {
  for (const auto& v : values)
    if (!v.is_zero()) return false;
  return true;
}

GeneratorDerivation make_derivation(WeylSignature sig, std::vector<WeylElement> values) {
  check_weyl_derivation(sig, values);
  return GeneratorDerivation{sig, std::move(values)};
}

std::vector<Derivation<WeylElement>> twisted_partials(const Automorphism& sigma,
                                                      LndOptions options) {
  require_verified(sigma);
  const WeylSignature& sig = sigma.signature;
  const std::size_t n = sig.n, m = sig.m, s = sig.s();
  const auto& xp = sigma.images;
  using D = Derivation<WeylElement>;

  std::vector<D> out(s);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = D::inner(xp[n + i]);
    out[n + i] = D::inner(xp[i]).scaled(Rational(-1));
  }

  if (m > 0) {
    const Rational inv_delta = central_jacobian(sigma).inverse();
    const WeylElement one = WeylElement::constant(sig, Rational(1));
    WeylMatrix jac(m, std::vector<WeylElement>(m, one.zero_like()));
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k) jac[j][k] = power_rule_partial(xp[2 * n + j], 2 * n + k);

    std::optional<LndSystem<WeylElement>> weyl_part;
    for (std::size_t j = 0; j < m; ++j) {
      D d;
      for (std::size_t k = 0; k < m; ++k) {
        const WeylElement cof = cofactor(jac, j, k, one);
        if (!cof.is_zero()) d = d + D::partial(2 * n + k).times(cof).scaled(inv_delta);
      }
      if (n > 0) {
        // d may move the Weyl images when they involve central variables;
        // subtract that with an inner derivation ad(w).
        std::vector<WeylElement> g(2 * n, one.zero_like());
        bool needed = false;
        for (std::size_t i = 0; i < n; ++i) {
          g[i] = d(xp[n + i]);
          g[n + i] = -d(xp[i]);
          needed = needed || !g[i].is_zero() || !g[n + i].is_zero();
        }
        if (needed) {
          if (!weyl_part)
            weyl_part.emplace(std::vector<D>(out.begin(), out.begin() + 2 * n),
                              std::vector<WeylElement>(xp.begin(), xp.begin() + 2 * n),
                              std::vector<WeylElement>{}, options);
          d = d + D::inner(potential(*weyl_part, g));
        }
      }
      out[2 * n + j] = d;
    }
  }

  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j) {
      const auto c = out[i](xp[j]).constant_value();
      if (!c || *c != Rational(i == j ? 1 : 0))
        throw Error(errc::system, "twisted partial d'" + std::to_string(i + 1) + " fails on s(" +
                                      gen_name(j) + ")");
    }
  return out;
}

LndSystem<WeylElement> twisted_system(const Automorphism& sigma, LndOptions options) {
  return LndSystem<WeylElement>(twisted_partials(sigma, options), sigma.images,
                                generators(sigma.signature), options);
}

Automorphism invert(const Automorphism& sigma, LndOptions options) {
  require_verified(sigma);
  const WeylSignature& sig = sigma.signature;
  const LndSystem<WeylElement> sys = twisted_system(sigma, options);
  std::vector<WeylElement> images;
  for (std::size_t i = 0; i < sig.s(); ++i) {
    WeylElement r(sig);
    for (const auto& [alpha, v] : sys.derivative_table(WeylElement::variable(sig, i))) {
      const WeylElement c = sys.phi(alpha.factorial().inverse() * v);
      const auto cv = c.constant_value();
      if (!cv)
        throw Error(errc::nonconstant, "coefficient " + to_string(c) + " at " +
                                           alpha.to_string() + " in s^-1(" + gen_name(i) +
                                           ") is not a constant");
      r.add_term(alpha, *cv);
    }
    images.push_back(std::move(r));
  }
  if (!fixes_generators(sigma.images, images) || !fixes_generators(images, sigma.images))
    throw Error(errc::unverified, "computed inverse does not compose to the identity");
  return aut_verify(sig, std::move(images));
}

GeneratorDerivation log_aut(const Automorphism& sigma, LndOptions options) {
  require_verified(sigma);
  const WeylSignature& sig = sigma.signature;
  std::vector<WeylElement> values;
  for (std::size_t i = 0; i < sig.s(); ++i) {
    WeylElement b = WeylElement::variable(sig, i);
    WeylElement v(sig);
    for (std::size_t k = 1;; ++k) {
      b = substitute(sigma.images, b) - b;
      if (b.is_zero()) break;
      if (k > options.nilpotence_cap)
        throw Error(errc::cap, "s - id is not nilpotent on " + gen_name(i) + " within cap " +
                                   std::to_string(options.nilpotence_cap));
      const Rational c = Rational(k % 2 ? 1 : -1) / Rational(static_cast<long>(k));
      v = v + c * b;
    }
    values.push_back(std::move(v));
  }
  return make_derivation(sig, std::move(values));
}

Automorphism exp_der(const GeneratorDerivation& d, LndOptions options) {
  const WeylSignature& sig = d.signature;
  check_weyl_derivation(sig, d.values);
  std::vector<WeylElement> images;
  for (std::size_t i = 0; i < sig.s(); ++i) {
    WeylElement b = WeylElement::variable(sig, i);
    WeylElement img = b;
    for (std::size_t k = 1;; ++k) {
      b = Rational(1) / Rational(static_cast<long>(k)) * d(b);
      if (b.is_zero()) break;
      if (k > options.nilpotence_cap)
        throw Error(errc::cap, "derivation is not nilpotent on " + gen_name(i) + " within cap " +
                                   std::to_string(options.nilpotence_cap));
      img = img + b;
    }
    images.push_back(std::move(img));
  }
  return aut_verify(sig, std::move(images));
}

DiffOpSeries aut_to_series(const Automorphism& sigma, unsigned max_order) {
  require_verified(sigma);
  const WeylSignature& sig = sigma.signature;
  if (sig.n != 0)
    throw Error(errc::signature, "series of automorphisms need a polynomial signature");
  const std::size_t s = sig.s();
  std::vector<WeylElement> diff;
  for (std::size_t i = 0; i < s; ++i)
    diff.push_back(sigma.images[i] - WeylElement::variable(sig, i));

  // Scaled powers (sigma(x_i) - x_i)^k / k!, cached per variable.
  std::vector<std::vector<WeylElement>> scaled(s);
  auto term = [&](std::size_t i, unsigned k) -> const WeylElement& {
    auto& p = scaled[i];
    if (p.empty()) p.push_back(WeylElement::constant(sig, Rational(1)));
    while (p.size() <= k)
      p.push_back(Rational(1) / Rational(static_cast<long>(p.size())) * (p.back() * diff[i]));
    return p[k];
  };

  DiffOpSeries out{sig, max_order, {}};
  for (unsigned d = 0; d <= max_order; ++d) {
    for (const MultiIndex& alpha : indices_of_degree(s, d)) {
      WeylElement c = WeylElement::constant(sig, Rational(1));
      for (std::size_t i = 0; i < s && !c.is_zero(); ++i)
        if (alpha[i]) c = c * term(i, alpha[i]);
      if (!c.is_zero()) out.coeffs.emplace(alpha, std::move(c));
    }
  }
  return out;
}

WeylElement series_apply(const DiffOpSeries& series, const WeylElement& a) {
  if (!(a.signature() == series.signature))
    throw Error(errc::signature, "element signature does not match the series");
  WeylElement r = a.zero_like();
  for (const auto& [alpha, c] : series.coeffs) {
    const WeylElement d = apply_pd_multi(a, alpha, false);
    if (!d.is_zero()) r = r + c * d;
  }
  return r;
}

void LinearMapTable::set(const WeylElement& monomial, WeylElement value) {
  if (!(monomial.signature() == signature) || !(value.signature() == signature))
    throw Error(errc::signature, "table entry signature does not match " + signature.to_string());
  if (monomial.terms().size() != 1 || !monomial.terms().begin()->second.is_one())
    throw Error(errc::table, "table key " + to_string(monomial) + " is not a monomial");
  values.insert_or_assign(monomial.terms().begin()->first, std::move(value));
}

const WeylElement& LinearMapTable::at(const MultiIndex& beta) const {
  auto it = values.find(beta);
  if (it == values.end())
    throw Error(errc::table, "no table entry for " +
                                 to_string(WeylElement::monomial(signature, beta)));
  return it->second;
}

LinearMapTable linear_map_table(const Automorphism& sigma, unsigned max_order) {
  require_verified(sigma);
  LinearMapTable table{sigma.signature, {}};
  for (unsigned d = 0; d <= max_order; ++d)
    for (const MultiIndex& beta : indices_of_degree(sigma.signature.s(), d))
      table.values.emplace(beta,
                           substitute(sigma.images, WeylElement::monomial(sigma.signature, beta)));
  return table;
}

DiffOpSeries map_to_series(const LinearMapTable& table, unsigned max_order) {
  const WeylSignature& sig = table.signature;
  DiffOpSeries out{sig, max_order, {}};
  for (unsigned d = 0; d <= max_order; ++d) {
    for (const MultiIndex& alpha : indices_of_degree(sig.s(), d)) {
      const WeylElement mono = WeylElement::monomial(sig, alpha);
      WeylElement rhs = table.at(alpha);
      for (const auto& [beta, c] : out.coeffs) {
        if (!beta.componentwise_le(alpha)) continue;
        rhs = rhs - c * apply_pd_multi(mono, beta, false);
      }
      WeylElement a = alpha.factorial().inverse() * rhs;
      if (!a.is_zero()) out.coeffs.emplace(alpha, std::move(a));
    }
  }
  return out;
}

std::string format_images(const std::vector<WeylElement>& images) {
  std::string out;
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (i) out += "; ";
    out += gen_name(i) + " -> " + to_string(images[i]);
  }
  return out;
}

std::string format_series(const DiffOpSeries& series) {
  std::string out;
  for (const auto& [alpha, c] : series.coeffs) {
    if (!out.empty()) out += '\n';
    out += "d^" + alpha.to_string() + ": " + to_string(c);
  }
  return out;
}

}  // namespace lnd
