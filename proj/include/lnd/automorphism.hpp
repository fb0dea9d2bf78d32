#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lnd/comm_poly.hpp"
#include "lnd/derivation.hpp"
#include "lnd/multi_index.hpp"
#include "lnd/projections.hpp"
#include "lnd/weyl.hpp"

namespace lnd {

// sigma on A(n,m), given by the images x'_i = sigma(x_i). A signature with
// n = 0 stands for the polynomial algebra P_m.
struct Automorphism {
  WeylSignature signature;
  std::vector<WeylElement> images;
  bool verified = false;
};

// Checks the defining relations on the images, centrality of the central
// images and that the Jacobian of the central part is a nonzero constant.
// Throws `relation` or `jacobian`.
Automorphism aut_verify(WeylSignature sig, std::vector<WeylElement> images);
Automorphism aut_identity(WeylSignature sig);

// sigma(a). Throws `unverified` for an unverified sigma.
WeylElement aut_apply(const Automorphism& sigma, const WeylElement& a);
// sigma o tau
Automorphism aut_compose(const Automorphism& sigma, const Automorphism& tau);

// The unique derivation with d(x_i) = values[i].
struct GeneratorDerivation {
  WeylSignature signature;
  std::vector<WeylElement> values;

  WeylElement operator()(const WeylElement& a) const { return derive_by_values(a, values); }
  bool is_zero() const;
};

// Throws `relation` if the values do not define a derivation.
GeneratorDerivation make_derivation(WeylSignature sig, std::vector<WeylElement> values);

// d'_1..d'_s with d'_i(x'_j) = delta_ij.
std::vector<Derivation<WeylElement>> twisted_partials(const Automorphism& sigma,
                                                      LndOptions options = {});

// The system (d'_1..d'_s; x'_1..x'_s) used by invert.
LndSystem<WeylElement> twisted_system(const Automorphism& sigma, LndOptions options = {});

// sigma^{-1}(x_i) = sum_alpha x^alpha phi'((d')^alpha x_i / alpha!). Every
// coefficient must be a constant (`nonconstant` otherwise); both compositions
// are checked to fix all generators (`unverified` otherwise).
Automorphism invert(const Automorphism& sigma, LndOptions options = {});

// log(sigma)(x_i) = sum_{k>=1} (-1)^{k+1} (sigma - id)^k(x_i) / k
GeneratorDerivation log_aut(const Automorphism& sigma, LndOptions options = {});
// e^d(x_i) = sum_k d^k(x_i) / k!, verified.
Automorphism exp_der(const GeneratorDerivation& d, LndOptions options = {});

// sum_alpha a_alpha d^alpha, |alpha| <= max_order, coefficients on the left.
struct DiffOpSeries {
  WeylSignature signature;
  unsigned max_order = 0;
  std::map<MultiIndex, WeylElement, GradedLexLess> coeffs;
};

// a_alpha = prod_i (sigma(x_i) - x_i)^alpha_i / alpha_i!. Polynomial
// signatures only.
DiffOpSeries aut_to_series(const Automorphism& sigma, unsigned max_order);
WeylElement series_apply(const DiffOpSeries& series, const WeylElement& a);

// Values of a linear map on every monomial x^beta with |beta| <= max_order.
struct LinearMapTable {
  WeylSignature signature;
  std::map<MultiIndex, WeylElement> values;

  void set(const WeylElement& monomial, WeylElement value);
  // Throws `table` if x^beta is missing.
  const WeylElement& at(const MultiIndex& beta) const;
};

LinearMapTable linear_map_table(const Automorphism& sigma, unsigned max_order);

// Solves f(x^alpha) = alpha! a_alpha + sum_{|beta|<|alpha|} a_beta d^beta(x^alpha)
// degree by degree.
DiffOpSeries map_to_series(const LinearMapTable& table, unsigned max_order);

// "x1 -> <expr>; x2 -> <expr>"
std::string format_images(const std::vector<WeylElement>& images);
// one "d^(a1,...,as): <element>" line per coefficient
std::string format_series(const DiffOpSeries& series);

// Central part of a central element as a polynomial in the m central
// variables.
CommPoly central_to_comm(const WeylElement& a);
WeylElement comm_to_central(WeylSignature sig, const CommPoly& p);

}  // namespace lnd
