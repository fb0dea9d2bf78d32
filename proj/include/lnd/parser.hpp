#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "lnd/comm_poly.hpp"
#include "lnd/free_algebra.hpp"
#include "lnd/weyl.hpp"

namespace lnd {

// Grammar:
//   expr    := [+|-] term ((+|-) term)*
//   term    := factor (* factor)*
//   factor  := primary [^ [+|-] INT]
//   primary := INT [/ INT] | x<INT> | ( expr )
// Products keep their written order. Juxtaposition is rejected. A negative
// exponent is accepted only on a unit. Errors carry code `parse` and the byte
// offset (plus `base_offset`) in the message.
template <class E>
E parse_element(std::string_view text, const E& like, std::size_t base_offset = 0);

extern template WeylElement parse_element(std::string_view, const WeylElement&, std::size_t);
extern template FreeElement parse_element(std::string_view, const FreeElement&, std::size_t);
extern template CommPoly parse_element(std::string_view, const CommPoly&, std::size_t);

// One "lhs -> rhs" item of a ';'-separated list, with byte offsets into the
// original text.
struct Assignment {
  std::string_view lhs;
  std::size_t lhs_offset;
  std::string_view rhs;
  std::size_t rhs_offset;
};

std::vector<Assignment> split_assignments(std::string_view text);

// "x1 -> e1; ...; xs -> es" with every generator given exactly once, in any
// order; returned by generator index.
template <class E>
std::vector<E> parse_images(std::string_view text, const E& like);

extern template std::vector<WeylElement> parse_images(std::string_view, const WeylElement&);
extern template std::vector<FreeElement> parse_images(std::string_view, const FreeElement&);
extern template std::vector<CommPoly> parse_images(std::string_view, const CommPoly&);

}  // namespace lnd
