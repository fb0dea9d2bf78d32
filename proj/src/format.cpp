#include "lnd/format.hpp"

namespace lnd {

std::string join_terms(const std::vector<std::pair<Rational, std::string>>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [coeff, mono] : terms) {
    const bool negative = coeff.sign() < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    const Rational mag = coeff.abs();
    if (mono.empty()) {
      out += mag.to_string();
    } else if (mag.is_one()) {
      out += mono;
    } else {
      out += mag.to_string();
      out += '*';
      out += mono;
    }
    first = false;
  }
  return out;
}

std::string power_string(std::size_t var_index, int exponent) {
  std::string s = "x" + std::to_string(var_index + 1);
  if (exponent != 1) s += "^" + std::to_string(exponent);
  return s;
}

}  // namespace lnd
