#include "lnd/parser.hpp"

#include <cctype>
#include <optional>
#include <type_traits>

#include "lnd/error.hpp"

namespace lnd {

namespace {

constexpr unsigned long kMaxExponent = 4096;

[[noreturn]] void fail(std::size_t offset, const std::string& msg) {
  throw Error(errc::parse, "at byte " + std::to_string(offset) + ": " + msg);
}

template <class E>
E power(const E& base, long k, std::size_t offset) {
  if (k < 0) {
    if constexpr (std::is_same_v<E, CommPoly>) {
      if (base.is_unit()) return base.pow(static_cast<int>(k));
    } else {
      const auto c = base.constant_value();
      if (c && !c->is_zero()) return base.constant_like(c->pow(static_cast<int>(k)));
    }
    fail(offset, "negative exponent on a non-invertible factor");
  }
  E result = base.constant_like(Rational(1));
  E b = base;
  unsigned long e = static_cast<unsigned long>(k);
  while (e) {
    if (e & 1u) result = result * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return result;
}

template <class E>
class Parser {
 public:
  Parser(std::string_view text, const E& like, std::size_t base)
      : text_(text), like_(like), base_(base) {}

  E run() {
    E r = expr();
    skip();
    if (pos_ != text_.size()) unexpected();
    return r;
  }

 private:
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  std::size_t offset() const { return base_ + pos_; }

  [[noreturn]] void unexpected() {
    if (pos_ >= text_.size()) fail(offset(), "unexpected end of input");
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == 'x' || c == '(')
      fail(offset(), "expected an operator before '" + std::string(1, c) + "'");
    fail(offset(), "unexpected character '" + std::string(1, c) + "'");
  }

  std::string digits() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) {
      if (pos_ >= text_.size()) fail(offset(), "expected a number, found end of input");
      fail(offset(), "expected a number");
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  E expr() {
    E acc = like_.zero_like();
    bool negative = false;
    if (char c = peek(); c == '+' || c == '-') {
      negative = c == '-';
      ++pos_;
    }
    E t = term();
    acc = negative ? acc - t : acc + t;
    while (true) {
      const char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      E u = term();
      acc = c == '-' ? acc - u : acc + u;
    }
    return acc;
  }

  E term() {
    E acc = factor();
    while (peek() == '*') {
      ++pos_;
      acc = acc * factor();
    }
    return acc;
  }

  E factor() {
    const std::size_t start = offset();
    E base = primary();
    if (peek() != '^') return base;
    ++pos_;
    bool negative = false;
    if (char c = peek(); c == '+' || c == '-') {
      negative = c == '-';
      ++pos_;
    }
    const std::size_t at = offset();
    const std::string d = digits();
    if (d.size() > 6 || std::stoul(d) > kMaxExponent)
      fail(at, "exponent " + d + " too large");
    const long k = static_cast<long>(std::stoul(d));
    return power(base, negative ? -k : k, start);
  }

  E primary() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      E inner = expr();
      if (peek() != ')') {
        if (pos_ >= text_.size()) fail(offset(), "missing ')'");
        unexpected();
      }
      ++pos_;
      return inner;
    }
    if (c == 'x') {
      const std::size_t at = offset();
      ++pos_;
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
        fail(at, "expected a variable index after 'x'");
      const std::string d = digits();
      const std::size_t idx = d.size() > 6 ? 0 : std::stoul(d);
      if (idx < 1 || idx > like_.num_vars())
        fail(at, "unknown variable x" + d + " (valid: x1..x" + std::to_string(like_.num_vars()) +
                     ")");
      return like_.variable_like(idx - 1);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t at = offset();
      std::string lit = digits();
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
          fail(offset(), "expected a denominator after '/'");
        lit += "/" + digits();
      }
      Rational q;
      try {
        q = Rational::parse(lit);
      } catch (const Error& e) {
        fail(at, e.what());
      }
      return like_.constant_like(q);
    }
    if (pos_ >= text_.size()) fail(offset(), "unexpected end of input");
    fail(offset(), "unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const E& like_;
  std::size_t base_;
  std::size_t pos_ = 0;
};

std::size_t trim_left(std::string_view s) {
  std::size_t i = 0;
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  return i;
}

std::string_view trim(std::string_view s) {
  s.remove_prefix(trim_left(s));
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

template <class E>
E parse_element(std::string_view text, const E& like, std::size_t base_offset) {
  return Parser<E>(text, like, base_offset).run();
}

template WeylElement parse_element(std::string_view, const WeylElement&, std::size_t);
template FreeElement parse_element(std::string_view, const FreeElement&, std::size_t);
template CommPoly parse_element(std::string_view, const CommPoly&, std::size_t);

std::vector<Assignment> split_assignments(std::string_view text) {
  std::vector<Assignment> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(';', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view item = text.substr(start, end - start);
    if (!trim(item).empty()) {
      const std::size_t arrow = item.find("->");
      if (arrow == std::string_view::npos)
        fail(start + trim_left(item), "expected 'lhs -> rhs'");
      const std::string_view lhs = item.substr(0, arrow);
      const std::string_view rhs = item.substr(arrow + 2);
      out.push_back({trim(lhs), start + trim_left(lhs), trim(rhs),
                     start + arrow + 2 + trim_left(rhs)});
      if (out.back().lhs.empty()) fail(start + trim_left(item), "missing left-hand side");
      if (out.back().rhs.empty()) fail(start + arrow + 2, "missing right-hand side");
    } else if (end < text.size()) {
      fail(end, "empty item");
    }
    start = end + 1;
  }
  return out;
}

template <class E>
std::vector<E> parse_images(std::string_view text, const E& like) {
  const std::size_t s = like.num_vars();
  std::vector<std::optional<E>> slots(s);
  for (const Assignment& a : split_assignments(text)) {
    std::size_t idx = 0;
    const std::string_view l = a.lhs;
    bool ok = l.size() >= 2 && l.size() <= 7 && l[0] == 'x';
    for (std::size_t i = 1; ok && i < l.size(); ++i)
      ok = std::isdigit(static_cast<unsigned char>(l[i]));
    if (ok) idx = std::stoul(std::string(l.substr(1)));
    if (!ok || idx < 1 || idx > s)
      fail(a.lhs_offset, "left-hand side must be one of x1..x" + std::to_string(s));
    if (slots[idx - 1]) fail(a.lhs_offset, "x" + std::to_string(idx) + " given twice");
    slots[idx - 1] = parse_element(a.rhs, like, a.rhs_offset);
  }
  std::vector<E> out;
  for (std::size_t i = 0; i < s; ++i) {
    if (!slots[i]) fail(text.size(), "missing image of x" + std::to_string(i + 1));
    out.push_back(std::move(*slots[i]));
  }
  return out;
}

template std::vector<WeylElement> parse_images(std::string_view, const WeylElement&);
template std::vector<FreeElement> parse_images(std::string_view, const FreeElement&);
template std::vector<CommPoly> parse_images(std::string_view, const CommPoly&);

}  // namespace lnd
