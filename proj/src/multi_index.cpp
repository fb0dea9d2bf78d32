#include "lnd/multi_index.hpp"

#include <numeric>

namespace lnd {

MultiIndex MultiIndex::unit(std::size_t length, std::size_t i) {
  MultiIndex a(length);
  a[i] = 1;
  return a;
}

unsigned MultiIndex::total() const {
  return std::accumulate(e_.begin(), e_.end(), 0u);
}

Rational MultiIndex::factorial() const {
  Rational f(1);
  for (unsigned v : e_) f *= Rational::factorial(v);
  return f;
}

bool MultiIndex::componentwise_le(const MultiIndex& other) const {
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] > other.e_[i]) return false;
  return true;
}

MultiIndex MultiIndex::operator+(const MultiIndex& other) const {
  MultiIndex r(*this);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += other.e_[i];
  return r;
}

MultiIndex MultiIndex::plus_unit(std::size_t i) const {
  MultiIndex r(*this);
  ++r.e_[i];
  return r;
}

std::string MultiIndex::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(e_[i]);
  }
  return out + ")";
}

bool GradedLexLess::operator()(const MultiIndex& a, const MultiIndex& b) const {
  const unsigned ta = a.total(), tb = b.total();
  if (ta != tb) return ta < tb;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] > b[i];
  return false;
}

namespace {

void fill(std::vector<MultiIndex>& out, MultiIndex& cur, std::size_t pos,
          unsigned remaining) {
  if (pos + 1 == cur.size()) {
    cur[pos] = remaining;
    out.push_back(cur);
    return;
  }
  for (unsigned v = remaining + 1; v-- > 0;) {
    cur[pos] = v;
    fill(out, cur, pos + 1, remaining - v);
  }
  cur[pos] = 0;
}

}  // namespace

std::vector<MultiIndex> indices_of_degree(std::size_t length, unsigned degree) {
  std::vector<MultiIndex> out;
  if (length == 0) {
    if (degree == 0) out.emplace_back();
    return out;
  }
  MultiIndex cur(length);
  fill(out, cur, 0, degree);
  return out;
}

}  // namespace lnd
