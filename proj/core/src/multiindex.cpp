#include "jetbrackets/multiindex.hpp"

#include "jetbrackets/errors.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace jetbrackets {

MultiIndex::MultiIndex(int n) : e_(static_cast<std::size_t>(n), 0) {
  if (n < 1) throw RangeError("multiindex needs at least one base direction");
}

MultiIndex MultiIndex::from_exponents(std::vector<int> exponents) {
  if (exponents.empty()) throw RangeError("multiindex needs at least one base direction");
  for (int e : exponents)
    if (e < 0) throw RangeError("negative multiindex exponent");
  MultiIndex m(static_cast<int>(exponents.size()));
  m.e_ = std::move(exponents);
  return m;
}

MultiIndex MultiIndex::from_indices(int n, const std::vector<int>& indices, int order_cap) {
  MultiIndex m(n);
  for (int i : indices) m = m.inserted(i, order_cap);
  return m;
}

int MultiIndex::order() const {
  return std::accumulate(e_.begin(), e_.end(), 0);
}

int MultiIndex::exponent(int i) const {
  if (i < 1 || i > size()) throw RangeError("base index " + std::to_string(i) + " out of range");
  return e_[static_cast<std::size_t>(i - 1)];
}

MultiIndex MultiIndex::inserted(int i, int order_cap) const {
  if (i < 1 || i > size()) throw RangeError("base index " + std::to_string(i) + " out of range");
  if (order() + 1 > order_cap)
    throw OrderOverflow("jet order would exceed cap " + std::to_string(order_cap));
  MultiIndex m(*this);
  ++m.e_[static_cast<std::size_t>(i - 1)];
  return m;
}

std::vector<int> MultiIndex::to_indices() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(order()));
  for (int i = 1; i <= size(); ++i)
    for (int k = 0; k < e_[static_cast<std::size_t>(i - 1)]; ++k) out.push_back(i);
  return out;
}

namespace {

void enumerate_order(int n, int pos, int remaining, std::vector<int>& current,
                     std::vector<MultiIndex>& out) {
  if (pos == n) {
    if (remaining == 0) out.push_back(MultiIndex::from_exponents(current));
    return;
  }
  for (int e = 0; e <= remaining; ++e) {
    current[static_cast<std::size_t>(pos)] = e;
    enumerate_order(n, pos + 1, remaining - e, current, out);
  }
  current[static_cast<std::size_t>(pos)] = 0;
}

} // namespace

std::vector<MultiIndex> multiindices_up_to(int n, int max_order) {
  if (n < 1) throw RangeError("multiindex needs at least one base direction");
  if (max_order < 0) throw RangeError("negative multiindex order bound");
  std::vector<MultiIndex> out;
  std::vector<int> current(static_cast<std::size_t>(n), 0);
  std::vector<MultiIndex> of_order;
  for (int k = 0; k <= max_order; ++k) {
    of_order.clear();
    enumerate_order(n, 0, k, current, of_order);
    std::sort(of_order.begin(), of_order.end());
    out.insert(out.end(), of_order.begin(), of_order.end());
  }
  return out;
}

} // namespace jetbrackets
