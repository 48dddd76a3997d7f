#include "jetbrackets/context.hpp"

#include "jetbrackets/errors.hpp"

#include <algorithm>
#include <cctype>

namespace jetbrackets {

namespace {

bool valid_identifier(const std::string& s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)); });
}

// Names that would be ambiguous against coordinate or basis notation.
bool collides_with_coordinates(const std::string& s) {
  if (s == "u" || s == "dx" || s == "du" || s == "Dx" || s == "Du") return true;
  if (s[0] == 'x') {
    return s.size() == 1 ||
           std::all_of(s.begin() + 1, s.end(),
                       [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
  }
  return false;
}

} // namespace

JetContext::JetContext(int n, int m, int order_cap, std::vector<std::string> opaque_names)
    : n_(n), m_(m), order_cap_(order_cap), opaque_names_(std::move(opaque_names)) {}

std::shared_ptr<const JetContext> JetContext::create(int n, int m, int order_cap,
                                                     std::vector<std::string> opaque_names) {
  if (n < 1) throw RangeError("base dimension must be positive");
  if (m < 1) throw RangeError("fiber dimension must be positive");
  if (order_cap < 1) throw RangeError("order cap must be positive");
  std::sort(opaque_names.begin(), opaque_names.end());
  if (std::adjacent_find(opaque_names.begin(), opaque_names.end()) != opaque_names.end())
    throw RangeError("duplicate opaque function name");
  for (const auto& name : opaque_names) {
    if (!valid_identifier(name))
      throw RangeError("opaque name '" + name + "' is not an identifier");
    if (collides_with_coordinates(name))
      throw RangeError("opaque name '" + name + "' collides with coordinate notation");
  }
  return std::shared_ptr<const JetContext>(
      new JetContext(n, m, order_cap, std::move(opaque_names)));
}

bool JetContext::has_opaque(const std::string& name) const {
  return std::binary_search(opaque_names_.begin(), opaque_names_.end(), name);
}

void JetContext::check_base_index(int i) const {
  if (i < 1 || i > n_) throw RangeError("base index " + std::to_string(i) + " out of range 1.." + std::to_string(n_));
}

void JetContext::check_fiber_index(int alpha) const {
  if (alpha < 1 || alpha > m_)
    throw RangeError("fiber index " + std::to_string(alpha) + " out of range 1.." + std::to_string(m_));
}

void JetContext::check_jet_order(const MultiIndex& I) const {
  if (I.size() != n_) throw RangeError("multiindex has wrong number of base directions");
  if (I.order() > order_cap_)
    throw OrderOverflow("jet order " + std::to_string(I.order()) + " exceeds cap " +
                        std::to_string(order_cap_));
}

bool same_context(const CtxPtr& a, const CtxPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

void require_same_context(const CtxPtr& a, const CtxPtr& b) {
  if (!same_context(a, b)) throw ContextMismatch("values built over different contexts");
}

} // namespace jetbrackets
