#pragma once

#include "jetbrackets/multiindex.hpp"

#include <memory>
#include <string>
#include <vector>

namespace jetbrackets {

/// Coordinate bookkeeping for a finite-order jet space over the trivial
/// bundle with n independent and m dependent directions. Immutable after
/// construction and shared by every value built over it; all operations
/// are pure, so concurrent use needs no coordination.
class JetContext {
public:
  /// Validates and freezes the context. Opaque names label externally
  /// prescribed functions of the base coordinates only; they must be
  /// pairwise distinct identifiers and must not collide with coordinate
  /// notation (x<digits>, u, dx, du, Dx, Du).
  static std::shared_ptr<const JetContext> create(int n, int m, int order_cap = 8,
                                                  std::vector<std::string> opaque_names = {});

  int n() const { return n_; }
  int m() const { return m_; }
  int order_cap() const { return order_cap_; }
  const std::vector<std::string>& opaque_names() const { return opaque_names_; }

  bool has_opaque(const std::string& name) const;

  /// The empty multiindex of this context.
  MultiIndex zero_index() const { return MultiIndex(n_); }

  /// Throwing validators used by value constructors.
  void check_base_index(int i) const;
  void check_fiber_index(int alpha) const;
  void check_jet_order(const MultiIndex& I) const;

  friend bool operator==(const JetContext&, const JetContext&) = default;

private:
  JetContext(int n, int m, int order_cap, std::vector<std::string> opaque_names);

  int n_;
  int m_;
  int order_cap_;
  std::vector<std::string> opaque_names_; // sorted
};

using CtxPtr = std::shared_ptr<const JetContext>;

/// True when both values may be combined: same dimensions, cap, and
/// opaque vocabulary (pointer equality short-circuits).
bool same_context(const CtxPtr& a, const CtxPtr& b);

/// Throws ContextMismatch unless same_context(a, b).
void require_same_context(const CtxPtr& a, const CtxPtr& b);

} // namespace jetbrackets
