#pragma once

#include "jetbrackets/exterior.hpp"

#include <map>
#include <utility>
#include <vector>

namespace jetbrackets {

/// A fiber-block row or column label: the jet coordinate (alpha, I).
using FiberKey = std::pair<int, MultiIndex>;

/// Constant block-diagonal pairing on the dx/du split. The base block is a
/// dense symmetric invertible matrix over the base directions; the fiber
/// block is the identity outside an explicit finite support. The fiber
/// block must be positive-definite unless the indefinite override is set;
/// the base block only needs to be invertible. Inverses are exact and
/// computed at construction.
class Metric {
public:
  struct FiberEntry {
    FiberKey row;
    FiberKey col;
    Rational value;
  };

  /// Identity on both blocks.
  static Metric identity(const CtxPtr& ctx);

  /// base_block must be n x n, symmetric, invertible. fiber_entries replace
  /// identity entries on their support; missing mirror entries are filled
  /// symmetrically, and conflicting mirrors are rejected.
  static Metric create(const CtxPtr& ctx, std::vector<std::vector<Rational>> base_block,
                       const std::vector<FiberEntry>& fiber_entries = {},
                       bool allow_indefinite_fiber = false);

  const CtxPtr& ctx() const { return ctx_; }
  const std::vector<std::vector<Rational>>& base_block() const { return base_; }
  const std::vector<std::vector<Rational>>& base_inverse() const { return base_inv_; }
  /// The non-identity fiber support, sorted; empty for the identity fiber.
  const std::vector<FiberKey>& fiber_support() const { return support_; }
  bool indefinite_fiber_allowed() const { return allow_indefinite_; }

  Rational base(int i, int j) const;
  Rational fiber(const FiberKey& a, const FiberKey& b) const;

  /// Nonzero entries of one row of the fiber block (resp. its inverse).
  std::vector<std::pair<FiberKey, Rational>> fiber_row(const FiberKey& k) const;
  std::vector<std::pair<FiberKey, Rational>> fiber_inverse_row(const FiberKey& k) const;
  std::vector<std::pair<int, Rational>> base_row(int i) const;
  std::vector<std::pair<int, Rational>> base_inverse_row(int i) const;

  /// The explicit fiber entries (upper triangle included), for serialization.
  std::vector<FiberEntry> fiber_entries() const;

private:
  Metric(CtxPtr ctx);

  CtxPtr ctx_;
  std::vector<std::vector<Rational>> base_;
  std::vector<std::vector<Rational>> base_inv_;
  std::vector<FiberKey> support_;
  std::vector<std::vector<Rational>> fiber_block_;     // dense on support
  std::vector<std::vector<Rational>> fiber_block_inv_; // dense on support
  bool allow_indefinite_ = false;
};

/// The musical isomorphism pairing vectors with covectors: factorwise
/// contraction with the metric blocks, extended as an algebra map. Degree
/// preserving; the identity on degree-0 elements.
Form flat(const Multivector& X, const Metric& g);

/// Inverse of flat, built from the exact inverse blocks.
Multivector sharp(const Form& alpha, const Metric& g);

} // namespace jetbrackets
