#pragma once

#include <compare>
#include <vector>

namespace jetbrackets {

/// Symmetric jet multiindex over n base directions, stored as an exponent
/// vector: entry i-1 counts how often base index i occurs. Two multiindices
/// are equal iff their exponent vectors are equal, which quotients out the
/// ordering of the underlying index sequence.
class MultiIndex {
public:
  /// The empty multiindex over n directions.
  explicit MultiIndex(int n);

  /// Wraps an explicit exponent vector. Entries must be nonnegative.
  static MultiIndex from_exponents(std::vector<int> exponents);

  /// Builds from a repeated-index list (1-based), e.g. {1,1} over n=2 gives
  /// exponents (2,0). Throws RangeError for indices outside 1..n and
  /// OrderOverflow when the order exceeds `order_cap`.
  static MultiIndex from_indices(int n, const std::vector<int>& indices, int order_cap);

  int size() const { return static_cast<int>(e_.size()); }
  int order() const;
  bool empty() const { return order() == 0; }

  /// Exponent of base direction i (1-based).
  int exponent(int i) const;

  /// Copy with direction i (1-based) incremented. Throws RangeError for bad
  /// i and OrderOverflow when the new order would exceed `order_cap`.
  MultiIndex inserted(int i, int order_cap) const;

  /// The repeated-index presentation: sorted ascending, 1-based.
  std::vector<int> to_indices() const;

  const std::vector<int>& exponents() const { return e_; }

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
  /// Lexicographic on exponent vectors; orderings that grade by |I| first
  /// build on top of this.
  friend std::strong_ordering operator<=>(const MultiIndex&, const MultiIndex&) = default;

private:
  std::vector<int> e_;
};

/// All multiindices over n directions with order <= max_order, sorted by
/// (order, exponent vector). Includes the empty multiindex.
std::vector<MultiIndex> multiindices_up_to(int n, int max_order);

} // namespace jetbrackets
