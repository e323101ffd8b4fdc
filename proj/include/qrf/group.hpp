#pragma once

#include <string>
#include <vector>

#include "qrf/errors.hpp"

namespace qrf {

/// A finite group as a validated multiplication table.
///
/// Elements are bare indices into the table; identity and inverses are
/// computed during validation. Every row and column must be a permutation of
/// 0..n-1 and associativity is checked exhaustively, so a constructed group
/// is a group, not merely a magma. Summation over the group uses the counting
/// measure, whose left invariance is the finite form of an invariant Haar
/// measure. Immutable after construction and safe to share across threads.
///
/// Validation is exhaustive (O(n^3) for associativity); intended for small
/// orders, |G| <= 24 or so, since transform matrices scale as |G|^m * d_phys.
class FiniteGroup {
public:
  /// Empty placeholder; every usable group comes from a named constructor.
  FiniteGroup() = default;

  static FiniteGroup from_table(std::vector<std::vector<int>> table);

  /// Z_n with table[i][j] = (i+j) mod n.
  static FiniteGroup cyclic(int n);

  /// Componentwise product; pairing convention (g,h) -> g*|H| + h.
  static FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);

  int order() const { return order_; }
  int identity() const { return identity_; }

  int product(int g, int h) const;
  int inverse(int g) const;

  /// Smallest k >= 1 with g^k = e.
  int element_order(int g) const;

  const std::vector<std::vector<int>>& table() const { return table_; }

  bool operator==(const FiniteGroup& other) const { return table_ == other.table_; }

private:
  void validate();

  int order_ = 0;
  std::vector<std::vector<int>> table_;
  int identity_ = -1;
  std::vector<int> inverses_;
};

/// Groups nameable in scenario files: "Z2", "Z3", "Z2xZ2", "S3", and
/// generally "Z<n>" and "Z<a>xZ<b>".
FiniteGroup builtin_group(const std::string& name);
bool is_builtin_group(const std::string& name);

/// Components of a cyclic builtin name: {n,0} for "Z<n>", {a,b} for
/// "Z<a>xZ<b>", {0,0} when the name is not of that form.
std::pair<int, int> cyclic_name_components(const std::string& name);

/// Parity (+1/-1) of the builtin S3 elements, which are the permutations of
/// three letters in the order e,(01),(02),(12),(012),(021).
int s3_parity(int element);

}  // namespace qrf
