#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace knotforge {

class GroupError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using CayleyTable = std::vector<std::vector<int>>;

/// A finite group given by its Cayley table. table[x][y] is the product
/// x*y, read left to right: for permutation groups x*y applies x first
/// and then y, the convention under which y^-1 x y reproduces the
/// tetrahedral quandle table.
class FiniteGroup {
 public:
  /// Verifies closure, identity, inverses and (for order <= 120)
  /// associativity. Throws GroupError.
  static FiniteGroup from_table(CayleyTable table, std::string name = {});

  int order() const noexcept { return static_cast<int>(table_.size()); }
  int identity() const noexcept { return identity_; }
  int mul(int x, int y) const { return table_[x][y]; }
  int inverse(int x) const { return inverses_[x]; }
  const CayleyTable& table() const noexcept { return table_; }
  const std::vector<int>& inverses() const noexcept { return inverses_; }
  const std::string& name() const noexcept { return name_; }

  /// One-line images of each element when the group was built from
  /// permutations; empty otherwise.
  const std::vector<std::vector<int>>& permutations() const noexcept { return perms_; }
  std::optional<int> find_permutation(const std::vector<int>& one_line) const;

  int element_order(int x) const;

 private:
  FiniteGroup() = default;
  friend FiniteGroup group_from_permutations(std::vector<std::vector<int>>, std::string);

  CayleyTable table_;
  std::vector<int> inverses_;
  int identity_ = 0;
  std::string name_;
  std::vector<std::vector<int>> perms_;
};

/// Builds the group on a list of one-line permutations, closed under
/// composition, keeping the given element order.
FiniteGroup group_from_permutations(std::vector<std::vector<int>> perms, std::string name);

/// S_k, 2 <= k <= 5, elements in lexicographic one-line order.
FiniteGroup symmetric_group(int k);
/// A_k, 3 <= k <= 5: the even permutations in lexicographic order.
FiniteGroup alternating_group(int k);
/// Z_n under addition mod n.
FiniteGroup cyclic_group(int n);

/// y^-1 x y.
int conjugate(const FiniteGroup& g, int x, int y);

/// One-line form of a single cycle on {0..k-1}; (1,2,3) maps 1->2->3->1.
std::vector<int> permutation_from_cycle(int k, const std::vector<int>& cycle);

/// Resolves "S2".."S5", "A3".."A5", "Z<n>" (1 <= n <= 120) and "1"
/// (the trivial group). Throws GroupError for unknown names.
FiniteGroup builtin_group(std::string_view name);

std::string to_json(const FiniteGroup& g);
FiniteGroup group_from_json(std::string_view json);

}  // namespace knotforge
