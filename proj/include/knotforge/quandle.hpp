#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "knotforge/diagram.hpp"
#include "knotforge/group.hpp"

namespace knotforge {

class QuandleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using OperationTable = std::vector<std::vector<int>>;

/// Result of checking the three quandle axioms on a table. When an axiom
/// fails, `failed_axiom` is 1, 2 or 3 and `witness` holds the offending
/// elements (a for I; a, b for II; a, b, c for III).
struct AxiomReport {
  bool idempotent = true;     // I: a<|a = a
  bool right_invertible = true;  // II: b |-> column is a bijection
  bool distributive = true;   // III: (a<|b)<|c = (a<|c)<|(b<|c)
  int failed_axiom = 0;
  std::vector<int> witness;

  bool ok() const noexcept { return idempotent && right_invertible && distributive; }
};

/// Checks axioms I-III exhaustively. Throws QuandleError if the table is
/// not square or has an entry outside 0..n-1.
AxiomReport check_axioms(const OperationTable& table);

class FiniteQuandle {
 public:
  /// Throws QuandleError unless the table passes check_axioms.
  static FiniteQuandle from_table(OperationTable table, std::string name = {});

  int order() const noexcept { return static_cast<int>(table_.size()); }
  /// a <| b.
  int op(int a, int b) const { return table_[a][b]; }
  /// The unique c with c <| b = a.
  int inv_op(int a, int b) const { return inv_table_[a][b]; }
  const OperationTable& table() const noexcept { return table_; }
  const OperationTable& inv_table() const noexcept { return inv_table_; }
  const std::string& name() const noexcept { return name_; }

 private:
  FiniteQuandle() = default;
  OperationTable table_;
  OperationTable inv_table_;
  std::string name_;
};

/// R_n: a <| b = 2b - a mod n.
FiniteQuandle dihedral(int n);
/// The trivial quandle of order n: a <| b = a.
FiniteQuandle trivial_quandle(int n);
/// x <| y = y^-1 x y on the listed group elements, indexed in list order.
/// Throws QuandleError (naming the pair) when the subset is not closed.
FiniteQuandle conjugation_quandle(const FiniteGroup& g, const std::vector<int>& subset, std::string name = {});
/// QS4: the oriented 3-cycles (1,2,3), (0,3,2), (0,1,3), (0,2,1) of S4,
/// each labelled by its fixed point.
FiniteQuandle tetrahedral_quandle();
/// Resolves "R<n>" (2 <= n <= 64), "T<n>" (trivial, 1 <= n <= 64) and
/// "QS4". Throws QuandleError for unknown names.
FiniteQuandle builtin_quandle(std::string_view name);

/// A bijection f with f(a <| b) = f(a) <| f(b), searched exhaustively.
/// Only defined for order <= 6; larger orders throw QuandleError.
std::optional<std::vector<int>> find_isomorphism(const FiniteQuandle& p, const FiniteQuandle& q);

struct Coloring {
  std::vector<int> assignment;  // color of each arc, by arc index
  friend bool operator==(const Coloring&, const Coloring&) = default;
  friend auto operator<=>(const Coloring&, const Coloring&) = default;
};

struct ColoringCount {
  std::uint64_t total = 0;
  std::int64_t nontrivial = 0;  // total minus the constant colorings
};

/// Counts arc colorings satisfying the crossing rule: at a positive
/// crossing the outgoing under-arc is (incoming <| over); at a negative one
/// it is the inverse operation. Backtracking with forced propagation;
/// `threads` > 1 splits the search on the first arc's color.
ColoringCount count_colorings(const Diagram& d, const FiniteQuandle& q, int threads = 1);

/// Up to `limit` colorings in lexicographic order of the arc colors.
std::vector<Coloring> list_colorings(const Diagram& d, const FiniteQuandle& q, std::size_t limit);

/// True when `c` satisfies the crossing rule everywhere.
bool is_coloring(const Diagram& d, const FiniteQuandle& q, const Coloring& c);

std::string to_json(const FiniteQuandle& q);
FiniteQuandle quandle_from_json(std::string_view json);

}  // namespace knotforge
