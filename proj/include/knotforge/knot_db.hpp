#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "knotforge/diagram.hpp"
#include "knotforge/quandle.hpp"

namespace knotforge {

class UnknownKnot : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct KnotRecord {
  std::string name;
  std::string pd;
  std::string provenance;
  /// Edge carrying the meridian/longitude pair for alexander_briggs.
  int ab_base_edge = 1;

  Diagram diagram() const { return parse_pd(pd); }
};

/// "unknot", "trefoil" or "figure8". Throws UnknownKnot.
KnotRecord builtin(std::string_view name);
std::vector<std::string> builtin_names();

/// A record for a user-supplied PD code (validated here).
KnotRecord record_from_pd(std::string pd, std::string name = "pd");

struct Verdict {
  bool distinct = false;
  std::string witness;  // quandle name, empty when inconclusive
  std::uint64_t count_a = 0;
  std::uint64_t count_b = 0;

  std::string to_string() const;
};

/// DISTINCT with the first quandle whose coloring totals differ,
/// otherwise INCONCLUSIVE. Never claims the knots are equal.
Verdict distinguish(const KnotRecord& a, const KnotRecord& b, const std::vector<FiniteQuandle>& quandles,
                    int threads = 1);

struct ColoringCell {
  std::string quandle;
  std::uint64_t total = 0;
  std::int64_t nontrivial = 0;
  friend bool operator==(const ColoringCell&, const ColoringCell&) = default;
};

struct HomCell {
  std::string group;
  std::uint64_t count = 0;
  friend bool operator==(const HomCell&, const HomCell&) = default;
};

struct PresentationSize {
  int generators = 0;
  int relators = 0;
  friend bool operator==(const PresentationSize&, const PresentationSize&) = default;
};

struct KnotRow {
  std::string name;
  std::string pd;
  int crossings = 0;
  int writhe = 0;
  std::vector<ColoringCell> colorings;
  PresentationSize wirtinger;
  PresentationSize wirtinger_simplified;
  std::optional<PresentationSize> alexander_briggs;
  std::optional<PresentationSize> alexander_briggs_simplified;
  std::vector<HomCell> homs;  // into each group, from the Wirtinger presentation
  std::vector<std::int64_t> abelianization;
  friend bool operator==(const KnotRow&, const KnotRow&) = default;
};

struct PairRow {
  std::string a, b;
  bool distinct = false;
  std::string witness;
  friend bool operator==(const PairRow&, const PairRow&) = default;
};

struct InvariantReport {
  std::vector<KnotRow> knots;
  std::vector<PairRow> pairs;
  friend bool operator==(const InvariantReport&, const InvariantReport&) = default;
};

/// Computes every cell directly from the library. Rows keep input order
/// even when cells are evaluated concurrently (`threads` > 1).
InvariantReport report(const std::vector<KnotRecord>& knots, const std::vector<FiniteQuandle>& quandles,
                       const std::vector<FiniteGroup>& groups, int threads = 1);

std::string to_text(const InvariantReport& r);
std::string to_json(const InvariantReport& r);
InvariantReport report_from_json(std::string_view json);

}  // namespace knotforge
