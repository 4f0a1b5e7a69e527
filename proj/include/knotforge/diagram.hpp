#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace knotforge {

enum class DiagramErrorKind { MalformedToken, EdgeDegree, MultiComponent, NonPlanar };

class DiagramError : public std::runtime_error {
 public:
  DiagramError(DiagramErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  DiagramErrorKind kind() const noexcept { return kind_; }

 private:
  DiagramErrorKind kind_;
};

const char* to_string(DiagramErrorKind kind);

/// One crossing of a PD code. Slots hold edge labels counterclockwise,
/// slot 0 being the incoming under-edge (so slot 2 is the outgoing
/// under-edge). The over strand enters at slot 3 on a positive crossing
/// and at slot 1 on a negative one.
struct Crossing {
  std::array<int, 4> slots{};
  int sign = 1;

  int over_in_slot() const noexcept { return sign > 0 ? 3 : 1; }
  int over_out_slot() const noexcept { return sign > 0 ? 1 : 3; }
  bool is_incoming(int slot) const noexcept { return slot == 0 || slot == over_in_slot(); }
  static bool is_over(int slot) noexcept { return (slot & 1) != 0; }

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

enum class Side { Left, Right };

/// A maximal over-strand: runs from the exit of one undercrossing to the
/// entry of the next.
struct Arc {
  int index = 0;
  std::vector<int> edges;
};

/// One step of a region boundary. The tracer arrives at `crossing` through
/// `slot_in` and leaves through `slot_out` along `edge`; `side` says which
/// side of the oriented edge the region lies on. The zero-crossing unknot
/// has one step per region with crossing == -1.
struct BoundaryStep {
  int crossing = -1;
  int slot_in = -1;
  int slot_out = -1;
  int edge = 1;
  Side side = Side::Left;
};

/// A complementary face, traced with the face on the left of travel.
struct Region {
  std::vector<BoundaryStep> boundary;
};

/// An oriented knot diagram. Immutable once built; construct through
/// parse_pd or Diagram::from_crossings.
class Diagram {
 public:
  /// The zero-crossing unknot.
  Diagram() = default;

  /// Validates and wraps a crossing list whose labels already follow the
  /// 1..2n orientation convention. Throws DiagramError.
  static Diagram from_crossings(std::vector<Crossing> crossings);

  /// Builds a diagram from crossings whose edge ids are arbitrary distinct
  /// integers (each used twice). Signs must be set; labels are renumbered
  /// 1..2n along the orientation starting at `start_edge`.
  static Diagram relabeled(const std::vector<Crossing>& raw, int start_edge);

  bool is_unknot_token() const noexcept { return crossings_.empty(); }
  const std::vector<Crossing>& crossings() const noexcept { return crossings_; }
  int crossing_count() const noexcept { return static_cast<int>(crossings_.size()); }
  /// Number of edge labels. The zero-crossing unknot counts its circle as
  /// a single edge labelled 1.
  int edge_count() const noexcept { return crossings_.empty() ? 1 : 2 * crossing_count(); }

  /// The crossing and slot where `edge` ends (its head).
  std::pair<int, int> head(int edge) const;
  /// The crossing and slot where `edge` starts (its tail).
  std::pair<int, int> tail(int edge) const;
  /// The label following `edge` along the orientation.
  int next_edge(int edge) const noexcept { return edge % edge_count() + 1; }

  friend bool operator==(const Diagram&, const Diagram&) = default;

 private:
  explicit Diagram(std::vector<Crossing> crossings);
  void index_edges();

  std::vector<Crossing> crossings_;
  // Per edge label: {crossing, slot} of head and tail.
  std::vector<std::pair<int, int>> heads_;
  std::vector<std::pair<int, int>> tails_;
};

Diagram parse_pd(std::string_view text);
std::string render_pd(const Diagram& d);

std::vector<Arc> arcs(const Diagram& d);
/// Arc index of every edge label (index 0 unused).
std::vector<int> arc_of_edges(const Diagram& d);
std::vector<Region> regions(const Diagram& d);
int writhe(const Diagram& d);
/// V - E + F over the rotation system (the unknot circle counts as one
/// vertex and one edge).
int euler_characteristic(const Diagram& d);
std::string to_gauss(const Diagram& d);
std::string to_json(const Diagram& d);
Diagram diagram_from_json(std::string_view json);

/// Canonical representative under rotation of the edge labels and
/// reordering of the crossing list. Equal results mean the diagrams are
/// the same oriented labelled diagram up to relabelling.
std::vector<Crossing> canonical_form(const Diagram& d);

}  // namespace knotforge
