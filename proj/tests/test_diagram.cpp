#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "knotforge/diagram.hpp"
#include "knotforge/knot_db.hpp"
#include "support.hpp"

using namespace knotforge;

namespace {

const char* kLeftTrefoil = "X[1,4,2,5];X[3,6,4,1];X[5,2,6,3]";
const char* kTrefoil = "X[1,5,2,4];X[3,1,4,6];X[5,3,6,2]";
const char* kFigure8 = "X[4,2,5,1];X[8,6,1,5];X[6,3,7,4];X[2,7,3,8]";

DiagramErrorKind error_kind(const std::string& pd) {
  try {
    parse_pd(pd);
  } catch (const DiagramError& e) {
    return e.kind();
  }
  FAIL("expected a DiagramError for " << pd);
  return DiagramErrorKind::MalformedToken;
}

std::vector<Diagram> samples() {
  std::vector<Diagram> out = {parse_pd("U"), parse_pd(kTrefoil), parse_pd(kLeftTrefoil), parse_pd(kFigure8),
                              parse_pd("X[1,1,2,2]"), parse_pd("X[1,2,2,1]")};
  return out;
}

}  // namespace

TEST_CASE("three-crossing transcription parses with counts and signs") {
  const Diagram d = parse_pd(kLeftTrefoil);
  CHECK(d.crossing_count() == 3);
  CHECK(d.edge_count() == 6);
  // Mirror of the built-in trefoil under the over-strand-d-to-b rule.
  for (const Crossing& x : d.crossings()) CHECK(x.sign == -1);
  CHECK(writhe(d) == -3);
}

TEST_CASE("built-in trefoil is right-handed and figure-8 is amphichiral-looking") {
  CHECK(writhe(parse_pd(kTrefoil)) == 3);
  const Diagram f = parse_pd(kFigure8);
  std::vector<int> signs;
  for (const Crossing& x : f.crossings()) signs.push_back(x.sign);
  CHECK(signs == std::vector<int>{1, 1, -1, -1});
  CHECK(writhe(f) == 0);
  CHECK(writhe(parse_pd("U")) == 0);
}

TEST_CASE("signs agree with the slot-label oracle") {
  for (const Diagram& d : samples()) {
    const auto pd = support::pd_of(d);
    for (std::size_t i = 0; i < pd.size(); ++i) CHECK(d.crossings()[i].sign == oracle::sign_of(pd, i));
  }
}

TEST_CASE("unknot token") {
  const Diagram u = parse_pd("U");
  CHECK(u.is_unknot_token());
  CHECK(u.edge_count() == 1);
  CHECK(arcs(u).size() == 1);
  CHECK(regions(u).size() == 2);
  CHECK(to_gauss(u).empty());
  CHECK(render_pd(u) == "U");
  CHECK(parse_pd("  U ") == u);
}

TEST_CASE("parse errors") {
  CHECK(error_kind("X[1,2,3,4];X[1,2,3,4]") == DiagramErrorKind::EdgeDegree);
  CHECK(error_kind("X[1,2,2,7]") == DiagramErrorKind::EdgeDegree);
  CHECK(error_kind("X[1,2,3]") == DiagramErrorKind::MalformedToken);
  CHECK(error_kind("Y[1,1,2,2]") == DiagramErrorKind::MalformedToken);
  CHECK(error_kind("X[1,a,2,2]") == DiagramErrorKind::MalformedToken);
  CHECK(error_kind("") == DiagramErrorKind::MalformedToken);
  CHECK(error_kind("X[1,1,2,2];;X[3,3,4,4]") == DiagramErrorKind::MalformedToken);
  // Hopf link: two components.
  CHECK(error_kind("X[4,1,3,2];X[2,3,1,4]") == DiagramErrorKind::MultiComponent);
  // Gauss code O1U2O3U1O2U3 with mixed signs has no planar realisation.
  CHECK(error_kind("X[1,4,2,5];X[3,1,4,6];X[5,3,6,2]") == DiagramErrorKind::NonPlanar);
}

TEST_CASE("whitespace and a trailing separator are accepted") {
  CHECK(parse_pd(" X[1, 5, 2, 4]; X[3,1,4,6] ;X[5,3,6,2]; ") == parse_pd(kTrefoil));
}

TEST_CASE("arcs: counts, partition, and the traversal oracle") {
  CHECK(arcs(parse_pd(kTrefoil)).size() == 3);
  CHECK(arcs(parse_pd(kFigure8)).size() == 4);
  CHECK(arcs(parse_pd("U")).size() == 1);
  for (const Diagram& d : samples()) {
    const auto as = arcs(d);
    const auto of = arc_of_edges(d);
    const auto expected = oracle::arc_labels(support::pd_of(d));
    std::multiset<int> seen;
    for (const Arc& a : as)
      for (int e : a.edges) {
        seen.insert(e);
        CHECK(of[e] == a.index);
      }
    CHECK(seen.size() == static_cast<std::size_t>(d.edge_count()));
    CHECK(std::set<int>(seen.begin(), seen.end()).size() == seen.size());
    if (!d.is_unknot_token())
      for (int e = 1; e <= d.edge_count(); ++e) CHECK(of[e] == expected[e]);
  }
}

TEST_CASE("regions: counts, corners and Euler characteristic") {
  CHECK(regions(parse_pd(kTrefoil)).size() == 5);
  CHECK(regions(parse_pd(kFigure8)).size() == 6);
  for (const Diagram& d : samples()) {
    const auto rs = regions(d);
    CHECK(euler_characteristic(d) == 2);
    if (d.is_unknot_token()) continue;
    CHECK(static_cast<int>(rs.size()) == d.edge_count() - d.crossing_count() + 2);
    CHECK(static_cast<int>(rs.size()) == oracle::face_count(support::pd_of(d)));
    std::multiset<std::pair<int, Side>> sides;
    std::size_t corners = 0;
    for (const Region& r : rs) {
      corners += r.boundary.size();
      for (const BoundaryStep& s : r.boundary) sides.insert({s.edge, s.side});
    }
    CHECK(corners == 4 * static_cast<std::size_t>(d.crossing_count()));
    // Each side of each edge bounds exactly one region.
    for (int e = 1; e <= d.edge_count(); ++e) {
      CHECK(sides.count({e, Side::Left}) == 1);
      CHECK(sides.count({e, Side::Right}) == 1);
    }
  }
}

TEST_CASE("arcs and regions are deterministic") {
  const Diagram a = parse_pd(kFigure8), b = parse_pd(kFigure8);
  const auto ra = regions(a), rb = regions(b);
  REQUIRE(ra.size() == rb.size());
  for (std::size_t i = 0; i < ra.size(); ++i) {
    REQUIRE(ra[i].boundary.size() == rb[i].boundary.size());
    for (std::size_t k = 0; k < ra[i].boundary.size(); ++k) {
      CHECK(ra[i].boundary[k].crossing == rb[i].boundary[k].crossing);
      CHECK(ra[i].boundary[k].edge == rb[i].boundary[k].edge);
    }
  }
  CHECK(arc_of_edges(a) == arc_of_edges(b));
}

TEST_CASE("Gauss codes") {
  const std::string g = to_gauss(parse_pd(kTrefoil));
  CHECK(oracle::gauss_equivalent(g, "O1+U2+O3+U1+O2+U3+"));
  const std::string f = to_gauss(parse_pd(kFigure8));
  std::string pattern;
  for (char c : f)
    if (c == 'O' || c == 'U') pattern += c;
  CHECK(pattern.size() == 8);
  for (std::size_t i = 1; i < pattern.size(); ++i) CHECK(pattern[i] != pattern[i - 1]);
  // Every crossing appears once over and once under with one sign.
  CHECK(oracle::gauss_equivalent(f, f));
}

TEST_CASE("PD and JSON round trips") {
  for (const Diagram& d : samples()) {
    CHECK(parse_pd(render_pd(d)) == d);
    CHECK(diagram_from_json(to_json(d)) == d);
  }
  CHECK(to_json(parse_pd("X[1,1,2,2]")) == R"({"crossings":[[1,1,2,2]],"signs":[1]})");
  CHECK_THROWS_AS(diagram_from_json(R"({"crossings":[[1,1,2,2]],"signs":[-1]})"), DiagramError);
  CHECK_THROWS_AS(diagram_from_json("{"), DiagramError);
}

TEST_CASE("relabelling and canonical form") {
  const Diagram d = parse_pd(kFigure8);
  // Shift every label by 3 along the cycle and reorder the crossings.
  std::vector<Crossing> shifted = d.crossings();
  for (Crossing& x : shifted)
    for (int& s : x.slots) s = (s + 2) % 8 + 1;
  std::reverse(shifted.begin(), shifted.end());
  const Diagram e = Diagram::from_crossings(shifted);
  CHECK_FALSE(e == d);
  CHECK(canonical_form(e) == canonical_form(d));
  CHECK_FALSE(canonical_form(parse_pd(kTrefoil)) == canonical_form(parse_pd(kLeftTrefoil)));
  // relabeled() accepts arbitrary ids.
  std::vector<Crossing> raw = d.crossings();
  for (Crossing& x : raw)
    for (int& s : x.slots) s = 100 + 7 * s;
  CHECK(Diagram::relabeled(raw, 107) == d);
}

TEST_CASE("built-in records validate") {
  for (const auto& name : builtin_names()) CHECK_NOTHROW(builtin(name).diagram());
}
