#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "knotforge/knot_db.hpp"
#include "knotforge/moves.hpp"
#include "knotforge/quandle.hpp"
#include "support.hpp"

using namespace knotforge;

namespace {

Diagram knot(const char* name) { return builtin(name).diagram(); }

bool returns_to(const Diagram& start, const Diagram& moved, MoveKind undo) {
  for (const MoveSite& s : find_sites(moved, undo))
    if (canonical_form(apply(moved, s)) == canonical_form(start)) return true;
  return false;
}

std::vector<Diagram> walk_states(int steps, int cap) {
  std::vector<Diagram> out;
  for (const auto& n : builtin_names())
    for (std::uint64_t seed = 1; seed <= 3; ++seed)
      for (const Diagram& d : random_walk(knot(n.c_str()), steps, seed, cap)) out.push_back(d);
  return out;
}

}  // namespace

TEST_CASE("kinks on the unknot") {
  const Diagram u = knot("unknot");
  const auto sites = find_sites(u, MoveKind::R1_ADD);
  REQUIRE(sites.size() == 2);
  const MoveSite pos = sites[0].sign > 0 ? sites[0] : sites[1];
  const Diagram k = apply(u, pos);
  CHECK(render_pd(k) == "X[1,1,2,2]");
  CHECK(writhe(k) == 1);
  const MoveSite neg = sites[0].sign < 0 ? sites[0] : sites[1];
  CHECK(writhe(apply(u, neg)) == -1);

  const auto rm = find_sites(k, MoveKind::R1_REMOVE);
  REQUIRE(rm.size() == 1);
  CHECK(apply(k, rm[0]).is_unknot_token());
  CHECK(find_sites(u, MoveKind::R1_REMOVE).empty());
  CHECK(find_sites(u, MoveKind::R3).empty());
}

TEST_CASE("the minimal trefoil has no reducing moves") {
  const Diagram t = knot("trefoil");
  CHECK(find_sites(t, MoveKind::R1_REMOVE).empty());
  CHECK(find_sites(t, MoveKind::R2_REMOVE).empty());
  // Its triangles are alternating, so none carries an R3 move.
  CHECK(find_sites(t, MoveKind::R3).empty());
  CHECK(find_sites(t, MoveKind::R1_ADD).size() == 12);
  CHECK_FALSE(find_sites(t, MoveKind::R2_ADD).empty());
}

TEST_CASE("adding then removing restores the diagram") {
  for (const char* name : {"trefoil", "figure8"}) {
    const Diagram d = knot(name);
    for (const MoveSite& s : find_sites(d, MoveKind::R1_ADD)) {
      const Diagram k = apply(d, s);
      CHECK(k.crossing_count() == d.crossing_count() + 1);
      CHECK(writhe(k) == writhe(d) + s.sign);
      CHECK(returns_to(d, k, MoveKind::R1_REMOVE));
    }
    for (const MoveSite& s : find_sites(d, MoveKind::R2_ADD)) {
      const Diagram k = apply(d, s);
      CHECK(k.crossing_count() == d.crossing_count() + 2);
      CHECK(writhe(k) == writhe(d));
      CHECK(returns_to(d, k, MoveKind::R2_REMOVE));
    }
  }
}

TEST_CASE("R3 moves are involutive and keep crossing count and writhe") {
  int applied = 0;
  for (const Diagram& d : walk_states(12, 8))
    for (const MoveSite& s : find_sites(d, MoveKind::R3)) {
      const Diagram e = apply(d, s);
      CHECK(e.crossing_count() == d.crossing_count());
      CHECK(writhe(e) == writhe(d));
      CHECK(returns_to(d, e, MoveKind::R3));
      ++applied;
    }
  CHECK(applied > 0);
}

TEST_CASE("stale sites are rejected") {
  const Diagram t = knot("trefoil");
  MoveSite bogus;
  bogus.kind = MoveKind::R1_REMOVE;
  bogus.crossing = 0;
  CHECK_THROWS_AS(apply(t, bogus), MoveError);
  MoveSite far;
  far.kind = MoveKind::R1_ADD;
  far.edge = 99;
  far.sign = 1;
  CHECK_THROWS_AS(apply(t, far), MoveError);
  const auto sites = find_sites(knot("figure8"), MoveKind::R2_ADD);
  REQUIRE_FALSE(sites.empty());
  CHECK_THROWS_AS(apply(knot("unknot"), sites.back()), MoveError);
}

TEST_CASE("random walks") {
  const Diagram t = knot("trefoil");
  const auto a = random_walk(t, 20, 7, 12);
  const auto b = random_walk(t, 20, 7, 12);
  REQUIRE(a.size() == 21);
  CHECK(a == b);
  CHECK(a.front() == t);
  CHECK(random_walk(t, 20, 8, 12) != a);
  CHECK(random_walk(t, 0, 7, 12).size() == 1);
  for (const Diagram& d : random_walk(t, 60, 3, 6)) CHECK(d.crossing_count() <= 6);
  for (const Diagram& d : a) CHECK(count_colorings(d, dihedral(3)).total == 9);
  for (const Diagram& d : random_walk(knot("unknot"), 50, 5, 12)) CHECK(count_colorings(d, dihedral(3)).total == 3);
}

TEST_CASE("walk states keep coloring counts for every quandle of order <= 4") {
  std::vector<FiniteQuandle> qs;
  for (int n = 2; n <= 4; ++n)
    for (const auto& t : oracle::all_quandles(n)) qs.push_back(FiniteQuandle::from_table(t));
  for (const auto& n : builtin_names()) {
    const Diagram start = knot(n.c_str());
    std::vector<std::uint64_t> base;
    for (const FiniteQuandle& q : qs) base.push_back(oracle::brute_colorings(support::pd_of(start), q.table()));
    for (std::uint64_t seed = 1; seed <= 3; ++seed)
      for (const Diagram& d : random_walk(start, 10, seed, 7))
        for (std::size_t i = 0; i < qs.size(); ++i) REQUIRE(count_colorings(d, qs[i]).total == base[i]);
  }
}
