#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "knotforge/knot_db.hpp"
#include "knotforge/moves.hpp"
#include "knotforge/presentation.hpp"
#include "support.hpp"

using namespace knotforge;

namespace {

Diagram knot(const char* name) { return builtin(name).diagram(); }

GroupPresentation ab_of(const char* name) {
  const KnotRecord r = builtin(name);
  return alexander_briggs(r.diagram(), r.ab_base_edge);
}

std::vector<int> all_gens(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

std::vector<Diagram> walk_states() {
  std::vector<Diagram> out;
  for (const auto& n : builtin_names())
    for (const Diagram& d : random_walk(knot(n.c_str()), 8, 21, 6)) out.push_back(d);
  return out;
}

}  // namespace

TEST_CASE("word reduction") {
  const Word w = {{0, 1}, {1, 1}, {1, -1}, {2, 1}, {0, -1}};
  CHECK(free_reduce(w) == Word{{0, 1}, {2, 1}, {0, -1}});
  CHECK(cyclic_reduce(w) == Word{{2, 1}});
  CHECK(free_reduce(Word{{0, 1}, {0, -1}}).empty());
  CHECK(inverse(Word{{0, 1}, {1, -1}}) == Word{{1, 1}, {0, -1}});
  const Word a = {{0, 1}, {1, 1}, {0, -1}, {1, -1}};
  const Word rot = {{1, 1}, {0, -1}, {1, -1}, {0, 1}};
  CHECK(cyclically_equal(a, rot));
  CHECK(cyclically_equal(a, inverse(rot)));
  CHECK_FALSE(cyclically_equal(a, Word{{0, 1}, {1, 1}, {1, -1}, {0, -1}}));
  CHECK(canonical(a) == canonical(inverse(rot)));
}

TEST_CASE("Wirtinger presentation of the trefoil") {
  const std::vector<oracle::Rel> expected = {support::word("x z^-1 y^-1 z", "xyz"),
                                             support::word("z y^-1 x^-1 y", "xyz"),
                                             support::word("y x^-1 z^-1 x", "xyz")};
  for (const char* pd : {"X[1,5,2,4];X[3,1,4,6];X[5,3,6,2]", "X[1,4,2,5];X[3,6,4,1];X[5,2,6,3]"}) {
    const GroupPresentation p = wirtinger(parse_pd(pd));
    REQUIRE(p.generator_count() == 3);
    CHECK(p.generators[0].name == "x");
    CHECK(p.generators[2].name == "z");
    CHECK(oracle::same_relators_up_to_relabel(support::rels_of(p), expected, 3, all_gens(3)));
  }
}

TEST_CASE("Wirtinger shapes") {
  const GroupPresentation u = wirtinger(knot("unknot"));
  CHECK(u.generator_count() == 1);
  CHECK(u.relators.empty());
  CHECK(render(u) == "< x | >");
  const GroupPresentation f = wirtinger(knot("figure8"));
  CHECK(f.generator_count() == 4);
  CHECK(f.generators[0].name == "x1");
  CHECK(f.relators.size() == 4);
  for (const Word& r : f.relators) CHECK(r.size() == 4);
  const GroupPresentation kink = wirtinger(parse_pd("X[1,1,2,2]"));
  CHECK(kink.generator_count() == 1);
  REQUIRE(kink.relators.size() == 1);
  CHECK(kink.relators[0].empty());
}

TEST_CASE("Alexander-Briggs presentation of the trefoil") {
  const GroupPresentation p = ab_of("trefoil");
  REQUIRE(p.generator_count() == 5);
  CHECK(p.generators[0].name == "L");
  CHECK(p.generators[0].role == GeneratorRole::Longitude);
  CHECK(p.generators[4].name == "M");
  CHECK(p.generators[4].role == GeneratorRole::Meridian);
  CHECK(p.relators.size() == 6);
  const std::string names = "LABCM";
  std::vector<oracle::Rel> reference;
  for (const char* w : {"L^-1 M^-1 L M", "L A M B M C M", "C B A", "A B M", "B C M", "L A M C"})
    reference.push_back(support::word(w, names));
  CHECK(support::rels_of(p).front() == reference.front());
  CHECK(oracle::same_relators_up_to_relabel(support::rels_of(p), reference, 5, {1, 2, 3}));
}

TEST_CASE("Alexander-Briggs errors") {
  try {
    alexander_briggs(knot("unknot"), 1);
    FAIL("expected NoCrossings");
  } catch (const PresentationError& e) {
    CHECK(std::string(e.what()).find("NoCrossings") != std::string::npos);
  }
  CHECK_THROWS_AS(alexander_briggs(knot("trefoil"), 0), PresentationError);
  CHECK_THROWS_AS(alexander_briggs(knot("trefoil"), 7), PresentationError);
}

TEST_CASE("Tietze simplification of the trefoil reaches the braid relation") {
  const GroupPresentation w = tietze_simplify(wirtinger(knot("trefoil")));
  REQUIRE(w.generator_count() == 2);
  REQUIRE(w.relators.size() == 1);
  CHECK(oracle::same_relators_up_to_relabel(support::rels_of(w), {support::word("x y x y^-1 x^-1 y^-1", "xy")}, 2,
                                            {0, 1}));

  const GroupPresentation a = tietze_simplify(ab_of("trefoil"));
  REQUIRE(a.generator_count() == 2);
  REQUIRE(a.relators.size() == 1);
  CHECK(a.generators[0].role == GeneratorRole::Pillar);
  CHECK(a.generators[1].name == "M");
  CHECK(support::rels_of(a)[0].size() == 6);
  CHECK(oracle::same_relators_up_to_relabel(support::rels_of(a), {support::word("A M A M^-1 A^-1 M^-1", "AM")}, 2,
                                            {}));
}

TEST_CASE("Tietze respects the length cap and keeps the unknot") {
  const GroupPresentation u = tietze_simplify(wirtinger(knot("unknot")));
  CHECK(u.generator_count() == 1);
  CHECK(u.relators.empty());
  const GroupPresentation f = wirtinger(knot("figure8"));
  const GroupPresentation capped = tietze_simplify(f, 4);
  for (const Word& r : capped.relators) CHECK(r.size() <= 4);
  CHECK(tietze_simplify(f).generator_count() == 2);
}

TEST_CASE("abelianization matches determinantal divisors") {
  CHECK(abelianize(wirtinger(knot("unknot"))) == std::vector<std::int64_t>{0});
  CHECK(abelianize(wirtinger(knot("trefoil"))) == std::vector<std::int64_t>{1, 1, 0});
  CHECK(abelianize(ab_of("figure8")) == std::vector<std::int64_t>{1, 1, 1, 1, 1, 0});
  std::vector<GroupPresentation> ps;
  for (const auto& n : builtin_names()) {
    ps.push_back(wirtinger(knot(n.c_str())));
    ps.push_back(tietze_simplify(ps.back()));
  }
  ps.push_back(ab_of("trefoil"));
  GroupPresentation z6;
  z6.generators = {{"a", GeneratorRole::Arc, 0}, {"b", GeneratorRole::Arc, 1}};
  z6.relators = {{{0, 1}, {0, 1}, {1, 1}, {1, 1}, {1, 1}}, {{0, 1}, {1, -1}, {0, 1}, {1, 1}, {0, 1}, {1, 1}}};
  ps.push_back(z6);
  for (const GroupPresentation& p : ps) {
    const auto rels = support::rels_of(p);
    CHECK(abelianize(p) == oracle::invariant_factors(oracle::exponent_matrix(p.generator_count(), rels),
                                                     p.generator_count()));
  }
}

TEST_CASE("hom counts agree with exhaustive enumeration") {
  GroupPresentation braid;
  braid.generators = {{"x", GeneratorRole::Arc, 0}, {"y", GeneratorRole::Arc, 1}};
  braid.relators = {{{0, 1}, {1, 1}, {0, 1}, {1, -1}, {0, -1}, {1, -1}}};
  CHECK(hom_count(braid, symmetric_group(3)) == 12);
  CHECK(hom_count(braid, builtin_group("1")) == 1);
  CHECK(hom_count(wirtinger(knot("unknot")), symmetric_group(4)) == 24);

  std::vector<GroupPresentation> ps = {braid, ab_of("trefoil")};
  for (const Diagram& d : walk_states()) ps.push_back(wirtinger(d));
  for (const char* gname : {"S3", "A4", "Z4"}) {
    const FiniteGroup g = builtin_group(gname);
    for (const GroupPresentation& p : ps) {
      if (p.generator_count() > 6) continue;
      CHECK(hom_count(p, g) == oracle::brute_homs(p.generator_count(), support::rels_of(p), g.table()));
    }
  }
  const FiniteGroup s4 = symmetric_group(4);
  const GroupPresentation f = wirtinger(knot("figure8"));
  CHECK(hom_count(f, s4) == oracle::brute_homs(4, support::rels_of(f), s4.table()));
  CHECK(hom_count(f, s4, 3) == hom_count(f, s4, 1));
}

TEST_CASE("simplification preserves hom counts") {
  std::vector<FiniteGroup> groups = {symmetric_group(3), symmetric_group(4), alternating_group(4)};
  for (int k = 2; k <= 6; ++k) groups.push_back(cyclic_group(k));
  std::vector<GroupPresentation> ps = {ab_of("trefoil"), ab_of("figure8")};
  for (const Diagram& d : walk_states()) ps.push_back(wirtinger(d));
  for (const GroupPresentation& p : ps) {
    const GroupPresentation s = tietze_simplify(p);
    CHECK(s.generator_count() <= p.generator_count());
    for (const FiniteGroup& g : groups) CHECK(hom_count(s, g) == hom_count(p, g));
  }
}

TEST_CASE("one Wirtinger relator is redundant") {
  for (const auto& n : builtin_names()) {
    const GroupPresentation p = wirtinger(knot(n.c_str()));
    for (std::size_t i = 0; i < p.relators.size(); ++i) {
      GroupPresentation q = p;
      q.relators.erase(q.relators.begin() + static_cast<std::ptrdiff_t>(i));
      for (const char* g : {"S3", "A4"}) CHECK(hom_count(q, builtin_group(g)) == hom_count(p, builtin_group(g)));
    }
  }
}

TEST_CASE("constrained hom counts equal conjugation-quandle colorings") {
  const FiniteGroup s3 = symmetric_group(3);
  std::vector<int> transpositions;
  for (int x = 0; x < s3.order(); ++x)
    if (s3.element_order(x) == 2) transpositions.push_back(x);
  const FiniteQuandle q = conjugation_quandle(s3, transpositions);
  for (const Diagram& d : walk_states()) {
    const GroupPresentation p = wirtinger(d);
    const std::uint64_t homs = hom_count_within(p, s3, transpositions);
    CHECK(homs == count_colorings(d, q).total);
    CHECK(homs == oracle::brute_homs(p.generator_count(), support::rels_of(p), s3.table(), transpositions));
  }
}

TEST_CASE("presentation JSON and validation") {
  for (const GroupPresentation& p : {wirtinger(knot("figure8")), ab_of("trefoil"), wirtinger(knot("unknot"))})
    CHECK(presentation_from_json(to_json(p)) == p);
  GroupPresentation bad = wirtinger(knot("trefoil"));
  bad.relators[0].push_back({7, 1});
  CHECK_THROWS_AS(validate(bad), PresentationError);
  bad = wirtinger(knot("trefoil"));
  bad.relators[0][0].exp = 2;
  CHECK_THROWS_AS(validate(bad), PresentationError);
  CHECK_THROWS_AS(presentation_from_json(R"({"generators":["x"],"relators":[[["q",1]]]})"), PresentationError);
  const GroupPresentation t = tietze_simplify(wirtinger(knot("trefoil")));
  CHECK(render(t, {}) == "1");
  CHECK(render(t, t.relators[0]).find("⁻¹") != std::string::npos);
}
