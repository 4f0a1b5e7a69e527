#include "knotforge/knot_db.hpp"

#include <future>
#include <sstream>

#include <json.hpp>

#include "knotforge/presentation.hpp"

namespace knotforge {

namespace {

const std::vector<KnotRecord>& table() {
  static const std::vector<KnotRecord> knots = {
      {"unknot", "U", "zero-crossing circle", 1},
      {"trefoil", "X[1,5,2,4];X[3,1,4,6];X[5,3,6,2]",
       "right-handed trefoil, writhe +3; standard three-crossing diagram", 3},
      {"figure8", "X[4,2,5,1];X[8,6,1,5];X[6,3,7,4];X[2,7,3,8]",
       "figure-8 knot, standard alternating four-crossing diagram, writhe 0", 1},
  };
  return knots;
}

}  // namespace

KnotRecord builtin(std::string_view name) {
  for (const KnotRecord& k : table())
    if (k.name == name) return k;
  throw UnknownKnot("UnknownKnot: '" + std::string(name) + "' (known: unknot, trefoil, figure8)");
}

std::vector<std::string> builtin_names() {
  std::vector<std::string> out;
  for (const KnotRecord& k : table()) out.push_back(k.name);
  return out;
}

KnotRecord record_from_pd(std::string pd, std::string name) {
  parse_pd(pd);
  return KnotRecord{std::move(name), std::move(pd), "user PD code", 1};
}

std::string Verdict::to_string() const {
  if (!distinct) return "INCONCLUSIVE";
  return "DISTINCT (" + witness + ": " + std::to_string(count_a) + " vs " + std::to_string(count_b) + ")";
}

Verdict distinguish(const KnotRecord& a, const KnotRecord& b, const std::vector<FiniteQuandle>& quandles,
                    int threads) {
  const Diagram da = a.diagram(), db = b.diagram();
  for (const FiniteQuandle& q : quandles) {
    const auto ca = count_colorings(da, q, threads).total;
    const auto cb = count_colorings(db, q, threads).total;
    if (ca != cb) return Verdict{true, q.name(), ca, cb};
  }
  return Verdict{};
}

namespace {

PresentationSize size_of(const GroupPresentation& p) {
  return {p.generator_count(), static_cast<int>(p.relators.size())};
}

KnotRow compute_row(const KnotRecord& k, const std::vector<FiniteQuandle>& quandles,
                    const std::vector<FiniteGroup>& groups) {
  const Diagram d = k.diagram();
  KnotRow row;
  row.name = k.name;
  row.pd = k.pd;
  row.crossings = d.crossing_count();
  row.writhe = writhe(d);
  for (const FiniteQuandle& q : quandles) {
    const auto c = count_colorings(d, q);
    row.colorings.push_back({q.name(), c.total, c.nontrivial});
  }
  const GroupPresentation w = wirtinger(d);
  row.wirtinger = size_of(w);
  row.wirtinger_simplified = size_of(tietze_simplify(w));
  if (!d.is_unknot_token()) {
    const GroupPresentation ab = alexander_briggs(d, k.ab_base_edge);
    row.alexander_briggs = size_of(ab);
    row.alexander_briggs_simplified = size_of(tietze_simplify(ab));
  }
  for (const FiniteGroup& g : groups) row.homs.push_back({g.name(), hom_count(w, g)});
  row.abelianization = abelianize(w);
  return row;
}

}  // namespace

InvariantReport report(const std::vector<KnotRecord>& knots, const std::vector<FiniteQuandle>& quandles,
                       const std::vector<FiniteGroup>& groups, int threads) {
  InvariantReport r;
  if (threads > 1) {
    std::vector<std::future<KnotRow>> rows;
    for (const KnotRecord& k : knots)
      rows.push_back(std::async(std::launch::async, compute_row, std::cref(k), std::cref(quandles), std::cref(groups)));
    for (auto& f : rows) r.knots.push_back(f.get());
  } else {
    for (const KnotRecord& k : knots) r.knots.push_back(compute_row(k, quandles, groups));
  }
  for (std::size_t i = 0; i < r.knots.size(); ++i)
    for (std::size_t j = i + 1; j < r.knots.size(); ++j) {
      PairRow p{r.knots[i].name, r.knots[j].name, false, ""};
      for (std::size_t q = 0; q < quandles.size(); ++q)
        if (r.knots[i].colorings[q].total != r.knots[j].colorings[q].total) {
          p.distinct = true;
          p.witness = quandles[q].name();
          break;
        }
      r.pairs.push_back(std::move(p));
    }
  return r;
}

std::string to_text(const InvariantReport& r) {
  std::ostringstream out;
  auto size = [](const PresentationSize& s) {
    return std::to_string(s.generators) + " gens / " + std::to_string(s.relators) + " rels";
  };
  for (const KnotRow& k : r.knots) {
    out << k.name << "  " << k.pd << "\n";
    out << "  crossings " << k.crossings << ", writhe " << k.writhe << "\n";
    for (const ColoringCell& c : k.colorings)
      out << "  colorings " << c.quandle << ": total " << c.total << ", nontrivial " << c.nontrivial << "\n";
    out << "  wirtinger " << size(k.wirtinger) << " -> " << size(k.wirtinger_simplified) << "\n";
    if (k.alexander_briggs)
      out << "  alexander-briggs " << size(*k.alexander_briggs) << " -> " << size(*k.alexander_briggs_simplified)
          << "\n";
    for (const HomCell& h : k.homs) out << "  homs into " << h.group << ": " << h.count << "\n";
    out << "  abelianization (";
    for (std::size_t i = 0; i < k.abelianization.size(); ++i) out << (i ? "," : "") << k.abelianization[i];
    out << ")\n";
  }
  for (const PairRow& p : r.pairs)
    out << p.a << " vs " << p.b << ": " << (p.distinct ? "DISTINCT (" + p.witness + ")" : "INCONCLUSIVE") << "\n";
  return out.str();
}

namespace {

nlohmann::json size_json(const PresentationSize& s) { return {{"generators", s.generators}, {"relators", s.relators}}; }

PresentationSize size_from(const nlohmann::json& j) {
  return {j.at("generators").get<int>(), j.at("relators").get<int>()};
}

}  // namespace

std::string to_json(const InvariantReport& r) {
  nlohmann::json j;
  j["knots"] = nlohmann::json::array();
  for (const KnotRow& k : r.knots) {
    nlohmann::json row;
    row["name"] = k.name;
    row["pd"] = k.pd;
    row["crossings"] = k.crossings;
    row["writhe"] = k.writhe;
    row["colorings"] = nlohmann::json::array();
    for (const ColoringCell& c : k.colorings)
      row["colorings"].push_back({{"quandle", c.quandle}, {"total", c.total}, {"nontrivial", c.nontrivial}});
    row["wirtinger"] = size_json(k.wirtinger);
    row["wirtinger_simplified"] = size_json(k.wirtinger_simplified);
    if (k.alexander_briggs) {
      row["alexander_briggs"] = size_json(*k.alexander_briggs);
      row["alexander_briggs_simplified"] = size_json(*k.alexander_briggs_simplified);
    }
    row["homs"] = nlohmann::json::array();
    for (const HomCell& h : k.homs) row["homs"].push_back({{"group", h.group}, {"count", h.count}});
    row["abelianization"] = k.abelianization;
    j["knots"].push_back(std::move(row));
  }
  j["pairs"] = nlohmann::json::array();
  for (const PairRow& p : r.pairs)
    j["pairs"].push_back({{"a", p.a}, {"b", p.b}, {"verdict", p.distinct ? "DISTINCT" : "INCONCLUSIVE"},
                          {"witness", p.witness}});
  return j.dump(2);
}

InvariantReport report_from_json(std::string_view json) {
  const auto j = nlohmann::json::parse(json);
  InvariantReport r;
  for (const auto& row : j.at("knots")) {
    KnotRow k;
    k.name = row.at("name").get<std::string>();
    k.pd = row.at("pd").get<std::string>();
    k.crossings = row.at("crossings").get<int>();
    k.writhe = row.at("writhe").get<int>();
    for (const auto& c : row.at("colorings"))
      k.colorings.push_back(
          {c.at("quandle").get<std::string>(), c.at("total").get<std::uint64_t>(), c.at("nontrivial").get<std::int64_t>()});
    k.wirtinger = size_from(row.at("wirtinger"));
    k.wirtinger_simplified = size_from(row.at("wirtinger_simplified"));
    if (row.contains("alexander_briggs")) {
      k.alexander_briggs = size_from(row["alexander_briggs"]);
      k.alexander_briggs_simplified = size_from(row.at("alexander_briggs_simplified"));
    }
    for (const auto& h : row.at("homs"))
      k.homs.push_back({h.at("group").get<std::string>(), h.at("count").get<std::uint64_t>()});
    k.abelianization = row.at("abelianization").get<std::vector<std::int64_t>>();
    r.knots.push_back(std::move(k));
  }
  for (const auto& p : j.at("pairs"))
    r.pairs.push_back({p.at("a").get<std::string>(), p.at("b").get<std::string>(),
                       p.at("verdict").get<std::string>() == "DISTINCT", p.at("witness").get<std::string>()});
  return r;
}

}  // namespace knotforge
