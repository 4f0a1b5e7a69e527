// knotforge command-line front end.
//
// Exit codes: 0 success, 1 computation error (including an invalid PD
// code), 2 usage error (bad flags, unknown knot/quandle/group names).

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "knotforge/knot_db.hpp"
#include "knotforge/moves.hpp"
#include "knotforge/presentation.hpp"

using namespace knotforge;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int thread_budget() {
  int n = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  if (const char* env = std::getenv("KNOTFORGE_THREADS")) {
    const int cap = std::atoi(env);
    if (cap >= 1) n = std::min(n, cap);
  }
  return n;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

struct Common {
  std::vector<std::string> pd;
  std::vector<std::string> knot;
  bool json = false;
  std::uint64_t seed = 0;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--pd", c.pd, "PD code, e.g. \"X[1,5,2,4];X[3,1,4,6];X[5,3,6,2]\" or U");
  cmd->add_option("--knot", c.knot, "built-in knot: unknot, trefoil, figure8");
  cmd->add_flag("--json", c.json, "emit JSON");
  cmd->add_option("--seed", c.seed, "random seed");
}

KnotRecord resolve_knot(const std::string& name) {
  try {
    return builtin(name);
  } catch (const UnknownKnot& e) {
    throw UsageError(e.what());
  }
}

std::vector<KnotRecord> knots_of(const Common& c) {
  std::vector<KnotRecord> out;
  for (const auto& k : c.knot) out.push_back(resolve_knot(k));
  for (std::size_t i = 0; i < c.pd.size(); ++i)
    out.push_back(record_from_pd(c.pd[i], c.pd.size() == 1 ? "pd" : "pd" + std::to_string(i + 1)));
  return out;
}

KnotRecord single_knot(const Common& c) {
  auto ks = knots_of(c);
  if (ks.size() != 1) throw UsageError("give exactly one of --pd or --knot");
  return ks.front();
}

FiniteQuandle resolve_quandle(const std::string& name) {
  try {
    return builtin_quandle(name);
  } catch (const QuandleError&) {
    throw UsageError("unknown quandle '" + name + "' (known: R<n>, T<n>, QS4)");
  }
}

FiniteGroup resolve_group(const std::string& name) {
  try {
    return builtin_group(name);
  } catch (const GroupError&) {
    throw UsageError("unknown group '" + name + "' (known: S2..S5, A3..A5, Z<n>, 1)");
  }
}

void print_presentation(const GroupPresentation& p, bool json) {
  if (json) {
    std::cout << to_json(p) << "\n";
    return;
  }
  std::cout << "generators " << p.generator_count() << ", relators " << p.relators.size() << "\n";
  std::cout << render(p) << "\n";
}

GroupPresentation presentation_for(const KnotRecord& k, const std::string& from, int base_edge, std::size_t cap) {
  const Diagram d = k.diagram();
  if (from == "wirtinger") return wirtinger(d);
  if (from == "ab") return alexander_briggs(d, base_edge > 0 ? base_edge : k.ab_base_edge);
  if (from == "simplified") return tietze_simplify(wirtinger(d), cap);
  throw UsageError("--from must be wirtinger, ab or simplified");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"knotforge: quandle colorings and knot group presentations from PD codes"};
  app.require_subcommand(1);

  Common validate_opts, inv_opts, col_opts, wirt_opts, ab_opts, simp_opts, hom_opts, walk_opts, dist_opts;

  auto* validate = app.add_subcommand("validate", "parse a diagram and print its structure");
  add_common(validate, validate_opts);

  auto* invariants = app.add_subcommand("invariants", "invariant report over several knots");
  add_common(invariants, inv_opts);
  std::string inv_knots = "unknot,trefoil,figure8", inv_quandles = "R3,QS4", inv_groups = "S3,A4,S4";
  bool knots_given = false;
  invariants->add_option("--knots", inv_knots, "comma-separated built-in knots (empty for none)")
      ->each([&](const std::string&) { knots_given = true; });
  invariants->add_option("--quandles", inv_quandles, "comma-separated quandles");
  invariants->add_option("--groups", inv_groups, "comma-separated groups");

  auto* colorings = app.add_subcommand("colorings", "count quandle colorings");
  add_common(colorings, col_opts);
  std::string col_quandle = "R3";
  std::size_t col_list = 0;
  colorings->add_option("--quandle", col_quandle, "quandle name");
  colorings->add_option("--list", col_list, "also list up to N colorings");

  auto* wirt = app.add_subcommand("wirtinger", "Wirtinger presentation");
  add_common(wirt, wirt_opts);

  auto* ab = app.add_subcommand("ab", "Alexander-Briggs presentation");
  add_common(ab, ab_opts);
  int ab_base = 0;
  ab->add_option("--base-edge", ab_base, "edge carrying the meridian/longitude pair");

  auto* simplify = app.add_subcommand("simplify", "Tietze-simplified presentation");
  add_common(simplify, simp_opts);
  std::string simp_from = "wirtinger";
  std::size_t simp_cap = 64;
  int simp_base = 0;
  simplify->add_option("--from", simp_from, "wirtinger or ab");
  simplify->add_option("--cap", simp_cap, "maximum relator length");
  simplify->add_option("--base-edge", simp_base, "base edge for --from ab");

  auto* homcount = app.add_subcommand("homcount", "count homomorphisms into a finite group");
  add_common(homcount, hom_opts);
  std::string hom_group = "S3", hom_from = "wirtinger";
  int hom_base = 0;
  homcount->add_option("--group", hom_group, "group name");
  homcount->add_option("--from", hom_from, "wirtinger, ab or simplified");
  homcount->add_option("--base-edge", hom_base, "base edge for --from ab");

  auto* moves = app.add_subcommand("moves", "Reidemeister moves");
  moves->require_subcommand(1);
  auto* walk = moves->add_subcommand("walk", "seeded random walk; prints the PD code of each step");
  add_common(walk, walk_opts);
  int walk_steps = 20, walk_cap = 12;
  walk->add_option("--steps", walk_steps, "number of moves")->check(CLI::NonNegativeNumber);
  walk->add_option("--cap", walk_cap, "maximum crossing count");

  auto* distinguish_cmd = app.add_subcommand("distinguish", "separate knots by coloring counts");
  add_common(distinguish_cmd, dist_opts);
  std::string dist_quandles = "R3,QS4";
  distinguish_cmd->add_option("--quandles", dist_quandles, "comma-separated quandles, tried in order");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const int threads = thread_budget();
  try {
    if (*validate) {
      const KnotRecord k = single_knot(validate_opts);
      const Diagram d = k.diagram();
      const auto as = arcs(d);
      const auto rs = regions(d);
      if (validate_opts.json) {
        auto j = nlohmann::json::parse(to_json(d));
        j["arcs"] = as.size();
        j["regions"] = rs.size();
        j["writhe"] = writhe(d);
        j["gauss"] = to_gauss(d);
        std::cout << j.dump() << "\n";
      } else {
        std::cout << "pd " << render_pd(d) << "\n"
                  << "crossings " << d.crossing_count() << "\nedges " << d.edge_count() << "\narcs " << as.size()
                  << "\nregions " << rs.size() << "\nwrithe " << writhe(d) << "\ngauss " << to_gauss(d) << "\n";
      }
    } else if (*invariants) {
      std::vector<KnotRecord> ks;
      if (inv_opts.knot.empty() && inv_opts.pd.empty())
        for (const auto& name : split_list(inv_knots)) ks.push_back(resolve_knot(name));
      else if (knots_given)
        throw UsageError("--knots cannot be combined with --knot/--pd");
      else
        ks = knots_of(inv_opts);
      std::vector<FiniteQuandle> qs;
      for (const auto& n : split_list(inv_quandles)) qs.push_back(resolve_quandle(n));
      std::vector<FiniteGroup> gs;
      for (const auto& n : split_list(inv_groups)) gs.push_back(resolve_group(n));
      const InvariantReport r = report(ks, qs, gs, threads);
      std::cout << (inv_opts.json ? to_json(r) + "\n" : to_text(r));
    } else if (*colorings) {
      const KnotRecord k = single_knot(col_opts);
      const FiniteQuandle q = resolve_quandle(col_quandle);
      const Diagram d = k.diagram();
      const auto c = count_colorings(d, q, threads);
      const auto listed = list_colorings(d, q, col_list);
      if (col_opts.json) {
        nlohmann::json j{{"knot", k.name}, {"quandle", q.name()}, {"total", c.total}, {"nontrivial", c.nontrivial}};
        if (col_list > 0) {
          j["colorings"] = nlohmann::json::array();
          for (const auto& x : listed) j["colorings"].push_back(x.assignment);
        }
        std::cout << j.dump() << "\n";
      } else {
        std::cout << "total " << c.total << "\nnontrivial " << c.nontrivial << "\n";
        for (const auto& x : listed) {
          for (std::size_t i = 0; i < x.assignment.size(); ++i) std::cout << (i ? " " : "") << x.assignment[i];
          std::cout << "\n";
        }
      }
    } else if (*wirt) {
      print_presentation(wirtinger(single_knot(wirt_opts).diagram()), wirt_opts.json);
    } else if (*ab) {
      const KnotRecord k = single_knot(ab_opts);
      print_presentation(alexander_briggs(k.diagram(), ab_base > 0 ? ab_base : k.ab_base_edge), ab_opts.json);
    } else if (*simplify) {
      if (simp_from == "simplified") throw UsageError("--from must be wirtinger or ab");
      const KnotRecord k = single_knot(simp_opts);
      print_presentation(tietze_simplify(presentation_for(k, simp_from, simp_base, simp_cap), simp_cap),
                         simp_opts.json);
    } else if (*homcount) {
      const KnotRecord k = single_knot(hom_opts);
      const FiniteGroup g = resolve_group(hom_group);
      const auto p = presentation_for(k, hom_from, hom_base, 64);
      const auto n = hom_count(p, g, threads);
      if (hom_opts.json)
        std::cout << nlohmann::json{{"knot", k.name}, {"group", g.name()}, {"from", hom_from}, {"count", n}}.dump()
                  << "\n";
      else
        std::cout << n << "\n";
    } else if (*walk) {
      const KnotRecord k = single_knot(walk_opts);
      const Diagram d = k.diagram();
      if (walk_cap < d.crossing_count()) throw UsageError("--cap is below the starting crossing count");
      const auto steps = random_walk(d, walk_steps, walk_opts.seed, walk_cap);
      if (walk_opts.json) {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& x : steps) j.push_back(render_pd(x));
        std::cout << j.dump() << "\n";
      } else {
        for (const auto& x : steps) std::cout << render_pd(x) << "\n";
      }
    } else if (*distinguish_cmd) {
      std::vector<FiniteQuandle> qs;
      for (const auto& n : split_list(dist_quandles)) qs.push_back(resolve_quandle(n));
      std::vector<KnotRecord> ks = knots_of(dist_opts);
      if (ks.empty())
        for (const auto& n : builtin_names()) ks.push_back(builtin(n));
      if (ks.size() < 2) throw UsageError("distinguish needs at least two knots");
      nlohmann::json j = nlohmann::json::array();
      for (std::size_t i = 0; i < ks.size(); ++i)
        for (std::size_t k = i + 1; k < ks.size(); ++k) {
          const Verdict v = distinguish(ks[i], ks[k], qs, threads);
          if (dist_opts.json)
            j.push_back({{"a", ks[i].name},
                         {"b", ks[k].name},
                         {"verdict", v.distinct ? "DISTINCT" : "INCONCLUSIVE"},
                         {"witness", v.witness},
                         {"count_a", v.count_a},
                         {"count_b", v.count_b}});
          else
            std::cout << ks[i].name << " vs " << ks[k].name << ": " << v.to_string() << "\n";
        }
      if (dist_opts.json) std::cout << j.dump() << "\n";
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
