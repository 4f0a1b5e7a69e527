#include "knotforge/quandle.hpp"

#include <algorithm>
#include <future>
#include <numeric>

#include <json.hpp>

namespace knotforge {

AxiomReport check_axioms(const OperationTable& t) {
  const int n = static_cast<int>(t.size());
  for (const auto& row : t) {
    if (static_cast<int>(row.size()) != n) throw QuandleError("OutOfRange: table is not square");
    for (int v : row)
      if (v < 0 || v >= n) throw QuandleError("OutOfRange: entry " + std::to_string(v) + " not in 0.." + std::to_string(n - 1));
  }
  AxiomReport r;
  for (int a = 0; a < n; ++a)
    if (t[a][a] != a) {
      r.idempotent = false;
      r.failed_axiom = 1;
      r.witness = {a};
      return r;
    }
  for (int b = 0; b < n; ++b) {
    std::vector<int> seen(n, -1);
    for (int c = 0; c < n; ++c) {
      const int a = t[c][b];
      if (seen[a] >= 0) {
        // Two preimages of a under (. <| b): the solution of c <| b = a is not unique.
        r.right_invertible = false;
        r.failed_axiom = 2;
        r.witness = {a, b};
        return r;
      }
      seen[a] = c;
    }
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (t[t[a][b]][c] != t[t[a][c]][t[b][c]]) {
          r.distributive = false;
          r.failed_axiom = 3;
          r.witness = {a, b, c};
          return r;
        }
  return r;
}

FiniteQuandle FiniteQuandle::from_table(OperationTable table, std::string name) {
  if (table.empty()) throw QuandleError("quandle table is empty");
  const AxiomReport r = check_axioms(table);
  if (!r.ok()) {
    std::string w;
    for (int x : r.witness) w += (w.empty() ? "" : ",") + std::to_string(x);
    throw QuandleError("table fails axiom " + std::to_string(r.failed_axiom) + " at (" + w + ")");
  }
  const int n = static_cast<int>(table.size());
  FiniteQuandle q;
  q.inv_table_.assign(n, std::vector<int>(n));
  for (int c = 0; c < n; ++c)
    for (int b = 0; b < n; ++b) q.inv_table_[table[c][b]][b] = c;
  q.table_ = std::move(table);
  q.name_ = std::move(name);
  return q;
}

FiniteQuandle dihedral(int n) {
  if (n < 2) throw QuandleError("dihedral: n must be at least 2");
  OperationTable t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = ((2 * b - a) % n + n) % n;
  return FiniteQuandle::from_table(std::move(t), "R" + std::to_string(n));
}

FiniteQuandle trivial_quandle(int n) {
  if (n < 1) throw QuandleError("trivial_quandle: n must be at least 1");
  OperationTable t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a) std::fill(t[a].begin(), t[a].end(), a);
  return FiniteQuandle::from_table(std::move(t), "T" + std::to_string(n));
}

FiniteQuandle conjugation_quandle(const FiniteGroup& g, const std::vector<int>& subset, std::string name) {
  const int n = static_cast<int>(subset.size());
  if (n == 0) throw QuandleError("conjugation_quandle: empty subset");
  for (int x : subset)
    if (x < 0 || x >= g.order()) throw QuandleError("conjugation_quandle: element out of range");
  OperationTable t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int v = conjugate(g, subset[i], subset[j]);
      auto it = std::find(subset.begin(), subset.end(), v);
      if (it == subset.end())
        throw QuandleError("NotClosed: conjugating element " + std::to_string(subset[i]) + " by " +
                           std::to_string(subset[j]) + " leaves the subset");
      t[i][j] = static_cast<int>(it - subset.begin());
    }
  return FiniteQuandle::from_table(std::move(t), std::move(name));
}

FiniteQuandle tetrahedral_quandle() {
  const FiniteGroup s4 = symmetric_group(4);
  const std::vector<std::vector<int>> cycles = {{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}};
  std::vector<int> subset;
  for (const auto& c : cycles) subset.push_back(*s4.find_permutation(permutation_from_cycle(4, c)));
  return conjugation_quandle(s4, subset, "QS4");
}

FiniteQuandle builtin_quandle(std::string_view name) {
  const std::string s(name);
  if (s == "QS4") return tetrahedral_quandle();
  if (s.size() >= 2 && s.size() <= 3 && (s[0] == 'R' || s[0] == 'T') &&
      std::all_of(s.begin() + 1, s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    const int n = std::stoi(s.substr(1));
    if (s[0] == 'R' && n >= 2 && n <= 64) return dihedral(n);
    if (s[0] == 'T' && n >= 1 && n <= 64) return trivial_quandle(n);
  }
  throw QuandleError("unknown quandle '" + s + "'");
}

std::optional<std::vector<int>> find_isomorphism(const FiniteQuandle& p, const FiniteQuandle& q) {
  if (p.order() != q.order()) return std::nullopt;
  const int n = p.order();
  if (n > 6) throw QuandleError("find_isomorphism: exhaustive search limited to order <= 6");
  std::vector<int> f(n);
  std::iota(f.begin(), f.end(), 0);
  do {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      for (int b = 0; b < n && ok; ++b) ok = f[p.op(a, b)] == q.op(f[a], f[b]);
    if (ok) return f;
  } while (std::next_permutation(f.begin(), f.end()));
  return std::nullopt;
}

namespace {

struct CrossingRule {
  int in_arc, over_arc, out_arc;
  bool positive;
};

std::vector<CrossingRule> crossing_rules(const Diagram& d) {
  const auto arc_of = arc_of_edges(d);
  std::vector<CrossingRule> rules;
  for (const Crossing& x : d.crossings())
    rules.push_back({arc_of[x.slots[0]], arc_of[x.slots[1]], arc_of[x.slots[2]], x.sign > 0});
  return rules;
}

// Depth-first search over arc colors in arc order, propagating every
// crossing whose over-arc and one under-arc are known.
class ColoringSearch {
 public:
  // `in_arc_order` branches on arcs by index so that complete colorings
  // come out in lexicographic order.
  ColoringSearch(const Diagram& d, const FiniteQuandle& q, bool in_arc_order = false)
      : q_(q), rules_(crossing_rules(d)), arc_count_(static_cast<int>(arcs(d).size())),
        color_(arc_count_, -1), touching_(arc_count_) {
    for (int i = 0; i < static_cast<int>(rules_.size()); ++i) {
      touching_[rules_[i].in_arc].push_back(i);
      touching_[rules_[i].over_arc].push_back(i);
      touching_[rules_[i].out_arc].push_back(i);
    }
    if (in_arc_order) {
      order_.resize(arc_count_);
      std::iota(order_.begin(), order_.end(), 0);
    } else {
      plan_order();
    }
  }

  int arc_count() const noexcept { return arc_count_; }

  // Calls visit(color_) for every complete coloring whose first arc has a
  // color in `first_colors`; visit returns false to stop.
  template <typename Visit>
  void run(const std::vector<int>& first_colors, Visit&& visit) {
    stop_ = false;
    for (int v : first_colors) {
      if (stop_) break;
      const std::size_t mark = trail_.size();
      if (assign(0, v)) descend(visit);
      undo(mark);
    }
  }

 private:
  // Branching order: arc 0 first (the thread split), then greedily the arc
  // whose color forces the most others by propagation.
  void plan_order() {
    std::vector<char> known(arc_count_, 0);
    auto close = [&](std::vector<char>& k) {
      int gained = 0;
      for (bool changed = true; changed;) {
        changed = false;
        for (const CrossingRule& r : rules_) {
          if (!k[r.over_arc] || k[r.in_arc] == k[r.out_arc]) continue;
          k[r.in_arc] = k[r.out_arc] = 1;
          ++gained;
          changed = true;
        }
      }
      return gained;
    };
    for (int next = 0; next >= 0;) {
      order_.push_back(next);
      known[next] = 1;
      close(known);
      next = -1;
      int best = -1;
      for (int a = 0; a < arc_count_; ++a) {
        if (known[a]) continue;
        std::vector<char> trial = known;
        trial[a] = 1;
        const int gained = close(trial);
        if (gained > best) best = gained, next = a;
      }
    }
  }

  template <typename Visit>
  void descend(Visit& visit) {
    int next = arc_count_;
    for (int a : order_)
      if (color_[a] < 0) {
        next = a;
        break;
      }
    if (next == arc_count_) {
      if (!visit(color_)) stop_ = true;
      return;
    }
    for (int v = 0; v < q_.order() && !stop_; ++v) {
      const std::size_t mark = trail_.size();
      if (assign(next, v)) descend(visit);
      undo(mark);
    }
  }

  bool assign(int arc, int v) {
    color_[arc] = v;
    trail_.push_back(arc);
    std::vector<int> queue(touching_[arc]);
    while (!queue.empty()) {
      const CrossingRule& r = rules_[queue.back()];
      queue.pop_back();
      const int a = color_[r.in_arc], b = color_[r.over_arc], c = color_[r.out_arc];
      if (b < 0) continue;
      int target = -1, value = 0;
      if (a >= 0) {
        value = r.positive ? q_.op(a, b) : q_.inv_op(a, b);
        if (c >= 0) {
          if (c != value) return false;
          continue;
        }
        target = r.out_arc;
      } else if (c >= 0) {
        value = r.positive ? q_.inv_op(c, b) : q_.op(c, b);
        target = r.in_arc;
      } else {
        continue;
      }
      if (color_[target] >= 0) {
        if (color_[target] != value) return false;
        continue;
      }
      color_[target] = value;
      trail_.push_back(target);
      queue.insert(queue.end(), touching_[target].begin(), touching_[target].end());
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      color_[trail_.back()] = -1;
      trail_.pop_back();
    }
  }

  const FiniteQuandle& q_;
  std::vector<CrossingRule> rules_;
  int arc_count_;
  std::vector<int> color_;
  std::vector<std::vector<int>> touching_;
  std::vector<int> trail_;
  std::vector<int> order_;
  bool stop_ = false;
};

}  // namespace

ColoringCount count_colorings(const Diagram& d, const FiniteQuandle& q, int threads) {
  const int n = q.order();
  const int tasks = std::clamp(threads, 1, n);
  auto count_part = [&](int part) {
    std::vector<int> firsts;
    for (int v = part; v < n; v += tasks) firsts.push_back(v);
    ColoringSearch search(d, q);
    std::uint64_t total = 0;
    search.run(firsts, [&](const std::vector<int>&) {
      ++total;
      return true;
    });
    return total;
  };
  std::uint64_t total = 0;
  if (tasks == 1) {
    total = count_part(0);
  } else {
    std::vector<std::future<std::uint64_t>> parts;
    for (int p = 0; p < tasks; ++p) parts.push_back(std::async(std::launch::async, count_part, p));
    for (auto& f : parts) total += f.get();
  }
  return {total, static_cast<std::int64_t>(total) - n};
}

std::vector<Coloring> list_colorings(const Diagram& d, const FiniteQuandle& q, std::size_t limit) {
  std::vector<Coloring> out;
  if (limit == 0) return out;
  std::vector<int> firsts(q.order());
  std::iota(firsts.begin(), firsts.end(), 0);
  ColoringSearch search(d, q, true);
  search.run(firsts, [&](const std::vector<int>& colors) {
    out.push_back(Coloring{colors});
    return out.size() < limit;
  });
  return out;
}

bool is_coloring(const Diagram& d, const FiniteQuandle& q, const Coloring& c) {
  if (static_cast<int>(c.assignment.size()) != static_cast<int>(arcs(d).size())) return false;
  for (int v : c.assignment)
    if (v < 0 || v >= q.order()) return false;
  for (const CrossingRule& r : crossing_rules(d)) {
    const int a = c.assignment[r.in_arc], b = c.assignment[r.over_arc];
    if (c.assignment[r.out_arc] != (r.positive ? q.op(a, b) : q.inv_op(a, b))) return false;
  }
  return true;
}

std::string to_json(const FiniteQuandle& q) {
  nlohmann::json j;
  j["order"] = q.order();
  j["table"] = q.table();
  if (!q.name().empty()) j["name"] = q.name();
  return j.dump();
}

FiniteQuandle quandle_from_json(std::string_view json) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json);
  } catch (const nlohmann::json::exception& e) {
    throw QuandleError(e.what());
  }
  if (!j.contains("table")) throw QuandleError("quandle JSON needs \"table\"");
  auto q = FiniteQuandle::from_table(j["table"].get<OperationTable>(), j.value("name", ""));
  if (j.contains("order") && j["order"].get<int>() != q.order()) throw QuandleError("\"order\" disagrees with table");
  return q;
}

}  // namespace knotforge
