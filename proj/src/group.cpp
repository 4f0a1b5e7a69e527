#include "knotforge/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include <json.hpp>

namespace knotforge {

FiniteGroup FiniteGroup::from_table(CayleyTable table, std::string name) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw GroupError("group table is empty");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n) throw GroupError("group table is not square");
    for (int v : row)
      if (v < 0 || v >= n) throw GroupError("group table entry out of range");
  }
  int identity = -1;
  for (int e = 0; e < n && identity < 0; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) ok = table[e][x] == x && table[x][e] == x;
    if (ok) identity = e;
  }
  if (identity < 0) throw GroupError("no identity element");
  std::vector<int> inverses(n, -1);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y)
      if (table[x][y] == identity && table[y][x] == identity) inverses[x] = y;
    if (inverses[x] < 0) throw GroupError("element " + std::to_string(x) + " has no inverse");
  }
  if (n <= 120) {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z)
          if (table[table[x][y]][z] != table[x][table[y][z]])
            throw GroupError("table is not associative at (" + std::to_string(x) + "," + std::to_string(y) +
                             "," + std::to_string(z) + ")");
  }
  FiniteGroup g;
  g.table_ = std::move(table);
  g.inverses_ = std::move(inverses);
  g.identity_ = identity;
  g.name_ = std::move(name);
  return g;
}

std::optional<int> FiniteGroup::find_permutation(const std::vector<int>& one_line) const {
  auto it = std::find(perms_.begin(), perms_.end(), one_line);
  if (it == perms_.end()) return std::nullopt;
  return static_cast<int>(it - perms_.begin());
}

int FiniteGroup::element_order(int x) const {
  int k = 1;
  for (int p = x; p != identity_; p = mul(p, x)) ++k;
  return k;
}

FiniteGroup group_from_permutations(std::vector<std::vector<int>> perms, std::string name) {
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < static_cast<int>(perms.size()); ++i) index[perms[i]] = i;
  const int n = static_cast<int>(perms.size());
  CayleyTable table(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      // x first, then y.
      std::vector<int> p(perms[x].size());
      for (std::size_t i = 0; i < p.size(); ++i) p[i] = perms[y][perms[x][i]];
      auto it = index.find(p);
      if (it == index.end()) throw GroupError("permutation set is not closed under composition");
      table[x][y] = it->second;
    }
  FiniteGroup g = FiniteGroup::from_table(std::move(table), std::move(name));
  g.perms_ = std::move(perms);
  return g;
}

namespace {

bool is_even(const std::vector<int>& p) {
  int inversions = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) inversions += p[i] > p[j];
  return inversions % 2 == 0;
}

std::vector<std::vector<int>> all_permutations(int k, bool even_only) {
  std::vector<int> p(k);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    if (!even_only || is_even(p)) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace

FiniteGroup symmetric_group(int k) {
  if (k < 2 || k > 5) throw GroupError("symmetric_group: k must be in 2..5");
  return group_from_permutations(all_permutations(k, false), "S" + std::to_string(k));
}

FiniteGroup alternating_group(int k) {
  if (k < 3 || k > 5) throw GroupError("alternating_group: k must be in 3..5");
  return group_from_permutations(all_permutations(k, true), "A" + std::to_string(k));
}

FiniteGroup cyclic_group(int n) {
  if (n < 1 || n > 120) throw GroupError("cyclic_group: n must be in 1..120");
  CayleyTable t(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) t[x][y] = (x + y) % n;
  return FiniteGroup::from_table(std::move(t), "Z" + std::to_string(n));
}

int conjugate(const FiniteGroup& g, int x, int y) { return g.mul(g.mul(g.inverse(y), x), y); }

std::vector<int> permutation_from_cycle(int k, const std::vector<int>& cycle) {
  std::vector<int> p(k);
  std::iota(p.begin(), p.end(), 0);
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const int from = cycle[i], to = cycle[(i + 1) % cycle.size()];
    if (from < 0 || from >= k || to < 0 || to >= k) throw GroupError("cycle entry out of range");
    p[from] = to;
  }
  return p;
}

FiniteGroup builtin_group(std::string_view name) {
  const std::string s(name);
  auto number = [&](std::size_t from) -> int {
    if (s.size() <= from) return -1;
    for (std::size_t i = from; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return -1;
    return s.size() - from > 4 ? -1 : std::stoi(s.substr(from));
  };
  if (s == "1") return cyclic_group(1);
  if (!s.empty()) {
    const int k = number(1);
    if (s[0] == 'S' && k >= 2 && k <= 5) return symmetric_group(k);
    if (s[0] == 'A' && k >= 3 && k <= 5) return alternating_group(k);
    if (s[0] == 'Z' && k >= 1 && k <= 120) return cyclic_group(k);
  }
  throw GroupError("unknown group '" + s + "'");
}

std::string to_json(const FiniteGroup& g) {
  nlohmann::json j;
  j["order"] = g.order();
  j["table"] = g.table();
  j["identity"] = g.identity();
  if (!g.name().empty()) j["name"] = g.name();
  if (!g.permutations().empty()) j["elements"] = g.permutations();
  return j.dump();
}

FiniteGroup group_from_json(std::string_view json) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json);
  } catch (const nlohmann::json::exception& e) {
    throw GroupError(e.what());
  }
  if (!j.contains("table")) throw GroupError("group JSON needs \"table\"");
  if (j.contains("elements")) {
    auto g = group_from_permutations(j["elements"].get<std::vector<std::vector<int>>>(), j.value("name", ""));
    if (g.table() != j["table"].get<CayleyTable>()) throw GroupError("\"table\" disagrees with \"elements\"");
    return g;
  }
  auto g = FiniteGroup::from_table(j["table"].get<CayleyTable>(), j.value("name", ""));
  if (j.contains("order") && j["order"].get<int>() != g.order()) throw GroupError("\"order\" disagrees with table");
  if (j.contains("identity") && j["identity"].get<int>() != g.identity())
    throw GroupError("\"identity\" disagrees with table");
  return g;
}

}  // namespace knotforge
