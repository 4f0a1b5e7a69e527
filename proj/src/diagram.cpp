#include "knotforge/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include <json.hpp>

namespace knotforge {

const char* to_string(DiagramErrorKind kind) {
  switch (kind) {
    case DiagramErrorKind::MalformedToken: return "MalformedToken";
    case DiagramErrorKind::EdgeDegree: return "EdgeDegree";
    case DiagramErrorKind::MultiComponent: return "MultiComponent";
    case DiagramErrorKind::NonPlanar: return "NonPlanar";
  }
  return "?";
}

namespace {

[[noreturn]] void fail(DiagramErrorKind kind, const std::string& msg) {
  throw DiagramError(kind, std::string(to_string(kind)) + ": " + msg);
}

int count_faces(const std::vector<Crossing>& xs, const std::vector<std::pair<int, int>>& heads,
                const std::vector<std::pair<int, int>>& tails) {
  const int n = static_cast<int>(xs.size());
  std::vector<char> seen(4 * n, 0);
  int faces = 0;
  for (int start = 0; start < 4 * n; ++start) {
    if (seen[start]) continue;
    ++faces;
    int dart = start;
    while (!seen[dart]) {
      seen[dart] = 1;
      const int c = dart / 4;
      const int out = (dart % 4 + 3) % 4;
      const int e = xs[c].slots[out];
      auto other = heads[e] == std::pair{c, out} ? tails[e] : heads[e];
      dart = other.first * 4 + other.second;
    }
  }
  return faces;
}

}  // namespace

Diagram::Diagram(std::vector<Crossing> crossings) : crossings_(std::move(crossings)) {
  index_edges();
}

void Diagram::index_edges() {
  const int edges = 2 * crossing_count();
  heads_.assign(edges + 1, {-1, -1});
  tails_.assign(edges + 1, {-1, -1});
  for (int c = 0; c < crossing_count(); ++c) {
    const Crossing& x = crossings_[c];
    for (int s = 0; s < 4; ++s) {
      const int e = x.slots[s];
      auto& slot = x.is_incoming(s) ? heads_[e] : tails_[e];
      slot = {c, s};
    }
  }
}

std::pair<int, int> Diagram::head(int edge) const { return heads_.at(edge); }
std::pair<int, int> Diagram::tail(int edge) const { return tails_.at(edge); }

Diagram Diagram::from_crossings(std::vector<Crossing> xs) {
  if (xs.empty()) return Diagram{};
  const int n = static_cast<int>(xs.size());
  const int edges = 2 * n;
  std::vector<int> uses(edges + 1, 0), head_uses(edges + 1, 0);
  for (const Crossing& x : xs) {
    if (x.sign != 1 && x.sign != -1) fail(DiagramErrorKind::MalformedToken, "crossing sign must be +1 or -1");
    for (int s = 0; s < 4; ++s) {
      const int e = x.slots[s];
      if (e < 1 || e > edges)
        fail(DiagramErrorKind::EdgeDegree,
             "label " + std::to_string(e) + " outside 1.." + std::to_string(edges));
      ++uses[e];
      if (x.is_incoming(s)) ++head_uses[e];
    }
  }
  for (int e = 1; e <= edges; ++e) {
    if (uses[e] != 2)
      fail(DiagramErrorKind::EdgeDegree,
           "label " + std::to_string(e) + " used " + std::to_string(uses[e]) + " times");
    if (head_uses[e] != 1)
      fail(DiagramErrorKind::EdgeDegree,
           "label " + std::to_string(e) + " enters " + std::to_string(head_uses[e]) + " crossings");
  }
  for (const Crossing& x : xs) {
    const auto succ = [&](int from, int to) { return x.slots[to] == x.slots[from] % edges + 1; };
    if (!succ(0, 2) || !succ(x.over_in_slot(), x.over_out_slot()))
      fail(DiagramErrorKind::MultiComponent, "labels do not follow a single oriented cycle");
  }
  Diagram d(std::move(xs));
  const int faces = count_faces(d.crossings_, d.heads_, d.tails_);
  if (n - edges + faces != 2)
    fail(DiagramErrorKind::NonPlanar, "Euler characteristic " + std::to_string(n - edges + faces));
  return d;
}

Diagram Diagram::relabeled(const std::vector<Crossing>& raw, int start_edge) {
  if (raw.empty()) return Diagram{};
  std::map<int, std::pair<int, int>> head_of, tail_of;
  for (int c = 0; c < static_cast<int>(raw.size()); ++c)
    for (int s = 0; s < 4; ++s) {
      auto& m = raw[c].is_incoming(s) ? head_of : tail_of;
      if (!m.emplace(raw[c].slots[s], std::pair{c, s}).second)
        fail(DiagramErrorKind::EdgeDegree, "edge id reused in relabelling");
    }
  std::map<int, int> label;
  int e = start_edge;
  for (int next = 1; !label.contains(e); ++next) {
    label[e] = next;
    auto h = head_of.find(e);
    if (h == head_of.end()) fail(DiagramErrorKind::EdgeDegree, "edge id without head");
    const auto [c, s] = h->second;
    const int out = s == 0 ? 2 : raw[c].over_out_slot();
    e = raw[c].slots[out];
  }
  if (label.size() != 2 * raw.size() || e != start_edge)
    fail(DiagramErrorKind::MultiComponent, "relabelling did not traverse a single cycle");
  std::vector<Crossing> out = raw;
  for (Crossing& x : out)
    for (int& s : x.slots) s = label.at(s);
  return from_crossings(std::move(out));
}

Diagram parse_pd(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s == "U") return Diagram{};
  if (s.empty()) fail(DiagramErrorKind::MalformedToken, "empty PD code");

  std::vector<std::array<int, 4>> raw;
  std::size_t pos = 0;
  while (pos < s.size()) {
    const std::size_t end = s.find(';', pos);
    const std::string tok = s.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
    pos = end == std::string::npos ? s.size() : end + 1;
    if (tok.empty()) {
      if (pos >= s.size()) break;  // trailing ';'
      fail(DiagramErrorKind::MalformedToken, "empty token");
    }
    if (tok.size() < 4 || tok[0] != 'X' || tok[1] != '[' || tok.back() != ']')
      fail(DiagramErrorKind::MalformedToken, "expected X[a,b,c,d], got '" + tok + "'");
    std::array<int, 4> slots{};
    std::istringstream in(tok.substr(2, tok.size() - 3));
    for (int i = 0; i < 4; ++i) {
      if (!(in >> slots[i])) fail(DiagramErrorKind::MalformedToken, "bad label in '" + tok + "'");
      char sep = 0;
      if (i < 3 && (!(in >> sep) || sep != ','))
        fail(DiagramErrorKind::MalformedToken, "expected ',' in '" + tok + "'");
    }
    if (in >> std::ws; !in.eof()) fail(DiagramErrorKind::MalformedToken, "trailing data in '" + tok + "'");
    raw.push_back(slots);
  }

  const int edges = 2 * static_cast<int>(raw.size());
  std::vector<int> uses(edges + 1, 0);
  for (const auto& sl : raw)
    for (int e : sl) {
      if (e < 1 || e > edges)
        fail(DiagramErrorKind::EdgeDegree, "label " + std::to_string(e) + " outside 1.." + std::to_string(edges));
      ++uses[e];
    }
  for (int e = 1; e <= edges; ++e)
    if (uses[e] != 2)
      fail(DiagramErrorKind::EdgeDegree, "label " + std::to_string(e) + " used " + std::to_string(uses[e]) + " times");
  // Pairing: a label ends at most once and starts at most once as an under-edge.
  std::vector<int> under_in(edges + 1, 0), under_out(edges + 1, 0);
  for (const auto& sl : raw)
    if (++under_in[sl[0]] > 1 || ++under_out[sl[2]] > 1)
      fail(DiagramErrorKind::EdgeDegree,
           "label " + std::to_string(under_in[sl[0]] > 1 ? sl[0] : sl[2]) + " paired twice as an under-edge");

  std::vector<Crossing> xs;
  xs.reserve(raw.size());
  for (const auto& sl : raw) {
    Crossing x{sl, 1};
    const int a = sl[0], b = sl[1], d = sl[3];
    if (edges == 2) {
      // Single crossing: labels wrap mod 2, so the over exit is the slot that
      // repeats the incoming under label.
      if (b == a) x.sign = 1;
      else if (d == a) x.sign = -1;
      else fail(DiagramErrorKind::EdgeDegree, "one-crossing code must reuse its labels");
    } else if (d == b % edges + 1) {
      x.sign = -1;
    } else if (b == d % edges + 1) {
      x.sign = 1;
    } else {
      fail(DiagramErrorKind::MultiComponent, "over-strand labels are not consecutive");
    }
    xs.push_back(x);
  }
  return Diagram::from_crossings(std::move(xs));
}

std::string render_pd(const Diagram& d) {
  if (d.is_unknot_token()) return "U";
  std::string out;
  for (const Crossing& x : d.crossings()) {
    if (!out.empty()) out += ';';
    out += "X[" + std::to_string(x.slots[0]) + ',' + std::to_string(x.slots[1]) + ',' +
           std::to_string(x.slots[2]) + ',' + std::to_string(x.slots[3]) + ']';
  }
  return out;
}

std::vector<Arc> arcs(const Diagram& d) {
  if (d.is_unknot_token()) return {Arc{0, {1}}};
  std::vector<int> starts;
  for (const Crossing& x : d.crossings()) starts.push_back(x.slots[2]);
  std::sort(starts.begin(), starts.end());
  std::vector<Arc> out;
  for (int start : starts) {
    Arc arc{static_cast<int>(out.size()), {}};
    for (int e = start;; e = d.next_edge(e)) {
      arc.edges.push_back(e);
      if (d.head(e).second == 0) break;
    }
    out.push_back(std::move(arc));
  }
  return out;
}

std::vector<int> arc_of_edges(const Diagram& d) {
  std::vector<int> of(d.edge_count() + 1, 0);
  for (const Arc& a : arcs(d))
    for (int e : a.edges) of[e] = a.index;
  return of;
}

std::vector<Region> regions(const Diagram& d) {
  if (d.is_unknot_token())
    return {Region{{BoundaryStep{-1, -1, -1, 1, Side::Left}}},
            Region{{BoundaryStep{-1, -1, -1, 1, Side::Right}}}};
  const auto& xs = d.crossings();
  const int n = d.crossing_count();
  std::vector<char> seen(4 * n, 0);
  std::vector<Region> out;
  for (int start = 0; start < 4 * n; ++start) {
    if (seen[start]) continue;
    Region r;
    int dart = start;
    while (!seen[dart]) {
      seen[dart] = 1;
      const int c = dart / 4, in = dart % 4, slot_out = (in + 3) % 4;
      const int e = xs[c].slots[slot_out];
      const bool along = !xs[c].is_incoming(slot_out);
      r.boundary.push_back(BoundaryStep{c, in, slot_out, e, along ? Side::Left : Side::Right});
      const auto other = along ? d.head(e) : d.tail(e);
      dart = other.first * 4 + other.second;
    }
    out.push_back(std::move(r));
  }
  return out;
}

int writhe(const Diagram& d) {
  int w = 0;
  for (const Crossing& x : d.crossings()) w += x.sign;
  return w;
}

int euler_characteristic(const Diagram& d) {
  if (d.is_unknot_token()) return 1 - 1 + 2;
  return d.crossing_count() - d.edge_count() + static_cast<int>(regions(d).size());
}

std::string to_gauss(const Diagram& d) {
  if (d.is_unknot_token()) return "";
  std::vector<int> number(d.crossing_count(), 0);
  int next = 0;
  std::string out;
  for (int e = 1; e <= d.edge_count(); ++e) {
    const auto [c, s] = d.head(e);
    if (number[c] == 0) number[c] = ++next;
    out += Crossing::is_over(s) ? 'O' : 'U';
    out += std::to_string(number[c]);
    out += d.crossings()[c].sign > 0 ? '+' : '-';
  }
  return out;
}

std::string to_json(const Diagram& d) {
  nlohmann::json j;
  j["crossings"] = nlohmann::json::array();
  j["signs"] = nlohmann::json::array();
  for (const Crossing& x : d.crossings()) {
    j["crossings"].push_back(x.slots);
    j["signs"].push_back(x.sign);
  }
  return j.dump();
}

Diagram diagram_from_json(std::string_view json) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json);
  } catch (const nlohmann::json::exception& e) {
    fail(DiagramErrorKind::MalformedToken, e.what());
  }
  if (!j.contains("crossings") || !j["crossings"].is_array())
    fail(DiagramErrorKind::MalformedToken, "missing \"crossings\" array");
  if (j["crossings"].empty()) return Diagram{};
  std::string pd;
  for (const auto& c : j["crossings"]) {
    if (!c.is_array() || c.size() != 4) fail(DiagramErrorKind::MalformedToken, "crossing must list 4 labels");
    if (!pd.empty()) pd += ';';
    pd += "X[" + std::to_string(c[0].get<int>()) + ',' + std::to_string(c[1].get<int>()) + ',' +
          std::to_string(c[2].get<int>()) + ',' + std::to_string(c[3].get<int>()) + ']';
  }
  Diagram d = parse_pd(pd);
  if (j.contains("signs")) {
    const auto& signs = j["signs"];
    if (!signs.is_array() || signs.size() != d.crossings().size())
      fail(DiagramErrorKind::MalformedToken, "\"signs\" length mismatch");
    for (std::size_t i = 0; i < signs.size(); ++i)
      if (signs[i].get<int>() != d.crossings()[i].sign)
        fail(DiagramErrorKind::MalformedToken, "sign of crossing " + std::to_string(i) + " disagrees with slots");
  }
  return d;
}

std::vector<Crossing> canonical_form(const Diagram& d) {
  if (d.is_unknot_token()) return {};
  const int edges = d.edge_count();
  const auto key = [](const Crossing& x) { return std::pair{x.slots, x.sign}; };
  std::vector<Crossing> best;
  for (int r = 0; r < edges; ++r) {
    std::vector<Crossing> cand = d.crossings();
    for (Crossing& x : cand)
      for (int& s : x.slots) s = ((s - 1 - r) % edges + edges) % edges + 1;
    std::sort(cand.begin(), cand.end(), [&](const Crossing& a, const Crossing& b) { return key(a) < key(b); });
    if (best.empty() || std::lexicographical_compare(cand.begin(), cand.end(), best.begin(), best.end(),
                                                     [&](const Crossing& a, const Crossing& b) {
                                                       return key(a) < key(b);
                                                     }))
      best = std::move(cand);
  }
  return best;
}

}  // namespace knotforge
