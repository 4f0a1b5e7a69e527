#include "knotforge/moves.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <string>

namespace knotforge {

const char* to_string(MoveKind kind) {
  switch (kind) {
    case MoveKind::R1_ADD: return "R1_ADD";
    case MoveKind::R1_REMOVE: return "R1_REMOVE";
    case MoveKind::R2_ADD: return "R2_ADD";
    case MoveKind::R2_REMOVE: return "R2_REMOVE";
    case MoveKind::R3: return "R3";
  }
  return "?";
}

namespace {

// Renumbers edge ids along the orientation, keeping id 1 in front when it
// survived the edit.
Diagram finish(const std::vector<Crossing>& raw) {
  if (raw.empty()) return Diagram{};
  int start = raw.front().slots[0];
  for (const Crossing& x : raw)
    for (int s : x.slots) start = std::min(start, s);
  return Diagram::relabeled(raw, start);
}

bool over_at_both_ends(const Diagram& d, int edge) {
  return Crossing::is_over(d.head(edge).second) && Crossing::is_over(d.tail(edge).second);
}

// Deletes the given crossings and joins each strand passing through them.
Diagram remove_crossings(const Diagram& d, const std::vector<int>& doomed) {
  std::vector<int> parent(d.edge_count() + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int e) {
    while (parent[e] != e) e = parent[e] = parent[parent[e]];
    return e;
  };
  auto join = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a > b) std::swap(a, b);
    parent[b] = a;
  };
  for (int c : doomed) {
    const Crossing& x = d.crossings()[c];
    join(x.slots[0], x.slots[2]);
    join(x.slots[x.over_in_slot()], x.slots[x.over_out_slot()]);
  }
  std::vector<Crossing> raw;
  for (int c = 0; c < d.crossing_count(); ++c) {
    if (std::find(doomed.begin(), doomed.end(), c) != doomed.end()) continue;
    Crossing x = d.crossings()[c];
    for (int& s : x.slots) s = find(s);
    raw.push_back(x);
  }
  return finish(raw);
}

std::vector<MoveSite> r1_add_sites(const Diagram& d) {
  std::vector<MoveSite> out;
  for (int e = 1; e <= d.edge_count(); ++e)
    for (int sign : {1, -1}) out.push_back(MoveSite{.kind = MoveKind::R1_ADD, .edge = e, .sign = sign});
  return out;
}

std::vector<MoveSite> r1_remove_sites(const Diagram& d) {
  std::vector<MoveSite> out;
  for (int c = 0; c < d.crossing_count(); ++c) {
    const auto& s = d.crossings()[c].slots;
    for (int i = 0; i < 4; ++i)
      if (s[i] == s[(i + 1) % 4]) {
        out.push_back(MoveSite{.kind = MoveKind::R1_REMOVE, .crossing = c});
        break;
      }
  }
  return out;
}

std::vector<MoveSite> r2_add_sites(const Diagram& d, const std::vector<Region>& faces) {
  std::vector<MoveSite> out;
  if (d.is_unknot_token()) return out;
  for (int r = 0; r < static_cast<int>(faces.size()); ++r) {
    const auto& b = faces[r].boundary;
    for (int i = 0; i < static_cast<int>(b.size()); ++i)
      for (int k = 0; k < static_cast<int>(b.size()); ++k) {
        if (b[i].edge == b[k].edge) continue;
        for (bool over : {true, false})
          out.push_back(MoveSite{.kind = MoveKind::R2_ADD, .region = r, .step = i, .other_step = k, .over = over});
      }
  }
  return out;
}

std::vector<MoveSite> r2_remove_sites(const Diagram& d, const std::vector<Region>& faces) {
  std::vector<MoveSite> out;
  if (d.is_unknot_token()) return out;
  for (int r = 0; r < static_cast<int>(faces.size()); ++r) {
    const auto& b = faces[r].boundary;
    if (b.size() != 2 || b[0].crossing == b[1].crossing) continue;
    if (d.crossings()[b[0].crossing].sign == d.crossings()[b[1].crossing].sign) continue;
    for (int i = 0; i < 2; ++i)
      if (over_at_both_ends(d, b[i].edge)) {
        out.push_back(MoveSite{.kind = MoveKind::R2_REMOVE, .region = r, .step = i});
        break;
      }
  }
  return out;
}

std::vector<MoveSite> r3_sites(const Diagram& d, const std::vector<Region>& faces) {
  std::vector<MoveSite> out;
  if (d.is_unknot_token()) return out;
  for (int r = 0; r < static_cast<int>(faces.size()); ++r) {
    const auto& b = faces[r].boundary;
    if (b.size() != 3) continue;
    if (b[0].crossing == b[1].crossing || b[1].crossing == b[2].crossing || b[0].crossing == b[2].crossing) continue;
    for (int i = 0; i < 3; ++i)
      if (Crossing::is_over(b[i].slot_out) && Crossing::is_over(b[(i + 1) % 3].slot_in)) {
        out.push_back(MoveSite{.kind = MoveKind::R3, .region = r, .step = i});
        break;
      }
  }
  return out;
}

Diagram apply_r1_add(const Diagram& d, const MoveSite& s) {
  std::vector<Crossing> raw = d.crossings();
  const int e = s.edge;
  const int loop = d.edge_count() + 1;
  int after = e;
  if (!d.is_unknot_token()) {
    after = d.edge_count() + 2;
    const auto [c, slot] = d.head(e);
    raw[c].slots[slot] = after;
  }
  if (s.sign > 0)
    raw.push_back(Crossing{{e, after, loop, loop}, 1});
  else
    raw.push_back(Crossing{{e, loop, loop, after}, -1});
  return finish(raw);
}

// Pushes a finger of one boundary strand of a face across another. Seen
// with the face on the left of both traversals, the pushed strand e runs
// e1 -> X1 -> e2 -> X2 -> e3 and the crossed strand f runs
// f1 -> X2 -> f2 -> X1 -> f3. At X1 the arms are, counterclockwise from
// the south, e2 f3 e1 f2; at X2 they are e2 f2 e3 f1.
Diagram apply_r2_add(const Diagram& d, const MoveSite& s) {
  const auto faces = regions(d);
  const BoundaryStep& p = faces[s.region].boundary[s.step];
  const BoundaryStep& q = faces[s.region].boundary[s.other_step];
  std::vector<Crossing> raw = d.crossings();
  int next = d.edge_count() + 1;

  struct Pieces {
    int first, middle, last;  // in traversal order
    bool along;
  };
  auto split = [&](const BoundaryStep& step) {
    Pieces pc{};
    pc.along = step.side == Side::Left;
    pc.middle = next++;
    if (pc.along) {
      pc.first = step.edge;
      pc.last = next++;
    } else {
      pc.last = step.edge;
      pc.first = next++;
    }
    const auto [c, slot] = d.head(step.edge);
    raw[c].slots[slot] = pc.along ? pc.last : pc.first;
    return pc;
  };
  const Pieces e = split(p);
  const Pieces f = split(q);

  // arms: S, E, N, W. e_in / f_in: arm where each strand enters when
  // followed in traversal order.
  auto make = [&](std::array<int, 4> arms, int e_in, int f_in) {
    if (!e.along) e_in = (e_in + 2) % 4;
    if (!f.along) f_in = (f_in + 2) % 4;
    const int under_in = s.over ? f_in : e_in;
    const int over_in = s.over ? e_in : f_in;
    Crossing x;
    for (int k = 0; k < 4; ++k) x.slots[k] = arms[(under_in + k) % 4];
    x.sign = (over_in - under_in + 4) % 4 == 3 ? 1 : -1;
    return x;
  };
  raw.push_back(make({e.middle, f.last, e.first, f.middle}, 2, 3));
  raw.push_back(make({e.middle, f.middle, e.last, f.first}, 0, 3));
  return finish(raw);
}

Diagram apply_r2_remove(const Diagram& d, const MoveSite& s) {
  const auto faces = regions(d);
  const auto& b = faces[s.region].boundary;
  return remove_crossings(d, {b[0].crossing, b[1].crossing});
}

// Slides the over side of the triangle across the opposite crossing. Each
// strand keeps its edges; its two triangle crossings trade places.
Diagram apply_r3(const Diagram& d, const MoveSite& s) {
  const auto faces = regions(d);
  const auto& b = faces[s.region].boundary;
  const auto& old = d.crossings();
  std::vector<Crossing> xs = old;
  for (int i = 0; i < 3; ++i) {
    const int v = b[i].crossing, j = b[i].slot_out;
    const int w = b[(i + 1) % 3].crossing, k = b[(i + 1) % 3].slot_in;
    const int side = b[i].edge;
    xs[v].slots[(j + 2) % 4] = side;
    xs[v].slots[j] = old[w].slots[(k + 2) % 4];
    xs[w].slots[(k + 2) % 4] = side;
    xs[w].slots[k] = old[v].slots[(j + 2) % 4];
  }
  return Diagram::from_crossings(std::move(xs));
}

}  // namespace

std::vector<MoveSite> find_sites(const Diagram& d, MoveKind kind) {
  switch (kind) {
    case MoveKind::R1_ADD: return r1_add_sites(d);
    case MoveKind::R1_REMOVE: return r1_remove_sites(d);
    case MoveKind::R2_ADD: return r2_add_sites(d, regions(d));
    case MoveKind::R2_REMOVE: return r2_remove_sites(d, regions(d));
    case MoveKind::R3: return r3_sites(d, regions(d));
  }
  return {};
}

std::vector<MoveSite> find_all_sites(const Diagram& d) {
  const auto faces = regions(d);
  std::vector<MoveSite> out = r1_add_sites(d);
  for (auto&& part : {r1_remove_sites(d), r2_add_sites(d, faces), r2_remove_sites(d, faces), r3_sites(d, faces)})
    out.insert(out.end(), part.begin(), part.end());
  return out;
}

Diagram apply(const Diagram& d, const MoveSite& s) {
  const auto sites = find_sites(d, s.kind);
  if (std::find(sites.begin(), sites.end(), s) == sites.end())
    throw MoveError(std::string("StaleSite: ") + to_string(s.kind) + " site does not apply to this diagram");
  switch (s.kind) {
    case MoveKind::R1_ADD: return apply_r1_add(d, s);
    case MoveKind::R1_REMOVE: return remove_crossings(d, {s.crossing});
    case MoveKind::R2_ADD: return apply_r2_add(d, s);
    case MoveKind::R2_REMOVE: return apply_r2_remove(d, s);
    case MoveKind::R3: return apply_r3(d, s);
  }
  return d;
}

std::vector<Diagram> random_walk(const Diagram& d, int steps, std::uint64_t seed, int max_crossings) {
  std::mt19937_64 rng(seed);
  std::vector<Diagram> walk{d};
  for (int i = 0; i < steps; ++i) {
    const Diagram& cur = walk.back();
    std::vector<MoveSite> sites;
    for (const MoveSite& s : find_all_sites(cur)) {
      const int growth = s.kind == MoveKind::R1_ADD ? 1 : s.kind == MoveKind::R2_ADD ? 2 : 0;
      if (cur.crossing_count() + growth <= max_crossings) sites.push_back(s);
    }
    if (sites.empty()) {
      walk.push_back(cur);
      continue;
    }
    std::uniform_int_distribution<std::size_t> pick(0, sites.size() - 1);
    walk.push_back(apply(cur, sites[pick(rng)]));
  }
  return walk;
}

}  // namespace knotforge
