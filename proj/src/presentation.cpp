#include "knotforge/presentation.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <set>

#include <json.hpp>

namespace knotforge {

Word inverse(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back({it->gen, -it->exp});
  return out;
}

namespace {

bool cancels(const Letter& a, const Letter& b) { return a.gen == b.gen && a.exp == -b.exp; }

Word rotated(const Word& w, std::size_t i) {
  Word out(w.begin() + static_cast<std::ptrdiff_t>(i), w.end());
  out.insert(out.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
  return out;
}

}  // namespace

Word free_reduce(const Word& w) {
  Word out;
  for (const Letter& l : w) {
    if (!out.empty() && cancels(out.back(), l))
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

Word cyclic_reduce(const Word& w) {
  Word r = free_reduce(w);
  std::size_t lo = 0, hi = r.size();
  while (hi - lo >= 2 && cancels(r[lo], r[hi - 1])) {
    ++lo;
    --hi;
  }
  return Word(r.begin() + static_cast<std::ptrdiff_t>(lo), r.begin() + static_cast<std::ptrdiff_t>(hi));
}

Word canonical(const Word& w) {
  if (w.empty()) return {};
  Word best = w;
  for (const Word& x : {w, inverse(w)})
    for (std::size_t i = 0; i < x.size(); ++i) best = std::min(best, rotated(x, i));
  return best;
}

bool cyclically_equal(const Word& a, const Word& b) {
  return canonical(cyclic_reduce(a)) == canonical(cyclic_reduce(b));
}

const char* to_string(GeneratorRole role) {
  switch (role) {
    case GeneratorRole::Arc: return "ARC";
    case GeneratorRole::Meridian: return "MERIDIAN";
    case GeneratorRole::Longitude: return "LONGITUDE";
    case GeneratorRole::Pillar: return "PILLAR";
  }
  return "?";
}

int GroupPresentation::find(std::string_view name) const {
  for (int i = 0; i < generator_count(); ++i)
    if (generators[i].name == name) return i;
  return -1;
}

void validate(const GroupPresentation& p) {
  for (const Word& w : p.relators)
    for (const Letter& l : w) {
      if (l.gen < 0 || l.gen >= p.generator_count())
        throw PresentationError("relator uses generator index " + std::to_string(l.gen) + " out of range");
      if (l.exp != 1 && l.exp != -1) throw PresentationError("letter exponent must be +1 or -1");
    }
}

GroupPresentation wirtinger(const Diagram& d) {
  const auto arc_list = arcs(d);
  const auto arc_of = arc_of_edges(d);
  GroupPresentation p;
  const int n = static_cast<int>(arc_list.size());
  for (int i = 0; i < n; ++i) {
    std::string name = n <= 3 ? std::string(1, "xyz"[i]) : "x" + std::to_string(i + 1);
    p.generators.push_back({std::move(name), GeneratorRole::Arc, i});
  }
  for (const Crossing& x : d.crossings()) {
    const int a = arc_of[x.slots[0]], b = arc_of[x.slots[1]], c = arc_of[x.slots[2]];
    if (x.sign > 0)
      p.relators.push_back(cyclic_reduce(Word{{c, -1}, {b, -1}, {a, 1}, {b, 1}}));
    else
      p.relators.push_back(cyclic_reduce(Word{{c, -1}, {b, 1}, {a, 1}, {b, -1}}));
  }
  return p;
}

namespace {

std::string pillar_name(int i) {
  static const std::string letters = "ABCDEFGHIJKNOPQRSTUVWXYZ";
  if (i < static_cast<int>(letters.size())) return std::string(1, letters[i]);
  return "P" + std::to_string(i + 1);
}

}  // namespace

GroupPresentation alexander_briggs(const Diagram& d, int base_edge) {
  if (d.is_unknot_token()) throw PresentationError("NoCrossings: the diagram has no crossings");
  if (base_edge < 1 || base_edge > d.edge_count())
    throw PresentationError("base edge " + std::to_string(base_edge) + " is not an edge label");
  const int n = d.crossing_count();
  const int lon = 0, mer = n + 1;
  GroupPresentation p;
  p.generators.push_back({"L", GeneratorRole::Longitude, 0});
  for (int c = 0; c < n; ++c) p.generators.push_back({pillar_name(c), GeneratorRole::Pillar, c});
  p.generators.push_back({"M", GeneratorRole::Meridian, 0});

  p.relators.push_back(Word{{lon, -1}, {mer, -1}, {lon, 1}, {mer, 1}});
  for (const Region& r : regions(d)) {
    Word w;
    for (const BoundaryStep& s : r.boundary) {
      const Crossing& x = d.crossings()[s.crossing];
      const bool under_in = !Crossing::is_over(s.slot_in);
      // Entering on the right of the strand, or leaving on its right,
      // passes the meridian disk.
      if (under_in && !x.is_incoming(s.slot_in)) w.push_back({mer, -1});
      w.push_back({1 + s.crossing, under_in ? -1 : 1});
      if (!under_in && s.side == Side::Right) w.push_back({mer, 1});
      if (s.edge == base_edge) w.push_back({lon, x.is_incoming(s.slot_out) ? 1 : -1});
    }
    p.relators.push_back(cyclic_reduce(w));
  }
  return p;
}

namespace {

// Shortens r by replacing any piece longer than half of a cyclic
// conjugate of another relator with the inverse of the remainder, until
// nothing applies.
Word dehn_reduce(Word r, const std::vector<const Word*>& others) {
  r = cyclic_reduce(r);
  bool changed = true;
  while (changed && !r.empty()) {
    changed = false;
    const std::size_t n = r.size();
    Word rr = r;
    rr.insert(rr.end(), r.begin(), r.end());
    for (const Word* s : others) {
      const std::size_t len = s->size();
      for (const Word& x : {*s, inverse(*s)}) {
        for (std::size_t i = 0; i < len && !changed; ++i) {
          const Word rot = rotated(x, i);
          for (std::size_t k = len; k > len / 2 && !changed; --k) {
            if (k > n) continue;
            for (std::size_t st = 0; st < n; ++st) {
              if (!std::equal(rot.begin(), rot.begin() + static_cast<std::ptrdiff_t>(k),
                              rr.begin() + static_cast<std::ptrdiff_t>(st)))
                continue;
              Word next = inverse(Word(rot.begin() + static_cast<std::ptrdiff_t>(k), rot.end()));
              next.insert(next.end(), rr.begin() + static_cast<std::ptrdiff_t>(st + k),
                          rr.begin() + static_cast<std::ptrdiff_t>(st + n));
              r = cyclic_reduce(next);
              changed = true;
              break;
            }
          }
        }
        if (changed) break;
      }
      if (changed) break;
    }
  }
  return r;
}

Word substitute(const Word& w, int gen, const Word& image) {
  Word out;
  const Word inv_image = inverse(image);
  for (const Letter& l : w) {
    if (l.gen != gen)
      out.push_back(l);
    else
      out.insert(out.end(), (l.exp > 0 ? image : inv_image).begin(), (l.exp > 0 ? image : inv_image).end());
  }
  return cyclic_reduce(out);
}

}  // namespace

GroupPresentation tietze_simplify(const GroupPresentation& p, std::size_t max_relator_length) {
  validate(p);
  std::vector<int> gens(p.generator_count());
  std::iota(gens.begin(), gens.end(), 0);
  std::vector<Word> rels;
  for (const Word& w : p.relators) rels.push_back(cyclic_reduce(w));

  for (;;) {
    std::set<Word> unique;
    for (const Word& w : rels)
      if (!w.empty()) unique.insert(canonical(w));
    rels.assign(unique.begin(), unique.end());
    std::stable_sort(rels.begin(), rels.end(), [](const Word& a, const Word& b) { return a.size() < b.size(); });

    for (std::size_t i = 0; i < rels.size();) {
      std::vector<const Word*> others;
      for (std::size_t j = 0; j < rels.size(); ++j)
        if (j != i) others.push_back(&rels[j]);
      if (dehn_reduce(rels[i], others).empty())
        rels.erase(rels.begin() + static_cast<std::ptrdiff_t>(i));
      else
        ++i;
    }

    bool found = false;
    std::size_t best_len = 0;
    int best_gen = 0;
    std::vector<Word> best_rels;
    for (std::size_t ri = 0; ri < rels.size(); ++ri) {
      const Word& r = rels[ri];
      if (found && r.size() > best_len) break;
      for (int g : gens) {
        if (found && r.size() == best_len && g >= best_gen) break;
        std::size_t count = 0, at = 0;
        for (std::size_t k = 0; k < r.size(); ++k)
          if (r[k].gen == g) {
            ++count;
            at = k;
          }
        if (count != 1) continue;
        // g^e * rest = 1 with rest read cyclically after g.
        Word rest(r.begin() + static_cast<std::ptrdiff_t>(at + 1), r.end());
        rest.insert(rest.end(), r.begin(), r.begin() + static_cast<std::ptrdiff_t>(at));
        const Word image = r[at].exp > 0 ? inverse(rest) : rest;
        std::vector<Word> next;
        bool fits = true;
        for (std::size_t qi = 0; qi < rels.size() && fits; ++qi) {
          if (qi == ri) continue;
          next.push_back(substitute(rels[qi], g, image));
          fits = next.back().size() <= max_relator_length;
        }
        if (!fits) continue;
        found = true;
        best_len = r.size();
        best_gen = g;
        best_rels = std::move(next);
        break;
      }
    }
    if (!found) break;
    gens.erase(std::find(gens.begin(), gens.end(), best_gen));
    rels = std::move(best_rels);
  }

  GroupPresentation out;
  std::vector<int> renumber(p.generator_count(), -1);
  for (int g : gens) {
    renumber[g] = out.generator_count();
    out.generators.push_back(p.generators[g]);
  }
  for (Word w : rels) {
    for (Letter& l : w) l.gen = renumber[l.gen];
    out.relators.push_back(std::move(w));
  }
  return out;
}

std::vector<std::int64_t> abelianize(const GroupPresentation& p) {
  validate(p);
  const int cols = p.generator_count();
  std::vector<std::vector<std::int64_t>> a;
  for (const Word& w : p.relators) {
    std::vector<std::int64_t> row(cols, 0);
    for (const Letter& l : w) row[l.gen] += l.exp;
    a.push_back(std::move(row));
  }
  const int rows = static_cast<int>(a.size());
  std::vector<std::int64_t> diag;
  for (int t = 0; t < std::min(rows, cols); ++t) {
    bool empty_block = false;
    for (;;) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      int pr = -1, pc = -1;
      for (int i = t; i < rows; ++i)
        for (int j = t; j < cols; ++j)
          if (a[i][j] != 0 && (pr < 0 || std::llabs(a[i][j]) < std::llabs(a[pr][pc]))) {
            pr = i;
            pc = j;
          }
      if (pr < 0) {
        empty_block = true;
        break;
      }
      std::swap(a[t], a[pr]);
      for (auto& row : a) std::swap(row[t], row[pc]);
      bool clean = true;
      for (int i = t + 1; i < rows; ++i) {
        const std::int64_t q = a[i][t] / a[t][t];
        for (int j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
        clean = clean && a[i][t] == 0;
      }
      for (int j = t + 1; j < cols; ++j) {
        const std::int64_t q = a[t][j] / a[t][t];
        for (int i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
        clean = clean && a[t][j] == 0;
      }
      if (!clean) continue;
      int bad = -1;
      for (int i = t + 1; i < rows && bad < 0; ++i)
        for (int j = t + 1; j < cols; ++j)
          if (a[i][j] % a[t][t] != 0) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      for (int j = t; j < cols; ++j) a[t][j] += a[bad][j];
    }
    if (empty_block) break;
    diag.push_back(std::llabs(a[t][t]));
  }
  diag.resize(cols, 0);
  return diag;
}

namespace {

// Backtracking over generator images in index order. A relator whose
// generators are all assigned is checked; one with a single unassigned
// generator occurring once forces that generator's image.
class HomSearch {
 public:
  HomSearch(const GroupPresentation& p, const FiniteGroup& g, std::vector<int> domain)
      : p_(p), g_(g), domain_(std::move(domain)), allowed_(g.order(), 0), image_(p.generator_count(), -1),
        touching_(p.generator_count()) {
    for (int v : domain_) allowed_[v] = 1;
    for (int r = 0; r < static_cast<int>(p.relators.size()); ++r) {
      std::set<int> seen;
      for (const Letter& l : p.relators[r])
        if (seen.insert(l.gen).second) touching_[l.gen].push_back(r);
    }
    plan_order();
  }

  std::uint64_t count(const std::vector<int>& first_values) {
    if (p_.generator_count() == 0) return 1;
    std::uint64_t total = 0;
    for (int v : first_values) {
      const std::size_t mark = trail_.size();
      if (assign(0, v)) total += descend();
      undo(mark);
    }
    return total;
  }

 private:
  // Branching order: generator 0 first (the thread split), then greedily
  // the generator whose assignment forces the most others by propagation.
  void plan_order() {
    const int n = p_.generator_count();
    std::vector<char> known(n, 0);
    auto close = [&](std::vector<char>& k) {
      int gained = 0;
      for (bool changed = true; changed;) {
        changed = false;
        for (const Word& w : p_.relators) {
          int open = -1, uses = 0;
          bool several = false;
          for (const Letter& l : w)
            if (!k[l.gen]) {
              several = several || (open >= 0 && open != l.gen);
              open = l.gen;
              ++uses;
            }
          if (open >= 0 && !several && uses == 1) {
            k[open] = 1;
            ++gained;
            changed = true;
          }
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
      for (int g = 0; g < n; ++g) {
        if (known[g]) continue;
        std::vector<char> trial = known;
        trial[g] = 1;
        const int gained = close(trial);
        if (gained > best) best = gained, next = g;
      }
    }
  }

  std::uint64_t descend() {
    int next = -1;
    for (int g : order_)
      if (image_[g] < 0) {
        next = g;
        break;
      }
    if (next < 0)
      for (int g = 0; g < p_.generator_count() && next < 0; ++g)
        if (image_[g] < 0) next = g;
    if (next < 0) return 1;
    std::uint64_t total = 0;
    for (int v : domain_) {
      const std::size_t mark = trail_.size();
      if (assign(next, v)) total += descend();
      undo(mark);
    }
    return total;
  }

  int value(int gen, int exp) const { return exp > 0 ? image_[gen] : g_.inverse(image_[gen]); }

  bool assign(int gen, int v) {
    image_[gen] = v;
    trail_.push_back(gen);
    std::vector<int> queue(touching_[gen]);
    while (!queue.empty()) {
      const Word& w = p_.relators[queue.back()];
      queue.pop_back();
      int open = -1, open_count = 0;
      bool several = false;
      for (const Letter& l : w)
        if (image_[l.gen] < 0) {
          if (open >= 0 && open != l.gen) several = true;
          open = l.gen;
          ++open_count;
        }
      if (several) continue;
      if (open < 0) {
        int acc = g_.identity();
        for (const Letter& l : w) acc = g_.mul(acc, value(l.gen, l.exp));
        if (acc != g_.identity()) return false;
        continue;
      }
      if (open_count != 1) continue;
      // w = u h^e v = 1 gives h^e = u^-1 v^-1.
      int before = g_.identity(), after = g_.identity(), e = 1;
      bool seen_open = false;
      for (const Letter& l : w) {
        if (l.gen == open) {
          seen_open = true;
          e = l.exp;
        } else if (!seen_open) {
          before = g_.mul(before, value(l.gen, l.exp));
        } else {
          after = g_.mul(after, value(l.gen, l.exp));
        }
      }
      int forced = g_.mul(g_.inverse(before), g_.inverse(after));
      if (e < 0) forced = g_.inverse(forced);
      if (!allowed_[forced]) return false;
      image_[open] = forced;
      trail_.push_back(open);
      queue.insert(queue.end(), touching_[open].begin(), touching_[open].end());
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      image_[trail_.back()] = -1;
      trail_.pop_back();
    }
  }

  const GroupPresentation& p_;
  const FiniteGroup& g_;
  std::vector<int> domain_;
  std::vector<char> allowed_;
  std::vector<int> image_;
  std::vector<std::vector<int>> touching_;
  std::vector<int> trail_;
  std::vector<int> order_;
};

std::vector<int> all_elements(const FiniteGroup& g) {
  std::vector<int> v(g.order());
  std::iota(v.begin(), v.end(), 0);
  return v;
}

}  // namespace

std::uint64_t hom_count(const GroupPresentation& p, const FiniteGroup& g, int threads) {
  validate(p);
  const std::vector<int> domain = all_elements(g);
  const int tasks = std::clamp(threads, 1, g.order());
  auto part = [&](int k) {
    std::vector<int> firsts;
    for (int v = k; v < g.order(); v += tasks) firsts.push_back(v);
    return HomSearch(p, g, domain).count(firsts);
  };
  if (tasks == 1 || p.generator_count() == 0) return HomSearch(p, g, domain).count(domain);
  std::vector<std::future<std::uint64_t>> parts;
  for (int k = 0; k < tasks; ++k) parts.push_back(std::async(std::launch::async, part, k));
  std::uint64_t total = 0;
  for (auto& f : parts) total += f.get();
  return total;
}

std::uint64_t hom_count_within(const GroupPresentation& p, const FiniteGroup& g, const std::vector<int>& allowed) {
  validate(p);
  for (int v : allowed)
    if (v < 0 || v >= g.order()) throw PresentationError("allowed element out of range");
  return HomSearch(p, g, allowed).count(allowed);
}

std::string render(const GroupPresentation& p, const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (const Letter& l : w) {
    if (!out.empty()) out += ' ';
    out += p.generators.at(l.gen).name;
    if (l.exp < 0) out += "⁻¹";
  }
  return out;
}

std::string render(const GroupPresentation& p) {
  std::string out = "< ";
  for (int i = 0; i < p.generator_count(); ++i) out += (i ? ", " : "") + p.generators[i].name;
  out += " |";
  for (std::size_t i = 0; i < p.relators.size(); ++i) out += (i ? ", " : " ") + render(p, p.relators[i]);
  out += " >";
  return out;
}

std::string to_json(const GroupPresentation& p) {
  nlohmann::json j;
  j["generators"] = nlohmann::json::array();
  j["roles"] = nlohmann::json::array();
  for (const Generator& g : p.generators) {
    j["generators"].push_back(g.name);
    j["roles"].push_back({{"role", to_string(g.role)}, {"index", g.index}});
  }
  j["relators"] = nlohmann::json::array();
  for (const Word& w : p.relators) {
    nlohmann::json r = nlohmann::json::array();
    for (const Letter& l : w) r.push_back({p.generators.at(l.gen).name, l.exp});
    j["relators"].push_back(std::move(r));
  }
  return j.dump();
}

GroupPresentation presentation_from_json(std::string_view json) {
  GroupPresentation p;
  try {
    const auto j = nlohmann::json::parse(json);
    const auto& gens = j.at("generators");
    for (std::size_t i = 0; i < gens.size(); ++i) {
      Generator g{gens[i].get<std::string>(), GeneratorRole::Arc, static_cast<int>(i)};
      if (j.contains("roles")) {
        const auto& info = j["roles"].at(i);
        const std::string role = info.at("role").get<std::string>();
        bool known = false;
        for (GeneratorRole r : {GeneratorRole::Arc, GeneratorRole::Meridian, GeneratorRole::Longitude,
                                GeneratorRole::Pillar})
          if (role == to_string(r)) {
            g.role = r;
            known = true;
          }
        if (!known) throw PresentationError("unknown generator role '" + role + "'");
        g.index = info.at("index").get<int>();
      }
      p.generators.push_back(std::move(g));
    }
    for (const auto& r : j.at("relators")) {
      Word w;
      for (const auto& l : r) {
        const int gen = p.find(l.at(0).get<std::string>());
        if (gen < 0) throw PresentationError("relator names unknown generator '" + l.at(0).get<std::string>() + "'");
        w.push_back({gen, l.at(1).get<int>()});
      }
      p.relators.push_back(std::move(w));
    }
  } catch (const nlohmann::json::exception& e) {
    throw PresentationError(e.what());
  }
  validate(p);
  return p;
}

}  // namespace knotforge
