#pragma once
// Conversions between library values and the plain data the oracles use.

#include "knotforge/diagram.hpp"
#include "knotforge/presentation.hpp"
#include "oracles.hpp"

namespace support {

inline oracle::Pd pd_of(const knotforge::Diagram& d) {
  oracle::Pd pd;
  for (const auto& x : d.crossings()) pd.push_back(x.slots);
  return pd;
}

inline std::vector<oracle::Rel> rels_of(const knotforge::GroupPresentation& p) {
  std::vector<oracle::Rel> out;
  for (const auto& w : p.relators) {
    out.emplace_back();
    for (const auto& l : w) out.back().push_back({l.gen, l.exp});
  }
  return out;
}

/// Parses "x z^-1 y^-1 z" style words over the given generator names.
inline oracle::Rel word(const std::string& text, const std::string& names) {
  oracle::Rel out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == ' ') {
      ++i;
      continue;
    }
    const int g = static_cast<int>(names.find(text[i]));
    int e = 1;
    ++i;
    if (text.compare(i, 3, "^-1") == 0) {
      e = -1;
      i += 3;
    }
    out.push_back({g, e});
  }
  return out;
}

}  // namespace support
