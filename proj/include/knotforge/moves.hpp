#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "knotforge/diagram.hpp"

namespace knotforge {

class MoveError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class MoveKind { R1_ADD, R1_REMOVE, R2_ADD, R2_REMOVE, R3 };

const char* to_string(MoveKind kind);

/// Where a move applies. Which fields are meaningful depends on `kind`:
///   R1_ADD     edge, sign (kink sign)
///   R1_REMOVE  crossing
///   R2_ADD     region, step (the strand pushed across), other_step (the
///              strand it crosses), over (true: the pushed strand goes over)
///   R2_REMOVE  region (a bigon), step (its over edge)
///   R3         region (a triangle), step (the side passing over both others)
/// Region and step indices refer to regions(d) of the diagram the site
/// was found on.
struct MoveSite {
  MoveKind kind = MoveKind::R1_ADD;
  int edge = 0;
  int sign = 0;
  int crossing = -1;
  int region = -1;
  int step = -1;
  int other_step = -1;
  bool over = false;

  friend bool operator==(const MoveSite&, const MoveSite&) = default;
};

/// Every applicable site of `kind`, in a deterministic order.
std::vector<MoveSite> find_sites(const Diagram& d, MoveKind kind);

/// Sites of all kinds, R1_ADD first, in MoveKind order.
std::vector<MoveSite> find_all_sites(const Diagram& d);

/// Applies the move. Throws MoveError("StaleSite ...") if `s` is not among
/// find_sites(d, s.kind).
Diagram apply(const Diagram& d, const MoveSite& s);

/// steps + 1 diagrams starting with d. Each step picks uniformly among all
/// sites, leaving out R1_ADD and R2_ADD sites that would exceed
/// max_crossings. Deterministic for a given seed.
std::vector<Diagram> random_walk(const Diagram& d, int steps, std::uint64_t seed, int max_crossings);

}  // namespace knotforge
