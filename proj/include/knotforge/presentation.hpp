#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "knotforge/diagram.hpp"
#include "knotforge/group.hpp"

namespace knotforge {

class PresentationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A generator to the power +1 or -1. Letters order by generator index,
/// then exponent (-1 before +1).
struct Letter {
  int gen = 0;
  int exp = 1;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

Word inverse(const Word& w);
/// Cancels adjacent inverse pairs.
Word free_reduce(const Word& w);
/// Free reduction followed by cancelling inverse pairs across the ends.
Word cyclic_reduce(const Word& w);
/// Least rotation of the word or of its inverse. Two cyclically reduced
/// words are equal up to rotation and inversion iff their canonical
/// forms agree.
Word canonical(const Word& w);
bool cyclically_equal(const Word& a, const Word& b);

enum class GeneratorRole { Arc, Meridian, Longitude, Pillar };

const char* to_string(GeneratorRole role);

struct Generator {
  std::string name;
  GeneratorRole role = GeneratorRole::Arc;
  int index = 0;  // arc index or crossing index; 0 for meridian and longitude
  friend bool operator==(const Generator&, const Generator&) = default;
};

struct GroupPresentation {
  std::vector<Generator> generators;
  std::vector<Word> relators;

  int generator_count() const noexcept { return static_cast<int>(generators.size()); }
  int find(std::string_view name) const;
  friend bool operator==(const GroupPresentation&, const GroupPresentation&) = default;
};

/// Throws PresentationError if a relator names a generator out of range
/// or has an exponent other than +1 / -1.
void validate(const GroupPresentation& p);

/// One generator per arc (x, y, z for up to three arcs, x1, x2, ...
/// otherwise) and one relator per crossing: c^-1 b^-1 a b at a positive
/// crossing and c^-1 b a b^-1 at a negative one, where a is the incoming
/// and c the outgoing under-arc and b the over-arc, cyclically reduced
/// (a kink gives the empty word). The zero-crossing unknot gives <x | >.
GroupPresentation wirtinger(const Diagram& d);

/// Presentation from the meridian/longitude pair on `base_edge` and one
/// pillar per crossing. Generators are ordered longitude (L), pillars
/// (A, B, C, ... skipping L and M), meridian (M). The first relator is
/// L^-1 M^-1 L M; then one relator per region of regions(d), read along
/// its boundary. Throws PresentationError("NoCrossings") on the
/// zero-crossing unknot and for a base edge out of range.
GroupPresentation alexander_briggs(const Diagram& d, int base_edge);

/// Tietze simplification. Each round: cyclically reduce, drop empty and
/// duplicate relators, sort by (length, canonical form), drop relators
/// that Dehn-reduce to the empty word against the others, then eliminate
/// one generator occurring exactly once in some relator, choosing the
/// shortest such relator and then the lowest generator index, skipped if
/// any rewritten relator would exceed max_relator_length. Stops when no
/// elimination fits.
GroupPresentation tietze_simplify(const GroupPresentation& p, std::size_t max_relator_length = 64);

/// Invariant factors of the relator-by-generator exponent-sum matrix:
/// the nonzero Smith normal form diagonal in divisibility order, padded
/// with zeros to the generator count. <x | > gives (0).
std::vector<std::int64_t> abelianize(const GroupPresentation& p);

/// Number of homomorphisms to g: assignments of generators to elements
/// killing every relator. `threads` > 1 splits on the first generator.
std::uint64_t hom_count(const GroupPresentation& p, const FiniteGroup& g, int threads = 1);

/// Homomorphisms whose generator images all lie in `allowed`.
std::uint64_t hom_count_within(const GroupPresentation& p, const FiniteGroup& g, const std::vector<int>& allowed);

/// "x y⁻¹ z"; the empty word renders as "1".
std::string render(const GroupPresentation& p, const Word& w);
/// "< x, y | x y x y⁻¹ x⁻¹ y⁻¹ >".
std::string render(const GroupPresentation& p);

std::string to_json(const GroupPresentation& p);
GroupPresentation presentation_from_json(std::string_view json);

}  // namespace knotforge
