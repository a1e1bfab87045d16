#pragma once

#include <array>
#include <span>
#include <vector>

#include "kempelab/kempe.hpp"

namespace kempelab {

// All distinct images of t under the six permutations of the edge colors.
std::vector<RgbTiling> synonym_orbit(const Embedding& e, const RgbTiling& t);

// A simple cycle separates the sphere; Outside is the side holding the
// lowest-numbered non-triangular facet, or face 0 when the graph is closed.
enum class Side { Inside, Outside };

// Boundary colors along the cycle plus, for every pair of cycle vertices and
// every color, whether they are joined by a monochromatic path running
// through the chosen side (cycle edges always count).  The cycle is rotated
// to its smallest vertex and oriented toward its smaller neighbor, so equal
// skeletons mean equal data regardless of how the cycle was passed in.
struct Skeleton {
  std::vector<int> omega;
  Side side = Side::Inside;
  std::vector<int> boundary_colors;
  // pair (i, j), i < j, at index j*(j-1)/2 + i; [color] for colors 1..3
  std::vector<std::array<char, 4>> pair_connected;
  friend bool operator==(const Skeleton&, const Skeleton&) = default;
};

Skeleton skeleton(const Embedding& e, const RgbTiling& t,
                  std::span<const int> omega, Side side);

// Same skeleton; with up_to_synonym the second tiling may first be recolored
// by any color permutation.
bool equivalent(const Embedding& e, const RgbTiling& t1, const RgbTiling& t2,
                std::span<const int> omega, Side side,
                bool up_to_synonym = false);

inline constexpr long kDefaultStateCap = 1'000'000;

// Reachability by canal switches.  Vertex switches add nothing: firing a
// block equals switching each incident link in turn, so the canal moves
// already generate the whole move set.
bool congruent(const Embedding& e, const RgbTiling& t1, const RgbTiling& t2,
               long cap = kDefaultStateCap);

// Classes of all tilings of e under that reachability.
std::vector<std::vector<RgbTiling>> congruence_census(const Embedding& e,
                                                      long cap = kDefaultStateCap);

}  // namespace kempelab
