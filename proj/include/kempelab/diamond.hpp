#pragma once

#include <array>
#include <span>
#include <vector>

#include "kempelab/embed.hpp"
#include "kempelab/kempe.hpp"
#include "kempelab/tiling.hpp"

namespace kempelab {

// Vertex-anchored pairs among the four boundary edges of a one-edge split,
// drawn with N on top, S below, a west, b east: Wedge {aN,bN}, Vee {aS,bS},
// Less {aN,aS}, Greater {bN,bS}, Slash {aN,bS}, Backslash {aS,bN}.
enum class PairShape { Wedge, Vee, Less, Greater, Slash, Backslash };

inline constexpr std::array<PairShape, 6> kPairShapes{
    PairShape::Wedge, PairShape::Vee,   PairShape::Less,
    PairShape::Greater, PairShape::Slash, PairShape::Backslash};

PairShape shape_mate(PairShape s);     // the complementary pair
const char* shape_name(PairShape s);   // "^", "v", "<", ">", "//", "\\"

// Boundary labels of a one-edge split Q = M - ab: a < b span the removed
// edge, N is the apex of the face at dart a->b in the base graph, S the other
// apex.  eid holds the split's edge ids of aN, bN, aS, bS in that order.
struct DiamondFrame {
  int a = -1, b = -1, N = -1, S = -1;
  std::array<int, 4> eid{};
  std::array<int, 4> omega{};  // boundary cycle a, N, b, S
  std::array<int, 2> pair(PairShape s) const;
};

// NotFourGon unless the split has exactly one outer facet of length 4;
// PreconditionUnmet unless exactly one edge was removed.
DiamondFrame diamond_frame(const SemiMpg& q);

// Boundary class of a tiling.  Around the 4-gon the Klein relation forces
// either one color on all four edges (kind A) or two colors in opposite
// pairs; the pair split selects B (Wedge/Vee), C (Less/Greater) or
// D (Slash/Backslash).  dir names the pair carrying colors[0].
struct DiamondType {
  char kind = '?';  // 'A', 'B', 'C' or 'D'
  PairShape dir = PairShape::Wedge;
  std::array<int, 2> colors{};  // ascending; equal for kind A
};

DiamondType classify_diamond(const SemiMpg& q, const RgbTiling& t);

// Boundary families of a one-edge split.  Mono families admit only member
// subgraphs free of odd cycles (on One Piece exactly the extendable mono
// tilings): rt0r = red monos with no boundary member, gt2g = green monos with
// two boundary members (split by pair shape), bt4b = blue monos covering the
// whole boundary.  _ext counts the full tilings whose same-color class has
// that footprint; _orb counts tilings where any color class does.
struct FamilyCensus {
  int rt0r = 0;
  int gt2g = 0;
  std::array<int, 6> gt2g_by{};
  int bt4b = 0;
  long rt0r_ext = 0, gt2g_ext = 0, bt4b_ext = 0;
  std::array<long, 6> gt2g_ext_by{};
  long rt0r_orb = 0, gt2g_orb = 0, bt4b_orb = 0;
  std::array<long, 6> gt2g_orb_by{};
  long rgb_total = 0;
  std::array<long, 4> kinds{};  // tilings of kind A, B, C, D
};

FamilyCensus family_census(const SemiMpg& q);

// The closed graph admits a proper 4-coloring exactly when some extendable
// green mono of the split puts its two boundary members on Less or Slash.
struct IffReport {
  bool colorable = false;
  int gt_less = 0, gt_slash = 0;
  bool family_nonempty = false;
  bool agree = false;
};

IffReport four_color_iff(const Mpg& m, Edge e);

// Clause report over the split Q = M - ab.  All universals are vacuously true
// on empty families; counts are reported so callers can see vacuity.
//   a: rt0r, wedge-shaped gt2g and bt4b all inhabited while the sideways
//      shapes (Less, Greater, Slash, Backslash) are empty.
//   b: every perfect red mono joins a to b by a red path of even length.
//   c: every wedge green mono has extensions with both non-green fills below,
//      and each extension joins a to b evenly in the color missing from the
//      lower pair.
//   d: every covering blue mono extends, and every extension joins a to b by
//      even red and green paths.
struct NecessaryReport {
  bool a = false, b = false, c = false, d = false;
  bool d_vacuous = false;
  bool colorable = false;
  int rt0r = 0, gt2g_wedge = 0, gt2g_vee = 0, gt2g_sideways = 0, bt4b = 0;
};

NecessaryReport check_necessary(const Mpg& m, Edge e);

// Predicates whose truth would certify the closed graph non-4-colorable:
//   i:  every perfect red mono joins a to b by an even red path.
//   ii: every extension of every two-boundary green mono, read with the
//       non-green boundary pair as blue, joins a to b by an even red path.
//   ii_prime: every two-boundary green mono is Wedge- or Vee-shaped.
// Throws EmptyFamily when rt0r or gt2g is empty (never observed on splits of
// real triangulations; such a split would itself be a major finding).
struct SufficientReport {
  bool i = false, ii = false, ii_prime = false;
  int rt0r = 0, gt2g = 0;
};

SufficientReport check_sufficient(const Mpg& m, Edge e);

// Region swap on a kind A tiling: take an a-b chain in the smallest color
// absent from the boundary, close it with the removed edge in the base graph,
// and swap the other two colors on every split edge strictly inside the disk
// holding N.  The boundary pair at N flips, so the result is kind B with the
// chain color's class untouched.  NoRedChain when no such chain exists; the
// caller then knows closing the removed edge in that color creates no odd
// cycle, which witnesses 4-colorability.
struct RegionSwap {
  Chain chain;
  std::vector<int> region;  // split edge ids strictly inside, ascending
  RgbTiling result;
};

RegionSwap typeA_to_typeB(const SemiMpg& q, const RgbTiling& t);

// Trades the removed edge for the N-S diagonal under a kind B tiling whose
// class missing from the boundary is first renamed red.  The diagonal extends
// the red class; the member set is scanned for odd cycles and the resulting
// triangulation is colored by enumeration.  NSAdjacent reports the dichotomy:
// adjacent apexes mean the base is K4 or carries a nontrivial triangle.
struct AugmentReport {
  Mpg flipped;
  std::vector<Edge> red_members;  // normalized red class plus the diagonal
  bool red_odd_cycle = false;
  long colorings = 0;
  bool colorable = false;
};

AugmentReport ns_augment(const SemiMpg& q, const RgbTiling& t);

// The bare rotation surgery behind ns_augment: removed edge out, apex
// diagonal in.  Needs no tiling; NSAdjacent when the diagonal already exists.
Mpg apex_flip(const SemiMpg& q);

// Scans (graph, edge) pairs where covering blue monos exist and every
// extension of every one of them joins a to b by even red and green chains,
// yet the closed graph 4-colors with the removed edge red.  Each hit refutes
// the would-be sufficiency of the forced-chain condition.
struct HuntHit {
  int graph = -1;  // index into the corpus
  Edge e;
  int bt4b = 0;
  long extensions = 0;
  long red_e_colorings = 0;
};

std::vector<HuntHit> hunt_counterexamples(std::span<const Mpg> corpus);

}  // namespace kempelab
