#pragma once

#include <array>
#include <span>
#include <vector>

#include "kempelab/embed.hpp"

namespace kempelab {

// Edge colors are the non-identity Klein four-group elements, so the color of
// an edge is the XOR of its endpoint classes and chains compose by XOR.
inline constexpr int kRed = 1;    // joins vertex colors {1,3} or {2,4}
inline constexpr int kGreen = 2;  // joins {1,4} or {2,3}
inline constexpr int kBlue = 3;   // joins {1,2} or {3,4}
inline constexpr std::array<int, 3> kColors{kRed, kGreen, kBlue};

char color_letter(int c);  // 'R', 'G', 'B'

int klein_of_vertex_color(int c);  // 1,2,3,4 -> 0,3,1,2
int vertex_color_of_klein(int k);
int edge_color_of(int cu, int cv);  // color of an edge joining vertex colors cu, cv

using VertexColoring = std::vector<int>;  // vertex -> 1..4
using RgbTiling = std::vector<int>;       // edge id -> kRed/kGreen/kBlue

bool is_proper_coloring(const SimpleGraph& g, const VertexColoring& c);
bool is_rgb_tiling(const Embedding& e, const RgbTiling& t);

// All proper 4-colorings in lexicographic order (vertex 0 first).
std::vector<VertexColoring> enumerate_vertex_colorings(const SimpleGraph& g);

RgbTiling coloring_to_tiling(const Embedding& e, const VertexColoring& c);

// Klein propagation from base_vertex carrying base_color.  On One Piece this
// always succeeds; with several outer facets a tiling can have inconsistent
// holonomy around a facet, reported as InconsistentHolonomy.
VertexColoring tiling_to_coloring(const Embedding& e, const RgbTiling& t,
                                  int base_vertex, int base_color);

// Backtracking over faces in ascending id, colors tried R < G < B.
std::vector<RgbTiling> enumerate_rgb_tilings(const Embedding& e);

// Single-color tiling: every triangle carries exactly one member edge.  A
// member edge on an outer facet is a half-tile; perfect means there is none.
struct MonoTiling {
  int color = kRed;
  std::vector<char> member;  // per edge id
  bool perfect = false;
  std::vector<int> edges() const;  // sorted member edge ids
};

std::vector<MonoTiling> enumerate_mono_tilings(const Embedding& e, int color);
MonoTiling mono_restriction(const Embedding& e, const RgbTiling& t, int color);

// All tilings whose color class equals m; the count is 0 or a power of two.
std::vector<RgbTiling> extend_mono_to_rgb(const Embedding& e, const MonoTiling& m);

struct CycleStats {
  long odd_count = 0, even_count = 0;
  int oc = 0;  // fewest member edges whose removal kills all odd simple cycles
  int ec = 0;  // same for even simple cycles
};

inline constexpr long kDefaultCycleCap = 1'000'000;

// Exhaustive simple-cycle census of the subgraph spanned by the member edges.
CycleStats odd_cycle_stats(int n, std::span<const Edge> members,
                           long cap = kDefaultCycleCap);

// Edge colors read along one outer facet, anchored for reproducibility.
struct BoundarySignature {
  int facet = -1;
  std::vector<int> vertices;    // boundary cycle, rotated to the anchor
  std::vector<int> colors;      // colors[i] = color of vertices[i] -> vertices[i+1]
  std::array<int, 4> count{};   // count[c] = multiplicity of color c (index 0 unused)
};

// One signature per outer facet.  A facet containing anchor starts there;
// otherwise at its smallest vertex.
std::vector<BoundarySignature> boundary_signatures(const Embedding& e,
                                                   const RgbTiling& t,
                                                   int anchor = -1);

}  // namespace kempelab
