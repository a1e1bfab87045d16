#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "kempelab/embed.hpp"
#include "kempelab/tiling.hpp"

namespace kempelab {

// Maximal connected vertex set reachable through the two colors of `pair`.
struct KempeComponent {
  std::array<int, 2> pair{};  // ascending vertex colors
  int anchor = -1;
  std::vector<char> in;  // per vertex
  std::vector<int> vertices() const;
};

KempeComponent kempe_component(const SimpleGraph& g, const VertexColoring& c,
                               int v, std::array<int, 2> pair);

// Swap the two pair colors on the component.  comp must be maximal for c.
VertexColoring vcs(const SimpleGraph& g, const VertexColoring& c,
                   const KempeComponent& comp);

// Walk through the dual avoiding one color.  Each triangle has exactly one
// avoided edge, so these walks partition the non-avoided edges into rings and
// boundary-to-boundary lines.  Banks collect the avoided edge of each
// traversed triangle by side of travel.
struct CanalObject {
  int avoided = 0;
  bool ring = false;
  std::vector<int> walk;   // crossed primal edge ids, in travel order
  std::vector<int> faces;  // triangles between consecutive crossed edges
  std::vector<int> left_bank, right_bank;  // avoided-color edge ids
};

// Deterministic: lines start at their smaller boundary edge id and are listed
// first (by that id); rings start at their smallest face id, leaving through
// its smaller crossed edge, and follow in face-id order.
std::vector<CanalObject> canal_objects(const Embedding& e, const RgbTiling& t,
                                       int avoided);

// Swap the two non-avoided colors on the edges crossed by the canal.  Fails
// with StaleCanal when the canal does not fit t's avoided color class.
RgbTiling ecs(const Embedding& e, const RgbTiling& t, const CanalObject& canal);

struct Chain {
  int color = 0;
  std::vector<int> path;  // vertex sequence, size >= 1
  int length() const { return static_cast<int>(path.size()) - 1; }
  bool even() const { return length() % 2 == 0; }
};

// Shortest u-v path inside the color's edge subgraph, if any.
std::optional<Chain> chain(const Embedding& e, const RgbTiling& t, int color,
                           int u, int v);

bool chains_intersect(const Chain& p, const Chain& q, std::span<const int> ignore);

// Degree-5 configuration around v0 under a proper coloring of M - v0
// (c[v0] is ignored).  When the five neighbors carry four distinct colors they
// are relabeled v1..v5 in rotation order with colors (1,2,3,4,2): v1 sits
// between the two repeats and v2 is the repeat that follows it.
struct Deg5Report {
  bool four_around = false;
  int distinct_around = 0;
  std::array<int, 5> ring{};         // neighbor ids; normalized order when four_around
  std::array<int, 5> ring_colors{};  // normalized colors
  std::array<int, 5> color_map{};    // color_map[old] = normalized color, 1-based
  std::array<int, 5> pentagon{};     // normalized edge colors v1v2, v2v3, ..., v5v1
  bool has_r13 = false, has_r24 = false;  // Kempe chains v1~v3 {1,3}, v2~v4 {2,4}
  bool has_g14 = false, has_g35 = false;  // v1~v4 {1,4}, v3~v5 {2,3}
  bool exclusive_red = false;    // exactly one of has_r13 / has_r24
  bool exclusive_green = false;  // exactly one of has_g14 / has_g35
  VertexColoring normalized;     // color_map applied; normalized[v0] = 0
};

Deg5Report analyze_deg5(const Mpg& m, int v0, const VertexColoring& c);

// Replays the classical double switch in the configuration where both chains
// through v1 exist.  First variant: VCS on the {2,4} component of v2;
// (A) reports the v1~v4 {1,4} chain destroyed, (B) a fresh v3~v5 {2,3} chain.
// Symmetric variant starts at v5.  Completion flags tell whether following up
// with the second switch frees a color for v0.
struct TanglingReport {
  Deg5Report deg5;
  bool a_destroyed = false, b_created = false;
  bool a_sym_destroyed = false, b_sym_created = false;
  bool tangles = false, tangles_sym = false;
  bool completion_rg = false, completion_gr = false;
  VertexColoring completed;  // proper coloring of all of M when a completion worked
};

TanglingReport check_tangling(const Mpg& m, int v0, const VertexColoring& c);

}  // namespace kempelab
