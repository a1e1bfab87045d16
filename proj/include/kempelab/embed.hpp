#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "kempelab/errors.hpp"

namespace kempelab {

struct Edge {
  int u = -1, v = -1;  // normalized u < v
  Edge() = default;
  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Plain graph view used by the coloring routines; also accepts non-planar
// inputs (e.g. K5) where only adjacency matters.
struct SimpleGraph {
  int n = 0;
  std::vector<Edge> edges;               // sorted, index = edge id
  std::vector<std::vector<int>> adj;     // sorted neighbor lists
  static SimpleGraph from_edges(int n, std::span<const Edge> edges);
  bool adjacent(int u, int v) const;
};

// Combinatorial map: one neighbor cycle per vertex, globally consistent
// orientation.  Faces, the edge table and the face/edge incidences are all
// derived at construction and kept immutable afterwards.
struct Embedding {
  int n = 0;
  std::vector<std::vector<int>> rot;           // rot[v] = neighbor cycle
  std::vector<Edge> edges;                     // sorted, index = edge id
  std::vector<std::vector<int>> faces;         // face id -> vertex cycle
  std::vector<std::vector<int>> face_of_dart;  // [v][k] = face at dart v->rot[v][k]
  std::vector<std::array<int, 2>> edge_face;   // edge id -> {face at u->v, face at v->u}

  int m() const { return static_cast<int>(edges.size()); }
  int face_count() const { return static_cast<int>(faces.size()); }
  int degree(int v) const { return static_cast<int>(rot[v].size()); }
  int rot_index(int v, int u) const;           // index of u in rot[v], -1 if absent
  bool adjacent(int u, int v) const { return rot_index(u, v) >= 0; }
  int edge_id(int u, int v) const;             // -1 if absent
  int edge_id_checked(int u, int v) const;     // throws EdgeAbsent
  const Edge& edge(int id) const { return edges[id]; }
  int dart_face(int u, int v) const;           // face id left of dart u->v under tracing
  bool triangle(int f) const { return faces[f].size() == 3; }
  std::vector<int> outer_facets() const;       // ids of non-triangular faces
  int third_vertex(int f, int u, int v) const; // triangle f minus {u,v}
  SimpleGraph graph() const;

 private:
  std::vector<int> pos_;  // n*n rotation index table
  friend Embedding make_embedding(int n, std::vector<std::vector<int>> rot);
};

// Validates simplicity, adjacency symmetry and connectivity, then traces all
// faces.  Throws NotSimple / Disconnected.
Embedding make_embedding(int n, std::vector<std::vector<int>> rot);

// Maximal planar graph (planar triangulation), n >= 4: every face a triangle
// and |E| = 3n-6, which together pin the embedding to the sphere.
struct Mpg {
  Embedding emb;
  static Mpg from_rotations(std::vector<std::vector<int>> rot);
  int n() const { return emb.n; }
};

// MPG with a set of edges deleted from its embedding.  outer lists the
// non-triangular faces ("outer facets"); a one-piece instance has at most one.
struct SemiMpg {
  Mpg base;
  std::vector<Edge> removed;
  Embedding emb;
  std::vector<int> outer;
  bool one_piece() const { return outer.size() <= 1; }
};

// Deletes the given edges.  Without allow_multi_facet the result must have at
// most one outer facet (the single-edge 4-gon case always does).
SemiMpg delete_edges(const Mpg& m, std::span<const Edge> edges,
                     bool allow_multi_facet = false);
SemiMpg delete_edge(const Mpg& m, Edge e);

// The two triangles flanking e = ab in an MPG: abN and abS.
// N is the third vertex of the face at dart a->b (a < b), S the other one.
struct Diamond {
  Edge e;
  int a, b, N, S;
};
Diamond diamond_of(const Mpg& m, Edge e);

// Dual graph.  One node per face (including outer facets); dual edges are in
// bijection with primal edges.  Internal nodes (triangles) have degree 3.
struct DualGraph {
  int nodes = 0;
  std::vector<std::array<int, 2>> dual_edge;            // per primal edge id
  std::vector<bool> internal_node;                      // triangle?
  std::vector<std::vector<std::pair<int, int>>> adj;    // node -> (node, primal edge id)
};
DualGraph dual(const Embedding& e);

// Canonical byte string of the embedded triangulation; equal codes iff the
// triangulations are isomorphic up to relabeling, rotation and reflection.
std::vector<std::uint8_t> canonical_code(const Mpg& m);

// Mirror image (all neighbor cycles reversed).
Mpg mirrored(const Mpg& m);

inline constexpr int kDefaultGenCap = 11;

// One representative per isomorphism class of MPGs on exactly n vertices,
// grown from K4 by vertex splitting with canonical-code rejection.  Output is
// sorted by canonical code, so the stream is deterministic.
std::vector<Mpg> generate_all(int n, int cap = kDefaultGenCap);

// planar_code binary interchange (header ">>planar_code<<", 1-byte fields,
// 1-indexed neighbor lists in rotation order, 0-terminated per vertex).
void write_planar_code(std::ostream& os, std::span<const Mpg> graphs);
std::vector<Mpg> read_planar_code(std::istream& is);
std::vector<std::uint8_t> planar_code_record(const Mpg& m);  // record only

// 4-cycle census.  A 4-cycle is trivial iff one of its two sides contains no
// vertex; chord records whether a diagonal of the cycle is an edge.
enum class FourCycleClass { Trivial, NontrivialChord, NontrivialChordless };
struct FourCycle {
  std::array<int, 4> cycle;  // starts at min vertex, second < fourth
  FourCycleClass cls;
  bool chord;
  int inside_vertices, outside_vertices;  // strict counts per side
};
std::vector<FourCycle> four_cycles(const Mpg& m);

std::string format_edge(Edge e);

}  // namespace kempelab
