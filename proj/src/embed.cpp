#include "kempelab/embed.hpp"

#include <algorithm>
#include <cassert>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <unordered_set>

namespace kempelab {

std::string format_edge(Edge e) {
  return std::to_string(e.u) + "-" + std::to_string(e.v);
}

SimpleGraph SimpleGraph::from_edges(int n, std::span<const Edge> edges) {
  SimpleGraph g;
  g.n = n;
  g.adj.assign(n, {});
  std::set<Edge> seen;
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v >= n || e.u == e.v) fail(Err::NotSimple, "bad edge " + format_edge(e));
    if (!seen.insert(e).second) continue;
    g.adj[e.u].push_back(e.v);
    g.adj[e.v].push_back(e.u);
  }
  g.edges.assign(seen.begin(), seen.end());
  for (auto& a : g.adj) std::sort(a.begin(), a.end());
  return g;
}

bool SimpleGraph::adjacent(int u, int v) const {
  const auto& a = adj[u];
  return std::binary_search(a.begin(), a.end(), v);
}

int Embedding::rot_index(int v, int u) const {
  if (u < 0 || v < 0 || u >= n || v >= n) return -1;
  return pos_[static_cast<size_t>(v) * n + u];
}

int Embedding::edge_id(int u, int v) const {
  if (rot_index(u, v) < 0) return -1;
  Edge e(u, v);
  auto it = std::lower_bound(edges.begin(), edges.end(), e);
  return static_cast<int>(it - edges.begin());
}

int Embedding::edge_id_checked(int u, int v) const {
  int id = edge_id(u, v);
  if (id < 0) fail(Err::EdgeAbsent, "no edge " + format_edge(Edge(u, v)));
  return id;
}

int Embedding::dart_face(int u, int v) const {
  int k = rot_index(u, v);
  if (k < 0) fail(Err::EdgeAbsent, "no dart " + std::to_string(u) + "->" + std::to_string(v));
  return face_of_dart[u][k];
}

std::vector<int> Embedding::outer_facets() const {
  std::vector<int> out;
  for (int f = 0; f < face_count(); ++f)
    if (!triangle(f)) out.push_back(f);
  return out;
}

int Embedding::third_vertex(int f, int u, int v) const {
  assert(triangle(f));
  for (int w : faces[f])
    if (w != u && w != v) return w;
  fail(Err::PreconditionUnmet, "face does not contain a third vertex");
}

SimpleGraph Embedding::graph() const { return SimpleGraph::from_edges(n, edges); }

Embedding make_embedding(int n, std::vector<std::vector<int>> rot) {
  if (n <= 0 || static_cast<int>(rot.size()) != n)
    fail(Err::NotSimple, "rotation table has wrong size");
  Embedding e;
  e.n = n;
  e.rot = std::move(rot);
  e.pos_.assign(static_cast<size_t>(n) * n, -1);
  for (int v = 0; v < n; ++v) {
    for (int k = 0; k < e.degree(v); ++k) {
      int u = e.rot[v][k];
      if (u < 0 || u >= n) fail(Err::NotSimple, "neighbor id out of range");
      if (u == v) fail(Err::NotSimple, "loop at vertex " + std::to_string(v));
      if (e.pos_[static_cast<size_t>(v) * n + u] != -1)
        fail(Err::NotSimple, "repeated neighbor " + std::to_string(u) + " at " + std::to_string(v));
      e.pos_[static_cast<size_t>(v) * n + u] = k;
    }
  }
  for (int v = 0; v < n; ++v)
    for (int u : e.rot[v])
      if (e.rot_index(u, v) < 0)
        fail(Err::NotSimple, "asymmetric adjacency " + std::to_string(v) + "," + std::to_string(u));

  // connectivity
  {
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int cnt = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u : e.rot[v])
        if (!seen[u]) {
          seen[u] = 1;
          ++cnt;
          stack.push_back(u);
        }
    }
    if (cnt != n) fail(Err::Disconnected, "graph is not connected");
  }

  for (int v = 0; v < n; ++v)
    for (int u : e.rot[v])
      if (v < u) e.edges.emplace_back(v, u);
  std::sort(e.edges.begin(), e.edges.end());

  // face tracing: next dart of (u,v) is (v, w) with w one step past u in rot[v]
  e.face_of_dart.assign(n, {});
  for (int v = 0; v < n; ++v) e.face_of_dart[v].assign(e.degree(v), -1);
  long dart_budget = 0;
  for (int v = 0; v < n; ++v) dart_budget += e.degree(v);
  for (int v0 = 0; v0 < n; ++v0) {
    for (int k0 = 0; k0 < e.degree(v0); ++k0) {
      if (e.face_of_dart[v0][k0] != -1) continue;
      int f = e.face_count();
      std::vector<int> cyc;
      int u = v0, k = k0;
      long guard = 0;
      do {
        e.face_of_dart[u][k] = f;
        cyc.push_back(u);
        int v = e.rot[u][k];
        int j = (e.rot_index(v, u) + 1) % e.degree(v);
        u = v;
        k = j;
        if (++guard > dart_budget) fail(Err::NotSimple, "face tracing does not close");
      } while (!(u == v0 && k == k0));
      e.faces.push_back(std::move(cyc));
    }
  }
  e.edge_face.resize(e.edges.size());
  for (int id = 0; id < e.m(); ++id) {
    const Edge& ed = e.edges[id];
    e.edge_face[id] = {e.dart_face(ed.u, ed.v), e.dart_face(ed.v, ed.u)};
  }
  return e;
}

Mpg Mpg::from_rotations(std::vector<std::vector<int>> rot) {
  int n = static_cast<int>(rot.size());
  Embedding e = make_embedding(n, std::move(rot));
  if (n < 4) fail(Err::NotTriangulation, "need at least 4 vertices");
  for (int f = 0; f < e.face_count(); ++f)
    if (!e.triangle(f))
      fail(Err::NotTriangulation, "face of size " + std::to_string(e.faces[f].size()));
  if (e.m() != 3 * n - 6)
    fail(Err::EdgeCountMismatch,
         std::to_string(e.m()) + " edges, expected " + std::to_string(3 * n - 6));
  return Mpg{std::move(e)};
}

SemiMpg delete_edges(const Mpg& m, std::span<const Edge> edges, bool allow_multi_facet) {
  auto rot = m.emb.rot;
  std::set<Edge> removed;
  for (const Edge& e : edges) {
    if (m.emb.edge_id(e.u, e.v) < 0) fail(Err::EdgeAbsent, "cannot delete " + format_edge(e));
    if (!removed.insert(e).second) fail(Err::EdgeAbsent, "edge listed twice: " + format_edge(e));
    std::erase(rot[e.u], e.v);
    std::erase(rot[e.v], e.u);
  }
  Embedding emb;
  try {
    emb = make_embedding(m.emb.n, std::move(rot));
  } catch (const Error& err) {
    if (err.code == Err::Disconnected)
      fail(Err::DisconnectedResult, "deletions disconnect the graph");
    throw;
  }
  SemiMpg q;
  q.base = m;
  q.removed.assign(removed.begin(), removed.end());
  q.outer = emb.outer_facets();
  q.emb = std::move(emb);
  if (!allow_multi_facet && q.outer.size() > 1)
    fail(Err::PreconditionUnmet,
         std::to_string(q.outer.size()) + " outer facets; pass allow_multi_facet");
  return q;
}

SemiMpg delete_edge(const Mpg& m, Edge e) {
  std::array<Edge, 1> one{e};
  return delete_edges(m, one, false);
}

Diamond diamond_of(const Mpg& m, Edge e) {
  int id = m.emb.edge_id(e.u, e.v);
  if (id < 0) fail(Err::EdgeAbsent, "no edge " + format_edge(e));
  int fN = m.emb.dart_face(e.u, e.v);
  int fS = m.emb.dart_face(e.v, e.u);
  Diamond d;
  d.e = e;
  d.a = e.u;
  d.b = e.v;
  d.N = m.emb.third_vertex(fN, e.u, e.v);
  d.S = m.emb.third_vertex(fS, e.u, e.v);
  assert(d.N != d.S);
  return d;
}

DualGraph dual(const Embedding& e) {
  DualGraph d;
  d.nodes = e.face_count();
  d.dual_edge = e.edge_face;
  d.internal_node.resize(d.nodes);
  for (int f = 0; f < d.nodes; ++f) d.internal_node[f] = e.triangle(f);
  d.adj.assign(d.nodes, {});
  for (int id = 0; id < e.m(); ++id) {
    auto [f1, f2] = e.edge_face[id];
    d.adj[f1].emplace_back(f2, id);
    d.adj[f2].emplace_back(f1, id);
  }
  return d;
}

namespace {

// BFS code anchored at dart (r0, r1): vertices labeled in discovery order,
// each vertex's rotation emitted starting at its entry neighbor, walking
// forward or backward.  The canonical code is the minimum over all anchors.
std::vector<std::uint8_t> bfs_code(const Embedding& e, int r0, int r1, bool reverse) {
  std::vector<int> label(e.n, 0), order, entry(e.n, -1);
  label[r0] = 1;
  entry[r0] = r1;
  order.push_back(r0);
  std::vector<std::uint8_t> out;
  out.reserve(2 * e.m() + e.n);
  int next = 1;
  for (size_t qi = 0; qi < order.size(); ++qi) {
    int w = order[qi];
    int d = e.degree(w);
    int start = e.rot_index(w, entry[w]);
    for (int t = 0; t < d; ++t) {
      int k = reverse ? (start - t + d) % d : (start + t) % d;
      int x = e.rot[w][k];
      if (label[x] == 0) {
        label[x] = ++next;
        entry[x] = w;
        order.push_back(x);
      }
      out.push_back(static_cast<std::uint8_t>(label[x]));
    }
    out.push_back(0);
  }
  return out;
}

}  // namespace

std::vector<std::uint8_t> canonical_code(const Mpg& m) {
  const Embedding& e = m.emb;
  std::vector<std::uint8_t> best;
  for (int v = 0; v < e.n; ++v)
    for (int u : e.rot[v])
      for (bool rev : {false, true}) {
        auto cand = bfs_code(e, v, u, rev);
        if (best.empty() || cand < best) best = std::move(cand);
      }
  best.insert(best.begin(), static_cast<std::uint8_t>(e.n));
  return best;
}

Mpg mirrored(const Mpg& m) {
  auto rot = m.emb.rot;
  for (auto& r : rot) std::reverse(r.begin(), r.end());
  return Mpg::from_rotations(std::move(rot));
}

namespace {

// Vertex split at w with hinges rot[w][i], rot[w][j]: w keeps the arc i..j,
// a fresh vertex takes the arc j..i, both stay adjacent to the hinges and to
// each other.  Inverse of contracting the new edge.
std::vector<std::vector<int>> split_rotations(const Embedding& e, int w, int i, int j) {
  const auto& r = e.rot[w];
  int d = static_cast<int>(r.size());
  int x = e.n;
  auto rot = e.rot;
  rot.resize(e.n + 1);

  std::vector<int> arc_a, arc_b;
  for (int k = i;; k = (k + 1) % d) {
    arc_a.push_back(r[k]);
    if (k == j) break;
  }
  for (int k = j;; k = (k + 1) % d) {
    arc_b.push_back(r[k]);
    if (k == i) break;
  }

  rot[w] = arc_a;
  rot[w].push_back(x);
  rot[x] = arc_b;
  rot[x].push_back(w);

  for (size_t t = 1; t + 1 < arc_b.size(); ++t) {
    int c = arc_b[t];
    rot[c][e.rot_index(c, w)] = x;
  }

  // New triangles w-x-r[j] and w-r[i]-x force the hinge rotations: x goes
  // right before w at hinge j, right after w at hinge i.
  rot[r[j]].insert(rot[r[j]].begin() + e.rot_index(r[j], w), x);
  rot[r[i]].insert(rot[r[i]].begin() + e.rot_index(r[i], w) + 1, x);
  return rot;
}

}  // namespace

std::vector<Mpg> generate_all(int n, int cap) {
  if (n < 4 || n > cap)
    fail(Err::CapExceeded, "n = " + std::to_string(n) + " outside [4, " + std::to_string(cap) + "]");
  std::vector<Mpg> level;
  level.push_back(Mpg::from_rotations({{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}}));
  for (int sz = 5; sz <= n; ++sz) {
    std::vector<Mpg> next;
    std::set<std::vector<std::uint8_t>> seen;
    for (const Mpg& g : level) {
      for (int w = 0; w < g.emb.n; ++w) {
        int d = g.emb.degree(w);
        for (int i = 0; i < d; ++i)
          for (int j = i + 1; j < d; ++j) {
            Mpg cand = Mpg::from_rotations(split_rotations(g.emb, w, i, j));
            auto code = canonical_code(cand);
            if (seen.insert(code).second) next.push_back(std::move(cand));
          }
      }
    }
    std::sort(next.begin(), next.end(), [](const Mpg& a, const Mpg& b) {
      return canonical_code(a) < canonical_code(b);
    });
    level = std::move(next);
  }
  return level;
}

static const char kPlanarCodeHeader[] = ">>planar_code<<";

std::vector<std::uint8_t> planar_code_record(const Mpg& m) {
  const Embedding& e = m.emb;
  if (e.n >= 255) fail(Err::SizeLimit, "planar_code 1-byte record needs n < 255");
  std::vector<std::uint8_t> out;
  out.push_back(static_cast<std::uint8_t>(e.n));
  for (int v = 0; v < e.n; ++v) {
    for (int u : e.rot[v]) out.push_back(static_cast<std::uint8_t>(u + 1));
    out.push_back(0);
  }
  return out;
}

void write_planar_code(std::ostream& os, std::span<const Mpg> graphs) {
  os.write(kPlanarCodeHeader, sizeof(kPlanarCodeHeader) - 1);
  for (const Mpg& m : graphs) {
    auto rec = planar_code_record(m);
    os.write(reinterpret_cast<const char*>(rec.data()), static_cast<std::streamsize>(rec.size()));
  }
}

std::vector<Mpg> read_planar_code(std::istream& is) {
  char header[sizeof(kPlanarCodeHeader) - 1];
  if (!is.read(header, sizeof(header)) ||
      std::string(header, sizeof(header)) != kPlanarCodeHeader)
    fail(Err::BadHeader, "missing >>planar_code<< header");
  std::vector<Mpg> out;
  while (true) {
    int n = is.get();
    if (n == std::istream::traits_type::eof()) break;
    if (n == 0 || n >= 255) fail(Err::UnsupportedFormat, "only 1-byte planar_code records supported");
    std::vector<std::vector<int>> rot(n);
    for (int v = 0; v < n; ++v) {
      while (true) {
        int b = is.get();
        if (b == std::istream::traits_type::eof())
          fail(Err::TruncatedRecord, "record ends inside vertex " + std::to_string(v));
        if (b == 0) break;
        rot[v].push_back(b - 1);
      }
    }
    out.push_back(Mpg::from_rotations(std::move(rot)));
  }
  return out;
}

std::vector<FourCycle> four_cycles(const Mpg& m) {
  const Embedding& e = m.emb;
  DualGraph dg = dual(e);
  std::set<std::array<Edge, 2>> seen;  // {diag pair} -> dedup
  std::vector<FourCycle> out;
  for (int u = 0; u < e.n; ++u) {
    for (int v = u + 1; v < e.n; ++v) {
      std::vector<int> common;
      for (int x : e.rot[u])
        if (x != v && e.adjacent(x, v)) common.push_back(x);
      std::sort(common.begin(), common.end());
      for (size_t xi = 0; xi < common.size(); ++xi)
        for (size_t yi = xi + 1; yi < common.size(); ++yi) {
          int x = common[xi], y = common[yi];
          Edge d1(u, v), d2(x, y);
          std::array<Edge, 2> key = d1 < d2 ? std::array<Edge, 2>{d1, d2}
                                            : std::array<Edge, 2>{d2, d1};
          if (!seen.insert(key).second) continue;

          // cycle u-x-v-y; normalize start at min vertex, second < fourth
          std::array<int, 4> cyc{u, x, v, y};
          int mi = 0;
          for (int k = 1; k < 4; ++k)
            if (cyc[k] < cyc[mi]) mi = k;
          std::array<int, 4> c1{cyc[mi], cyc[(mi + 1) % 4], cyc[(mi + 2) % 4], cyc[(mi + 3) % 4]};
          if (c1[3] < c1[1]) std::swap(c1[1], c1[3]);

          // side census: remove the four dual edges crossing the cycle
          std::vector<char> cut(e.m(), 0);
          for (int k = 0; k < 4; ++k)
            cut[e.edge_id(c1[k], c1[(k + 1) % 4])] = 1;
          std::vector<int> comp(dg.nodes, -1);
          int ncomp = 0;
          for (int f = 0; f < dg.nodes; ++f) {
            if (comp[f] != -1) continue;
            std::vector<int> stack{f};
            comp[f] = ncomp;
            while (!stack.empty()) {
              int g = stack.back();
              stack.pop_back();
              for (auto [h, eid] : dg.adj[g]) {
                if (cut[eid] || comp[h] != -1) continue;
                comp[h] = ncomp;
                stack.push_back(h);
              }
            }
            ++ncomp;
          }
          assert(ncomp == 2);
          std::array<std::set<int>, 2> side_verts;
          for (int f = 0; f < dg.nodes; ++f)
            for (int w : e.faces[f]) side_verts[comp[f]].insert(w);
          for (int k = 0; k < 4; ++k) {
            side_verts[0].erase(c1[k]);
            side_verts[1].erase(c1[k]);
          }
          FourCycle fc;
          fc.cycle = c1;
          // no canonical side on the sphere; report smaller count as inside
          fc.inside_vertices = static_cast<int>(std::min(side_verts[0].size(), side_verts[1].size()));
          fc.outside_vertices = static_cast<int>(std::max(side_verts[0].size(), side_verts[1].size()));
          fc.chord = e.adjacent(c1[0], c1[2]) || e.adjacent(c1[1], c1[3]);
          bool trivial = fc.inside_vertices == 0 || fc.outside_vertices == 0;
          fc.cls = trivial ? FourCycleClass::Trivial
                           : (fc.chord ? FourCycleClass::NontrivialChord
                                       : FourCycleClass::NontrivialChordless);
          out.push_back(fc);
        }
    }
  }
  return out;
}

}  // namespace kempelab
