#include "kempelab/tiling.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>

namespace kempelab {

namespace {

constexpr std::array<int, 4> kKleinOfColor{0, 3, 1, 2};     // index = vertex color - 1
constexpr std::array<int, 4> kColorOfKlein{1, 3, 4, 2};     // index = Klein element

bool valid_color(int c) { return c == kRed || c == kGreen || c == kBlue; }

}  // namespace

char color_letter(int c) {
  switch (c) {
    case kRed: return 'R';
    case kGreen: return 'G';
    case kBlue: return 'B';
  }
  fail(Err::PreconditionUnmet, "bad edge color " + std::to_string(c));
}

int klein_of_vertex_color(int c) {
  if (c < 1 || c > 4) fail(Err::PreconditionUnmet, "vertex color out of range");
  return kKleinOfColor[c - 1];
}

int vertex_color_of_klein(int k) {
  if (k < 0 || k > 3) fail(Err::PreconditionUnmet, "Klein element out of range");
  return kColorOfKlein[k];
}

int edge_color_of(int cu, int cv) {
  int x = klein_of_vertex_color(cu) ^ klein_of_vertex_color(cv);
  if (x == 0) fail(Err::PreconditionUnmet, "endpoints share a color");
  return x;
}

bool is_proper_coloring(const SimpleGraph& g, const VertexColoring& c) {
  if (static_cast<int>(c.size()) != g.n) return false;
  for (int v : c)
    if (v < 1 || v > 4) return false;
  for (const Edge& e : g.edges)
    if (c[e.u] == c[e.v]) return false;
  return true;
}

bool is_rgb_tiling(const Embedding& e, const RgbTiling& t) {
  if (static_cast<int>(t.size()) != e.m()) return false;
  for (int c : t)
    if (!valid_color(c)) return false;
  for (int f = 0; f < e.face_count(); ++f) {
    if (!e.triangle(f)) continue;
    const auto& cyc = e.faces[f];
    int seen = 0;
    for (int k = 0; k < 3; ++k) seen |= 1 << t[e.edge_id(cyc[k], cyc[(k + 1) % 3])];
    if (seen != 0b1110) return false;
  }
  return true;
}

std::vector<VertexColoring> enumerate_vertex_colorings(const SimpleGraph& g) {
  std::vector<VertexColoring> out;
  VertexColoring c(g.n, 0);
  // only the already-colored side of each adjacency matters while extending
  std::vector<std::vector<int>> back(g.n);
  for (const Edge& e : g.edges) back[e.v].push_back(e.u);

  auto rec = [&](auto&& self, int v) -> void {
    if (v == g.n) {
      out.push_back(c);
      return;
    }
    for (int col = 1; col <= 4; ++col) {
      bool ok = true;
      for (int u : back[v])
        if (c[u] == col) {
          ok = false;
          break;
        }
      if (!ok) continue;
      c[v] = col;
      self(self, v + 1);
    }
    c[v] = 0;
  };
  rec(rec, 0);
  return out;
}

RgbTiling coloring_to_tiling(const Embedding& e, const VertexColoring& c) {
  if (!is_proper_coloring(e.graph(), c))
    fail(Err::PreconditionUnmet, "not a proper 4-coloring");
  RgbTiling t(e.m());
  for (int id = 0; id < e.m(); ++id)
    t[id] = edge_color_of(c[e.edges[id].u], c[e.edges[id].v]);
  return t;
}

VertexColoring tiling_to_coloring(const Embedding& e, const RgbTiling& t,
                                  int base_vertex, int base_color) {
  if (static_cast<int>(t.size()) != e.m())
    fail(Err::PreconditionUnmet, "tiling size does not match edge count");
  for (int c : t)
    if (!valid_color(c)) fail(Err::PreconditionUnmet, "tiling has an uncolored edge");
  if (base_vertex < 0 || base_vertex >= e.n)
    fail(Err::PreconditionUnmet, "base vertex out of range");

  std::vector<int> klein(e.n, -1);
  klein[base_vertex] = klein_of_vertex_color(base_color);
  std::vector<int> queue{base_vertex};
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    int u = queue[qi];
    for (int v : e.rot[u]) {
      int want = klein[u] ^ t[e.edge_id(u, v)];
      if (klein[v] == -1) {
        klein[v] = want;
        queue.push_back(v);
      } else if (klein[v] != want) {
        fail(Err::InconsistentHolonomy,
             "edge " + format_edge(Edge(u, v)) + " contradicts earlier propagation");
      }
    }
  }
  VertexColoring c(e.n);
  for (int v = 0; v < e.n; ++v) c[v] = vertex_color_of_klein(klein[v]);
  return c;
}

std::vector<RgbTiling> enumerate_rgb_tilings(const Embedding& e) {
  std::vector<int> triangles;
  for (int f = 0; f < e.face_count(); ++f)
    if (e.triangle(f)) triangles.push_back(f);

  std::vector<std::array<int, 3>> tri_edges(triangles.size());
  for (size_t i = 0; i < triangles.size(); ++i) {
    const auto& cyc = e.faces[triangles[i]];
    for (int k = 0; k < 3; ++k) tri_edges[i][k] = e.edge_id(cyc[k], cyc[(k + 1) % 3]);
    std::sort(tri_edges[i].begin(), tri_edges[i].end());
  }

  std::vector<RgbTiling> out;
  RgbTiling t(e.m(), 0);

  auto finish = [&](auto&& self, size_t next_unset) -> void {
    while (next_unset < t.size() && t[next_unset] != 0) ++next_unset;
    if (next_unset == t.size()) {
      out.push_back(t);
      return;
    }
    for (int c : kColors) {
      t[next_unset] = c;
      self(self, next_unset + 1);
    }
    t[next_unset] = 0;
  };

  auto rec = [&](auto&& self, size_t fi) -> void {
    if (fi == triangles.size()) {
      finish(finish, 0);
      return;
    }
    const auto& te = tri_edges[fi];
    int used = 0, unset[3], nu = 0;
    for (int id : te) {
      if (t[id] == 0)
        unset[nu++] = id;
      else if (used & (1 << t[id]))
        return;  // two equal colors already on this face
      else
        used |= 1 << t[id];
    }
    if (nu == 0) {
      if (used == 0b1110) self(self, fi + 1);
      return;
    }
    auto assign = [&](auto&& inner, int k, int mask) -> void {
      if (k == nu) {
        self(self, fi + 1);
        return;
      }
      for (int c : kColors) {
        if (mask & (1 << c)) continue;
        t[unset[k]] = c;
        inner(inner, k + 1, mask | (1 << c));
      }
      t[unset[k]] = 0;
    };
    assign(assign, 0, used);
  };
  rec(rec, 0);
  return out;
}

std::vector<int> MonoTiling::edges() const {
  std::vector<int> out;
  for (size_t i = 0; i < member.size(); ++i)
    if (member[i]) out.push_back(static_cast<int>(i));
  return out;
}

namespace {

bool edge_on_outer_facet(const Embedding& e, int id) {
  auto [f1, f2] = e.edge_face[id];
  return !e.triangle(f1) || !e.triangle(f2);
}

MonoTiling make_mono(const Embedding& e, int color, const std::vector<char>& member) {
  MonoTiling m;
  m.color = color;
  m.member = member;
  m.perfect = true;
  for (int id = 0; id < e.m(); ++id)
    if (member[id] && edge_on_outer_facet(e, id)) m.perfect = false;
  return m;
}

std::vector<std::array<int, 3>> triangle_edge_table(const Embedding& e) {
  std::vector<std::array<int, 3>> out;
  for (int f = 0; f < e.face_count(); ++f) {
    if (!e.triangle(f)) continue;
    const auto& cyc = e.faces[f];
    std::array<int, 3> ids;
    for (int k = 0; k < 3; ++k) ids[k] = e.edge_id(cyc[k], cyc[(k + 1) % 3]);
    std::sort(ids.begin(), ids.end());
    out.push_back(ids);
  }
  return out;
}

}  // namespace

std::vector<MonoTiling> enumerate_mono_tilings(const Embedding& e, int color) {
  if (!valid_color(color)) fail(Err::PreconditionUnmet, "bad mono tiling color");
  auto tris = triangle_edge_table(e);
  std::vector<MonoTiling> out;
  std::vector<int> state(e.m(), 0);  // 0 open, 1 member, -1 barred

  auto rec = [&](auto&& self, size_t fi) -> void {
    if (fi == tris.size()) {
      std::vector<char> member(e.m(), 0);
      for (int id = 0; id < e.m(); ++id) member[id] = state[id] == 1;
      out.push_back(make_mono(e, color, member));
      return;
    }
    const auto& te = tris[fi];
    int members = 0;
    for (int id : te) members += state[id] == 1;
    if (members > 1) return;
    if (members == 1) {
      int touched[2], nt = 0;
      for (int id : te)
        if (state[id] == 0) {
          state[id] = -1;
          touched[nt++] = id;
        }
      self(self, fi + 1);
      for (int k = 0; k < nt; ++k) state[touched[k]] = 0;
      return;
    }
    for (int pick : te) {
      if (state[pick] != 0) continue;
      int touched[3], nt = 0;
      state[pick] = 1;
      touched[nt++] = pick;
      bool ok = true;
      for (int id : te)
        if (id != pick) {
          if (state[id] == 1) ok = false;
          if (state[id] == 0) {
            state[id] = -1;
            touched[nt++] = id;
          }
        }
      if (ok) self(self, fi + 1);
      for (int k = 0; k < nt; ++k) state[touched[k]] = 0;
    }
  };
  rec(rec, 0);
  return out;
}

MonoTiling mono_restriction(const Embedding& e, const RgbTiling& t, int color) {
  if (!is_rgb_tiling(e, t)) fail(Err::PreconditionUnmet, "not a valid tiling");
  if (!valid_color(color)) fail(Err::PreconditionUnmet, "bad mono tiling color");
  std::vector<char> member(e.m(), 0);
  for (int id = 0; id < e.m(); ++id) member[id] = t[id] == color;
  return make_mono(e, color, member);
}

std::vector<RgbTiling> extend_mono_to_rgb(const Embedding& e, const MonoTiling& m) {
  if (static_cast<int>(m.member.size()) != e.m() || !valid_color(m.color))
    fail(Err::PreconditionUnmet, "mono tiling does not match the embedding");
  auto tris = triangle_edge_table(e);
  for (const auto& te : tris) {
    int members = m.member[te[0]] + m.member[te[1]] + m.member[te[2]];
    if (members != 1)
      fail(Err::PreconditionUnmet, "a triangle has " + std::to_string(members) + " member edges");
  }

  // The two non-member edges of each triangle must take the two remaining
  // colors, one each: 2-color the conflict graph.
  std::vector<int> comp(e.m(), -1), side(e.m(), 0);
  std::vector<std::vector<int>> against(e.m());
  for (const auto& te : tris) {
    int free_ids[2], nf = 0;
    for (int id : te)
      if (!m.member[id]) free_ids[nf++] = id;
    against[free_ids[0]].push_back(free_ids[1]);
    against[free_ids[1]].push_back(free_ids[0]);
  }
  int ncomp = 0;
  for (int id = 0; id < e.m(); ++id) {
    if (m.member[id] || comp[id] != -1) continue;
    comp[id] = ncomp;
    side[id] = 0;
    std::vector<int> queue{id};
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      int u = queue[qi];
      for (int v : against[u]) {
        if (comp[v] == -1) {
          comp[v] = ncomp;
          side[v] = side[u] ^ 1;
          queue.push_back(v);
        } else if (side[v] == side[u]) {
          return {};  // odd conflict cycle: no extension
        }
      }
    }
    ++ncomp;
  }

  int lo = 0, hi = 0;
  for (int c : kColors)
    if (c != m.color) (lo == 0 ? lo : hi) = c;

  std::vector<RgbTiling> out;
  out.reserve(static_cast<size_t>(1) << ncomp);
  for (std::uint64_t mask = 0; mask < (static_cast<std::uint64_t>(1) << ncomp); ++mask) {
    RgbTiling t(e.m());
    for (int id = 0; id < e.m(); ++id) {
      if (m.member[id]) {
        t[id] = m.color;
      } else {
        int flip = static_cast<int>((mask >> comp[id]) & 1);
        t[id] = (side[id] ^ flip) ? hi : lo;
      }
    }
    out.push_back(std::move(t));
  }
  return out;
}

CycleStats odd_cycle_stats(int n, std::span<const Edge> members, long cap) {
  std::set<Edge> uniq(members.begin(), members.end());
  std::vector<Edge> es(uniq.begin(), uniq.end());
  for (const Edge& e : es)
    if (e.u < 0 || e.v >= n) fail(Err::PreconditionUnmet, "member edge out of range");
  if (es.size() > 62) fail(Err::SizeLimit, "member set too large for cycle masks");

  std::vector<std::vector<std::pair<int, int>>> adj(n);  // (neighbor, member index)
  for (size_t i = 0; i < es.size(); ++i) {
    adj[es[i].u].emplace_back(es[i].v, static_cast<int>(i));
    adj[es[i].v].emplace_back(es[i].u, static_cast<int>(i));
  }

  std::vector<std::uint64_t> odd_masks, even_masks;
  long total = 0;
  std::vector<char> on_path(n, 0);
  std::vector<int> path;

  // canonical simple cycle: smallest vertex is the root, second < last
  auto dfs = [&](auto&& self, int root, int u, std::uint64_t mask) -> void {
    for (auto [w, idx] : adj[u]) {
      if (mask & (1ull << idx)) continue;
      if (w == root) {
        if (path.size() >= 3 && path[1] < u) {
          if (++total > cap) fail(Err::SizeLimit, "cycle census exceeds cap");
          auto& bucket = (path.size() % 2) ? odd_masks : even_masks;
          bucket.push_back(mask | (1ull << idx));
        }
        continue;
      }
      if (w < root || on_path[w]) continue;
      on_path[w] = 1;
      path.push_back(w);
      self(self, root, w, mask | (1ull << idx));
      path.pop_back();
      on_path[w] = 0;
    }
  };
  for (int r = 0; r < n; ++r) {
    on_path[r] = 1;
    path.assign(1, r);
    dfs(dfs, r, r, 0);
    on_path[r] = 0;
  }

  auto min_hit = [&](const std::vector<std::uint64_t>& targets) -> int {
    if (targets.empty()) return 0;
    int mcount = static_cast<int>(es.size());
    std::vector<int> pick;
    auto covers = [&]() {
      std::uint64_t s = 0;
      for (int i : pick) s |= 1ull << i;
      for (std::uint64_t t : targets)
        if (!(t & s)) return false;
      return true;
    };
    for (int k = 1; k <= mcount; ++k) {
      bool found = false;
      auto comb = [&](auto&& self, int start, int left) -> void {
        if (found) return;
        if (left == 0) {
          if (covers()) found = true;
          return;
        }
        for (int i = start; i + left <= mcount && !found; ++i) {
          pick.push_back(i);
          self(self, i + 1, left - 1);
          pick.pop_back();
        }
      };
      comb(comb, 0, k);
      if (found) return k;
    }
    fail(Err::SizeLimit, "no hitting set found");  // unreachable: all edges removable
  };

  CycleStats st;
  st.odd_count = static_cast<long>(odd_masks.size());
  st.even_count = static_cast<long>(even_masks.size());
  st.oc = min_hit(odd_masks);
  st.ec = min_hit(even_masks);
  return st;
}

std::vector<BoundarySignature> boundary_signatures(const Embedding& e,
                                                   const RgbTiling& t, int anchor) {
  if (!is_rgb_tiling(e, t)) fail(Err::PreconditionUnmet, "not a valid tiling");
  std::vector<BoundarySignature> out;
  for (int f : e.outer_facets()) {
    BoundarySignature sig;
    sig.facet = f;
    auto cyc = e.faces[f];
    size_t start = 0;
    for (size_t k = 0; k < cyc.size(); ++k) {
      if (cyc[k] == anchor) {
        start = k;
        break;
      }
      if (cyc[k] < cyc[start]) start = k;
    }
    std::rotate(cyc.begin(), cyc.begin() + start, cyc.end());
    sig.vertices = cyc;
    for (size_t k = 0; k < cyc.size(); ++k) {
      int c = t[e.edge_id(cyc[k], cyc[(k + 1) % cyc.size()])];
      sig.colors.push_back(c);
      ++sig.count[c];
    }
    out.push_back(std::move(sig));
  }
  return out;
}

}  // namespace kempelab
