#include "kempelab/kempe.hpp"

#include <algorithm>
#include <cassert>
#include <queue>
#include <set>

namespace kempelab {
namespace {

std::array<int, 2> normalize_pair(std::array<int, 2> pair) {
  if (pair[0] > pair[1]) std::swap(pair[0], pair[1]);
  if (pair[0] < 1 || pair[1] > 4 || pair[0] == pair[1])
    fail(Err::PreconditionUnmet, "color pair must be two distinct colors in 1..4");
  return pair;
}

bool in_pair(int color, const std::array<int, 2>& pair) {
  return color == pair[0] || color == pair[1];
}

// The two non-avoided edges plus the avoided edge of triangle f, each as an
// edge id, listed in face cycle order.
std::array<int, 3> triangle_edge_ids(const Embedding& e, int f) {
  const auto& cyc = e.faces[f];
  return {e.edge_id(cyc[0], cyc[1]), e.edge_id(cyc[1], cyc[2]),
          e.edge_id(cyc[2], cyc[0])};
}

// Side of the avoided edge when traveling e_in -> e_out through triangle f.
// In the traced cycle order the avoided edge either follows e_out (left of
// travel) or follows e_in (right of travel).
void push_bank(const Embedding& e, int f, int e_in, int e_out,
               CanalObject& canal) {
  auto ids = triangle_edge_ids(e, f);
  int pi = -1, po = -1, avoided_id = -1;
  for (int k = 0; k < 3; ++k) {
    if (ids[k] == e_in) pi = k;
    if (ids[k] == e_out) po = k;
  }
  assert(pi >= 0 && po >= 0 && pi != po);
  avoided_id = ids[3 - pi - po];
  if ((pi + 1) % 3 == po)
    canal.left_bank.push_back(avoided_id);
  else
    canal.right_bank.push_back(avoided_id);
}

int opposite_face(const Embedding& e, int eid, int f) {
  const auto& pf = e.edge_face[eid];
  return pf[0] == f ? pf[1] : pf[0];
}

bool component_contains(const SimpleGraph& g, const VertexColoring& c, int u,
                        std::array<int, 2> pair, int target) {
  return kempe_component(g, c, u, pair).in[target] != 0;
}

// Colors smallest free color onto v0 if its neighbors use at most three.
std::optional<VertexColoring> try_complete(const Mpg& m, int v0,
                                           VertexColoring c) {
  std::array<bool, 5> used{};
  for (int u : m.emb.rot[v0]) used[c[u]] = true;
  int free_color = 0;
  for (int col = 1; col <= 4; ++col)
    if (!used[col]) { free_color = col; break; }
  if (free_color == 0) return std::nullopt;
  c[v0] = free_color;
  assert(is_proper_coloring(m.emb.graph(), c));
  return c;
}

}  // namespace

std::vector<int> KempeComponent::vertices() const {
  std::vector<int> out;
  for (int v = 0; v < static_cast<int>(in.size()); ++v)
    if (in[v]) out.push_back(v);
  return out;
}

KempeComponent kempe_component(const SimpleGraph& g, const VertexColoring& c,
                               int v, std::array<int, 2> pair) {
  pair = normalize_pair(pair);
  if (v < 0 || v >= g.n || static_cast<int>(c.size()) != g.n)
    fail(Err::PreconditionUnmet, "vertex or coloring size out of range");
  if (!in_pair(c[v], pair))
    fail(Err::ColorNotInPair, "vertex " + std::to_string(v) + " has color " +
                                  std::to_string(c[v]));
  KempeComponent comp;
  comp.pair = pair;
  comp.anchor = v;
  comp.in.assign(g.n, 0);
  comp.in[v] = 1;
  std::queue<int> q;
  q.push(v);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int w : g.adj[u])
      if (!comp.in[w] && in_pair(c[w], pair)) {
        comp.in[w] = 1;
        q.push(w);
      }
  }
  return comp;
}

VertexColoring vcs(const SimpleGraph& g, const VertexColoring& c,
                   const KempeComponent& comp) {
  if (static_cast<int>(comp.in.size()) != g.n || comp.anchor < 0)
    fail(Err::PreconditionUnmet, "component does not match the graph");
  KempeComponent fresh = kempe_component(g, c, comp.anchor, comp.pair);
  if (fresh.in != comp.in)
    fail(Err::NotMaximal, "component is not the maximal one for this coloring");
  VertexColoring out = c;
  for (int v = 0; v < g.n; ++v)
    if (comp.in[v]) out[v] = out[v] == comp.pair[0] ? comp.pair[1] : comp.pair[0];
  return out;
}

std::vector<CanalObject> canal_objects(const Embedding& e, const RgbTiling& t,
                                       int avoided) {
  if (avoided < kRed || avoided > kBlue)
    fail(Err::PreconditionUnmet, "avoided color out of range");
  if (!is_rgb_tiling(e, t))
    fail(Err::PreconditionUnmet, "input is not a proper tiling");

  auto crossable = [&](int eid) { return t[eid] != avoided; };
  // Second non-avoided edge of triangle f after dropping eid.
  auto other_crossable = [&](int f, int eid) {
    for (int id : triangle_edge_ids(e, f))
      if (id != eid && crossable(id)) return id;
    assert(false);
    return -1;
  };

  std::vector<char> used(e.m(), 0);
  std::vector<CanalObject> out;

  // Lines enter from a non-triangular facet; scanning boundary edges in
  // ascending id orients each line from its smaller exit.
  for (int eid = 0; eid < e.m(); ++eid) {
    if (!crossable(eid) || used[eid]) continue;
    const auto& sides = e.edge_face[eid];
    bool b0 = !e.triangle(sides[0]), b1 = !e.triangle(sides[1]);
    if (!b0 && !b1) continue;
    CanalObject canal;
    canal.avoided = avoided;
    canal.ring = false;
    canal.walk.push_back(eid);
    used[eid] = 1;
    if (!(b0 && b1)) {
      int f = b0 ? sides[1] : sides[0];
      int e_cur = eid;
      while (e.triangle(f)) {
        canal.faces.push_back(f);
        int e_next = other_crossable(f, e_cur);
        push_bank(e, f, e_cur, e_next, canal);
        canal.walk.push_back(e_next);
        used[e_next] = 1;
        e_cur = e_next;
        f = opposite_face(e, e_cur, f);
      }
    }
    out.push_back(std::move(canal));
  }

  // Remaining non-avoided edges sit on rings; start each at its smallest
  // triangle, leaving through the smaller of that triangle's crossed edges.
  for (int f0 = 0; f0 < e.face_count(); ++f0) {
    if (!e.triangle(f0)) continue;
    int lo = -1, hi = -1;
    for (int id : triangle_edge_ids(e, f0))
      if (crossable(id)) (lo < 0 ? lo : hi) = id;
    if (lo > hi) std::swap(lo, hi);
    if (used[lo]) continue;
    assert(!used[hi]);
    CanalObject canal;
    canal.avoided = avoided;
    canal.ring = true;
    canal.walk.push_back(lo);
    used[lo] = 1;
    int e_cur = lo;
    int f = opposite_face(e, lo, f0);
    while (f != f0) {
      assert(e.triangle(f));
      canal.faces.push_back(f);
      int e_next = other_crossable(f, e_cur);
      push_bank(e, f, e_cur, e_next, canal);
      canal.walk.push_back(e_next);
      used[e_next] = 1;
      e_cur = e_next;
      f = opposite_face(e, e_cur, f);
    }
    canal.faces.push_back(f0);
    push_bank(e, f0, e_cur, lo, canal);
    out.push_back(std::move(canal));
  }

  for (int eid = 0; eid < e.m(); ++eid) assert(!crossable(eid) || used[eid]);
  return out;
}

RgbTiling ecs(const Embedding& e, const RgbTiling& t, const CanalObject& canal) {
  if (canal.avoided < kRed || canal.avoided > kBlue || canal.walk.empty())
    fail(Err::PreconditionUnmet, "malformed canal object");
  if (!is_rgb_tiling(e, t))
    fail(Err::PreconditionUnmet, "input is not a proper tiling");
  // A canal is determined by the avoided color class alone, so it stays
  // applicable exactly while that class is intact along its route.
  for (int eid : canal.walk)
    if (eid < 0 || eid >= e.m() || t[eid] == canal.avoided)
      fail(Err::StaleCanal, "crossed edge no longer off-color");
  for (const auto* bank : {&canal.left_bank, &canal.right_bank})
    for (int eid : *bank)
      if (eid < 0 || eid >= e.m() || t[eid] != canal.avoided)
        fail(Err::StaleCanal, "bank edge no longer avoided-colored");

  int lo = canal.avoided == kRed ? kGreen : kRed;
  int hi = canal.avoided == kBlue ? kGreen : kBlue;
  RgbTiling out = t;
  for (int eid : canal.walk) out[eid] = out[eid] == lo ? hi : lo;
  assert(is_rgb_tiling(e, out));
  return out;
}

std::optional<Chain> chain(const Embedding& e, const RgbTiling& t, int color,
                           int u, int v) {
  if (color < kRed || color > kBlue || u < 0 || u >= e.n || v < 0 || v >= e.n)
    fail(Err::PreconditionUnmet, "color or endpoint out of range");
  if (static_cast<int>(t.size()) != e.m())
    fail(Err::PreconditionUnmet, "tiling size mismatch");
  if (u == v) return Chain{color, {u}};
  std::vector<std::vector<int>> adj(e.n);
  for (int eid = 0; eid < e.m(); ++eid)
    if (t[eid] == color) {
      adj[e.edge(eid).u].push_back(e.edge(eid).v);
      adj[e.edge(eid).v].push_back(e.edge(eid).u);
    }
  std::vector<int> parent(e.n, -2);
  parent[u] = -1;
  std::queue<int> q;
  q.push(u);
  while (!q.empty() && parent[v] == -2) {
    int x = q.front();
    q.pop();
    for (int y : adj[x])
      if (parent[y] == -2) {
        parent[y] = x;
        q.push(y);
      }
  }
  if (parent[v] == -2) return std::nullopt;
  Chain ch{color, {}};
  for (int x = v; x != -1; x = parent[x]) ch.path.push_back(x);
  std::reverse(ch.path.begin(), ch.path.end());
  return ch;
}

bool chains_intersect(const Chain& p, const Chain& q, std::span<const int> ignore) {
  std::set<int> skip(ignore.begin(), ignore.end());
  std::set<int> left;
  for (int v : p.path)
    if (!skip.count(v)) left.insert(v);
  for (int v : q.path)
    if (!skip.count(v) && left.count(v)) return true;
  return false;
}

Deg5Report analyze_deg5(const Mpg& m, int v0, const VertexColoring& c) {
  const Embedding& e = m.emb;
  if (v0 < 0 || v0 >= e.n || static_cast<int>(c.size()) != e.n)
    fail(Err::PreconditionUnmet, "vertex or coloring size out of range");
  if (e.degree(v0) != 5)
    fail(Err::DegreeNot5, "vertex " + std::to_string(v0) + " has degree " +
                              std::to_string(e.degree(v0)));
  for (int u = 0; u < e.n; ++u)
    if (u != v0 && (c[u] < 1 || c[u] > 4))
      fail(Err::PreconditionUnmet, "color out of range away from the hole");
  for (const Edge& ed : e.edges)
    if (ed.u != v0 && ed.v != v0 && c[ed.u] == c[ed.v])
      fail(Err::PreconditionUnmet, "coloring improper away from the hole");

  Deg5Report rep;
  const auto& ring0 = e.rot[v0];
  std::array<int, 5> around{};
  for (int i = 0; i < 5; ++i) around[i] = c[ring0[i]];
  std::array<int, 5> mult{};
  for (int col : around) ++mult[col];
  for (int col = 1; col <= 4; ++col) rep.distinct_around += mult[col] > 0;
  std::copy(ring0.begin(), ring0.end(), rep.ring.begin());
  rep.four_around = rep.distinct_around == 4;
  if (!rep.four_around) return rep;

  int repeated = 0;
  for (int col = 1; col <= 4; ++col)
    if (mult[col] == 2) repeated = col;
  int p1 = -1, p2 = -1;
  for (int i = 0; i < 5; ++i)
    if (around[i] == repeated) (p1 < 0 ? p1 : p2) = i;
  // Properness of the pentagon forbids the repeats being adjacent, so they
  // are two apart with a unique vertex between them.
  int start = (p1 + 2) % 5 == p2 ? (p1 + 1) % 5 : (p2 + 1) % 5;
  for (int i = 0; i < 5; ++i) rep.ring[i] = ring0[(start + i) % 5];

  rep.color_map.fill(0);
  for (int i = 0; i < 4; ++i) rep.color_map[c[rep.ring[i]]] = i + 1;
  rep.normalized.assign(e.n, 0);
  for (int u = 0; u < e.n; ++u)
    if (u != v0) rep.normalized[u] = rep.color_map[c[u]];
  for (int i = 0; i < 5; ++i) rep.ring_colors[i] = rep.normalized[rep.ring[i]];
  assert((rep.ring_colors == std::array<int, 5>{1, 2, 3, 4, 2}));
  for (int i = 0; i < 5; ++i)
    rep.pentagon[i] = edge_color_of(rep.ring_colors[i], rep.ring_colors[(i + 1) % 5]);

  SimpleGraph g = e.graph();
  const auto& r = rep.ring;
  rep.has_r13 = component_contains(g, rep.normalized, r[0], {1, 3}, r[2]);
  rep.has_r24 = component_contains(g, rep.normalized, r[1], {2, 4}, r[3]);
  rep.has_g14 = component_contains(g, rep.normalized, r[0], {1, 4}, r[3]);
  rep.has_g35 = component_contains(g, rep.normalized, r[2], {2, 3}, r[4]);
  rep.exclusive_red = rep.has_r13 != rep.has_r24;
  rep.exclusive_green = rep.has_g14 != rep.has_g35;
  return rep;
}

TanglingReport check_tangling(const Mpg& m, int v0, const VertexColoring& c) {
  TanglingReport rep;
  rep.deg5 = analyze_deg5(m, v0, c);
  if (!rep.deg5.four_around || !rep.deg5.has_r13 || !rep.deg5.has_g14)
    fail(Err::PreconditionUnmet,
         "tangling needs four colors around the hole and both chains through v1");

  SimpleGraph g = m.emb.graph();
  const VertexColoring& cn = rep.deg5.normalized;
  const auto& r = rep.deg5.ring;

  // First switch: the {2,4} component of v2.
  VertexColoring c1 = vcs(g, cn, kempe_component(g, cn, r[1], {2, 4}));
  rep.a_destroyed = !component_contains(g, c1, r[0], {1, 4}, r[3]);
  rep.b_created = c1[r[2]] == 3 && c1[r[4]] == 2 &&
                  component_contains(g, c1, r[2], {2, 3}, r[4]);
  rep.tangles = rep.a_destroyed && rep.b_created;
  std::optional<VertexColoring> done;
  if (in_pair(c1[r[4]], {2, 3})) {
    VertexColoring c2 = vcs(g, c1, kempe_component(g, c1, r[4], {2, 3}));
    done = try_complete(m, v0, c2);
  } else {
    done = try_complete(m, v0, c1);
  }
  rep.completion_rg = done.has_value();
  if (done) rep.completed = *done;

  // Symmetric variant: the {2,3} component of v5 first.
  VertexColoring c1s = vcs(g, cn, kempe_component(g, cn, r[4], {2, 3}));
  rep.a_sym_destroyed = !component_contains(g, c1s, r[0], {1, 3}, r[2]);
  rep.b_sym_created = c1s[r[1]] == 2 && c1s[r[3]] == 4 &&
                      component_contains(g, c1s, r[1], {2, 4}, r[3]);
  rep.tangles_sym = rep.a_sym_destroyed && rep.b_sym_created;
  std::optional<VertexColoring> done_sym;
  if (in_pair(c1s[r[1]], {2, 4})) {
    VertexColoring c2s = vcs(g, c1s, kempe_component(g, c1s, r[1], {2, 4}));
    done_sym = try_complete(m, v0, c2s);
  } else {
    done_sym = try_complete(m, v0, c1s);
  }
  rep.completion_gr = done_sym.has_value();
  if (done_sym && rep.completed.empty()) rep.completed = *done_sym;

  return rep;
}

}  // namespace kempelab
