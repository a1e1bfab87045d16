#include "kempelab/diamond.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <optional>
#include <queue>

namespace kempelab {
namespace {

// Shape of a two-edge boundary footprint, positions read off frame order
// aN, bN, aS, bS.
PairShape shape_of_mask(int mask) {
  switch (mask) {
    case 0b0011: return PairShape::Wedge;
    case 0b1100: return PairShape::Vee;
    case 0b0101: return PairShape::Less;
    case 0b1010: return PairShape::Greater;
    case 0b1001: return PairShape::Slash;
    case 0b0110: return PairShape::Backslash;
    default: fail(Err::PreconditionUnmet, "footprint is not an opposite pair");
  }
}

int footprint_mask(const DiamondFrame& f, const std::vector<char>& member) {
  int mask = 0;
  for (int k = 0; k < 4; ++k)
    if (member[f.eid[k]]) mask |= 1 << k;
  return mask;
}

bool odd_cycle_free(const Embedding& e, const MonoTiling& m) {
  std::vector<Edge> members;
  for (int id : m.edges()) members.push_back(e.edge(id));
  return odd_cycle_stats(e.n, members).odd_count == 0;
}

// Shortest path between u and v through the member edges; the member graph is
// bipartite for odd-cycle-free monos, so every u-v path shares one parity.
std::optional<int> member_distance(const Embedding& e, const MonoTiling& m,
                                   int u, int v) {
  std::vector<std::vector<int>> adj(e.n);
  for (int id : m.edges()) {
    adj[e.edge(id).u].push_back(e.edge(id).v);
    adj[e.edge(id).v].push_back(e.edge(id).u);
  }
  std::vector<int> dist(e.n, -1);
  std::queue<int> bfs;
  dist[u] = 0;
  bfs.push(u);
  while (!bfs.empty()) {
    int x = bfs.front();
    bfs.pop();
    if (x == v) return dist[v];
    for (int y : adj[x])
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        bfs.push(y);
      }
  }
  return std::nullopt;
}

bool even_member_path(const Embedding& e, const MonoTiling& m, int u, int v) {
  auto d = member_distance(e, m, u, v);
  return d && *d % 2 == 0;
}

bool even_chain(const Embedding& e, const RgbTiling& t, int color, int u,
                int v) {
  auto c = chain(e, t, color, u, v);
  return c && c->even();
}

long count_colorings(const Mpg& m) {
  return static_cast<long>(enumerate_vertex_colorings(m.emb.graph()).size());
}

// Starred mono families of one color with a given boundary footprint size.
struct MonoFamily {
  std::vector<MonoTiling> members;
  std::array<int, 6> by_shape{};
};

MonoFamily mono_family(const SemiMpg& q, const DiamondFrame& f, int color,
                       int boundary_count) {
  MonoFamily fam;
  for (MonoTiling& m : enumerate_mono_tilings(q.emb, color)) {
    int mask = footprint_mask(f, m.member);
    if (std::popcount(static_cast<unsigned>(mask)) != boundary_count) continue;
    if (!odd_cycle_free(q.emb, m)) continue;
    if (boundary_count == 2)
      ++fam.by_shape[static_cast<int>(shape_of_mask(mask))];
    fam.members.push_back(std::move(m));
  }
  return fam;
}

}  // namespace

PairShape shape_mate(PairShape s) {
  switch (s) {
    case PairShape::Wedge: return PairShape::Vee;
    case PairShape::Vee: return PairShape::Wedge;
    case PairShape::Less: return PairShape::Greater;
    case PairShape::Greater: return PairShape::Less;
    case PairShape::Slash: return PairShape::Backslash;
    case PairShape::Backslash: return PairShape::Slash;
  }
  fail(Err::PreconditionUnmet, "bad shape");
}

const char* shape_name(PairShape s) {
  switch (s) {
    case PairShape::Wedge: return "^";
    case PairShape::Vee: return "v";
    case PairShape::Less: return "<";
    case PairShape::Greater: return ">";
    case PairShape::Slash: return "//";
    case PairShape::Backslash: return "\\";
  }
  fail(Err::PreconditionUnmet, "bad shape");
}

std::array<int, 2> DiamondFrame::pair(PairShape s) const {
  switch (s) {
    case PairShape::Wedge: return {eid[0], eid[1]};
    case PairShape::Vee: return {eid[2], eid[3]};
    case PairShape::Less: return {eid[0], eid[2]};
    case PairShape::Greater: return {eid[1], eid[3]};
    case PairShape::Slash: return {eid[0], eid[3]};
    case PairShape::Backslash: return {eid[1], eid[2]};
  }
  fail(Err::PreconditionUnmet, "bad shape");
}

DiamondFrame diamond_frame(const SemiMpg& q) {
  if (q.outer.size() != 1 || q.emb.faces[q.outer[0]].size() != 4)
    fail(Err::NotFourGon, "split does not leave a single 4-gon facet");
  if (q.removed.size() != 1)
    fail(Err::PreconditionUnmet, "expected exactly one removed edge");
  Diamond d = diamond_of(q.base, q.removed[0]);
  DiamondFrame f;
  f.a = d.a;
  f.b = d.b;
  f.N = d.N;
  f.S = d.S;
  f.eid = {q.emb.edge_id_checked(d.a, d.N), q.emb.edge_id_checked(d.b, d.N),
           q.emb.edge_id_checked(d.a, d.S), q.emb.edge_id_checked(d.b, d.S)};
  f.omega = {d.a, d.N, d.b, d.S};
  return f;
}

DiamondType classify_diamond(const SemiMpg& q, const RgbTiling& t) {
  DiamondFrame f = diamond_frame(q);
  if (t.size() != static_cast<size_t>(q.emb.m()))
    fail(Err::PreconditionUnmet, "tiling size does not match the split");
  int an = t[f.eid[0]], bn = t[f.eid[1]], as = t[f.eid[2]], bs = t[f.eid[3]];
  DiamondType ty;
  if (an == bn && an == as && an == bs) {
    ty.kind = 'A';
    ty.colors = {an, an};
    return ty;
  }
  PairShape first;
  int c0, c1;
  if (an == bn && as == bs && an != as) {
    ty.kind = 'B';
    first = PairShape::Wedge;
    c0 = an;
    c1 = as;
  } else if (an == as && bn == bs && an != bn) {
    ty.kind = 'C';
    first = PairShape::Less;
    c0 = an;
    c1 = bn;
  } else if (an == bs && as == bn && an != as) {
    ty.kind = 'D';
    first = PairShape::Slash;
    c0 = an;
    c1 = as;
  } else {
    fail(Err::PreconditionUnmet, "boundary colors violate the pair rule");
  }
  if (c0 < c1) {
    ty.dir = first;
    ty.colors = {c0, c1};
  } else {
    ty.dir = shape_mate(first);
    ty.colors = {c1, c0};
  }
  return ty;
}

FamilyCensus family_census(const SemiMpg& q) {
  DiamondFrame f = diamond_frame(q);
  FamilyCensus c;

  for (const MonoTiling& m : enumerate_mono_tilings(q.emb, kRed)) {
    if (!odd_cycle_free(q.emb, m)) continue;
    int mask = footprint_mask(f, m.member);
    int on = std::popcount(static_cast<unsigned>(mask));
    if (on == 0) ++c.rt0r;
    if (on == 2) {
      ++c.gt2g;
      ++c.gt2g_by[static_cast<int>(shape_of_mask(mask))];
    }
    if (on == 4) ++c.bt4b;
  }

  for (const RgbTiling& t : enumerate_rgb_tilings(q.emb)) {
    ++c.rgb_total;
    DiamondType ty = classify_diamond(q, t);
    ++c.kinds[ty.kind - 'A'];
    // footprint of each color class along the boundary
    std::array<int, 4> mask{};
    for (int k = 0; k < 4; ++k) mask[t[f.eid[k]]] |= 1 << k;
    bool orb0 = false, orb2 = false, orb4 = false;
    std::array<bool, 6> orb_by{};
    for (int color : kColors) {
      int on = std::popcount(static_cast<unsigned>(mask[color]));
      long one = 1;
      if (on == 0) {
        orb0 = true;
        if (color == kRed) c.rt0r_ext += one;
      }
      if (on == 2) {
        orb2 = true;
        PairShape s = shape_of_mask(mask[color]);
        orb_by[static_cast<int>(s)] = true;
        if (color == kGreen) {
          c.gt2g_ext += one;
          c.gt2g_ext_by[static_cast<int>(s)] += one;
        }
      }
      if (on == 4) {
        orb4 = true;
        if (color == kBlue) c.bt4b_ext += one;
      }
    }
    c.rt0r_orb += orb0;
    c.gt2g_orb += orb2;
    c.bt4b_orb += orb4;
    for (int s = 0; s < 6; ++s) c.gt2g_orb_by[s] += orb_by[s];
  }
  return c;
}

IffReport four_color_iff(const Mpg& m, Edge e) {
  SemiMpg q = delete_edge(m, e);
  DiamondFrame f = diamond_frame(q);
  IffReport r;
  r.colorable = count_colorings(m) > 0;
  MonoFamily greens = mono_family(q, f, kGreen, 2);
  r.gt_less = greens.by_shape[static_cast<int>(PairShape::Less)];
  r.gt_slash = greens.by_shape[static_cast<int>(PairShape::Slash)];
  r.family_nonempty = r.gt_less + r.gt_slash > 0;
  r.agree = r.colorable == r.family_nonempty;
  return r;
}

NecessaryReport check_necessary(const Mpg& m, Edge e) {
  SemiMpg q = delete_edge(m, e);
  DiamondFrame f = diamond_frame(q);
  NecessaryReport r;
  r.colorable = count_colorings(m) > 0;

  MonoFamily reds = mono_family(q, f, kRed, 0);
  r.rt0r = static_cast<int>(reds.members.size());
  r.b = true;
  for (const MonoTiling& tr : reds.members)
    if (!even_member_path(q.emb, tr, f.a, f.b)) r.b = false;

  MonoFamily greens = mono_family(q, f, kGreen, 2);
  r.gt2g_wedge = greens.by_shape[static_cast<int>(PairShape::Wedge)];
  r.gt2g_vee = greens.by_shape[static_cast<int>(PairShape::Vee)];
  r.gt2g_sideways = static_cast<int>(greens.members.size()) - r.gt2g_wedge -
                    r.gt2g_vee;

  MonoFamily blues = mono_family(q, f, kBlue, 4);
  r.bt4b = static_cast<int>(blues.members.size());

  r.a = r.rt0r > 0 && r.gt2g_wedge > 0 && r.bt4b > 0 && r.gt2g_sideways == 0;

  r.c = true;
  for (const MonoTiling& tg : greens.members) {
    if (footprint_mask(f, tg.member) != 0b0011) continue;  // wedge only
    bool low_red = false, low_blue = false;
    for (const RgbTiling& t : extend_mono_to_rgb(q.emb, tg)) {
      int low = t[f.eid[2]];
      assert(low == t[f.eid[3]]);
      (low == kRed ? low_red : low_blue) = true;
      int want = low == kRed ? kBlue : kRed;
      if (!even_chain(q.emb, t, want, f.a, f.b)) r.c = false;
    }
    if (!low_red || !low_blue) r.c = false;
  }

  r.d = true;
  r.d_vacuous = blues.members.empty();
  for (const MonoTiling& tb : blues.members) {
    auto exts = extend_mono_to_rgb(q.emb, tb);
    if (exts.empty()) r.d = false;
    for (const RgbTiling& t : exts)
      if (!even_chain(q.emb, t, kRed, f.a, f.b) ||
          !even_chain(q.emb, t, kGreen, f.a, f.b))
        r.d = false;
  }
  return r;
}

SufficientReport check_sufficient(const Mpg& m, Edge e) {
  SemiMpg q = delete_edge(m, e);
  DiamondFrame f = diamond_frame(q);
  MonoFamily reds = mono_family(q, f, kRed, 0);
  MonoFamily greens = mono_family(q, f, kGreen, 2);
  SufficientReport r;
  r.rt0r = static_cast<int>(reds.members.size());
  r.gt2g = static_cast<int>(greens.members.size());
  if (r.rt0r == 0 || r.gt2g == 0)
    fail(Err::EmptyFamily, "a split of a real triangulation lost its perfect "
                           "red or two-boundary green monos");

  r.i = true;
  for (const MonoTiling& tr : reds.members)
    if (!even_member_path(q.emb, tr, f.a, f.b)) r.i = false;

  r.ii = true;
  for (const MonoTiling& tg : greens.members) {
    int mask = footprint_mask(f, tg.member);
    for (const RgbTiling& t : extend_mono_to_rgb(q.emb, tg)) {
      // the two non-green boundary edges share one color; read it as blue
      int low = -1;
      for (int k = 0; k < 4; ++k)
        if (!(mask >> k & 1)) low = t[f.eid[k]];
      int want = low == kRed ? kBlue : kRed;
      if (!even_chain(q.emb, t, want, f.a, f.b)) r.ii = false;
    }
  }

  r.ii_prime =
      greens.by_shape[static_cast<int>(PairShape::Wedge)] +
          greens.by_shape[static_cast<int>(PairShape::Vee)] ==
      static_cast<int>(greens.members.size());
  return r;
}

RegionSwap typeA_to_typeB(const SemiMpg& q, const RgbTiling& t) {
  DiamondFrame f = diamond_frame(q);
  DiamondType ty = classify_diamond(q, t);
  if (ty.kind != 'A') fail(Err::PreconditionUnmet, "tiling is not kind A");
  int boundary = ty.colors[0];
  int chain_color = boundary == kRed ? kGreen : kRed;
  auto ch = chain(q.emb, t, chain_color, f.a, f.b);
  if (!ch)
    fail(Err::NoRedChain, "no a-b chain in the cut color off the boundary");

  // close the chain with the removed edge in the base graph and cut the dual
  // along that cycle; faces then split into the N side and the S side
  const Embedding& base = q.base.emb;
  std::vector<char> on_cycle(base.m(), 0);
  on_cycle[base.edge_id_checked(f.a, f.b)] = 1;
  for (size_t i = 0; i + 1 < ch->path.size(); ++i)
    on_cycle[base.edge_id_checked(ch->path[i], ch->path[i + 1])] = 1;
  std::vector<char> n_side(base.face_count(), 0);
  std::queue<int> bfs;
  int seed = base.dart_face(f.a, f.b);  // the face holding N
  n_side[seed] = 1;
  bfs.push(seed);
  DualGraph dg = dual(base);
  while (!bfs.empty()) {
    int x = bfs.front();
    bfs.pop();
    for (auto [y, eid] : dg.adj[x])
      if (!on_cycle[eid] && !n_side[y]) {
        n_side[y] = 1;
        bfs.push(y);
      }
  }

  RegionSwap rs;
  rs.chain = *ch;
  rs.result = t;
  int other = kRed + kGreen + kBlue - boundary - chain_color;
  for (int id = 0; id < base.m(); ++id) {
    if (on_cycle[id]) continue;
    if (!n_side[base.edge_face[id][0]]) continue;
    int qid = q.emb.edge_id_checked(base.edge(id).u, base.edge(id).v);
    rs.region.push_back(qid);
    if (rs.result[qid] == boundary)
      rs.result[qid] = other;
    else if (rs.result[qid] == other)
      rs.result[qid] = boundary;
  }
  std::sort(rs.region.begin(), rs.region.end());
  assert(is_rgb_tiling(q.emb, rs.result));
  assert(classify_diamond(q, rs.result).kind == 'B');
  return rs;
}

Mpg apex_flip(const SemiMpg& q) {
  DiamondFrame f = diamond_frame(q);
  if (q.base.emb.adjacent(f.N, f.S))
    fail(Err::NSAdjacent,
         q.base.n() == 4
             ? "apexes adjacent: the base graph is K4"
             : "apexes adjacent: the apex triangle is nontrivial in the base");

  // split the 4-gon facet along N-S: in each apex rotation the diagonal lands
  // between that apex's two boundary neighbors, ordered by the facet walk
  const std::vector<int>& walk = q.emb.faces[q.outer[0]];
  std::vector<std::vector<int>> rot = q.emb.rot;
  for (int apex : {f.N, f.S}) {
    int at = -1;
    for (int i = 0; i < 4; ++i)
      if (walk[i] == apex) at = i;
    int pred = walk[(at + 3) % 4];
    auto& cyc = rot[apex];
    auto it = std::find(cyc.begin(), cyc.end(), pred);
    cyc.insert(it + 1, apex == f.N ? f.S : f.N);
  }
  return Mpg::from_rotations(std::move(rot));
}

AugmentReport ns_augment(const SemiMpg& q, const RgbTiling& t) {
  DiamondFrame f = diamond_frame(q);
  DiamondType ty = classify_diamond(q, t);
  if (ty.kind != 'B') fail(Err::PreconditionUnmet, "tiling is not kind B");

  AugmentReport r;
  r.flipped = apex_flip(q);

  // rename the color missing from the boundary to red, then run the diagonal
  // through the red class
  int missing = kRed + kGreen + kBlue - ty.colors[0] - ty.colors[1];
  RgbTiling tn = t;
  if (missing != kRed)
    for (int& c : tn) {
      if (c == missing)
        c = kRed;
      else if (c == kRed)
        c = missing;
    }
  for (int id : mono_restriction(q.emb, tn, kRed).edges())
    r.red_members.push_back(q.emb.edge(id));
  r.red_members.push_back(Edge(f.N, f.S));
  std::sort(r.red_members.begin(), r.red_members.end());
  r.red_odd_cycle =
      odd_cycle_stats(r.flipped.n(), r.red_members).odd_count > 0;
  r.colorings = count_colorings(r.flipped);
  r.colorable = r.colorings > 0;
  return r;
}

std::vector<HuntHit> hunt_counterexamples(std::span<const Mpg> corpus) {
  std::vector<HuntHit> hits;
  for (size_t gi = 0; gi < corpus.size(); ++gi) {
    const Mpg& m = corpus[gi];
    for (const Edge& e : m.emb.edges) {
      SemiMpg q = delete_edge(m, e);
      DiamondFrame f = diamond_frame(q);
      MonoFamily blues = mono_family(q, f, kBlue, 4);
      if (blues.members.empty()) continue;
      bool forced = true;
      long exts = 0;
      for (const MonoTiling& tb : blues.members) {
        for (const RgbTiling& t : extend_mono_to_rgb(q.emb, tb)) {
          ++exts;
          if (!even_chain(q.emb, t, kRed, f.a, f.b) ||
              !even_chain(q.emb, t, kGreen, f.a, f.b)) {
            forced = false;
            break;
          }
        }
        if (!forced) break;
      }
      if (!forced) continue;
      long red_e = 0;
      for (const VertexColoring& c :
           enumerate_vertex_colorings(m.emb.graph()))
        if (edge_color_of(c[e.u], c[e.v]) == kRed) ++red_e;
      if (red_e == 0) continue;
      hits.push_back({static_cast<int>(gi), e,
                      static_cast<int>(blues.members.size()), exts, red_e});
    }
  }
  return hits;
}

}  // namespace kempelab
