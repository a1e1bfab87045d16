#include "kempelab/blockgraph.hpp"

#include <algorithm>
#include <cassert>
#include <queue>

namespace kempelab {
namespace {

// The vertex both crossed edges share: the corner of the first traversed
// triangle opposite its avoided edge, which is the lone vertex on the
// bank-free side of the canal.
int enclosed_corner(const Embedding& e, const CanalObject& canal) {
  assert(canal.walk.size() >= 2);
  const Edge& e0 = e.edge(canal.walk[0]);
  const Edge& e1 = e.edge(canal.walk[1]);
  if (e0.u == e1.u || e0.u == e1.v) return e0.u;
  assert(e0.v == e1.u || e0.v == e1.v);
  return e0.v;
}

// Side block for one bank of a canal; all bank edges must fall into a single
// block or the instance falsifies the tree property.
int side_block(const Embedding& e, const BlockGraph& bg,
               const CanalObject& canal, const std::vector<int>& bank) {
  if (!bank.empty()) {
    int b = bg.block_of[e.edge(bank[0]).u];
    for (int eid : bank)
      if (bg.block_of[e.edge(eid).u] != b)
        fail(Err::NotATree, "one canal bank spans several blocks");
    return b;
  }
  return bg.block_of[enclosed_corner(e, canal)];
}

}  // namespace

BlockGraph build_block_graph(const Embedding& e, const RgbTiling& t, int color) {
  if (color < kRed || color > kBlue)
    fail(Err::PreconditionUnmet, "color out of range");
  if (!is_rgb_tiling(e, t))
    fail(Err::PreconditionUnmet, "input is not a proper tiling");

  BlockGraph bg;
  bg.color = color;
  bg.member.assign(e.m(), 0);
  for (int eid = 0; eid < e.m(); ++eid) bg.member[eid] = t[eid] == color;

  bg.block_of.assign(e.n, -1);
  for (int v = 0; v < e.n; ++v) {
    if (bg.block_of[v] >= 0) continue;
    int id = bg.block_count();
    bg.blocks.emplace_back();
    std::queue<int> q;
    q.push(v);
    bg.block_of[v] = id;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      bg.blocks[id].push_back(u);
      for (int w : e.rot[u]) {
        int eid = e.edge_id(u, w);
        if (bg.member[eid] && bg.block_of[w] < 0) {
          bg.block_of[w] = id;
          q.push(w);
        }
      }
    }
    std::sort(bg.blocks[id].begin(), bg.blocks[id].end());
  }

  bg.canals = canal_objects(e, t, color);
  bg.link_of_edge.assign(e.m(), -1);
  for (const auto& canal : bg.canals) {
    int left, right;
    if (canal.faces.empty()) {
      // Lone crossed edge with no triangle on either side; each endpoint
      // sits on its own side of the cut.
      left = bg.block_of[e.edge(canal.walk[0]).u];
      right = bg.block_of[e.edge(canal.walk[0]).v];
    } else {
      left = side_block(e, bg, canal, canal.left_bank);
      right = side_block(e, bg, canal, canal.right_bank);
    }
    if (left == right)
      fail(Err::NotATree, "canal loops back onto one block");
    int id = bg.link_count();
    bg.links.push_back({left, right});
    for (int eid : canal.walk) bg.link_of_edge[eid] = id;
  }

  if (bg.link_count() != bg.block_count() - 1)
    fail(Err::NotATree, "block and link counts break the tree identity");
  std::vector<char> seen(bg.block_count(), 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  int reached = 1;
  while (!q.empty()) {
    int b = q.front();
    q.pop();
    for (const auto& l : bg.links)
      for (int s = 0; s < 2; ++s)
        if (l[s] == b && !seen[l[1 - s]]) {
          seen[l[1 - s]] = 1;
          ++reached;
          q.push(l[1 - s]);
        }
  }
  if (reached != bg.block_count())
    fail(Err::NotATree, "block graph is disconnected");

  bg.block_marks.assign(bg.block_count(), 0);
  bg.link_marks.assign(bg.link_count(), 0);
  return bg;
}

std::vector<int> firing_plan_block(const BlockGraph& bg, int block) {
  if (block < 0 || block >= bg.block_count())
    fail(Err::PreconditionUnmet, "block index out of range");
  std::vector<int> out;
  for (int l = 0; l < bg.link_count(); ++l)
    if (bg.links[l][0] == block || bg.links[l][1] == block) out.push_back(l);
  return out;
}

std::vector<int> firing_plan_link(const BlockGraph& bg, int link, LinkSide side) {
  if (link < 0 || link >= bg.link_count())
    fail(Err::PreconditionUnmet, "link index out of range");
  int start = bg.links[link][side == LinkSide::Left ? 0 : 1];
  std::vector<char> seen(bg.block_count(), 0);
  seen[start] = 1;
  std::queue<int> q;
  q.push(start);
  std::vector<int> out{start};
  while (!q.empty()) {
    int b = q.front();
    q.pop();
    for (int l = 0; l < bg.link_count(); ++l) {
      if (l == link) continue;
      for (int s = 0; s < 2; ++s)
        if (bg.links[l][s] == b && !seen[bg.links[l][1 - s]]) {
          seen[bg.links[l][1 - s]] = 1;
          out.push_back(bg.links[l][1 - s]);
          q.push(bg.links[l][1 - s]);
        }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

RgbTiling apply_firing(const Embedding& e, const RgbTiling& t,
                       const BlockGraph& bg, const FiringPlan& plan) {
  if (static_cast<int>(t.size()) != e.m() ||
      static_cast<int>(bg.member.size()) != e.m())
    fail(Err::InconsistentPlan, "tiling or block graph size mismatch");
  if (plan.fire_block.size() != bg.blocks.size() ||
      plan.fire_link.size() != bg.links.size())
    fail(Err::InconsistentPlan, "plan toggles do not match the block graph");
  for (int eid = 0; eid < e.m(); ++eid)
    if ((t[eid] == bg.color) != (bg.member[eid] != 0))
      fail(Err::InconsistentPlan, "block graph was built for another mono class");

  int lo = bg.color == kRed ? kGreen : kRed;
  int hi = bg.color == kBlue ? kGreen : kBlue;
  RgbTiling out = t;
  for (int eid = 0; eid < e.m(); ++eid) {
    if (bg.member[eid]) continue;
    const Edge& ed = e.edge(eid);
    bool swap = plan.fire_link[bg.link_of_edge[eid]] != 0;
    swap ^= plan.fire_block[bg.block_of[ed.u]] != 0;
    swap ^= plan.fire_block[bg.block_of[ed.v]] != 0;
    if (swap) out[eid] = out[eid] == lo ? hi : lo;
  }
  assert(is_rgb_tiling(e, out));
  return out;
}

}  // namespace kempelab
