#pragma once

#include <array>
#include <vector>

#include "kempelab/kempe.hpp"

namespace kempelab {

// Components of the color-c edge subgraph as blocks (vertices without a
// c-edge form singleton blocks), the canals avoiding c as links.  On a
// one-piece instance the underlying multigraph is a tree; anything else is
// reported as NotATree data.
struct BlockGraph {
  int color = kRed;
  std::vector<std::vector<int>> blocks;    // sorted; discovered by min vertex
  std::vector<int> block_of;               // vertex -> block index
  std::vector<CanalObject> canals;         // one per link, canal order
  std::vector<std::array<int, 2>> links;   // {left side block, right side block}
  std::vector<char> member;                // color-c edge indicator
  std::vector<int> link_of_edge;           // edge -> link index, -1 on members
  // Presentation toggles mirroring the single/double line figures; semantics
  // never read them.
  std::vector<char> block_marks, link_marks;

  int block_count() const { return static_cast<int>(blocks.size()); }
  int link_count() const { return static_cast<int>(links.size()); }
};

BlockGraph build_block_graph(const Embedding& e, const RgbTiling& t, int color);

enum class LinkSide { Left, Right };

// Links incident to the block: switching all of them is the edge-level
// realization of a vertex switch on the block.
std::vector<int> firing_plan_block(const BlockGraph& bg, int block);

// Blocks of the subtree hanging on the chosen side of the link: switching all
// of them is the vertex-level realization of the link's edge switch, and both
// sides produce the same tiling.
std::vector<int> firing_plan_link(const BlockGraph& bg, int link, LinkSide side);

struct FiringPlan {
  std::vector<char> fire_block, fire_link;  // sized like bg.blocks / bg.links
};

// Toggles every non-member edge whose canal is fired or that crosses the
// boundary of a fired block an odd number of times.  The color-c class is
// untouched, so the result is always a valid tiling of the same mono class.
RgbTiling apply_firing(const Embedding& e, const RgbTiling& t,
                       const BlockGraph& bg, const FiringPlan& plan);

}  // namespace kempelab
