// Shared test fixtures.  Triangulations are written down as face lists and
// turned into rotation systems here, so a typo fails validation instead of
// silently producing a different embedding.
#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "kempelab/embed.hpp"

namespace fixtures {

// Builds the rotation system whose traced faces are exactly the given vertex
// cycles.  Face 0 keeps its listed orientation; the rest are flipped as needed
// by propagation across shared edges.
inline std::vector<std::vector<int>> rotations_from_faces(
    int n, std::vector<std::vector<int>> faces) {
  std::map<kempelab::Edge, std::vector<int>> at_edge;
  for (size_t f = 0; f < faces.size(); ++f) {
    const auto& cyc = faces[f];
    for (size_t k = 0; k < cyc.size(); ++k)
      at_edge[kempelab::Edge(cyc[k], cyc[(k + 1) % cyc.size()])].push_back(static_cast<int>(f));
  }
  for (const auto& [e, fs] : at_edge)
    if (fs.size() != 2)
      throw std::runtime_error("edge " + kempelab::format_edge(e) + " lies on " +
                               std::to_string(fs.size()) + " faces");

  auto has_dart = [&](int f, int a, int b) {
    const auto& cyc = faces[f];
    for (size_t k = 0; k < cyc.size(); ++k)
      if (cyc[k] == a && cyc[(k + 1) % cyc.size()] == b) return true;
    return false;
  };
  std::vector<int> state(faces.size(), 0);  // 0 unseen, 1 keep, -1 flipped
  std::vector<size_t> queue{0};
  state[0] = 1;
  while (!queue.empty()) {
    size_t f = queue.back();
    queue.pop_back();
    const auto& cyc = faces[f];
    for (size_t k = 0; k < cyc.size(); ++k) {
      int a = cyc[k], b = cyc[(k + 1) % cyc.size()];
      if (state[f] < 0) std::swap(a, b);  // dart of f after flipping
      const auto& fs = at_edge[kempelab::Edge(a, b)];
      int g = fs[0] == static_cast<int>(f) ? fs[1] : fs[0];
      int want = has_dart(g, b, a) ? 1 : -1;
      if (state[g] == 0) {
        state[g] = want;
        queue.push_back(static_cast<size_t>(g));
      } else if (state[g] != want) {
        throw std::runtime_error("face list is not orientable");
      }
    }
  }
  for (int s : state)
    if (s == 0) throw std::runtime_error("face adjacency is not connected");

  // face cycle window (u, v, t) means: in rot[v], t follows u
  std::vector<std::map<int, int>> succ(n);
  for (size_t f = 0; f < faces.size(); ++f) {
    auto cyc = faces[f];
    if (state[f] < 0) std::reverse(cyc.begin(), cyc.end());
    size_t sz = cyc.size();
    for (size_t k = 0; k < sz; ++k) {
      int u = cyc[k], v = cyc[(k + 1) % sz], t = cyc[(k + 2) % sz];
      if (!succ[v].emplace(u, t).second)
        throw std::runtime_error("conflicting successor at vertex " + std::to_string(v));
    }
  }
  std::vector<std::vector<int>> rot(n);
  for (int v = 0; v < n; ++v) {
    if (succ[v].empty()) throw std::runtime_error("isolated vertex " + std::to_string(v));
    int u0 = succ[v].begin()->first;
    int u = u0;
    do {
      rot[v].push_back(u);
      auto it = succ[v].find(u);
      if (it == succ[v].end()) throw std::runtime_error("open neighbor chain");
      u = it->second;
    } while (u != u0 && rot[v].size() <= succ[v].size());
    if (rot[v].size() != succ[v].size())
      throw std::runtime_error("neighbor cycle at " + std::to_string(v) + " does not close");
  }
  return rot;
}

inline kempelab::Mpg mpg_from_faces(int n, std::vector<std::vector<int>> faces) {
  return kempelab::Mpg::from_rotations(rotations_from_faces(n, std::move(faces)));
}

inline kempelab::Mpg k4() {
  return mpg_from_faces(4, {{0, 1, 2}, {0, 2, 3}, {0, 3, 1}, {1, 3, 2}});
}

// Triangular bipyramid: apexes 3 and 4 over triangle 0-1-2.
inline kempelab::Mpg bipyramid5() {
  return mpg_from_faces(
      5, {{0, 1, 3}, {1, 2, 3}, {2, 0, 3}, {1, 0, 4}, {2, 1, 4}, {0, 2, 4}});
}

// Poles 0 and 5, equator 1-2-3-4.
inline kempelab::Mpg octahedron() {
  return mpg_from_faces(6, {{0, 1, 2},
                            {0, 2, 3},
                            {0, 3, 4},
                            {0, 4, 1},
                            {5, 2, 1},
                            {5, 3, 2},
                            {5, 4, 3},
                            {5, 1, 4}});
}

// K4 on 0-3, then vertex 4 stacked into face 0-1-2 and vertex 5 into 0-1-4.
inline kempelab::Mpg apollonian6() {
  return mpg_from_faces(6, {{0, 2, 3},
                            {0, 3, 1},
                            {1, 3, 2},
                            {1, 2, 4},
                            {2, 0, 4},
                            {0, 1, 5},
                            {1, 4, 5},
                            {4, 0, 5}});
}

// Pentagonal bipyramid: apexes 5 and 6 over the 5-cycle 0-1-2-3-4.
inline kempelab::Mpg bipyramid7() {
  std::vector<std::vector<int>> faces;
  for (int i = 0; i < 5; ++i) {
    faces.push_back({i, (i + 1) % 5, 5});
    faces.push_back({(i + 1) % 5, i, 6});
  }
  return mpg_from_faces(7, faces);
}

inline kempelab::Mpg icosahedron() {
  return mpg_from_faces(12, {{0, 1, 2},  {0, 2, 3},  {0, 3, 4},  {0, 4, 5},
                             {0, 5, 1},  {1, 5, 6},  {1, 6, 7},  {1, 7, 2},
                             {2, 7, 8},  {2, 8, 3},  {3, 8, 9},  {3, 9, 4},
                             {4, 9, 10}, {4, 10, 5}, {5, 10, 6}, {6, 10, 11},
                             {6, 11, 7}, {7, 11, 8}, {8, 11, 9}, {9, 11, 10}});
}

inline kempelab::Mpg relabeled(const kempelab::Mpg& m, const std::vector<int>& perm) {
  int n = m.emb.n;
  std::vector<std::vector<int>> rot(n);
  for (int v = 0; v < n; ++v) {
    rot[perm[v]].reserve(m.emb.rot[v].size());
    for (int u : m.emb.rot[v]) rot[perm[v]].push_back(perm[u]);
  }
  return kempelab::Mpg::from_rotations(std::move(rot));
}

// Permutation search over adjacency, viable up to n around 8.
inline bool brute_isomorphic(const kempelab::Mpg& a, const kempelab::Mpg& b) {
  int n = a.emb.n;
  if (n != b.emb.n || a.emb.m() != b.emb.m()) return false;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int v = 0; v < n && ok; ++v)
      for (int u : a.emb.rot[v])
        if (!b.emb.adjacent(perm[v], perm[u])) {
          ok = false;
          break;
        }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace fixtures
