#include "kempelab/relations.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <queue>
#include <set>

namespace kempelab {
namespace {

const std::array<std::array<int, 4>, 6> kColorPerms{{
    {0, 1, 2, 3}, {0, 1, 3, 2}, {0, 2, 1, 3}, {0, 2, 3, 1}, {0, 3, 1, 2},
    {0, 3, 2, 1}}};

RgbTiling permuted(const RgbTiling& t, const std::array<int, 4>& perm) {
  RgbTiling out = t;
  for (int& c : out) c = perm[c];
  return out;
}

struct Dsu {
  std::vector<int> up;
  explicit Dsu(int n) : up(n) { std::iota(up.begin(), up.end(), 0); }
  int find(int x) { return up[x] == x ? x : up[x] = find(up[x]); }
  void join(int a, int b) { up[find(a)] = find(b); }
};

// Face sides after cutting the dual along the cycle's edges: 0 = outside
// (per the convention in the header), 1 = inside.
std::vector<int> face_sides(const Embedding& e, const std::vector<char>& on_omega) {
  std::vector<int> comp(e.face_count(), -1);
  int ncomp = 0;
  DualGraph d = dual(e);
  for (int f = 0; f < e.face_count(); ++f) {
    if (comp[f] >= 0) continue;
    std::queue<int> q;
    q.push(f);
    comp[f] = ncomp;
    while (!q.empty()) {
      int g = q.front();
      q.pop();
      for (const auto& [h, eid] : d.adj[g])
        if (!on_omega[eid] && comp[h] < 0) {
          comp[h] = ncomp;
          q.push(h);
        }
    }
    ++ncomp;
  }
  if (ncomp != 2)
    fail(Err::OmegaNotCycle, "cycle does not separate the surface into two sides");
  int outside_comp = comp[0];
  for (int f = 0; f < e.face_count(); ++f)
    if (!e.triangle(f)) {
      outside_comp = comp[f];
      break;
    }
  std::vector<int> side(e.face_count());
  for (int f = 0; f < e.face_count(); ++f) side[f] = comp[f] == outside_comp ? 0 : 1;
  return side;
}

}  // namespace

std::vector<RgbTiling> synonym_orbit(const Embedding& e, const RgbTiling& t) {
  if (!is_rgb_tiling(e, t))
    fail(Err::PreconditionUnmet, "input is not a proper tiling");
  std::set<RgbTiling> orbit;
  for (const auto& perm : kColorPerms) orbit.insert(permuted(t, perm));
  return {orbit.begin(), orbit.end()};
}

Skeleton skeleton(const Embedding& e, const RgbTiling& t,
                  std::span<const int> omega, Side side) {
  int k = static_cast<int>(omega.size());
  if (static_cast<int>(t.size()) != e.m())
    fail(Err::PreconditionUnmet, "tiling size mismatch");
  for (int c : t)
    if (c < kRed || c > kBlue) fail(Err::PreconditionUnmet, "edge color out of range");
  if (k < 3) fail(Err::OmegaNotCycle, "cycle needs at least three vertices");
  std::set<int> distinct(omega.begin(), omega.end());
  if (static_cast<int>(distinct.size()) != k)
    fail(Err::OmegaNotCycle, "cycle repeats a vertex");
  std::vector<char> on_omega(e.m(), 0);
  for (int i = 0; i < k; ++i) {
    int eid = e.edge_id(omega[i], omega[(i + 1) % k]);
    if (eid < 0) fail(Err::OmegaNotCycle, "consecutive cycle vertices not adjacent");
    on_omega[eid] = 1;
  }

  Skeleton sk;
  sk.side = side;
  // Canonical traversal: smallest vertex first, toward its smaller neighbor.
  int p = static_cast<int>(
      std::min_element(omega.begin(), omega.end()) - omega.begin());
  bool rev = omega[(p + k - 1) % k] < omega[(p + 1) % k];
  sk.omega.resize(k);
  for (int i = 0; i < k; ++i)
    sk.omega[i] = rev ? omega[(p - i + 2 * k) % k] : omega[(p + i) % k];
  sk.boundary_colors.resize(k);
  for (int i = 0; i < k; ++i)
    sk.boundary_colors[i] = t[e.edge_id(sk.omega[i], sk.omega[(i + 1) % k])];

  std::vector<int> fside = face_sides(e, on_omega);
  int want = side == Side::Outside ? 0 : 1;
  Dsu dsu[4] = {Dsu(0), Dsu(e.n), Dsu(e.n), Dsu(e.n)};
  for (int eid = 0; eid < e.m(); ++eid) {
    // Cycle edges belong to both closed sides; others to their region.
    if (!on_omega[eid] && fside[e.edge_face[eid][0]] != want) continue;
    dsu[t[eid]].join(e.edge(eid).u, e.edge(eid).v);
  }
  sk.pair_connected.assign(k * (k - 1) / 2, {});
  for (int j = 1; j < k; ++j)
    for (int i = 0; i < j; ++i)
      for (int c : kColors)
        sk.pair_connected[j * (j - 1) / 2 + i][c] =
            dsu[c].find(sk.omega[i]) == dsu[c].find(sk.omega[j]);
  return sk;
}

bool equivalent(const Embedding& e, const RgbTiling& t1, const RgbTiling& t2,
                std::span<const int> omega, Side side, bool up_to_synonym) {
  Skeleton s1 = skeleton(e, t1, omega, side);
  if (!up_to_synonym) return s1 == skeleton(e, t2, omega, side);
  for (const auto& perm : kColorPerms)
    if (s1 == skeleton(e, permuted(t2, perm), omega, side)) return true;
  return false;
}

namespace {

// Canal-switch reachability from seed; stops early when target is found.
std::set<RgbTiling> reachable(const Embedding& e, const RgbTiling& seed,
                              const RgbTiling* target, long cap) {
  std::set<RgbTiling> seen{seed};
  std::queue<RgbTiling> q;
  q.push(seed);
  while (!q.empty()) {
    RgbTiling cur = std::move(q.front());
    q.pop();
    if (target && cur == *target) break;
    for (int avoided : kColors) {
      for (const auto& canal : canal_objects(e, cur, avoided)) {
        RgbTiling next = ecs(e, cur, canal);
        if (seen.insert(next).second) {
          if (static_cast<long>(seen.size()) > cap)
            fail(Err::StateSpaceLimit, "congruence search exceeded the cap");
          q.push(next);
        }
      }
    }
  }
  return seen;
}

}  // namespace

bool congruent(const Embedding& e, const RgbTiling& t1, const RgbTiling& t2,
               long cap) {
  if (e.outer_facets().size() > 1)
    fail(Err::PreconditionUnmet, "congruence needs a one-piece instance");
  if (!is_rgb_tiling(e, t1) || !is_rgb_tiling(e, t2))
    fail(Err::PreconditionUnmet, "input is not a proper tiling");
  return reachable(e, t1, &t2, cap).count(t2) > 0;
}

std::vector<std::vector<RgbTiling>> congruence_census(const Embedding& e,
                                                      long cap) {
  if (e.outer_facets().size() > 1)
    fail(Err::PreconditionUnmet, "congruence needs a one-piece instance");
  std::vector<std::vector<RgbTiling>> classes;
  std::set<RgbTiling> assigned;
  long budget = 0;
  for (const auto& t : enumerate_rgb_tilings(e)) {
    if (assigned.count(t)) continue;
    std::set<RgbTiling> cls = reachable(e, t, nullptr, cap - budget);
    budget += static_cast<long>(cls.size());
    classes.emplace_back(cls.begin(), cls.end());
    assigned.insert(cls.begin(), cls.end());
  }
  return classes;
}

}  // namespace kempelab
