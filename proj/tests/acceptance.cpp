// Acceptance gate: twelve checks, one verdict line each, exit 0 only when all
// pass.  Expected values are pinned inline; any drift is a regression even
// when the underlying property still holds.
#include <array>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "kempelab/diamond.hpp"
#include "kempelab/embed.hpp"
#include "kempelab/harness.hpp"
#include "kempelab/tiling.hpp"

using namespace kempelab;

namespace {

int failures = 0;

void verdict(int id, bool pass, const std::string& detail) {
  if (!pass) ++failures;
  std::printf("criterion %2d: %s  %s\n", id, pass ? "PASS" : "FAIL",
              detail.c_str());
  std::fflush(stdout);
}

long stat(const SuiteReport& r, const std::string& key) {
  for (const auto& [k, v] : r.stats)
    if (k == key) return v;
  return -1;
}

std::string counts(const SuiteReport& r) {
  return std::to_string(r.passed) + "/" + std::to_string(r.checks) +
         " checks, " + std::to_string(r.failed) + " failed, " +
         std::to_string(static_cast<long>(r.wall_ms)) + "ms";
}

}  // namespace

int main(int argc, char** argv) {
  SuiteConfig base;
  base.jobs = argc > 1 ? std::atoi(argv[1]) : 8;
  SuiteConfig at8 = base, at9 = base;
  at8.n_max = 8;
  at9.n_max = 9;

  // 1: colorings and tilings correspond 4-to-1 and round trip, n <= 8
  SuiteReport tait = run_suite("tait", at8);
  verdict(1,
          tait.ok() && stat(tait, "colorings") == 1488 &&
              stat(tait, "tilings") == 372 && tait.wall_ms < 60e3,
          "coloring/tiling correspondence: " + counts(tait) +
              ", 1488 colorings = 4 x 372 tilings");

  // 2: every mono tiling extends to 0 or 2^(canal count) tilings, n <= 8
  SuiteReport twon = run_suite("twoN", at8);
  verdict(2, twon.ok() && twon.checks == 12243 && twon.wall_ms < 300e3,
          "power-of-two extension counts: " + counts(twon));

  // 3 and 4: block graphs are trees; switching realizations agree, n <= 8
  SuiteReport tree = run_suite("tree", at8);
  verdict(3, tree.ok() && stat(tree, "block_graphs") == 33498,
          "block graphs all trees: " + counts(tree) + ", 33498 block graphs");
  verdict(4, tree.ok(),
          "vertex- and edge-level switches match direct switching: " +
              counts(tree));

  // 5: one-edge recolorability biconditional over every split, n <= 9
  SuiteReport iff = run_suite("iff", at9);
  verdict(5,
          iff.ok() && stat(iff, "splits") == 1416 && iff.wall_ms < 1800e3,
          "recolorability biconditional: " + counts(iff) + ", 1416 splits");

  // 6: starred red and green families never empty, n <= 9; the K4 split has
  // no boundary-covering blue mono at all
  FamilyCensus k4c = family_census(delete_edge(generate_all(4).at(0), Edge(0, 1)));
  verdict(6,
          iff.ok() && k4c.bt4b == 0 && k4c.bt4b_ext == 0 && k4c.bt4b_orb == 0 &&
              k4c.rt0r > 0 && k4c.gt2g > 0,
          "families inhabited on all 1416 splits; K4 split: rt0r=" +
              std::to_string(k4c.rt0r) + " gt2g=" + std::to_string(k4c.gt2g) +
              " bt4b=0");

  // 7: the would-be non-colorability certificates all evaluate false, n <= 9
  SuiteReport suf = run_suite("sufficient", at9);
  verdict(7, suf.ok(),
          "sufficiency predicates false everywhere, (ii) = (ii'): " +
              counts(suf));

  // 8: coexisting pole-to-pole chains of distinct colors are all even, n <= 9
  SuiteReport nec = run_suite("necessary", at9);
  verdict(8, nec.ok() && stat(nec, "coexisting_pairs") == 34068,
          "even coexisting chains: " + counts(nec) +
              ", 34068 coexisting pairs");

  // 9: cycle census fixture: two hubs joined by paths of lengths 4, 1, 4
  std::vector<Edge> theta{{0, 2}, {2, 3}, {3, 4}, {4, 1}, {0, 1},
                          {0, 5}, {5, 6}, {6, 7}, {7, 1}};
  CycleStats st = odd_cycle_stats(8, theta);
  verdict(9,
          st.odd_count == 2 && st.even_count == 1 && st.oc == 1 && st.ec == 1,
          "theta fixture: (#odd,#even)=(" + std::to_string(st.odd_count) +
              "," + std::to_string(st.even_count) +
              "), oc=" + std::to_string(st.oc));

  // 10: chain exclusivity at degree-5 holes plus double-switch telemetry,
  // n <= 9
  SuiteReport tangle = run_suite("tangle", at9);
  verdict(10,
          tangle.ok() && stat(tangle, "double_switch_instances") == 2568 &&
              stat(tangle, "tangles") == 576 &&
              stat(tangle, "stuck_holes") == 144,
          "exclusivity and tangling: " + counts(tangle) +
              ", 2568 double-switch instances, 576 tangles, 144 stuck");

  // 11: forced even chains through every covering blue extension do not
  // certify non-colorability; the scan must find refutations, n <= 9
  SuiteReport hunt = run_suite("hunt", at9);
  verdict(11, hunt.ok() && stat(hunt, "hits") == 115,
          "forced-even refutations: " + counts(hunt) + ", 115 hits");

  // 12: generated class counts match the pinned table and the interchange
  // encoding round trips byte for byte, n = 4..10
  {
    std::array<long, 7> expected{1, 1, 2, 5, 14, 50, 233};
    bool ok = true;
    std::string detail = "class counts";
    for (int n = 4; n <= 10; ++n) {
      std::vector<Mpg> graphs = generate_all(n);
      if (static_cast<long>(graphs.size()) != expected[n - 4]) ok = false;
      std::ostringstream first;
      write_planar_code(first, graphs);
      std::istringstream in(first.str());
      std::vector<Mpg> back = read_planar_code(in);
      std::ostringstream second;
      write_planar_code(second, back);
      if (first.str() != second.str()) ok = false;
      detail += " n=" + std::to_string(n) + ":" + std::to_string(graphs.size());
    }
    verdict(12, ok, detail + "; decode/re-encode byte-identical");
  }

  std::printf("%d of 12 criteria passed\n", 12 - failures);
  return failures == 0 ? 0 : 1;
}
