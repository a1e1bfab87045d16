#include "kempelab/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <map>
#include <optional>
#include <thread>

#include "json.hpp"
#include "kempelab/blockgraph.hpp"
#include "kempelab/diamond.hpp"
#include "kempelab/kempe.hpp"
#include "kempelab/tiling.hpp"

namespace kempelab {
namespace {

constexpr size_t kMaxExamples = 20;

struct Verdict {
  long checks = 0, passed = 0, failed = 0, vacuous = 0;
  std::map<std::string, long> stats;
  std::vector<std::string> examples;
};

void tally(Verdict& v, bool ok) {
  ++v.checks;
  ok ? ++v.passed : ++v.failed;
}

void example(Verdict& v, const std::string& s) {
  if (v.examples.size() < kMaxExamples) v.examples.push_back(s);
}

std::string tag(int gi, const Mpg& m) {
  return "graph " + std::to_string(gi) + " (n=" + std::to_string(m.n()) + ")";
}

std::string tag(int gi, const Mpg& m, const Edge& e) {
  return tag(gi, m) + " minus " + format_edge(e);
}

struct Corpus {
  std::vector<Mpg> graphs;
  std::string desc;
};

Corpus load_corpus(const SuiteConfig& cfg) {
  Corpus c;
  if (!cfg.corpus_file.empty()) {
    std::ifstream in(cfg.corpus_file, std::ios::binary);
    if (!in) fail(Err::CorpusUnavailable, "cannot open " + cfg.corpus_file);
    c.graphs = read_planar_code(in);
    c.desc = cfg.corpus_file;
    return c;
  }
  for (int n = 4; n <= cfg.n_max; ++n)
    for (Mpg& m : generate_all(n, std::max(n, kDefaultGenCap)))
      c.graphs.push_back(std::move(m));
  c.desc = "n<=" + std::to_string(cfg.n_max);
  return c;
}

using Body = void (*)(int, const Mpg&, const SuiteConfig&, Verdict&);
using Epilogue = void (*)(const Corpus&, Verdict&);

std::vector<VertexColoring> hole_colorings(const Mpg& m, int hole) {
  std::vector<Edge> kept;
  for (const Edge& e : m.emb.edges)
    if (e.u != hole && e.v != hole) kept.push_back(e);
  SimpleGraph g = SimpleGraph::from_edges(m.n(), kept);
  std::vector<VertexColoring> out;
  for (auto& c : enumerate_vertex_colorings(g))
    if (c[hole] == 1) out.push_back(std::move(c));
  return out;
}

// --- tait: coloring/tiling correspondence ---------------------------------

void suite_tait(int gi, const Mpg& m, const SuiteConfig&, Verdict& v) {
  auto colorings = enumerate_vertex_colorings(m.emb.graph());
  auto tilings = enumerate_rgb_tilings(m.emb);
  bool four_to_one = colorings.size() == 4 * tilings.size();
  tally(v, four_to_one);
  if (!four_to_one) example(v, tag(gi, m) + ": counts off");
  for (const VertexColoring& c : colorings) {
    RgbTiling t = coloring_to_tiling(m.emb, c);
    bool ok = is_rgb_tiling(m.emb, t) &&
              tiling_to_coloring(m.emb, t, 0, c[0]) == c;
    tally(v, ok);
    if (!ok) example(v, tag(gi, m) + ": round trip broke a coloring");
  }
  v.stats["colorings"] += static_cast<long>(colorings.size());
  v.stats["tilings"] += static_cast<long>(tilings.size());
}

// --- tree: block graphs are trees, firings match direct switches ----------

void tree_instance(const std::string& where, const Embedding& e, Verdict& v) {
  SimpleGraph g = e.graph();
  for (const RgbTiling& t : enumerate_rgb_tilings(e)) {
    VertexColoring c = tiling_to_coloring(e, t, 0, 1);
    for (int color : kColors) {
      BlockGraph bg;
      try {
        bg = build_block_graph(e, t, color);
      } catch (const Error& err) {
        tally(v, false);
        example(v, where + ": " + err.what());
        continue;
      }
      tally(v, bg.link_count() == bg.block_count() - 1);
      ++v.stats["block_graphs"];

      FiringPlan none;
      none.fire_block.assign(bg.block_count(), 0);
      none.fire_link.assign(bg.link_count(), 0);

      for (int b = 0; b < bg.block_count(); ++b) {
        int anchor = bg.blocks[b][0];
        int partner = 0;
        for (int other = 1; other <= 4; ++other)
          if (other != c[anchor] && edge_color_of(c[anchor], other) == color)
            partner = other;
        KempeComponent comp = kempe_component(
            g, c, anchor,
            {std::min(c[anchor], partner), std::max(c[anchor], partner)});
        tally(v, comp.vertices() == bg.blocks[b]);
        RgbTiling direct = coloring_to_tiling(e, vcs(g, c, comp));
        FiringPlan vertex_level = none;
        vertex_level.fire_block[b] = 1;
        FiringPlan edge_level = none;
        for (int l : firing_plan_block(bg, b)) edge_level.fire_link[l] = 1;
        bool ok = apply_firing(e, t, bg, vertex_level) == direct &&
                  apply_firing(e, t, bg, edge_level) == direct;
        tally(v, ok);
        if (!ok) example(v, where + ": block switch disagreed");
      }

      for (int l = 0; l < bg.link_count(); ++l) {
        RgbTiling direct = ecs(e, t, bg.canals[l]);
        FiringPlan edge_level = none;
        edge_level.fire_link[l] = 1;
        FiringPlan left = none, right = none;
        for (int b : firing_plan_link(bg, l, LinkSide::Left))
          left.fire_block[b] = 1;
        for (int b : firing_plan_link(bg, l, LinkSide::Right))
          right.fire_block[b] = 1;
        bool ok = apply_firing(e, t, bg, edge_level) == direct &&
                  apply_firing(e, t, bg, left) == direct &&
                  apply_firing(e, t, bg, right) == direct;
        tally(v, ok);
        if (!ok) example(v, where + ": link switch disagreed");
      }
    }
  }
}

void suite_tree(int gi, const Mpg& m, const SuiteConfig&, Verdict& v) {
  tree_instance(tag(gi, m), m.emb, v);
  for (const Edge& e : m.emb.edges)
    tree_instance(tag(gi, m, e), delete_edge(m, e).emb, v);
}

// --- twoN: extension counts are powers of two from canal counts -----------

void twon_instance(const std::string& where, const Embedding& e, Verdict& v) {
  size_t total = enumerate_rgb_tilings(e).size();
  for (int color : kColors) {
    size_t covered = 0;
    for (const MonoTiling& mono : enumerate_mono_tilings(e, color)) {
      auto ext = extend_mono_to_rgb(e, mono);
      covered += ext.size();
      if (ext.empty()) {
        ++v.vacuous;  // unstarred mono, no coexisting tilings
        continue;
      }
      size_t canals = canal_objects(e, ext[0], color).size();
      bool ok = ext.size() == (size_t{1} << canals);
      tally(v, ok);
      if (!ok) example(v, where + ": extension count is not 2^canals");
    }
    bool partitioned = covered == total;
    tally(v, partitioned);
    if (!partitioned) example(v, where + ": extensions do not partition");
  }
}

void suite_twon(int gi, const Mpg& m, const SuiteConfig&, Verdict& v) {
  twon_instance(tag(gi, m), m.emb, v);
  for (const Edge& e : m.emb.edges)
    twon_instance(tag(gi, m, e), delete_edge(m, e).emb, v);
}

// --- iff: recolorability biconditional plus census identities -------------

void suite_iff(int gi, const Mpg& m, const SuiteConfig&, Verdict& v) {
  for (const Edge& e : m.emb.edges) {
    IffReport r = four_color_iff(m, e);
    tally(v, r.agree);
    if (!r.agree) example(v, tag(gi, m, e) + ": biconditional broke");

    FamilyCensus c = family_census(delete_edge(m, e));
    bool families = c.rt0r > 0 && c.gt2g > 0;
    tally(v, families);
    if (!families) example(v, tag(gi, m, e) + ": base family died");
    bool census_ok =
        c.kinds[0] + c.kinds[1] + c.kinds[2] + c.kinds[3] == c.rgb_total &&
        c.rt0r_orb == c.rgb_total && c.bt4b_orb == c.kinds[0] &&
        c.gt2g_orb == c.kinds[1] + c.kinds[2] + c.kinds[3] &&
        c.gt2g_orb_by[0] == c.kinds[1] && c.gt2g_orb_by[1] == c.kinds[1] &&
        c.gt2g_orb_by[2] == c.kinds[2] && c.gt2g_orb_by[3] == c.kinds[2] &&
        c.gt2g_orb_by[4] == c.kinds[3] && c.gt2g_orb_by[5] == c.kinds[3];
    tally(v, census_ok);
    if (!census_ok) example(v, tag(gi, m, e) + ": census identity broke");
    v.stats["splits"] += 1;
  }
}

// --- necessary: clause telemetry and the one-odd-cycle floor ---------------

void suite_necessary(int gi, const Mpg& m, const SuiteConfig& cfg,
                     Verdict& v) {
  // red monos of the closed graph, each with its odd cycle count
  std::vector<std::pair<std::vector<char>, int>> monos;
  for (const MonoTiling& mono : enumerate_mono_tilings(m.emb, kRed)) {
    std::vector<Edge> members;
    for (int id : mono.edges()) members.push_back(m.emb.edge(id));
    monos.emplace_back(mono.member,
                       odd_cycle_stats(m.n(), members, cfg.cap).oc);
  }

  for (const Edge& e : m.emb.edges) {
    NecessaryReport r = check_necessary(m, e);
    tally(v, !r.a);
    if (r.a) example(v, tag(gi, m, e) + ": all four clauses held");
    tally(v, r.colorable);
    if (!r.colorable) example(v, tag(gi, m, e) + ": not colorable");
    tally(v, r.d_vacuous == (r.bt4b == 0));
    if (r.d && !r.d_vacuous) ++v.stats["forced_even_splits"];

    // some tiling of the closed graph takes e without any odd cycle
    int eid = m.emb.edge_id_checked(e.u, e.v);
    int best = -1;
    for (const auto& [member, oc] : monos)
      if (member[eid] && (best < 0 || oc < best)) best = oc;
    tally(v, best == 0);
    if (best != 0)
      example(v, tag(gi, m, e) + ": odd cycle floor " + std::to_string(best));

    // coexisting pole-to-pole chains of distinct colors are all even
    SemiMpg q = delete_edge(m, e);
    for (const RgbTiling& t : enumerate_rgb_tilings(q.emb)) {
      std::array<std::optional<Chain>, 3> by_color;
      for (int color : kColors)
        by_color[color - 1] = chain(q.emb, t, color, e.u, e.v);
      for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
          if (!by_color[i] || !by_color[j]) continue;
          ++v.stats["coexisting_pairs"];
          bool ok = by_color[i]->even() && by_color[j]->even();
          tally(v, ok);
          if (!ok) example(v, tag(gi, m, e) + ": odd coexisting chain");
        }
    }
  }
}

// --- sufficient: predicates stay false, boundary surgeries behave ----------

void suite_sufficient(int gi, const Mpg& m, const SuiteConfig&, Verdict& v) {
  long flips = 0, adjacent = 0;
  for (const Edge& e : m.emb.edges) {
    SemiMpg q = delete_edge(m, e);
    try {
      SufficientReport s = check_sufficient(m, e);
      tally(v, !s.i && !s.ii && !s.ii_prime);
      tally(v, s.ii == s.ii_prime);
    } catch (const Error& err) {
      tally(v, false);
      example(v, tag(gi, m, e) + ": " + err.what());
    }

    // one-color tilings swap into two-color ones and back
    for (const RgbTiling& t : enumerate_rgb_tilings(q.emb)) {
      DiamondType ty = classify_diamond(q, t);
      if (ty.kind != 'A') continue;
      try {
        RegionSwap rs = typeA_to_typeB(q, t);
        int boundary = ty.colors[0];
        int cut = boundary == kRed ? kGreen : kRed;
        int other = kRed + kGreen + kBlue - boundary - cut;
        RgbTiling undo = rs.result;
        for (int id : rs.region) {
          if (undo[id] == boundary) undo[id] = other;
          else if (undo[id] == other) undo[id] = boundary;
        }
        bool ok = is_rgb_tiling(q.emb, rs.result) &&
                  classify_diamond(q, rs.result).kind == 'B' && undo == t;
        tally(v, ok);
        if (!ok) example(v, tag(gi, m, e) + ": region swap broke");
      } catch (const Error& err) {
        if (err.code != Err::NoRedChain) {
          tally(v, false);
          example(v, tag(gi, m, e) + ": " + err.what());
        } else {
          ++v.vacuous;  // no cut chain, swap out of reach
        }
      }
    }

    // diagonal flip: one neighbor triangulation per edge unless the apexes
    // already touch; every produced neighbor stays colorable
    try {
      Mpg flipped = apex_flip(q);
      ++flips;
      bool ok = flipped.emb.m() == m.emb.m() &&
                !enumerate_vertex_colorings(flipped.emb.graph()).empty();
      tally(v, ok);
      if (!ok) example(v, tag(gi, m, e) + ": flip neighbor misbehaved");
    } catch (const Error& err) {
      if (err.code != Err::NSAdjacent) {
        tally(v, false);
        example(v, tag(gi, m, e) + ": " + err.what());
      } else {
        ++adjacent;
        Diamond d = diamond_of(m, e);
        tally(v, m.emb.adjacent(d.N, d.S));
      }
    }
  }
  tally(v, flips + adjacent == m.emb.m());
  v.stats["flip_neighbors"] += flips;
  v.stats["adjacent_apexes"] += adjacent;
}

// --- tangle: exclusivity and double-switch telemetry -----------------------

void suite_tangle(int gi, const Mpg& m, const SuiteConfig&, Verdict& v) {
  SimpleGraph g = m.emb.graph();
  for (int v0 = 0; v0 < m.n(); ++v0) {
    if (m.emb.degree(v0) != 5) continue;
    for (const VertexColoring& c : hole_colorings(m, v0)) {
      Deg5Report rep = analyze_deg5(m, v0, c);
      if (!rep.four_around) {
        ++v.vacuous;
        continue;
      }
      tally(v, rep.exclusive_red);
      tally(v, rep.exclusive_green);
      if (!rep.exclusive_red || !rep.exclusive_green)
        example(v, tag(gi, m) + ": exclusivity broke at vertex " +
                       std::to_string(v0));
      if (!(rep.has_r13 && rep.has_g14)) continue;
      ++v.stats["double_switch_instances"];
      TanglingReport tr = check_tangling(m, v0, c);
      bool coincide = tr.completion_rg == !tr.b_created &&
                      tr.completion_gr == !tr.b_sym_created;
      tally(v, coincide);
      if (!coincide)
        example(v, tag(gi, m) + ": tangling and completion disagreed");
      v.stats["tangles"] += tr.tangles + tr.tangles_sym;
      if (tr.completion_rg || tr.completion_gr) {
        tally(v, !tr.completed.empty() && is_proper_coloring(g, tr.completed));
      } else {
        ++v.stats["stuck_holes"];
      }
    }
  }
}

// --- hunt: refutations of the forced-even sufficiency ----------------------

void suite_hunt(int gi, const Mpg& m, const SuiteConfig&, Verdict& v) {
  std::array<Mpg, 1> one{m};
  for (const HuntHit& h : hunt_counterexamples(one)) {
    ++v.stats["hits"];
    bool verified = h.red_e_colorings > 0 && !check_sufficient(m, h.e).i;
    tally(v, verified);
    example(v, tag(gi, m, h.e) + ": forced even chains yet " +
                   std::to_string(h.red_e_colorings) +
                   " colorings take the edge red");
  }
}

void hunt_epilogue(const Corpus& corpus, Verdict& v) {
  bool expect = std::any_of(corpus.graphs.begin(), corpus.graphs.end(),
                            [](const Mpg& m) { return m.n() >= 6; });
  if (!expect) {
    ++v.vacuous;
    return;
  }
  tally(v, v.stats["hits"] >= 1);
  if (v.stats["hits"] < 1)
    example(v, "no refutation found on a corpus reaching 6 vertices");
}

// --- fourcycle: chordless nontrivial squares force colorability ------------

void suite_fourcycle(int gi, const Mpg& m, const SuiteConfig&, Verdict& v) {
  long found = 0;
  for (const FourCycle& fc : four_cycles(m)) {
    if (fc.cls != FourCycleClass::NontrivialChordless) continue;
    ++found;
  }
  if (found == 0) {
    ++v.vacuous;
    return;
  }
  v.stats["chordless_squares"] += found;
  ++v.stats["graphs_with_squares"];
  bool colorable = !enumerate_vertex_colorings(m.emb.graph()).empty();
  tally(v, colorable);
  if (!colorable) example(v, tag(gi, m) + ": square without a coloring");
}

struct Suite {
  Body body;
  Epilogue epilogue = nullptr;
};

const std::map<std::string, Suite>& registry() {
  static const std::map<std::string, Suite> suites{
      {"tait", {suite_tait}},
      {"tree", {suite_tree}},
      {"twoN", {suite_twon}},
      {"iff", {suite_iff}},
      {"necessary", {suite_necessary}},
      {"sufficient", {suite_sufficient}},
      {"tangle", {suite_tangle}},
      {"hunt", {suite_hunt, hunt_epilogue}},
      {"fourcycle", {suite_fourcycle}},
  };
  return suites;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> names;
  for (const auto& [name, s] : registry()) names.push_back(name);
  return names;
}

SuiteReport run_suite(const std::string& suite, const SuiteConfig& cfg) {
  auto it = registry().find(suite);
  if (it == registry().end())
    fail(Err::UnknownSuite, "no suite named '" + suite + "'");
  auto start = std::chrono::steady_clock::now();
  Corpus corpus = load_corpus(cfg);

  std::vector<Verdict> slots(corpus.graphs.size());
  std::atomic<size_t> cursor{0};
  auto worker = [&] {
    for (;;) {
      size_t i = cursor.fetch_add(1);
      if (i >= corpus.graphs.size()) return;
      try {
        it->second.body(static_cast<int>(i), corpus.graphs[i], cfg, slots[i]);
      } catch (const std::exception& ex) {
        tally(slots[i], false);
        example(slots[i], tag(static_cast<int>(i), corpus.graphs[i]) + ": " +
                              ex.what());
      }
    }
  };
  int jobs = std::max(1, cfg.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  // merge in graph order so reports never depend on scheduling
  Verdict total;
  for (const Verdict& s : slots) {
    total.checks += s.checks;
    total.passed += s.passed;
    total.failed += s.failed;
    total.vacuous += s.vacuous;
    for (const auto& [k, n] : s.stats) total.stats[k] += n;
    for (const std::string& ex : s.examples) example(total, ex);
  }
  if (it->second.epilogue) it->second.epilogue(corpus, total);

  SuiteReport r;
  r.suite = suite;
  r.corpus = corpus.desc + " (" + std::to_string(corpus.graphs.size()) +
             " graphs)";
  r.checks = total.checks;
  r.passed = total.passed;
  r.failed = total.failed;
  r.vacuous = total.vacuous;
  for (const auto& [k, n] : total.stats) r.stats.emplace_back(k, n);
  r.counterexamples = std::move(total.examples);
  r.wall_ms = std::chrono::duration<double, std::milli>(
                  std::chrono::steady_clock::now() - start)
                  .count();
  return r;
}

std::string report_json(const SuiteReport& r) {
  nlohmann::json j;
  j["suite"] = r.suite;
  j["corpus"] = r.corpus;
  j["checks"] = r.checks;
  j["passed"] = r.passed;
  j["failed"] = r.failed;
  j["vacuous"] = r.vacuous;
  j["stats"] = nlohmann::json::object();
  for (const auto& [k, n] : r.stats) j["stats"][k] = n;
  j["counterexamples"] = r.counterexamples;
  j["wall_ms"] = r.wall_ms;
  j["ok"] = r.ok();
  return j.dump();
}

}  // namespace kempelab
