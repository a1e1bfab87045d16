// Command line frontend over the library: corpus generation and conversion,
// tiling and canal inspection, relation queries, split analyses, and the
// verification suites.  Output is JSON-lines on stdout unless a format says
// otherwise; exit codes are 0 for success, 1 for a failed verification, 2 for
// usage problems including malformed inputs.
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "kempelab/blockgraph.hpp"
#include "kempelab/diamond.hpp"
#include "kempelab/harness.hpp"
#include "kempelab/io.hpp"
#include "kempelab/kempe.hpp"
#include "kempelab/relations.hpp"
#include "kempelab/tiling.hpp"

using namespace kempelab;
using nlohmann::json;

namespace {

std::vector<Mpg> load_graphs(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Err::CorpusUnavailable, "cannot open " + path);
  if (in.peek() == '>') return read_planar_code(in);
  std::vector<Mpg> graphs;
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) graphs.push_back(read_graph_json(line));
  if (graphs.empty()) fail(Err::CorpusUnavailable, path + " holds no graphs");
  return graphs;
}

const Mpg& pick(const std::vector<Mpg>& graphs, int index) {
  if (index < 0 || index >= static_cast<int>(graphs.size()))
    fail(Err::PreconditionUnmet,
         "graph index " + std::to_string(index) + " outside 0.." +
             std::to_string(graphs.size() - 1));
  return graphs[index];
}

std::vector<Edge> as_edges(const std::vector<int>& flat) {
  if (flat.size() % 2 != 0)
    fail(Err::PreconditionUnmet, "edge endpoints come in pairs");
  std::vector<Edge> edges;
  for (size_t i = 0; i < flat.size(); i += 2)
    edges.emplace_back(flat[i], flat[i + 1]);
  return edges;
}

// The working surface of most subcommands: a graph, optionally split.
Embedding select_embedding(const Mpg& m, const std::vector<int>& del) {
  if (del.empty()) return m.emb;
  return delete_edges(m, as_edges(del)).emb;
}

const RgbTiling& pick_tiling(const std::vector<RgbTiling>& ts, int index) {
  if (index < 0 || index >= static_cast<int>(ts.size()))
    fail(Err::PreconditionUnmet,
         "tiling index " + std::to_string(index) + " outside 0.." +
             std::to_string(ts.size() - 1));
  return ts[index];
}

json edge_list_json(const Embedding& e, const std::vector<int>& ids) {
  json out = json::array();
  for (int id : ids) out.push_back({e.edge(id).u, e.edge(id).v});
  return out;
}

int parse_color(const std::string& s) {
  if (s == "red" || s == "r") return kRed;
  if (s == "green" || s == "g") return kGreen;
  if (s == "blue" || s == "b") return kBlue;
  fail(Err::PreconditionUnmet, "colors are red, green or blue");
}

std::ostream& sink(std::ofstream& file, const std::string& path) {
  if (path.empty()) return std::cout;
  file.open(path, std::ios::binary);
  if (!file) fail(Err::PreconditionUnmet, "cannot write " + path);
  return file;
}

int run_gen(int n, const std::string& format, const std::string& out) {
  std::vector<Mpg> graphs = generate_all(n, std::max(n, kDefaultGenCap));
  std::ofstream file;
  std::ostream& os = sink(file, out);
  Format f = parse_format(format);
  if (f == Format::PlanarCode) {
    write_planar_code(os, graphs);
  } else {
    for (const Mpg& m : graphs) {
      os << export_graph(m, f);
      if (f == Format::Json) os << "\n";
    }
  }
  std::cerr << json{{"n", n}, {"generated", graphs.size()}}.dump() << "\n";
  return 0;
}

int run_tilings(const Embedding& emb, const std::string& format,
                bool count_only) {
  auto tilings = enumerate_rgb_tilings(emb);
  if (count_only) {
    std::cout << tilings.size() << "\n";
    return 0;
  }
  Format f = parse_format(format);
  for (const RgbTiling& t : tilings) {
    std::cout << export_tiling(emb, t, f);
    if (f == Format::Json) std::cout << "\n";
  }
  return 0;
}

int run_kempe(const Embedding& emb, int tiling_index,
              const std::string& avoid, const std::string& chain_color,
              int from, int to) {
  auto tilings = enumerate_rgb_tilings(emb);
  const RgbTiling& t = pick_tiling(tilings, tiling_index);
  if (!avoid.empty()) {
    for (const CanalObject& c : canal_objects(emb, t, parse_color(avoid))) {
      json j{{"avoided", c.avoided},
             {"ring", c.ring},
             {"walk", edge_list_json(emb, c.walk)},
             {"faces", c.faces},
             {"left_bank", edge_list_json(emb, c.left_bank)},
             {"right_bank", edge_list_json(emb, c.right_bank)}};
      std::cout << j.dump() << "\n";
    }
  }
  if (!chain_color.empty()) {
    auto c = chain(emb, t, parse_color(chain_color), from, to);
    json j{{"found", c.has_value()}};
    if (c) {
      j["color"] = c->color;
      j["path"] = c->path;
      j["length"] = c->length();
      j["even"] = c->even();
    }
    std::cout << j.dump() << "\n";
  }
  return 0;
}

int run_blockgraph(const Embedding& emb, int tiling_index,
                   const std::string& color, const std::string& format) {
  auto tilings = enumerate_rgb_tilings(emb);
  const RgbTiling& t = pick_tiling(tilings, tiling_index);
  BlockGraph bg = build_block_graph(emb, t, parse_color(color));
  std::cout << export_block_graph(emb, bg, parse_format(format));
  if (parse_format(format) == Format::Json) std::cout << "\n";
  return 0;
}

int run_relations(const Embedding& emb, int tiling_index, bool orbit,
                  const std::vector<int>& omega, const std::string& side,
                  bool census, long cap) {
  auto tilings = enumerate_rgb_tilings(emb);
  if (orbit || !omega.empty()) {
    const RgbTiling& t = pick_tiling(tilings, tiling_index);
    if (orbit)
      for (const RgbTiling& s : synonym_orbit(emb, t))
        std::cout << json{{"colors", s}}.dump() << "\n";
    if (!omega.empty()) {
      Side s = Side::Outside;
      if (side == "inside") s = Side::Inside;
      else if (side != "outside")
        fail(Err::PreconditionUnmet, "side is inside or outside");
      Skeleton sk = skeleton(emb, t, omega, s);
      json pc = json::array();
      for (const auto& row : sk.pair_connected)
        pc.push_back({row[1] != 0, row[2] != 0, row[3] != 0});
      std::cout << json{{"omega", sk.omega},
                        {"boundary_colors", sk.boundary_colors},
                        {"pair_connected", pc}}
                       .dump()
                << "\n";
    }
  }
  if (census) {
    auto classes = congruence_census(emb, cap);
    for (size_t i = 0; i < classes.size(); ++i)
      std::cout << json{{"class", i},
                        {"size", classes[i].size()},
                        {"representative", classes[i][0]}}
                       .dump()
                << "\n";
  }
  return 0;
}

int run_diamond(const std::vector<Mpg>& graphs, const std::vector<int>& edge,
                bool classify, bool census, bool iff, bool necessary,
                bool sufficient, bool hunt) {
  if (hunt) {
    for (const HuntHit& h : hunt_counterexamples(graphs)) {
      json j{{"graph", h.graph},
             {"edge", {h.e.u, h.e.v}},
             {"bt4b", h.bt4b},
             {"extensions", h.extensions},
             {"red_e_colorings", h.red_e_colorings}};
      std::cout << j.dump() << "\n";
    }
    return 0;
  }
  std::vector<Edge> only = as_edges(edge);
  for (size_t gi = 0; gi < graphs.size(); ++gi) {
    const Mpg& m = graphs[gi];
    for (const Edge& e : m.emb.edges) {
      if (!only.empty() && e != only[0]) continue;
      json j{{"graph", gi}, {"n", m.n()}, {"edge", {e.u, e.v}}};
      if (classify || census) {
        FamilyCensus c = family_census(delete_edge(m, e));
        if (classify)
          j["kinds"] = {{"A", c.kinds[0]},
                        {"B", c.kinds[1]},
                        {"C", c.kinds[2]},
                        {"D", c.kinds[3]}};
        if (census)
          j["census"] = {{"rt0r", c.rt0r},       {"gt2g", c.gt2g},
                         {"gt2g_by", c.gt2g_by}, {"bt4b", c.bt4b},
                         {"rt0r_ext", c.rt0r_ext}, {"gt2g_ext", c.gt2g_ext},
                         {"bt4b_ext", c.bt4b_ext}, {"rt0r_orb", c.rt0r_orb},
                         {"gt2g_orb", c.gt2g_orb}, {"bt4b_orb", c.bt4b_orb},
                         {"rgb_total", c.rgb_total}};
      }
      if (iff) {
        IffReport r = four_color_iff(m, e);
        j["iff"] = {{"colorable", r.colorable},
                    {"gt_less", r.gt_less},
                    {"gt_slash", r.gt_slash},
                    {"agree", r.agree}};
      }
      if (necessary) {
        NecessaryReport r = check_necessary(m, e);
        j["necessary"] = {{"a", r.a},
                          {"b", r.b},
                          {"c", r.c},
                          {"d", r.d},
                          {"d_vacuous", r.d_vacuous},
                          {"colorable", r.colorable},
                          {"bt4b", r.bt4b}};
      }
      if (sufficient) {
        SufficientReport r = check_sufficient(m, e);
        j["sufficient"] = {{"i", r.i},
                           {"ii", r.ii},
                           {"ii_prime", r.ii_prime},
                           {"rt0r", r.rt0r},
                           {"gt2g", r.gt2g}};
      }
      std::cout << j.dump() << "\n";
    }
  }
  return 0;
}

int run_verify(const std::string& suite, const SuiteConfig& cfg) {
  SuiteReport r = run_suite(suite, cfg);
  std::cout << report_json(r) << "\n";
  std::cerr << r.suite << " over " << r.corpus << ": " << r.passed << "/"
            << r.checks << " checks passed, " << r.failed << " failed, "
            << r.vacuous << " vacuous\n";
  return r.ok() ? 0 : 1;
}

int run_export(const Mpg& m, const std::string& format,
               const std::string& out) {
  std::ofstream file;
  std::ostream& os = sink(file, out);
  os << export_graph(m, parse_format(format));
  if (parse_format(format) == Format::Json) os << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"RGB tiling and Kempe chain toolkit for planar triangulations"};
  app.require_subcommand(1);

  std::string in_path, out_path, format = "json";
  int index = 0, tiling_index = 0;
  std::vector<int> del;

  auto add_input = [&](CLI::App* cmd, bool with_split) {
    cmd->add_option("--in", in_path,
                    "planar_code stream or JSON-lines graph file")
        ->required();
    cmd->add_option("--index", index, "graph to pick from the input");
    if (with_split)
      cmd->add_option("--delete", del,
                      "endpoint pairs of edges to remove first");
  };

  auto* gen = app.add_subcommand("gen", "generate all triangulations of one order");
  int gen_n = 4;
  gen->add_option("--n", gen_n, "vertex count")->required();
  gen->add_option("--format", format, "planar_code, json or dot");
  gen->add_option("--out", out_path, "output file, stdout when absent");

  auto* tilings = app.add_subcommand("tilings", "enumerate RGB tilings");
  add_input(tilings, true);
  tilings->add_option("--format", format, "json or dot");
  bool count_only = false;
  tilings->add_flag("--count", count_only, "print only the number of tilings");

  auto* kempe = app.add_subcommand("kempe", "canal objects and chains of one tiling");
  add_input(kempe, true);
  kempe->add_option("--tiling", tiling_index, "tiling to inspect");
  std::string avoid, chain_color;
  int from = 0, to = 0;
  kempe->add_option("--avoid", avoid, "list canal objects avoiding this color");
  kempe->add_option("--chain", chain_color, "trace a chain of this color");
  kempe->add_option("--from", from, "chain start vertex");
  kempe->add_option("--to", to, "chain end vertex");

  auto* blockgraph = app.add_subcommand("blockgraph", "block graph of one tiling");
  add_input(blockgraph, true);
  blockgraph->add_option("--tiling", tiling_index, "tiling to inspect");
  std::string color = "red";
  blockgraph->add_option("--color", color, "block color");
  blockgraph->add_option("--format", format, "json or dot");

  auto* relations = app.add_subcommand("relations", "orbits, skeletons, congruence");
  add_input(relations, true);
  relations->add_option("--tiling", tiling_index, "tiling to inspect");
  bool orbit = false, census = false;
  std::vector<int> omega;
  std::string side = "outside";
  long cap = kDefaultStateCap;
  relations->add_flag("--orbit", orbit, "list the synonym orbit");
  relations->add_option("--skeleton", omega,
                        "cycle vertices for a skeleton query");
  relations->add_option("--side", side, "skeleton side: inside or outside");
  relations->add_flag("--census", census, "congruence classes of all tilings");
  relations->add_option("--cap", cap, "state cap for congruence search");

  auto* diamond = app.add_subcommand(
      "diamond", "per-edge split analyses over a corpus, JSON-lines");
  diamond->add_option("--in", in_path, "corpus file; generator when absent");
  int n_max = 0;
  diamond->add_option("--n-max", n_max, "generate 4..n when no corpus file");
  std::vector<int> edge;
  diamond->add_option("--edge", edge, "restrict to one edge (two endpoints)");
  bool d_classify = false, d_census = false, d_iff = false, d_nec = false,
       d_suf = false, d_hunt = false;
  diamond->add_flag("--classify", d_classify, "tiling counts by boundary kind");
  diamond->add_flag("--census", d_census, "boundary family census");
  diamond->add_flag("--iff", d_iff, "recolorability biconditional data");
  diamond->add_flag("--necessary", d_nec, "necessary clause evaluation");
  diamond->add_flag("--sufficient", d_suf, "sufficiency predicate evaluation");
  diamond->add_flag("--hunt", d_hunt, "scan for forced-even refutations only");

  auto* verify = app.add_subcommand("verify", "run one verification suite");
  std::string suite;
  SuiteConfig cfg;
  verify->add_option("--suite", suite, "one of: fourcycle hunt iff necessary sufficient tait tangle tree twoN")
      ->required();
  verify->add_option("--n-max", cfg.n_max, "generated corpus bound");
  verify->add_option("--corpus", cfg.corpus_file, "planar_code corpus file");
  verify->add_option("--jobs", cfg.jobs, "worker threads");
  verify->add_option("--cap", cfg.cap, "cycle and state space cap");

  auto* exportc = app.add_subcommand("export", "convert one graph");
  add_input(exportc, false);
  exportc->add_option("--format", format, "json, dot or planar_code");
  exportc->add_option("--out", out_path, "output file, stdout when absent");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gen->parsed()) return run_gen(gen_n, format, out_path);
    if (verify->parsed()) return run_verify(suite, cfg);
    if (diamond->parsed()) {
      std::vector<Mpg> graphs;
      if (!in_path.empty()) {
        graphs = load_graphs(in_path);
      } else if (n_max >= 4) {
        for (int n = 4; n <= n_max; ++n)
          for (Mpg& m : generate_all(n, std::max(n, kDefaultGenCap)))
            graphs.push_back(std::move(m));
      } else {
        fail(Err::PreconditionUnmet, "need --in or --n-max");
      }
      return run_diamond(graphs, edge, d_classify, d_census, d_iff, d_nec,
                         d_suf, d_hunt);
    }

    std::vector<Mpg> graphs = load_graphs(in_path);
    const Mpg& m = pick(graphs, index);
    if (exportc->parsed()) return run_export(m, format, out_path);

    Embedding emb = select_embedding(m, del);
    if (tilings->parsed()) return run_tilings(emb, format, count_only);
    if (kempe->parsed())
      return run_kempe(emb, tiling_index, avoid, chain_color, from, to);
    if (blockgraph->parsed())
      return run_blockgraph(emb, tiling_index, color, format);
    if (relations->parsed())
      return run_relations(emb, tiling_index, orbit, omega, side, census, cap);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
