#include "kempelab/io.hpp"

#include <sstream>

#include "json.hpp"

namespace kempelab {
namespace {

using nlohmann::json;

json graph_json(const Mpg& m) {
  json j;
  j["n"] = m.n();
  j["rotations"] = m.emb.rot;
  return j;
}

std::string graph_dot(const Mpg& m) {
  std::ostringstream os;
  os << "graph {\n";
  for (const Edge& e : m.emb.edges)
    os << "  " << e.u << " -- " << e.v << ";\n";
  os << "}\n";
  return os.str();
}

std::string tiling_dot(const Embedding& e, const RgbTiling& t) {
  static const char* kColorNames[] = {"", "red", "green", "blue"};
  std::ostringstream os;
  os << "graph {\n";
  for (int id = 0; id < e.m(); ++id)
    os << "  " << e.edge(id).u << " -- " << e.edge(id).v << " [color="
       << kColorNames[t[id]] << "];\n";
  os << "}\n";
  return os.str();
}

std::string block_graph_dot(const Embedding& e, const BlockGraph& bg) {
  std::ostringstream os;
  os << "graph {\n  node [shape=box];\n";
  for (int b = 0; b < bg.block_count(); ++b) {
    os << "  b" << b << " [label=\"";
    for (size_t i = 0; i < bg.blocks[b].size(); ++i)
      os << (i ? " " : "") << bg.blocks[b][i];
    os << "\"";
    if (b < static_cast<int>(bg.block_marks.size()) && bg.block_marks[b])
      os << " peripheries=2";
    os << "];\n";
  }
  for (int l = 0; l < bg.link_count(); ++l) {
    os << "  b" << bg.links[l][0] << " -- b" << bg.links[l][1] << " [label=\"";
    for (size_t i = 0; i < bg.canals[l].walk.size(); ++i) {
      const Edge& ed = e.edge(bg.canals[l].walk[i]);
      os << (i ? " " : "") << ed.u << "-" << ed.v;
    }
    os << "\"";
    if (l < static_cast<int>(bg.link_marks.size()) && bg.link_marks[l])
      os << " style=bold";
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

json edges_json(const Embedding& e) {
  json out = json::array();
  for (const Edge& ed : e.edges) out.push_back({ed.u, ed.v});
  return out;
}

}  // namespace

Format parse_format(const std::string& name) {
  if (name == "json") return Format::Json;
  if (name == "dot") return Format::Dot;
  if (name == "planar_code") return Format::PlanarCode;
  fail(Err::UnsupportedFormat, "unknown format '" + name + "'");
}

std::string export_graph(const Mpg& m, Format f) {
  switch (f) {
    case Format::Json: return graph_json(m).dump();
    case Format::Dot: return graph_dot(m);
    case Format::PlanarCode: {
      auto rec = planar_code_record(m);
      return std::string(rec.begin(), rec.end());
    }
  }
  fail(Err::UnsupportedFormat, "bad format");
}

std::string export_tiling(const Embedding& e, const RgbTiling& t, Format f) {
  if (t.size() != static_cast<size_t>(e.m()))
    fail(Err::PreconditionUnmet, "tiling size does not match the embedding");
  switch (f) {
    case Format::Json: {
      json j;
      j["edges"] = edges_json(e);
      j["colors"] = t;
      return j.dump();
    }
    case Format::Dot: return tiling_dot(e, t);
    case Format::PlanarCode:
      fail(Err::UnsupportedFormat, "a tiling has no planar_code encoding");
  }
  fail(Err::UnsupportedFormat, "bad format");
}

std::string export_block_graph(const Embedding& e, const BlockGraph& bg,
                               Format f) {
  switch (f) {
    case Format::Json: {
      json j;
      j["color"] = bg.color;
      j["blocks"] = bg.blocks;
      j["links"] = json::array();
      for (int l = 0; l < bg.link_count(); ++l)
        j["links"].push_back({{"between", bg.links[l]},
                              {"walk", bg.canals[l].walk},
                              {"ring", bg.canals[l].ring}});
      return j.dump();
    }
    case Format::Dot: return block_graph_dot(e, bg);
    case Format::PlanarCode:
      fail(Err::UnsupportedFormat, "a block graph has no planar_code encoding");
  }
  fail(Err::UnsupportedFormat, "bad format");
}

Mpg read_graph_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.contains("rotations"))
    fail(Err::UnsupportedFormat, "graph json needs a rotations field");
  return Mpg::from_rotations(
      j["rotations"].get<std::vector<std::vector<int>>>());
}

RgbTiling read_tiling_json(const Embedding& e, const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.contains("colors"))
    fail(Err::UnsupportedFormat, "tiling json needs a colors field");
  RgbTiling t = j["colors"].get<RgbTiling>();
  if (t.size() != static_cast<size_t>(e.m()))
    fail(Err::UnsupportedFormat, "tiling json does not fit the embedding");
  if (j.contains("edges")) {
    auto listed = j["edges"].get<std::vector<std::array<int, 2>>>();
    if (listed.size() != t.size())
      fail(Err::UnsupportedFormat, "tiling json does not fit the embedding");
    for (int id = 0; id < e.m(); ++id)
      if (Edge(listed[id][0], listed[id][1]) != e.edge(id))
        fail(Err::UnsupportedFormat, "tiling json edge order mismatch");
  }
  for (int c : t)
    if (c < kRed || c > kBlue)
      fail(Err::UnsupportedFormat, "tiling json color out of range");
  return t;
}

}  // namespace kempelab
