#pragma once

#include <string>

#include "kempelab/blockgraph.hpp"
#include "kempelab/embed.hpp"
#include "kempelab/tiling.hpp"

namespace kempelab {

enum class Format { Json, Dot, PlanarCode };

// Accepts "json", "dot", "planar_code"; anything else is UnsupportedFormat.
Format parse_format(const std::string& name);

// Writers.  Combinations without a sensible encoding (a tiling or block graph
// as planar_code) raise UnsupportedFormat.
std::string export_graph(const Mpg& m, Format f);
std::string export_tiling(const Embedding& e, const RgbTiling& t, Format f);
std::string export_block_graph(const Embedding& e, const BlockGraph& bg,
                               Format f);

// Readers for the formats that have one; json only.  The tiling reader checks
// the payload against the embedding it is loaded into.
Mpg read_graph_json(const std::string& text);
RgbTiling read_tiling_json(const Embedding& e, const std::string& text);

}  // namespace kempelab
