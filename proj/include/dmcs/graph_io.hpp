#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "dmcs/graph.hpp"

namespace dmcs {

/// Reads a whitespace-separated edge list: `u v [weight]` per line, lines
/// starting with '#' ignored. External ids are remapped to dense internal
/// ids in ascending external order. Without `weighted`, a third column is
/// validated but every edge gets unit weight.
Graph load_edge_list(std::istream& in, bool weighted = false);
Graph load_edge_list_file(const std::string& path, bool weighted = false);

/// Writes `u v` (or `u v w` for weighted graphs) per edge using external ids.
void write_edge_list(std::ostream& out, const Graph& g);

/// One community per line, space-separated external ids.
using CommunityList = std::vector<std::vector<ExternalId>>;

CommunityList load_communities(std::istream& in);
CommunityList load_communities_file(const std::string& path);
void write_communities(std::ostream& out, const CommunityList& communities);

}  // namespace dmcs
