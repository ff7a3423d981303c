#pragma once

#include <string>
#include <string_view>

#include "treepack/graph.hpp"

namespace treepack {

/// Edge-list text: "n m", then m lines "u v". '#' starts a comment that runs to
/// the end of the line. The text must end with a newline.
Graph parse_edge_list(std::string_view text);
Graph read_edge_list_file(const std::string& path);

std::string format_edge_list(const Graph& g);

/// One vertex per whitespace-separated token; '#' comments allowed.
VertexSet parse_vertex_set(std::string_view text, int n);

}  // namespace treepack
