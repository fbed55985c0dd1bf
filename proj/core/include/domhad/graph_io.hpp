#pragma once

#include <string>
#include <string_view>

#include "domhad/graph.hpp"

namespace domhad {

/// Largest n representable by the 4-byte graph6 header ('~' + 18 bits).
inline constexpr int kGraph6LongFormMax = 258047;

/// Decode one graph6 line. Accepts an optional ">>graph6<<" prefix and trailing
/// whitespace. The 8-byte header form is rejected. Throws ParseError with the
/// byte offset of the problem; `max_vertices` defaults to the VertexSet capacity.
Graph parse_graph6(std::string_view text, int max_vertices = kMaxVertices);

/// Encode g as graph6 (no header, no newline).
std::string emit_graph6(const Graph& g);

/// Edge-list text: first non-comment line "n m", then m lines "u v".
/// Lines starting with '#' are comments.
Graph parse_edge_list(std::string_view text);
std::string emit_edge_list(const Graph& g);

/// Graphviz "graph G { ... }" with one line per vertex and edge.
std::string emit_dot(const Graph& g);

enum class GraphFormat { kAuto, kGraph6, kEdgeList };

/// Graph6 when the first non-space byte is in the printable graph6 range
/// ('?'..'~' or the '>>graph6<<' header); edge list otherwise.
GraphFormat detect_format(std::string_view text);
Graph parse_graph(std::string_view text, GraphFormat format = GraphFormat::kAuto);

}  // namespace domhad
