#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "swk/graph.hpp"

namespace swk {

/**
 * Line-oriented graph text format:
 *
 *     # comment
 *     graph k4
 *     vertex 1
 *     edge e12 1 2
 *
 * Declarations may appear in any order as long as vertices precede the edges
 * that reference them. Errors are reported as ParseError with 1-based
 * line/column positions.
 */
Graph parse_graph(std::string_view text);
Graph parse_graph(std::istream& in);
Graph parse_graph_file(const std::filesystem::path& path);

/// Inverse of parse_graph (round-trips ids, order and name).
std::string format_graph(const Graph& g);

} // namespace swk
