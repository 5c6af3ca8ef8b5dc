#pragma once

#include <kthresh/graph.hpp>

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace kthresh
{
    auto encode_graph6(const Graph & g) -> std::string;
    auto decode_graph6(std::string_view text) -> Graph;

    /// "b"/"w" for two colours, digits otherwise.
    auto encode_colors(const Coloring & colors, int k = 2) -> std::string;
    auto decode_colors(std::string_view text, int n) -> Coloring;

    /// "<graph6>" or "<graph6> <colorstring>".
    auto format_colored(const ColoredGraph & g, int k = 2) -> std::string;
    auto parse_graph_line(std::string_view line) -> ColoredGraph;

    /// One graph per line, blank lines and '#' comments skipped. Uncoloured
    /// lines come back with an empty colour vector.
    auto read_graph_lines(std::istream & in) -> std::vector<ColoredGraph>;
}
