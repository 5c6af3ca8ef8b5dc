#include <kthresh/graph6.hpp>

#include <algorithm>
#include <istream>
#include <stdexcept>

namespace kthresh
{
    auto encode_graph6(const Graph & g) -> std::string
    {
        int n = g.size();
        std::string out;
        if (n <= 62)
            out.push_back(char(63 + n));
        else {
            out.push_back(char(126));
            out.push_back(char(63 + ((n >> 12) & 63)));
            out.push_back(char(63 + ((n >> 6) & 63)));
            out.push_back(char(63 + (n & 63)));
        }

        int chunk = 0, used = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i) {
                chunk = (chunk << 1) | (g.adjacent(i, j) ? 1 : 0);
                if (++used == 6) {
                    out.push_back(char(63 + chunk));
                    chunk = used = 0;
                }
            }
        if (used > 0)
            out.push_back(char(63 + (chunk << (6 - used))));
        return out;
    }

    auto decode_graph6(std::string_view text) -> Graph
    {
        std::size_t pos = 0;
        if (text.starts_with(">>graph6<<"))
            pos = 10;

        auto byte_at = [&](std::size_t p) -> int {
            if (p >= text.size())
                throw ParseError("graph6 text ends early", p);
            int c = static_cast<unsigned char>(text[p]);
            if (c < 63 || c > 126)
                throw ParseError("byte outside graph6 range", p);
            return c - 63;
        };

        int n = byte_at(pos);
        if (n == 63) {
            if (pos + 1 < text.size() && text[pos + 1] == '~')
                throw ParseError("graphs this large are not supported", pos + 1);
            n = (byte_at(pos + 1) << 12) | (byte_at(pos + 2) << 6) | byte_at(pos + 3);
            if (n <= 62)
                throw ParseError("extended header used for a small graph", pos + 1);
            pos += 4;
        }
        else
            pos += 1;

        if (n == 0)
            throw ParseError("graph has no vertices", pos - 1);
        if (n > max_vertices)
            throw ParseError("graph has more than 64 vertices", pos - 1);

        for (std::size_t p = pos; p < text.size(); ++p)
            byte_at(p);

        std::size_t bit_count = std::size_t(n) * (n - 1) / 2;
        std::size_t byte_count = (bit_count + 5) / 6;
        if (text.size() - pos != byte_count)
            throw ParseError(
                "expected " + std::to_string(byte_count) + " adjacency bytes, found " + std::to_string(text.size() - pos),
                std::min(text.size(), pos + byte_count));

        Graph g(n);
        std::size_t k = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i, ++k) {
                int byte = byte_at(pos + k / 6);
                if ((byte >> (5 - k % 6)) & 1)
                    g.add_edge(i, j);
            }
        if (bit_count % 6 != 0) {
            int byte = byte_at(pos + byte_count - 1);
            int pad = int(6 - bit_count % 6);
            if (byte & ((1 << pad) - 1))
                throw ParseError("nonzero padding bits", pos + byte_count - 1);
        }
        return g;
    }

    auto encode_colors(const Coloring & colors, int k) -> std::string
    {
        std::string out;
        for (int c : colors) {
            if (c < 0 || c >= std::max(k, 2) || c > 9)
                throw std::domain_error("colour " + std::to_string(c) + " outside the colour alphabet");
            if (k <= 2)
                out.push_back(c == 0 ? 'b' : 'w');
            else
                out.push_back(char('0' + c));
        }
        return out;
    }

    auto decode_colors(std::string_view text, int n) -> Coloring
    {
        if (int(text.size()) != n)
            throw ParseError("colour string length " + std::to_string(text.size()) + " does not match "
                    + std::to_string(n) + " vertices",
                std::min<std::size_t>(text.size(), n));
        Coloring out;
        for (std::size_t i = 0; i < text.size(); ++i) {
            char c = text[i];
            if (c == 'b')
                out.push_back(0);
            else if (c == 'w')
                out.push_back(1);
            else if (c >= '0' && c <= '9')
                out.push_back(c - '0');
            else
                throw ParseError(std::string("bad colour character '") + c + "'", i);
        }
        return out;
    }

    auto format_colored(const ColoredGraph & g, int k) -> std::string
    {
        auto out = encode_graph6(g.graph);
        if (! g.colors.empty())
            out += " " + encode_colors(g.colors, std::max(k, *std::max_element(g.colors.begin(), g.colors.end()) + 1));
        return out;
    }

    auto parse_graph_line(std::string_view line) -> ColoredGraph
    {
        while (! line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
            line.remove_suffix(1);
        std::size_t start = 0;
        while (start < line.size() && (line[start] == ' ' || line[start] == '\t'))
            ++start;
        auto sep = line.find_first_of(" \t", start);
        auto g6 = line.substr(start, sep == std::string_view::npos ? std::string_view::npos : sep - start);

        ColoredGraph out{decode_graph6(g6), {}};
        if (sep != std::string_view::npos) {
            auto rest = sep;
            while (rest < line.size() && (line[rest] == ' ' || line[rest] == '\t'))
                ++rest;
            try {
                out.colors = decode_colors(line.substr(rest), out.graph.size());
            }
            catch (const ParseError & e) {
                throw ParseError("bad colour string", rest + e.offset());
            }
        }
        return out;
    }

    auto read_graph_lines(std::istream & in) -> std::vector<ColoredGraph>
    {
        std::vector<ColoredGraph> out;
        std::string line;
        while (std::getline(in, line)) {
            auto first = line.find_first_not_of(" \t\r");
            if (first == std::string::npos || line[first] == '#')
                continue;
            out.push_back(parse_graph_line(line));
        }
        return out;
    }
}
