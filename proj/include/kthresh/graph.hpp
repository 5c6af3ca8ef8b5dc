#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace kthresh
{
    inline constexpr int max_vertices = 64;

    /// Thrown when an input exceeds a configured size or search budget.
    class CapacityError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    /// Malformed text input; offset is the byte position of the first bad byte.
    class ParseError : public std::runtime_error
    {
    public:
        ParseError(const std::string & what, std::size_t offset) :
            std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"),
            _offset(offset)
        {
        }

        auto offset() const -> std::size_t { return _offset; }

    private:
        std::size_t _offset;
    };

    /// A subset of {0..63}, stored as one machine word.
    class VertexSet
    {
    public:
        constexpr VertexSet() = default;
        constexpr explicit VertexSet(std::uint64_t bits) : _bits(bits) {}

        static constexpr auto prefix(int n) -> VertexSet
        {
            return VertexSet{n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1};
        }

        static constexpr auto singleton(int v) -> VertexSet { return VertexSet{std::uint64_t{1} << v}; }

        static auto of(std::initializer_list<int> vs) -> VertexSet
        {
            VertexSet s;
            for (int v : vs)
                s.insert(v);
            return s;
        }

        constexpr auto bits() const -> std::uint64_t { return _bits; }
        constexpr auto contains(int v) const -> bool { return (_bits >> v) & 1; }
        constexpr auto size() const -> int { return std::popcount(_bits); }
        constexpr auto empty() const -> bool { return _bits == 0; }
        constexpr auto first() const -> int { return std::countr_zero(_bits); }

        constexpr auto insert(int v) -> void { _bits |= std::uint64_t{1} << v; }
        constexpr auto erase(int v) -> void { _bits &= ~(std::uint64_t{1} << v); }

        constexpr auto operator&(VertexSet o) const -> VertexSet { return VertexSet{_bits & o._bits}; }
        constexpr auto operator|(VertexSet o) const -> VertexSet { return VertexSet{_bits | o._bits}; }
        constexpr auto operator^(VertexSet o) const -> VertexSet { return VertexSet{_bits ^ o._bits}; }
        constexpr auto operator-(VertexSet o) const -> VertexSet { return VertexSet{_bits & ~o._bits}; }
        constexpr auto operator==(const VertexSet &) const -> bool = default;
        constexpr auto subset_of(VertexSet o) const -> bool { return (_bits & ~o._bits) == 0; }

        /// Members in ascending order.
        auto members() const -> std::vector<int>
        {
            std::vector<int> out;
            for (auto b = _bits; b; b &= b - 1)
                out.push_back(std::countr_zero(b));
            return out;
        }

        class iterator
        {
        public:
            constexpr explicit iterator(std::uint64_t b) : _b(b) {}
            constexpr auto operator*() const -> int { return std::countr_zero(_b); }
            constexpr auto operator++() -> iterator &
            {
                _b &= _b - 1;
                return *this;
            }
            constexpr auto operator!=(const iterator & o) const -> bool { return _b != o._b; }

        private:
            std::uint64_t _b;
        };

        constexpr auto begin() const -> iterator { return iterator{_bits}; }
        constexpr auto end() const -> iterator { return iterator{0}; }

    private:
        std::uint64_t _bits = 0;
    };

    /// Undirected simple graph on 1..64 vertices, rows are open neighbourhoods.
    class Graph
    {
    public:
        explicit Graph(int n = 1);

        static auto from_edges(int n, const std::vector<std::pair<int, int>> & edges) -> Graph;

        auto size() const -> int { return _n; }
        auto vertices() const -> VertexSet { return VertexSet::prefix(_n); }
        auto neighbours(int v) const -> VertexSet { return VertexSet{_rows[v]}; }
        auto closed_neighbours(int v) const -> VertexSet { return VertexSet{_rows[v] | (std::uint64_t{1} << v)}; }
        auto adjacent(int u, int v) const -> bool { return (_rows[u] >> v) & 1; }
        auto degree(int v) const -> int { return std::popcount(_rows[v]); }
        auto edge_count() const -> int;
        auto edges() const -> std::vector<std::pair<int, int>>;

        auto add_edge(int u, int v) -> void;
        auto remove_edge(int u, int v) -> void;
        auto toggle_edge(int u, int v) -> void;

        auto operator==(const Graph & other) const -> bool;

    private:
        auto check_pair(int u, int v) const -> void;

        int _n;
        std::array<std::uint64_t, max_vertices> _rows{};
    };

    /// Vertex colours are small integers; 0 is black and 1 is white when k = 2.
    using Coloring = std::vector<int>;

    struct ColoredGraph
    {
        Graph graph;
        Coloring colors;

        auto operator==(const ColoredGraph &) const -> bool = default;
    };

    auto color_mask(const Coloring & colors, int color) -> VertexSet;

    /// Pattern vertex i is mapped to host vertex map[i].
    struct Embedding
    {
        std::vector<int> map;

        auto operator==(const Embedding &) const -> bool = default;
    };

    auto induced(const Graph & g, VertexSet w) -> Graph;
    auto induced(const ColoredGraph & g, VertexSet w) -> ColoredGraph;
    auto delete_vertex(const Graph & g, int v) -> Graph;
    auto complement(const Graph & g) -> Graph;
    auto disjoint_union(const Graph & a, const Graph & b) -> Graph;
    auto join(const Graph & a, const Graph & b) -> Graph;
    auto local_complement(const Graph & g, int x) -> Graph;
    auto permute(const Graph & g, const std::vector<int> & perm) -> Graph;

    auto anti_neighbourhood(const Graph & g, int x) -> VertexSet;

    /// Components sorted by their minimum vertex.
    auto components(const Graph & g) -> std::vector<VertexSet>;
    auto components(const Graph & g, VertexSet within) -> std::vector<VertexSet>;
    auto is_connected(const Graph & g) -> bool;

    /// Lexicographically first induced embedding of pattern into host, colour
    /// preserving when both colourings are given.
    auto find_induced_embedding(
        const Graph & host,
        const Graph & pattern,
        const Coloring * host_coloring = nullptr,
        const Coloring * pattern_coloring = nullptr) -> std::optional<Embedding>;

    auto is_induced_embedding(const Graph & host, const Graph & pattern, const Embedding & e) -> bool;

    auto is_distance_hereditary(const Graph & g) -> bool;

    /// Largest GF(2) rank of the prefix/suffix biadjacency matrices along order.
    auto cutrank_profile(const Graph & g, const std::vector<int> & order) -> int;

    /// GF(2) rank of the rows/cols submatrix of the adjacency matrix.
    auto cut_rank(const Graph & g, VertexSet rows, VertexSet cols) -> int;

    // Small named graphs.
    auto complete_graph(int n) -> Graph;
    auto empty_graph(int n) -> Graph;
    auto path_graph(int n) -> Graph;
    auto cycle_graph(int n) -> Graph;
    auto matching_graph(int edges) -> Graph;
}
