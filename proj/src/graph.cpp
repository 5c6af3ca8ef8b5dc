#include <kthresh/graph.hpp>

#include <algorithm>

namespace kthresh
{
    namespace
    {
        auto check_size(int n) -> void
        {
            if (n < 1)
                throw std::domain_error("graph needs at least one vertex");
            if (n > max_vertices)
                throw CapacityError("graph has " + std::to_string(n) + " vertices, capacity is 64");
        }

        auto check_vertex(const Graph & g, int x) -> void
        {
            if (x < 0 || x >= g.size())
                throw std::domain_error("vertex " + std::to_string(x) + " out of range");
        }
    }

    Graph::Graph(int n) : _n(n)
    {
        check_size(n);
    }

    auto Graph::from_edges(int n, const std::vector<std::pair<int, int>> & edges) -> Graph
    {
        Graph g(n);
        for (auto [u, v] : edges)
            g.add_edge(u, v);
        return g;
    }

    auto Graph::check_pair(int u, int v) const -> void
    {
        if (u < 0 || v < 0 || u >= _n || v >= _n)
            throw std::domain_error("edge endpoint out of range");
        if (u == v)
            throw std::domain_error("loops are not allowed");
    }

    auto Graph::add_edge(int u, int v) -> void
    {
        check_pair(u, v);
        _rows[u] |= std::uint64_t{1} << v;
        _rows[v] |= std::uint64_t{1} << u;
    }

    auto Graph::remove_edge(int u, int v) -> void
    {
        check_pair(u, v);
        _rows[u] &= ~(std::uint64_t{1} << v);
        _rows[v] &= ~(std::uint64_t{1} << u);
    }

    auto Graph::toggle_edge(int u, int v) -> void
    {
        check_pair(u, v);
        _rows[u] ^= std::uint64_t{1} << v;
        _rows[v] ^= std::uint64_t{1} << u;
    }

    auto Graph::edge_count() const -> int
    {
        int twice = 0;
        for (int v = 0; v < _n; ++v)
            twice += std::popcount(_rows[v]);
        return twice / 2;
    }

    auto Graph::edges() const -> std::vector<std::pair<int, int>>
    {
        std::vector<std::pair<int, int>> out;
        for (int v = 0; v < _n; ++v)
            for (int u = 0; u < v; ++u)
                if (adjacent(u, v))
                    out.emplace_back(u, v);
        return out;
    }

    auto Graph::operator==(const Graph & other) const -> bool
    {
        return _n == other._n && std::equal(_rows.begin(), _rows.begin() + _n, other._rows.begin());
    }

    auto color_mask(const Coloring & colors, int color) -> VertexSet
    {
        VertexSet s;
        for (int v = 0; v < int(colors.size()); ++v)
            if (colors[v] == color)
                s.insert(v);
        return s;
    }

    auto induced(const Graph & g, VertexSet w) -> Graph
    {
        if (w.empty())
            throw std::domain_error("induced subgraph of an empty vertex set");
        if (! w.subset_of(g.vertices()))
            throw std::domain_error("vertex set is not a subset of the graph");

        auto keep = w.members();
        Graph h(int(keep.size()));
        for (int i = 0; i < int(keep.size()); ++i)
            for (int j = 0; j < i; ++j)
                if (g.adjacent(keep[i], keep[j]))
                    h.add_edge(i, j);
        return h;
    }

    auto induced(const ColoredGraph & g, VertexSet w) -> ColoredGraph
    {
        ColoredGraph out{induced(g.graph, w), {}};
        for (int v : w)
            out.colors.push_back(g.colors[v]);
        return out;
    }

    auto delete_vertex(const Graph & g, int v) -> Graph
    {
        check_vertex(g, v);
        auto w = g.vertices();
        w.erase(v);
        return induced(g, w);
    }

    auto complement(const Graph & g) -> Graph
    {
        Graph h(g.size());
        for (int v = 0; v < g.size(); ++v)
            for (int u = 0; u < v; ++u)
                if (! g.adjacent(u, v))
                    h.add_edge(u, v);
        return h;
    }

    auto disjoint_union(const Graph & a, const Graph & b) -> Graph
    {
        if (a.size() + b.size() > max_vertices)
            throw CapacityError("union exceeds 64 vertices");
        Graph h(a.size() + b.size());
        for (auto [u, v] : a.edges())
            h.add_edge(u, v);
        for (auto [u, v] : b.edges())
            h.add_edge(a.size() + u, a.size() + v);
        return h;
    }

    auto join(const Graph & a, const Graph & b) -> Graph
    {
        auto h = disjoint_union(a, b);
        for (int u = 0; u < a.size(); ++u)
            for (int v = 0; v < b.size(); ++v)
                h.add_edge(u, a.size() + v);
        return h;
    }

    auto local_complement(const Graph & g, int x) -> Graph
    {
        check_vertex(g, x);
        auto h = g;
        auto nb = g.neighbours(x).members();
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = 0; j < i; ++j)
                h.toggle_edge(nb[i], nb[j]);
        return h;
    }

    auto permute(const Graph & g, const std::vector<int> & perm) -> Graph
    {
        if (int(perm.size()) != g.size())
            throw std::domain_error("permutation has the wrong length");
        Graph h(g.size());
        for (auto [u, v] : g.edges())
            h.add_edge(perm[u], perm[v]);
        return h;
    }

    auto anti_neighbourhood(const Graph & g, int x) -> VertexSet
    {
        check_vertex(g, x);
        return g.vertices() - g.closed_neighbours(x);
    }

    auto components(const Graph & g, VertexSet within) -> std::vector<VertexSet>
    {
        std::vector<VertexSet> out;
        auto left = within;
        while (! left.empty()) {
            auto comp = VertexSet::singleton(left.first());
            auto frontier = comp;
            while (! frontier.empty()) {
                VertexSet next;
                for (int v : frontier)
                    next = next | g.neighbours(v);
                next = (next & within) - comp;
                comp = comp | next;
                frontier = next;
            }
            out.push_back(comp);
            left = left - comp;
        }
        return out;
    }

    auto components(const Graph & g) -> std::vector<VertexSet>
    {
        return components(g, g.vertices());
    }

    auto is_connected(const Graph & g) -> bool
    {
        return components(g).size() == 1;
    }

    namespace
    {
        struct EmbeddingSearch
        {
            const Graph & host;
            const Graph & pattern;
            std::vector<VertexSet> allowed;
            std::vector<int> map;

            auto extend(int depth, VertexSet used) -> bool
            {
                if (depth == pattern.size())
                    return true;

                auto candidates = allowed[depth] - used;
                for (int i = 0; i < depth; ++i) {
                    auto row = host.neighbours(map[i]);
                    candidates = pattern.adjacent(i, depth) ? (candidates & row) : (candidates - row);
                }

                for (int h : candidates) {
                    map[depth] = h;
                    auto next = used;
                    next.insert(h);
                    if (extend(depth + 1, next))
                        return true;
                }
                return false;
            }
        };
    }

    auto find_induced_embedding(
        const Graph & host,
        const Graph & pattern,
        const Coloring * host_coloring,
        const Coloring * pattern_coloring) -> std::optional<Embedding>
    {
        if (pattern.size() > host.size())
            return std::nullopt;

        EmbeddingSearch search{host, pattern, {}, std::vector<int>(pattern.size(), -1)};
        search.allowed.assign(pattern.size(), host.vertices());
        if (host_coloring && pattern_coloring)
            for (int i = 0; i < pattern.size(); ++i)
                search.allowed[i] = color_mask(*host_coloring, (*pattern_coloring)[i]);

        if (search.extend(0, VertexSet{}))
            return Embedding{search.map};
        return std::nullopt;
    }

    auto is_induced_embedding(const Graph & host, const Graph & pattern, const Embedding & e) -> bool
    {
        if (int(e.map.size()) != pattern.size())
            return false;
        VertexSet seen;
        for (int h : e.map) {
            if (h < 0 || h >= host.size() || seen.contains(h))
                return false;
            seen.insert(h);
        }
        for (int i = 0; i < pattern.size(); ++i)
            for (int j = 0; j < i; ++j)
                if (pattern.adjacent(i, j) != host.adjacent(e.map[i], e.map[j]))
                    return false;
        return true;
    }

    auto is_distance_hereditary(const Graph & g) -> bool
    {
        auto left = g.vertices();
        auto nbrs = [&](int v) { return g.neighbours(v) & left; };

        auto find_removable = [&]() -> int {
            for (int v : left)
                if (nbrs(v).empty())
                    return v;
            for (int v : left)
                if (nbrs(v).size() == 1)
                    return v;
            // false twins, then true twins; lowest pair first, drop the larger
            for (int v : left)
                for (int u : left) {
                    if (u >= v)
                        break;
                    if (nbrs(u) == nbrs(v))
                        return v;
                }
            for (int v : left)
                for (int u : left) {
                    if (u >= v)
                        break;
                    auto cu = nbrs(u), cv = nbrs(v);
                    cu.insert(u);
                    cv.insert(v);
                    if (cu == cv)
                        return v;
                }
            return -1;
        };

        while (left.size() > 1) {
            int v = find_removable();
            if (v < 0)
                return false;
            left.erase(v);
        }
        return true;
    }

    auto cut_rank(const Graph & g, VertexSet rows, VertexSet cols) -> int
    {
        std::vector<std::uint64_t> basis;
        for (int v : rows) {
            auto r = (g.neighbours(v) & cols).bits();
            for (auto b : basis)
                r = std::min(r, r ^ b);
            if (r) {
                basis.push_back(r);
                std::sort(basis.begin(), basis.end(), std::greater<>{});
            }
        }
        return int(basis.size());
    }

    auto cutrank_profile(const Graph & g, const std::vector<int> & order) -> int
    {
        if (int(order.size()) != g.size())
            throw std::domain_error("order is not a permutation of the vertices");
        VertexSet seen;
        for (int v : order) {
            if (v < 0 || v >= g.size() || seen.contains(v))
                throw std::domain_error("order is not a permutation of the vertices");
            seen.insert(v);
        }

        int best = 0;
        VertexSet prefix;
        for (std::size_t i = 0; i + 1 < order.size(); ++i) {
            prefix.insert(order[i]);
            best = std::max(best, cut_rank(g, prefix, g.vertices() - prefix));
        }
        return best;
    }

    auto complete_graph(int n) -> Graph
    {
        Graph g(n);
        for (int v = 0; v < n; ++v)
            for (int u = 0; u < v; ++u)
                g.add_edge(u, v);
        return g;
    }

    auto empty_graph(int n) -> Graph
    {
        return Graph(n);
    }

    auto path_graph(int n) -> Graph
    {
        Graph g(n);
        for (int v = 1; v < n; ++v)
            g.add_edge(v - 1, v);
        return g;
    }

    auto cycle_graph(int n) -> Graph
    {
        if (n < 3)
            throw std::domain_error("cycles need at least three vertices");
        auto g = path_graph(n);
        g.add_edge(0, n - 1);
        return g;
    }

    auto matching_graph(int edges) -> Graph
    {
        Graph g(2 * edges);
        for (int i = 0; i < edges; ++i)
            g.add_edge(2 * i, 2 * i + 1);
        return g;
    }
}
