#include <kthresh/canonical.hpp>
#include <kthresh/graph6.hpp>

#include <algorithm>
#include <atomic>
#include <map>

namespace kthresh
{
    namespace
    {
        std::atomic<int> bound{default_canonical_bound};

        // Colour refinement. The resulting labels depend only on the
        // isomorphism class, and label order refines the colour order.
        auto refine(const Graph & g, const Coloring * colors) -> std::vector<int>
        {
            int n = g.size();
            std::vector<int> label(n, 0);
            if (colors)
                for (int v = 0; v < n; ++v)
                    label[v] = (*colors)[v];

            int classes = -1;
            while (true) {
                std::vector<std::vector<int>> sig(n);
                for (int v = 0; v < n; ++v) {
                    sig[v].push_back(label[v]);
                    std::vector<int> nb;
                    for (int u : g.neighbours(v))
                        nb.push_back(label[u]);
                    std::sort(nb.begin(), nb.end());
                    sig[v].insert(sig[v].end(), nb.begin(), nb.end());
                }
                auto sorted = sig;
                std::sort(sorted.begin(), sorted.end());
                sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
                for (int v = 0; v < n; ++v)
                    label[v] = int(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
                if (int(sorted.size()) == classes)
                    break;
                classes = int(sorted.size());
            }
            return label;
        }

        struct Search
        {
            const Graph & g;
            int n;
            std::vector<int> label;
            std::vector<int> required;
            std::vector<VertexSet> twins;

            std::vector<int> placed;
            std::vector<std::uint64_t> current;
            std::vector<std::uint64_t> best;
            std::vector<int> best_placed;
            bool have_best = false;
            unsigned long version = 0;

            auto run(int p, bool equal_to_best) -> void
            {
                if (p == n) {
                    if (! have_best || ! equal_to_best) {
                        best = current;
                        best_placed = placed;
                        have_best = true;
                        ++version;
                    }
                    return;
                }

                VertexSet used;
                for (int i = 0; i < p; ++i)
                    used.insert(placed[i]);

                std::vector<std::pair<std::uint64_t, int>> options;
                std::uint64_t lowest = ~std::uint64_t{0};
                for (int v : g.vertices() - used) {
                    if (label[v] != required[p])
                        continue;
                    if (! ((twins[v] - used) & VertexSet::prefix(v)).empty())
                        continue;
                    std::uint64_t chunk = 0;
                    for (int i = 0; i < p; ++i)
                        chunk = (chunk << 1) | (g.adjacent(placed[i], v) ? 1 : 0);
                    options.emplace_back(chunk, v);
                    lowest = std::min(lowest, chunk);
                }

                if (have_best && equal_to_best) {
                    if (lowest > best[p])
                        return;
                    if (lowest < best[p])
                        equal_to_best = false;
                }

                for (auto [chunk, v] : options) {
                    if (chunk != lowest)
                        continue;
                    current[p] = chunk;
                    placed[p] = v;
                    auto before = version;
                    run(p + 1, equal_to_best);
                    if (version != before)
                        equal_to_best = true;
                }
            }
        };
    }

    auto canonical_bound() -> int
    {
        return bound.load();
    }

    auto set_canonical_bound(int b) -> void
    {
        if (b < 1 || b > canonical_hard_limit)
            throw CapacityError("canonical bound must lie in 1.." + std::to_string(canonical_hard_limit));
        bound.store(b);
    }

    auto canonize(const Graph & g, const Coloring * colors) -> Canonization
    {
        int n = g.size();
        if (n > canonical_bound())
            throw CapacityError("canonical form needs n <= " + std::to_string(canonical_bound()) + ", got "
                + std::to_string(n));
        if (colors && int(colors->size()) != n)
            throw std::domain_error("colouring length does not match the graph");

        Search s{g, n, refine(g, colors), {}, {}, std::vector<int>(n, -1), std::vector<std::uint64_t>(n, 0), {}, {}};
        s.required = s.label;
        std::sort(s.required.begin(), s.required.end());

        s.twins.assign(n, VertexSet{});
        for (int v = 0; v < n; ++v)
            for (int u = 0; u < n; ++u) {
                if (u == v || (colors && (*colors)[u] != (*colors)[v]))
                    continue;
                auto nu = g.neighbours(u), nv = g.neighbours(v);
                nu.erase(v);
                nv.erase(u);
                if (nu == nv)
                    s.twins[v].insert(u);
            }

        s.run(0, true);

        Canonization out;
        out.form.n = n;
        out.labelling.assign(n, -1);
        for (int p = 0; p < n; ++p) {
            out.labelling[s.best_placed[p]] = p;
            if (p > 0)
                out.form.bits = (out.form.bits << p) | s.best[p];
            if (colors)
                out.form.colors.push_back((*colors)[s.best_placed[p]]);
        }
        return out;
    }

    auto canonical_form(const Graph & g) -> CanonicalForm
    {
        return canonize(g).form;
    }

    auto canonical_form(const ColoredGraph & g) -> CanonicalForm
    {
        return canonize(g.graph, &g.colors).form;
    }

    auto is_isomorphic(const Graph & a, const Graph & b) -> bool
    {
        return a.size() == b.size() && a.edge_count() == b.edge_count() && canonical_form(a) == canonical_form(b);
    }

    auto is_isomorphic(const ColoredGraph & a, const ColoredGraph & b) -> bool
    {
        return a.graph.size() == b.graph.size() && canonical_form(a) == canonical_form(b);
    }

    auto CanonicalForm::to_graph() const -> Graph
    {
        Graph g(n);
        int remaining = n * (n - 1) / 2;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i)
                if ((bits >> --remaining) & 1)
                    g.add_edge(i, j);
        return g;
    }

    auto CanonicalForm::to_colored() const -> ColoredGraph
    {
        return ColoredGraph{to_graph(), colors};
    }

    auto CanonicalForm::to_string() const -> std::string
    {
        auto s = encode_graph6(to_graph());
        if (! colors.empty())
            s += " " + encode_colors(colors, 1 + *std::max_element(colors.begin(), colors.end()));
        return s;
    }

    auto CanonicalFormHash::operator()(const CanonicalForm & f) const -> std::size_t
    {
        std::size_t h = std::hash<std::uint64_t>{}(f.bits) ^ (std::size_t(f.n) * 0x9e3779b97f4a7c15ULL);
        for (int c : f.colors)
            h = h * 31 + std::size_t(c);
        return h;
    }
}
