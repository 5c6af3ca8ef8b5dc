#include <kthresh/enumerate.hpp>

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <unordered_set>

namespace kthresh
{
    namespace
    {
        auto check_n(int n) -> void
        {
            if (n < 1)
                throw std::domain_error("enumeration needs n >= 1");
            if (n > enumeration_bound || n > canonical_bound())
                throw CapacityError("enumeration limited to n <= "
                    + std::to_string(std::min(enumeration_bound, canonical_bound())));
        }

        auto extend_level(const std::vector<CanonicalForm> & previous, int n) -> std::vector<CanonicalForm>
        {
            std::unordered_set<CanonicalForm, CanonicalFormHash> seen;
            for (auto & f : previous) {
                auto base = f.to_graph();
                for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
                    Graph g(n);
                    for (auto [u, v] : base.edges())
                        g.add_edge(u, v);
                    for (int u : VertexSet{mask})
                        g.add_edge(u, n - 1);
                    seen.insert(canonical_form(g));
                }
            }
            std::vector<CanonicalForm> out(seen.begin(), seen.end());
            std::sort(out.begin(), out.end());
            return out;
        }
    }

    auto canonical_forms(int n) -> const std::vector<CanonicalForm> &
    {
        check_n(n);
        static std::mutex lock;
        static std::map<int, std::vector<CanonicalForm>> levels;

        std::lock_guard guard(lock);
        if (levels.empty())
            levels[1] = {canonical_form(Graph(1))};
        for (int m = 2; m <= n; ++m)
            if (! levels.contains(m))
                levels[m] = extend_level(levels[m - 1], m);
        return levels[n];
    }

    auto all_graphs(const EnumerationConfig & cfg) -> std::vector<Graph>
    {
        if (cfg.colored)
            throw std::domain_error("use all_colored_graphs for coloured enumeration");
        std::vector<Graph> out;
        for (auto & f : canonical_forms(cfg.n)) {
            auto g = f.to_graph();
            if (cfg.connectivity == Connectivity::connected && ! is_connected(g))
                continue;
            out.push_back(std::move(g));
        }
        return out;
    }

    auto all_colored_graphs(const EnumerationConfig & cfg) -> std::vector<ColoredGraph>
    {
        std::set<CanonicalForm> seen;
        for (auto & g : all_graphs({cfg.n, false, cfg.connectivity}))
            for (std::uint64_t m = 0; m < (std::uint64_t{1} << cfg.n); ++m) {
                Coloring c(cfg.n);
                for (int v = 0; v < cfg.n; ++v)
                    c[v] = int((m >> v) & 1);
                seen.insert(canonical_form(ColoredGraph{g, c}));
            }

        std::vector<ColoredGraph> out;
        for (auto & f : seen)
            out.push_back(f.to_colored());
        return out;
    }

    auto all_graphs_baseline(int n) -> std::vector<Graph>
    {
        check_n(n);
        std::vector<std::pair<int, int>> pairs;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i)
                pairs.emplace_back(i, j);

        std::unordered_set<CanonicalForm, CanonicalFormHash> seen;
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << pairs.size()); ++m) {
            Graph g(n);
            for (int b : VertexSet{m})
                g.add_edge(pairs[b].first, pairs[b].second);
            seen.insert(canonical_form(g));
        }
        std::vector<CanonicalForm> forms(seen.begin(), seen.end());
        std::sort(forms.begin(), forms.end());

        std::vector<Graph> out;
        for (auto & f : forms)
            out.push_back(f.to_graph());
        return out;
    }

    auto count_family(const std::function<bool(const Graph &)> & member, int n) -> std::uint64_t
    {
        std::uint64_t count = 0;
        for (auto & g : all_graphs({n}))
            if (member(g))
                ++count;
        return count;
    }

    auto canonical_classes(const std::vector<Graph> & graphs) -> std::vector<Graph>
    {
        std::set<CanonicalForm> seen;
        for (auto & g : graphs)
            seen.insert(canonical_form(g));
        std::vector<Graph> out;
        for (auto & f : seen)
            out.push_back(f.to_graph());
        return out;
    }
}
