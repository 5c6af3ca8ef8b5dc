#include <kthresh/named_graphs.hpp>
#include <kthresh/switching.hpp>
#include <kthresh/threshold.hpp>

namespace kthresh
{
    auto switch_graph(const Graph & g, VertexSet s) -> Graph
    {
        if (! s.subset_of(g.vertices()))
            throw std::domain_error("switch set is not a subset of the vertices");
        auto h = g;
        for (int u : s)
            for (int v : g.vertices() - s)
                h.toggle_edge(u, v);
        return h;
    }

    namespace
    {
        auto check_switch_budget(const Graph & g, int max_vertices) -> void
        {
            if (g.size() > max_vertices)
                throw CapacityError("switch search limited to " + std::to_string(max_vertices) + " vertices");
        }

        template <typename Visit>
        auto for_each_switch_set(int n, Visit && visit) -> void
        {
            std::uint64_t count = std::uint64_t{1} << (n - 1);
            for (std::uint64_t m = 0; m < count; ++m)
                if (! visit(VertexSet{m << 1}))
                    return;
        }
    }

    auto switching_class(const Graph & g) -> std::set<CanonicalForm>
    {
        if (g.size() > canonical_bound())
            throw CapacityError("switching class needs n <= " + std::to_string(canonical_bound()));
        std::set<CanonicalForm> out;
        for_each_switch_set(g.size(), [&](VertexSet s) {
            out.insert(canonical_form(switch_graph(g, s)));
            return true;
        });
        return out;
    }

    auto switch_to_threshold(const Graph & g, int max_vertices) -> std::optional<SwitchCertificate>
    {
        check_switch_budget(g, max_vertices);
        std::optional<SwitchCertificate> result;
        for_each_switch_set(g.size(), [&](VertexSet s) {
            auto h = switch_graph(g, s);
            if (is_threshold(h)) {
                result = SwitchCertificate{s, h};
                return false;
            }
            return true;
        });
        return result;
    }

    namespace
    {
        auto cograph_within(const Graph & g, VertexSet w) -> bool
        {
            if (w.size() <= 1)
                return true;
            auto comps = components(g, w);
            if (comps.size() > 1) {
                for (auto c : comps)
                    if (! cograph_within(g, c))
                        return false;
                return true;
            }
            auto co = complement(g);
            auto co_comps = components(co, w);
            if (co_comps.size() == 1)
                return false;
            for (auto c : co_comps)
                if (! cograph_within(g, c))
                    return false;
            return true;
        }
    }

    auto is_cograph(const Graph & g) -> bool
    {
        return cograph_within(g, g.vertices());
    }

    auto switches_to_cograph(const Graph & g, int max_vertices) -> bool
    {
        check_switch_budget(g, max_vertices);
        bool found = false;
        for_each_switch_set(g.size(), [&](VertexSet s) {
            found = is_cograph(switch_graph(g, s));
            return ! found;
        });
        return found;
    }

    auto is_switch_cograph(const Graph & g) -> bool
    {
        for (auto & p : {named::c5(), named::bull(), named::gem(), named::cogem()})
            if (find_induced_embedding(g, p))
                return false;
        return true;
    }
}
