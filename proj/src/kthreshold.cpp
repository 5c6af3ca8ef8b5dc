#include <kthresh/kthreshold.hpp>
#include <kthresh/threshold.hpp>

#include <algorithm>

namespace kthresh
{
    auto Dialect::general(int k) -> Dialect
    {
        if (k < 1 || k > 9)
            throw std::domain_error("general dialect needs 1 <= k <= 9");
        return Dialect{Kind::general, k};
    }

    auto Dialect::allows(const Operator & op) const -> bool
    {
        switch (op.kind) {
        case OpKind::add: return _kind != Kind::restricted;
        case OpKind::join_all: return _kind == Kind::extended;
        case OpKind::join_color:
            if (op.color < 0 || op.color >= _k)
                return false;
            return _kind != Kind::special || op.color == white;
        }
        return false;
    }

    auto Dialect::operators() const -> std::vector<Operator>
    {
        std::vector<Operator> out;
        std::vector<Operator> all{Operator::add()};
        for (int c = 0; c < _k; ++c)
            all.push_back(Operator::join(c));
        all.push_back(Operator::join_all());
        for (auto & op : all)
            if (allows(op))
                out.push_back(op);
        return out;
    }

    auto Dialect::name() const -> std::string
    {
        switch (_kind) {
        case Kind::general: return "general(" + std::to_string(_k) + ")";
        case Kind::special: return "special";
        case Kind::restricted: return "restricted";
        case Kind::extended: return "extended";
        }
        return "?";
    }

    auto eliminate(const ColoredGraph & cg, const Dialect & dialect) -> std::optional<BuildSequence>
    {
        const auto & g = cg.graph;
        int n = g.size();
        if (int(cg.colors.size()) != n)
            throw std::domain_error("colouring length does not match the graph");
        for (int c : cg.colors)
            if (c < 0 || c >= dialect.colors())
                throw std::domain_error("colour out of range for " + dialect.name());

        auto ops = dialect.operators();
        std::vector<VertexSet> by_color(dialect.colors());
        for (int c = 0; c < dialect.colors(); ++c)
            by_color[c] = color_mask(cg.colors, c);

        std::vector<Step> removed;
        auto left = g.vertices();
        while (left.size() > 1) {
            bool found = false;
            for (int x : left) {
                auto rest = left;
                rest.erase(x);
                auto nb = g.neighbours(x) & rest;
                for (auto & op : ops) {
                    bool ok = false;
                    switch (op.kind) {
                    case OpKind::add: ok = nb.empty(); break;
                    case OpKind::join_color: ok = nb == (by_color[op.color] & rest); break;
                    case OpKind::join_all: ok = nb == rest; break;
                    }
                    if (ok) {
                        removed.push_back({x, cg.colors[x], op});
                        found = true;
                        break;
                    }
                }
                if (found) {
                    left.erase(x);
                    break;
                }
            }
            if (! found)
                return std::nullopt;
        }

        BuildSequence seq;
        seq.k = dialect.colors();
        int seed = left.first();
        seq.steps.push_back({seed, cg.colors[seed], Operator::add()});
        seq.steps.insert(seq.steps.end(), removed.rbegin(), removed.rend());
        return seq;
    }

    auto conforms(const BuildSequence & seq, const Dialect & dialect) -> bool
    {
        if (seq.steps.empty() || seq.k > dialect.colors())
            return false;
        for (std::size_t j = 0; j < seq.steps.size(); ++j) {
            auto & s = seq.steps[j];
            if (s.color < 0 || s.color >= dialect.colors())
                return false;
            if (j > 0 && ! dialect.allows(s.op))
                return false;
        }
        return true;
    }

    namespace
    {
        auto check_budget(int n, int k, bool symmetric, const SearchBudget & budget) -> void
        {
            if (n > budget.max_vertices)
                throw CapacityError("colouring search limited to " + std::to_string(budget.max_vertices)
                    + " vertices, got " + std::to_string(n));
            // restricted growth strings are bounded by k^(n-1)
            std::uint64_t count = 1;
            for (int i = symmetric ? 1 : 0; i < n; ++i) {
                count *= std::uint64_t(k);
                if (count > budget.max_colorings)
                    throw CapacityError("colouring search would exceed " + std::to_string(budget.max_colorings)
                        + " colourings");
            }
        }
    }

    auto search_colorings(const Graph & g, const Dialect & dialect, const SearchBudget & budget)
        -> std::optional<ColoredCertificate>
    {
        int n = g.size();
        check_budget(n, dialect.colors(), dialect.color_symmetric(), budget);

        std::optional<ColoredCertificate> result;
        for_each_coloring(n, dialect.colors(), dialect.color_symmetric(), [&](const Coloring & c) {
            if (auto seq = eliminate(ColoredGraph{g, c}, dialect)) {
                result = ColoredCertificate{c, std::move(*seq)};
                return false;
            }
            return true;
        });
        return result;
    }

    auto is_k_threshold(const Graph & g, int k, const SearchBudget & budget) -> std::optional<ColoredCertificate>
    {
        return search_colorings(g, Dialect::general(k), budget);
    }

    auto is_special(const Graph & g, const SearchBudget & budget) -> std::optional<ColoredCertificate>
    {
        return search_colorings(g, Dialect::special(), budget);
    }

    auto is_restricted(const Graph & g, const SearchBudget & budget) -> std::optional<ColoredCertificate>
    {
        return search_colorings(g, Dialect::restricted(), budget);
    }

    auto is_extended(const Graph & g, const SearchBudget & budget) -> std::optional<ColoredCertificate>
    {
        return search_colorings(g, Dialect::extended(), budget);
    }

    auto to_string(NeighbourhoodShape s) -> std::string
    {
        switch (s) {
        case NeighbourhoodShape::empty: return "empty";
        case NeighbourhoodShape::threshold: return "threshold";
        case NeighbourhoodShape::union_of_two_thresholds: return "union_of_two_thresholds";
        case NeighbourhoodShape::join_of_two_thresholds: return "join_of_two_thresholds";
        case NeighbourhoodShape::other: return "other";
        }
        return "?";
    }

    namespace
    {
        // Components can be split into two threshold groups iff at most two
        // of them have an edge and each of those is threshold.
        auto is_union_of_two_thresholds(const Graph & h) -> bool
        {
            int nontrivial = 0;
            for (auto comp : components(h)) {
                if (comp.size() < 2)
                    continue;
                if (++nontrivial > 2 || ! is_threshold(induced(h, comp)))
                    return false;
            }
            return true;
        }
    }

    auto neighbourhood_shape(const Graph & g, int x) -> NeighbourhoodShape
    {
        if (x < 0 || x >= g.size())
            throw std::domain_error("vertex out of range");
        auto nb = g.neighbours(x);
        if (nb.empty())
            return NeighbourhoodShape::empty;
        auto h = induced(g, nb);
        if (is_threshold(h))
            return NeighbourhoodShape::threshold;
        if (is_union_of_two_thresholds(h))
            return NeighbourhoodShape::union_of_two_thresholds;
        if (is_union_of_two_thresholds(complement(h)))
            return NeighbourhoodShape::join_of_two_thresholds;
        return NeighbourhoodShape::other;
    }

    auto is_good(const Graph & g) -> bool
    {
        for (int v = 0; v < g.size(); ++v)
            if (neighbourhood_shape(g, v) == NeighbourhoodShape::other)
                return false;
        return true;
    }
}
