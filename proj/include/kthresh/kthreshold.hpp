#pragma once

#include <kthresh/build_sequence.hpp>
#include <kthresh/graph.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace kthresh
{
    /// Which operators a decomposition tree may use.
    ///   general(k):  add, join_color(0..k-1)
    ///   special:     add, join_color(white)
    ///   restricted:  join_color(black), join_color(white)
    ///   extended:    add, join_color(black), join_color(white), join_all
    class Dialect
    {
    public:
        enum class Kind
        {
            general,
            special,
            restricted,
            extended
        };

        static auto general(int k) -> Dialect;
        static auto special() -> Dialect { return Dialect{Kind::special, 2}; }
        static auto restricted() -> Dialect { return Dialect{Kind::restricted, 2}; }
        static auto extended() -> Dialect { return Dialect{Kind::extended, 2}; }

        auto kind() const -> Kind { return _kind; }
        auto colors() const -> int { return _k; }
        auto allows(const Operator & op) const -> bool;
        /// Allowed operators in preference order: add, join_color(0), ..., join_all.
        auto operators() const -> std::vector<Operator>;
        /// Renaming the colours maps the class onto itself.
        auto color_symmetric() const -> bool { return _kind != Kind::special; }
        auto name() const -> std::string;

        auto operator==(const Dialect &) const -> bool = default;

    private:
        Dialect(Kind kind, int k) : _kind(kind), _k(k) {}

        Kind _kind;
        int _k;
    };

    /// Greedy reverse construction under a fixed colouring. Removes the
    /// lowest-index eligible vertex each round, preferring add over
    /// join_color(0) over join_color(1) ... over join_all.
    auto eliminate(const ColoredGraph & cg, const Dialect & dialect) -> std::optional<BuildSequence>;

    /// A sequence is well formed for a dialect if every non-seed operator is
    /// allowed and every colour is below the dialect's colour count.
    auto conforms(const BuildSequence & seq, const Dialect & dialect) -> bool;

    struct SearchBudget
    {
        int max_vertices = 20;
        std::uint64_t max_colorings = std::uint64_t{1} << 20;
    };

    struct ColoredCertificate
    {
        Coloring coloring;
        BuildSequence sequence;
    };

    /// Tries colourings in lexicographic order (vertex 0 most significant).
    /// Colour-symmetric dialects only visit colourings in restricted growth
    /// form: vertex 0 gets colour 0 and each new colour is the next unused one.
    auto search_colorings(const Graph & g, const Dialect & dialect, const SearchBudget & budget = {})
        -> std::optional<ColoredCertificate>;

    /// Calls visit for every colouring the search would try; stops early when
    /// visit returns false.
    template <typename Visit>
    auto for_each_coloring(int n, int k, bool symmetric, Visit && visit) -> void;

    auto is_k_threshold(const Graph & g, int k, const SearchBudget & budget = {})
        -> std::optional<ColoredCertificate>;
    auto is_special(const Graph & g, const SearchBudget & budget = {}) -> std::optional<ColoredCertificate>;
    auto is_restricted(const Graph & g, const SearchBudget & budget = {}) -> std::optional<ColoredCertificate>;
    auto is_extended(const Graph & g, const SearchBudget & budget = {}) -> std::optional<ColoredCertificate>;

    enum class NeighbourhoodShape
    {
        empty,
        threshold,
        union_of_two_thresholds,
        join_of_two_thresholds,
        other
    };

    auto to_string(NeighbourhoodShape s) -> std::string;

    auto neighbourhood_shape(const Graph & g, int x) -> NeighbourhoodShape;

    /// Every vertex neighbourhood has a shape other than "other".
    auto is_good(const Graph & g) -> bool;

    template <typename Visit>
    auto for_each_coloring(int n, int k, bool symmetric, Visit && visit) -> void
    {
        Coloring c(n, 0);
        // prefix_max[i] = largest colour among c[0..i-1]
        std::vector<int> prefix_max(n + 1, -1);
        auto limit = [&](int i) { return symmetric ? std::min(k - 1, prefix_max[i] + 1) : k - 1; };
        for (int i = 0; i < n; ++i)
            prefix_max[i + 1] = std::max(prefix_max[i], c[i]);

        while (true) {
            if (! visit(static_cast<const Coloring &>(c)))
                return;
            int i = n - 1;
            while (i >= 0 && c[i] == limit(i))
                --i;
            if (i < 0)
                return;
            ++c[i];
            prefix_max[i + 1] = std::max(prefix_max[i], c[i]);
            for (int j = i + 1; j < n; ++j) {
                c[j] = 0;
                prefix_max[j + 1] = std::max(prefix_max[j], 0);
            }
        }
    }
}
