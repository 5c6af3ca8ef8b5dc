#pragma once

#include <kthresh/graph.hpp>

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace kthresh
{
    /// Hard ceiling: the upper triangle must fit into one 64-bit word.
    inline constexpr int canonical_hard_limit = 11;
    inline constexpr int default_canonical_bound = 10;

    /// Current bound on n for canonical_form; starts at 10, may be raised to 11.
    auto canonical_bound() -> int;
    auto set_canonical_bound(int bound) -> void;

    /// Complete isomorphism invariant. Ordering is by size, then sorted colour
    /// string, then the adjacency string (graph6 bit order, first bit most
    /// significant).
    struct CanonicalForm
    {
        int n = 0;
        std::vector<int> colors;
        std::uint64_t bits = 0;

        auto operator<=>(const CanonicalForm &) const = default;
        auto operator==(const CanonicalForm &) const -> bool = default;

        auto to_graph() const -> Graph;
        auto to_colored() const -> ColoredGraph;
        auto to_string() const -> std::string;
    };

    struct CanonicalFormHash
    {
        auto operator()(const CanonicalForm & f) const -> std::size_t;
    };

    struct Canonization
    {
        CanonicalForm form;
        /// labelling[v] is the canonical position of vertex v.
        std::vector<int> labelling;
    };

    auto canonize(const Graph & g, const Coloring * colors = nullptr) -> Canonization;
    auto canonical_form(const Graph & g) -> CanonicalForm;
    auto canonical_form(const ColoredGraph & g) -> CanonicalForm;

    auto is_isomorphic(const Graph & a, const Graph & b) -> bool;
    auto is_isomorphic(const ColoredGraph & a, const ColoredGraph & b) -> bool;
}
