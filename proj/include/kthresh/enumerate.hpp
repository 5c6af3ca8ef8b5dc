#pragma once

#include <kthresh/canonical.hpp>
#include <kthresh/graph.hpp>

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <vector>

namespace kthresh
{
    inline constexpr int enumeration_bound = 8;

    enum class Connectivity
    {
        any,
        connected
    };

    struct EnumerationConfig
    {
        int n = 1;
        bool colored = false;
        Connectivity connectivity = Connectivity::any;
    };

    /// One canonical representative per isomorphism class on n vertices,
    /// in ascending canonical-form order. Built by extending each class on
    /// n - 1 vertices with every possible neighbourhood of a new vertex.
    auto all_graphs(const EnumerationConfig & cfg) -> std::vector<Graph>;

    /// Colour-preserving classes of 2-coloured graphs on n vertices, as
    /// canonical representatives in ascending canonical-form order.
    auto all_colored_graphs(const EnumerationConfig & cfg) -> std::vector<ColoredGraph>;

    /// Reference generator: every edge subset, deduplicated by canonical form.
    auto all_graphs_baseline(int n) -> std::vector<Graph>;

    /// Canonical forms of every class on up to n vertices, keyed by size.
    auto canonical_forms(int n) -> const std::vector<CanonicalForm> &;

    auto count_family(const std::function<bool(const Graph &)> & member, int n) -> std::uint64_t;

    /// Deduplicated canonical classes of externally supplied graphs.
    auto canonical_classes(const std::vector<Graph> & graphs) -> std::vector<Graph>;
}
