#pragma once

#include <kthresh/canonical.hpp>
#include <kthresh/graph.hpp>

#include <optional>
#include <set>

namespace kthresh
{
    /// Toggles every pair with exactly one end in s.
    auto switch_graph(const Graph & g, VertexSet s) -> Graph;

    /// Canonical forms of all switches of g (vertex 0 kept outside the set).
    auto switching_class(const Graph & g) -> std::set<CanonicalForm>;

    struct SwitchCertificate
    {
        VertexSet set;
        Graph target;
    };

    /// First switch set, in ascending mask order with vertex 0 excluded,
    /// whose switch is a threshold graph.
    auto switch_to_threshold(const Graph & g, int max_vertices = 24) -> std::optional<SwitchCertificate>;

    auto is_cograph(const Graph & g) -> bool;

    /// Some switch of g is a cograph, by exhaustive search.
    auto switches_to_cograph(const Graph & g, int max_vertices = 24) -> bool;

    /// No induced C5, bull, gem or cogem.
    auto is_switch_cograph(const Graph & g) -> bool;
}
