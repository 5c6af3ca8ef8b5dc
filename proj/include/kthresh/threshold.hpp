#pragma once

#include <kthresh/build_sequence.hpp>
#include <kthresh/graph.hpp>

#include <optional>
#include <vector>

namespace kthresh
{
    enum class RemovalKind
    {
        isolated,
        universal
    };

    struct Removal
    {
        int vertex;
        RemovalKind kind;

        auto operator==(const Removal &) const -> bool = default;
    };

    /// Removals in order. Each vertex is isolated or universal in what is
    /// left at its turn; the last one is always recorded as isolated.
    struct ThresholdCertificate
    {
        std::vector<Removal> elimination;
    };

    auto is_threshold(const Graph & g) -> std::optional<ThresholdCertificate>;

    /// Checks a certificate against g by replaying it.
    auto check_certificate(const Graph & g, const ThresholdCertificate & cert) -> bool;

    /// Vertices by ascending degree, ties by index; empty if g is not threshold.
    auto threshold_order(const Graph & g) -> std::optional<std::vector<int>>;

    /// Both inclusion conditions for every ordered pair.
    auto is_threshold_order(const Graph & g, const std::vector<int> & order) -> bool;

    /// Sequence over {add, joinall} with k = 1 that evaluates back to g.
    auto build_threshold_tree(const Graph & g) -> std::optional<BuildSequence>;
}
