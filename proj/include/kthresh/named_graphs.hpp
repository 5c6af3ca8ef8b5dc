#pragma once

#include <kthresh/graph.hpp>

namespace kthresh::named
{
    auto k1() -> Graph;
    auto k2() -> Graph;
    auto p4() -> Graph;
    auto c4() -> Graph;
    auto c5() -> Graph;
    auto two_k2() -> Graph;
    auto three_k2() -> Graph;
    auto two_p3() -> Graph;

    /// P4 plus a universal vertex.
    auto gem() -> Graph;
    auto cogem() -> Graph;
    /// Square with a triangular roof, i.e. C5 plus one chord.
    auto house() -> Graph;
    /// Triangle with two pendant vertices on different corners.
    auto bull() -> Graph;
    /// Two triangles sharing a vertex.
    auto butterfly() -> Graph;
    /// Triangle with a pendant on each corner.
    auto net() -> Graph;
    /// K_{2,2,2}.
    auto octahedron() -> Graph;
    auto diamond() -> Graph;
    /// Wheel over C4 with a pendant attached to the hub.
    auto wheel4_with_hub_pendant() -> Graph;
    /// Diamond with a pendant on each of its two degree-three vertices.
    auto diamond_with_pendants() -> Graph;
    auto c4_plus_2k1() -> Graph;
}
