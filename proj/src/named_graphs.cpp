#include <kthresh/named_graphs.hpp>

namespace kthresh::named
{
    auto k1() -> Graph { return Graph(1); }
    auto k2() -> Graph { return complete_graph(2); }
    auto p4() -> Graph { return path_graph(4); }
    auto c4() -> Graph { return cycle_graph(4); }
    auto c5() -> Graph { return cycle_graph(5); }
    auto two_k2() -> Graph { return matching_graph(2); }
    auto three_k2() -> Graph { return matching_graph(3); }
    auto two_p3() -> Graph { return disjoint_union(path_graph(3), path_graph(3)); }

    auto gem() -> Graph { return join(k1(), p4()); }
    auto cogem() -> Graph { return disjoint_union(k1(), p4()); }

    auto house() -> Graph
    {
        auto g = cycle_graph(5);
        g.add_edge(1, 4);
        return g;
    }

    auto bull() -> Graph { return Graph::from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 4}}); }

    auto butterfly() -> Graph { return Graph::from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}}); }

    auto net() -> Graph { return Graph::from_edges(6, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 4}, {2, 5}}); }

    auto octahedron() -> Graph { return complement(three_k2()); }

    auto diamond() -> Graph { return Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}); }

    auto wheel4_with_hub_pendant() -> Graph { return join(k1(), disjoint_union(c4(), k1())); }

    auto diamond_with_pendants() -> Graph
    {
        // 0 and 1 are the degree-three vertices of the diamond
        auto g = disjoint_union(diamond(), empty_graph(2));
        g.add_edge(0, 4);
        g.add_edge(1, 5);
        return g;
    }

    auto c4_plus_2k1() -> Graph { return disjoint_union(c4(), empty_graph(2)); }
}
