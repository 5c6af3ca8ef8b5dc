#include "oracles.hpp"

#include <kthresh/canonical.hpp>
#include <kthresh/enumerate.hpp>
#include <kthresh/named_graphs.hpp>
#include <kthresh/switching.hpp>
#include <kthresh/threshold.hpp>

#include <doctest.h>

using namespace kthresh;

TEST_CASE("switching identities")
{
    std::mt19937_64 rng(67);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + int(rng() % 12);
        auto g = oracle::random_graph(n, 0.5, rng);
        auto s = VertexSet{rng()} & g.vertices();
        CHECK(switch_graph(g, VertexSet{}) == g);
        CHECK(switch_graph(g, g.vertices()) == g);
        CHECK(switch_graph(switch_graph(g, s), s) == g);
        CHECK(switch_graph(g, s) == switch_graph(g, g.vertices() - s));
    }
}

TEST_CASE("switching at one vertex of C5")
{
    auto c5 = named::c5();
    auto h = switch_graph(c5, VertexSet::singleton(0));
    CHECK(h.neighbours(0) == VertexSet::of({2, 3}));
    for (int u = 1; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v)
            CHECK(h.adjacent(u, v) == c5.adjacent(u, v));
}

TEST_CASE("switching classes")
{
    auto cls = switching_class(named::c5());
    std::set<CanonicalForm> expected{canonical_form(named::c5()), canonical_form(named::bull()),
        canonical_form(named::gem()), canonical_form(named::cogem())};
    CHECK(cls == expected);
    CHECK(switching_class(Graph(1)) == std::set<CanonicalForm>{canonical_form(Graph(1))});

    for (int n = 1; n <= 6; ++n)
        for (auto & g : all_graphs({n}))
            CHECK(switching_class(g).size() <= (std::size_t{1} << (n - 1)));
}

TEST_CASE("switching to a threshold graph")
{
    for (int n = 1; n <= 6; ++n)
        for (auto & g : all_graphs({n})) {
            auto cert = switch_to_threshold(g);
            REQUIRE(cert.has_value() == oracle::switches_to_threshold(g));
            if (cert) {
                CHECK(cert->target == switch_graph(g, cert->set));
                CHECK(is_threshold(cert->target));
                CHECK_FALSE(cert->set.contains(0));
            }
            if (is_threshold(g))
                CHECK(cert->set.empty());
        }

    CHECK_FALSE(switch_to_threshold(named::c4_plus_2k1()));
    for (auto & g : {named::c5(), named::bull(), named::gem(), named::cogem()})
        CHECK_FALSE(switch_to_threshold(g));
    CHECK_THROWS_AS(switch_to_threshold(Graph(25)), CapacityError);
}

TEST_CASE("cographs")
{
    for (int n = 1; n <= 6; ++n)
        for (auto & g : oracle::labelled_graphs(n))
            if (n <= 5 || g.edge_count() % 3 == 0)
                REQUIRE(is_cograph(g) == oracle::cograph(g));

    CHECK_FALSE(is_switch_cograph(named::c5()));
    CHECK(is_switch_cograph(named::p4()));
    for (int n = 1; n <= 7; ++n)
        for (auto & g : all_graphs({n})) {
            bool sc = is_switch_cograph(g);
            CHECK(sc == switches_to_cograph(g));
            if (is_cograph(g))
                CHECK(sc);
            if (switch_to_threshold(g))
                CHECK(sc);
        }
}
