#include "oracles.hpp"

#include <kthresh/canonical.hpp>
#include <kthresh/enumerate.hpp>
#include <kthresh/graph6.hpp>
#include <kthresh/kthreshold.hpp>
#include <kthresh/named_graphs.hpp>
#include <kthresh/obstructions.hpp>
#include <kthresh/switching.hpp>
#include <kthresh/threshold.hpp>

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace kthresh;

namespace
{
    auto forms_of(const Catalog & cat) -> std::set<CanonicalForm>
    {
        std::set<CanonicalForm> out;
        for (auto & e : cat.entries)
            out.insert(canonical_form(e.graph));
        return out;
    }
}

TEST_CASE("catalog text round trip")
{
    for (auto f : all_families()) {
        auto & cat = builtin_catalog(f);
        CHECK_FALSE(cat.entries.empty());
        auto again = parse_catalog(f, format_catalog(cat));
        REQUIRE(again.entries.size() == cat.entries.size());
        for (std::size_t i = 0; i < cat.entries.size(); ++i) {
            CHECK(again.entries[i].name == cat.entries[i].name);
            CHECK(again.entries[i].graph == cat.entries[i].graph);
            CHECK(again.entries[i].coloring == cat.entries[i].coloring);
            CHECK(again.entries[i].source == cat.entries[i].source);
        }
        CHECK(family_is_colored(f) == cat.entries.front().coloring.has_value());
        CHECK(parse_family(family_name(f)) == f);
    }
    CHECK_THROWS_AS(parse_catalog(Family::threshold, "x\tCr\n"), ParseError);
    CHECK_THROWS_AS(parse_family("nope"), std::domain_error);
}

TEST_CASE("catalogs hold the named graphs they claim")
{
    CHECK(forms_of(builtin_catalog(Family::threshold))
        == std::set<CanonicalForm>{canonical_form(named::two_k2()), canonical_form(named::c4()),
            canonical_form(named::p4())});

    std::set<CanonicalForm> special{canonical_form(named::two_k2()), canonical_form(named::c5()),
        canonical_form(named::net()), canonical_form(named::house()), canonical_form(named::gem()),
        canonical_form(named::octahedron()), canonical_form(named::wheel4_with_hub_pendant()),
        canonical_form(named::diamond_with_pendants())};
    CHECK(forms_of(builtin_catalog(Family::special2t)) == special);

    CHECK(forms_of(builtin_catalog(Family::switch_cograph))
        == std::set<CanonicalForm>{canonical_form(named::c5()), canonical_form(named::bull()),
            canonical_form(named::gem()), canonical_form(named::cogem())});

    std::set<CanonicalForm> good;
    for (auto & p : good_patterns())
        good.insert(canonical_form(p.pattern.graph));
    CHECK(forms_of(builtin_catalog(Family::good)) == good);
    CHECK(good_patterns()[1].pattern.graph == named::wheel4_with_hub_pendant());
}

TEST_CASE("threshold forbidden subgraphs")
{
    auto v = recognize_threshold_fis(named::c5());
    CHECK_FALSE(v.member);
    CHECK(v.obstruction == "P4");
    REQUIRE(v.embedding);
    CHECK(is_induced_embedding(named::c5(), v.pattern->graph, *v.embedding));
    CHECK(recognize_threshold_fis(complete_graph(5)).member);
}

TEST_CASE("special forbidden subgraphs")
{
    auto net = named::net();
    auto v = recognize_special_fis(net);
    CHECK_FALSE(v.member);
    CHECK(v.obstruction == "net");
    REQUIRE(v.embedding);
    CHECK(is_induced_embedding(net, v.pattern->graph, *v.embedding));
    CHECK(recognize_special_fis(complement(named::two_p3())).member);

    for (int n = 1; n <= 6; ++n)
        for (auto & g : all_graphs({n})) {
            if (is_threshold(g))
                CHECK(recognize_special_fis(g).member);
        }
}

TEST_CASE("good forbidden subgraphs")
{
    CHECK_FALSE(recognize_good_fis(join(named::k1(), named::three_k2())).member);
    CHECK_FALSE(recognize_good_fis(named::gem()).member);
    for (int n = 1; n <= 4; ++n)
        for (auto & g : all_graphs({n}))
            CHECK(recognize_good_fis(g).member);
    std::vector<int> sizes;
    for (auto & p : good_patterns())
        sizes.push_back(p.pattern.graph.size());
    CHECK(sizes == std::vector<int>{5, 6, 6, 7, 7});
}

TEST_CASE("partitioned forbidden subgraphs")
{
    auto & cat = builtin_catalog(Family::partitioned2t);
    auto entry4 = cat.find("fig5-04");
    REQUIRE(entry4);
    CHECK(entry4->colored() == ColoredGraph{named::two_k2(), {black, black, black, black}});
    CHECK_FALSE(recognize_partitioned_fis(entry4->colored()).member);

    ColoredGraph mixed{named::two_k2(), {black, white, black, white}};
    CHECK_FALSE(recognize_partitioned_fis(mixed).member);
    CHECK_FALSE(eliminate(mixed, Dialect::general(2)));

    ColoredGraph split{named::two_k2(), {black, black, white, white}};
    CHECK(recognize_partitioned_fis(split).member);
    CHECK(eliminate(split, Dialect::general(2)));

    ColoredGraph mono{named::gem(), Coloring(5, white)};
    CHECK(recognize_threshold_fis(mono.graph).member == recognize_partitioned_fis(mono).member);

    CHECK_THROWS_AS(recognize_partitioned_fis(ColoredGraph{named::p4(), {}}), std::domain_error);

    // each pattern appears in both colour orientations
    std::set<CanonicalForm> forms;
    for (auto & p : partitioned_patterns())
        forms.insert(canonical_form(p.pattern));
    for (auto & p : partitioned_patterns())
        CHECK(forms.contains(canonical_form(ColoredGraph{p.pattern.graph, swap_colors(p.pattern.colors)})));
}

TEST_CASE("switch-threshold forbidden subgraphs")
{
    CHECK_FALSE(recognize_switch_threshold_fis(named::c5()).member);
    CHECK_FALSE(recognize_switch_threshold_fis(named::octahedron()).member);
    for (int n = 1; n <= 6; ++n)
        for (auto & g : all_graphs({n})) {
            if (is_threshold(g))
                CHECK(recognize_switch_threshold_fis(g).member);
        }

    // the patterns are the three switching classes, nothing more
    std::set<CanonicalForm> expected;
    for (auto & g : {named::three_k2(), named::c5(), named::c4_plus_2k1()})
        for (auto & f : switching_class(g))
            expected.insert(f);
    std::set<CanonicalForm> got;
    for (auto & p : switch_threshold_patterns())
        got.insert(canonical_form(p.pattern.graph));
    CHECK(got == expected);

    // every drawn graph lies in one of the classes
    for (auto & e : builtin_catalog(Family::switch_threshold).entries)
        CHECK(expected.contains(canonical_form(e.graph)));
}

TEST_CASE("minimal obstruction search")
{
    auto threshold = [](const Graph & g) { return is_threshold(g).has_value(); };
    auto found = find_minimal_obstructions(threshold, 4);
    CHECK(std::set<CanonicalForm>(found.begin(), found.end()) == forms_of(builtin_catalog(Family::threshold)));
    CHECK(find_minimal_obstructions(threshold, 6).size() == 3);

    auto two = find_minimal_obstructions([](const Graph & g) { return is_k_threshold(g, 2).has_value(); }, 6);
    std::set<CanonicalForm> two_set(two.begin(), two.end());
    for (auto & g : {named::gem(), named::three_k2(), named::c5(), cycle_graph(6)})
        CHECK(two_set.contains(canonical_form(g)));
}

TEST_CASE("catalog validation flags a mutated entry")
{
    Catalog cat = builtin_catalog(Family::special2t);
    CHECK(validate_catalog(cat).ok());

    auto & house = *std::find_if(cat.entries.begin(), cat.entries.end(), [](auto & e) { return e.name == "house"; });
    auto [u, v] = house.graph.edges().front();
    house.graph.remove_edge(u, v);
    auto report = validate_catalog(cat);
    CHECK_FALSE(report.ok());
    auto it = std::find_if(report.entries.begin(), report.entries.end(), [](auto & e) { return e.name == "house"; });
    REQUIRE(it != report.entries.end());
    CHECK_FALSE(it->ok());
    CHECK(report.describe().find("house") != std::string::npos);

    Catalog dup{Family::threshold, {builtin_catalog(Family::threshold).entries[0]}};
    dup.entries.push_back(dup.entries[0]);
    dup.entries[1].name = "copy";
    auto dup_report = validate_catalog(dup);
    CHECK(dup_report.isomorphic_pairs.size() == 1);
    CHECK_FALSE(dup_report.ok());
}
