#include "oracles.hpp"

#include <kthresh/build_sequence.hpp>
#include <kthresh/canonical.hpp>
#include <kthresh/enumerate.hpp>
#include <kthresh/graph6.hpp>
#include <kthresh/kthreshold.hpp>
#include <kthresh/obstructions.hpp>
#include <kthresh/report.hpp>
#include <kthresh/suites.hpp>
#include <kthresh/switching.hpp>
#include <kthresh/threshold.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace kthresh;

namespace
{
    // Wall-clock limits per criterion, in seconds. Criteria without a stated
    // limit get the ten minute ceiling.
    constexpr double limit_threshold = 10;
    constexpr double limit_special = 5 * 60;
    constexpr double limit_good = 2 * 60;
    constexpr double limit_partitioned = 10 * 60;
    constexpr double limit_switching = 10 * 60;
    constexpr double limit_default = 10 * 60;

    constexpr int random_instances_per_dialect = 10'000;
    constexpr int random_graph6_instances = 10'000;
    constexpr int random_graph6_max_n = 32;
    constexpr std::uint64_t seed = 20240601;

    struct Outcome
    {
        bool pass = true;
        std::string detail;
        std::vector<std::string> info;

        auto require(bool ok, const std::string & what) -> void
        {
            if (!ok) {
                pass = false;
                if (!detail.empty())
                    detail += "; ";
                detail += what;
            }
        }
    };

    auto graphs_up_to(int n_max) -> std::vector<Graph>
    {
        std::vector<Graph> out;
        for (int n = 1; n <= n_max; ++n)
            for (auto & g : all_graphs({n}))
                out.push_back(g);
        return out;
    }

    auto disagreements(VerificationReport & r, const std::string & cls) -> std::uint64_t
    {
        return r.counter(cls).disagree;
    }

    auto summary(VerificationReport & r, const std::string & cls) -> std::string
    {
        auto & c = r.counter(cls);
        return cls + " " + std::to_string(c.agree + c.disagree) + " checked, " + std::to_string(c.disagree)
            + " disagreements";
    }

    auto forms_of(const Catalog & cat) -> std::set<CanonicalForm>
    {
        std::set<CanonicalForm> out;
        for (auto & e : cat.entries)
            out.insert(canonical_form(e.graph));
        return out;
    }

    auto oracle_ops(const Dialect & d) -> oracle::Ops
    {
        oracle::Ops ops;
        ops.add = d.allows(Operator::add());
        ops.join_all = d.allows(Operator::join_all());
        for (int c = 0; c < d.colors(); ++c)
            if (d.allows(Operator::join(c)))
                ops.join_colors.push_back(c);
        return ops;
    }

    auto criterion_threshold() -> Outcome
    {
        Outcome o;
        auto r = run_suite("thresholds", 7, 0);
        o.require(disagreements(r, "threshold") == 0, summary(r, "threshold"));
        o.require(disagreements(r, "threshold-certificates") == 0, summary(r, "threshold-certificates"));

        std::uint64_t oracle_mismatch = 0;
        for (auto & g : graphs_up_to(7))
            oracle_mismatch += is_threshold(g).has_value() != oracle::threshold(g);
        o.require(oracle_mismatch == 0, std::to_string(oracle_mismatch) + " differ from the subset definition");

        auto at7 = all_graphs({7}).size();
        o.require(at7 == 1044, "n = 7 has " + std::to_string(at7) + " classes");
        if (o.pass)
            o.detail = summary(r, "threshold") + " (" + std::to_string(at7) + " at n = 7)";
        return o;
    }

    auto criterion_special() -> Outcome
    {
        Outcome o;
        auto r = run_suite("special", 7, 0);
        o.require(disagreements(r, "special") == 0, summary(r, "special"));

        auto found = find_minimal_obstructions([](const Graph & g) { return is_special(g).has_value(); }, 7);
        std::set<CanonicalForm> found_set(found.begin(), found.end());
        auto expected = forms_of(builtin_catalog(Family::special2t));
        o.require(found.size() == 8 && found_set == expected,
            "minimal obstructions: " + std::to_string(found.size()) + " found, catalog has "
                + std::to_string(expected.size()));
        if (o.pass)
            o.detail = summary(r, "special") + "; minimal obstructions up to 7 vertices = the 8 catalogued";
        return o;
    }

    auto criterion_good() -> Outcome
    {
        Outcome o;
        auto r = run_suite("good", 7, 0);
        o.require(disagreements(r, "good") == 0, summary(r, "good"));
        if (o.pass)
            o.detail = summary(r, "good");
        return o;
    }

    auto criterion_partitioned() -> Outcome
    {
        Outcome o;
        auto r = run_suite("partitioned", 6, 0);
        o.require(disagreements(r, "partitioned") == 0, summary(r, "partitioned"));
        if (o.pass)
            o.detail = summary(r, "partitioned");

        // Tally which catalogue entry the forbidden-subgraph side blamed.
        std::map<std::string, int> blamed;
        int fis_rejects = 0;
        for (auto & w : r.counter("partitioned").witnesses) {
            auto it = w.verdicts.find("fis");
            if (it == w.verdicts.end())
                continue;
            auto text = it->second;
            auto open = text.find('(');
            if (open != std::string::npos) {
                ++fis_rejects;
                auto name = text.substr(open + 1, text.size() - open - 2);
                auto tilde = name.find('~');
                blamed[tilde == std::string::npos ? name : name.substr(0, tilde)]++;
            }
        }
        if (!blamed.empty()) {
            std::string list;
            for (auto & [name, count] : blamed)
                list += (list.empty() ? "" : ", ") + name + " x" + std::to_string(count);
            o.info.push_back(std::to_string(fis_rejects) + " of "
                + std::to_string(r.counter("partitioned").disagree)
                + " disagreements are graphs accepted by elimination but containing " + list);
        }

        // The same comparison with every entry elimination accepts left out.
        auto accepted = brute_force_member(Family::partitioned2t);
        std::vector<std::string> dropped;
        for (auto & e : builtin_catalog(Family::partitioned2t).entries)
            if (accepted(e.colored()))
                dropped.push_back(e.name);
        if (!dropped.empty()) {
            std::vector<NamedPattern> kept;
            for (auto & p : partitioned_patterns()) {
                auto base = p.name.substr(0, p.name.find('~'));
                if (std::find(dropped.begin(), dropped.end(), base) == dropped.end())
                    kept.push_back(p);
            }
            int residual = 0, checked = 0;
            for (int n = 1; n <= 6; ++n)
                for (auto & cg : all_colored_graphs({n, true})) {
                    ++checked;
                    residual += eliminate(cg, Dialect::general(2)).has_value() != recognize_by_patterns(cg, kept).member;
                }
            std::string names;
            for (auto & d : dropped)
                names += (names.empty() ? "" : ", ") + d;
            o.info.push_back("without " + names + ": " + std::to_string(checked) + " checked, "
                + std::to_string(residual) + " disagreements");
        }
        return o;
    }

    auto criterion_switching() -> Outcome
    {
        Outcome o;
        auto r = run_suite("switching", 7, 0);
        o.require(disagreements(r, "switch-threshold") == 0, summary(r, "switch-threshold"));

        std::uint64_t oracle_mismatch = 0;
        for (auto & g : graphs_up_to(7))
            oracle_mismatch += switch_to_threshold(g).has_value() != oracle::switches_to_threshold(g);
        o.require(oracle_mismatch == 0, std::to_string(oracle_mismatch) + " differ from trying every switch");
        if (o.pass)
            o.detail = summary(r, "switch-threshold") + " (search / restricted elimination / patterns)";
        return o;
    }

    auto mutate(Catalog cat) -> Catalog
    {
        // An extra isolated vertex keeps the entry a non-member but makes
        // one deletion a non-member too.
        auto & e = cat.entries.front();
        e.graph = disjoint_union(e.graph, Graph(1));
        if (e.coloring)
            e.coloring->push_back(black);
        cat.entries.resize(1);
        return cat;
    }

    auto criterion_catalogs() -> Outcome
    {
        Outcome o;
        int entries = 0;
        for (auto f : all_families()) {
            auto & cat = builtin_catalog(f);
            auto v = validate_catalog(cat);
            for (auto & e : v.entries) {
                ++entries;
                if (!e.rejected)
                    o.require(false, family_name(f) + "/" + e.name + " accepted");
                else if (!e.bad_deletions.empty())
                    o.require(false, family_name(f) + "/" + e.name + " not minimal ("
                        + std::to_string(e.bad_deletions.size()) + " deletions rejected)");
            }
            for (auto & [a, b] : v.isomorphic_pairs)
                o.info.push_back(family_name(f) + ": " + a + " and " + b + " are isomorphic");

            auto control = validate_catalog(mutate(cat));
            o.require(!control.entries.front().ok(), family_name(f) + " mutated control passed validation");
        }
        if (o.pass)
            o.detail = std::to_string(entries) + " entries minimal; every mutated control rejected";
        return o;
    }

    auto criterion_counts() -> Outcome
    {
        Outcome o;
        auto r = run_suite("counts", 8, 0);
        o.require(r.ok(), summary(r, "graph-count") + ", " + summary(r, "threshold-count"));

        constexpr std::size_t expected[] = {1, 2, 4, 11, 34, 156, 1044};
        for (int n = 1; n <= 7; ++n) {
            auto found = all_graphs({n}).size();
            o.require(found == expected[n - 1], "n = " + std::to_string(n) + ": " + std::to_string(found) + " graphs");
        }
        for (int n = 1; n <= 8; ++n) {
            std::uint64_t threshold = 0;
            for (auto & g : all_graphs({n}))
                threshold += oracle::threshold(g);
            o.require(threshold == (std::uint64_t{1} << (n - 1)),
                "n = " + std::to_string(n) + ": " + std::to_string(threshold) + " threshold graphs");
        }
        if (o.pass)
            o.detail = "graphs 1 2 4 11 34 156 1044; threshold 2^(n-1) for n = 1..8";
        return o;
    }

    auto random_sequence(const Dialect & d, std::mt19937_64 & rng) -> BuildSequence
    {
        int n = 1 + int(rng() % 20);
        std::vector<int> vertices(n);
        std::iota(vertices.begin(), vertices.end(), 0);
        std::shuffle(vertices.begin(), vertices.end(), rng);
        auto ops = d.operators();
        BuildSequence seq;
        seq.k = d.colors();
        for (int i = 0; i < n; ++i)
            seq.steps.push_back(
                Step{vertices[i], int(rng() % std::uint64_t(d.colors())), ops[rng() % ops.size()]});
        return seq;
    }

    auto criterion_structure() -> Outcome
    {
        Outcome o;
        std::mt19937_64 rng(seed);

        std::vector<Dialect> dialects{Dialect::general(1), Dialect::general(2), Dialect::general(3),
            Dialect::special(), Dialect::restricted(), Dialect::extended()};
        for (auto & d : dialects) {
            int failures = 0;
            for (int i = 0; i < random_instances_per_dialect; ++i) {
                auto seq = random_sequence(d, rng);
                auto cg = evaluate(seq);
                if (cg != oracle::evaluate(seq)) {
                    ++failures;
                    continue;
                }
                auto again = eliminate(cg, d);
                if (!again || evaluate(*again) != cg || !conforms(*again, d))
                    ++failures;
            }
            o.require(failures == 0, d.name() + ": " + std::to_string(failures) + " round-trip failures");
        }

        int hereditary_failures = 0;
        for (auto & g : graphs_up_to(6))
            if (is_k_threshold(g, 2))
                for (int v = 0; v < g.size() && g.size() > 1; ++v)
                    hereditary_failures += !is_k_threshold(delete_vertex(g, v), 2).has_value();
        o.require(hereditary_failures == 0, std::to_string(hereditary_failures) + " deletions leave 2-threshold");

        auto all7 = graphs_up_to(7);
        int complement_failures = 0;
        for (auto & g : all7) {
            auto h = complement(g);
            complement_failures += is_restricted(g).has_value() != is_restricted(h).has_value();
            complement_failures += is_extended(g).has_value() != is_extended(h).has_value();
        }
        o.require(complement_failures == 0, std::to_string(complement_failures) + " complement mismatches");

        int cutrank_failures = 0;
        for (int k = 1; k <= 3; ++k)
            for (auto & g : all7) {
                auto cert = is_k_threshold(g, k);
                if (!cert)
                    continue;
                auto order = cert->sequence.vertex_order();
                for (int i = 1; i < g.size(); ++i) {
                    std::vector<std::vector<int>> m;
                    for (int a = 0; a < i; ++a) {
                        std::vector<int> row;
                        for (int b = i; b < g.size(); ++b)
                            row.push_back(g.adjacent(order[a], order[b]));
                        m.push_back(row);
                    }
                    if (oracle::gf2_rank(m) > k)
                        ++cutrank_failures;
                }
                if (cutrank_profile(g, order) > k)
                    ++cutrank_failures;
            }
        o.require(cutrank_failures == 0, std::to_string(cutrank_failures) + " cuts above k");

        // Elimination against the subset definition on a sample of the round trips.
        int definition_failures = 0;
        for (auto & d : dialects)
            for (int i = 0; i < 200; ++i) {
                auto seq = random_sequence(d, rng);
                seq.steps.resize(std::min<std::size_t>(seq.steps.size(), 8));
                std::vector<int> order;
                for (auto & s : seq.steps)
                    order.push_back(s.vertex);
                auto sorted = order;
                std::sort(sorted.begin(), sorted.end());
                for (auto & s : seq.steps)
                    s.vertex = int(std::lower_bound(sorted.begin(), sorted.end(), s.vertex) - sorted.begin());
                definition_failures += !oracle::colored_member(evaluate(seq), oracle_ops(d));
            }
        o.require(definition_failures == 0, std::to_string(definition_failures) + " generated graphs fail the definition");

        if (o.pass)
            o.detail = std::to_string(random_instances_per_dialect)
                + " round trips per dialect; hereditary n <= 6; complement closed n <= 7; cutrank <= k for k = 1..3";
        return o;
    }

    auto criterion_distance_hereditary() -> Outcome
    {
        Outcome o;
        int special = 0, not_dh = 0;
        for (auto & g : graphs_up_to(7))
            if (is_special(g)) {
                ++special;
                not_dh += !is_distance_hereditary(g);
            }
        o.require(not_dh == 0, std::to_string(not_dh) + " special graphs not distance-hereditary");

        int oracle_mismatch = 0, checked = 0;
        for (auto & g : graphs_up_to(6)) {
            ++checked;
            oracle_mismatch += is_distance_hereditary(g) != oracle::distance_hereditary(g);
        }
        o.require(oracle_mismatch == 0, std::to_string(oracle_mismatch) + " differ from the distance oracle");
        if (o.pass)
            o.detail = std::to_string(special) + " special graphs distance-hereditary; " + std::to_string(checked)
                + " graphs agree with the distance oracle";
        return o;
    }

    auto criterion_graph6() -> Outcome
    {
        Outcome o;
        int failures = 0, checked = 0;
        auto round_trip = [&](const Graph & g) {
            ++checked;
            auto text = encode_graph6(g);
            if (decode_graph6(text) != g || encode_graph6(decode_graph6(text)) != text)
                ++failures;
        };
        for (int n = 1; n <= 8; ++n)
            for (auto & g : all_graphs({n}))
                round_trip(g);
        std::mt19937_64 rng(seed + 1);
        std::uniform_real_distribution<double> density(0.0, 1.0);
        for (int i = 0; i < random_graph6_instances; ++i)
            round_trip(oracle::random_graph(1 + int(rng() % random_graph6_max_n), density(rng), rng));
        o.require(failures == 0, std::to_string(failures) + " of " + std::to_string(checked) + " failed");
        if (o.pass)
            o.detail = std::to_string(checked) + " graphs round-trip";
        return o;
    }

    auto listed_two_threshold_info() -> std::vector<std::string>
    {
        std::vector<std::string> out;
        auto listed = forms_of(builtin_catalog(Family::two_threshold_listed));
        auto found = find_minimal_obstructions([](const Graph & g) { return is_k_threshold(g, 2).has_value(); }, 7);
        int missing = 0;
        for (auto & f : found)
            if (!listed.contains(f)) {
                ++missing;
                out.push_back("uncatalogued minimal 2-threshold obstruction " + encode_graph6(f.to_graph()));
            }
        out.push_back("minimal 2-threshold obstructions on at most 7 vertices: " + std::to_string(found.size())
            + " found, " + std::to_string(listed.size()) + " distinct listed, " + std::to_string(missing)
            + " uncatalogued");
        return out;
    }

    struct Criterion
    {
        int id;
        std::string name;
        double limit;
        std::function<Outcome()> run;
    };
}

auto main() -> int
{
    std::vector<Criterion> criteria{
        {1, "threshold equivalence", limit_threshold, criterion_threshold},
        {2, "special characterisation", limit_special, criterion_special},
        {3, "good characterisation", limit_good, criterion_good},
        {4, "partitioned characterisation", limit_partitioned, criterion_partitioned},
        {5, "switching characterisation", limit_switching, criterion_switching},
        {6, "catalog minimality", limit_default, criterion_catalogs},
        {7, "counts", limit_default, criterion_counts},
        {8, "structural properties", limit_default, criterion_structure},
        {9, "special implies distance-hereditary", limit_default, criterion_distance_hereditary},
        {10, "graph6 round trip", limit_default, criterion_graph6},
    };

    int failed = 0;
    for (auto & c : criteria) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception & e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (elapsed > c.limit)
            o.require(false, "over time limit");
        failed += !o.pass;
        std::printf("criterion %d %s: %s (%.2f s, limit %.0f s) %s\n", c.id, c.name.c_str(),
            o.pass ? "PASS" : "FAIL", elapsed, c.limit, o.detail.c_str());
        for (auto & line : o.info)
            std::printf("  info: %s\n", line.c_str());
        if (c.id == 6)
            for (auto & line : listed_two_threshold_info())
                std::printf("  info: %s\n", line.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", int(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
