#include <kthresh/canonical.hpp>
#include <kthresh/enumerate.hpp>
#include <kthresh/graph6.hpp>
#include <kthresh/kthreshold.hpp>
#include <kthresh/obstructions.hpp>
#include <kthresh/suites.hpp>
#include <kthresh/switching.hpp>
#include <kthresh/threshold.hpp>

#include <algorithm>
#include <chrono>
#include <thread>

namespace kthresh
{
    namespace
    {
        struct Verdict
        {
            std::string method;
            bool member;
            std::string detail;
        };

        auto verdict_text(const Verdict & v) -> std::string
        {
            auto text = v.member ? std::string("member") : std::string("non-member");
            return v.detail.empty() ? text : text + " (" + v.detail + ")";
        }

        auto fis_verdict(const std::string & method, const FisVerdict & f) -> Verdict
        {
            return Verdict{method, f.member, f.obstruction};
        }

        auto tally(VerificationReport & r, const std::string & name, const ColoredGraph & g,
            const std::vector<Verdict> & verdicts) -> void
        {
            auto & c = r.counter(name);
            bool agree = std::all_of(verdicts.begin(), verdicts.end(),
                [&](const Verdict & v) { return v.member == verdicts.front().member; });
            if (agree) {
                ++c.agree;
                return;
            }
            ++c.disagree;
            Witness w{encode_graph6(g.graph), g.colors.empty() ? "" : encode_colors(g.colors), {}};
            for (auto & v : verdicts)
                w.verdicts[v.method] = verdict_text(v);
            c.witnesses.push_back(std::move(w));
        }

        auto witness_key(const Witness & w) -> CanonicalForm
        {
            if (w.graph6.empty())
                return CanonicalForm{};
            auto g = decode_graph6(w.graph6);
            if (w.colors.empty())
                return canonical_form(g);
            return canonical_form(ColoredGraph{g, decode_colors(w.colors, g.size())});
        }

        auto sort_witnesses(VerificationReport & r) -> void
        {
            for (auto & c : r.classes)
                std::stable_sort(c.witnesses.begin(), c.witnesses.end(), [](const Witness & a, const Witness & b) {
                    auto ka = witness_key(a), kb = witness_key(b);
                    if (ka != kb)
                        return ka < kb;
                    return a.verdicts < b.verdicts;
                });
        }

        template <typename Item, typename Check>
        auto run_over(const std::vector<Item> & items, unsigned threads, Check check) -> VerificationReport
        {
            if (threads == 0)
                threads = std::max(1u, std::thread::hardware_concurrency());
            threads = std::min<unsigned>(threads, std::max<std::size_t>(1, items.size()));

            std::vector<VerificationReport> parts(threads);
            auto work = [&](unsigned t) {
                for (std::size_t i = t; i < items.size(); i += threads)
                    check(items[i], parts[t]);
            };
            if (threads == 1)
                work(0);
            else {
                std::vector<std::jthread> pool;
                for (unsigned t = 0; t < threads; ++t)
                    pool.emplace_back(work, t);
            }

            VerificationReport out;
            out.n_max = 0;
            for (auto & p : parts) {
                p.n_min = out.n_min;
                out.merge(p);
            }
            return out;
        }

        auto graphs_up_to(int n_max) -> std::vector<ColoredGraph>
        {
            std::vector<ColoredGraph> out;
            for (int n = 1; n <= n_max; ++n)
                for (auto & g : all_graphs({n}))
                    out.push_back(ColoredGraph{g, {}});
            return out;
        }

        auto colored_graphs_up_to(int n_max) -> std::vector<ColoredGraph>
        {
            std::vector<ColoredGraph> out;
            for (int n = 1; n <= n_max; ++n)
                for (auto & g : all_colored_graphs({n, true}))
                    out.push_back(g);
            return out;
        }

        auto suite_thresholds(int n_max, unsigned threads) -> VerificationReport
        {
            return run_over(graphs_up_to(n_max), threads, [](const ColoredGraph & cg, VerificationReport & r) {
                auto cert = is_threshold(cg.graph);
                tally(r, "threshold", cg,
                    {{"elimination", cert.has_value(), ""}, fis_verdict("fis", recognize_threshold_fis(cg.graph))});

                bool certified = true;
                if (cert) {
                    auto tree = build_threshold_tree(cg.graph);
                    auto order = threshold_order(cg.graph);
                    certified = check_certificate(cg.graph, *cert) && tree && evaluate(*tree).graph == cg.graph
                        && order && is_threshold_order(cg.graph, *order);
                }
                tally(r, "threshold-certificates", cg,
                    {{"recognised", cert.has_value(), ""}, {"certified", cert.has_value() && certified, ""}});
            });
        }

        auto suite_special(int n_max, unsigned threads) -> VerificationReport
        {
            return run_over(graphs_up_to(n_max), threads, [](const ColoredGraph & cg, VerificationReport & r) {
                bool special = is_special(cg.graph).has_value();
                tally(r, "special", cg,
                    {{"elimination", special, ""}, fis_verdict("fis", recognize_special_fis(cg.graph))});
                if (special)
                    tally(r, "special-distance-hereditary", cg,
                        {{"special", true, ""}, {"distance-hereditary", is_distance_hereditary(cg.graph), ""}});
            });
        }

        auto suite_good(int n_max, unsigned threads) -> VerificationReport
        {
            return run_over(graphs_up_to(n_max), threads, [](const ColoredGraph & cg, VerificationReport & r) {
                tally(r, "good", cg,
                    {{"neighbourhoods", is_good(cg.graph), ""}, fis_verdict("fis", recognize_good_fis(cg.graph))});
            });
        }

        auto suite_partitioned(int n_max, unsigned threads) -> VerificationReport
        {
            return run_over(colored_graphs_up_to(n_max), threads, [](const ColoredGraph & cg, VerificationReport & r) {
                tally(r, "partitioned", cg,
                    {{"elimination", eliminate(cg, Dialect::general(2)).has_value(), ""},
                        fis_verdict("fis", recognize_partitioned_fis(cg))});
            });
        }

        auto suite_switching(int n_max, unsigned threads) -> VerificationReport
        {
            return run_over(graphs_up_to(n_max), threads, [](const ColoredGraph & cg, VerificationReport & r) {
                auto sw = switch_to_threshold(cg.graph);
                tally(r, "switch-threshold", cg,
                    {{"switch-search", sw.has_value(), sw ? "set " + std::to_string(sw->set.size()) : ""},
                        {"restricted-elimination", is_restricted(cg.graph).has_value(), ""},
                        fis_verdict("fis", recognize_switch_threshold_fis(cg.graph))});
                tally(r, "switch-cograph", cg,
                    {{"switch-search", switches_to_cograph(cg.graph), ""},
                        fis_verdict("fis", recognize_switch_cograph_fis(cg.graph))});
            });
        }

        auto suite_catalogs(int n_max) -> VerificationReport
        {
            VerificationReport r;
            for (auto f : all_families()) {
                auto & cat = builtin_catalog(f);
                auto v = validate_catalog(cat);
                for (auto & e : v.entries) {
                    CatalogResult c{family_name(f), e.name, e.rejected, e.bad_deletions, {}};
                    for (auto & [a, b] : v.isomorphic_pairs) {
                        if (a == e.name)
                            c.duplicates.push_back(b);
                        if (b == e.name)
                            c.duplicates.push_back(a);
                    }
                    r.catalogs.push_back(std::move(c));
                }
            }

            // The listed 2-threshold obstructions are not claimed complete;
            // report every minimal one found that the list lacks.
            int limit = std::min(n_max, 7);
            std::vector<CanonicalForm> listed;
            for (auto & e : builtin_catalog(Family::two_threshold_listed).entries)
                listed.push_back(canonical_form(e.graph));
            auto found = find_minimal_obstructions(
                [](const Graph & g) { return is_k_threshold(g, 2).has_value(); }, limit);
            int missing = 0;
            for (auto & f : found)
                if (std::find(listed.begin(), listed.end(), f) == listed.end()) {
                    ++missing;
                    r.notes.push_back("minimal 2-threshold obstruction not in the listed catalog: "
                        + encode_graph6(f.to_graph()));
                }
            r.notes.push_back("minimal 2-threshold obstructions on at most " + std::to_string(limit)
                + " vertices: " + std::to_string(found.size()) + " found, " + std::to_string(missing)
                + " not listed");
            return r;
        }

        // Unlabelled graphs on n vertices, n = 1..8.
        constexpr std::uint64_t graph_counts[] = {1, 2, 4, 11, 34, 156, 1044, 12346};

        auto count_witness(int n, std::uint64_t expected, std::uint64_t found) -> Witness
        {
            return Witness{"", "",
                {{"n", std::to_string(n)}, {"expected", std::to_string(expected)}, {"found", std::to_string(found)}}};
        }

        auto record_count(VerificationReport & r, const std::string & name, int n, std::uint64_t expected,
            std::uint64_t found) -> void
        {
            auto & c = r.counter(name);
            if (expected == found)
                ++c.agree;
            else {
                ++c.disagree;
                c.witnesses.push_back(count_witness(n, expected, found));
            }
        }

        auto suite_counts(int n_max) -> VerificationReport
        {
            VerificationReport r;
            for (int n = 1; n <= n_max; ++n) {
                auto generated = all_graphs({n}).size();
                record_count(r, "graph-count", n, graph_counts[n - 1], generated);
                if (n <= 7)
                    record_count(r, "graph-count-baseline", n, all_graphs_baseline(n).size(), generated);
                record_count(r, "threshold-count", n, std::uint64_t{1} << (n - 1),
                    count_family([](const Graph & g) { return is_threshold(g).has_value(); }, n));
            }
            return r;
        }
    }

    auto suite_names() -> const std::vector<std::string> &
    {
        static const std::vector<std::string> names{
            "thresholds", "special", "good", "partitioned", "switching", "catalogs", "counts"};
        return names;
    }

    auto default_nmax(std::string_view suite) -> int
    {
        if (suite == "partitioned")
            return 6;
        if (suite == "counts")
            return 8;
        return 7;
    }

    auto run_suite(std::string_view suite, int n_max, unsigned threads) -> VerificationReport
    {
        if (n_max < 1)
            throw std::domain_error("n_max must be at least 1");
        if (n_max > enumeration_bound)
            throw CapacityError("suites enumerate at most " + std::to_string(enumeration_bound) + " vertices");

        auto start = std::chrono::steady_clock::now();
        VerificationReport r;
        if (suite == "thresholds")
            r = suite_thresholds(n_max, threads);
        else if (suite == "special")
            r = suite_special(n_max, threads);
        else if (suite == "good")
            r = suite_good(n_max, threads);
        else if (suite == "partitioned")
            r = suite_partitioned(n_max, threads);
        else if (suite == "switching")
            r = suite_switching(n_max, threads);
        else if (suite == "catalogs")
            r = suite_catalogs(n_max);
        else if (suite == "counts")
            r = suite_counts(n_max);
        else
            throw std::domain_error("unknown suite '" + std::string(suite) + "'");

        r.suite = std::string(suite);
        r.n_min = 1;
        r.n_max = n_max;
        sort_witnesses(r);
        r.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return r;
    }
}
