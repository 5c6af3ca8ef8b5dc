#include <kthresh/canonical.hpp>
#include <kthresh/graph6.hpp>
#include <kthresh/kthreshold.hpp>
#include <kthresh/obstructions.hpp>
#include <kthresh/suites.hpp>
#include <kthresh/switching.hpp>
#include <kthresh/threshold.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

using namespace kthresh;

namespace
{
    enum ExitCode
    {
        exit_ok = 0,
        exit_non_member = 1,
        exit_parse = 2,
        exit_disagreement = 3,
        exit_capacity = 4
    };

    struct UsageError : std::runtime_error
    {
        using std::runtime_error::runtime_error;
    };

    struct Outcome
    {
        bool member = false;
        std::vector<std::string> lines;
    };

    auto indent(const std::string & text) -> std::vector<std::string>
    {
        std::vector<std::string> out;
        std::istringstream in(text);
        std::string line;
        while (std::getline(in, line))
            out.push_back("  " + line);
        return out;
    }

    auto set_text(VertexSet s) -> std::string
    {
        std::string out = "{";
        for (int v : s)
            out += (out.size() > 1 ? "," : "") + std::to_string(v);
        return out + "}";
    }

    auto colored_outcome(const std::optional<ColoredCertificate> & cert) -> Outcome
    {
        Outcome o{cert.has_value(), {}};
        if (cert) {
            o.lines.push_back("  coloring " + encode_colors(cert->coloring, std::max(2, cert->sequence.k)));
            for (auto & l : indent(to_text(cert->sequence)))
                o.lines.push_back(l);
        }
        return o;
    }

    auto fis_outcome(const FisVerdict & f) -> Outcome
    {
        Outcome o{f.member, {}};
        if (! f.member) {
            std::string line = "  obstruction " + f.obstruction + " at";
            for (int v : f.embedding->map)
                line += " " + std::to_string(v);
            o.lines.push_back(line);
        }
        return o;
    }

    auto needs_colors(const ColoredGraph & cg) -> void
    {
        if (int(cg.colors.size()) != cg.graph.size())
            throw UsageError("class partitioned needs a colour string on every input line");
    }

    auto run_elimination(const std::string & cls, const ColoredGraph & cg, int k) -> Outcome
    {
        auto & g = cg.graph;
        if (cls == "threshold") {
            auto tree = build_threshold_tree(g);
            Outcome o{tree.has_value(), {}};
            if (tree)
                o.lines = indent(to_text(*tree));
            return o;
        }
        if (cls == "kthreshold")
            return colored_outcome(is_k_threshold(g, k));
        if (cls == "special")
            return colored_outcome(is_special(g));
        if (cls == "restricted")
            return colored_outcome(is_restricted(g));
        if (cls == "extended")
            return colored_outcome(is_extended(g));
        if (cls == "partitioned") {
            needs_colors(cg);
            auto seq = eliminate(cg, Dialect::general(2));
            Outcome o{seq.has_value(), {}};
            if (seq)
                o.lines = indent(to_text(*seq));
            return o;
        }
        if (cls == "good") {
            Outcome o{is_good(g), {}};
            for (int v = 0; v < g.size(); ++v)
                o.lines.push_back("  vertex " + std::to_string(v) + " " + to_string(neighbourhood_shape(g, v)));
            return o;
        }
        if (cls == "switch-threshold") {
            auto sw = switch_to_threshold(g);
            Outcome o{sw.has_value(), {}};
            if (sw)
                o.lines.push_back("  switch " + set_text(sw->set) + " -> " + encode_graph6(sw->target));
            return o;
        }
        if (cls == "switch-cograph")
            return Outcome{switches_to_cograph(g), {}};
        if (cls == "distance-hereditary")
            return Outcome{is_distance_hereditary(g), {}};
        throw UsageError("unknown class '" + cls + "'");
    }

    auto run_fis(const std::string & cls, const ColoredGraph & cg, int k) -> Outcome
    {
        auto & g = cg.graph;
        if (cls == "threshold" || (cls == "kthreshold" && k == 1))
            return fis_outcome(recognize_threshold_fis(g));
        if (cls == "special")
            return fis_outcome(recognize_special_fis(g));
        if (cls == "good")
            return fis_outcome(recognize_good_fis(g));
        if (cls == "partitioned") {
            needs_colors(cg);
            return fis_outcome(recognize_partitioned_fis(cg));
        }
        if (cls == "switch-threshold" || cls == "restricted")
            return fis_outcome(recognize_switch_threshold_fis(g));
        if (cls == "switch-cograph")
            return fis_outcome(recognize_switch_cograph_fis(g));
        throw UsageError("no forbidden-subgraph list for class '" + cls + "'");
    }

    auto read_inputs(const std::vector<std::string> & graphs, const std::string & file) -> std::vector<ColoredGraph>
    {
        if (! graphs.empty()) {
            std::vector<ColoredGraph> out;
            for (auto & line : graphs)
                out.push_back(parse_graph_line(line));
            return out;
        }
        if (! file.empty() && file != "-") {
            std::ifstream in(file);
            if (! in)
                throw UsageError("cannot open " + file);
            return read_graph_lines(in);
        }
        return read_graph_lines(std::cin);
    }

    auto cmd_recognize(const std::string & cls, const std::string & method, int k,
        const std::vector<ColoredGraph> & inputs) -> int
    {
        if (cls == "kthreshold" && k < 1)
            throw UsageError("class kthreshold needs --k");
        int code = exit_ok;
        for (auto & cg : inputs) {
            auto label = format_colored(cg);
            std::optional<Outcome> elim, fis;
            if (method != "fis")
                elim = run_elimination(cls, cg, k);
            if (method != "elimination")
                fis = run_fis(cls, cg, k);

            if (elim && fis && elim->member != fis->member) {
                std::cout << label << ": disagreement (elimination says "
                          << (elim->member ? "member" : "non-member") << ", fis says "
                          << (fis->member ? "member" : "non-member") << ")\n";
                for (auto & l : elim->lines)
                    std::cout << l << "\n";
                for (auto & l : fis->lines)
                    std::cout << l << "\n";
                return exit_disagreement;
            }

            bool member = elim ? elim->member : fis->member;
            std::cout << label << ": " << (member ? "member" : "non-member") << "\n";
            for (auto * o : {elim ? &*elim : nullptr, fis ? &*fis : nullptr})
                if (o)
                    for (auto & l : o->lines)
                        std::cout << l << "\n";
            if (! member)
                code = exit_non_member;
        }
        return code;
    }

    auto cmd_verify(const std::string & suite, int n_max, unsigned threads, const std::string & output) -> int
    {
        auto report = run_suite(suite, n_max > 0 ? n_max : default_nmax(suite), threads);
        auto text = to_text(report);
        if (output.empty())
            std::cout << text;
        else {
            std::ofstream out(output);
            out << text;
        }
        std::cerr << suite << ": " << report.total_disagreements() << " disagreement(s), "
                  << (report.ok() ? "ok" : "FAILED") << "\n";
        return report.ok() ? exit_ok : exit_non_member;
    }

    struct ObstructionFamily
    {
        Family catalog;
        bool colored;
        std::function<bool(const ColoredGraph &)> member;
    };

    auto obstruction_family(const std::string & name) -> ObstructionFamily
    {
        if (name == "threshold")
            return {Family::threshold, false, brute_force_member(Family::threshold)};
        if (name == "special")
            return {Family::special2t, false, brute_force_member(Family::special2t)};
        if (name == "good")
            return {Family::good, false, brute_force_member(Family::good)};
        if (name == "kthreshold2")
            return {Family::two_threshold_listed, false, brute_force_member(Family::two_threshold_listed)};
        if (name == "partitioned")
            return {Family::partitioned2t, true, brute_force_member(Family::partitioned2t)};
        if (name == "switch-threshold")
            return {Family::switch_threshold, false, brute_force_member(Family::switch_threshold)};
        if (name == "switch-cograph")
            return {Family::switch_cograph, false, brute_force_member(Family::switch_cograph)};
        throw UsageError("unknown family '" + name + "'");
    }

    auto cmd_obstructions(const std::string & family, int n_max) -> int
    {
        auto fam = obstruction_family(family);
        std::vector<CanonicalForm> found;
        if (fam.colored)
            found = find_minimal_colored_obstructions(fam.member, n_max);
        else
            found = find_minimal_obstructions(
                [&](const Graph & g) { return fam.member(ColoredGraph{g, {}}); }, n_max);

        // A coloured catalog entry also names its colour swap.
        std::map<CanonicalForm, std::string> names;
        for (auto & e : builtin_catalog(fam.catalog).entries) {
            if (fam.colored) {
                auto cg = e.colored();
                names.emplace(canonical_form(cg), e.name);
                names.emplace(canonical_form(ColoredGraph{cg.graph, swap_colors(cg.colors)}), e.name + "~swapped");
            }
            else
                names.emplace(canonical_form(e.graph), e.name);
        }

        int uncatalogued = 0;
        for (auto & f : found) {
            auto text = fam.colored ? format_colored(f.to_colored()) : encode_graph6(f.to_graph());
            auto it = names.find(f);
            if (it != names.end())
                std::cout << it->second << "\t" << text << "\n";
            else {
                ++uncatalogued;
                std::cout << "uncatalogued\t" << text << "\n";
            }
        }
        std::cout << "# " << found.size() << " minimal obstruction(s) on at most " << n_max << " vertices, "
                  << uncatalogued << " uncatalogued\n";
        return exit_ok;
    }

    auto parse_switch_set(const std::string & text, int n) -> VertexSet
    {
        VertexSet s;
        std::string item;
        std::istringstream in(text);
        while (std::getline(in, item, ',')) {
            if (item.empty())
                continue;
            std::size_t used = 0;
            int v = -1;
            try {
                v = std::stoi(item, &used);
            }
            catch (const std::exception &) {
                used = 0;
            }
            if (used != item.size() || v < 0 || v >= n)
                throw ParseError("bad vertex '" + item + "' in switch set", 0);
            s.insert(v);
        }
        return s;
    }

    auto cmd_switch(const std::string & set, const std::vector<ColoredGraph> & inputs) -> int
    {
        int code = exit_ok;
        for (auto & cg : inputs) {
            auto & g = cg.graph;
            if (set == "search") {
                auto sw = switch_to_threshold(g);
                if (sw)
                    std::cout << encode_graph6(g) << ": switch " << set_text(sw->set) << " -> "
                              << encode_graph6(sw->target) << "\n";
                else {
                    std::cout << encode_graph6(g) << ": none\n";
                    code = exit_non_member;
                }
            }
            else
                std::cout << encode_graph6(switch_graph(g, parse_switch_set(set, g.size()))) << "\n";
        }
        return code;
    }

    auto cmd_catalog(const std::string & family, bool validate) -> int
    {
        std::vector<Family> families;
        if (family == "all")
            families = all_families();
        else
            families.push_back(parse_family(family));

        bool ok = true;
        for (auto f : families) {
            auto & cat = builtin_catalog(f);
            if (! validate) {
                std::cout << format_catalog(cat);
                continue;
            }
            auto v = validate_catalog(cat);
            std::cout << family_name(f) << ": " << cat.entries.size() << " entries, "
                      << (v.ok() ? "all minimal" : "FAILED") << "\n"
                      << v.describe();
            ok = ok && v.ok();
        }
        return ok ? exit_ok : exit_non_member;
    }

    auto apply_bound_override() -> void
    {
        if (auto * env = std::getenv("KTHRESH_CANON_BOUND")) {
            int bound = 0;
            try {
                bound = std::stoi(env);
            }
            catch (const std::exception &) {
                throw UsageError("KTHRESH_CANON_BOUND must be an integer");
            }
            set_canonical_bound(bound);
        }
    }
}

auto main(int argc, char * argv[]) -> int
{
    CLI::App app{"k-threshold graph recognition, certificates and obstruction checks"};
    app.require_subcommand(1);

    std::string cls, method = "elimination", input, suite, family, output, set;
    int k = 0, n_max = 0, obstruction_nmax = 6;
    unsigned threads = 0;
    bool validate = false;
    std::vector<std::string> graphs;

    auto * recognize = app.add_subcommand("recognize", "Decide class membership for each input graph");
    recognize->add_option("--class", cls, "Graph class")
        ->required()
        ->check(CLI::IsMember({"threshold", "kthreshold", "special", "restricted", "extended", "partitioned", "good",
            "switch-threshold", "switch-cograph", "distance-hereditary"}));
    recognize->add_option("--method", method, "Recogniser")->check(CLI::IsMember({"fis", "elimination", "both"}));
    recognize->add_option("--k", k, "Colour count for kthreshold")->check(CLI::Range(1, 9));
    recognize->add_option("--input", input, "File with one graph per line (default stdin)");
    recognize->add_option("graphs", graphs, "Graphs as \"graph6 [colours]\"");

    auto * verify = app.add_subcommand("verify", "Run a verification suite and print its report");
    verify->add_option("--suite", suite, "Suite name")->required()->check(CLI::IsMember(suite_names()));
    verify->add_option("--nmax", n_max, "Largest vertex count (default depends on suite)");
    verify->add_option("--threads", threads, "Worker threads (0 = all cores)");
    verify->add_option("--output", output, "Write the report here instead of stdout");

    auto * obstructions = app.add_subcommand("obstructions", "List minimal obstructions found by exhaustive search");
    obstructions->add_option("--family", family, "Family")
        ->required()
        ->check(CLI::IsMember(
            {"threshold", "special", "good", "kthreshold2", "partitioned", "switch-threshold", "switch-cograph"}));
    obstructions->add_option("--nmax", obstruction_nmax, "Largest vertex count")->capture_default_str();

    auto * switcher = app.add_subcommand("switch", "Seidel switching");
    switcher->add_option("--set", set, "Comma-separated vertex list, or \"search\"")->required();
    switcher->add_option("--input", input, "File with one graph per line (default stdin)");
    switcher->add_option("graphs", graphs, "Graphs in graph6");

    auto * catalog = app.add_subcommand("catalog", "Print or validate the built-in obstruction catalogs");
    catalog->add_option("--family", family, "Catalog family or \"all\"")->default_val("all");
    catalog->add_flag("--validate", validate, "Check every entry is a minimal obstruction");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        auto code = app.exit(e);
        return code == 0 ? exit_ok : exit_parse;
    }

    try {
        apply_bound_override();
        if (*recognize)
            return cmd_recognize(cls, method, k, read_inputs(graphs, input));
        if (*verify)
            return cmd_verify(suite, n_max, threads, output);
        if (*obstructions)
            return cmd_obstructions(family, obstruction_nmax);
        if (*switcher)
            return cmd_switch(set, read_inputs(graphs, input));
        if (*catalog)
            return cmd_catalog(family, validate);
    }
    catch (const ParseError & e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return exit_parse;
    }
    catch (const UsageError & e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_parse;
    }
    catch (const CapacityError & e) {
        std::cerr << "capacity exceeded: " << e.what() << "\n";
        return exit_capacity;
    }
    catch (const std::domain_error & e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_parse;
    }
    return exit_ok;
}
