#include <kthresh/enumerate.hpp>
#include <kthresh/graph6.hpp>
#include <kthresh/kthreshold.hpp>
#include <kthresh/named_graphs.hpp>
#include <kthresh/obstructions.hpp>
#include <kthresh/switching.hpp>
#include <kthresh/threshold.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <unordered_set>

namespace kthresh::catalog_data
{
    extern const std::string_view threshold;
    extern const std::string_view special2t;
    extern const std::string_view good;
    extern const std::string_view two_threshold_listed;
    extern const std::string_view partitioned2t;
    extern const std::string_view switch_threshold;
    extern const std::string_view switch_cograph;
}

namespace kthresh
{
    auto all_families() -> const std::vector<Family> &
    {
        static const std::vector<Family> families{Family::threshold, Family::special2t, Family::good,
            Family::two_threshold_listed, Family::partitioned2t, Family::switch_threshold, Family::switch_cograph};
        return families;
    }

    auto family_name(Family f) -> std::string
    {
        switch (f) {
        case Family::threshold: return "threshold";
        case Family::special2t: return "special2t";
        case Family::good: return "good";
        case Family::two_threshold_listed: return "two_threshold_listed";
        case Family::partitioned2t: return "partitioned2t";
        case Family::switch_threshold: return "switch_threshold";
        case Family::switch_cograph: return "switch_cograph";
        }
        return "?";
    }

    auto parse_family(std::string_view name) -> Family
    {
        for (auto f : all_families())
            if (family_name(f) == name)
                return f;
        throw std::domain_error("unknown family '" + std::string(name) + "'");
    }

    auto family_is_colored(Family f) -> bool
    {
        return f == Family::partitioned2t;
    }

    auto CatalogEntry::colored() const -> ColoredGraph
    {
        return ColoredGraph{graph, coloring.value_or(Coloring{})};
    }

    auto Catalog::find(std::string_view name) const -> const CatalogEntry *
    {
        for (auto & e : entries)
            if (e.name == name)
                return &e;
        return nullptr;
    }

    auto parse_catalog(Family family, std::string_view text) -> Catalog
    {
        Catalog cat{family, {}};
        std::istringstream in{std::string(text)};
        std::string line;
        std::size_t offset = 0;
        while (std::getline(in, line)) {
            auto line_start = offset;
            offset += line.size() + 1;
            if (line.empty() || line[0] == '#')
                continue;

            std::vector<std::string> fields;
            std::istringstream cols(line);
            std::string field;
            while (std::getline(cols, field, '\t'))
                fields.push_back(field);
            if (fields.size() != 4)
                throw ParseError("catalog line needs four tab-separated fields", line_start);

            CatalogEntry e{fields[0], Graph(1), std::nullopt, fields[3]};
            auto g6_start = line_start + fields[0].size() + 1;
            try {
                e.graph = decode_graph6(fields[1]);
            }
            catch (const ParseError & err) {
                throw ParseError("bad graph6 in catalog entry " + e.name, g6_start + err.offset());
            }
            if (fields[2] != "-")
                e.coloring = decode_colors(fields[2], e.graph.size());
            cat.entries.push_back(std::move(e));
        }
        return cat;
    }

    auto format_catalog(const Catalog & cat) -> std::string
    {
        std::string out;
        for (auto & e : cat.entries)
            out += e.name + "\t" + encode_graph6(e.graph) + "\t" + (e.coloring ? encode_colors(*e.coloring) : "-")
                + "\t" + e.source + "\n";
        return out;
    }

    auto builtin_catalog_text(Family family) -> std::string_view
    {
        switch (family) {
        case Family::threshold: return catalog_data::threshold;
        case Family::special2t: return catalog_data::special2t;
        case Family::good: return catalog_data::good;
        case Family::two_threshold_listed: return catalog_data::two_threshold_listed;
        case Family::partitioned2t: return catalog_data::partitioned2t;
        case Family::switch_threshold: return catalog_data::switch_threshold;
        case Family::switch_cograph: return catalog_data::switch_cograph;
        }
        return {};
    }

    auto builtin_catalog(Family family) -> const Catalog &
    {
        static const auto catalogs = [] {
            std::map<Family, Catalog> out;
            for (auto f : all_families())
                out.emplace(f, parse_catalog(f, builtin_catalog_text(f)));
            return out;
        }();
        return catalogs.at(family);
    }

    auto brute_force_member(Family family) -> std::function<bool(const ColoredGraph &)>
    {
        switch (family) {
        case Family::threshold: return [](const ColoredGraph & g) { return is_threshold(g.graph).has_value(); };
        case Family::special2t: return [](const ColoredGraph & g) { return is_special(g.graph).has_value(); };
        case Family::good: return [](const ColoredGraph & g) { return is_good(g.graph); };
        case Family::two_threshold_listed:
            return [](const ColoredGraph & g) { return is_k_threshold(g.graph, 2).has_value(); };
        case Family::partitioned2t:
            return [](const ColoredGraph & g) { return eliminate(g, Dialect::general(2)).has_value(); };
        case Family::switch_threshold:
            return [](const ColoredGraph & g) { return switch_to_threshold(g.graph).has_value(); };
        case Family::switch_cograph: return [](const ColoredGraph & g) { return switches_to_cograph(g.graph); };
        }
        throw std::domain_error("unknown family");
    }

    auto swap_colors(const Coloring & c) -> Coloring
    {
        Coloring out;
        for (int x : c)
            out.push_back(1 - x);
        return out;
    }

    auto recognize_by_patterns(const ColoredGraph & host, const std::vector<NamedPattern> & patterns) -> FisVerdict
    {
        bool colored = ! host.colors.empty();
        for (auto & p : patterns) {
            auto e = colored && ! p.pattern.colors.empty()
                ? find_induced_embedding(host.graph, p.pattern.graph, &host.colors, &p.pattern.colors)
                : find_induced_embedding(host.graph, p.pattern.graph);
            if (e)
                return FisVerdict{false, p.name, p.pattern, *e};
        }
        return FisVerdict{};
    }

    namespace
    {
        auto patterns_from(Family family) -> std::vector<NamedPattern>
        {
            std::vector<NamedPattern> out;
            for (auto & e : builtin_catalog(family).entries)
                out.push_back({e.name, e.colored()});
            return out;
        }

        auto uncolored(const Graph & g) -> ColoredGraph
        {
            return ColoredGraph{g, {}};
        }
    }

    auto threshold_patterns() -> const std::vector<NamedPattern> &
    {
        static const auto patterns = patterns_from(Family::threshold);
        return patterns;
    }

    auto special_patterns() -> const std::vector<NamedPattern> &
    {
        static const auto patterns = patterns_from(Family::special2t);
        return patterns;
    }

    auto good_patterns() -> const std::vector<NamedPattern> &
    {
        // vertex 0 of join(K1, H) is the universal vertex
        static const std::vector<NamedPattern> patterns = [] {
            auto c4_k1 = join(named::k1(), disjoint_union(named::c4(), named::k1()));
            return std::vector<NamedPattern>{
                {"gem", uncolored(named::gem())},
                {"wheel4+hub-pendant", uncolored(c4_k1)},
                {"butterfly+universal", uncolored(local_complement(c4_k1, 0))},
                {"3K2+universal", uncolored(join(named::k1(), named::three_k2()))},
                {"octahedron+universal", uncolored(join(named::k1(), named::octahedron()))},
            };
        }();
        return patterns;
    }

    auto partitioned_patterns() -> const std::vector<NamedPattern> &
    {
        static const auto patterns = [] {
            std::vector<NamedPattern> out;
            for (auto & e : builtin_catalog(Family::partitioned2t).entries) {
                auto cg = e.colored();
                out.push_back({e.name, cg});
                ColoredGraph swapped{cg.graph, swap_colors(cg.colors)};
                if (! is_isomorphic(cg, swapped))
                    out.push_back({e.name + "~swapped", swapped});
            }
            return out;
        }();
        return patterns;
    }

    auto switch_threshold_patterns() -> const std::vector<NamedPattern> &
    {
        static const auto patterns = [] {
            std::map<CanonicalForm, std::string> drawn;
            for (auto & e : builtin_catalog(Family::switch_threshold).entries)
                drawn.emplace(canonical_form(e.graph), e.name);

            std::set<CanonicalForm> seen;
            std::vector<NamedPattern> out;
            std::vector<std::pair<std::string, Graph>> seeds{
                {"3K2", named::three_k2()}, {"C5", named::c5()}, {"C4+2K1", named::c4_plus_2k1()}};
            for (auto & [seed, g] : seeds)
                for (auto & f : switching_class(g)) {
                    if (! seen.insert(f).second)
                        continue;
                    auto it = drawn.find(f);
                    auto name = it != drawn.end() ? it->second : "switch-of-" + seed + ":" + f.to_string();
                    out.push_back({name, uncolored(f.to_graph())});
                }
            return out;
        }();
        return patterns;
    }

    auto recognize_threshold_fis(const Graph & g) -> FisVerdict
    {
        return recognize_by_patterns(uncolored(g), threshold_patterns());
    }

    auto recognize_special_fis(const Graph & g) -> FisVerdict
    {
        return recognize_by_patterns(uncolored(g), special_patterns());
    }

    auto recognize_good_fis(const Graph & g) -> FisVerdict
    {
        return recognize_by_patterns(uncolored(g), good_patterns());
    }

    auto recognize_partitioned_fis(const ColoredGraph & cg) -> FisVerdict
    {
        if (int(cg.colors.size()) != cg.graph.size())
            throw std::domain_error("partitioned recognition needs a colouring");
        for (int c : cg.colors)
            if (c != black && c != white)
                throw std::domain_error("partitioned recognition needs a black/white colouring");
        return recognize_by_patterns(cg, partitioned_patterns());
    }

    auto recognize_switch_threshold_fis(const Graph & g) -> FisVerdict
    {
        return recognize_by_patterns(uncolored(g), switch_threshold_patterns());
    }

    auto recognize_switch_cograph_fis(const Graph & g) -> FisVerdict
    {
        static const auto patterns = patterns_from(Family::switch_cograph);
        return recognize_by_patterns(uncolored(g), patterns);
    }

    auto find_minimal_obstructions(const std::function<bool(const Graph &)> & member, int n_max)
        -> std::vector<CanonicalForm>
    {
        std::vector<CanonicalForm> out;
        std::unordered_set<CanonicalForm, CanonicalFormHash> previous_members;
        for (int n = 1; n <= n_max; ++n) {
            std::unordered_set<CanonicalForm, CanonicalFormHash> members;
            for (auto & f : canonical_forms(n)) {
                auto g = f.to_graph();
                if (member(g)) {
                    members.insert(f);
                    continue;
                }
                bool minimal = true;
                for (int v = 0; v < n && minimal && n > 1; ++v)
                    minimal = previous_members.contains(canonical_form(delete_vertex(g, v)));
                if (minimal)
                    out.push_back(f);
            }
            previous_members = std::move(members);
        }
        return out;
    }

    auto find_minimal_colored_obstructions(const std::function<bool(const ColoredGraph &)> & member, int n_max)
        -> std::vector<CanonicalForm>
    {
        std::vector<CanonicalForm> out;
        std::unordered_set<CanonicalForm, CanonicalFormHash> previous_members;
        for (int n = 1; n <= n_max; ++n) {
            std::unordered_set<CanonicalForm, CanonicalFormHash> members;
            for (auto & cg : all_colored_graphs({n, true})) {
                auto f = canonical_form(cg);
                if (member(cg)) {
                    members.insert(f);
                    continue;
                }
                bool minimal = true;
                for (int v = 0; v < n && minimal && n > 1; ++v) {
                    auto w = cg.graph.vertices();
                    w.erase(v);
                    minimal = previous_members.contains(canonical_form(induced(cg, w)));
                }
                if (minimal)
                    out.push_back(f);
            }
            previous_members = std::move(members);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    auto CatalogValidation::ok() const -> bool
    {
        return isomorphic_pairs.empty()
            && std::all_of(entries.begin(), entries.end(), [](const EntryCheck & e) { return e.ok(); });
    }

    auto CatalogValidation::describe() const -> std::string
    {
        std::string out;
        for (auto & e : entries) {
            if (! e.rejected)
                out += family_name(family) + "/" + e.name + ": accepted by the exhaustive recogniser\n";
            for (int v : e.bad_deletions)
                out += family_name(family) + "/" + e.name + ": deleting vertex " + std::to_string(v)
                    + " still leaves a non-member\n";
        }
        for (auto & [a, b] : isomorphic_pairs)
            out += family_name(family) + ": " + a + " and " + b + " are isomorphic\n";
        return out;
    }

    auto validate_catalog(const Catalog & cat) -> CatalogValidation
    {
        CatalogValidation report{cat.family, {}, {}};
        auto member = brute_force_member(cat.family);

        std::vector<CanonicalForm> forms;
        for (auto & e : cat.entries) {
            auto cg = e.colored();
            EntryCheck check{e.name, ! member(cg), {}};
            for (int v = 0; v < cg.graph.size() && cg.graph.size() > 1; ++v) {
                auto w = cg.graph.vertices();
                w.erase(v);
                auto sub = cg.colors.empty() ? ColoredGraph{induced(cg.graph, w), {}} : induced(cg, w);
                if (! member(sub))
                    check.bad_deletions.push_back(v);
            }
            report.entries.push_back(std::move(check));
            forms.push_back(cg.colors.empty() ? canonical_form(cg.graph) : canonical_form(cg));
        }

        for (std::size_t i = 0; i < forms.size(); ++i)
            for (std::size_t j = 0; j < i; ++j)
                if (forms[i] == forms[j])
                    report.isomorphic_pairs.emplace_back(cat.entries[j].name, cat.entries[i].name);
        return report;
    }
}
