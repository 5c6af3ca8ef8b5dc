#pragma once

#include <kthresh/canonical.hpp>
#include <kthresh/graph.hpp>

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace kthresh
{
    enum class Family
    {
        threshold,
        special2t,
        good,
        two_threshold_listed,
        partitioned2t,
        switch_threshold,
        switch_cograph
    };

    auto all_families() -> const std::vector<Family> &;
    auto family_name(Family f) -> std::string;
    auto parse_family(std::string_view name) -> Family;
    auto family_is_colored(Family f) -> bool;

    struct CatalogEntry
    {
        std::string name;
        Graph graph;
        std::optional<Coloring> coloring;
        std::string source;

        auto colored() const -> ColoredGraph;
    };

    struct Catalog
    {
        Family family;
        std::vector<CatalogEntry> entries;

        auto find(std::string_view name) const -> const CatalogEntry *;
    };

    /// Tab-separated: name, graph6, colour string or "-", source. '#' lines
    /// are comments.
    auto parse_catalog(Family family, std::string_view text) -> Catalog;
    auto format_catalog(const Catalog & cat) -> std::string;

    /// Catalogs compiled in from data/catalogs/*.tsv.
    auto builtin_catalog(Family family) -> const Catalog &;
    auto builtin_catalog_text(Family family) -> std::string_view;

    /// The exhaustive recogniser a family's catalog is checked against.
    auto brute_force_member(Family family) -> std::function<bool(const ColoredGraph &)>;

    struct FisVerdict
    {
        bool member = true;
        std::string obstruction;
        std::optional<ColoredGraph> pattern;
        std::optional<Embedding> embedding;
    };

    struct NamedPattern
    {
        std::string name;
        ColoredGraph pattern;
    };

    /// Checks patterns in order; first embedding found decides.
    auto recognize_by_patterns(const ColoredGraph & host, const std::vector<NamedPattern> & patterns) -> FisVerdict;

    auto threshold_patterns() -> const std::vector<NamedPattern> &;
    auto special_patterns() -> const std::vector<NamedPattern> &;
    auto good_patterns() -> const std::vector<NamedPattern> &;
    /// Every catalog entry plus its colour swap when that is a new class.
    auto partitioned_patterns() -> const std::vector<NamedPattern> &;
    /// Union of the switching classes of 3K2, C5 and C4+2K1.
    auto switch_threshold_patterns() -> const std::vector<NamedPattern> &;

    auto recognize_threshold_fis(const Graph & g) -> FisVerdict;
    auto recognize_special_fis(const Graph & g) -> FisVerdict;
    auto recognize_good_fis(const Graph & g) -> FisVerdict;
    auto recognize_partitioned_fis(const ColoredGraph & cg) -> FisVerdict;
    auto recognize_switch_threshold_fis(const Graph & g) -> FisVerdict;
    auto recognize_switch_cograph_fis(const Graph & g) -> FisVerdict;

    auto swap_colors(const Coloring & c) -> Coloring;

    /// Graphs on at most n_max vertices that fail member while every
    /// one-vertex deletion passes, as canonical forms in ascending order.
    auto find_minimal_obstructions(const std::function<bool(const Graph &)> & member, int n_max)
        -> std::vector<CanonicalForm>;
    auto find_minimal_colored_obstructions(const std::function<bool(const ColoredGraph &)> & member, int n_max)
        -> std::vector<CanonicalForm>;

    struct EntryCheck
    {
        std::string name;
        bool rejected = false;
        /// Vertices whose deletion leaves a non-member.
        std::vector<int> bad_deletions;

        auto ok() const -> bool { return rejected && bad_deletions.empty(); }
    };

    struct CatalogValidation
    {
        Family family;
        std::vector<EntryCheck> entries;
        std::vector<std::pair<std::string, std::string>> isomorphic_pairs;

        auto ok() const -> bool;
        auto describe() const -> std::string;
    };

    auto validate_catalog(const Catalog & cat) -> CatalogValidation;
}
