#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace kthresh
{
    inline constexpr std::string_view report_schema = "kthresh-report/1";

    /// A graph on which the methods of one class disagree.
    struct Witness
    {
        std::string graph6;
        /// Colour string, empty for uncoloured inputs.
        std::string colors;
        /// Method name to verdict text.
        std::map<std::string, std::string> verdicts;

        auto operator==(const Witness &) const -> bool = default;
    };

    struct ClassCounter
    {
        std::string name;
        std::uint64_t agree = 0;
        std::uint64_t disagree = 0;
        std::vector<Witness> witnesses;

        auto operator==(const ClassCounter &) const -> bool = default;
    };

    struct CatalogResult
    {
        std::string family;
        std::string entry;
        bool rejected = false;
        std::vector<int> bad_deletions;
        /// Names of other entries in the same family isomorphic to this one.
        std::vector<std::string> duplicates;

        auto ok() const -> bool { return rejected && bad_deletions.empty() && duplicates.empty(); }
        auto operator==(const CatalogResult &) const -> bool = default;
    };

    struct VerificationReport
    {
        std::string schema{report_schema};
        std::string suite;
        int n_min = 1;
        int n_max = 0;
        std::vector<ClassCounter> classes;
        std::vector<CatalogResult> catalogs;
        /// Free-form findings that do not count as failures.
        std::vector<std::string> notes;
        double elapsed_seconds = 0.0;

        auto ok() const -> bool;
        auto counter(const std::string & name) -> ClassCounter &;
        auto total_disagreements() const -> std::uint64_t;

        /// Adds counts and concatenates witnesses class by class.
        auto merge(const VerificationReport & other) -> void;

        auto operator==(const VerificationReport &) const -> bool = default;
    };

    auto to_text(const VerificationReport & r) -> std::string;
    /// Throws ParseError on malformed input or an unknown schema.
    auto parse_report(std::string_view text) -> VerificationReport;
}
