#include <kthresh/graph.hpp>
#include <kthresh/report.hpp>

#include <json.hpp>

#include <algorithm>

using nlohmann::json;

namespace kthresh
{
    auto VerificationReport::ok() const -> bool
    {
        return total_disagreements() == 0
            && std::all_of(catalogs.begin(), catalogs.end(), [](const CatalogResult & c) { return c.ok(); });
    }

    auto VerificationReport::counter(const std::string & name) -> ClassCounter &
    {
        for (auto & c : classes)
            if (c.name == name)
                return c;
        classes.push_back(ClassCounter{name, 0, 0, {}});
        return classes.back();
    }

    auto VerificationReport::total_disagreements() const -> std::uint64_t
    {
        std::uint64_t total = 0;
        for (auto & c : classes)
            total += c.disagree;
        return total;
    }

    auto VerificationReport::merge(const VerificationReport & other) -> void
    {
        n_min = std::min(n_min, other.n_min);
        n_max = std::max(n_max, other.n_max);
        for (auto & c : other.classes) {
            auto & mine = counter(c.name);
            mine.agree += c.agree;
            mine.disagree += c.disagree;
            mine.witnesses.insert(mine.witnesses.end(), c.witnesses.begin(), c.witnesses.end());
        }
        catalogs.insert(catalogs.end(), other.catalogs.begin(), other.catalogs.end());
        notes.insert(notes.end(), other.notes.begin(), other.notes.end());
        elapsed_seconds += other.elapsed_seconds;
    }

    void to_json(json & j, const Witness & w)
    {
        j = json{{"graph6", w.graph6}, {"colors", w.colors}, {"verdicts", w.verdicts}};
    }

    void from_json(const json & j, Witness & w)
    {
        j.at("graph6").get_to(w.graph6);
        j.at("colors").get_to(w.colors);
        j.at("verdicts").get_to(w.verdicts);
    }

    void to_json(json & j, const ClassCounter & c)
    {
        j = json{{"name", c.name}, {"agree", c.agree}, {"disagree", c.disagree}, {"witnesses", c.witnesses}};
    }

    void from_json(const json & j, ClassCounter & c)
    {
        j.at("name").get_to(c.name);
        j.at("agree").get_to(c.agree);
        j.at("disagree").get_to(c.disagree);
        j.at("witnesses").get_to(c.witnesses);
    }

    void to_json(json & j, const CatalogResult & c)
    {
        j = json{{"family", c.family}, {"entry", c.entry}, {"rejected", c.rejected},
            {"bad_deletions", c.bad_deletions}, {"duplicates", c.duplicates}};
    }

    void from_json(const json & j, CatalogResult & c)
    {
        j.at("family").get_to(c.family);
        j.at("entry").get_to(c.entry);
        j.at("rejected").get_to(c.rejected);
        j.at("bad_deletions").get_to(c.bad_deletions);
        j.at("duplicates").get_to(c.duplicates);
    }

    auto to_text(const VerificationReport & r) -> std::string
    {
        json j{{"schema", r.schema}, {"suite", r.suite}, {"n_min", r.n_min}, {"n_max", r.n_max},
            {"ok", r.ok()}, {"classes", r.classes}, {"catalogs", r.catalogs}, {"notes", r.notes},
            {"elapsed_seconds", r.elapsed_seconds}};
        return j.dump(2) + "\n";
    }

    auto parse_report(std::string_view text) -> VerificationReport
    {
        json j;
        try {
            j = json::parse(text);
        }
        catch (const json::parse_error & e) {
            throw ParseError(std::string("malformed report: ") + e.what(), e.byte);
        }

        VerificationReport r;
        try {
            j.at("schema").get_to(r.schema);
            if (r.schema != report_schema)
                throw ParseError("unsupported report schema '" + r.schema + "'", 0);
            j.at("suite").get_to(r.suite);
            j.at("n_min").get_to(r.n_min);
            j.at("n_max").get_to(r.n_max);
            j.at("classes").get_to(r.classes);
            j.at("catalogs").get_to(r.catalogs);
            j.at("notes").get_to(r.notes);
            j.at("elapsed_seconds").get_to(r.elapsed_seconds);
        }
        catch (const json::exception & e) {
            throw ParseError(std::string("bad report field: ") + e.what(), 0);
        }
        return r;
    }
}
