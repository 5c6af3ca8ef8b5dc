#include <kthresh/graph.hpp>
#include <kthresh/report.hpp>
#include <kthresh/suites.hpp>

#include <doctest.h>

using namespace kthresh;

namespace
{
    auto sample() -> VerificationReport
    {
        VerificationReport r;
        r.suite = "special";
        r.n_max = 5;
        auto & c = r.counter("special");
        c.agree = 40;
        c.disagree = 1;
        c.witnesses.push_back({"DUW", "", {{"elimination", "member"}, {"fis", "non-member (C5)"}}});
        r.catalogs.push_back({"special2t", "net", true, {}, {}});
        r.catalogs.push_back({"two_threshold_listed", "fig4-17", true, {2}, {"fig4-33"}});
        r.notes.push_back("a note with \"quotes\" and\ttabs");
        r.elapsed_seconds = 0.1 + 0.2;
        return r;
    }
}

TEST_CASE("report serialisation round trips")
{
    auto r = sample();
    CHECK(parse_report(to_text(r)) == r);
    CHECK(to_text(r).find("\"schema\": \"kthresh-report/1\"") != std::string::npos);

    VerificationReport empty;
    CHECK(parse_report(to_text(empty)) == empty);
}

TEST_CASE("report parse errors")
{
    CHECK_THROWS_AS(parse_report("{"), ParseError);
    CHECK_THROWS_AS(parse_report("{\"schema\": \"other/9\"}"), ParseError);
    CHECK_THROWS_AS(parse_report("{\"schema\": \"kthresh-report/1\"}"), ParseError);
}

TEST_CASE("report status")
{
    auto r = sample();
    CHECK_FALSE(r.ok());
    r.counter("special").disagree = 0;
    r.counter("special").witnesses.clear();
    CHECK_FALSE(r.ok());
    r.catalogs.pop_back();
    CHECK(r.ok());
}

TEST_CASE("merging reports is associative")
{
    auto a = sample(), b = sample(), c = sample();
    b.counter("good").agree = 3;
    c.counter("special").agree = 7;

    auto left = a;
    left.merge(b);
    left.merge(c);
    auto bc = b;
    bc.merge(c);
    auto right = a;
    right.merge(bc);
    CHECK(left == right);
    CHECK(left.counter("special").agree == 87);
    CHECK(left.total_disagreements() == 3);
}

TEST_CASE("small suites run clean")
{
    for (auto & name : {"thresholds", "special", "good", "switching"}) {
        auto r = run_suite(name, 5, 1);
        CHECK(r.ok());
        CHECK(r.n_max == 5);
        CHECK(r.classes.front().agree == 1 + 2 + 4 + 11 + 34);
        CHECK(parse_report(to_text(r)) == r);
    }
    auto counts = run_suite("counts", 6, 1);
    CHECK(counts.ok());
    CHECK_THROWS_AS(run_suite("counts", 9), CapacityError);
    CHECK_THROWS_AS(run_suite("nope", 3), std::domain_error);
}

TEST_CASE("threaded suites match single-threaded ones")
{
    auto one = run_suite("partitioned", 4, 1);
    auto four = run_suite("partitioned", 4, 4);
    one.elapsed_seconds = four.elapsed_seconds = 0;
    CHECK(one == four);
}
