#pragma once

#include <kthresh/report.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace kthresh
{
    /// thresholds, special, good, partitioned, switching, catalogs, counts.
    auto suite_names() -> const std::vector<std::string> &;
    auto default_nmax(std::string_view suite) -> int;

    /// threads == 0 picks the hardware concurrency.
    auto run_suite(std::string_view suite, int n_max, unsigned threads = 0) -> VerificationReport;
}
