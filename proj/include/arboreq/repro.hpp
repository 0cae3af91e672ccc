#pragma once

#include <string>
#include <vector>

namespace arboreq {

struct ReproLine {
    std::string claim_id;
    std::string ref;       // what the claim asserts, in words
    std::string command;   // equivalent CLI invocation
    std::string expected;
    std::string observed;
    std::string status;    // PASS / FAIL / SKIP(budget)
};

struct ReproOptions {
    std::string subset = "all";   // claim-id prefix, or "all"
    double budget_secs = 120.0;   // per claim
    int jobs = 1;
};

// Replays the result table.  Output order is fixed by the claim registry
// regardless of --jobs.  Empty result means the subset matched nothing.
std::vector<ReproLine> run_reproduce(const ReproOptions& opts);

std::vector<std::string> reproduce_claim_ids();

bool all_passed(const std::vector<ReproLine>& lines);

std::string format_repro_table(const std::vector<ReproLine>& lines);

}  // namespace arboreq
