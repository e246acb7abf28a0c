#pragma once

#include <map>
#include <string>
#include <vector>

#include "qmb/relation.hpp"

namespace qmb {

/// All sorted minors of M_n with 1 <= size <= max_size, in index order.
std::vector<MinorSpec> enumerate_minors(int n, int max_size);

struct SweepConfig {
    int n = 0;
    int max_size = 0;
    int jobs = 0;             // <= 0: QMINOR_JOBS env var, then hardware default
    std::string case_filter;  // empty: all cases
    std::string output;       // empty: no file, lines kept in memory only
};

struct SweepSummary {
    int total = 0;
    int passed = 0;
    int failed = 0;
    std::map<std::string, int> case_histogram;
    std::vector<std::string> json_lines;  // one line per ordered pair, input order
    std::string summary_json;             // aggregate line
    bool all_ok() const { return failed == 0; }
};

/// Runs commute + verify_relation over every ordered pair of minors within
/// the bounds, in parallel, with deterministic output order.
SweepSummary run_sweep(const SweepConfig& cfg);

struct FixtureOutcome {
    std::string name;
    bool pass = false;
    std::string detail;  // diff description on failure
};

/// The five stored golden relations: commute must reproduce each exactly
/// (same lead coefficient and collated term list) and the oracle residual
/// must vanish.
std::vector<FixtureOutcome> run_example_fixtures();

struct Q1Summary {
    int total = 0;
    int failed = 0;
    std::vector<std::string> failures;
    bool all_ok() const { return failed == 0; }
};

/// Classical-limit check over the sweep range: at q = 1 the lead coefficient
/// and the reversed-product coefficient become 1 and every correction
/// coefficient vanishes.
Q1Summary run_q1_check(int n, int max_size, int jobs = 0);

/// Effective worker count: jobs if positive, else QMINOR_JOBS, else a
/// hardware-based default.
int resolve_jobs(int jobs);

}  // namespace qmb
