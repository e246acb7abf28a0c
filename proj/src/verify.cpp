#include "qmb/verify.hpp"

#include <array>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"
#include "qmb/manin.hpp"

namespace qmb {

std::vector<MinorSpec> enumerate_minors(int n, int max_size) {
    if (n < 1 || max_size < 1 || max_size > n)
        throw std::invalid_argument("bad minor enumeration bounds");
    std::vector<MinorSpec> out;
    for (int size = 1; size <= max_size; ++size) {
        std::vector<Index> subsets;
        Index cur(size);
        // All strictly increasing index sequences of the given size.
        auto rec = [&](auto&& self, int pos, int from) -> void {
            if (pos == size) {
                subsets.push_back(cur);
                return;
            }
            for (int v = from; v <= n; ++v) {
                cur[pos] = v;
                self(self, pos + 1, v + 1);
            }
        };
        rec(rec, 0, 1);
        for (const Index& rows : subsets)
            for (const Index& cols : subsets) out.push_back({rows, cols});
    }
    return out;
}

int resolve_jobs(int jobs) {
    if (jobs > 0) return jobs;
    if (const char* env = std::getenv("QMINOR_JOBS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 4;
}

SweepSummary run_sweep(const SweepConfig& cfg) {
    if (cfg.n < 1 || cfg.max_size < 1 || cfg.max_size > cfg.n)
        throw std::invalid_argument("bad sweep bounds");
    std::vector<MinorSpec> minors = enumerate_minors(cfg.n, cfg.max_size);
    const size_t count = minors.size() * minors.size();

    struct PairResult {
        std::string line;
        std::string case_tag;
        bool ok = false;
        bool skipped = false;
    };
    std::vector<PairResult> results(count);
    std::atomic<size_t> next{0};

    auto worker = [&] {
        while (true) {
            size_t task = next.fetch_add(1);
            if (task >= count) break;
            const MinorSpec& a = minors[task / minors.size()];
            const MinorSpec& b = minors[task % minors.size()];
            PairResult& res = results[task];
            Relation rel = commute(a, b, cfg.n, false);
            if (!cfg.case_filter.empty() && rel.case_tag != cfg.case_filter) {
                res.skipped = true;
                continue;
            }
            VerifyReport report = verify_relation(rel);
            res.ok = report.ok;
            res.case_tag = rel.case_tag;
            nlohmann::json line;
            line["n"] = cfg.n;
            line["lhs"] = minor_to_string(a);
            line["rhs"] = minor_to_string(b);
            line["case"] = rel.case_tag;
            line["swapped"] = rel.swapped;
            line["terms"] = rel.terms.size();
            line["ok"] = report.ok;
            if (!report.ok) line["residual"] = report.residual.to_string();
            res.line = line.dump();
        }
    };

    const int jobs = resolve_jobs(cfg.jobs);
    std::vector<std::thread> pool;
    for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
    for (std::thread& t : pool) t.join();

    SweepSummary summary;
    for (const PairResult& res : results) {
        if (res.skipped) continue;
        ++summary.total;
        if (res.ok)
            ++summary.passed;
        else
            ++summary.failed;
        ++summary.case_histogram[res.case_tag];
        summary.json_lines.push_back(res.line);
    }
    nlohmann::json agg;
    agg["n"] = cfg.n;
    agg["max_size"] = cfg.max_size;
    agg["total"] = summary.total;
    agg["passed"] = summary.passed;
    agg["failed"] = summary.failed;
    agg["cases"] = summary.case_histogram;
    summary.summary_json = agg.dump();

    if (!cfg.output.empty()) {
        std::ofstream out(cfg.output);
        if (!out) throw std::runtime_error("cannot open sweep output file: " + cfg.output);
        for (const std::string& line : summary.json_lines) out << line << "\n";
        out << summary.summary_json << "\n";
    }
    return summary;
}

namespace {

struct Fixture {
    std::string name;
    int n;
    MinorSpec a, b;
    std::string lead_coeff;
    // (coeff text, left, right) in expected output order.
    std::vector<std::array<std::string, 3>> terms;
};

std::vector<Fixture> golden_fixtures() {
    return {
        {"n4_2x2_disjoint",
         4,
         {{3, 4}, {1, 3}},
         {{1, 2}, {2, 4}},
         "1",
         {{"1", "[1 2|2 4]", "[3 4|1 3]"}, {"-q^-1 + q", "[1 2|3 4]", "[3 4|1 2]"}}},
        {"n4_2x2_det_pair",
         4,
         {{3, 4}, {3, 4}},
         {{1, 2}, {1, 2}},
         "1",
         {{"1", "[1 2|1 2]", "[3 4|3 4]"},
          {"-q^-1 + q", "[1 2|1 3]", "[3 4|2 4]"},
          {"q^-2 - 1", "[1 2|1 4]", "[3 4|2 3]"},
          {"q^-2 - 1", "[1 2|2 3]", "[3 4|1 4]"},
          {"-q^-3 + q^-1", "[1 2|2 4]", "[3 4|1 3]"},
          {"q^-4 - q^-2 - 1 + q^2", "[1 2|3 4]", "[3 4|1 2]"}}},
        {"n4_2x2_shared_col",
         4,
         {{3, 4}, {2, 3}},
         {{1, 2}, {1, 3}},
         "q^-1",
         {{"1", "[1 2|1 3]", "[3 4|2 3]"}, {"-q^-1 + q", "[1 2|2 3]", "[3 4|1 3]"}}},
        {"n4_2x2_row_col_mix",
         4,
         {{2, 3}, {1, 3}},
         {{1, 4}, {2, 4}},
         "1",
         {{"1", "[1 4|2 4]", "[2 3|1 3]"},
          {"-1 + q^2", "[1 2|2 4]", "[3 4|1 3]"},
          {"-q^-2 + 2 - q^2", "[1 3|3 4]", "[2 4|1 2]"},
          {"q^-1 - q", "[1 3|2 4]", "[2 4|1 3]"},
          {"q^-1 - 2*q + q^3", "[1 2|3 4]", "[3 4|1 2]"},
          {"-q^-1 + q", "[1 4|3 4]", "[2 3|1 2]"}}},
        {"n5_3x3_shared_rowcol",
         5,
         {{3, 4, 5}, {1, 3, 4}},
         {{1, 2, 3}, {1, 2, 5}},
         "1",
         {{"1", "[1 2 3|1 2 5]", "[3 4 5|1 3 4]"},
          {"-q^-1 + q", "[1 2 3|1 3 5]", "[3 4 5|1 2 4]"},
          {"q^-2 - 1", "[1 2 3|1 4 5]", "[3 4 5|1 2 3]"}}},
    };
}

std::string term_list_text(const Relation& rel) {
    std::ostringstream out;
    for (const RelationTerm& t : rel.terms)
        out << "(" << t.coeff.to_string() << ") " << minor_to_string(t.left)
            << minor_to_string(t.right) << "; ";
    return out.str();
}

}  // namespace

std::vector<FixtureOutcome> run_example_fixtures() {
    std::vector<FixtureOutcome> outcomes;
    for (const Fixture& fx : golden_fixtures()) {
        FixtureOutcome outcome;
        outcome.name = fx.name;
        Relation rel = commute(fx.a, fx.b, fx.n, true);
        std::ostringstream diff;
        if (!rel.verified) diff << "oracle residual is nonzero; ";
        if (rel.lead_coeff != LaurentPoly::parse(fx.lead_coeff))
            diff << "lead coefficient " << rel.lead_coeff.to_string() << " != " << fx.lead_coeff
                 << "; ";

        // Compare collated terms as unordered (minor pair -> coefficient) maps.
        std::map<std::pair<std::string, std::string>, LaurentPoly> expected, actual;
        for (const auto& [coeff, left, right] : fx.terms)
            expected[{left, right}] = LaurentPoly::parse(coeff);
        for (const RelationTerm& t : rel.terms)
            actual[{minor_to_string(t.left), minor_to_string(t.right)}] = t.coeff;
        if (expected != actual)
            diff << "terms differ; expected: ";
        if (expected != actual) {
            for (const auto& [pair, coeff] : expected)
                diff << "(" << coeff.to_string() << ") " << pair.first << pair.second << "; ";
            diff << "got: " << term_list_text(rel);
        }
        outcome.detail = diff.str();
        outcome.pass = outcome.detail.empty();
        outcomes.push_back(std::move(outcome));
    }
    return outcomes;
}

Q1Summary run_q1_check(int n, int max_size, int jobs) {
    std::vector<MinorSpec> minors = enumerate_minors(n, max_size);
    const size_t count = minors.size() * minors.size();
    std::vector<std::string> failures(count);
    std::atomic<size_t> next{0};

    auto worker = [&] {
        while (true) {
            size_t task = next.fetch_add(1);
            if (task >= count) break;
            const MinorSpec& a = minors[task / minors.size()];
            const MinorSpec& b = minors[task % minors.size()];
            Relation rel = commute(a, b, n, false);
            std::ostringstream bad;
            if (rel.lead_coeff.eval_at_one() != 1)
                bad << "lead coefficient specializes to " << rel.lead_coeff.eval_at_one() << "; ";
            for (const RelationTerm& t : rel.terms) {
                bool reversed = t.left == rel.lead_second && t.right == rel.lead_first;
                Int at_one = t.coeff.eval_at_one();
                if (reversed && at_one != 1)
                    bad << "reversed-product coefficient specializes to " << at_one << "; ";
                if (!reversed && at_one != 0)
                    bad << "correction " << minor_to_string(t.left) << minor_to_string(t.right)
                        << " specializes to " << at_one << "; ";
            }
            if (!bad.str().empty())
                failures[task] =
                    minor_to_string(a) + "*" + minor_to_string(b) + ": " + bad.str();
        }
    };

    const int workers = resolve_jobs(jobs);
    std::vector<std::thread> pool;
    for (int t = 1; t < workers; ++t) pool.emplace_back(worker);
    worker();
    for (std::thread& t : pool) t.join();

    Q1Summary summary;
    summary.total = static_cast<int>(count);
    for (std::string& f : failures) {
        if (f.empty()) continue;
        ++summary.failed;
        summary.failures.push_back(std::move(f));
    }
    return summary;
}

}  // namespace qmb
