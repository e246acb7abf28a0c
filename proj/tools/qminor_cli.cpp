// Command-line front end; links only against the shared C API.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "qminor.h"

namespace {

int report_error(qm_status status) {
    std::cerr << "error: " << qm_last_error() << "\n";
    return status == QM_ERR_PARSE ? 2 : 1;
}

int cmd_commute(int n, const std::string& lhs, const std::string& rhs,
                const std::string& format) {
    qm_relation* rel = nullptr;
    qm_status status = qm_commute(n, lhs.c_str(), rhs.c_str(), &rel);
    if (status != QM_OK) return report_error(status);
    char* text = nullptr;
    status = qm_relation_format(rel, format.c_str(), &text);
    if (status != QM_OK) {
        qm_relation_free(rel);
        return report_error(status);
    }
    std::cout << text << "\n";
    if (format != "json") {
        std::cout << "case: " << qm_relation_case(rel) << "\n";
        std::cout << "verified: " << (qm_relation_verified(rel) ? "true" : "false") << "\n";
    }
    qm_string_free(text);
    qm_relation_free(rel);
    return 0;
}

int cmd_verify(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "error: cannot read " << path << "\n";
        return 1;
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    qm_relation* rel = nullptr;
    qm_status status = qm_relation_from_json(buffer.str().c_str(), &rel);
    if (status != QM_OK) return report_error(status);
    int ok = 0;
    char* residual = nullptr;
    status = qm_relation_verify(rel, &ok, &residual);
    if (status != QM_OK) {
        qm_relation_free(rel);
        return report_error(status);
    }
    if (ok) {
        std::cout << "verified: residual 0\n";
    } else {
        std::cout << "FAILED: residual " << (residual ? residual : "?") << "\n";
    }
    qm_string_free(residual);
    qm_relation_free(rel);
    return ok ? 0 : 1;
}

int cmd_sweep(int n, int max_size, int jobs, const std::string& output) {
    char* summary = nullptr;
    int all_ok = 0;
    qm_status status = qm_sweep(n, max_size, jobs, output.empty() ? nullptr : output.c_str(),
                                &summary, &all_ok);
    if (status != QM_OK) return report_error(status);
    std::cout << summary << "\n";
    qm_string_free(summary);
    return all_ok ? 0 : 1;
}

int cmd_examples() {
    char* report = nullptr;
    int all_pass = 0;
    qm_status status = qm_run_examples(&report, &all_pass);
    if (status != QM_OK) return report_error(status);
    std::cout << report;
    std::cout << (all_pass ? "all fixtures pass\n" : "fixture failures above\n");
    qm_string_free(report);
    return all_pass ? 0 : 1;
}

int cmd_q1(int n, int max_size, int jobs) {
    char* report = nullptr;
    int all_pass = 0;
    qm_status status = qm_q1_check(n, max_size, jobs, &report, &all_pass);
    if (status != QM_OK) return report_error(status);
    std::cout << report;
    qm_string_free(report);
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"commutation relations of quantum minors with an exact normal-form oracle"};
    app.require_subcommand(1);

    int n = 4;
    std::string lhs, rhs, format = "plain";
    auto* commute = app.add_subcommand("commute", "emit the relation for two minors");
    commute->add_option("--n", n, "matrix size")->required();
    commute->add_option("--lhs", lhs, "first minor, e.g. \"[3 4|1 3]\"")->required();
    commute->add_option("--rhs", rhs, "second minor")->required();
    commute->add_option("--format", format, "plain|latex|json")
        ->check(CLI::IsMember({"plain", "latex", "json"}));

    std::string verify_file;
    auto* verify = app.add_subcommand("verify", "re-verify a relation JSON file");
    verify->add_option("--file", verify_file, "relation JSON path")->required();

    int sweep_n = 3, sweep_size = 2, jobs = 0;
    std::string output;
    auto* sweep = app.add_subcommand("sweep", "verify all minor pairs within bounds");
    sweep->add_option("--n", sweep_n, "matrix size")->required();
    sweep->add_option("--max-size", sweep_size, "largest minor size")->required();
    sweep->add_option("--jobs", jobs, "worker count (default: QMINOR_JOBS or hardware)");
    sweep->add_option("--output", output, "write JSON lines to this file");

    int q1_n = 3, q1_size = 2, q1_jobs = 0;
    auto* q1 = app.add_subcommand("q1-check", "classical-limit specialization suite");
    q1->add_option("--n", q1_n, "matrix size");
    q1->add_option("--max-size", q1_size, "largest minor size");
    q1->add_option("--jobs", q1_jobs, "worker count");

    auto* examples = app.add_subcommand("examples", "run the stored golden fixtures");

    CLI11_PARSE(app, argc, argv);

    if (commute->parsed()) return cmd_commute(n, lhs, rhs, format);
    if (verify->parsed()) return cmd_verify(verify_file);
    if (sweep->parsed()) return cmd_sweep(sweep_n, sweep_size, jobs, output);
    if (q1->parsed()) return cmd_q1(q1_n, q1_size, q1_jobs);
    if (examples->parsed()) return cmd_examples();
    return 1;
}
