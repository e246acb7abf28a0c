#include "qminor.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <sstream>
#include <string>

#include "qmb/relation.hpp"
#include "qmb/verify.hpp"

struct qm_relation {
    qmb::Relation rel;
};

namespace {

thread_local std::string last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

qm_status fail(qm_status code, const std::string& message) {
    last_error = message;
    return code;
}

template <typename Fn>
qm_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const std::invalid_argument& e) {
        return fail(QM_ERR_PARSE, e.what());
    } catch (const std::exception& e) {
        return fail(QM_ERR_INTERNAL, e.what());
    }
}

}  // namespace

extern "C" {

const char* qm_last_error(void) { return last_error.c_str(); }

qm_status qm_commute(int n, const char* lhs, const char* rhs, qm_relation** out) {
    if (!lhs || !rhs || !out) return fail(QM_ERR_INVALID, "null argument");
    return guarded([&] {
        qmb::MinorSpec a = qmb::minor_parse(lhs);
        qmb::MinorSpec b = qmb::minor_parse(rhs);
        auto* handle = new qm_relation{qmb::commute(a, b, n, true)};
        if (!handle->rel.verified) {
            std::string text = qmb::relation_to_plain(handle->rel);
            delete handle;
            return fail(QM_ERR_INTERNAL, "generated relation failed verification: " + text);
        }
        *out = handle;
        return QM_OK;
    });
}

qm_status qm_relation_from_json(const char* json, qm_relation** out) {
    if (!json || !out) return fail(QM_ERR_INVALID, "null argument");
    return guarded([&] {
        *out = new qm_relation{qmb::relation_from_json(json)};
        return QM_OK;
    });
}

qm_status qm_relation_verify(qm_relation* rel, int* ok, char** residual) {
    if (!rel || !ok) return fail(QM_ERR_INVALID, "null argument");
    return guarded([&] {
        qmb::VerifyReport report = qmb::verify_relation(rel->rel);
        rel->rel.verified = report.ok;
        *ok = report.ok ? 1 : 0;
        if (residual) *residual = report.ok ? nullptr : dup_string(report.residual.to_string());
        return QM_OK;
    });
}

qm_status qm_relation_format(const qm_relation* rel, const char* format, char** out) {
    if (!rel || !format || !out) return fail(QM_ERR_INVALID, "null argument");
    return guarded([&] {
        std::string fmt(format);
        if (fmt == "plain")
            *out = dup_string(qmb::relation_to_plain(rel->rel));
        else if (fmt == "latex")
            *out = dup_string(qmb::relation_to_latex(rel->rel));
        else if (fmt == "json")
            *out = dup_string(qmb::relation_to_json(rel->rel));
        else
            return fail(QM_ERR_INVALID, "unknown format: " + fmt);
        return QM_OK;
    });
}

const char* qm_relation_case(const qm_relation* rel) {
    return rel ? rel->rel.case_tag.c_str() : "";
}

int qm_relation_verified(const qm_relation* rel) {
    return rel && rel->rel.verified ? 1 : 0;
}

int qm_relation_term_count(const qm_relation* rel) {
    return rel ? static_cast<int>(rel->rel.terms.size()) : 0;
}

qm_status qm_sweep(int n, int max_size, int jobs, const char* output_path,
                   char** summary_json, int* all_ok) {
    if (!all_ok) return fail(QM_ERR_INVALID, "null argument");
    return guarded([&] {
        qmb::SweepConfig cfg;
        cfg.n = n;
        cfg.max_size = max_size;
        cfg.jobs = jobs;
        if (output_path) cfg.output = output_path;
        qmb::SweepSummary summary;
        try {
            summary = qmb::run_sweep(cfg);
        } catch (const std::runtime_error& e) {
            return fail(QM_ERR_IO, e.what());
        }
        if (summary_json) *summary_json = dup_string(summary.summary_json);
        *all_ok = summary.all_ok() ? 1 : 0;
        return QM_OK;
    });
}

qm_status qm_run_examples(char** report, int* all_pass) {
    if (!report || !all_pass) return fail(QM_ERR_INVALID, "null argument");
    return guarded([&] {
        std::ostringstream out;
        bool ok = true;
        for (const qmb::FixtureOutcome& fx : qmb::run_example_fixtures()) {
            out << (fx.pass ? "PASS" : "FAIL") << "  " << fx.name;
            if (!fx.pass) out << "  " << fx.detail;
            out << "\n";
            ok = ok && fx.pass;
        }
        *report = dup_string(out.str());
        *all_pass = ok ? 1 : 0;
        return QM_OK;
    });
}

qm_status qm_q1_check(int n, int max_size, int jobs, char** report, int* all_pass) {
    if (!report || !all_pass) return fail(QM_ERR_INVALID, "null argument");
    return guarded([&] {
        qmb::Q1Summary summary = qmb::run_q1_check(n, max_size, jobs);
        std::ostringstream out;
        out << "pairs checked: " << summary.total << ", failures: " << summary.failed << "\n";
        for (const std::string& f : summary.failures) out << f << "\n";
        *report = dup_string(out.str());
        *all_pass = summary.all_ok() ? 1 : 0;
        return QM_OK;
    });
}

void qm_relation_free(qm_relation* rel) { delete rel; }

void qm_string_free(char* s) { std::free(s); }

}  // extern "C"
