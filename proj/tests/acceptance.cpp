// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Links the core library directly so every check runs against the
// exact symbolic engine.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "qmb/fg.hpp"
#include "qmb/manin.hpp"
#include "qmb/minor.hpp"
#include "qmb/relation.hpp"
#include "qmb/verify.hpp"

using namespace qmb;

namespace {

int failures = 0;

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void report(const std::string& name, bool ok, const std::string& detail = "") {
    std::printf("%s  %s%s%s\n", ok ? "PASS" : "FAIL", name.c_str(),
                detail.empty() ? "" : "  ", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

std::vector<Index> subsets(int m, int r) {
    std::vector<Index> out;
    Index cur;
    auto rec = [&](auto&& self, int next) -> void {
        if (static_cast<int>(cur.size()) == r) {
            out.push_back(cur);
            return;
        }
        for (int v = next; v <= m; ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

Index index_image(const Perm& sigma, const Index& idx) {
    Index out;
    for (int v : idx) out.push_back(sigma[v - 1]);
    return out;
}

char time_detail_buf[64];

const char* time_detail(double secs) {
    std::snprintf(time_detail_buf, sizeof(time_detail_buf), "(%.3fs)", secs);
    return time_detail_buf;
}

// --- criterion 1: stored golden relations reproduce exactly and quickly ----

void check_fixtures() {
    auto start = std::chrono::steady_clock::now();
    std::vector<FixtureOutcome> outcomes = run_example_fixtures();
    double total = seconds_since(start);
    char label = 'a';
    for (const FixtureOutcome& fx : outcomes) {
        report(std::string("1") + label + " golden relation " + fx.name, fx.pass, fx.detail);
        ++label;
    }
    report("1f golden relation runtime below thirty seconds", total < 30.0, time_detail(total));

    // a single representative pair must generate and verify well under a second
    start = std::chrono::steady_clock::now();
    Relation rel = commute(minor_parse("[3 4|3 4]"), minor_parse("[1 2|1 2]"), 4, true);
    double one = seconds_since(start);
    report("1g single relation below one second", rel.verified && one < 1.0, time_detail(one));
}

// --- criterion 2: exhaustive verified sweeps ------------------------------

void check_sweeps() {
    struct Range {
        int n;
        int max_size;
    };
    for (Range r : {Range{2, 1}, Range{3, 2}, Range{4, 3}}) {
        auto start = std::chrono::steady_clock::now();
        SweepConfig cfg;
        cfg.n = r.n;
        cfg.max_size = r.max_size;
        SweepSummary s = run_sweep(cfg);
        std::string name = "2 sweep n=" + std::to_string(r.n) +
                           " sizes<=" + std::to_string(r.max_size) + " (" +
                           std::to_string(s.total) + " pairs)";
        report(name, s.all_ok() && s.total > 0, time_detail(seconds_since(start)));
    }
}

// --- criterion 3: the two minor expansions agree --------------------------

void check_minor_flavors() {
    bool ok = true;
    for (int n = 1; n <= 4 && ok; ++n)
        for (int r = 1; r <= n && ok; ++r)
            for (const Index& rows : subsets(n, r))
                for (const Index& cols : subsets(n, r))
                    if (!congruent(row_minor_tensor(rows, cols), col_minor_tensor(rows, cols))) {
                        ok = false;
                        break;
                    }
    report("3 row-ordered and column-ordered minor expansions congruent (n<=4)", ok);
}

// --- criterion 4: rewriting system is confluent ---------------------------

void check_confluence() {
    bool defining_ok = true;
    for (int i = 1; i <= 4; ++i)
        for (int j = 1; j <= 4; ++j)
            for (int k = 1; k <= 4; ++k)
                for (int l = 1; l <= 4; ++l) {
                    defining_ok = defining_ok && normal_form(relation_r(i, j, k, l)).is_zero() &&
                                  normal_form(relation_s(i, j, k, l)).is_zero();
                }
    report("4a defining relations reduce to zero (all generator pairs, n<=4)", defining_ok);

    std::mt19937 rng(20240824);
    std::uniform_int_distribution<int> idx(1, 3);
    std::uniform_int_distribution<int> len(0, 5);
    bool random_ok = true;
    for (int trial = 0; trial < 1000; ++trial) {
        Word w;
        int l = len(rng);
        for (int p = 0; p < l; ++p) w.push_back({idx(rng), idx(rng)});
        Tensor t = Tensor::monomial(w);
        if (normal_form_randomized(t, rng) != normal_form(t)) {
            random_ok = false;
            break;
        }
    }
    report("4b random rewrite order agrees with leftmost strategy (1000 trials)", random_ok);
}

// --- criterion 5: structural operator identities --------------------------

void check_cross_applied() {
    bool ok = true;
    for (int i = 1; i <= 4; ++i)
        for (int j = 1; j <= 4; ++j)
            for (int k = 1; k <= 4; ++k)
                for (int l = 1; l <= 4; ++l) {
                    if (i != k) {
                        int sign = i > k ? 1 : -1;
                        Tensor corr = Tensor::monomial(
                            {{k, j}, {i, l}}, LaurentPoly::q_inv_minus_q() * LaurentPoly(sign));
                        ok = ok && relation_r(i, j, k, l) ==
                                       relation_r_applied(k, j, i, l, i, j, k, l) + corr;
                    }
                    if (j != l) {
                        int sign = j > l ? 1 : -1;
                        Tensor corr = Tensor::monomial(
                            {{i, l}, {k, j}}, LaurentPoly::q_inv_minus_q() * LaurentPoly(sign));
                        ok = ok && relation_s(i, j, k, l) ==
                                       relation_s_applied(i, l, k, j, i, j, k, l) + corr;
                    }
                }
    report("5a cross-applied relation identities (all generator pairs, n<=4)", ok);
}

void check_pair_swap_commutation() {
    std::mt19937 rng(20240819);
    const int n0 = 4;
    std::uniform_int_distribution<int> pos(0, n0 - 2);
    std::uniform_int_distribution<int> mdist(1, n0 - 1);
    Index base(n0);
    std::iota(base.begin(), base.end(), 1);

    bool ok = true;
    for (int trial = 0; trial < 500 && ok; ++trial) {
        Index rows = base, cols = base;
        std::shuffle(rows.begin(), rows.end(), rng);
        std::shuffle(cols.begin(), cols.end(), rng);
        Word w;
        for (int p = 0; p < n0; ++p) w.push_back({rows[p], cols[p]});
        Tensor theta = Tensor::monomial(w);
        int p = pos(rng);
        int m = mdist(rng);
        Perm sigma = perm_adjacent(m, n0);
        const Gen x = w[p];
        const Gen y = w[p + 1];

        Tensor sigma_theta = row_action(sigma, theta);
        Tensor lhs = apply_f(sigma_theta, sigma_theta.terms().begin()->first, sigma[x.row - 1],
                             x.col, sigma[y.row - 1], y.col);
        Tensor rhs = row_action(sigma, apply_f(theta, w, x.row, x.col, y.row, y.col));
        if (x.row == m + 1 && y.row == m)
            rhs += theta.scaled(LaurentPoly::q_inv_minus_q());
        else if (x.row == m && y.row == m + 1)
            rhs -= theta.scaled(LaurentPoly::q_inv_minus_q());
        ok = lhs == rhs;

        Tensor tau_theta = col_action(sigma, theta);
        Tensor lhs_c = apply_g(tau_theta, tau_theta.terms().begin()->first, x.row,
                               sigma[x.col - 1], y.row, sigma[y.col - 1]);
        Tensor rhs_c = col_action(sigma, apply_g(theta, w, x.row, x.col, y.row, y.col));
        if (x.col == m + 1 && y.col == m)
            rhs_c += theta.scaled(LaurentPoly::q_inv_minus_q());
        else if (x.col == m && y.col == m + 1)
            rhs_c -= theta.scaled(LaurentPoly::q_inv_minus_q());
        ok = ok && lhs_c == rhs_c;
    }
    report("5b pair replacement vs adjacent transpositions (500 random trials)", ok);
}

void check_reorder_correction() {
    std::mt19937 rng(20240821);
    const int n0 = 4;
    std::uniform_int_distribution<int> mdist(1, n0 - 1);
    Index base(n0);
    std::iota(base.begin(), base.end(), 1);

    bool ok = true;
    for (int trial = 0; trial < 500 && ok; ++trial) {
        Index rows = base, cols = base;
        std::shuffle(rows.begin(), rows.end(), rng);
        std::shuffle(cols.begin(), cols.end(), rng);
        Index target = base;
        std::shuffle(target.begin(), target.end(), rng);
        Word w;
        for (int p = 0; p < n0; ++p) w.push_back({rows[p], cols[p]});
        Tensor t = Tensor::monomial(w);
        int m = mdist(rng);
        Perm sigma = perm_adjacent(m, n0);

        Tensor lhs = reorder_rows_to(row_action(sigma, t), index_image(sigma, target));
        Tensor rhs = row_action(sigma, reorder_rows_to(t, target)) +
                     t.scaled(LaurentPoly::q_inv_minus_q() *
                              LaurentPoly(coeff_e_full(m, target, rows)));
        ok = congruent(lhs, rhs);

        Tensor lhs_c = reorder_cols_to(col_action(sigma, t), index_image(sigma, target));
        Tensor rhs_c = col_action(sigma, reorder_cols_to(t, target)) +
                       t.scaled(LaurentPoly::q_inv_minus_q() *
                                LaurentPoly(coeff_e_full(m, target, cols)));
        ok = ok && congruent(lhs_c, rhs_c);
    }
    report("5c full reorders vs adjacent transpositions (500 random trials)", ok);
}

void check_reorder_exhaustive() {
    bool ok = true;
    for (int n0 = 1; n0 <= 4 && ok; ++n0) {
        Index base(n0);
        std::iota(base.begin(), base.end(), 1);
        Index rows = base;
        do {
            Word w;
            for (int p = 0; p < n0; ++p) w.push_back({rows[p], rows[p] % n0 + 1});
            Tensor t = Tensor::monomial(w);
            Index target = base;
            do {
                Tensor r = reorder_rows_to(t, target);
                ok = ok && matches_row_sequence(r, target) && congruent(r, t);
            } while (ok && std::next_permutation(target.begin(), target.end()));
        } while (ok && std::next_permutation(rows.begin(), rows.end()));
    }
    report("5d reorders reach every target and preserve the class (words up to degree 4)", ok);
}

// --- criterion 6: global shape of every generated relation ----------------

void check_descent_and_classical_limit() {
    bool descend_ok = true;
    std::string bad;
    for (int n = 2; n <= 4 && descend_ok; ++n) {
        int max_size = n <= 3 ? n - 1 : 3;
        std::vector<MinorSpec> minors = enumerate_minors(n, max_size);
        for (const MinorSpec& a : minors) {
            for (const MinorSpec& b : minors) {
                Relation rel = commute(a, b, n, false);
                // Tower-built relations (disjoint rows) descend on the left
                // minor; the shared-row routes conjugate the order, so there
                // descent may land on the right minor instead.
                bool shared_rows = rel.case_tag.starts_with("7");
                if (rel.terms.empty()) {
                    descend_ok = false;
                } else {
                    if (rel.terms[0].left != rel.lead_second ||
                        rel.terms[0].right != rel.lead_first)
                        descend_ok = false;
                    for (size_t t = 1; t < rel.terms.size(); ++t) {
                        bool left_ok = gl_less(rel.terms[t].left, rel.lead_second);
                        bool right_ok = gl_less(rel.terms[t].right, rel.lead_first);
                        if (!(left_ok || (shared_rows && right_ok))) descend_ok = false;
                    }
                }
                if (!descend_ok) {
                    bad = minor_to_string(a) + " " + minor_to_string(b);
                    break;
                }
            }
            if (!descend_ok) break;
        }
    }
    report("6a correction terms strictly descend below the lead product (full sweep range)",
           descend_ok, bad);

    bool q1_ok = true;
    for (int n = 2; n <= 4; ++n) {
        int max_size = n <= 3 ? n - 1 : 3;
        q1_ok = q1_ok && run_q1_check(n, max_size).all_ok();
    }
    report("6b classical limit at q=1: exchange becomes exact commutation (full sweep range)",
           q1_ok);
}

}  // namespace

int main() {
    auto start = std::chrono::steady_clock::now();
    check_fixtures();
    check_sweeps();
    check_minor_flavors();
    check_confluence();
    check_cross_applied();
    check_pair_swap_commutation();
    check_reorder_correction();
    check_reorder_exhaustive();
    check_descent_and_classical_limit();

    bool all = failures == 0;
    report("7 full symbolic verification suite", all, time_detail(seconds_since(start)));
    if (all)
        std::printf("all acceptance criteria satisfied\n");
    else
        std::printf("%d criterion(s) failed\n", failures > 0 ? failures - 1 : failures);
    return all ? 0 : 1;
}
