#include <numeric>
#include <random>

#include "doctest.h"
#include "qmb/fg.hpp"
#include "qmb/manin.hpp"

using namespace qmb;

namespace {

Tensor mono(const char* text) { return Tensor::monomial(word_parse(text)); }

Index index_image(const Perm& sigma, const Index& idx) {
    Index out;
    for (int v : idx) out.push_back(sigma[v - 1]);
    return out;
}

}  // namespace

TEST_CASE("single pair replacement, both flavors") {
    Tensor t = mono("a31.a43.a12.a24");
    Tensor g = apply_g(t, word_parse("a31.a43.a12.a24"), 4, 3, 1, 2);
    Tensor expect = mono("a31.a12.a43.a24") -
                    mono("a31.a42.a13.a24").scaled(LaurentPoly::q_inv_minus_q());
    CHECK(g == expect);

    Tensor f = apply_f(t, word_parse("a31.a43.a12.a24"), 4, 3, 1, 2);
    Tensor expect_f = mono("a31.a12.a43.a24") -
                      mono("a31.a13.a42.a24").scaled(LaurentPoly::q_inv_minus_q());
    CHECK(f == expect_f);

    // a same-row pair has no correction word and swaps with coefficient 1
    // (the replacement is not the relation rewrite: no power of q appears)
    Tensor row_pair = mono("a11.a12");
    CHECK(apply_f(row_pair, word_parse("a11.a12"), 1, 1, 1, 2) == mono("a12.a11"));

    // absent pair: identity; absent word: error
    CHECK(apply_f(t, word_parse("a31.a43.a12.a24"), 1, 1, 2, 2) == t);
    CHECK_THROWS_AS(apply_f(t, word_parse("a11.a22"), 1, 1, 2, 2), std::invalid_argument);
}

TEST_CASE("replacement preserves the congruence class on multilinear words") {
    // On words with pairwise distinct rows and pairwise distinct columns the
    // replacement coincides with the relation rewrite, so t and its image are
    // congruent modulo the defining ideal.
    std::mt19937 rng(555);
    Index vals{1, 2, 3, 4};
    for (int trial = 0; trial < 100; ++trial) {
        Index rows = vals, cols = vals;
        std::shuffle(rows.begin(), rows.end(), rng);
        std::shuffle(cols.begin(), cols.end(), rng);
        Word w;
        for (int p = 0; p < 3; ++p) w.push_back({rows[p], cols[p]});
        Tensor t = Tensor::monomial(w);
        CHECK(congruent(t, apply_f(t, w, w[0].row, w[0].col, w[1].row, w[1].col)));
        CHECK(congruent(t, apply_g(t, w, w[1].row, w[1].col, w[2].row, w[2].col)));
    }
}

TEST_CASE("pair replacement commutes with adjacent row transpositions") {
    // For a word with pair x.y at position p and sigma = (m, m+1) on rows:
    //   F_{sigma x, sigma y}(sigma theta) = sigma(F_{x,y} theta)
    // when {x.row, y.row} != {m, m+1}; with rows (m+1, m) the left side gains
    // +(q^-1 - q) theta, with rows (m, m+1) it gains -(q^-1 - q) theta.
    std::mt19937 rng(20240819);
    const int n0 = 4;
    std::uniform_int_distribution<int> pos(0, n0 - 2);
    std::uniform_int_distribution<int> mdist(1, n0 - 1);
    Index base(n0);
    std::iota(base.begin(), base.end(), 1);

    for (int trial = 0; trial < 600; ++trial) {
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

        Tensor lhs = apply_f(row_action(sigma, theta), row_action(sigma, theta).terms().begin()->first,
                             sigma[x.row - 1], x.col, sigma[y.row - 1], y.col);
        Tensor rhs = row_action(sigma, apply_f(theta, w, x.row, x.col, y.row, y.col));
        if (x.row == m + 1 && y.row == m)
            rhs += theta.scaled(LaurentPoly::q_inv_minus_q());
        else if (x.row == m && y.row == m + 1)
            rhs -= theta.scaled(LaurentPoly::q_inv_minus_q());
        CAPTURE(word_to_string(w)); CAPTURE(p); CAPTURE(m);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("pair replacement commutes with adjacent column transpositions") {
    std::mt19937 rng(20240820);
    const int n0 = 4;
    std::uniform_int_distribution<int> pos(0, n0 - 2);
    std::uniform_int_distribution<int> mdist(1, n0 - 1);
    Index base(n0);
    std::iota(base.begin(), base.end(), 1);

    for (int trial = 0; trial < 600; ++trial) {
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

        Tensor lhs = apply_g(col_action(sigma, theta), col_action(sigma, theta).terms().begin()->first,
                             x.row, sigma[x.col - 1], y.row, sigma[y.col - 1]);
        Tensor rhs = col_action(sigma, apply_g(theta, w, x.row, x.col, y.row, y.col));
        if (x.col == m + 1 && y.col == m)
            rhs += theta.scaled(LaurentPoly::q_inv_minus_q());
        else if (x.col == m && y.col == m + 1)
            rhs -= theta.scaled(LaurentPoly::q_inv_minus_q());
        CAPTURE(word_to_string(w)); CAPTURE(p); CAPTURE(m);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("reordering reaches the target sequence and preserves the class") {
    for (int n0 = 1; n0 <= 4; ++n0) {
        Index base(n0);
        std::iota(base.begin(), base.end(), 1);
        Index rows = base;
        std::sort(rows.begin(), rows.end());
        do {
            // distinct rows and distinct columns so the replacement rewrites
            // stay inside the congruence class
            Word w;
            for (int p = 0; p < n0; ++p) w.push_back({rows[p], rows[p] % n0 + 1});
            Tensor t = Tensor::monomial(w);
            Index target = base;
            do {
                CAPTURE(rows); CAPTURE(target);
                Tensor r = reorder_rows_to(t, target);
                CHECK(matches_row_sequence(r, target));
                CHECK(congruent(r, t));
            } while (std::next_permutation(target.begin(), target.end()));
        } while (std::next_permutation(rows.begin(), rows.end()));
    }
}

TEST_CASE("column reordering mirrors the row case") {
    Tensor t = mono("a12.a23.a31");
    Tensor r = reorder_cols_to(t, {1, 2, 3});
    CHECK(matches_col_sequence(r, Index{1, 2, 3}));
    CHECK(congruent(r, t));

    Tensor k = reorder_cols(t, {3});
    CHECK(matches_col_sequence(k, Index{3, 1, 2}));
    CHECK_THROWS_AS(reorder_rows_to(t, Index{1, 1, 2}), std::invalid_argument);
}

TEST_CASE("transposition correction coefficient") {
    CHECK(coeff_e_full(1, {1, 2}, {2, 1}) == 1);
    CHECK(coeff_e_full(1, {2, 1}, {1, 2}) == -1);
    CHECK(coeff_e_full(1, {1, 2}, {1, 2}) == 0);
    CHECK(coeff_e_full(2, {3, 1, 2}, {2, 1, 3}) == -1);
    CHECK(coeff_e(1, {2}, {1, 2}) == -1);  // target (2,1)
    CHECK_THROWS_AS(coeff_e_full(3, {1, 2}, {2, 1}), std::invalid_argument);
}

TEST_CASE("full reorders commute with adjacent transpositions up to a congruent correction") {
    // With sigma = (m, m+1) acting on rows, E = the correction coefficient:
    //   reorder(sigma t -> sigma target) == sigma(reorder(t -> target))
    //                                       + (q^-1 - q) E t'   with t' ~ t.
    std::mt19937 rng(20240821);
    const int n0 = 4;
    std::uniform_int_distribution<int> mdist(1, n0 - 1);
    Index base(n0);
    std::iota(base.begin(), base.end(), 1);

    for (int trial = 0; trial < 600; ++trial) {
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
        int e = coeff_e_full(m, target, rows);
        Tensor rhs = row_action(sigma, reorder_rows_to(t, target)) +
                     t.scaled(LaurentPoly::q_inv_minus_q() * LaurentPoly(e));
        CAPTURE(word_to_string(w)); CAPTURE(target); CAPTURE(m);
        CHECK(congruent(lhs, rhs));
    }
}

TEST_CASE("column version of the reorder correction") {
    std::mt19937 rng(20240822);
    const int n0 = 4;
    std::uniform_int_distribution<int> mdist(1, n0 - 1);
    Index base(n0);
    std::iota(base.begin(), base.end(), 1);

    for (int trial = 0; trial < 600; ++trial) {
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

        Tensor lhs = reorder_cols_to(col_action(sigma, t), index_image(sigma, target));
        int e = coeff_e_full(m, target, cols);
        Tensor rhs = col_action(sigma, reorder_cols_to(t, target)) +
                     t.scaled(LaurentPoly::q_inv_minus_q() * LaurentPoly(e));
        CAPTURE(word_to_string(w)); CAPTURE(target); CAPTURE(m);
        CHECK(congruent(lhs, rhs));
    }
}
