#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "qmb/laurent.hpp"

namespace qmb {

/// Sorted-or-not sequence of distinct positive integers (rows or columns).
using Index = std::vector<int>;

/// One generator a_rc of the free algebra.
struct Gen {
    int row = 0;
    int col = 0;
    auto operator<=>(const Gen&) const = default;
};

/// Monomial in the free algebra: a sequence of generators.
using Word = std::vector<Gen>;

/// Text form "a31.a43.a12.a24"; the empty word prints as "1".
std::string word_to_string(const Word& w);
/// Parse the text form above. Throws std::invalid_argument on bad input.
Word word_parse(const std::string& text);

Index word_rows(const Word& w);
Index word_cols(const Word& w);

/// Free-algebra element with LaurentPoly coefficients: finite word -> coeff
/// map with no zero coefficients stored.
class Tensor {
public:
    Tensor() = default;
    static Tensor unit();  // the empty word with coefficient 1
    static Tensor monomial(Word w, LaurentPoly coeff = LaurentPoly(1));

    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    void add(const Word& w, const LaurentPoly& coeff);

    Tensor operator+(const Tensor& o) const;
    Tensor operator-(const Tensor& o) const;
    Tensor operator-() const;
    Tensor& operator+=(const Tensor& o);
    Tensor& operator-=(const Tensor& o);

    /// Concatenation product, extended bilinearly.
    Tensor operator*(const Tensor& o) const;
    Tensor scaled(const LaurentPoly& coeff) const;

    bool operator==(const Tensor& o) const { return terms_ == o.terms_; }
    bool operator!=(const Tensor& o) const { return terms_ != o.terms_; }

    const std::map<Word, LaurentPoly>& terms() const { return terms_; }

    /// Signed sum of "coeff*word" pieces in map (lex) word order.
    std::string to_string() const;

private:
    std::map<Word, LaurentPoly> terms_;
};

/// A permutation of [1, n0] given by its image table (1-based: sigma maps
/// v to perm[v-1]).
using Perm = std::vector<int>;

Perm perm_identity(int n0);
Perm perm_compose(const Perm& outer, const Perm& inner);  // outer after inner
/// Adjacent transposition (m, m+1) inside S_{n0}.
Perm perm_adjacent(int m, int n0);

/// Apply sigma to every row value of every word. Every word must have length
/// n0 = sigma.size() and row values in [1, n0]; otherwise throws.
Tensor row_action(const Perm& sigma, const Tensor& t);
/// Same for column values.
Tensor col_action(const Perm& sigma, const Tensor& t);

/// Apply a transposition (a, b) to every entry of an index sequence.
Index index_apply_transposition(const Index& idx, int a, int b);

/// Number of inversions of the sequence (pairs p < p' with idx[p] > idx[p']).
int inversions(const Index& idx);

/// Target row sequence (K, K-complement ascending) inside [1, n0].
Index row_order_target(const Index& k, int n0);

/// True when every word of t has row sequence exactly `target`.
bool matches_row_sequence(const Tensor& t, const Index& target);
bool matches_col_sequence(const Tensor& t, const Index& target);

/// True when every word of t has row sequence (K, K' ascending).
bool is_in_row_order(const Tensor& t, const Index& k, int n0);
bool is_in_col_order(const Tensor& t, const Index& k, int n0);

}  // namespace qmb
