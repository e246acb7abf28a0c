#pragma once

#include <compare>
#include <string>

#include "qmb/tensor.hpp"

namespace qmb {

/// Square quantum minor determined by its row and column index sets.
/// Canonical specs have both indices strictly increasing and equal sizes.
struct MinorSpec {
    Index rows;
    Index cols;
    auto operator<=>(const MinorSpec&) const = default;

    int size() const { return static_cast<int>(rows.size()); }
};

/// Throws std::invalid_argument unless rows/cols are strictly increasing,
/// of equal nonzero size, with values in [1, n].
void minor_validate(const MinorSpec& m, int n);

/// Text form "[3 4|1 3]".
std::string minor_to_string(const MinorSpec& m);
/// LaTeX form "[34,13]".
std::string minor_to_latex(const MinorSpec& m);
MinorSpec minor_parse(const std::string& text);

/// Row-ordered expansion: sum over bijections rows -> cols of
/// (-q)^(-inv) a_{i_1 c_1} ... a_{i_r c_r}, rows in increasing order, inv the
/// inversion count of the column value sequence. For an unsorted index the
/// minor denotes (-q)^(-inv(rows) - inv(cols)) times the sorted one, and the
/// expansion reflects that. Size 0 gives the unit tensor.
Tensor row_minor_tensor(const Index& rows, const Index& cols);
inline Tensor row_minor_tensor(const MinorSpec& m) { return row_minor_tensor(m.rows, m.cols); }

/// Column-ordered expansion: words carry columns in increasing order and the
/// sum runs over bijections cols -> rows. Congruent to the row-ordered form.
Tensor col_minor_tensor(const Index& rows, const Index& cols);
inline Tensor col_minor_tensor(const MinorSpec& m) { return col_minor_tensor(m.rows, m.cols); }

/// Rewrites a minor on possibly-unsorted indices as
/// coeff * [sorted rows | sorted cols] with coeff = (-q)^(-inv(rows)-inv(cols)).
struct SortedMinor {
    LaurentPoly coeff;
    MinorSpec minor;
};
SortedMinor sort_minor(const Index& rows, const Index& cols);

}  // namespace qmb
