#include "qmb/minor.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qmb {

void minor_validate(const MinorSpec& m, int n) {
    if (m.rows.size() != m.cols.size() || m.rows.empty())
        throw std::invalid_argument("minor needs equally sized nonempty row/column indices");
    for (const Index* idx : {&m.rows, &m.cols}) {
        int prev = 0;
        for (int v : *idx) {
            if (v <= prev || v > n)
                throw std::invalid_argument("minor index must be strictly increasing within [1, n]");
            prev = v;
        }
    }
}

std::string minor_to_string(const MinorSpec& m) {
    std::ostringstream out;
    out << "[";
    for (size_t p = 0; p < m.rows.size(); ++p) out << (p ? " " : "") << m.rows[p];
    out << "|";
    for (size_t p = 0; p < m.cols.size(); ++p) out << (p ? " " : "") << m.cols[p];
    out << "]";
    return out.str();
}

std::string minor_to_latex(const MinorSpec& m) {
    std::ostringstream out;
    out << "[";
    for (int v : m.rows) out << v;
    out << ",";
    for (int v : m.cols) out << v;
    out << "]";
    return out.str();
}

MinorSpec minor_parse(const std::string& text) {
    auto fail = [&]() -> MinorSpec {
        throw std::invalid_argument("malformed minor: " + text);
    };
    size_t open = text.find('[');
    size_t bar = text.find('|');
    size_t close = text.find(']');
    if (open == std::string::npos || bar == std::string::npos || close == std::string::npos ||
        !(open < bar && bar < close))
        return fail();
    auto parse_list = [&](size_t from, size_t to) {
        Index idx;
        std::istringstream in(text.substr(from, to - from));
        int v = 0;
        while (in >> v) idx.push_back(v);
        if (!in.eof()) fail();
        return idx;
    };
    MinorSpec m;
    m.rows = parse_list(open + 1, bar);
    m.cols = parse_list(bar + 1, close);
    if (m.rows.empty() || m.rows.size() != m.cols.size()) fail();
    return m;
}

namespace {

bool strictly_increasing(const Index& idx) {
    for (size_t p = 1; p < idx.size(); ++p)
        if (idx[p] <= idx[p - 1]) return false;
    return true;
}

void check_distinct(const Index& idx) {
    Index s = idx;
    std::sort(s.begin(), s.end());
    for (size_t p = 1; p < s.size(); ++p)
        if (s[p] == s[p - 1])
            throw std::invalid_argument("minor index values must be distinct");
    if (!s.empty() && s.front() < 1)
        throw std::invalid_argument("minor index values must be positive");
}

// Expansion with both indices already sorted. `row_flavor` selects which
// side stays in index order inside the words.
Tensor sorted_expansion(const Index& rows, const Index& cols, bool row_flavor) {
    const size_t r = rows.size();
    Tensor t;
    const Index& fixed = row_flavor ? rows : cols;
    Index other = row_flavor ? cols : rows;
    std::sort(other.begin(), other.end());
    do {
        Word w(r);
        for (size_t p = 0; p < r; ++p) {
            w[p].row = row_flavor ? fixed[p] : other[p];
            w[p].col = row_flavor ? other[p] : fixed[p];
        }
        t.add(w, LaurentPoly::neg_q_power(-inversions(other)));
    } while (std::next_permutation(other.begin(), other.end()));
    return t;
}

Tensor minor_expansion(const Index& rows, const Index& cols, bool row_flavor) {
    if (rows.size() != cols.size())
        throw std::invalid_argument("minor needs equally sized row/column indices");
    check_distinct(rows);
    check_distinct(cols);
    if (rows.empty()) return Tensor::unit();
    if (strictly_increasing(rows) && strictly_increasing(cols))
        return sorted_expansion(rows, cols, row_flavor);
    SortedMinor s = sort_minor(rows, cols);
    return sorted_expansion(s.minor.rows, s.minor.cols, row_flavor).scaled(s.coeff);
}

}  // namespace

Tensor row_minor_tensor(const Index& rows, const Index& cols) {
    return minor_expansion(rows, cols, true);
}

Tensor col_minor_tensor(const Index& rows, const Index& cols) {
    return minor_expansion(rows, cols, false);
}

SortedMinor sort_minor(const Index& rows, const Index& cols) {
    check_distinct(rows);
    check_distinct(cols);
    SortedMinor s;
    s.coeff = LaurentPoly::neg_q_power(-inversions(rows) - inversions(cols));
    s.minor.rows = rows;
    s.minor.cols = cols;
    std::sort(s.minor.rows.begin(), s.minor.rows.end());
    std::sort(s.minor.cols.begin(), s.minor.cols.end());
    return s;
}

}  // namespace qmb
