#include "qmb/fg.hpp"

#include <algorithm>
#include <stdexcept>

#include "qmb/manin.hpp"

namespace qmb {

namespace {

// The shared F/G replacement at position p of word w:
//   x.y -> y.x + C(q^-1 - q) * corr
// where the correction word mixes the letters as the flavor dictates.
Tensor replace_pair(const Word& w, size_t p, const LaurentPoly& coeff, bool f_flavor) {
    const Gen x = w[p];
    const Gen y = w[p + 1];
    RelationABC abc = relation_abc(x.row, x.col, y.row, y.col);

    Tensor out;
    Word swapped = w;
    std::swap(swapped[p], swapped[p + 1]);
    out.add(swapped, coeff);
    if (abc.c != 0) {
        Word corr = w;
        if (f_flavor) {
            corr[p] = {y.row, x.col};
            corr[p + 1] = {x.row, y.col};
        } else {
            corr[p] = {x.row, y.col};
            corr[p + 1] = {y.row, x.col};
        }
        out.add(corr, coeff * LaurentPoly::q_inv_minus_q() * LaurentPoly(abc.c));
    }
    return out;
}

Tensor apply_one(const Tensor& t, const Word& w, int i, int j, int k, int l, bool f_flavor) {
    auto it = t.terms().find(w);
    if (it == t.terms().end())
        throw std::invalid_argument("operation target word is not present in the tensor");
    const Gen x{i, j};
    const Gen y{k, l};
    size_t pos = w.size();
    for (size_t p = 0; p + 1 < w.size(); ++p) {
        if (w[p] == x && w[p + 1] == y) {
            pos = p;
            break;
        }
    }
    if (pos == w.size()) return t;  // no occurrence: identity

    Tensor out = t;
    out -= Tensor::monomial(w, it->second);
    out += replace_pair(w, pos, it->second, f_flavor);
    return out;
}

Tensor apply_everywhere(const Tensor& t, size_t p, bool f_flavor) {
    Tensor out;
    for (const auto& [w, c] : t.terms()) {
        if (p + 1 >= w.size())
            throw std::invalid_argument("pair position out of range for a word of the tensor");
        out += replace_pair(w, p, c, f_flavor);
    }
    return out;
}

Index shared_sequence(const Tensor& t, bool rows) {
    Index seq;
    bool first = true;
    for (const auto& [w, c] : t.terms()) {
        Index s = rows ? word_rows(w) : word_cols(w);
        if (first) {
            seq = std::move(s);
            first = false;
        } else if (s != seq) {
            throw std::invalid_argument(rows ? "tensor has no shared row sequence"
                                             : "tensor has no shared column sequence");
        }
    }
    return seq;
}

Tensor reorder_to(const Tensor& t, const Index& target, bool rows) {
    if (t.is_zero()) return t;
    Index cur = shared_sequence(t, rows);
    {
        Index a = cur;
        Index b = target;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b)
            throw std::invalid_argument("reorder target is not a permutation of the sequence");
    }
    // Position of each value in the target; values may repeat, in which case
    // equal values are never treated as inverted.
    auto out_of_order = [&](int u, int v) {
        if (u == v) return false;
        auto pu = std::find(target.begin(), target.end(), u) - target.begin();
        auto pv = std::find(target.begin(), target.end(), v) - target.begin();
        return pu > pv;
    };
    Tensor result = t;
    while (cur != target) {
        size_t p = 0;
        while (p + 1 < cur.size() && !out_of_order(cur[p], cur[p + 1])) ++p;
        if (p + 1 >= cur.size())
            throw std::logic_error("reorder stalled before reaching the target sequence");
        result = apply_everywhere(result, p, rows);
        std::swap(cur[p], cur[p + 1]);
    }
    return result;
}

}  // namespace

Tensor apply_f(const Tensor& t, const Word& w, int i, int j, int k, int l) {
    return apply_one(t, w, i, j, k, l, true);
}

Tensor apply_g(const Tensor& t, const Word& w, int i, int j, int k, int l) {
    return apply_one(t, w, i, j, k, l, false);
}

Tensor apply_f_everywhere(const Tensor& t, size_t p) { return apply_everywhere(t, p, true); }

Tensor apply_g_everywhere(const Tensor& t, size_t p) { return apply_everywhere(t, p, false); }

Tensor reorder_rows_to(const Tensor& t, const Index& target) {
    return reorder_to(t, target, true);
}

Tensor reorder_rows(const Tensor& t, const Index& k) {
    if (t.is_zero()) return t;
    const int n0 = static_cast<int>(t.terms().begin()->first.size());
    return reorder_to(t, row_order_target(k, n0), true);
}

Tensor reorder_cols_to(const Tensor& t, const Index& target) {
    return reorder_to(t, target, false);
}

Tensor reorder_cols(const Tensor& t, const Index& k) {
    if (t.is_zero()) return t;
    const int n0 = static_cast<int>(t.terms().begin()->first.size());
    return reorder_to(t, row_order_target(k, n0), false);
}

int coeff_e_full(int m, const Index& target, const Index& source) {
    auto order = [m](const Index& seq, const char* what) {
        auto pm = std::find(seq.begin(), seq.end(), m);
        auto pm1 = std::find(seq.begin(), seq.end(), m + 1);
        if (pm == seq.end() || pm1 == seq.end())
            throw std::invalid_argument(std::string("both m and m+1 must occur in the ") + what);
        return pm < pm1;  // true: m comes first
    };
    bool t_first = order(target, "target sequence");
    bool s_first = order(source, "source sequence");
    if (t_first == s_first) return 0;
    return t_first ? 1 : -1;
}

int coeff_e(int m, const Index& k, const Index& source) {
    return coeff_e_full(m, row_order_target(k, static_cast<int>(source.size())), source);
}

}  // namespace qmb
