#include "qmb/tensor.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace qmb {

std::string word_to_string(const Word& w) {
    if (w.empty()) return "1";
    std::ostringstream out;
    bool first = true;
    for (const Gen& g : w) {
        if (!first) out << ".";
        first = false;
        out << "a" << g.row << g.col;
    }
    return out.str();
}

Word word_parse(const std::string& text) {
    if (text == "1") return {};
    Word w;
    size_t i = 0;
    while (i < text.size()) {
        if (text[i] != 'a' || i + 3 > text.size())
            throw std::invalid_argument("malformed word: " + text);
        char r = text[i + 1];
        char c = text[i + 2];
        if (!std::isdigit(static_cast<unsigned char>(r)) ||
            !std::isdigit(static_cast<unsigned char>(c)) || r == '0' || c == '0')
            throw std::invalid_argument("malformed word: " + text);
        w.push_back({r - '0', c - '0'});
        i += 3;
        if (i == text.size()) break;
        if (text[i] != '.') throw std::invalid_argument("malformed word: " + text);
        ++i;
        if (i == text.size()) throw std::invalid_argument("malformed word: " + text);
    }
    if (w.empty()) throw std::invalid_argument("malformed word: " + text);
    return w;
}

Index word_rows(const Word& w) {
    Index r;
    r.reserve(w.size());
    for (const Gen& g : w) r.push_back(g.row);
    return r;
}

Index word_cols(const Word& w) {
    Index c;
    c.reserve(w.size());
    for (const Gen& g : w) c.push_back(g.col);
    return c;
}

Tensor Tensor::unit() { return monomial(Word{}); }

Tensor Tensor::monomial(Word w, LaurentPoly coeff) {
    Tensor t;
    if (!coeff.is_zero()) t.terms_[std::move(w)] = std::move(coeff);
    return t;
}

void Tensor::add(const Word& w, const LaurentPoly& coeff) {
    if (coeff.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_[w] = coeff;
    } else {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Tensor& Tensor::operator+=(const Tensor& o) {
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
}

Tensor& Tensor::operator-=(const Tensor& o) {
    for (const auto& [w, c] : o.terms_) add(w, -c);
    return *this;
}

Tensor Tensor::operator+(const Tensor& o) const {
    Tensor r = *this;
    r += o;
    return r;
}

Tensor Tensor::operator-(const Tensor& o) const {
    Tensor r = *this;
    r -= o;
    return r;
}

Tensor Tensor::operator-() const {
    Tensor r;
    for (const auto& [w, c] : terms_) r.terms_[w] = -c;
    return r;
}

Tensor Tensor::operator*(const Tensor& o) const {
    Tensor r;
    for (const auto& [w1, c1] : terms_) {
        for (const auto& [w2, c2] : o.terms_) {
            Word w = w1;
            w.insert(w.end(), w2.begin(), w2.end());
            r.add(w, c1 * c2);
        }
    }
    return r;
}

Tensor Tensor::scaled(const LaurentPoly& coeff) const {
    Tensor r;
    if (coeff.is_zero()) return r;
    for (const auto& [w, c] : terms_) {
        LaurentPoly p = c * coeff;
        if (!p.is_zero()) r.terms_[w] = std::move(p);
    }
    return r;
}

std::string Tensor::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        Int coeff;
        int exponent = 0;
        std::string piece;
        if (c.single_term(coeff, exponent) && exponent == 0 && (coeff == 1 || coeff == -1)) {
            piece = (coeff < 0 ? "-" : "") + word_to_string(w);
        } else {
            bool simple = c.single_term(coeff, exponent);
            std::string poly = c.to_string();
            piece = simple ? poly + "*" + word_to_string(w)
                           : "(" + poly + ")*" + word_to_string(w);
        }
        if (first) {
            out << piece;
            first = false;
        } else if (!piece.empty() && piece[0] == '-') {
            out << " - " << piece.substr(1);
        } else {
            out << " + " << piece;
        }
    }
    return out.str();
}

Perm perm_identity(int n0) {
    Perm p(n0);
    for (int v = 1; v <= n0; ++v) p[v - 1] = v;
    return p;
}

Perm perm_compose(const Perm& outer, const Perm& inner) {
    if (outer.size() != inner.size())
        throw std::invalid_argument("permutation size mismatch in compose");
    Perm r(inner.size());
    for (size_t v = 0; v < inner.size(); ++v) r[v] = outer[inner[v] - 1];
    return r;
}

Perm perm_adjacent(int m, int n0) {
    if (m < 1 || m + 1 > n0) throw std::invalid_argument("adjacent transposition out of range");
    Perm p = perm_identity(n0);
    std::swap(p[m - 1], p[m]);
    return p;
}

namespace {

Tensor entry_action(const Perm& sigma, const Tensor& t, bool rows) {
    const int n0 = static_cast<int>(sigma.size());
    Tensor r;
    for (const auto& [w, c] : t.terms()) {
        if (static_cast<int>(w.size()) != n0)
            throw std::invalid_argument("word length does not match the permutation degree");
        Word img = w;
        for (Gen& g : img) {
            int& v = rows ? g.row : g.col;
            if (v < 1 || v > n0)
                throw std::invalid_argument("word entry out of range for the permutation");
            v = sigma[v - 1];
        }
        r.add(img, c);
    }
    return r;
}

}  // namespace

Tensor row_action(const Perm& sigma, const Tensor& t) { return entry_action(sigma, t, true); }

Tensor col_action(const Perm& sigma, const Tensor& t) { return entry_action(sigma, t, false); }

Index index_apply_transposition(const Index& idx, int a, int b) {
    Index r = idx;
    for (int& v : r) {
        if (v == a)
            v = b;
        else if (v == b)
            v = a;
    }
    return r;
}

int inversions(const Index& idx) {
    int count = 0;
    for (size_t p = 0; p < idx.size(); ++p)
        for (size_t p2 = p + 1; p2 < idx.size(); ++p2)
            if (idx[p] > idx[p2]) ++count;
    return count;
}

Index row_order_target(const Index& k, int n0) {
    std::vector<bool> used(n0 + 1, false);
    for (int v : k) {
        if (v < 1 || v > n0 || used[v])
            throw std::invalid_argument("index is not a subset of [1, n0]");
        used[v] = true;
    }
    Index target = k;
    for (int v = 1; v <= n0; ++v)
        if (!used[v]) target.push_back(v);
    return target;
}

bool matches_row_sequence(const Tensor& t, const Index& target) {
    for (const auto& [w, c] : t.terms())
        if (word_rows(w) != target) return false;
    return true;
}

bool matches_col_sequence(const Tensor& t, const Index& target) {
    for (const auto& [w, c] : t.terms())
        if (word_cols(w) != target) return false;
    return true;
}

bool is_in_row_order(const Tensor& t, const Index& k, int n0) {
    return matches_row_sequence(t, row_order_target(k, n0));
}

bool is_in_col_order(const Tensor& t, const Index& k, int n0) {
    return matches_col_sequence(t, row_order_target(k, n0));
}

}  // namespace qmb
