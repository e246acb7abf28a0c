#include "qmb/manin.hpp"

#include <mutex>
#include <shared_mutex>
#include <stdexcept>

namespace qmb {

RelationABC relation_abc(int i, int j, int k, int l) {
    RelationABC r;
    if (j == l) r.a = (i < k) ? -1 : (i > k ? 1 : 0);
    if (i == k) r.b = (j < l) ? -1 : (j > l ? 1 : 0);
    if (i < k && j < l) r.c = 1;
    if (i > k && j > l) r.c = -1;
    return r;
}

namespace {

Tensor relation_impl(int i, int j, int k, int l, int al, int be, int ga, int de,
                     bool second_kind) {
    RelationABC abc = relation_abc(i, j, k, l);
    Tensor t;
    t.add({{al, be}, {ga, de}}, LaurentPoly(1));
    t.add({{ga, de}, {al, be}}, -LaurentPoly::q_power(abc.a + abc.b));
    if (abc.c != 0) {
        Word corr = second_kind ? Word{{al, de}, {ga, be}} : Word{{ga, be}, {al, de}};
        t.add(corr, LaurentPoly::q_inv_minus_q() * LaurentPoly(-abc.c));
    }
    return t;
}

}  // namespace

Tensor relation_r(int i, int j, int k, int l) {
    return relation_impl(i, j, k, l, i, j, k, l, false);
}

Tensor relation_s(int i, int j, int k, int l) {
    return relation_impl(i, j, k, l, i, j, k, l, true);
}

Tensor relation_r_applied(int i, int j, int k, int l, int al, int be, int ga, int de) {
    return relation_impl(i, j, k, l, al, be, ga, de, false);
}

Tensor relation_s_applied(int i, int j, int k, int l, int al, int be, int ga, int de) {
    return relation_impl(i, j, k, l, al, be, ga, de, true);
}

bool word_is_normal(const Word& w) {
    for (size_t p = 0; p + 1 < w.size(); ++p)
        if (w[p + 1] < w[p]) return false;
    return true;
}

namespace {

// Straightening step for an adjacent pair x = a_ij, y = a_kl with x > y:
//   x.y = q^(a'+b') y.x + c'(q^-1 - q) a_kj.a_il
// where (a', b', c') are relation_abc(i, j, k, l). In every case the
// replacement words are lexicographically smaller at the rewrite position with
// an unchanged prefix, so iterated rewriting terminates.
struct RewritePiece {
    Word word;
    LaurentPoly coeff;
};

std::vector<RewritePiece> rewrite_at(const Word& w, size_t p) {
    const Gen x = w[p];
    const Gen y = w[p + 1];
    RelationABC abc = relation_abc(x.row, x.col, y.row, y.col);
    std::vector<RewritePiece> out;

    Word swapped = w;
    std::swap(swapped[p], swapped[p + 1]);
    out.push_back({std::move(swapped), LaurentPoly::q_power(abc.a + abc.b)});

    if (abc.c != 0) {
        Word corr = w;
        corr[p] = {y.row, x.col};
        corr[p + 1] = {x.row, y.col};
        out.push_back({std::move(corr), LaurentPoly::q_inv_minus_q() * LaurentPoly(abc.c)});
    }
    return out;
}

std::shared_mutex nf_mutex;
std::map<Word, Tensor> nf_cache;

}  // namespace

size_t normal_form_cache_size() {
    std::shared_lock lock(nf_mutex);
    return nf_cache.size();
}

Tensor normal_form(const Word& w) {
    if (word_is_normal(w)) return Tensor::monomial(w);
    {
        std::shared_lock lock(nf_mutex);
        auto it = nf_cache.find(w);
        if (it != nf_cache.end()) return it->second;
    }
    size_t p = 0;
    while (!(w[p + 1] < w[p])) ++p;
    Tensor result;
    for (const RewritePiece& piece : rewrite_at(w, p))
        result += normal_form(piece.word).scaled(piece.coeff);
    {
        std::unique_lock lock(nf_mutex);
        nf_cache.emplace(w, result);
    }
    return result;
}

Tensor normal_form(const Tensor& t) {
    Tensor result;
    for (const auto& [w, c] : t.terms()) result += normal_form(w).scaled(c);
    return result;
}

Tensor normal_form_randomized(const Tensor& t, std::mt19937& rng) {
    Tensor done;
    Tensor pending;
    for (const auto& [w, c] : t.terms())
        (word_is_normal(w) ? done : pending).add(w, c);

    while (!pending.is_zero()) {
        // Every out-of-order adjacent position across all pending words.
        std::vector<std::pair<Word, size_t>> sites;
        for (const auto& [w, c] : pending.terms())
            for (size_t p = 0; p + 1 < w.size(); ++p)
                if (w[p + 1] < w[p]) sites.emplace_back(w, p);

        std::uniform_int_distribution<size_t> pick(0, sites.size() - 1);
        const auto& [w, p] = sites[pick(rng)];
        LaurentPoly coeff = pending.terms().at(w);
        pending -= Tensor::monomial(w, coeff);
        for (const RewritePiece& piece : rewrite_at(w, p)) {
            LaurentPoly c = piece.coeff * coeff;
            (word_is_normal(piece.word) ? done : pending).add(piece.word, c);
        }
    }
    return done;
}

bool congruent(const Tensor& t1, const Tensor& t2) {
    return normal_form(t1 - t2).is_zero();
}

}  // namespace qmb
