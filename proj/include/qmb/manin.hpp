#pragma once

#include <random>

#include "qmb/tensor.hpp"

namespace qmb {

/// Exponent/correction data of the defining relation for the generator pair
/// a_ij, a_kl:
///   a = -1 if i < k and j = l, +1 if i > k and j = l, else 0
///   b = -1 if j < l and i = k, +1 if j > l and i = k, else 0
///   c = +1 if i < k and j < l, -1 if i > k and j > l, else 0
struct RelationABC {
    int a = 0;
    int b = 0;
    int c = 0;
};

RelationABC relation_abc(int i, int j, int k, int l);

/// First-kind defining relation as a tensor:
///   a_ij.a_kl - q^(a+b) a_kl.a_ij - c(q^-1 - q) a_kj.a_il
Tensor relation_r(int i, int j, int k, int l);
/// Second-kind relation; identical except the correction word is a_il.a_kj.
Tensor relation_s(int i, int j, int k, int l);

/// Variants with coefficients taken from (i,j,k,l) but letters from
/// (al,be,ga,de): a_{al,be}.a_{ga,de} - q^(a+b) a_{ga,de}.a_{al,be}
///                - c(q^-1 - q) a_{ga,be}.a_{al,de}.
Tensor relation_r_applied(int i, int j, int k, int l, int al, int be, int ga, int de);
/// Correction word a_{al,de}.a_{ga,be} instead.
Tensor relation_s_applied(int i, int j, int k, int l, int al, int be, int ga, int de);

/// True when the word's letters are sorted nondecreasingly by (row, col).
bool word_is_normal(const Word& w);

/// Canonical normal form of a word modulo the defining relations, computed by
/// always rewriting the leftmost out-of-order adjacent pair. Results are
/// memoized process-wide (thread safe).
Tensor normal_form(const Word& w);

/// Linear extension to tensors.
Tensor normal_form(const Tensor& t);

/// Normal form computed with randomly chosen rewrite positions instead of the
/// leftmost one; used to exercise confluence. Not memoized.
Tensor normal_form_randomized(const Tensor& t, std::mt19937& rng);

/// normal_form(t1 - t2).is_zero()
bool congruent(const Tensor& t1, const Tensor& t2);

/// Number of words currently memoized (diagnostics).
size_t normal_form_cache_size();

}  // namespace qmb
