#pragma once

#include "qmb/tensor.hpp"

namespace qmb {

/// Replace the (at most one) adjacent occurrence of a_ij.a_kl in word `w` by
///   a_kl.a_ij + C(i,j,k,l)(q^-1 - q) a_kj.a_il
/// leaving every other word of t untouched. If a_ij.a_kl does not occur in w
/// the tensor is returned unchanged. Throws if w is not a word of t.
Tensor apply_f(const Tensor& t, const Word& w, int i, int j, int k, int l);

/// Same with correction word a_il.a_kj.
Tensor apply_g(const Tensor& t, const Word& w, int i, int j, int k, int l);

/// Replace the pair at word position p of every word of t with the F rule
/// (using that word's own letters). All words must have the same row
/// sequence; both replacement words swap the two row values, so the result
/// again has a shared row sequence.
Tensor apply_f_everywhere(const Tensor& t, size_t p);
/// Column counterpart with the G rule.
Tensor apply_g_everywhere(const Tensor& t, size_t p);

/// Bubble the shared row sequence of t into the exact target sequence by
/// F operations on adjacent out-of-order positions (leftmost first). The
/// target must be a permutation of the current shared row sequence. Every
/// pair of row values inverted between source and target is interchanged
/// exactly once.
Tensor reorder_rows_to(const Tensor& t, const Index& target);
/// Row order (K, K' ascending) inside [1, n0], n0 = word length.
Tensor reorder_rows(const Tensor& t, const Index& k);

Tensor reorder_cols_to(const Tensor& t, const Index& target);
Tensor reorder_cols(const Tensor& t, const Index& k);

/// Correction coefficient for swapping the row action of (m, m+1) past a
/// reorder toward full target sequence `target`, applied to a tensor with
/// shared row sequence `source`:
///   0 when m, m+1 appear in the same relative order in target and source,
///   +1 when target has m first and source has m+1 first,
///   -1 in the reversed situation.
int coeff_e_full(int m, const Index& target, const Index& source);
/// Target given as (K, K' ascending) inside [1, n0], n0 = source length.
int coeff_e(int m, const Index& k, const Index& source);

}  // namespace qmb
