#pragma once

#include <string>
#include <vector>

#include "qmb/minor.hpp"
#include "qmb/tensor.hpp"

namespace qmb {

struct RelationTerm {
    LaurentPoly coeff;
    MinorSpec left;
    MinorSpec right;
};

/// Commutation relation between two quantum minors:
///   lead_coeff * [lead_first][lead_second] == sum of coeff * [left][right]
/// modulo the defining ideal. The first listed term is the reversed product
/// [lead_second][lead_first]; the rest are the correction terms.
struct Relation {
    int n = 0;
    LaurentPoly lead_coeff;
    MinorSpec lead_first;   // [K,L]
    MinorSpec lead_second;  // [I,J]
    std::vector<RelationTerm> terms;
    std::string case_tag;  // one of 4.4, 5.1, 5.4, 5.5, 6.1, 6.3, 7.1, 7.2, 7.3
    bool swapped = false;   // inputs were given in ascending order and exchanged
    bool verified = false;
};

/// Generate the commutation relation for a*b inside M_n. If (rows,cols) of a
/// is lexicographically below b's, the two are exchanged and the result is
/// flagged `swapped`. With verify=true the relation is checked against the
/// normal-form oracle and `verified` is set accordingly.
Relation commute(const MinorSpec& a, const MinorSpec& b, int n, bool verify = true);

/// Single-term q-commutation for the special staircase situation: disjoint
/// rows with every row of a above every row of b, and every column of a
/// outside the shared set C below every such column of b. Emits
/// q^{-|C|} a b == b a. Throws std::invalid_argument when the shape
/// precondition fails.
Relation commute_q_special(const MinorSpec& a, const MinorSpec& b, int n, bool verify = true);

/// Strict partial order on minors under which correction terms descend:
/// a < b iff a != b, rows(a) below rows(b) (smaller size, or entrywise <=),
/// and cols(a) above cols(b) (smaller size, or entrywise >=).
bool gl_less(const MinorSpec& a, const MinorSpec& b);

struct VerifyReport {
    bool ok = false;
    Tensor residual;  // empty when ok
};

/// Expand both sides through the row-minor representatives and reduce the
/// difference to normal form.
VerifyReport verify_relation(const Relation& rel);

std::string relation_to_plain(const Relation& rel);
std::string relation_to_latex(const Relation& rel);
std::string relation_to_json(const Relation& rel);
Relation relation_from_json(const std::string& json);

/// Sorted-set helpers shared with the tests.
Index sorted_union(const Index& a, const Index& b);
Index sorted_intersection(const Index& a, const Index& b);
Index sorted_difference(const Index& a, const Index& b);

}  // namespace qmb
