#include "qmb/relation.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "qmb/manin.hpp"
#include "qmb/tower.hpp"

namespace qmb {

Index sorted_union(const Index& a, const Index& b) {
    Index r;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

Index sorted_intersection(const Index& a, const Index& b) {
    Index r;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

Index sorted_difference(const Index& a, const Index& b) {
    Index r;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

namespace {

Index iota_index(int from, int to) {  // inclusive range; empty when to < from
    Index r;
    for (int v = from; v <= to; ++v) r.push_back(v);
    return r;
}

// Position (1-based) of each value of idx inside the sorted alphabet.
Index relabel(const Index& idx, const Index& alphabet) {
    Index r;
    r.reserve(idx.size());
    for (int v : idx) {
        auto it = std::lower_bound(alphabet.begin(), alphabet.end(), v);
        if (it == alphabet.end() || *it != v)
            throw std::logic_error("relabel: value missing from alphabet");
        r.push_back(static_cast<int>(it - alphabet.begin()) + 1);
    }
    return r;
}

Index unrelabel(const Index& idx, const Index& alphabet) {
    Index r;
    r.reserve(idx.size());
    for (int v : idx) {
        if (v < 1 || v > static_cast<int>(alphabet.size()))
            throw std::logic_error("unrelabel: value outside alphabet");
        r.push_back(alphabet[v - 1]);
    }
    return r;
}

Index sorted_copy(Index idx) {
    std::sort(idx.begin(), idx.end());
    return idx;
}

// Correction-term bookkeeping: row component, its complement, column
// component, its complement (all in relabeled alphabets, possibly unsorted),
// plus the sign the recursion attaches.
struct QuadPair {
    Index z, zc, w, wc;
    int sign = 1;
};

// True when x occurs before y in the concatenation (a, b).
bool occurs_before(const Index& a, const Index& b, int x, int y) {
    for (const Index* seq : {&a, &b}) {
        for (int v : *seq) {
            if (v == x) return true;
            if (v == y) return false;
        }
    }
    throw std::logic_error("neither value occurs in the concatenated pair");
}

// Level-indexed multisets of correction pairs. Column stages come first:
// each stage maps level i to the transposition image of the old level i plus
// the carry of the old level i-1 with the pairs where m occurs before m+1 in
// (w, wc) pruned away and the sign flipped. Row stages mirror this on
// (z, zc) with the pruning condition reversed (m+1 before m) and signs kept.
std::vector<std::vector<QuadPair>> build_levels(
    const std::vector<std::pair<int, int>>& col_stages,
    const std::vector<std::pair<int, int>>& row_stages, const QuadPair& base) {
    std::vector<std::vector<QuadPair>> levels(col_stages.size() + row_stages.size() + 1);
    levels[0].push_back(base);

    auto run_stage = [&](int m, bool column_phase) {
        std::vector<std::vector<QuadPair>> next(levels.size());
        for (size_t i = 0; i < levels.size(); ++i) {
            for (const QuadPair& p : levels[i]) {
                QuadPair img = p;
                if (column_phase) {
                    img.w = index_apply_transposition(img.w, m, m + 1);
                    img.wc = index_apply_transposition(img.wc, m, m + 1);
                } else {
                    img.z = index_apply_transposition(img.z, m, m + 1);
                    img.zc = index_apply_transposition(img.zc, m, m + 1);
                }
                next[i].push_back(std::move(img));
            }
            if (i + 1 < levels.size()) {
                for (const QuadPair& p : levels[i]) {
                    bool pruned = column_phase ? occurs_before(p.w, p.wc, m, m + 1)
                                               : occurs_before(p.z, p.zc, m + 1, m);
                    if (pruned) continue;
                    QuadPair carry = p;
                    if (column_phase) carry.sign = -carry.sign;
                    next[i + 1].push_back(std::move(carry));
                }
            }
        }
        levels = std::move(next);
    };

    for (auto [m, m1] : col_stages) run_stage(m, true);
    for (auto [m, m1] : row_stages) run_stage(m, false);
    return levels;
}

Relation relation_core(const MinorSpec& first, const MinorSpec& second);

// Disjoint-rows generator (shared columns allowed): the towers of the second
// minor drive the level recursion above; every correction pair turns into a
// sorted minor product with the (-q)^(-inversions) factors absorbed.
Relation engine_disjoint_rows(const MinorSpec& first, const MinorSpec& second) {
    const Index& k = first.rows;
    const Index& l = first.cols;
    const Index& i = second.rows;
    const Index& j = second.cols;

    Index row_amb = sorted_union(i, k);
    Index shared_c = sorted_intersection(j, l);
    Index col_amb = sorted_union(j, l);
    Index col_sub = sorted_difference(col_amb, shared_c);
    Index j_red = sorted_difference(j, shared_c);

    const int mr = static_cast<int>(row_amb.size());
    const int mc = static_cast<int>(col_sub.size());
    const int r = static_cast<int>(i.size());
    const int s = static_cast<int>(j_red.size());

    auto row_stages = stage_transpositions(relabel(i, row_amb), mr, TowerKind::Row);
    auto col_stages = stage_transpositions(relabel(j_red, col_sub), mc, TowerKind::Column);

    QuadPair base;
    base.z = iota_index(1, r);
    base.zc = iota_index(r + 1, mr);
    base.w = iota_index(mc - s + 1, mc);
    base.wc = iota_index(1, mc - s);
    auto levels = build_levels(col_stages, row_stages, base);

    Relation rel;
    rel.lead_first = first;
    rel.lead_second = second;
    rel.lead_coeff = LaurentPoly::q_power(-static_cast<int>(shared_c.size()));
    const int intr = static_cast<int>(row_stages.size());
    const int intc = static_cast<int>(col_stages.size());
    if (shared_c.empty())
        rel.case_tag = (intr == 0 && intc == 0) ? "4.4"
                       : intr == 0              ? "5.1"
                       : intc == 0              ? "7.1"
                                                : "6.1";
    else
        rel.case_tag = (intr == 0 && intc == 0) ? "5.4" : intr == 0 ? "5.5" : "6.3";

    std::map<std::pair<MinorSpec, MinorSpec>, LaurentPoly> acc;
    LaurentPoly level_factor(1);
    const LaurentPoly qmq = LaurentPoly::q_inv_minus_q();
    for (const auto& level : levels) {
        for (const QuadPair& p : level) {
            int inv = inversions(p.z) + inversions(p.zc) + inversions(p.w) + inversions(p.wc);
            LaurentPoly coeff =
                level_factor * LaurentPoly::neg_q_power(-inv) * LaurentPoly(p.sign);
            MinorSpec left{sorted_copy(unrelabel(p.z, row_amb)),
                           sorted_union(sorted_copy(unrelabel(p.w, col_sub)), shared_c)};
            MinorSpec right{sorted_copy(unrelabel(p.zc, row_amb)),
                            sorted_union(sorted_copy(unrelabel(p.wc, col_sub)), shared_c)};
            auto key = std::make_pair(std::move(left), std::move(right));
            acc[key] += coeff;
        }
        level_factor *= qmq;
    }

    // Reversed product first, the rest in index order, zero coefficients
    // dropped (cancellation between levels can occur after collation).
    auto reversed = std::make_pair(second, first);
    auto rev_it = acc.find(reversed);
    if (rev_it != acc.end() && !rev_it->second.is_zero())
        rel.terms.push_back({rev_it->second, second, first});
    for (const auto& [pair, coeff] : acc) {
        if (pair == reversed || coeff.is_zero()) continue;
        rel.terms.push_back({coeff, pair.first, pair.second});
    }
    return rel;
}

// Shared rows, disjoint columns: transposing every generator a_uv -> a_vu is
// an algebra map that exchanges row and column indices of a minor, so the
// relation follows from the disjoint-rows generator applied to the
// transposed minors.
Relation transpose_route(const MinorSpec& first, const MinorSpec& second) {
    Relation sub = relation_core({first.cols, first.rows}, {second.cols, second.rows});
    Relation rel;
    rel.lead_first = first;
    rel.lead_second = second;
    rel.lead_coeff = sub.lead_coeff;
    for (const RelationTerm& t : sub.terms)
        rel.terms.push_back({t.coeff, {t.left.cols, t.left.rows}, {t.right.cols, t.right.rows}});

    Index col_amb = sorted_union(second.cols, first.cols);
    auto col_stages = stage_transpositions(relabel(second.cols, col_amb),
                                           static_cast<int>(col_amb.size()), TowerKind::Column);
    rel.case_tag = col_stages.empty() ? "7.1" : "7.2";
    return rel;
}

// Shared rows and columns: conjugate by the antipode-style map sending a
// minor [X,Y] of M_m to (-q)^(sum Y - sum X) [X^c, Y^c]. The complementary
// minors have disjoint rows or disjoint columns, so the earlier generators
// apply; every term maps back through complements with the (-q) factors of
// the four minors involved.
Relation antipode_route(const MinorSpec& first, const MinorSpec& second) {
    Index row_set = sorted_union(first.rows, second.rows);
    Index col_set = sorted_union(first.cols, second.cols);
    const int m = std::max(static_cast<int>(row_set.size()), static_cast<int>(col_set.size()));

    Index kr = relabel(first.rows, row_set);
    Index lr = relabel(first.cols, col_set);
    Index ir = relabel(second.rows, row_set);
    Index jr = relabel(second.cols, col_set);

    Index full = iota_index(1, m);
    auto comp = [&](const Index& x) { return sorted_difference(full, x); };

    Relation sub = relation_core({comp(ir), comp(jr)}, {comp(kr), comp(lr)});

    auto sum = [](const Index& x) { return std::accumulate(x.begin(), x.end(), 0); };
    // (-q) exponent of the antipode factor of [X,Y]: sum Y - sum X.
    const int denom = (sum(jr) - sum(ir)) + (sum(lr) - sum(kr));

    Relation rel;
    rel.lead_first = first;
    rel.lead_second = second;
    rel.lead_coeff = sub.lead_coeff;
    rel.case_tag = "7.3";
    for (const RelationTerm& t : sub.terms) {
        const int g = denom + (sum(t.left.cols) - sum(t.left.rows)) +
                      (sum(t.right.cols) - sum(t.right.rows));
        MinorSpec out_left{unrelabel(comp(t.right.rows), row_set),
                           unrelabel(comp(t.right.cols), col_set)};
        MinorSpec out_right{unrelabel(comp(t.left.rows), row_set),
                            unrelabel(comp(t.left.cols), col_set)};
        rel.terms.push_back({t.coeff * LaurentPoly::neg_q_power(g), std::move(out_left),
                             std::move(out_right)});
    }
    return rel;
}

Relation trivial_unit_relation(const MinorSpec& first, const MinorSpec& second,
                               const std::string& tag) {
    Relation rel;
    rel.lead_first = first;
    rel.lead_second = second;
    rel.lead_coeff = LaurentPoly(1);
    rel.case_tag = tag;
    rel.terms.push_back({LaurentPoly(1), second, first});
    return rel;
}

Relation relation_core(const MinorSpec& first, const MinorSpec& second) {
    if (first.size() == 0 || second.size() == 0)
        return trivial_unit_relation(first, second, "4.4");
    Index shared_rows = sorted_intersection(first.rows, second.rows);
    Index shared_cols = sorted_intersection(first.cols, second.cols);
    if (shared_rows.empty()) return engine_disjoint_rows(first, second);
    if (shared_cols.empty()) return transpose_route(first, second);
    return antipode_route(first, second);
}

}  // namespace

Relation commute(const MinorSpec& a, const MinorSpec& b, int n, bool verify) {
    minor_validate(a, n);
    minor_validate(b, n);
    Relation rel;
    if (a == b) {
        rel = trivial_unit_relation(a, b, "7.3");
    } else {
        const bool swapped =
            std::make_pair(a.rows, a.cols) < std::make_pair(b.rows, b.cols);
        rel = relation_core(swapped ? b : a, swapped ? a : b);
        rel.swapped = swapped;
    }
    rel.n = n;
    if (verify) rel.verified = verify_relation(rel).ok;
    return rel;
}

Relation commute_q_special(const MinorSpec& a, const MinorSpec& b, int n, bool verify) {
    minor_validate(a, n);
    minor_validate(b, n);
    if (!sorted_intersection(a.rows, b.rows).empty())
        throw std::invalid_argument("q-special commutation needs disjoint rows");
    if (!b.rows.empty() && !a.rows.empty() && b.rows.back() > a.rows.front())
        throw std::invalid_argument("q-special commutation needs every row of a above b's");
    Index shared_c = sorted_intersection(a.cols, b.cols);
    Index l_rest = sorted_difference(a.cols, shared_c);
    Index j_rest = sorted_difference(b.cols, shared_c);
    if (!l_rest.empty() && !j_rest.empty() && l_rest.back() > j_rest.front())
        throw std::invalid_argument(
            "q-special commutation needs a's free columns below b's free columns");

    Relation rel;
    rel.n = n;
    rel.lead_first = a;
    rel.lead_second = b;
    rel.lead_coeff = LaurentPoly::q_power(-static_cast<int>(shared_c.size()));
    rel.case_tag = shared_c.empty() ? "4.4" : "5.4";
    rel.terms.push_back({LaurentPoly(1), b, a});
    if (verify) rel.verified = verify_relation(rel).ok;
    return rel;
}

bool gl_less(const MinorSpec& a, const MinorSpec& b) {
    if (a == b) return false;
    if (a.size() > b.size()) return false;
    if (a.size() == b.size()) {
        for (int p = 0; p < a.size(); ++p)
            if (a.rows[p] > b.rows[p]) return false;
        for (int p = 0; p < a.size(); ++p)
            if (b.cols[p] > a.cols[p]) return false;
    }
    return true;
}

VerifyReport verify_relation(const Relation& rel) {
    Tensor diff = (row_minor_tensor(rel.lead_first) * row_minor_tensor(rel.lead_second))
                      .scaled(rel.lead_coeff);
    for (const RelationTerm& t : rel.terms)
        diff -= (row_minor_tensor(t.left) * row_minor_tensor(t.right)).scaled(t.coeff);
    VerifyReport report;
    report.residual = normal_form(diff);
    report.ok = report.residual.is_zero();
    return report;
}

namespace {

std::string coeff_prefix(const LaurentPoly& c, bool latex, bool leading) {
    Int coeff;
    int exponent = 0;
    if (c.is_one()) return leading ? "" : "+ ";
    if (c.single_term(coeff, exponent) && coeff == -1 && exponent == 0)
        return leading ? "-" : "- ";
    std::string body;
    if (c.single_term(coeff, exponent) && coeff > 0) {
        body = latex ? c.to_latex() : c.to_string();
        body += latex ? "" : " * ";
        return (leading ? "" : "+ ") + body;
    }
    body = "(" + (latex ? c.to_latex() : c.to_string()) + ")";
    body += latex ? "" : " * ";
    return (leading ? "" : "+ ") + body;
}

}  // namespace

std::string relation_to_plain(const Relation& rel) {
    std::ostringstream out;
    out << coeff_prefix(rel.lead_coeff, false, true) << minor_to_string(rel.lead_first)
        << minor_to_string(rel.lead_second) << " == ";
    bool first = true;
    for (const RelationTerm& t : rel.terms) {
        if (!first) out << " ";
        out << coeff_prefix(t.coeff, false, first) << minor_to_string(t.left)
            << minor_to_string(t.right);
        first = false;
    }
    if (rel.terms.empty()) out << "0";
    return out.str();
}

std::string relation_to_latex(const Relation& rel) {
    std::ostringstream out;
    out << coeff_prefix(rel.lead_coeff, true, true) << minor_to_latex(rel.lead_first)
        << minor_to_latex(rel.lead_second) << " \\equiv ";
    bool first = true;
    for (const RelationTerm& t : rel.terms) {
        if (!first) out << " ";
        out << coeff_prefix(t.coeff, true, first) << minor_to_latex(t.left)
            << minor_to_latex(t.right);
        first = false;
    }
    if (rel.terms.empty()) out << "0";
    return out.str();
}

std::string relation_to_json(const Relation& rel) {
    nlohmann::json j;
    j["n"] = rel.n;
    j["lead_coef"] = nlohmann::json::parse(rel.lead_coeff.to_json());
    j["lead"] = {minor_to_string(rel.lead_first), minor_to_string(rel.lead_second)};
    nlohmann::json terms = nlohmann::json::array();
    for (const RelationTerm& t : rel.terms) {
        terms.push_back({{"coef", nlohmann::json::parse(t.coeff.to_json())},
                         {"left", minor_to_string(t.left)},
                         {"right", minor_to_string(t.right)}});
    }
    j["terms"] = std::move(terms);
    j["case"] = rel.case_tag;
    j["verified"] = rel.verified;
    j["swapped"] = rel.swapped;
    return j.dump();
}

Relation relation_from_json(const std::string& json) {
    try {
        nlohmann::json j = nlohmann::json::parse(json);
        Relation rel;
        rel.n = j.at("n").get<int>();
        rel.lead_coeff = LaurentPoly::from_json_text(j.at("lead_coef").dump());
        rel.lead_first = minor_parse(j.at("lead").at(0).get<std::string>());
        rel.lead_second = minor_parse(j.at("lead").at(1).get<std::string>());
        for (const auto& t : j.at("terms")) {
            rel.terms.push_back({LaurentPoly::from_json_text(t.at("coef").dump()),
                                 minor_parse(t.at("left").get<std::string>()),
                                 minor_parse(t.at("right").get<std::string>())});
        }
        rel.case_tag = j.at("case").get<std::string>();
        rel.verified = j.value("verified", false);
        rel.swapped = j.value("swapped", false);
        return rel;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("bad relation json: ") + e.what());
    }
}

}  // namespace qmb
