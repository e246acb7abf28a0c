#include "qmb/tower.hpp"

#include <algorithm>
#include <stdexcept>

namespace qmb {

namespace {

void check_sorted_subset(const Index& idx, int m, const char* what) {
    int prev = 0;
    for (int v : idx) {
        if (v <= prev || v > m)
            throw std::invalid_argument(std::string(what) +
                                        " index must be strictly increasing inside the ambient");
        prev = v;
    }
}

}  // namespace

std::optional<std::pair<int, int>> row_step(const Index& idx, int m) {
    check_sorted_subset(idx, m, "row");
    int prev = 0;
    for (int v : idx) {
        if (v - prev > 1) return std::make_pair(v - 1, v);
        prev = v;
    }
    return std::nullopt;
}

std::optional<std::pair<int, int>> col_step(const Index& idx, int m) {
    check_sorted_subset(idx, m, "column");
    const int r = static_cast<int>(idx.size());
    for (int p = r; p >= 1; --p) {
        if (idx[p - 1] < m - r + p) return std::make_pair(idx[p - 1], idx[p - 1] + 1);
    }
    return std::nullopt;
}

namespace {

Tower tower_impl(const Index& idx, const Index& ambient, TowerKind kind) {
    const int m = static_cast<int>(ambient.size());
    for (size_t p = 1; p < ambient.size(); ++p)
        if (ambient[p] <= ambient[p - 1])
            throw std::invalid_argument("ambient must be strictly increasing");

    // Relabel into {1..m} by position in the ambient list.
    Index rel;
    rel.reserve(idx.size());
    for (int v : idx) {
        auto it = std::lower_bound(ambient.begin(), ambient.end(), v);
        if (it == ambient.end() || *it != v)
            throw std::invalid_argument("index value missing from the ambient");
        rel.push_back(static_cast<int>(it - ambient.begin()) + 1);
    }
    check_sorted_subset(rel, m, kind == TowerKind::Row ? "row" : "column");

    auto unrelabel = [&](const Index& x) {
        Index out;
        out.reserve(x.size());
        for (int v : x) out.push_back(ambient[v - 1]);
        return out;
    };

    Tower t;
    t.kind = kind;
    t.ambient = ambient;
    t.start = idx;

    Index cur = rel;
    while (true) {
        auto step = kind == TowerKind::Row ? row_step(cur, m) : col_step(cur, m);
        if (!step) break;
        TowerStep ts;
        ts.index = unrelabel(cur);
        ts.transposition = {ambient[step->first - 1], ambient[step->second - 1]};
        t.steps.push_back(std::move(ts));
        cur = index_apply_transposition(cur, step->first, step->second);
        std::sort(cur.begin(), cur.end());
    }
    t.base = unrelabel(cur);
    return t;
}

}  // namespace

Tower row_tower(const Index& idx, const Index& ambient) {
    return tower_impl(idx, ambient, TowerKind::Row);
}

Tower col_tower(const Index& idx, const Index& ambient) {
    return tower_impl(idx, ambient, TowerKind::Column);
}

std::vector<std::pair<int, int>> stage_transpositions(const Index& idx, int m, TowerKind kind) {
    Index cur = idx;
    std::vector<std::pair<int, int>> steps;
    while (true) {
        auto step = kind == TowerKind::Row ? row_step(cur, m) : col_step(cur, m);
        if (!step) break;
        steps.push_back(*step);
        cur = index_apply_transposition(cur, step->first, step->second);
        std::sort(cur.begin(), cur.end());
    }
    std::reverse(steps.begin(), steps.end());
    return steps;
}

}  // namespace qmb
