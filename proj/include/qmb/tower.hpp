#pragma once

#include <optional>
#include <utility>

#include "qmb/tensor.hpp"

namespace qmb {

enum class TowerKind { Row, Column };

/// One rung of a tower: the index at this rung together with the adjacent
/// transposition (z, z+1) carrying it to the next rung (toward the base).
struct TowerStep {
    Index index;
    std::pair<int, int> transposition;
};

/// Chain of sorted indices inside a sorted ambient value set, descending to
/// the minimal index (row kind) or ascending to the maximal one (column
/// kind), one adjacent transposition per step. Adjacency is relative to the
/// ambient: positions m, m+1 of the ambient list, expressed in ambient
/// values.
struct Tower {
    TowerKind kind;
    Index ambient;
    Index start;
    Index base;
    std::vector<TowerStep> steps;  // empty when start == base

    int length() const { return static_cast<int>(steps.size()); }
};

/// Standard step on an index relabeled into {1..m}: for rows, the first
/// position p (1-based, with i_0 = 0) where i_p - i_{p-1} > 1 yields
/// (i_p - 1, i_p); returns nothing at the base (1..r). For columns, the
/// rightmost position p with j_p < m - r + p yields (j_p, j_p + 1); returns
/// nothing at the base (m-r+1..m).
std::optional<std::pair<int, int>> row_step(const Index& idx, int m);
std::optional<std::pair<int, int>> col_step(const Index& idx, int m);

/// Full towers. `idx` must be a sorted subset of the sorted `ambient`;
/// internally the ambient is relabeled to {1..m} and the result is labeled
/// back. Throws std::invalid_argument on bad input.
Tower row_tower(const Index& idx, const Index& ambient);
Tower col_tower(const Index& idx, const Index& ambient);

/// Stage transpositions in base-to-start order, relabeled into {1..m}:
/// stage s carries rung s to rung s-1 (rung 0 = base).
std::vector<std::pair<int, int>> stage_transpositions(const Index& idx, int m, TowerKind kind);

}  // namespace qmb
