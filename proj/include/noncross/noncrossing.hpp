#pragma once

#include <algorithm>
#include <vector>

#include "noncross/partition.hpp"

namespace noncross {

// Two disjoint sorted blocks cross iff some a<b<c<d has a,c in one and b,d in
// the other, i.e. iff the merged sequence alternates owners at least 4 runs.
inline bool blocks_cross(const std::vector<int>& x, const std::vector<int>& y) {
    size_t i = 0, j = 0;
    int runs = 0, owner = -1;
    while (i < x.size() || j < y.size()) {
        int cur;
        if (j >= y.size() || (i < x.size() && x[i] < y[j])) {
            cur = 0;
            ++i;
        } else {
            cur = 1;
            ++j;
        }
        if (cur != owner) {
            owner = cur;
            if (++runs >= 4) return true;
        }
    }
    return false;
}

// Quadruple test: no a<b<c<d with a,c and b,d in different blocks.
inline bool is_noncrossing(const ClassicalPartition& p) {
    for (size_t i = 0; i < p.blocks.size(); ++i)
        for (size_t j = i + 1; j < p.blocks.size(); ++j)
            if (blocks_cross(p.blocks[i], p.blocks[j])) return false;
    return true;
}

// Interval-removal test: repeatedly delete a block whose elements are
// consecutive among the points still present; non-crossing iff the process
// empties the partition.  Kept as an independent route; must agree with
// is_noncrossing everywhere.
inline bool is_noncrossing_by_interval_removal(const ClassicalPartition& p) {
    std::vector<std::vector<int>> blocks = p.blocks;
    std::vector<int> remaining;
    remaining.reserve(static_cast<size_t>(p.ground_size));
    for (int v = 1; v <= p.ground_size; ++v) remaining.push_back(v);

    while (!blocks.empty()) {
        bool removed = false;
        for (size_t i = 0; i < blocks.size(); ++i) {
            const auto& b = blocks[i];
            auto it = std::lower_bound(remaining.begin(), remaining.end(), b.front());
            size_t at = static_cast<size_t>(it - remaining.begin());
            if (at + b.size() > remaining.size()) continue;
            bool consecutive = true;
            for (size_t t = 0; t < b.size(); ++t) {
                if (remaining[at + t] != b[t]) {
                    consecutive = false;
                    break;
                }
            }
            if (!consecutive) continue;
            remaining.erase(remaining.begin() + static_cast<long>(at),
                            remaining.begin() + static_cast<long>(at + b.size()));
            blocks.erase(blocks.begin() + static_cast<long>(i));
            removed = true;
            break;
        }
        if (!removed) return false;
    }
    return true;
}

// Non-crossing as a type B object: the clockwise unsigned relabeling must be
// non-crossing on {1..2n}.
inline bool is_noncrossing_signed(const SignedPartition& p) {
    return is_noncrossing(unsigned_relabel(p));
}

} // namespace noncross
