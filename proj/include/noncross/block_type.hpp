#pragma once

#include <numeric>
#include <vector>

#include "noncross/bigcount.hpp"
#include "noncross/partition.hpp"

namespace noncross {

// Block-size multiplicities.  For type A, r[t-1] counts blocks of size t and
// s = 0.  For types B/D, r[t-1] counts unordered pairs {V,-V}, V != -V, of
// pair size t = |V union -V|/2, and s is the zero-block half-size (0 when
// absent).  Sizes here are absolute, not in units of k.
struct BlockSizeVector {
    int n = 0; // ground size (A) or half-size (B/D)
    std::vector<int> r;
    int s = 0;

    int m() const { return std::accumulate(r.begin(), r.end(), 0); }

    BigCount p_r() const {
        BigCount p = 1;
        for (int rt : r) p *= factorial(rt);
        return p;
    }

    bool operator==(const BlockSizeVector&) const = default;
};

inline BlockSizeVector block_type(const ClassicalPartition& p) {
    BlockSizeVector bt;
    bt.n = p.ground_size;
    bt.r.assign(static_cast<size_t>(p.ground_size), 0);
    for (const auto& b : p.blocks) ++bt.r[b.size() - 1];
    return bt;
}

inline BlockSizeVector block_type(const SignedPartition& p) {
    const int n = p.half_size;
    BlockSizeVector bt;
    bt.n = n;
    bt.r.assign(static_cast<size_t>(n), 0);
    for (const auto& b : p.blocks) {
        bool zero = true;
        for (int x : b) {
            bool has_mirror = std::find(b.begin(), b.end(), -x) != b.end();
            if (!has_mirror) {
                zero = false;
                break;
            }
        }
        if (zero) {
            bt.s = static_cast<int>(b.size()) / 2;
            continue;
        }
        // count each orbit {V,-V} once, via the representative holding the
        // smaller minimum position
        int my_min = signed_position(b.front(), n);
        int mirror_min = 2 * n;
        for (int x : b) mirror_min = std::min(mirror_min, signed_position(-x, n));
        if (my_min < mirror_min) ++bt.r[b.size() - 1];
    }
    return bt;
}

enum class DivisibilityMode { divisible, equal };

inline bool divisibility(const ClassicalPartition& p, int k, DivisibilityMode mode) {
    for (const auto& b : p.blocks) {
        int sz = static_cast<int>(b.size());
        if (mode == DivisibilityMode::divisible ? sz % k != 0 : sz != k) return false;
    }
    return true;
}

// Signed convention: every pair size and the zero-block half-size must be
// divisible by (resp. equal to) k.
inline bool divisibility(const SignedPartition& p, int k, DivisibilityMode mode) {
    BlockSizeVector bt = block_type(p);
    for (size_t t = 1; t <= bt.r.size(); ++t) {
        if (bt.r[t - 1] == 0) continue;
        if (mode == DivisibilityMode::divisible ? static_cast<int>(t) % k != 0
                                                : static_cast<int>(t) != k)
            return false;
    }
    if (bt.s > 0) {
        if (mode == DivisibilityMode::divisible ? bt.s % k != 0 : bt.s != k) return false;
    }
    return true;
}

} // namespace noncross
