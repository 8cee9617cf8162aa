#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "noncross/errors.hpp"

namespace noncross {

using Blocks = std::vector<std::vector<int>>;

// A partition of {1..N}.  Canonical form: each block sorted ascending, blocks
// ordered by minimum element.  Immutable value; all operations are pure.
struct ClassicalPartition {
    int ground_size = 0;
    Blocks blocks;

    int size() const { return static_cast<int>(blocks.size()); }
    bool operator==(const ClassicalPartition&) const = default;
    // canonical-lexicographic order
    bool operator<(const ClassicalPartition& o) const { return blocks < o.blocks; }
};

// Label order used for canonical forms of signed partitions: 1..n,-1..-n.
inline int signed_position(int label, int n) {
    return label > 0 ? label - 1 : n + (-label) - 1;
}

inline int label_at_position(int pos, int n) {
    return pos < n ? pos + 1 : -(pos - n + 1);
}

// A centrally symmetric partition of {+-1..+-n} with at most one block
// V = -V (the zero-block).  Not necessarily non-crossing.
struct SignedPartition {
    int half_size = 0; // n
    Blocks blocks;     // canonical: elements by signed position, blocks by min position

    int zero_block_index() const {
        for (size_t i = 0; i < blocks.size(); ++i) {
            bool sym = true;
            for (int x : blocks[i]) {
                if (std::find(blocks[i].begin(), blocks[i].end(), -x) == blocks[i].end()) {
                    sym = false;
                    break;
                }
            }
            if (sym) return static_cast<int>(i);
        }
        return -1;
    }

    bool operator==(const SignedPartition&) const = default;
};

namespace detail {

inline void sort_blocks_classical(Blocks& blocks) {
    for (auto& b : blocks) std::sort(b.begin(), b.end());
    std::sort(blocks.begin(), blocks.end());
}

inline void sort_blocks_signed(Blocks& blocks, int n) {
    auto pos_less = [n](int a, int b) { return signed_position(a, n) < signed_position(b, n); };
    for (auto& b : blocks) std::sort(b.begin(), b.end(), pos_less);
    std::sort(blocks.begin(), blocks.end(), [n](const std::vector<int>& a, const std::vector<int>& b) {
        return signed_position(a.front(), n) < signed_position(b.front(), n);
    });
}

// Position-sequence key for comparing signed partitions canonically.
inline std::vector<std::vector<int>> signed_position_key(const SignedPartition& p) {
    std::vector<std::vector<int>> key;
    key.reserve(p.blocks.size());
    for (const auto& b : p.blocks) {
        std::vector<int> kb;
        kb.reserve(b.size());
        for (int x : b) kb.push_back(signed_position(x, p.half_size));
        key.push_back(std::move(kb));
    }
    return key;
}

} // namespace detail

inline bool signed_less(const SignedPartition& a, const SignedPartition& b) {
    return detail::signed_position_key(a) < detail::signed_position_key(b);
}

// Checks blocks form a partition of {1..N} and returns the canonical form.
inline ClassicalPartition validate_classical(Blocks blocks, int ground_size) {
    if (ground_size < 1) throw not_a_partition("ground size must be positive");
    std::vector<char> seen(static_cast<size_t>(ground_size) + 1, 0);
    size_t covered = 0;
    for (const auto& b : blocks) {
        if (b.empty()) throw not_a_partition("empty block");
        for (int x : b) {
            if (x < 1 || x > ground_size)
                throw not_a_partition("element " + std::to_string(x) + " outside ground set");
            if (seen[static_cast<size_t>(x)]) throw not_a_partition("element " + std::to_string(x) + " repeated");
            seen[static_cast<size_t>(x)] = 1;
            ++covered;
        }
    }
    if (covered != static_cast<size_t>(ground_size)) throw not_a_partition("ground set not covered");
    detail::sort_blocks_classical(blocks);
    return ClassicalPartition{ground_size, std::move(blocks)};
}

// Checks blocks form a centrally symmetric partition of {+-1..+-n} with at
// most one zero-block, and returns the canonical form.
inline SignedPartition validate_signed(Blocks blocks, int half_size) {
    const int n = half_size;
    if (n < 1) throw not_a_partition("half size must be positive");
    std::vector<char> seen(static_cast<size_t>(2 * n), 0);
    size_t covered = 0;
    for (const auto& b : blocks) {
        if (b.empty()) throw not_a_partition("empty block");
        for (int x : b) {
            if (x == 0 || x < -n || x > n) throw not_a_partition("label " + std::to_string(x) + " outside +-[n]");
            size_t pos = static_cast<size_t>(signed_position(x, n));
            if (seen[pos]) throw not_a_partition("label " + std::to_string(x) + " repeated");
            seen[pos] = 1;
            ++covered;
        }
    }
    if (covered != static_cast<size_t>(2 * n)) throw not_a_partition("ground set not covered");

    detail::sort_blocks_signed(blocks, n);
    // central symmetry: the mirror of every block must be present
    int zero_blocks = 0;
    for (const auto& b : blocks) {
        std::vector<int> mirror;
        mirror.reserve(b.size());
        for (int x : b) mirror.push_back(-x);
        std::sort(mirror.begin(), mirror.end(), [n](int a, int c) {
            return signed_position(a, n) < signed_position(c, n);
        });
        if (mirror == b) {
            ++zero_blocks;
            continue;
        }
        if (std::find(blocks.begin(), blocks.end(), mirror) == blocks.end())
            throw not_symmetric("mirror block missing");
    }
    if (zero_blocks > 1) throw multiple_zero_blocks("more than one self-symmetric block");
    return SignedPartition{n, std::move(blocks)};
}

// The clockwise relabeling 1..n,-1..-n -> 1..2n; the result is a plain
// partition of {1..2n} (crossing or not).
inline ClassicalPartition unsigned_relabel(const SignedPartition& p) {
    Blocks blocks;
    blocks.reserve(p.blocks.size());
    for (const auto& b : p.blocks) {
        std::vector<int> nb;
        nb.reserve(b.size());
        for (int x : b) nb.push_back(signed_position(x, p.half_size) + 1);
        blocks.push_back(std::move(nb));
    }
    detail::sort_blocks_classical(blocks);
    return ClassicalPartition{2 * p.half_size, std::move(blocks)};
}

} // namespace noncross
