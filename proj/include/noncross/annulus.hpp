#pragma once

#include <algorithm>
#include <cstdlib>
#include <vector>

#include "noncross/noncrossing.hpp"
#include "noncross/partition.hpp"

namespace noncross {

// A signed partition of +-[kn] placed on the (2k(n-1), 2k) annulus: labels of
// magnitude <= k(n-1) sit on the outer circle (clockwise order
// 1..k(n-1),-1..-k(n-1)), the remaining 2k labels on the inner circle
// (counterclockwise order k(n-1)+1..kn,-(k(n-1)+1)..-kn).
struct AnnulusPartition {
    int n = 0; // rank, n >= 2
    int k = 1;
    SignedPartition base; // half_size == k*n

    int outer_points() const { return 2 * k * (n - 1); }
    int inner_points() const { return 2 * k; }
};

inline AnnulusPartition make_annulus(int n, int k, SignedPartition base) {
    if (n < 2 || k < 1) throw invalid_spec("annulus requires n >= 2 and k >= 1");
    if (base.half_size != k * n) throw invalid_spec("annulus base must have half size k*n");
    return AnnulusPartition{n, k, std::move(base)};
}

namespace detail {

// Global slot numbering: outer slots 0..P-1 in clockwise order, inner slots
// P..P+Q-1 in counterclockwise order.
struct AnnulusFrame {
    int n, k, P, Q;
    std::vector<int> label_of; // slot -> signed label

    explicit AnnulusFrame(const AnnulusPartition& p)
        : n(p.n), k(p.k), P(p.outer_points()), Q(p.inner_points()), label_of(static_cast<size_t>(P + Q)) {
        for (int s = 0; s < P + Q; ++s) label_of[static_cast<size_t>(s)] = 0;
        for (int a = 1; a <= k * n; ++a) {
            label_of[static_cast<size_t>(slot(a))] = a;
            label_of[static_cast<size_t>(slot(-a))] = -a;
        }
    }

    int slot(int label) const {
        int kn1 = k * (n - 1);
        int a = std::abs(label);
        if (a <= kn1) return label > 0 ? a - 1 : kn1 + a - 1;
        int off = a - kn1 - 1;
        return P + (label > 0 ? off : k + off);
    }

    bool is_inner_slot(int s) const { return s >= P; }

    // annulus rotation: one clockwise cycle on the outer slots, one
    // counterclockwise cycle on the inner slots
    int gamma(int s) const {
        if (s < P) return (s + 1) % P;
        return P + (s - P + 1) % Q;
    }
};

inline int count_cycles(const std::vector<int>& perm) {
    std::vector<char> done(perm.size(), 0);
    int cycles = 0;
    for (size_t i = 0; i < perm.size(); ++i) {
        if (done[i]) continue;
        ++cycles;
        size_t x = i;
        while (!done[x]) {
            done[x] = 1;
            x = static_cast<size_t>(perm[x]);
        }
    }
    return cycles;
}

// |e_{i+1}| = |e_i| + 1 (mod k) around the cycle, elements given as slots.
inline bool cycle_satisfies_mod_condition(const std::vector<int>& cycle, const AnnulusFrame& f) {
    if (f.k == 1) return true;
    for (size_t i = 0; i < cycle.size(); ++i) {
        int cur = std::abs(f.label_of[static_cast<size_t>(cycle[i])]);
        int nxt = std::abs(f.label_of[static_cast<size_t>(cycle[(i + 1) % cycle.size()])]);
        if (((nxt - cur - 1) % f.k + f.k) % f.k != 0) return false;
    }
    return true;
}

// Candidate traversal cycles for one block.  Pure blocks follow their
// circle's rotation; a through-block's outer run and inner run may be aligned
// in every cyclic rotation.
inline std::vector<std::vector<int>> block_cycle_candidates(const std::vector<int>& outer_slots,
                                                            const std::vector<int>& inner_slots) {
    std::vector<std::vector<int>> out;
    size_t a = outer_slots.size(), b = inner_slots.size();
    if (a == 0 || b == 0) {
        const auto& run = a ? outer_slots : inner_slots;
        out.push_back(run);
        return out;
    }
    for (size_t ro = 0; ro < a; ++ro) {
        for (size_t ri = 0; ri < b; ++ri) {
            std::vector<int> c;
            c.reserve(a + b);
            for (size_t t = 0; t < a; ++t) c.push_back(outer_slots[(ro + t) % a]);
            for (size_t t = 0; t < b; ++t) c.push_back(inner_slots[(ri + t) % b]);
            out.push_back(std::move(c));
        }
    }
    return out;
}

struct AnnulusBlocks {
    AnnulusFrame frame;
    std::vector<std::vector<int>> outer_of_block, inner_of_block; // sorted slots
    bool has_through = false;

    explicit AnnulusBlocks(const AnnulusPartition& p) : frame(p) {
        for (const auto& blk : p.base.blocks) {
            std::vector<int> o, in;
            for (int lab : blk) {
                int s = frame.slot(lab);
                (frame.is_inner_slot(s) ? in : o).push_back(s);
            }
            std::sort(o.begin(), o.end());
            std::sort(in.begin(), in.end());
            if (!o.empty() && !in.empty()) has_through = true;
            outer_of_block.push_back(std::move(o));
            inner_of_block.push_back(std::move(in));
        }
    }
};

// Genus-zero test over all admissible block orientations; accepts iff some
// choice sigma satisfies #cycles(sigma) + #cycles(sigma^-1 gamma) = P + Q.
// With require_mod set, only orientations meeting the mod-k condition on
// every block are admissible.
inline bool exists_planar_orientation(const AnnulusBlocks& ab, bool require_mod) {
    const AnnulusFrame& f = ab.frame;
    const int M = f.P + f.Q;

    std::vector<std::vector<std::vector<int>>> cands;
    for (size_t i = 0; i < ab.outer_of_block.size(); ++i) {
        auto cs = block_cycle_candidates(ab.outer_of_block[i], ab.inner_of_block[i]);
        if (require_mod) {
            std::erase_if(cs, [&](const std::vector<int>& c) { return !cycle_satisfies_mod_condition(c, f); });
        }
        if (cs.empty()) return false;
        cands.push_back(std::move(cs));
    }

    std::vector<int> sigma(static_cast<size_t>(M));
    std::vector<size_t> pick(cands.size(), 0);
    for (;;) {
        for (int s = 0; s < M; ++s) sigma[static_cast<size_t>(s)] = s;
        for (size_t i = 0; i < cands.size(); ++i) {
            const auto& c = cands[i][pick[i]];
            for (size_t t = 0; t < c.size(); ++t)
                sigma[static_cast<size_t>(c[t])] = c[(t + 1) % c.size()];
        }
        std::vector<int> rest(static_cast<size_t>(M)); // sigma^-1 gamma
        std::vector<int> inv(static_cast<size_t>(M));
        for (int s = 0; s < M; ++s) inv[static_cast<size_t>(sigma[static_cast<size_t>(s)])] = s;
        for (int s = 0; s < M; ++s) rest[static_cast<size_t>(s)] = inv[static_cast<size_t>(f.gamma(s))];
        if (count_cycles(sigma) + count_cycles(rest) == M) return true;

        size_t i = 0;
        while (i < cands.size() && ++pick[i] == cands[i].size()) pick[i++] = 0;
        if (i == cands.size()) return false;
    }
}

// Disk test for one circle: blocks listed as sorted slot vectors.
inline bool slots_noncrossing(const std::vector<std::vector<int>>& blocks) {
    for (size_t i = 0; i < blocks.size(); ++i)
        for (size_t j = i + 1; j < blocks.size(); ++j)
            if (!blocks[i].empty() && !blocks[j].empty() && blocks_cross(blocks[i], blocks[j])) return false;
    return true;
}

// In a configuration with no through-block, an outer block W has a unique gap
// spanning more than half the outer circle (the side facing the inner
// circle); V is visible iff it sits in that gap of every other outer block.
inline bool outer_block_visible(size_t v, const std::vector<std::vector<int>>& outer_blocks, int P) {
    const auto& V = outer_blocks[v];
    for (size_t w = 0; w < outer_blocks.size(); ++w) {
        if (w == v || outer_blocks[w].empty()) continue;
        const auto& W = outer_blocks[w];
        int major = -1;
        for (size_t t = 0; t < W.size(); ++t) {
            int cur = W[t], nxt = W[(t + 1) % W.size()];
            int step = (nxt - cur + P) % P;
            if (step == 0) step = P; // singleton: the whole circle
            if (2 * step > P) {
                major = static_cast<int>(t);
                break;
            }
        }
        if (major < 0) return false; // W wraps the center; nothing behind it is visible
        int lo = W[static_cast<size_t>(major)];
        int hi = W[(static_cast<size_t>(major) + 1) % W.size()];
        for (int s : V) {
            int off = (s - lo + P) % P;
            int len = (hi - lo + P) % P;
            if (len == 0) len = P;
            if (off <= 0 || off >= len) return false;
        }
    }
    return true;
}

} // namespace detail

// Drawability on the annulus: through-blocks route the genus-zero permutation
// test; a configuration touching only one circle at a time reduces to the
// ordinary disk test on each circle.
inline bool is_annular_noncrossing(const AnnulusPartition& p) {
    detail::AnnulusBlocks ab(p);
    if (!ab.has_through) {
        return detail::slots_noncrossing(ab.outer_of_block) && detail::slots_noncrossing(ab.inner_of_block);
    }
    return detail::exists_planar_orientation(ab, false);
}

// Membership in the k-divisible type D family: annular non-crossing plus
//  (1) central symmetry (carried by the SignedPartition invariant),
//  (2) |e_{i+1}| = |e_i|+1 mod k along every block's drawing order,
//  (3) a zero-block holds the whole inner circle and >= 2 outer labels,
//  (4) without through-blocks, merging any inner block into any visible
//      outer block still admits an orientation satisfying (2).
inline bool is_type_d(const AnnulusPartition& p) {
    detail::AnnulusBlocks ab(p);
    const detail::AnnulusFrame& f = ab.frame;

    // condition 3
    for (size_t i = 0; i < p.base.blocks.size(); ++i) {
        const auto& blk = p.base.blocks[i];
        bool zero = true;
        for (int x : blk)
            if (std::find(blk.begin(), blk.end(), -x) == blk.end()) {
                zero = false;
                break;
            }
        if (!zero) continue;
        if (static_cast<int>(ab.inner_of_block[i].size()) != f.Q) return false;
        if (ab.outer_of_block[i].size() < 2) return false;
    }

    if (ab.has_through) return detail::exists_planar_orientation(ab, true);

    // pure blocks: canonical traversal must satisfy the mod-k condition
    for (size_t i = 0; i < ab.outer_of_block.size(); ++i) {
        const auto& run = ab.outer_of_block[i].empty() ? ab.inner_of_block[i] : ab.outer_of_block[i];
        if (!detail::cycle_satisfies_mod_condition(run, f)) return false;
    }
    if (!detail::slots_noncrossing(ab.outer_of_block) || !detail::slots_noncrossing(ab.inner_of_block))
        return false;

    // condition 4
    if (f.k == 1) return true;
    for (size_t vi = 0; vi < ab.inner_of_block.size(); ++vi) {
        if (ab.inner_of_block[vi].empty()) continue;
        for (size_t vj = 0; vj < ab.outer_of_block.size(); ++vj) {
            if (ab.outer_of_block[vj].empty()) continue;
            if (!detail::outer_block_visible(vj, ab.outer_of_block, f.P)) continue;
            auto cands = detail::block_cycle_candidates(ab.outer_of_block[vj], ab.inner_of_block[vi]);
            bool ok = false;
            for (const auto& c : cands)
                if (detail::cycle_satisfies_mod_condition(c, f)) {
                    ok = true;
                    break;
                }
            if (!ok) return false;
        }
    }
    return true;
}

} // namespace noncross
