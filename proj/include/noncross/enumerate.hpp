#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "noncross/annulus.hpp"
#include "noncross/bigcount.hpp"
#include "noncross/block_type.hpp"
#include "noncross/family.hpp"
#include "noncross/noncrossing.hpp"
#include "noncross/partition.hpp"

namespace noncross {
namespace detail {

// Exhaustive non-crossing partition generator, canonical-lexicographic order.
//
// The block of the least uncovered point is grown element by element; closing
// it splits the rest into independent gap segments (interval structure of
// non-crossing partitions).  Trying "close" before every extension and
// extending with ascending elements makes the emission order coincide with
// lexicographic order on canonical forms.  Divisibility pruning: a gap can be
// partitioned k-divisibly iff its size is a multiple of k.
template <class Emit>
class NoncrossingGen {
public:
    NoncrossingGen(int k, FamilyMode mode, Emit& emit) : k_(k), mode_(mode), emit_(emit) {}

    void run(std::vector<int> points) {
        if (!points.empty()) segs_.push_back(std::move(points));
        rec();
    }

private:
    bool gap_ok(int len) const { return mode_ == FamilyMode::all || len % k_ == 0; }

    bool block_ok(int len) const {
        switch (mode_) {
            case FamilyMode::all: return true;
            case FamilyMode::k_divisible: return len % k_ == 0;
            default: return len == k_;
        }
    }

    void rec() {
        if (segs_.empty()) {
            emit_(blocks_);
            return;
        }
        std::vector<int> seg = std::move(segs_.back());
        segs_.pop_back();
        std::vector<size_t> chosen{0};
        std::vector<int> block{seg[0]};
        grow(seg, chosen, block);
        segs_.push_back(std::move(seg));
    }

    void grow(const std::vector<int>& seg, std::vector<size_t>& chosen, std::vector<int>& block) {
        const size_t last = chosen.back();
        if (block_ok(static_cast<int>(block.size()))) {
            int tail_len = static_cast<int>(seg.size() - last - 1);
            if (gap_ok(tail_len)) {
                size_t pushed = 0;
                if (tail_len > 0) {
                    segs_.emplace_back(seg.begin() + static_cast<long>(last) + 1, seg.end());
                    ++pushed;
                }
                for (size_t j = chosen.size() - 1; j-- > 0;) {
                    if (chosen[j + 1] - chosen[j] > 1) {
                        segs_.emplace_back(seg.begin() + static_cast<long>(chosen[j]) + 1,
                                           seg.begin() + static_cast<long>(chosen[j + 1]));
                        ++pushed;
                    }
                }
                blocks_.push_back(block);
                rec();
                blocks_.pop_back();
                segs_.resize(segs_.size() - pushed);
            }
        }
        if (mode_ == FamilyMode::k_equal && static_cast<int>(block.size()) == k_) return;
        for (size_t i = last + 1; i < seg.size(); ++i) {
            if (!gap_ok(static_cast<int>(i - last - 1))) continue;
            chosen.push_back(i);
            block.push_back(seg[i]);
            grow(seg, chosen, block);
            chosen.pop_back();
            block.pop_back();
        }
    }

    int k_;
    FamilyMode mode_;
    Emit& emit_;
    std::vector<std::vector<int>> segs_; // pending gap segments, back = next
    Blocks blocks_;
};

template <class Emit>
void for_each_noncrossing(int ground, int k, FamilyMode mode, Emit&& emit) {
    std::vector<int> pts(static_cast<size_t>(ground));
    for (int i = 0; i < ground; ++i) pts[static_cast<size_t>(i)] = i + 1;
    NoncrossingGen<Emit> gen(k, mode, emit);
    gen.run(std::move(pts));
}

// Exhaustive generator of centrally symmetric partitions of +-[n] with at
// most one zero-block, canonical-lexicographic in the signed position order.
// Choosing the orbit of the block containing the least uncovered position and
// recursing keeps types B and D feasible without scanning all partitions of
// 2n points.  Blocks are emitted as position vectors, mirrors placed
// immediately after their representatives; sortedness is restored by the
// caller.  With prune_noncrossing set, every placement keeps the circular
// picture non-crossing (type B); otherwise all symmetric partitions appear
// (type D candidates).
template <class Emit>
class SymmetricGen {
public:
    SymmetricGen(int n, int k, FamilyMode mode, bool half_size_zero_rule, bool prune_noncrossing, Emit& emit)
        : n_(n), k_(k), mode_(mode), half_rule_(half_size_zero_rule), prune_nc_(prune_noncrossing), emit_(emit) {
        full_ = (n_ >= 32) ? ~uint64_t{0} >> (64 - 2 * n_) : (uint64_t{1} << (2 * n_)) - 1;
    }

    void run() { rec(); }

private:
    int mirror(int pos) const { return pos < n_ ? pos + n_ : pos - n_; }

    bool pair_size_ok(int len) const {
        switch (mode_) {
            case FamilyMode::all: return true;
            case FamilyMode::k_divisible: return len % k_ == 0;
            default: return len == k_;
        }
    }

    bool zero_size_ok(int len) const { // len = full cardinality of the zero-block
        int half = len / 2;
        switch (mode_) {
            case FamilyMode::all: return true;
            case FamilyMode::k_divisible: return half_rule_ ? half % k_ == 0 : len % k_ == 0;
            default: return half == k_;
        }
    }

    bool crosses_placed(const std::vector<int>& b) const {
        for (const auto& other : blocks_)
            if (blocks_cross(other, b)) return true;
        return false;
    }

    void rec() {
        if (covered_ == full_) {
            emit_(blocks_);
            return;
        }
        int m = 0;
        while (covered_ & (uint64_t{1} << m)) ++m;
        std::vector<int> block{m};
        covered_ |= uint64_t{1} << m;
        grow(block, m);
        covered_ &= ~(uint64_t{1} << m);
    }

    void try_close(const std::vector<int>& block) {
        std::vector<int> mir;
        mir.reserve(block.size());
        for (int p : block) mir.push_back(mirror(p));
        std::sort(mir.begin(), mir.end());
        if (mir == block) {
            if (zero_used_ || !zero_size_ok(static_cast<int>(block.size()))) return;
            if (prune_nc_ && crosses_placed(block)) return;
            zero_used_ = true;
            blocks_.push_back(block);
            rec();
            blocks_.pop_back();
            zero_used_ = false;
            return;
        }
        if (!pair_size_ok(static_cast<int>(block.size()))) return;
        uint64_t mir_mask = 0;
        for (int p : mir) mir_mask |= uint64_t{1} << p;
        if (mir_mask & covered_) return; // mirror collides (incl. overlap with block itself)
        if (prune_nc_ && (crosses_placed(block) || crosses_placed(mir) || blocks_cross(block, mir))) return;
        covered_ |= mir_mask;
        blocks_.push_back(block);
        blocks_.push_back(std::move(mir));
        rec();
        blocks_.pop_back();
        blocks_.pop_back();
        covered_ &= ~mir_mask;
    }

    void grow(std::vector<int>& block, int last) {
        try_close(block);
        if (mode_ == FamilyMode::k_equal && static_cast<int>(block.size()) >= 2 * k_) return;
        for (int p = last + 1; p < 2 * n_; ++p) {
            if (covered_ & (uint64_t{1} << p)) continue;
            covered_ |= uint64_t{1} << p;
            block.push_back(p);
            grow(block, p);
            block.pop_back();
            covered_ &= ~(uint64_t{1} << p);
        }
    }

    int n_, k_;
    FamilyMode mode_;
    bool half_rule_, prune_nc_;
    Emit& emit_;
    uint64_t covered_ = 0, full_;
    bool zero_used_ = false;
    Blocks blocks_; // position vectors
};

inline Blocks positions_to_labels(const Blocks& position_blocks, int n) {
    Blocks out;
    out.reserve(position_blocks.size());
    for (const auto& b : position_blocks) {
        std::vector<int> lb;
        lb.reserve(b.size());
        for (int p : b) lb.push_back(label_at_position(p, n));
        out.push_back(std::move(lb));
    }
    std::sort(out.begin(), out.end(), [n](const std::vector<int>& a, const std::vector<int>& b) {
        return signed_position(a.front(), n) < signed_position(b.front(), n);
    });
    return out;
}

} // namespace detail

// Streams every member of the family exactly once, in canonical
// lexicographic order of canonical forms.  The visitor receives the blocks
// with their natural labels: 1..nk for type A, signed labels for B and D.
template <class Emit>
void enumerate_family(const FamilySpec& spec, int max_points, Emit&& emit) {
    validate_spec(spec);
    check_guard(spec, max_points);

    switch (spec.type) {
        case FamilyType::A: {
            detail::for_each_noncrossing(ground_points(spec), spec.k, spec.mode, emit);
            return;
        }
        case FamilyType::B: {
            const int half = spec.n * spec.k;
            auto wrap = [&](const Blocks& position_blocks) {
                emit(detail::positions_to_labels(position_blocks, half));
            };
            detail::SymmetricGen gen(half, spec.k, spec.mode, /*half_size_zero_rule=*/true,
                                     /*prune_noncrossing=*/true, wrap);
            gen.run();
            return;
        }
        case FamilyType::D: {
            const int half = spec.n * spec.k;
            // condition 2 of the type D definition forces k-divisibility of
            // block cardinalities, so pruning on full sizes is sound
            FamilyMode gen_mode = spec.mode == FamilyMode::all ? FamilyMode::all : spec.mode;
            auto wrap = [&](const Blocks& position_blocks) {
                Blocks labeled = detail::positions_to_labels(position_blocks, half);
                SignedPartition base{half, labeled};
                AnnulusPartition ap{spec.n, spec.k, std::move(base)};
                if (!is_type_d(ap)) return;
                if (spec.sub != DSubfamily::none) {
                    bool has_zero = ap.base.zero_block_index() >= 0;
                    if ((spec.sub == DSubfamily::D1) != has_zero) return;
                }
                emit(ap.base.blocks);
            };
            detail::SymmetricGen gen(half, spec.k, gen_mode, /*half_size_zero_rule=*/false,
                                     /*prune_noncrossing=*/false, wrap);
            gen.run();
            return;
        }
    }
}

inline BigCount count_by_enumeration(const FamilySpec& spec, int max_points = default_max_points()) {
    BigCount count = 0;
    enumerate_family(spec, max_points, [&](const Blocks&) { ++count; });
    return count;
}

// Members materialized as label-block lists (used by the sampler and CLI).
inline std::vector<Blocks> materialize_family(const FamilySpec& spec, int max_points = default_max_points()) {
    std::vector<Blocks> out;
    enumerate_family(spec, max_points, [&](const Blocks& blocks) { out.push_back(blocks); });
    return out;
}

} // namespace noncross
