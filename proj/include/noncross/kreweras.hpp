#pragma once

#include <vector>

#include "noncross/noncrossing.hpp"
#include "noncross/partition.hpp"

namespace noncross {

// Kreweras complement: the maximal sigma on the interleaved copy 1',..,n'
// (each primed point drawn just before its original) with p union sigma
// non-crossing on 2n points.  Computed via the cycle identity: writing a
// non-crossing partition as the permutation whose cycles are its blocks in
// increasing order, the complement's blocks are the cycles of gamma o sigma^-1
// with gamma = (1 2 .. n).  Satisfies |p| + |Kr(p)| = n + 1.
inline ClassicalPartition kreweras(const ClassicalPartition& p) {
    if (!is_noncrossing(p)) throw crossing_input("kreweras: input partition crosses");
    const int n = p.ground_size;

    std::vector<int> prev(static_cast<size_t>(n) + 1, 0);
    for (const auto& b : p.blocks)
        for (size_t t = 0; t < b.size(); ++t)
            prev[static_cast<size_t>(b[t])] = b[(t + b.size() - 1) % b.size()];

    std::vector<char> done(static_cast<size_t>(n) + 1, 0);
    Blocks blocks;
    for (int start = 1; start <= n; ++start) {
        if (done[static_cast<size_t>(start)]) continue;
        std::vector<int> cycle;
        int x = start;
        do {
            done[static_cast<size_t>(x)] = 1;
            cycle.push_back(x);
            x = prev[static_cast<size_t>(x)] % n + 1; // gamma(sigma^-1(x))
        } while (x != start);
        blocks.push_back(std::move(cycle));
    }
    detail::sort_blocks_classical(blocks);
    return ClassicalPartition{n, std::move(blocks)};
}

} // namespace noncross
