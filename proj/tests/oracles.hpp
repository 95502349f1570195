#pragma once

// Test-only oracles, kept independent of the library's computation paths:
// extensions by filtering raw permutations, path counts by explicit walks,
// extension counts by the ideal recursion.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "lepath/poset.hpp"
#include "lepath/qpoly.hpp"
#include "lepath/region.hpp"

namespace oracle {

using lepath::ChainPartition;
using lepath::GridPoint;
using lepath::LinearExtension;
using lepath::NEPath;
using lepath::Poset;
using lepath::QPoly;
using lepath::Region;

// Every extension of p, by brute force over all n! rank assignments.
inline std::vector<LinearExtension> extensions_by_permutations(const Poset& p) {
    int n = p.size();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<LinearExtension> out;
    do {
        std::vector<int> ranks(n + 1, 0);
        for (int u = 1; u <= n; ++u) ranks[u] = perm[u - 1];
        LinearExtension L(ranks);
        if (L.respects(p)) out.push_back(L);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

// e(P) by the recursion over order ideals: e(I) = sum over maximal m of e(I-m).
inline long long count_extensions_ideal_dp(const Poset& p) {
    int n = p.size();
    std::map<uint32_t, long long> memo;
    std::function<long long(uint32_t)> count = [&](uint32_t mask) -> long long {
        if (mask == 0) return 1;
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        long long total = 0;
        for (int u = 1; u <= n; ++u) {
            if (!((mask >> (u - 1)) & 1)) continue;
            bool maximal = true;
            for (int v = 1; v <= n && maximal; ++v)
                if (((mask >> (v - 1)) & 1) && p.less(u, v)) maximal = false;
            if (maximal) total += count(mask & ~(uint32_t{1} << (u - 1)));
        }
        memo[mask] = total;
        return total;
    };
    return count((uint32_t{1} << n) - 1);
}

// All NE paths A -> B staying inside the region, by explicit walk.
inline std::vector<NEPath> paths_by_walk(const Region& r, GridPoint A, GridPoint B) {
    std::vector<NEPath> out;
    if (B.x < A.x || B.y < A.y || !r.contains(A) || !r.contains(B)) return out;
    std::string steps;
    std::function<void(GridPoint)> walk = [&](GridPoint p) {
        if (p == B) {
            out.emplace_back(A, steps);
            return;
        }
        if (p.x < B.x && r.contains({p.x + 1, p.y})) {
            steps.push_back('E');
            walk({p.x + 1, p.y});
            steps.pop_back();
        }
        if (p.y < B.y && r.contains({p.x, p.y + 1})) {
            steps.push_back('N');
            walk({p.x, p.y + 1});
            steps.pop_back();
        }
    };
    walk(A);
    return out;
}

inline long segment_weight(const NEPath& path) {
    long w = 0;
    GridPoint p = path.start();
    for (char c : path.steps()) {
        if (c == 'E') w += p.x + p.y + 1;
        p = p + (c == 'E' ? lepath::kEast : lepath::kNorth);
    }
    return w;
}

inline QPoly qcount_by_walk(const Region& r, GridPoint A, GridPoint B) {
    QPoly q;
    for (const NEPath& path : paths_by_walk(r, A, B)) q.add_term(segment_weight(path), 1);
    return q;
}

// The two disjoint three-element chains with the canonical partition.
inline std::pair<Poset, ChainPartition> c3_plus_c3() {
    Poset p = Poset::from_relations(6, {{1, 2}, {2, 3}, {4, 5}, {5, 6}});
    ChainPartition cp{{1, 2, 3}, {4, 5, 6}};
    return {p, cp};
}

// The pentagon: alpha-chain 1<2<3, beta-chain 4<5, alpha1 < beta1 < beta2 < alpha3,
// with alpha2 incomparable to both betas.
inline std::pair<Poset, ChainPartition> pentagon() {
    Poset p = Poset::from_relations(5, {{1, 2}, {2, 3}, {4, 5}, {1, 4}, {5, 3}});
    ChainPartition cp{{1, 2, 3}, {4, 5}};
    return {p, cp};
}

}  // namespace oracle
