#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "lepath/poset.hpp"
#include "lepath/region.hpp"

namespace lepath {

// All posets on 1..nmax elements up to isomorphism, one deterministic
// representative per class, grouped by size.  Built by extending each
// (n-1)-class with a new maximal element over every order ideal and
// deduplicating by isomorphism within invariant buckets.
std::vector<std::vector<Poset>> poset_classes_up_to(int nmax);

bool posets_isomorphic(const Poset& a, const Poset& b);

// Order ideals (down-closed subsets) of p as bitmasks, ascending.
std::vector<uint32_t> order_ideals(const Poset& p);

// Random poset: comparabilities sampled over a random linear order, then
// closed.  density16 is the inclusion probability in 1/65536 units.
Poset random_poset(std::mt19937_64& rng, int n, uint32_t density16 = 32768);

// Uniform over weakly noncrossing ordered boundary pairs, by rejection.
Region random_region(std::mt19937_64& rng, int a, int b);

}  // namespace lepath
