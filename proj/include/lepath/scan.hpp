#pragma once

#include <map>
#include <string>
#include <vector>

#include "lepath/generators.hpp"
#include "lepath/poset.hpp"
#include "lepath/region.hpp"

namespace lepath {

// Aggregated result of an exhaustive or randomized sweep.  Theorem-backed
// assertion failures land in `violations` (they fail the run); conjecture-
// relevant findings land in `specimens` (they never do).
struct ScanReport {
    std::string suite;
    std::map<std::string, long long> counters;
    std::vector<std::string> violations;
    std::vector<std::string> specimens;
    long long violation_count = 0;

    bool ok() const { return violation_count == 0; }
    void count(const std::string& name, long long inc = 1) { counters[name] += inc; }
    void add_violation(std::string msg);
    void merge(const ScanReport& o);
};

struct RegionSweepOptions {
    int max_ab = 10;
    bool qks = false;          // coefficientwise q-Kahn-Saks on same-chain pairs
    bool thm16 = false;        // Stanley equality-condition equivalences (a)-(e)
    bool thm17 = false;        // Kahn-Saks equality-condition equivalences (a)-(e)
    bool bijection = false;    // extension <-> path round trip and counts
    bool sterm = false;        // S(u;w) identities and positivity
    bool multivariate = false; // multivariate log-concavity + specialization
    int mq_max_a = 4;
};

ScanReport sweep_regions(const RegionSweepOptions& opts);

struct PosetSweepOptions {
    int max_n = 7;
    bool vanishing = false;    // N(k)>0 / F(k)>0 windows against brute force
    bool conjecture = false;   // (b) <=> (c), (b) => flat, replay, specimens
    bool drive = false;        // phi/psi constructive completeness
    bool plain_lc = false;     // Stanley and Kahn-Saks at q = 1
};

ScanReport sweep_posets(const PosetSweepOptions& opts);
ScanReport sweep_posets_on(const std::vector<Poset>& posets, const PosetSweepOptions& opts,
                           const std::string& source_label);

ScanReport sweep_kappa(int max_a, int max_b);       // injection + pair lemma + equality lemma
ScanReport sweep_crisscross(int max_a, int max_b);  // criss-cross positivity
ScanReport sweep_lgv(int max_a, int max_b);         // crossed-products lemma + forced points

ScanReport sweep_random_posets(uint64_t seed, int count, int n, uint32_t density16);
ScanReport sweep_random_regions(uint64_t seed, int count, int a, int b);

}  // namespace lepath
