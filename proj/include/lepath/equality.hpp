#pragma once

#include <array>
#include <map>
#include <optional>

#include "lepath/poset.hpp"
#include "lepath/qpoly.hpp"
#include "lepath/region.hpp"

namespace lepath {

// --- vanishing predicates -------------------------------------------------

// N(k) > 0  iff  f(x) <= k-1 and g(x) <= n-k.
bool stanley_vanishing(const Poset& p, int x, int k);

// F(k) > 0  iff  h(x,y) < k < n - f(x) - g(y); stated for x strictly below y,
// refused otherwise (the window is not defined for incomparable pairs).
bool ks_vanishing(const Poset& p, int x, int y, int k);

// --- equality-condition predicates ----------------------------------------

// Out-of-range chain indices resolve to a virtual bottom/top comparable to
// everything, so incomparability demands on them fail and prefix demands on
// them hold.
bool pentagon_property(const Poset& p, const ChainPartition& cp, int x, int k);

// f(z) > k for all z above x, and g(z) > n-k+1 for all z below x.
bool svh_condition(const Poset& p, int x, int k);

bool midway_property(const Poset& p, int x, int y, int k);
bool dual_midway_property(const Poset& p, int x, int y, int k);

// The width-two interval form of the midway property (x, y in the same
// chain): existence of levels 1 < c < d <= n pinning a beta-run between the
// chain neighbors of x with matching incomparabilities around x and y.
bool midway_interval_form(const Poset& p, const ChainPartition& cp, int x, int y, int k);

// --- condition (b): forced incomparable neighbors --------------------------

struct BWitness {
    int z;                                    // x or y
    std::vector<std::array<int, 2>> neighbors;  // (u, v) per fiber extension
};

std::vector<LinearExtension> fiber_extensions(const Poset& p, int x, int y, int k);
std::optional<BWitness> condition_b_witness(const Poset& p, int x, int y, int k);

// --- equality-condition tables ---------------------------------------------

struct EqualityReport {
    int k = 0;
    bool applicable = false;      // the hypothesis of the equivalence theorem
    std::map<char, bool> conds;   // 'a'..'e'
    bool consistent = true;       // all evaluated conditions agree
    int epsilon = 0;              // the shift exponent found for (d), if any
};

EqualityReport stanley_equality_conditions(const Poset& p, const ChainPartition& cp, int x,
                                           int k);
EqualityReport ks_equality_conditions(const Poset& p, const ChainPartition& cp, int x, int y,
                                      int k);

// --- level profile ----------------------------------------------------------

struct LevelProfile {
    int u0 = 0, u1 = 0, u2 = 0, u3 = 0;
    int w0 = 0, w1 = 0, w2 = 0, w3 = 0;
    bool nonempty = false;  // the k-fiber support
    int vmin = 0, vmax = 0;
};

LevelProfile level_profile(const Poset& p, const ChainPartition& cp, int x, int y, int k);

// --- promotion-like maps -----------------------------------------------------

// Phi raises L(y) by one by rotating the block up to the nearest element
// incomparable to y; undefined (nullopt) when no such element exists or the
// rotation would move x.
std::optional<LinearExtension> phi_step(const Poset& p, int x, int y,
                                        const LinearExtension& L);

// Psi raises L(x) by one (or lowers L(y), when only a y-side pivot exists),
// shrinking the gap L(y)-L(x) by exactly one.
std::optional<LinearExtension> psi_step(const Poset& p, int x, int y,
                                        const LinearExtension& L);

// Omega keeps the gap at k and raises L(y) by one; requires the forced-
// neighbor condition to supply the swap partner above x.
std::optional<LinearExtension> omega_step(const Poset& p, int x, int y, int k,
                                          const LinearExtension& L);

// Theta keeps L(x) and L(y) and lowers L(w) by one.
std::optional<LinearExtension> theta_step(const Poset& p, int x, int y, int w,
                                          const LinearExtension& L);

// Deterministic extension with L(x) = c (greedy over minimal elements);
// throws when the level is infeasible.
LinearExtension extension_with_rank(const Poset& p, int x, int c);

struct DriveResult {
    LinearExtension L;
    int steps = 0;
};

// Replays the constructive vanishing proof: start c-anchored, iterate
// phi/psi until the gap is exactly k.  Throws std::logic_error if a step is
// unavailable or fails to move the gap by one (both would be bugs given
// ks_vanishing(p,x,y,k)).
DriveResult drive_to_fiber(const Poset& p, int x, int y, int k);

// Replays the normal-form claim: from a k-fiber extension, iterate omega
// until L(y) = n - g(y), then theta until L(w) = f(w) + 1, asserting the
// preserved quantities at every step.
LinearExtension claim_replay(const Poset& p, int x, int y, int k, int w,
                             const LinearExtension& start);

}  // namespace lepath
