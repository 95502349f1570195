#pragma once

#include <map>
#include <optional>

#include "lepath/multipoly.hpp"
#include "lepath/path_calc.hpp"
#include "lepath/poset.hpp"
#include "lepath/qpoly.hpp"
#include "lepath/region.hpp"

namespace lepath {

// Distribution of a linear-extension statistic: k -> aggregated value.
// kind 'N' fixes L(x) = k, kind 'F' fixes L(y) - L(x) = k.  Absent keys
// mean zero.
template <class V>
struct Dist {
    char kind = 'N';
    int x = 0;
    int y = 0;
    std::map<int, V> table;

    V at(int k) const {
        auto it = table.find(k);
        return it == table.end() ? V{} : it->second;
    }
};

using CountDist = Dist<mpz_class>;
using QDist = Dist<QPoly>;
using MqDist = Dist<MultiPoly>;

// Plain counts; enumeration for n <= 12, lattice-path counting (at q=1)
// for larger width-two posets.
CountDist n_dist(const Poset& p, int x);
CountDist f_dist(const Poset& p, int x, int y);

// q-weighted and multivariate variants; require the chain partition that
// defines the weight.  Computed by enumeration for n <= 12 and by the
// region step-anchor decomposition for width-two posets of any size; the
// two routes are cross-checked whenever both ran.
QDist n_q_dist(const Poset& p, const ChainPartition& cp, int x);
QDist f_q_dist(const Poset& p, const ChainPartition& cp, int x, int y);
MqDist n_mq_dist(const Poset& p, const ChainPartition& cp, int x);
MqDist f_mq_dist(const Poset& p, const ChainPartition& cp, int x, int y);

// F_q(w;k): additionally restricts to L(x) = w.
QPoly f_q_level(const Poset& p, const ChainPartition& cp, int x, int y, int w, int k);

// Multivariate weight monomial exponents of one extension:
// exps[i-1] = L(alpha_i) - L(alpha_{i-1}).
std::vector<int> mq_exponents(const ChainPartition& cp, const LinearExtension& L);

bool coeffwise_geq(const QPoly& f, const QPoly& g);        // f >= g coefficientwise
bool coeffwise_geq(const MultiPoly& f, const MultiPoly& g);

// 0: different chains; 1: both in c1; 2: both in c2.
int same_chain(const ChainPartition& cp, int x, int y);

// Log-concavity reports: for each k > 1, the difference
// table[k]^2 - table[k-1]*table[k+1] and whether it is (coefficientwise)
// nonnegative.
template <class V>
struct CheckReport {
    std::map<int, V> differences;
    std::map<int, bool> holds;
    bool all_hold = true;
};

CheckReport<mpz_class> check_stanley(const Poset& p, int x);
CheckReport<mpz_class> check_ks(const Poset& p, int x, int y);
CheckReport<QPoly> check_q_stanley(const Poset& p, const ChainPartition& cp, int x);
// Refuses cross-chain pairs: the coefficientwise inequality genuinely fails
// there (C3+C3 with x=alpha_1, y=beta_3 gives difference q^26 - q^25 at k=2).
CheckReport<QPoly> check_q_ks(const Poset& p, const ChainPartition& cp, int x, int y);
CheckReport<MultiPoly> check_mq_stanley(const Poset& p, const ChainPartition& cp, int x);
CheckReport<MultiPoly> check_mq_ks(const Poset& p, const ChainPartition& cp, int x, int y);

// Multivariate path counting: North steps on column x < a contribute q_{x+1};
// used by the distribution cross-checks.
MultiPoly count_paths_mq(const Region& r, int arity, const GridPoint& A, const GridPoint& B);

}  // namespace lepath
