#pragma once

#include <optional>
#include <utility>

#include "lepath/qpoly.hpp"
#include "lepath/region.hpp"

namespace lepath {

// An East step leaving (i,j) is the (i+j+1)-st step of any full path through
// it, so it contributes exponent i+j+1.  This makes the weight of a full
// extension path equal sum_i L(alpha_i) and keeps weights additive under
// concatenation.
inline long east_step_exponent(const GridPoint& p) { return p.x + p.y + 1; }

// q-weighted count of NE paths A -> B staying inside the region.
// Zero polynomial when no such path exists; 1 when A == B.
QPoly count_paths_q(const Region& r, const GridPoint& A, const GridPoint& B);
mpz_class count_paths(const Region& r, const GridPoint& A, const GridPoint& B);

// q-weighted count of paths A -> Q forced through the East step at M
// (i.e. through both M and M+e1).
QPoly count_paths_q_through_step(const Region& r, const GridPoint& A, const GridPoint& M,
                                 const GridPoint& B);

struct PairGeometry {
    GridPoint A, Ap, B, Bp;  // one vertical line, AA' = -BB', A'.y >= B.y
    GridPoint C, D;          // another vertical line, to the right
};

// Validates the injection geometry; throws std::invalid_argument("geometry
// mismatch") if violated.
void check_pair_geometry(const PairGeometry& g);

// The path-pair injection: translate delta up to A', cut at the first
// intersection with gamma, swap tails, translate back.  Both outputs stay in
// the region and the weight sum is preserved.
std::pair<NEPath, NEPath> kappa(const Region& r, const PairGeometry& g, const NEPath& gamma,
                                const NEPath& delta);

struct LemmaPairsEvidence {
    QPoly lhs;   // K_q(A',C) * K_q(B',D)
    QPoly rhs;   // K_q(A,C) * K_q(B,D)
    QPoly diff;  // lhs - rhs, expected coefficientwise >= 0
};

LemmaPairsEvidence check_lemma_pairs(const Region& r, const PairGeometry& g);

// K_q(A,C)K_q(B,D) + K_q(A',C')K_q(B',D') - K_q(A',C)K_q(B',D) - K_q(A,C')K_q(B,D').
// Requires CC' = -DD' = AA' = -BB' and AB = CD as vectors; points may lie
// outside the region (their counts are zero).
QPoly criss_cross_delta2(const Region& r, GridPoint A, GridPoint Ap, GridPoint B, GridPoint Bp,
                         GridPoint C, GridPoint Cp, GridPoint D, GridPoint Dp);

// Column anchors for a same-chain pair x = alpha_s, y = alpha_{s+r}: a path
// of an extension with L(x) = u takes its East step at Y(u), and with
// L(y) = u at V(u).
struct LevelAnchors {
    int s = 0;
    int r = 0;
    GridPoint Y(int u) const { return {s - 1, u - s}; }
    GridPoint V(int u) const { return {s + r - 1, u - s - r}; }
};

// F_q(w;k): q-weighted count of extension paths with L(x) = w, L(y) = w + k,
// computed from the anchor decomposition.
QPoly f_level_q(const Region& reg, const LevelAnchors& an, int w, int k);

struct STerm {
    QPoly direct;     // from the four F_q(*;*) products
    QPoly regrouped;  // from the difference-of-differences regrouping
};

// S(u;w) at gap k, for u >= w-1.  Both routes must agree exactly.
STerm s_term(const Region& reg, const LevelAnchors& an, int k, int u, int w);

enum class ForcedCase { AtAOnLower, AtDOnUpper, Pinch, Other };

struct ForcedPoint {
    GridPoint point;
    ForcedCase tag;
};

// When the crossed-products equality K_q(A,C)K_q(B,D) = K_q(B,C)K_q(A,D)
// holds, the point every counted path passes through (with the boundary case
// it realizes); nothing when the inequality is strict or no such point exists.
std::optional<ForcedPoint> forced_point(const Region& r, const GridPoint& A, const GridPoint& B,
                                        const GridPoint& C, const GridPoint& D);

}  // namespace lepath
