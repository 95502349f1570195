#include "lepath/path_calc.hpp"

#include <stdexcept>

namespace lepath {

namespace {

[[noreturn]] void geometry_mismatch() { throw std::invalid_argument("geometry mismatch"); }

void require(bool cond) {
    if (!cond) geometry_mismatch();
}

void internal_check(bool cond, const char* what) {
    if (!cond) throw std::logic_error(what);
}

}  // namespace

QPoly count_paths_q(const Region& r, const GridPoint& A, const GridPoint& B) {
    if (B.x < A.x || B.y < A.y || !r.contains(A) || !r.contains(B)) return QPoly::zero();
    int w = B.y - A.y;
    // One column at a time; dp[y - A.y] is the weighted count of paths to
    // (x, y) using region-interior points only.
    std::vector<QPoly> dp(w + 1);
    dp[0] = QPoly::one();
    for (int y = A.y + 1; y <= B.y; ++y)
        dp[y - A.y] = r.contains({A.x, y}) ? dp[y - A.y - 1] : QPoly::zero();
    for (int x = A.x + 1; x <= B.x; ++x) {
        std::vector<QPoly> next(w + 1);
        for (int y = A.y; y <= B.y; ++y) {
            if (!r.contains({x, y})) continue;
            QPoly v;
            if (!dp[y - A.y].is_zero())
                v += dp[y - A.y] * QPoly::monomial(east_step_exponent({x - 1, y}));
            if (y > A.y) v += next[y - A.y - 1];
            next[y - A.y] = std::move(v);
        }
        dp = std::move(next);
    }
    return dp[w];
}

mpz_class count_paths(const Region& r, const GridPoint& A, const GridPoint& B) {
    if (B.x < A.x || B.y < A.y || !r.contains(A) || !r.contains(B)) return 0;
    int w = B.y - A.y;
    std::vector<mpz_class> dp(w + 1, 0);
    dp[0] = 1;
    for (int y = A.y + 1; y <= B.y; ++y)
        dp[y - A.y] = r.contains({A.x, y}) ? dp[y - A.y - 1] : mpz_class{0};
    for (int x = A.x + 1; x <= B.x; ++x) {
        std::vector<mpz_class> next(w + 1, 0);
        for (int y = A.y; y <= B.y; ++y) {
            if (!r.contains({x, y})) continue;
            next[y - A.y] = dp[y - A.y];
            if (y > A.y) next[y - A.y] += next[y - A.y - 1];
        }
        dp = std::move(next);
    }
    return dp[w];
}

QPoly count_paths_q_through_step(const Region& r, const GridPoint& A, const GridPoint& M,
                                 const GridPoint& B) {
    QPoly head = count_paths_q(r, A, M);
    if (head.is_zero()) return head;
    QPoly tail = count_paths_q(r, M + kEast, B);
    if (tail.is_zero()) return tail;
    return head * QPoly::monomial(east_step_exponent(M)) * tail;
}

void check_pair_geometry(const PairGeometry& g) {
    require(g.A.x == g.Ap.x && g.A.x == g.B.x && g.A.x == g.Bp.x);
    require(g.C.x == g.D.x);
    require(g.C.x >= g.A.x);
    require(g.A.y >= g.Ap.y);                      // A above A'
    require(g.A.y - g.Ap.y == g.Bp.y - g.B.y);     // AA' = -BB'
    require(g.Ap.y >= g.B.y);                      // A' on or above B
    require(g.Ap.y - g.B.y >= g.C.y - g.D.y);      // translated delta ends above C
}

std::pair<NEPath, NEPath> kappa(const Region& r, const PairGeometry& g, const NEPath& gamma,
                                const NEPath& delta) {
    check_pair_geometry(g);
    require(r.contains(g.A) && r.contains(g.Ap) && r.contains(g.B) && r.contains(g.Bp));
    require(gamma.start() == g.A && gamma.end() == g.C);
    require(delta.start() == g.B && delta.end() == g.D);
    require(r.contains_path(gamma) && r.contains_path(delta));

    GridPoint v = g.Ap - g.B;
    NEPath delta_hat = delta.translated(v);  // A' -> D + v

    // First (closest to A) common point of gamma and the translated delta.
    // Both paths are monotone, so scanning gamma in step order scans common
    // points by distance from A.
    std::optional<GridPoint> E;
    for (const GridPoint& p : gamma.points()) {
        if (delta_hat.contains_point(p)) {
            E = p;
            break;
        }
    }
    internal_check(E.has_value(), "kappa: translated paths fail to intersect");

    NEPath gamma_out = delta_hat.prefix_to(*E).concat(gamma.suffix_from(*E));
    NEPath delta_out = gamma.prefix_to(*E).concat(delta_hat.suffix_from(*E)).translated(
        GridPoint{0, 0} - v);

    internal_check(gamma_out.start() == g.Ap && gamma_out.end() == g.C,
                   "kappa: first output has wrong endpoints");
    internal_check(delta_out.start() == g.Bp && delta_out.end() == g.D,
                   "kappa: second output has wrong endpoints");
    internal_check(r.contains_path(gamma_out) && r.contains_path(delta_out),
                   "kappa: output leaves the region");
    return {std::move(gamma_out), std::move(delta_out)};
}

LemmaPairsEvidence check_lemma_pairs(const Region& r, const PairGeometry& g) {
    check_pair_geometry(g);
    LemmaPairsEvidence ev;
    ev.lhs = count_paths_q(r, g.Ap, g.C) * count_paths_q(r, g.Bp, g.D);
    ev.rhs = count_paths_q(r, g.A, g.C) * count_paths_q(r, g.B, g.D);
    ev.diff = ev.lhs - ev.rhs;
    return ev;
}

QPoly criss_cross_delta2(const Region& r, GridPoint A, GridPoint Ap, GridPoint B, GridPoint Bp,
                         GridPoint C, GridPoint Cp, GridPoint D, GridPoint Dp) {
    require(A.x == Ap.x && A.x == B.x && A.x == Bp.x);
    require(C.x == Cp.x && C.x == D.x && C.x == Dp.x);
    GridPoint shift = Ap - A;  // vector AA'
    require(shift.x == 0 && shift.y <= 0);
    require(Cp - C == shift && D - Dp == shift && B - Bp == shift);
    require(B - A == D - C);  // AB = CD
    require(A.y >= Ap.y && A.y >= Bp.y && Ap.y >= B.y && Bp.y >= B.y);  // A top, B bottom
    require(C.y >= Cp.y && C.y >= Dp.y && Cp.y >= D.y && Dp.y >= D.y);

    return count_paths_q(r, A, C) * count_paths_q(r, B, D) +
           count_paths_q(r, Ap, Cp) * count_paths_q(r, Bp, Dp) -
           count_paths_q(r, Ap, C) * count_paths_q(r, Bp, D) -
           count_paths_q(r, A, Cp) * count_paths_q(r, B, Dp);
}

QPoly f_level_q(const Region& reg, const LevelAnchors& an, int w, int k) {
    GridPoint Y = an.Y(w), V = an.V(w + k);
    GridPoint origin{0, 0}, Q{reg.a(), reg.b()};
    QPoly head = count_paths_q(reg, origin, Y);
    if (head.is_zero()) return head;
    QPoly mid = count_paths_q(reg, Y + kEast, V);
    if (mid.is_zero()) return mid;
    QPoly tail = count_paths_q(reg, V + kEast, Q);
    if (tail.is_zero()) return tail;
    // The two forced East steps carry exponents w and w+k.
    return head * mid * tail * QPoly::monomial(2L * w + k);
}

STerm s_term(const Region& reg, const LevelAnchors& an, int k, int u, int w) {
    if (u < w - 1) throw std::invalid_argument("s_term requires u >= w-1");
    STerm out;

    auto F = [&](int v, int j) { return f_level_q(reg, an, v, j); };
    out.direct = F(u, k) * F(w, k) + F(w - 1, k) * F(u + 1, k) - F(u, k + 1) * F(w, k - 1) -
                 F(u + 1, k - 1) * F(w - 1, k + 1);

    GridPoint origin{0, 0}, Q{reg.a(), reg.b()};
    auto K = [&](GridPoint P1, GridPoint P2) { return count_paths_q(reg, P1, P2); };

    if (u == w - 1) {
        // The boundary grouping: a crossed-products difference framed by the
        // common head and tail factors, doubled because the pair (u,u+1)
        // appears twice in the expansion.
        GridPoint Yp = an.Y(u) + kEast, Y = an.Y(u + 1) + kEast;
        GridPoint Vp = an.V(u + k), V = an.V(u + k + 1);
        QPoly bracket = K(Y, V) * K(Yp, Vp) - K(Yp, V) * K(Y, Vp);
        out.regrouped = K(origin, an.Y(u)) * K(origin, an.Y(u + 1)) * K(V + kEast, Q) *
                        K(Vp + kEast, Q) * bracket *
                        QPoly::monomial(4L * u + 2L * k + 2) * QPoly(mpz_class{2});
        return out;
    }

    // Anchor points around levels u (A side) and w (B side).
    GridPoint A1 = an.Y(u + 1), A = A1 + kEast;
    GridPoint A1p = an.Y(u), Ap = A1p + kEast;
    GridPoint B1 = an.Y(w - 1), B = B1 + kEast;
    GridPoint B1p = an.Y(w), Bp = B1p + kEast;
    GridPoint C = an.V(u + k + 1), C1 = C + kEast;
    GridPoint Cp = an.V(u + k), C1p = C1 - kNorth;
    GridPoint D = an.V(w + k - 1), D1 = D + kEast;
    GridPoint Dp = an.V(w + k), D1p = D1 + kNorth;

    QPoly a1 = K(origin, A1), a1p = K(origin, A1p);
    QPoly b1 = K(origin, B1), b1p = K(origin, B1p);
    QPoly c1 = K(C1, Q), c1p = K(C1p, Q);
    QPoly d1 = K(D1, Q), d1p = K(D1p, Q);
    QPoly ac = K(A, C), acp = K(A, Cp), apc = K(Ap, C), apcp = K(Ap, Cp);
    QPoly bd = K(B, D), bdp = K(B, Dp), bpd = K(Bp, D), bpdp = K(Bp, Dp);

    QPoly r1 = (a1p * b1p - a1 * b1) * (apcp * bpdp * c1p * d1p - apc * bpd * c1 * d1);
    QPoly r2 = a1 * b1 * (apcp * bpdp - acp * bdp) * (c1p * d1p - c1 * d1);
    QPoly delta2 = ac * bd + apcp * bpdp - acp * bdp - apc * bpd;
    QPoly r3 = a1 * b1 * delta2 * c1 * d1;

    out.regrouped = (r1 + r2 + r3) * QPoly::monomial(2L * (u + w + k));
    return out;
}

std::optional<ForcedPoint> forced_point(const Region& r, const GridPoint& A, const GridPoint& B,
                                        const GridPoint& C, const GridPoint& D) {
    require(A.x == B.x && C.x == D.x && C.x >= A.x);
    require(A.y >= B.y && C.y >= D.y);

    QPoly kac = count_paths_q(r, A, C), kbd = count_paths_q(r, B, D);
    QPoly kbc = count_paths_q(r, B, C), kad = count_paths_q(r, A, D);
    if (kac * kbd != kbc * kad) return std::nullopt;

    auto splits_all = [&](const GridPoint& E) {
        return kac == count_paths_q(r, A, E) * count_paths_q(r, E, C) &&
               kbd == count_paths_q(r, B, E) * count_paths_q(r, E, D) &&
               kbc == count_paths_q(r, B, E) * count_paths_q(r, E, C) &&
               kad == count_paths_q(r, A, E) * count_paths_q(r, E, D);
    };

    auto classify = [&](const GridPoint& E) {
        if (E == A && r.on_lower_boundary(E)) return ForcedCase::AtAOnLower;
        if (E == D && r.on_upper_boundary(E)) return ForcedCase::AtDOnUpper;
        if (r.on_lower_boundary(E) && r.on_upper_boundary(E)) return ForcedCase::Pinch;
        return ForcedCase::Other;
    };

    if (splits_all(A)) return ForcedPoint{A, classify(A)};
    if (splits_all(D)) return ForcedPoint{D, classify(D)};
    for (int x = A.x; x <= C.x; ++x)
        for (int y = std::min(B.y, D.y); y <= std::max(A.y, C.y); ++y) {
            GridPoint E{x, y};
            if (!r.contains(E)) continue;
            if (splits_all(E)) return ForcedPoint{E, classify(E)};
        }
    return std::nullopt;
}

}  // namespace lepath
