#include "lepath/equality.hpp"

#include <algorithm>
#include <stdexcept>

#include "lepath/stats.hpp"

namespace lepath {

namespace {

void internal_check(bool cond, const char* what) {
    if (!cond) throw std::logic_error(what);
}

// Extended ids: 0 is a virtual bottom, n+1 a virtual top; both compare with
// everything, so they can never witness an incomparability.
bool less_ext(const Poset& p, int a, int b) {
    int top = p.size() + 1;
    if (a == b) return false;
    if (a == 0) return true;
    if (b == 0) return false;
    if (b == top) return true;
    if (a == top) return false;
    return p.less(a, b);
}

bool incomp_ext(const Poset& p, int a, int b) {
    int top = p.size() + 1;
    if (a == 0 || b == 0 || a == top || b == top) return false;
    return p.incomparable(a, b);
}

int chain_elem(const std::vector<int>& chain, int i, int n) {
    if (i <= 0) return 0;
    if (i > (int)chain.size()) return n + 1;
    return chain[i - 1];
}

}  // namespace

bool stanley_vanishing(const Poset& p, int x, int k) {
    p.check_ids(x);
    return p.down_count(x) <= k - 1 && p.up_count(x) <= p.size() - k;
}

bool ks_vanishing(const Poset& p, int x, int y, int k) {
    p.check_ids(x);
    p.check_ids(y);
    if (!p.less(x, y))
        throw std::invalid_argument("ks_vanishing requires x strictly below y");
    return p.between_count(x, y) < k &&
           k < p.size() - p.down_count(x) - p.up_count(y);
}

bool pentagon_property(const Poset& p, const ChainPartition& cp, int x, int k) {
    int pos = cp.position(x);
    if (pos == 0) throw std::invalid_argument("element not covered by the chain partition");
    const std::vector<int>& alpha = pos > 0 ? cp.c1 : cp.c2;
    const std::vector<int>& beta = pos > 0 ? cp.c2 : cp.c1;
    int r = std::abs(pos), n = p.size();
    int am = chain_elem(alpha, r - 1, n), ap = chain_elem(alpha, r + 1, n);
    int bl = chain_elem(beta, k - r, n), bh = chain_elem(beta, k - r + 1, n);
    return less_ext(p, am, bl) && less_ext(p, bl, bh) && less_ext(p, bh, ap) &&
           incomp_ext(p, x, bl) && incomp_ext(p, x, bh);
}

bool svh_condition(const Poset& p, int x, int k) {
    p.check_ids(x);
    int n = p.size();
    for (int z = 1; z <= n; ++z) {
        if (p.less(x, z) && p.down_count(z) <= k) return false;
        if (p.less(z, x) && p.up_count(z) <= n - k + 1) return false;
    }
    return true;
}

bool midway_property(const Poset& p, int x, int y, int k) {
    p.check_ids(x);
    p.check_ids(y);
    int n = p.size();
    if (p.down_count(y) <= k) return false;
    for (int z = 1; z <= n; ++z) {
        if (p.less(x, z) && !p.less(y, z) && p.down_count(z) + p.up_count(y) <= n - k)
            return false;
        if (p.less(z, x) && p.between_count(z, y) <= k) return false;
    }
    return true;
}

bool dual_midway_property(const Poset& p, int x, int y, int k) {
    p.check_ids(x);
    p.check_ids(y);
    int n = p.size();
    if (p.up_count(x) <= k) return false;
    for (int z = 1; z <= n; ++z) {
        if (p.less(z, y) && !p.less(z, x) && p.up_count(z) + p.down_count(x) <= n - k)
            return false;
        if (p.less(y, z) && p.between_count(x, z) <= k) return false;
    }
    return true;
}

bool midway_interval_form(const Poset& p, const ChainPartition& cp, int x, int y, int k) {
    int sc = same_chain(cp, x, y);
    if (sc == 0) throw std::invalid_argument("midway_interval_form requires a same-chain pair");
    const ChainPartition norm = sc == 1 ? cp : cp.swapped();
    int s = norm.position(x), sr = norm.position(y);
    if (sr <= s) throw std::invalid_argument("midway_interval_form requires x below y in the chain");
    int r = sr - s, n = p.size();
    const std::vector<int>& alpha = norm.c1;
    const std::vector<int>& beta = norm.c2;

    int am = chain_elem(alpha, s - 1, n), ap = chain_elem(alpha, s + 1, n);
    for (int c = 2; c <= n; ++c) {
        for (int d = c + 1; d <= n; ++d) {
            int off = k - r - s;
            bool ok = less_ext(p, am, chain_elem(beta, c - s, n)) &&
                      less_ext(p, chain_elem(beta, d - s, n), ap) &&
                      less_ext(p, chain_elem(beta, c + off, n), y) &&
                      less_ext(p, y, chain_elem(beta, d + off, n));
            for (int j = c - s; ok && j <= d - s; ++j)
                ok = incomp_ext(p, x, chain_elem(beta, j, n));
            for (int j = c + off + 1; ok && j <= d + off - 1; ++j)
                ok = incomp_ext(p, y, chain_elem(beta, j, n));
            if (ok) return true;
        }
    }
    return false;
}

std::vector<LinearExtension> fiber_extensions(const Poset& p, int x, int y, int k) {
    p.check_ids(x);
    p.check_ids(y);
    std::vector<LinearExtension> out;
    p.for_each_extension([&](const LinearExtension& L) {
        if (L.rank(y) - L.rank(x) == k) out.push_back(L);
        return true;
    });
    return out;
}

std::optional<BWitness> condition_b_witness(const Poset& p, int x, int y, int k) {
    auto fiber = fiber_extensions(p, x, y, k);
    if (fiber.empty()) return std::nullopt;
    int n = p.size();
    for (int z : {x, y}) {
        BWitness w{z, {}};
        bool ok = true;
        for (const auto& L : fiber) {
            int rz = L.rank(z);
            if (rz <= 1 || rz >= n) { ok = false; break; }
            int u = L.element_at(rz - 1), v = L.element_at(rz + 1);
            if (!p.incomparable(u, z) || !p.incomparable(v, z)) { ok = false; break; }
            w.neighbors.push_back({u, v});
        }
        if (ok) return w;
    }
    return std::nullopt;
}

namespace {

template <class V>
bool shift_pair_matches(const V& mid, const V& lo, const V& hi, int eps) {
    bool ok1 = true, ok2 = true;
    V a = lo.shifted(eps, &ok1);
    V b = hi.shifted(-eps, &ok2);
    return ok1 && ok2 && a == mid && b == mid;
}

}  // namespace

EqualityReport stanley_equality_conditions(const Poset& p, const ChainPartition& cp, int x,
                                           int k) {
    EqualityReport rep;
    rep.k = k;
    int n = p.size();
    auto N = n_dist(p, x);
    auto Nq = n_q_dist(p, cp, x);
    rep.applicable = k >= 1 && k <= n - 1 && N.at(k) > 0;

    mpz_class nk = N.at(k), nm = N.at(k - 1), np = N.at(k + 1);
    rep.conds['a'] = nk * nk == nm * np;
    rep.conds['b'] = nk == nm && nk == np;
    QPoly qk = Nq.at(k), qm = Nq.at(k - 1), qp = Nq.at(k + 1);
    rep.conds['c'] = qk * qk == qm * qp;
    int eps = cp.position(x) > 0 ? 1 : -1;
    rep.conds['d'] = shift_pair_matches(qk, qm, qp, eps);
    if (rep.conds['d']) rep.epsilon = eps;
    rep.conds['e'] = pentagon_property(p, cp, x, k);

    bool first = rep.conds['a'];
    for (auto& [c, v] : rep.conds) rep.consistent = rep.consistent && v == first;
    return rep;
}

EqualityReport ks_equality_conditions(const Poset& p, const ChainPartition& cp, int x, int y,
                                      int k) {
    if (same_chain(cp, x, y) == 0)
        throw std::invalid_argument("equality conditions require a same-chain pair");
    EqualityReport rep;
    rep.k = k;
    int n = p.size();
    auto F = f_dist(p, x, y);
    auto Fq = f_q_dist(p, cp, x, y);
    rep.applicable = k >= 2 && k <= n - 2 && F.at(k) > 0;

    mpz_class fk = F.at(k), fm = F.at(k - 1), fp = F.at(k + 1);
    rep.conds['a'] = fk * fk == fm * fp;
    rep.conds['b'] = fk == fm && fk == fp;
    QPoly qk = Fq.at(k), qm = Fq.at(k - 1), qp = Fq.at(k + 1);
    rep.conds['c'] = qk * qk == qm * qp;
    rep.conds['d'] = false;
    for (int eps : {1, -1}) {
        if (shift_pair_matches(qk, qm, qp, eps)) {
            rep.conds['d'] = true;
            rep.epsilon = eps;
            break;
        }
    }
    rep.conds['e'] = condition_b_witness(p, x, y, k).has_value();

    bool first = rep.conds['a'];
    for (auto& [c, v] : rep.conds) rep.consistent = rep.consistent && v == first;
    return rep;
}

LevelProfile level_profile(const Poset& p, const ChainPartition& cp, int x, int y, int k) {
    int sc = same_chain(cp, x, y);
    if (sc == 0) throw std::invalid_argument("level_profile requires a same-chain pair");
    const ChainPartition norm = sc == 1 ? cp : cp.swapped();
    int s = norm.position(x), sr = norm.position(y);
    if (sr <= s) throw std::invalid_argument("level_profile requires x below y in the chain");
    int r = sr - s, a = norm.a();

    Region reg = region_of(p, norm);
    auto lo = reg.lower().east_heights(), hi = reg.upper().east_heights();
    auto clamp = [](int v, int lo_, int hi_) { return std::max(lo_, std::min(hi_, v)); };

    LevelProfile lp;
    lp.u0 = s + lo[s - 1];
    lp.u3 = s + hi[s - 1];
    lp.u1 = s == 1 ? lp.u3 : clamp(s + hi[s - 2], lp.u0, lp.u3);
    lp.u2 = clamp(s + lo[s], lp.u0, lp.u3);
    lp.w0 = (s + r) + lo[s + r - 1] - k;
    lp.w3 = (s + r) + hi[s + r - 1] - k;
    lp.w1 = clamp((s + r - 1) + hi[s + r - 2] + 1 - k, lp.w0, lp.w3);
    lp.w2 = (s + r == a) ? lp.w0 : clamp((s + r + 1) + lo[s + r] - 1 - k, lp.w0, lp.w3);

    LevelAnchors an{s, r};
    GridPoint origin{0, 0}, Q{reg.a(), reg.b()};
    std::vector<int> support;
    for (int v = 1; v <= p.size(); ++v) {
        if (count_paths(reg, origin, an.Y(v)) == 0) continue;
        if (count_paths(reg, an.Y(v) + kEast, an.V(v + k)) == 0) continue;
        if (count_paths(reg, an.V(v + k) + kEast, Q) == 0) continue;
        support.push_back(v);
    }
    lp.nonempty = !support.empty();
    if (lp.nonempty) {
        lp.vmin = support.front();
        lp.vmax = support.back();
        internal_check(lp.vmin == std::max(lp.u0, lp.w0),
                       "level_profile: support start disagrees with max{u0,w0}");
        internal_check(lp.vmax == std::min(lp.u3, lp.w3),
                       "level_profile: support end disagrees with min{u3,w3}");
        internal_check((int)support.size() == lp.vmax - lp.vmin + 1,
                       "level_profile: support has internal gaps");
    }
    return lp;
}

namespace {

// Element at rank `from` moves to rank `to`; the ranks in between shift by
// one toward the vacated slot.
LinearExtension rotate_block(const LinearExtension& L, int from, int to) {
    LinearExtension out = L;
    int n = L.size();
    for (int u = 1; u <= n; ++u) {
        int r = L.rank(u);
        if (r == from) out.rank_mut(u) = to;
        else if (from > to && r >= to && r < from) out.rank_mut(u) = r + 1;
        else if (from < to && r > from && r <= to) out.rank_mut(u) = r - 1;
    }
    return out;
}

LinearExtension swap_ranks(const LinearExtension& L, int u, int v) {
    LinearExtension out = L;
    out.rank_mut(u) = L.rank(v);
    out.rank_mut(v) = L.rank(u);
    return out;
}

}  // namespace

std::optional<LinearExtension> phi_step(const Poset& p, int x, int y,
                                        const LinearExtension& L) {
    int n = p.size(), ry = L.rank(y);
    int rw = n + 1, w = 0;
    for (int u = 1; u <= n; ++u)
        if (p.incomparable(u, y) && L.rank(u) > ry && L.rank(u) < rw) {
            rw = L.rank(u);
            w = u;
        }
    if (w == 0) return std::nullopt;
    if (x != y && L.rank(x) >= ry && L.rank(x) < rw) return std::nullopt;  // would move x
    LinearExtension out = rotate_block(L, rw, ry);
    if (!out.respects(p)) return std::nullopt;
    return out;
}

std::optional<LinearExtension> psi_step(const Poset& p, int x, int y,
                                        const LinearExtension& L) {
    int n = p.size(), rx = L.rank(x), ry = L.rank(y);
    // Preferred pivot: the lowest element incomparable to x strictly between
    // x and y; it rotates down to x's slot and pushes x up by one.
    int rw = n + 1, w = 0;
    for (int u = 1; u <= n; ++u)
        if (p.incomparable(u, x) && L.rank(u) > rx && L.rank(u) < ry && L.rank(u) < rw) {
            rw = L.rank(u);
            w = u;
        }
    if (w != 0) {
        LinearExtension out = rotate_block(L, rw, rx);
        if (!out.respects(p)) return std::nullopt;
        return out;
    }
    // Otherwise the highest element incomparable to y strictly between them
    // rotates up to y's slot and pulls y down by one.
    rw = 0;
    for (int u = 1; u <= n; ++u)
        if (p.incomparable(u, y) && L.rank(u) > rx && L.rank(u) < ry && L.rank(u) > rw) {
            rw = L.rank(u);
            w = u;
        }
    if (rw == 0) return std::nullopt;
    LinearExtension out = rotate_block(L, rw, ry);
    if (!out.respects(p)) return std::nullopt;
    return out;
}

std::optional<LinearExtension> omega_step(const Poset& p, int x, int y, int k,
                                          const LinearExtension& L) {
    int n = p.size(), rx = L.rank(x), ry = L.rank(y);
    if (ry - rx != k) return std::nullopt;
    if (ry >= n - p.up_count(y)) return std::nullopt;
    if (rx + 1 >= ry) return std::nullopt;
    int v = L.element_at(rx + 1);
    if (!p.incomparable(v, x)) return std::nullopt;
    int rw = n + 1, w = 0;
    for (int u = 1; u <= n; ++u)
        if (p.incomparable(u, y) && L.rank(u) > ry && L.rank(u) < rw) {
            rw = L.rank(u);
            w = u;
        }
    if (w == 0) return std::nullopt;
    LinearExtension out = rotate_block(swap_ranks(L, x, v), rw, ry);
    if (!out.respects(p)) return std::nullopt;
    return out;
}

std::optional<LinearExtension> theta_step(const Poset& p, int x, int y, int w,
                                          const LinearExtension& L) {
    int n = p.size(), rx = L.rank(x), rw = L.rank(w), ry = L.rank(y);
    if (rw <= p.down_count(w) + 1) return std::nullopt;  // already at its floor
    if (rw >= ry) return std::nullopt;
    int rp = 0, pv = 0;
    for (int u = 1; u <= n; ++u)
        if (p.incomparable(u, w) && L.rank(u) < rw && L.rank(u) > rp) {
            rp = L.rank(u);
            pv = u;
        }
    if (pv == 0) return std::nullopt;
    LinearExtension out = rotate_block(L, rp, rw);
    if (rp < rx && rx < rw) {
        // x slid down with the block; swap it back with its old upper
        // neighbor, which condition (b) keeps incomparable to x.
        int v = L.element_at(rx + 1);
        if (!p.incomparable(v, x)) return std::nullopt;
        out = swap_ranks(out, x, v);
    }
    if (!out.respects(p)) return std::nullopt;
    return out;
}

LinearExtension extension_with_rank(const Poset& p, int x, int c) {
    p.check_ids(x);
    int n = p.size();
    if (c < 1 || c > n || !stanley_vanishing(p, x, c))
        throw std::invalid_argument("no extension assigns that rank to the element");
    std::vector<char> placed(n + 1, 0);
    std::vector<int> ranks(n + 1, 0);
    auto is_minimal = [&](int u) {
        for (int v = 1; v <= n; ++v)
            if (!placed[v] && p.less(v, u)) return false;
        return true;
    };
    for (int t = 1; t <= n; ++t) {
        int pick = 0;
        if (t == c) {
            pick = x;
            internal_check(is_minimal(x), "extension_with_rank: anchor not placeable");
        } else if (t < c) {
            for (int u = 1; u <= n && pick == 0; ++u)
                if (!placed[u] && u != x && p.less(u, x) && is_minimal(u)) pick = u;
            for (int u = 1; u <= n && pick == 0; ++u)
                if (!placed[u] && u != x && !p.less(x, u) && is_minimal(u)) pick = u;
            internal_check(pick != 0, "extension_with_rank: no filler available");
        } else {
            for (int u = 1; u <= n && pick == 0; ++u)
                if (!placed[u] && is_minimal(u)) pick = u;
            internal_check(pick != 0, "extension_with_rank: no minimal element");
        }
        placed[pick] = 1;
        ranks[pick] = t;
    }
    LinearExtension L(ranks);
    internal_check(L.respects(p) && L.rank(x) == c, "extension_with_rank: invalid result");
    return L;
}

DriveResult drive_to_fiber(const Poset& p, int x, int y, int k) {
    if (!ks_vanishing(p, x, y, k))
        throw std::invalid_argument("the requested fiber is empty");
    int n = p.size();
    int c = std::min(n - p.up_count(x), n - k - p.up_count(y));
    DriveResult res;
    res.L = extension_with_rank(p, x, c);
    int gap = res.L.rank(y) - res.L.rank(x);
    int budget = n * std::abs(gap - k);
    while (gap != k) {
        auto next = gap < k ? phi_step(p, x, y, res.L) : psi_step(p, x, y, res.L);
        internal_check(next.has_value(), "drive_to_fiber: step undefined before reaching fiber");
        int ngap = next->rank(y) - next->rank(x);
        internal_check(std::abs(ngap - k) == std::abs(gap - k) - 1,
                       "drive_to_fiber: step failed to move the gap toward k");
        res.L = std::move(*next);
        gap = ngap;
        ++res.steps;
        internal_check(res.steps <= budget, "drive_to_fiber: step budget exceeded");
    }
    return res;
}

LinearExtension claim_replay(const Poset& p, int x, int y, int k, int w,
                             const LinearExtension& start) {
    int n = p.size();
    internal_check(p.less(x, w) && !p.less(y, w),
                   "claim_replay: pivot must be above x and not above y");
    internal_check(start.rank(y) - start.rank(x) == k, "claim_replay: start not in the fiber");
    LinearExtension L = start;
    int guard = 0;
    while (L.rank(y) < n - p.up_count(y)) {
        auto next = omega_step(p, x, y, k, L);
        internal_check(next.has_value(), "claim_replay: omega undefined");
        internal_check(next->rank(y) == L.rank(y) + 1 &&
                           next->rank(y) - next->rank(x) == k,
                       "claim_replay: omega broke its invariants");
        L = std::move(*next);
        internal_check(++guard <= n * n, "claim_replay: omega loop exceeded budget");
    }
    guard = 0;
    while (L.rank(w) > p.down_count(w) + 1) {
        auto next = theta_step(p, x, y, w, L);
        internal_check(next.has_value(), "claim_replay: theta undefined");
        internal_check(next->rank(w) == L.rank(w) - 1 && next->rank(x) == L.rank(x) &&
                           next->rank(y) == L.rank(y),
                       "claim_replay: theta broke its invariants");
        L = std::move(*next);
        internal_check(++guard <= n * n, "claim_replay: theta loop exceeded budget");
    }
    internal_check(L.rank(y) == n - p.up_count(y) && L.rank(w) == p.down_count(w) + 1 &&
                       L.rank(y) - L.rank(x) == k,
                   "claim_replay: normal form not reached");
    return L;
}

}  // namespace lepath
