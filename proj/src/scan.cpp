#include "lepath/scan.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <memory>
#include <functional>
#include <set>
#include <sstream>
#include <thread>

#include "lepath/dense_poly.hpp"
#include "lepath/equality.hpp"
#include "lepath/path_calc.hpp"
#include "lepath/stats.hpp"

namespace lepath {

void ScanReport::add_violation(std::string msg) {
    ++violation_count;
    if (violations.size() < 200) violations.push_back(std::move(msg));
}

void ScanReport::merge(const ScanReport& o) {
    for (const auto& [k, v] : o.counters) counters[k] += v;
    violation_count += o.violation_count;
    for (const auto& v : o.violations)
        if (violations.size() < 200) violations.push_back(v);
    specimens.insert(specimens.end(), o.specimens.begin(), o.specimens.end());
}

namespace {

int worker_count() {
    const char* env = std::getenv("LEPATH_WORKERS");
    if (!env) return 1;
    int w = std::atoi(env);
    return w < 1 ? 1 : w;
}

// Deterministic fan-out: fixed chunks, per-chunk reports merged in order.
template <class Item, class Fn>
void run_over(const std::vector<Item>& items, ScanReport& rep, Fn&& fn) {
    int workers = worker_count();
    if (workers <= 1 || items.size() < 2) {
        for (const Item& it : items) fn(it, rep);
        return;
    }
    size_t chunks = std::min<size_t>(items.size(), (size_t)workers * 8);
    std::vector<ScanReport> parts(chunks);
    std::vector<std::thread> pool;
    std::atomic<size_t> next{0};
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&]() {
            for (size_t c = next.fetch_add(1); c < chunks; c = next.fetch_add(1)) {
                size_t lo = items.size() * c / chunks, hi = items.size() * (c + 1) / chunks;
                for (size_t i = lo; i < hi; ++i) fn(items[i], parts[c]);
            }
        });
    }
    for (auto& t : pool) t.join();
    for (const auto& part : parts) rep.merge(part);
}

std::string region_str(const Region& r) {
    return r.lower().steps() + "/" + r.upper().steps();
}

std::string poset_str(const Poset& p) {
    std::ostringstream os;
    os << "n=" << p.size() << " cov{";
    bool first = true;
    for (auto [u, v] : p.cover_pairs()) {
        if (!first) os << ",";
        first = false;
        os << u << "<" << v;
    }
    os << "}";
    return os.str();
}

long path_weight(const NEPath& path) {
    long w = 0;
    GridPoint p = path.start();
    for (char c : path.steps()) {
        if (c == 'E') w += east_step_exponent(p);
        p = p + (c == 'E' ? kEast : kNorth);
    }
    return w;
}

// ---------------------------------------------------------------------------
// Per-region path enumeration feeding the statistic tables.

struct PathData {
    std::vector<int> et, nt;  // 1-based times of the i-th East / j-th North step
    std::vector<int> seq;     // seq[t] = element at time t (alpha_i = i, beta_j = a+j)
    long wgt = 0;
};

template <class Fn>
struct PathWalker {
    const Region& r;
    int a, b, n;
    PathData d;
    Fn& fn;

    PathWalker(const Region& reg, Fn& f) : r(reg), a(reg.a()), b(reg.b()), n(a + b), fn(f) {
        d.et.assign(a + 1, 0);
        d.nt.assign(b + 1, 0);
        d.seq.assign(n + 1, 0);
    }

    void go(int x, int y, long w) {
        int t = x + y;
        if (t == n) {
            d.wgt = w;
            fn(d);
            return;
        }
        if (x < a && r.contains({x + 1, y})) {
            d.et[x + 1] = t + 1;
            d.seq[t + 1] = x + 1;
            go(x + 1, y, w + t + 1);
        }
        if (y < b && r.contains({x, y + 1})) {
            d.nt[y + 1] = t + 1;
            d.seq[t + 1] = a + y + 1;
            go(x, y + 1, w);
        }
    }
};

template <class Fn>
void for_each_region_path(const Region& r, Fn fn) {
    PathWalker<Fn> walker(r, fn);
    walker.go(0, 0, 0);
}

// ---------------------------------------------------------------------------
// Memoized q-weighted path counts within one region.

struct KCalc {
    const Region& r;
    int a, b;
    std::map<std::pair<int, int>, std::vector<DensePoly>> tables;
    DensePoly zero;

    explicit KCalc(const Region& reg) : r(reg), a(reg.a()), b(reg.b()) {}

    int idx(int x, int y) const { return x * (b + 1) + y; }

    const DensePoly& K(const GridPoint& A, const GridPoint& B) {
        if (B.x < A.x || B.y < A.y || !r.contains(A) || !r.contains(B)) return zero;
        auto key = std::make_pair(A.x, A.y);
        auto it = tables.find(key);
        if (it == tables.end()) {
            std::vector<DensePoly> tab((a + 1) * (b + 1));
            tab[idx(A.x, A.y)] = DensePoly::constant(1);
            for (int x = A.x; x <= a; ++x) {
                for (int y = A.y; y <= b; ++y) {
                    if ((x == A.x && y == A.y) || !r.contains({x, y})) continue;
                    DensePoly v;
                    if (x > A.x && !tab[idx(x - 1, y)].is_zero())
                        v += tab[idx(x - 1, y)].shifted(x + y);  // East step leaving (x-1,y)
                    if (y > A.y) v += tab[idx(x, y - 1)];
                    tab[idx(x, y)] = std::move(v);
                }
            }
            it = tables.emplace(key, std::move(tab)).first;
        }
        return it->second[idx(B.x, B.y)];
    }
};

DensePoly reversed(const DensePoly& p, long pivot) {
    DensePoly out;
    if (p.is_zero()) return out;
    for (long e = p.min_exp(); e <= p.max_exp(); ++e)
        if (p.coeff(e) != 0) out.add_term(pivot - e, p.coeff(e));
    return out;
}

// The regrouped S(u;w) evaluated with memoized counts; mirrors the module
// formula so the sweeps compare an enumeration-sourced direct route against
// this one.  When rep is given, the five constituent differences are also
// required to be coefficientwise nonnegative.
DensePoly dense_s_regrouped(KCalc& kc, const LevelAnchors& an, int k, int u, int w,
                            ScanReport* rep, const std::string& ctx) {
    GridPoint origin{0, 0}, Q{kc.a, kc.b};
    if (u == w - 1) {
        GridPoint Yp = an.Y(u) + kEast, Y = an.Y(u + 1) + kEast;
        GridPoint Vp = an.V(u + k), V = an.V(u + k + 1);
        DensePoly bracket = kc.K(Y, V) * kc.K(Yp, Vp) - kc.K(Yp, V) * kc.K(Y, Vp);
        if (rep && !bracket.is_nonneg())
            rep->add_violation("lgv bracket negative " + ctx);
        DensePoly s = kc.K(origin, an.Y(u)) * kc.K(origin, an.Y(u + 1)) *
                      kc.K(V + kEast, Q) * kc.K(Vp + kEast, Q) * bracket;
        s += s;
        return s.shifted(4L * u + 2L * k + 2);
    }
    GridPoint A1 = an.Y(u + 1), A = A1 + kEast;
    GridPoint A1p = an.Y(u), Ap = A1p + kEast;
    GridPoint B1 = an.Y(w - 1), B = B1 + kEast;
    GridPoint B1p = an.Y(w), Bp = B1p + kEast;
    GridPoint C = an.V(u + k + 1), C1 = C + kEast;
    GridPoint Cp = an.V(u + k), C1p = C1 - kNorth;
    GridPoint D = an.V(w + k - 1), D1 = D + kEast;
    GridPoint Dp = an.V(w + k), D1p = D1 + kNorth;

    const DensePoly &a1 = kc.K(origin, A1), &a1p = kc.K(origin, A1p);
    const DensePoly &b1 = kc.K(origin, B1), &b1p = kc.K(origin, B1p);
    const DensePoly &c1 = kc.K(C1, Q), &c1p = kc.K(C1p, Q);
    const DensePoly &d1 = kc.K(D1, Q), &d1p = kc.K(D1p, Q);
    DensePoly ac = kc.K(A, C), acp = kc.K(A, Cp), apc = kc.K(Ap, C), apcp = kc.K(Ap, Cp);
    DensePoly bd = kc.K(B, D), bdp = kc.K(B, Dp), bpd = kc.K(Bp, D), bpdp = kc.K(Bp, Dp);

    DensePoly head_diff = a1p * b1p - a1 * b1;
    DensePoly through_diff = apcp * bpdp * c1p * d1p - apc * bpd * c1 * d1;
    DensePoly mid_diff = apcp * bpdp - acp * bdp;
    DensePoly tail_diff = c1p * d1p - c1 * d1;
    DensePoly delta2 = ac * bd + apcp * bpdp - acp * bdp - apc * bpd;
    if (rep) {
        if (!head_diff.is_nonneg()) rep->add_violation("head difference negative " + ctx);
        if (!through_diff.is_nonneg()) rep->add_violation("through difference negative " + ctx);
        if (!mid_diff.is_nonneg()) rep->add_violation("mid difference negative " + ctx);
        if (!tail_diff.is_nonneg()) rep->add_violation("tail difference negative " + ctx);
        if (!delta2.is_nonneg()) rep->add_violation("criss-cross difference negative " + ctx);
    }
    DensePoly s = head_diff * through_diff + a1 * b1 * (mid_diff * tail_diff + delta2 * c1 * d1);
    return s.shifted(2L * (u + w + k));
}

// ---------------------------------------------------------------------------
// Region sweep.

struct SameChainPair {
    int x, y;    // element ids in the region poset
    int s, r;    // chain positions: x at s, y at s + r
    int chain;   // 1 or 2
};

void process_region(const Region& reg, const RegionSweepOptions& o, ScanReport& rep) {
    int a = reg.a(), b = reg.b(), n = a + b;
    if (o.multivariate && !o.qks && !o.thm16 && !o.thm17 && !o.bijection && !o.sterm &&
        a > o.mq_max_a)
        return;
    auto [poset, cp] = poset_of_region(reg);
    const int koff = n;

    std::vector<SameChainPair> pairs;
    bool need_pairs = o.qks || o.thm17 || o.sterm || o.multivariate;
    if (need_pairs) {
        for (int i = 1; i <= a; ++i)
            for (int j = i + 1; j <= a; ++j) pairs.push_back({i, j, i, j - i, 1});
        for (int i = 1; i <= b; ++i)
            for (int j = i + 1; j <= b; ++j) pairs.push_back({a + i, a + j, i, j - i, 2});
    }
    bool need_nq = o.thm16 || o.multivariate;
    bool need_fq = o.qks || o.thm17 || o.sterm || o.multivariate;

    std::vector<std::vector<DensePoly>> Nq;
    if (need_nq) Nq.assign(n + 1, std::vector<DensePoly>(n + 2));
    std::vector<std::vector<DensePoly>> Fq;
    if (need_fq) Fq.assign(pairs.size(), std::vector<DensePoly>(2 * n + 1));
    std::vector<std::vector<std::vector<DensePoly>>> Flev;
    if (o.sterm)
        Flev.assign(pairs.size(), std::vector<std::vector<DensePoly>>(
                                      n + 2, std::vector<DensePoly>(2 * n + 1)));
    std::vector<std::array<std::vector<char>, 2>> bok;
    if (o.thm17) {
        bok.resize(pairs.size());
        for (auto& arr : bok) {
            arr[0].assign(2 * n + 1, 1);
            arr[1].assign(2 * n + 1, 1);
        }
    }
    std::vector<std::map<int, MultiPoly>> Nmq;
    std::vector<std::map<int, MultiPoly>> Fmq;
    bool do_mq = o.multivariate && a <= o.mq_max_a;
    if (do_mq) {
        Nmq.resize(a + 1);
        Fmq.resize(pairs.size());
    }

    long long path_count = 0;
    std::vector<int> mq_exp(a);
    auto elem_time = [&](const PathData& d, int id) {
        return id <= a ? d.et[id] : d.nt[id - a];
    };

    for_each_region_path(reg, [&](const PathData& d) {
        ++path_count;
        if (need_nq)
            for (int x = 1; x <= n; ++x) Nq[x][elem_time(d, x)].add_term(d.wgt, 1);
        if (do_mq) {
            int prev = 0;
            for (int i = 0; i < a; ++i) {
                mq_exp[i] = d.et[i + 1] - prev;
                prev = d.et[i + 1];
            }
            for (int x = 1; x <= a; ++x) {
                auto it = Nmq[x].try_emplace(d.et[x], MultiPoly(a)).first;
                it->second.add_term(mq_exp, 1);
            }
        }
        for (size_t pi = 0; pi < pairs.size(); ++pi) {
            const auto& pr = pairs[pi];
            int tx = elem_time(d, pr.x), ty = elem_time(d, pr.y);
            int k = ty - tx;
            if (need_fq) Fq[pi][k + koff].add_term(d.wgt, 1);
            if (o.sterm) Flev[pi][tx][k + koff].add_term(d.wgt, 1);
            if (o.thm17) {
                auto neighbors_ok = [&](int z, int rz) {
                    return rz > 1 && rz < n && poset.incomparable(d.seq[rz - 1], z) &&
                           poset.incomparable(d.seq[rz + 1], z);
                };
                if (!neighbors_ok(pr.x, tx)) bok[pi][0][k + koff] = 0;
                if (!neighbors_ok(pr.y, ty)) bok[pi][1][k + koff] = 0;
            }
            if (do_mq && pr.chain == 1) {
                auto it = Fmq[pi].try_emplace(k, MultiPoly(a)).first;
                it->second.add_term(mq_exp, 1);
            }
        }
    });

    std::ostringstream tagos;
    tagos << "region " << region_str(reg);
    std::string tag = tagos.str();

    if (o.qks) {
        for (size_t pi = 0; pi < pairs.size(); ++pi) {
            const auto& pr = pairs[pi];
            for (int k = 2; k <= n - 1; ++k) {
                DensePoly diff =
                    Fq[pi][k + koff] * Fq[pi][k + koff] -
                    Fq[pi][k - 1 + koff] * Fq[pi][k + 1 + koff];
                rep.count("qks_checks");
                if (!diff.is_nonneg()) {
                    std::ostringstream os;
                    os << "q-KS fails at " << tag << " x=" << pr.x << " y=" << pr.y
                       << " k=" << k;
                    rep.add_violation(os.str());
                }
            }
        }
    }

    if (o.thm16) {
        for (int x = 1; x <= n; ++x) {
            int eps = x <= a ? 1 : -1;
            for (int k = 1; k <= n - 1; ++k) {
                long long nk = Nq[x][k].eval_one();
                if (nk == 0) continue;
                long long nm = k >= 1 ? Nq[x][k - 1].eval_one() : 0;
                long long np = Nq[x][k + 1].eval_one();
                bool ca = nk * nk == nm * np;
                bool cb = nk == nm && nk == np;
                bool cc = Nq[x][k] * Nq[x][k] == Nq[x][k - 1] * Nq[x][k + 1];
                bool cd = Nq[x][k] == Nq[x][k - 1].shifted(eps) &&
                          Nq[x][k] == Nq[x][k + 1].shifted(-eps);
                bool ce = pentagon_property(poset, cp, x, k);
                rep.count("stanley_equality_instances");
                if (ca != cb || ca != cc || ca != cd || ca != ce) {
                    std::ostringstream os;
                    os << "Stanley equality conditions diverge at " << tag << " x=" << x
                       << " k=" << k << " a,b,c,d,e=" << ca << cb << cc << cd << ce;
                    rep.add_violation(os.str());
                }
            }
        }
    }

    if (o.thm17) {
        for (size_t pi = 0; pi < pairs.size(); ++pi) {
            const auto& pr = pairs[pi];
            for (int k = 2; k <= n - 2; ++k) {
                long long fk = Fq[pi][k + koff].eval_one();
                if (fk == 0) continue;
                long long fm = Fq[pi][k - 1 + koff].eval_one();
                long long fp = Fq[pi][k + 1 + koff].eval_one();
                bool ca = fk * fk == fm * fp;
                bool cb = fk == fm && fk == fp;
                bool cc = Fq[pi][k + koff] * Fq[pi][k + koff] ==
                          Fq[pi][k - 1 + koff] * Fq[pi][k + 1 + koff];
                bool cd = false;
                for (int eps : {1, -1})
                    if (Fq[pi][k + koff] == Fq[pi][k - 1 + koff].shifted(eps) &&
                        Fq[pi][k + koff] == Fq[pi][k + 1 + koff].shifted(-eps))
                        cd = true;
                bool ce = bok[pi][0][k + koff] || bok[pi][1][k + koff];
                rep.count("ks_equality_instances");
                if (ca != cb || ca != cc || ca != cd || ca != ce) {
                    std::ostringstream os;
                    os << "KS equality conditions diverge at " << tag << " x=" << pr.x
                       << " y=" << pr.y << " k=" << k << " a,b,c,d,e=" << ca << cb << cc << cd
                       << ce;
                    rep.add_violation(os.str());
                }
            }
        }
    }

    if (o.bijection) {
        mpz_class dp_count = count_paths(reg, {0, 0}, {a, b});
        if (dp_count != (long)path_count)
            rep.add_violation("path DP count disagrees with walk at " + tag);
        long long ext_count = 0;
        bool round_ok = true, weight_ok = true;
        poset.for_each_extension([&](const LinearExtension& L) {
            ++ext_count;
            NEPath pa = path_of_extension(poset, cp, L);
            if (!(extension_of_path(poset, cp, pa) == L)) round_ok = false;
            if (path_weight(pa) != wgt(cp, L)) weight_ok = false;
            return true;
        });
        rep.count("bijection_regions");
        if (!round_ok) rep.add_violation("round trip failed at " + tag);
        if (!weight_ok) rep.add_violation("path weight != extension weight at " + tag);
        if (ext_count != path_count)
            rep.add_violation("extension count != path count at " + tag);
    }

    if (o.sterm) {
        KCalc kc_main(reg);
        Region reg_t;
        std::unique_ptr<KCalc> kc_t;
        const long pivot2 = (long)n * (n + 1);  // reversal pivot for two-factor products

        for (size_t pi = 0; pi < pairs.size(); ++pi) {
            const auto& pr = pairs[pi];
            LevelAnchors an{pr.s, pr.r};
            KCalc* kc = &kc_main;
            bool transposed = pr.chain == 2;
            if (transposed && !kc_t) {
                reg_t = reg.transposed();
                kc_t = std::make_unique<KCalc>(reg_t);
            }
            if (transposed) kc = kc_t.get();

            auto flev = [&](int w, int k) -> const DensePoly& {
                static DensePoly zero;
                if (w < 1 || w > n || k + koff < 0 || k + koff > 2 * n) return zero;
                return Flev[pi][w][k + koff];
            };
            auto s_direct = [&](int u, int w, int k) {
                return flev(u, k) * flev(w, k) + flev(w - 1, k) * flev(u + 1, k) -
                       flev(u, k + 1) * flev(w, k - 1) - flev(u + 1, k - 1) * flev(w - 1, k + 1);
            };

            for (int k = 2; k <= n - 1; ++k) {
                int lo = n + 2, hi = -1;
                for (int j = k - 1; j <= k + 1; ++j)
                    for (int w = 1; w <= n; ++w)
                        if (!flev(w, j).is_zero()) {
                            lo = std::min(lo, w);
                            hi = std::max(hi, w);
                        }
                if (hi < 0) continue;  // nothing near this gap
                lo = std::max(0, lo - 2);
                hi = std::min(n + 1, hi + 2);

                DensePoly delta = Fq[pi][k + koff] * Fq[pi][k + koff] -
                                  Fq[pi][k - 1 + koff] * Fq[pi][k + 1 + koff];
                DensePoly sum;
                for (int w = lo; w <= hi; ++w) {
                    sum += s_direct(w - 1, w, k).half();
                    for (int u = w; u <= hi; ++u) sum += s_direct(u, w, k);
                }
                rep.count("sterm_grouping_checks");
                if (sum != delta) {
                    std::ostringstream os;
                    os << "S-grouping identity fails at " << tag << " x=" << pr.x
                       << " y=" << pr.y << " k=" << k;
                    rep.add_violation(os.str());
                }

                for (int w = lo; w <= hi; ++w) {
                    for (int u = w - 1; u <= hi; ++u) {
                        DensePoly direct = s_direct(u, w, k);
                        std::ostringstream ctxos;
                        ctxos << "at " << tag << " x=" << pr.x << " y=" << pr.y << " k=" << k
                              << " u=" << u << " w=" << w;
                        std::string ctx = ctxos.str();
                        DensePoly regrouped =
                            dense_s_regrouped(*kc, an, k, u, w,
                                              transposed ? static_cast<ScanReport*>(nullptr) : &rep, ctx);
                        if (transposed) regrouped = reversed(regrouped, pivot2);
                        rep.count("sterm_term_checks");
                        if (direct != regrouped)
                            rep.add_violation("S direct != regrouped " + ctx);
                        if (!direct.is_nonneg())
                            rep.add_violation("S negative " + ctx);
                    }
                }
            }
        }
    }

    if (do_mq) {
        auto mq_zero = MultiPoly(a);
        auto at = [&](std::map<int, MultiPoly>& m, int k) -> const MultiPoly& {
            auto it = m.find(k);
            return it == m.end() ? mq_zero : it->second;
        };
        for (int x = 1; x <= a; ++x) {
            for (int k = 2; k <= n - 1; ++k) {
                MultiPoly diff = at(Nmq[x], k) * at(Nmq[x], k) -
                                 at(Nmq[x], k - 1) * at(Nmq[x], k + 1);
                rep.count("mq_stanley_checks");
                if (!diff.is_nonneg())
                    rep.add_violation("multivariate Stanley fails at " + tag);
            }
            for (int k = 1; k <= n; ++k) {
                rep.count("mq_specialization_checks");
                if (at(Nmq[x], k).to_qpoly() != Nq[x][k].to_qpoly()) {
                    std::ostringstream os;
                    os << "multivariate specialization mismatch at " << tag << " x=" << x
                       << " k=" << k;
                    rep.add_violation(os.str());
                }
            }
        }
        for (size_t pi = 0; pi < pairs.size(); ++pi) {
            if (pairs[pi].chain != 1) continue;
            for (int k = 2; k <= n - 1; ++k) {
                MultiPoly diff = at(Fmq[pi], k) * at(Fmq[pi], k) -
                                 at(Fmq[pi], k - 1) * at(Fmq[pi], k + 1);
                rep.count("mq_ks_checks");
                if (!diff.is_nonneg())
                    rep.add_violation("multivariate KS fails at " + tag);
                rep.count("mq_specialization_checks");
                if (at(Fmq[pi], k).to_qpoly() != Fq[pi][k + koff].to_qpoly())
                    rep.add_violation("multivariate F specialization mismatch at " + tag);
            }
        }
    }
}

std::vector<Region> materialize_regions(int max_ab) {
    std::vector<Region> out;
    for (int ab = 0; ab <= max_ab; ++ab)
        for (int a = 0; a <= ab; ++a)
            enumerate_regions(a, ab - a, [&](const Region& r) {
                out.push_back(r);
                return true;
            });
    return out;
}

}  // namespace

ScanReport sweep_regions(const RegionSweepOptions& opts) {
    ScanReport rep;
    rep.suite = "regions";
    auto regions = materialize_regions(opts.max_ab);
    rep.count("regions", (long long)regions.size());
    run_over(regions, rep, [&](const Region& r, ScanReport& out) {
        process_region(r, opts, out);
    });
    return rep;
}

// ---------------------------------------------------------------------------
// Poset sweep.

namespace {

struct PosetTables {
    int n = 0;
    std::vector<std::vector<long long>> N;                 // [x][k]
    std::vector<std::vector<std::vector<long long>>> F;    // [x][y][k+n]
    std::vector<std::vector<std::array<std::vector<char>, 2>>> bok;
    std::vector<std::vector<std::vector<std::vector<int>>>> first_fiber;  // ranks or empty
    long long ext_count = 0;
};

void build_tables(const Poset& p, bool fiber_data, PosetTables& t) {
    int n = p.size();
    t.n = n;
    t.ext_count = 0;
    t.N.assign(n + 1, std::vector<long long>(n + 2, 0));
    t.F.assign(n + 1, std::vector<std::vector<long long>>(
                          n + 1, std::vector<long long>(2 * n + 1, 0)));
    if (fiber_data) {
        t.bok.assign(n + 1, std::vector<std::array<std::vector<char>, 2>>(n + 1));
        t.first_fiber.assign(
            n + 1, std::vector<std::vector<std::vector<int>>>(
                       n + 1, std::vector<std::vector<int>>(2 * n + 1)));
        for (int x = 1; x <= n; ++x)
            for (int y = 1; y <= n; ++y) {
                t.bok[x][y][0].assign(2 * n + 1, 1);
                t.bok[x][y][1].assign(2 * n + 1, 1);
            }
    }
    std::vector<int> seq(n + 2, 0);
    std::vector<char> nbr_ok(n + 1, 0);
    p.for_each_extension([&](const LinearExtension& L) {
        ++t.ext_count;
        for (int u = 1; u <= n; ++u) seq[L.rank(u)] = u;
        for (int u = 1; u <= n; ++u) t.N[u][L.rank(u)] += 1;
        if (fiber_data)
            for (int u = 1; u <= n; ++u) {
                int r = L.rank(u);
                nbr_ok[u] = r > 1 && r < n && p.incomparable(seq[r - 1], u) &&
                            p.incomparable(seq[r + 1], u);
            }
        for (int x = 1; x <= n; ++x)
            for (int y = 1; y <= n; ++y) {
                if (x == y) continue;
                int k = L.rank(y) - L.rank(x);
                t.F[x][y][k + n] += 1;
                if (fiber_data) {
                    if (!nbr_ok[x]) t.bok[x][y][0][k + n] = 0;
                    if (!nbr_ok[y]) t.bok[x][y][1][k + n] = 0;
                    auto& ff = t.first_fiber[x][y][k + n];
                    if (ff.empty()) {
                        ff.resize(n + 1);
                        for (int u = 1; u <= n; ++u) ff[u] = L.rank(u);
                    }
                }
            }
        return true;
    });
}

void process_poset(const Poset& p, const PosetSweepOptions& o, ScanReport& rep) {
    int n = p.size();
    PosetTables t;
    build_tables(p, o.conjecture, t);
    std::string tag = poset_str(p);

    if (o.vanishing) {
        for (int x = 1; x <= n; ++x)
            for (int k = 1; k <= n; ++k) {
                rep.count("stanley_vanishing_checks");
                if (stanley_vanishing(p, x, k) != (t.N[x][k] > 0)) {
                    std::ostringstream os;
                    os << "Stanley vanishing wrong at " << tag << " x=" << x << " k=" << k;
                    rep.add_violation(os.str());
                }
            }
        for (int x = 1; x <= n; ++x)
            for (int y = 1; y <= n; ++y) {
                if (!p.less(x, y)) continue;
                for (int k = 1; k <= n - 1; ++k) {
                    rep.count("ks_vanishing_checks");
                    if (ks_vanishing(p, x, y, k) != (t.F[x][y][k + n] > 0)) {
                        std::ostringstream os;
                        os << "KS vanishing wrong at " << tag << " x=" << x << " y=" << y
                           << " k=" << k;
                        rep.add_violation(os.str());
                    }
                }
            }
    }

    if (o.plain_lc) {
        for (int x = 1; x <= n; ++x)
            for (int k = 2; k <= n; ++k) {
                rep.count("stanley_checks");
                if (t.N[x][k] * t.N[x][k] < t.N[x][k - 1] * t.N[x][k + 1])
                    rep.add_violation("Stanley inequality fails at " + tag);
            }
        for (int x = 1; x <= n; ++x)
            for (int y = 1; y <= n; ++y) {
                if (x == y) continue;
                for (int k = 2; k <= n - 1; ++k) {
                    rep.count("ks_checks");
                    if (t.F[x][y][k + n] * t.F[x][y][k + n] <
                        t.F[x][y][k - 1 + n] * t.F[x][y][k + 1 + n]) {
                        std::ostringstream os;
                        os << "KS inequality fails at " << tag << " x=" << x << " y=" << y
                           << " k=" << k;
                        rep.add_violation(os.str());
                    }
                }
            }
    }

    if (o.conjecture) {
        for (int x = 1; x <= n; ++x)
            for (int y = 1; y <= n; ++y) {
                if (x == y) continue;
                for (int k = 2; k <= n - 2; ++k) {
                    long long fk = t.F[x][y][k + n];
                    if (fk == 0) continue;
                    long long fm = t.F[x][y][k - 1 + n], fp = t.F[x][y][k + 1 + n];
                    bool flat = fk == fm && fk == fp;
                    bool square = fk * fk == fm * fp;
                    bool cb_x = t.bok[x][y][0][k + n], cb_y = t.bok[x][y][1][k + n];
                    bool cb = cb_x || cb_y;
                    bool cc = midway_property(p, x, y, k) || dual_midway_property(p, x, y, k);
                    rep.count("conjecture_instances");
                    if (cb != cc) {
                        std::ostringstream os;
                        os << "(b)<=>(c) fails at " << tag << " x=" << x << " y=" << y
                           << " k=" << k;
                        rep.add_violation(os.str());
                    }
                    if (cb && !flat) {
                        std::ostringstream os;
                        os << "(b)=>flat fails at " << tag << " x=" << x << " y=" << y
                           << " k=" << k;
                        rep.add_violation(os.str());
                    }
                    if (square && !cc) {
                        std::ostringstream os;
                        os << "specimen " << tag << " x=" << x << " y=" << y << " k=" << k
                           << " F=(" << fm << "," << fk << "," << fp << ") flat=" << flat
                           << " b=" << cb;
                        rep.specimens.push_back(os.str());
                        rep.count(flat ? "specimens_flat_not_midway"
                                       : "specimens_square_not_midway");
                    }
                    if (cb) {
                        LinearExtension L0(t.first_fiber[x][y][k + n]);
                        if (cb_x) {
                            for (int w = 1; w <= n; ++w) {
                                if (!p.less(x, w) || p.less(y, w)) continue;
                                rep.count("claim_replays");
                                try {
                                    claim_replay(p, x, y, k, w, L0);
                                } catch (const std::logic_error& e) {
                                    std::ostringstream os;
                                    os << "claim replay failed at " << tag << " x=" << x
                                       << " y=" << y << " k=" << k << " w=" << w << ": "
                                       << e.what();
                                    rep.add_violation(os.str());
                                }
                            }
                        } else {
                            Poset pd = p.dual();
                            std::vector<int> rev(n + 1, 0);
                            for (int u = 1; u <= n; ++u) rev[u] = n + 1 - L0.rank(u);
                            LinearExtension Ld(rev);
                            for (int w = 1; w <= n; ++w) {
                                if (!p.less(w, y) || p.less(w, x)) continue;
                                rep.count("claim_replays");
                                try {
                                    claim_replay(pd, y, x, k, w, Ld);
                                } catch (const std::logic_error& e) {
                                    std::ostringstream os;
                                    os << "dual claim replay failed at " << tag << " x=" << x
                                       << " y=" << y << " k=" << k << " w=" << w << ": "
                                       << e.what();
                                    rep.add_violation(os.str());
                                }
                            }
                        }
                    }
                }
            }
    }

    if (o.drive) {
        for (int x = 1; x <= n; ++x)
            for (int y = 1; y <= n; ++y) {
                if (!p.less(x, y)) continue;
                for (int k = 1; k <= n - 1; ++k) {
                    if (!ks_vanishing(p, x, y, k)) continue;
                    rep.count("fiber_drives");
                    try {
                        DriveResult res = drive_to_fiber(p, x, y, k);
                        if (res.L.rank(y) - res.L.rank(x) != k)
                            rep.add_violation("drive missed the fiber at " + tag);
                    } catch (const std::logic_error& e) {
                        std::ostringstream os;
                        os << "drive failed at " << tag << " x=" << x << " y=" << y
                           << " k=" << k << ": " << e.what();
                        rep.add_violation(os.str());
                    }
                }
            }
    }
}

}  // namespace

ScanReport sweep_posets_on(const std::vector<Poset>& posets, const PosetSweepOptions& opts,
                           const std::string& source_label) {
    ScanReport rep;
    rep.suite = "posets:" + source_label;
    rep.count("posets", (long long)posets.size());
    run_over(posets, rep, [&](const Poset& p, ScanReport& out) {
        process_poset(p, opts, out);
    });
    return rep;
}

ScanReport sweep_posets(const PosetSweepOptions& opts) {
    auto classes = poset_classes_up_to(opts.max_n);
    std::vector<Poset> all;
    ScanReport rep;
    for (int n = 1; n <= opts.max_n; ++n) {
        rep.count("classes_n" + std::to_string(n), (long long)classes[n].size());
        all.insert(all.end(), classes[n].begin(), classes[n].end());
    }
    ScanReport inner = sweep_posets_on(all, opts, "exhaustive");
    inner.merge(rep);
    inner.suite = "posets:exhaustive";
    return inner;
}

// ---------------------------------------------------------------------------
// Lemma sweeps.

namespace {

std::vector<NEPath> paths_between(const Region& r, const GridPoint& A, const GridPoint& B) {
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

void process_kappa_region(const Region& r, ScanReport& rep) {
    int a = r.a(), b = r.b();
    KCalc kc(r);
    std::string tag = "region " + region_str(r);
    for (int xl = 0; xl <= a; ++xl) {
        for (int ya = r.col_lo(xl); ya <= r.col_hi(xl); ++ya)
            for (int yap = r.col_lo(xl); yap <= ya; ++yap)
                for (int yb = r.col_lo(xl); yb <= yap; ++yb) {
                    int ybp = yb + (ya - yap);
                    GridPoint A{xl, ya}, Ap{xl, yap}, B{xl, yb}, Bp{xl, ybp};
                    if (!r.contains(Bp)) continue;
                    for (int xr = xl; xr <= a; ++xr)
                        for (int yc = r.col_lo(xr); yc <= r.col_hi(xr); ++yc)
                            for (int yd = r.col_lo(xr); yd <= r.col_hi(xr); ++yd) {
                                if (yap - yb < yc - yd) continue;
                                GridPoint C{xr, yc}, D{xr, yd};
                                PairGeometry g{A, Ap, B, Bp, C, D};

                                const DensePoly &apc = kc.K(Ap, C), &bpd = kc.K(Bp, D);
                                const DensePoly &ac = kc.K(A, C), &bd = kc.K(B, D);
                                DensePoly lhs = apc * bpd, rhs = ac * bd;
                                rep.count("pair_lemma_checks");
                                if (!(lhs - rhs).is_nonneg()) {
                                    std::ostringstream os;
                                    os << "pair lemma fails at " << tag << " A=(" << xl << ","
                                       << ya << ") A'=(" << xl << "," << yap << ") B=(" << xl
                                       << "," << yb << ") C=(" << xr << "," << yc << ") D=("
                                       << xr << "," << yd << ")";
                                    rep.add_violation(os.str());
                                }

                                // Equality analysis under the strict-slack hypothesis.
                                if (yap - yb > yc - yd) {
                                    bool eq1 = lhs.eval_one() == rhs.eval_one();
                                    bool both_zero = lhs.is_zero() && rhs.is_zero();
                                    bool pairwise = apc == ac && bpd == bd;
                                    rep.count("equality_lemma_checks");
                                    if (eq1 != (both_zero || pairwise))
                                        rep.add_violation("equality lemma iff fails at " + tag);
                                    if (eq1 && ya > yap && xr > xl && !lhs.is_zero()) {
                                        rep.count("equality_lemma_boundary_checks");
                                        if (!r.segment_on_lower_boundary(A, B))
                                            rep.add_violation(
                                                "equality without boundary segment at " + tag);
                                    }
                                }

                                // The injection itself, over its whole domain.
                                auto gammas = paths_between(r, A, C);
                                if (gammas.empty()) continue;
                                auto deltas = paths_between(r, B, D);
                                if (deltas.empty()) continue;
                                std::set<std::string> images;
                                for (const auto& gamma : gammas)
                                    for (const auto& delta : deltas) {
                                        rep.count("kappa_applications");
                                        try {
                                            auto [g2, d2] = kappa(r, g, gamma, delta);
                                            if (path_weight(gamma) + path_weight(delta) !=
                                                path_weight(g2) + path_weight(d2))
                                                rep.add_violation(
                                                    "kappa weight not preserved at " + tag);
                                            std::string key =
                                                g2.steps() + "|" + d2.steps();
                                            if (!images.insert(key).second)
                                                rep.add_violation("kappa not injective at " +
                                                                  tag);
                                        } catch (const std::exception& e) {
                                            rep.add_violation(std::string("kappa failed: ") +
                                                              e.what() + " at " + tag);
                                        }
                                    }
                                }
                }
    }
}

void process_crisscross_region(const Region& r, ScanReport& rep) {
    int a = r.a();
    KCalc kc(r);
    std::string tag = "region " + region_str(r);
    for (int xl = 0; xl <= a; ++xl)
        for (int ya = r.col_lo(xl); ya <= r.col_hi(xl); ++ya)
            for (int yb = r.col_lo(xl); yb <= ya; ++yb)
                for (int t = 0; t <= ya - yb; ++t) {
                    GridPoint A{xl, ya}, Ap{xl, ya - t}, B{xl, yb}, Bp{xl, yb + t};
                    for (int xr = xl; xr <= a; ++xr)
                        for (int yc = r.col_lo(xr); yc <= r.col_hi(xr); ++yc) {
                            int yd = yc - (ya - yb);
                            GridPoint C{xr, yc}, Cp{xr, yc - t}, D{xr, yd}, Dp{xr, yd + t};
                            if (!r.contains(C) || !r.contains(Cp) || !r.contains(D) ||
                                !r.contains(Dp))
                                continue;
                            DensePoly d2 = kc.K(A, C) * kc.K(B, D) + kc.K(Ap, Cp) * kc.K(Bp, Dp) -
                                           kc.K(Ap, C) * kc.K(Bp, D) - kc.K(A, Cp) * kc.K(B, Dp);
                            rep.count("crisscross_checks");
                            if (!d2.is_nonneg()) {
                                std::ostringstream os;
                                os << "criss-cross fails at " << tag << " A=(" << xl << ","
                                   << ya << ") B=(" << xl << "," << yb << ") t=" << t
                                   << " C=(" << xr << "," << yc << ")";
                                rep.add_violation(os.str());
                            }
                        }
                }
}

void process_lgv_region(const Region& r, ScanReport& rep) {
    int a = r.a();
    KCalc kc(r);
    std::string tag = "region " + region_str(r);
    for (int xl = 0; xl <= a; ++xl)
        for (int ya = r.col_lo(xl); ya <= r.col_hi(xl); ++ya)
            for (int yb = r.col_lo(xl); yb <= ya; ++yb)
                for (int xr = xl; xr <= a; ++xr)
                    for (int yc = r.col_lo(xr); yc <= r.col_hi(xr); ++yc)
                        for (int yd = r.col_lo(xr); yd <= yc; ++yd) {
                            GridPoint A{xl, ya}, B{xl, yb}, C{xr, yc}, D{xr, yd};
                            DensePoly lhs = kc.K(A, C) * kc.K(B, D);
                            DensePoly rhs = kc.K(B, C) * kc.K(A, D);
                            rep.count("lgv_checks");
                            if (!(lhs - rhs).is_nonneg())
                                rep.add_violation("crossed-products lemma fails at " + tag);
                            bool eq = lhs == rhs;
                            auto fp = forced_point(r, A, B, C, D);
                            if (!eq && fp.has_value())
                                rep.add_violation("forced point on strict inequality at " + tag);
                            if (eq && !lhs.is_zero()) {
                                if (!fp.has_value()) {
                                    rep.add_violation("missing forced point at " + tag);
                                } else if (xr > xl && fp->tag == ForcedCase::Other) {
                                    rep.add_violation("unclassified forced point at " + tag);
                                }
                            }
                        }
}

std::vector<Region> materialize_rect_regions(int max_a, int max_b) {
    std::vector<Region> out;
    for (int a = 0; a <= max_a; ++a)
        for (int b = 0; b <= max_b; ++b)
            enumerate_regions(a, b, [&](const Region& r) {
                out.push_back(r);
                return true;
            });
    return out;
}

}  // namespace

ScanReport sweep_kappa(int max_a, int max_b) {
    ScanReport rep;
    rep.suite = "kappa";
    auto regions = materialize_rect_regions(max_a, max_b);
    rep.count("regions", (long long)regions.size());
    run_over(regions, rep, [&](const Region& r, ScanReport& out) {
        process_kappa_region(r, out);
    });
    return rep;
}

ScanReport sweep_crisscross(int max_a, int max_b) {
    ScanReport rep;
    rep.suite = "crisscross";
    auto regions = materialize_rect_regions(max_a, max_b);
    rep.count("regions", (long long)regions.size());
    run_over(regions, rep, [&](const Region& r, ScanReport& out) {
        process_crisscross_region(r, out);
    });
    return rep;
}

ScanReport sweep_lgv(int max_a, int max_b) {
    ScanReport rep;
    rep.suite = "lgv";
    auto regions = materialize_rect_regions(max_a, max_b);
    rep.count("regions", (long long)regions.size());
    run_over(regions, rep, [&](const Region& r, ScanReport& out) {
        process_lgv_region(r, out);
    });
    return rep;
}

ScanReport sweep_random_posets(uint64_t seed, int count, int n, uint32_t density16) {
    std::mt19937_64 rng(seed);
    std::vector<Poset> posets;
    posets.reserve(count);
    for (int i = 0; i < count; ++i) posets.push_back(random_poset(rng, n, density16));
    PosetSweepOptions opts;
    opts.vanishing = true;
    opts.plain_lc = true;
    opts.conjecture = n <= 9;
    ScanReport rep = sweep_posets_on(posets, opts, "random");
    rep.count("seed", (long long)seed);
    return rep;
}

ScanReport sweep_random_regions(uint64_t seed, int count, int a, int b) {
    std::mt19937_64 rng(seed);
    std::vector<Region> regions;
    regions.reserve(count);
    for (int i = 0; i < count; ++i) regions.push_back(random_region(rng, a, b));
    RegionSweepOptions opts;
    opts.max_ab = a + b;
    opts.qks = opts.thm16 = opts.thm17 = opts.bijection = true;
    ScanReport rep;
    rep.suite = "regions:random";
    rep.count("regions", (long long)regions.size());
    rep.count("seed", (long long)seed);
    run_over(regions, rep, [&](const Region& r, ScanReport& out) {
        process_region(r, opts, out);
    });
    return rep;
}

}  // namespace lepath
