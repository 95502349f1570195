#include "lepath/poset.hpp"

#include <algorithm>
#include <cassert>

namespace lepath {

Poset::Poset(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("negative element count");
    words_ = (n + 1 + 63) / 64;
    rows_.assign(n + 1, std::vector<uint64_t>(words_, 0));
}

Poset Poset::from_relations(int n, const std::vector<std::pair<int, int>>& pairs) {
    Poset p(n);
    for (auto [u, v] : pairs) {
        p.check_ids(u);
        p.check_ids(v);
        if (u == v) throw std::invalid_argument("not a partial order");
        p.set_less(u, v);
    }
    // Floyd-Warshall style closure over the boolean relation.
    for (int k = 1; k <= n; ++k)
        for (int u = 1; u <= n; ++u)
            if (p.less(u, k))
                for (int w = 0; w < p.words_; ++w)
                    p.rows_[u][w] |= p.rows_[k][w];
    for (int u = 1; u <= n; ++u)
        if (p.less(u, u)) throw std::invalid_argument("not a partial order");
    return p;
}

int Poset::down_count(int u) const {
    check_ids(u);
    int c = 0;
    for (int v = 1; v <= n_; ++v) c += less(v, u);
    return c;
}

int Poset::up_count(int u) const {
    check_ids(u);
    int c = 0;
    for (int v = 1; v <= n_; ++v) c += less(u, v);
    return c;
}

int Poset::between_count(int x, int y) const {
    check_ids(x);
    check_ids(y);
    int c = 0;
    for (int v = 1; v <= n_; ++v) c += less(x, v) && less(v, y);
    return c;
}

Poset Poset::dual() const {
    Poset d(n_);
    for (int u = 1; u <= n_; ++u)
        for (int v = 1; v <= n_; ++v)
            if (less(u, v)) d.set_less(v, u);
    return d;
}

Poset Poset::with_maximum() const {
    Poset p(n_ + 1);
    for (int u = 1; u <= n_; ++u) {
        for (int v = 1; v <= n_; ++v)
            if (less(u, v)) p.set_less(u, v);
        p.set_less(u, n_ + 1);
    }
    return p;
}

Poset Poset::with_minimum() const {
    Poset p(n_ + 1);
    for (int u = 1; u <= n_; ++u) {
        for (int v = 1; v <= n_; ++v)
            if (less(u, v)) p.set_less(u, v);
        p.set_less(n_ + 1, u);
    }
    return p;
}

std::vector<int> Poset::minimal_elements() const {
    std::vector<int> out;
    for (int u = 1; u <= n_; ++u)
        if (down_count(u) == 0) out.push_back(u);
    return out;
}

std::vector<int> Poset::maximal_elements() const {
    std::vector<int> out;
    for (int u = 1; u <= n_; ++u)
        if (up_count(u) == 0) out.push_back(u);
    return out;
}

namespace {

struct ExtensionWalker {
    const Poset& p;
    int n;
    std::vector<uint64_t> pred_mask;  // predecessors of u, as a bitmask over 1..n (n <= 64)
    uint64_t remaining;
    std::vector<int> ranks;
    const std::function<bool(const LinearExtension&)>& visit;
    bool stopped = false;

    ExtensionWalker(const Poset& p_, const std::function<bool(const LinearExtension&)>& v)
        : p(p_), n(p_.size()), pred_mask(n + 1, 0), ranks(n + 1, 0), visit(v) {
        for (int u = 1; u <= n; ++u)
            for (int v2 = 1; v2 <= n; ++v2)
                if (p.less(v2, u)) pred_mask[u] |= uint64_t{1} << v2;
        remaining = n == 64 ? ~uint64_t{1} : ((uint64_t{1} << (n + 1)) - 2);
    }

    void go(int depth) {
        if (stopped) return;
        if (depth > n) {
            LinearExtension L(ranks);
            if (!visit(L)) stopped = true;
            return;
        }
        for (int u = 1; u <= n && !stopped; ++u) {
            uint64_t bit = uint64_t{1} << u;
            if (!(remaining & bit)) continue;
            if (pred_mask[u] & remaining) continue;  // not minimal
            remaining &= ~bit;
            ranks[u] = depth;
            go(depth + 1);
            ranks[u] = 0;
            remaining |= bit;
        }
    }
};

}  // namespace

void Poset::for_each_extension(const std::function<bool(const LinearExtension&)>& visit) const {
    if (n_ > 64) throw std::invalid_argument("extension enumeration supports up to 64 elements");
    if (n_ == 0) {
        visit(LinearExtension(std::vector<int>{0}));
        return;
    }
    ExtensionWalker w(*this, visit);
    w.go(1);
}

std::vector<LinearExtension> Poset::extensions() const {
    std::vector<LinearExtension> out;
    for_each_extension([&](const LinearExtension& L) {
        out.push_back(L);
        return true;
    });
    return out;
}

long long Poset::count_extensions() const {
    long long c = 0;
    for_each_extension([&](const LinearExtension&) {
        ++c;
        return true;
    });
    return c;
}

namespace {

// Kuhn's augmenting-path matching, deterministic by construction: left
// vertices and adjacency both scanned in ascending id order.
struct Matcher {
    const Poset& p;
    int n;
    std::vector<int> match_right;  // right vertex v -> left u, 0 if free
    std::vector<char> used;

    explicit Matcher(const Poset& p_) : p(p_), n(p_.size()), match_right(n + 1, 0) {}

    bool try_augment(int u) {
        for (int v = 1; v <= n; ++v) {
            if (!p.less(u, v) || used[v]) continue;
            used[v] = 1;
            if (match_right[v] == 0 || try_augment(match_right[v])) {
                match_right[v] = u;
                return true;
            }
        }
        return false;
    }

    int run() {
        int m = 0;
        for (int u = 1; u <= n; ++u) {
            used.assign(n + 1, 0);
            if (try_augment(u)) ++m;
        }
        return m;
    }
};

}  // namespace

std::optional<ChainPartition> Poset::width2_partition() const {
    Matcher m(*this);
    int matched = m.run();
    int cover = n_ - matched;
    if (cover > 2) return std::nullopt;

    std::vector<int> succ(n_ + 1, 0), has_pred(n_ + 1, 0);
    for (int v = 1; v <= n_; ++v) {
        int u = m.match_right[v];
        if (u != 0) {
            succ[u] = v;
            has_pred[v] = 1;
        }
    }
    std::vector<std::vector<int>> chains;
    for (int u = 1; u <= n_; ++u) {
        if (has_pred[u]) continue;
        std::vector<int> chain;
        for (int v = u; v != 0; v = succ[v]) chain.push_back(v);
        chains.push_back(std::move(chain));
    }
    ChainPartition cp;
    if (chains.size() >= 1) cp.c1 = chains[0];
    if (chains.size() >= 2) cp.c2 = chains[1];
    if (cp.c2.size() > 0 && cp.c2.front() < cp.c1.front()) std::swap(cp.c1, cp.c2);
    cp.validate(*this);
    return cp;
}

std::vector<std::pair<int, int>> Poset::cover_pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 1; u <= n_; ++u)
        for (int v = 1; v <= n_; ++v) {
            if (!less(u, v)) continue;
            bool cover = true;
            for (int z = 1; z <= n_ && cover; ++z)
                if (less(u, z) && less(z, v)) cover = false;
            if (cover) out.emplace_back(u, v);
        }
    return out;
}

std::vector<std::pair<int, int>> Poset::relation_pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 1; u <= n_; ++u)
        for (int v = 1; v <= n_; ++v)
            if (less(u, v)) out.emplace_back(u, v);
    return out;
}

uint64_t Poset::fingerprint() const {
    uint64_t h = 1469598103934665603ull;
    auto mix = [&h](uint64_t x) {
        for (int i = 0; i < 8; ++i) {
            h ^= (x >> (8 * i)) & 0xff;
            h *= 1099511628211ull;
        }
    };
    mix((uint64_t)n_);
    for (auto [u, v] : relation_pairs()) mix(((uint64_t)u << 32) | (uint64_t)v);
    return h;
}

int LinearExtension::element_at(int t) const {
    for (int u = 1; u <= size(); ++u)
        if (rank_[u] == t) return u;
    throw std::out_of_range("rank not present");
}

std::vector<int> LinearExtension::order() const {
    std::vector<int> out(size() + 1, 0);
    for (int u = 1; u <= size(); ++u) out[rank_[u]] = u;
    out.erase(out.begin());
    return out;
}

bool LinearExtension::is_permutation() const {
    int n = size();
    std::vector<char> seen(n + 1, 0);
    for (int u = 1; u <= n; ++u) {
        int r = rank_[u];
        if (r < 1 || r > n || seen[r]) return false;
        seen[r] = 1;
    }
    return true;
}

bool LinearExtension::respects(const Poset& p) const {
    if (p.size() != size() || !is_permutation()) return false;
    for (int u = 1; u <= size(); ++u)
        for (int v = 1; v <= size(); ++v)
            if (p.less(u, v) && rank_[u] >= rank_[v]) return false;
    return true;
}

int ChainPartition::position(int u) const {
    for (int i = 0; i < (int)c1.size(); ++i)
        if (c1[i] == u) return i + 1;
    for (int i = 0; i < (int)c2.size(); ++i)
        if (c2[i] == u) return -(i + 1);
    return 0;
}

void ChainPartition::validate(const Poset& p) const {
    int n = p.size();
    std::vector<char> seen(n + 1, 0);
    for (int u : c1) {
        p.check_ids(u);
        if (seen[u]++) throw std::invalid_argument("chain partition repeats an element");
    }
    for (int u : c2) {
        p.check_ids(u);
        if (seen[u]++) throw std::invalid_argument("chain partition repeats an element");
    }
    for (int u = 1; u <= n; ++u)
        if (!seen[u]) throw std::invalid_argument("chain partition misses an element");
    for (size_t i = 0; i + 1 < c1.size(); ++i)
        if (!p.less(c1[i], c1[i + 1])) throw std::invalid_argument("c1 is not a chain");
    for (size_t i = 0; i + 1 < c2.size(); ++i)
        if (!p.less(c2[i], c2[i + 1])) throw std::invalid_argument("c2 is not a chain");
}

long wgt(const ChainPartition& cp, const LinearExtension& L) {
    long s = 0;
    for (int u : cp.c1) s += L.rank(u);
    return s;
}

}  // namespace lepath
