#include "lepath/generators.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace lepath {

namespace {

uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// Iterated neighborhood refinement; isomorphism-invariant by construction.
std::vector<uint64_t> wl_colors(const Poset& p) {
    int n = p.size();
    std::vector<uint64_t> col(n + 1, 0x12345);
    for (int round = 0; round < 3; ++round) {
        std::vector<uint64_t> nxt(n + 1, 0);
        for (int u = 1; u <= n; ++u) {
            uint64_t down = 0, up = 0;
            for (int v = 1; v <= n; ++v) {
                if (p.less(v, u)) down += splitmix64(col[v] ^ 0x1111);
                if (p.less(u, v)) up += splitmix64(col[v] ^ 0x2222);
            }
            nxt[u] = splitmix64(col[u] * 3 + down * 5 + up * 7);
        }
        col = nxt;
    }
    return col;
}

std::vector<uint64_t> bucket_key(const Poset& p, const std::vector<uint64_t>& colors) {
    std::vector<uint64_t> key;
    key.push_back((uint64_t)p.size());
    key.push_back((uint64_t)p.relation_pairs().size());
    std::vector<uint64_t> sorted(colors.begin() + 1, colors.end());
    std::sort(sorted.begin(), sorted.end());
    key.insert(key.end(), sorted.begin(), sorted.end());
    return key;
}

struct IsoSearch {
    const Poset& a;
    const Poset& b;
    const std::vector<uint64_t>& ca;
    const std::vector<uint64_t>& cb;
    std::vector<int> order;    // a-elements in processing order
    std::vector<int> image;    // a-element -> b-element
    std::vector<char> used;

    bool extend(size_t depth) {
        if (depth == order.size()) return true;
        int u = order[depth];
        for (int v = 1; v <= b.size(); ++v) {
            if (used[v] || ca[u] != cb[v]) continue;
            bool ok = true;
            for (size_t i = 0; i < depth && ok; ++i) {
                int u2 = order[i], v2 = image[u2];
                if (a.less(u, u2) != b.less(v, v2) || a.less(u2, u) != b.less(v2, v)) ok = false;
            }
            if (!ok) continue;
            used[v] = 1;
            image[u] = v;
            if (extend(depth + 1)) return true;
            used[v] = 0;
        }
        return false;
    }
};

}  // namespace

bool posets_isomorphic(const Poset& a, const Poset& b) {
    if (a.size() != b.size()) return false;
    auto ca = wl_colors(a), cb = wl_colors(b);
    if (bucket_key(a, ca) != bucket_key(b, cb)) return false;
    IsoSearch s{a, b, ca, cb, {}, {}, {}};
    s.order.resize(a.size());
    for (int u = 1; u <= a.size(); ++u) s.order[u - 1] = u;
    // Rare colors first shrinks the branching.
    std::map<uint64_t, int> freq;
    for (int u = 1; u <= a.size(); ++u) ++freq[ca[u]];
    std::sort(s.order.begin(), s.order.end(), [&](int u, int v) {
        if (freq[ca[u]] != freq[ca[v]]) return freq[ca[u]] < freq[ca[v]];
        if (ca[u] != ca[v]) return ca[u] < ca[v];
        return u < v;
    });
    s.image.assign(a.size() + 1, 0);
    s.used.assign(b.size() + 1, 0);
    return s.extend(0);
}

std::vector<uint32_t> order_ideals(const Poset& p) {
    int n = p.size();
    if (n > 20) throw std::invalid_argument("order_ideals supports up to 20 elements");
    std::vector<uint32_t> pred(n + 1, 0);
    for (int u = 1; u <= n; ++u)
        for (int v = 1; v <= n; ++v)
            if (p.less(v, u)) pred[u] |= uint32_t{1} << (v - 1);
    std::vector<uint32_t> out;
    for (uint32_t mask = 0; mask < (uint32_t{1} << n); ++mask) {
        bool closed = true;
        for (int u = 1; u <= n && closed; ++u)
            if ((mask >> (u - 1)) & 1)
                if ((pred[u] & mask) != pred[u]) closed = false;
        if (closed) out.push_back(mask);
    }
    return out;
}

std::vector<std::vector<Poset>> poset_classes_up_to(int nmax) {
    if (nmax < 1) return {{}};
    std::vector<std::vector<Poset>> classes(nmax + 1);
    classes[1].push_back(Poset(1));
    for (int n = 2; n <= nmax; ++n) {
        std::map<std::vector<uint64_t>, std::vector<size_t>> buckets;
        for (const Poset& parent : classes[n - 1]) {
            auto parent_rel = parent.relation_pairs();
            for (uint32_t ideal : order_ideals(parent)) {
                auto rel = parent_rel;
                for (int u = 1; u <= n - 1; ++u)
                    if ((ideal >> (u - 1)) & 1) rel.emplace_back(u, n);
                Poset child = Poset::from_relations(n, rel);
                auto colors = wl_colors(child);
                auto key = bucket_key(child, colors);
                auto& bucket = buckets[key];
                bool fresh = true;
                for (size_t idx : bucket)
                    if (posets_isomorphic(child, classes[n][idx])) {
                        fresh = false;
                        break;
                    }
                if (fresh) {
                    bucket.push_back(classes[n].size());
                    classes[n].push_back(std::move(child));
                }
            }
        }
    }
    return classes;
}

Poset random_poset(std::mt19937_64& rng, int n, uint32_t density16) {
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i + 1;
    for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng() % (i + 1)]);
    std::vector<std::pair<int, int>> rel;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if ((rng() & 0xffff) < density16) rel.emplace_back(perm[i], perm[j]);
    return Poset::from_relations(n, rel);
}

namespace {
NEPath random_path(std::mt19937_64& rng, int a, int b) {
    std::string s(a, 'E');
    s.append(b, 'N');
    for (int i = a + b - 1; i > 0; --i) std::swap(s[i], s[rng() % (i + 1)]);
    return NEPath({0, 0}, s);
}
}  // namespace

Region random_region(std::mt19937_64& rng, int a, int b) {
    for (long attempt = 0; attempt < 100000000L; ++attempt) {
        NEPath lo = random_path(rng, a, b), hi = random_path(rng, a, b);
        auto le = lo.east_heights(), ue = hi.east_heights();
        bool ok = true;
        for (int i = 0; i < a && ok; ++i) ok = le[i] <= ue[i];
        if (ok) return Region(lo, hi);
    }
    throw std::runtime_error("random_region: rejection sampling failed");
}

}  // namespace lepath
