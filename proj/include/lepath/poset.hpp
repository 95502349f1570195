#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lepath {

class LinearExtension;
struct ChainPartition;

// Finite strict partial order on elements 1..n, stored transitively closed
// so every comparability test is a single bit lookup.
class Poset {
public:
    Poset() : n_(0) {}
    explicit Poset(int n);

    // Builds the transitive closure of the given pairs (u precedes v).
    // Throws std::invalid_argument("not a partial order") on a cycle.
    static Poset from_relations(int n, const std::vector<std::pair<int, int>>& pairs);

    int size() const { return n_; }

    bool less(int u, int v) const {
        return (rows_[u][v >> 6] >> (v & 63)) & 1u;
    }
    bool comparable(int u, int v) const { return less(u, v) || less(v, u); }
    bool incomparable(int u, int v) const { return u != v && !comparable(u, v); }

    // f(u), g(u), h(x,y) of the ideal-size statistics.
    int down_count(int u) const;
    int up_count(int u) const;
    int between_count(int x, int y) const;

    Poset dual() const;

    // New poset with element n+1 above (resp. below) everything.
    Poset with_maximum() const;
    Poset with_minimum() const;

    std::vector<int> minimal_elements() const;
    std::vector<int> maximal_elements() const;

    // Visits every linear extension exactly once, in the deterministic order
    // given by backtracking over minimal elements in ascending id order.
    // The visitor returns false to stop early.
    void for_each_extension(const std::function<bool(const LinearExtension&)>& visit) const;
    std::vector<LinearExtension> extensions() const;
    long long count_extensions() const;

    // Chain partition for width <= 2 (c2 empty for width <= 1), or nullopt
    // when the width exceeds two.  Computed by minimum path cover via
    // bipartite matching on the closed relation.
    std::optional<ChainPartition> width2_partition() const;

    bool operator==(const Poset& o) const { return n_ == o.n_ && rows_ == o.rows_; }
    bool operator!=(const Poset& o) const { return !(*this == o); }

    // Cover pairs (u, v) with u covered by v, ascending.
    std::vector<std::pair<int, int>> cover_pairs() const;
    std::vector<std::pair<int, int>> relation_pairs() const;

    uint64_t fingerprint() const;  // FNV-1a over (n, closed relation)

    void set_less(int u, int v) { rows_[u][v >> 6] |= (uint64_t{1} << (v & 63)); }
    void check_ids(int u) const {
        if (u < 1 || u > n_) throw std::invalid_argument("element id out of range");
    }

private:
    int n_;
    int words_;
    std::vector<std::vector<uint64_t>> rows_;  // rows_[u] indexed 1..n
};

// Bijection element -> rank in [1..n] respecting the order.
class LinearExtension {
public:
    LinearExtension() = default;
    explicit LinearExtension(std::vector<int> ranks) : rank_(std::move(ranks)) {}

    int size() const { return (int)rank_.size() - 1; }
    int rank(int u) const { return rank_[u]; }
    int& rank_mut(int u) { return rank_[u]; }

    // Element at a given rank.
    int element_at(int t) const;
    std::vector<int> order() const;  // elements listed by ascending rank

    bool is_permutation() const;
    bool respects(const Poset& p) const;

    bool operator==(const LinearExtension& o) const { return rank_ == o.rank_; }

private:
    std::vector<int> rank_;  // rank_[0] unused
};

// Ordered chains covering a width-two poset; fixes the weight statistic.
struct ChainPartition {
    std::vector<int> c1;  // alpha_1 .. alpha_a, increasing in the order
    std::vector<int> c2;  // beta_1 .. beta_b

    int a() const { return (int)c1.size(); }
    int b() const { return (int)c2.size(); }

    // 1-based position of u in c1 (positive) or c2 (negative), 0 if absent.
    int position(int u) const;
    bool in_c1(int u) const { return position(u) > 0; }

    void validate(const Poset& p) const;  // throws on violation
    ChainPartition swapped() const { return ChainPartition{c2, c1}; }
};

// Weight of an extension: sum of L(alpha_i) over the first chain.
long wgt(const ChainPartition& cp, const LinearExtension& L);

}  // namespace lepath
