#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lepath/poset.hpp"

namespace lepath {

struct GridPoint {
    int x = 0;
    int y = 0;
    bool operator==(const GridPoint& o) const { return x == o.x && y == o.y; }
    bool operator!=(const GridPoint& o) const { return !(*this == o); }
    bool operator<(const GridPoint& o) const { return x < o.x || (x == o.x && y < o.y); }
    GridPoint operator+(const GridPoint& o) const { return {x + o.x, y + o.y}; }
    GridPoint operator-(const GridPoint& o) const { return {x - o.x, y - o.y}; }
};

inline constexpr GridPoint kEast{1, 0};
inline constexpr GridPoint kNorth{0, 1};

// Monotone lattice path of unit East/North steps.
class NEPath {
public:
    NEPath() = default;
    NEPath(GridPoint start, std::string steps);

    // Path determined by the heights of its East steps, from (0,0) to (a,b).
    static NEPath from_east_heights(int a, int b, const std::vector<int>& heights);

    const GridPoint& start() const { return start_; }
    GridPoint end() const;
    const std::string& steps() const { return steps_; }
    int length() const { return (int)steps_.size(); }

    GridPoint point_at(int t) const;           // after t steps
    std::vector<GridPoint> points() const;     // all length()+1 points
    std::vector<int> east_heights() const;     // height of each East step

    bool contains_point(const GridPoint& p) const;
    int index_of_point(const GridPoint& p) const;  // -1 if absent

    NEPath prefix_to(const GridPoint& p) const;
    NEPath suffix_from(const GridPoint& p) const;
    NEPath concat(const NEPath& tail) const;
    NEPath translated(const GridPoint& v) const;

    bool operator==(const NEPath& o) const { return start_ == o.start_ && steps_ == o.steps_; }
    bool operator!=(const NEPath& o) const { return !(*this == o); }

private:
    GridPoint start_{0, 0};
    std::string steps_;
};

// Staircase region between two weakly noncrossing NE paths (0,0) -> (a,b).
// Everything downstream tests membership and boundary membership against
// the two paths, so those are precomputed per column.
class Region {
public:
    Region() = default;
    Region(NEPath lower, NEPath upper);
    static Region from_east_heights(int a, int b, const std::vector<int>& lower,
                                    const std::vector<int>& upper);
    static Region full_rectangle(int a, int b);

    int a() const { return a_; }
    int b() const { return b_; }
    const NEPath& lower() const { return lower_; }
    const NEPath& upper() const { return upper_; }

    bool contains(const GridPoint& p) const {
        return p.x >= 0 && p.x <= a_ && p.y >= col_lo_[p.x] && p.y <= col_hi_[p.x];
    }
    bool contains_path(const NEPath& path) const;
    int col_lo(int x) const { return col_lo_[x]; }
    int col_hi(int x) const { return col_hi_[x]; }

    bool on_lower_boundary(const GridPoint& p) const;
    bool on_upper_boundary(const GridPoint& p) const;

    // Membership of the vertical segment between two points on one column.
    bool segment_on_lower_boundary(const GridPoint& p1, const GridPoint& p2) const;
    bool segment_on_upper_boundary(const GridPoint& p1, const GridPoint& p2) const;

    Region transposed() const;  // reflect across the diagonal

    bool operator==(const Region& o) const { return lower_ == o.lower_ && upper_ == o.upper_; }
    bool operator!=(const Region& o) const { return !(*this == o); }

private:
    int a_ = 0, b_ = 0;
    NEPath lower_, upper_;
    std::vector<int> col_lo_, col_hi_;
};

// The width-two dictionary.
Region region_of(const Poset& p, const ChainPartition& cp);
NEPath path_of_extension(const Poset& p, const ChainPartition& cp, const LinearExtension& L);
LinearExtension extension_of_path(const Poset& p, const ChainPartition& cp, const NEPath& path);

// Canonical poset realizing a region: alpha_i = i, beta_j = a + j.
std::pair<Poset, ChainPartition> poset_of_region(const Region& r);

// All ordered pairs of weakly noncrossing boundary paths, ascending in the
// (lower, upper) East-height encoding.  Visitor returns false to stop.
void enumerate_regions(int a, int b, const std::function<bool(const Region&)>& visit);
long long count_regions(int a, int b);

// ASCII rendering: one text row per grid row, '#' for cells of the region,
// '^' / 'v' for cells excluded from above / below, '*' overlay for a path.
std::string ascii_art(const Region& r, const NEPath* overlay = nullptr);

}  // namespace lepath
