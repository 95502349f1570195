#include "lepath/region.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace lepath {

NEPath::NEPath(GridPoint start, std::string steps) : start_(start), steps_(std::move(steps)) {
    for (char c : steps_)
        if (c != 'E' && c != 'N') throw std::invalid_argument("path steps must be E or N");
}

NEPath NEPath::from_east_heights(int a, int b, const std::vector<int>& heights) {
    if ((int)heights.size() != a) throw std::invalid_argument("need one height per East step");
    std::string s;
    s.reserve(a + b);
    int y = 0;
    for (int h = 0; h < a; ++h) {
        if (heights[h] < y || heights[h] > b)
            throw std::invalid_argument("East heights must be nondecreasing within [0,b]");
        while (y < heights[h]) { s.push_back('N'); ++y; }
        s.push_back('E');
    }
    while (y < b) { s.push_back('N'); ++y; }
    return NEPath({0, 0}, std::move(s));
}

GridPoint NEPath::end() const { return point_at(length()); }

GridPoint NEPath::point_at(int t) const {
    GridPoint p = start_;
    for (int i = 0; i < t; ++i) p = p + (steps_[i] == 'E' ? kEast : kNorth);
    return p;
}

std::vector<GridPoint> NEPath::points() const {
    std::vector<GridPoint> out;
    out.reserve(length() + 1);
    GridPoint p = start_;
    out.push_back(p);
    for (char c : steps_) {
        p = p + (c == 'E' ? kEast : kNorth);
        out.push_back(p);
    }
    return out;
}

std::vector<int> NEPath::east_heights() const {
    std::vector<int> out;
    GridPoint p = start_;
    for (char c : steps_) {
        if (c == 'E') out.push_back(p.y);
        p = p + (c == 'E' ? kEast : kNorth);
    }
    return out;
}

int NEPath::index_of_point(const GridPoint& q) const {
    int dist = (q.x - start_.x) + (q.y - start_.y);
    if (dist < 0 || dist > length()) return -1;
    return point_at(dist) == q ? dist : -1;
}

bool NEPath::contains_point(const GridPoint& q) const { return index_of_point(q) >= 0; }

NEPath NEPath::prefix_to(const GridPoint& p) const {
    int i = index_of_point(p);
    if (i < 0) throw std::invalid_argument("point not on path");
    return NEPath(start_, steps_.substr(0, i));
}

NEPath NEPath::suffix_from(const GridPoint& p) const {
    int i = index_of_point(p);
    if (i < 0) throw std::invalid_argument("point not on path");
    return NEPath(p, steps_.substr(i));
}

NEPath NEPath::concat(const NEPath& tail) const {
    if (end() != tail.start()) throw std::invalid_argument("paths do not meet");
    return NEPath(start_, steps_ + tail.steps_);
}

NEPath NEPath::translated(const GridPoint& v) const { return NEPath(start_ + v, steps_); }

Region::Region(NEPath lower, NEPath upper) : lower_(std::move(lower)), upper_(std::move(upper)) {
    GridPoint e = lower_.end();
    if (lower_.start() != GridPoint{0, 0} || upper_.start() != GridPoint{0, 0} ||
        upper_.end() != e)
        throw std::invalid_argument("boundary paths must share endpoints (0,0) and (a,b)");
    a_ = e.x;
    b_ = e.y;
    auto le = lower_.east_heights(), ue = upper_.east_heights();
    for (int h = 0; h < a_; ++h)
        if (le[h] > ue[h]) throw std::invalid_argument("lower boundary crosses above upper");
    col_lo_.assign(a_ + 1, 0);
    col_hi_.assign(a_ + 1, b_);
    for (int x = 1; x <= a_; ++x) col_lo_[x] = le[x - 1];
    for (int x = 0; x < a_; ++x) col_hi_[x] = ue[x];
}

Region Region::from_east_heights(int a, int b, const std::vector<int>& lower,
                                 const std::vector<int>& upper) {
    return Region(NEPath::from_east_heights(a, b, lower),
                  NEPath::from_east_heights(a, b, upper));
}

Region Region::full_rectangle(int a, int b) {
    return from_east_heights(a, b, std::vector<int>(a, 0), std::vector<int>(a, b));
}

bool Region::contains_path(const NEPath& path) const {
    GridPoint p = path.start();
    if (!contains(p)) return false;
    for (char c : path.steps()) {
        p = p + (c == 'E' ? kEast : kNorth);
        if (!contains(p)) return false;
    }
    return true;
}

namespace {
bool on_path(const NEPath& path, int a, const GridPoint& p) {
    // Boundary paths run (0,0) -> (a,b); column x of the path spans the
    // heights between its surrounding East steps.
    if (p.x < 0 || p.x > a) return false;
    auto eh = path.east_heights();
    int lo = (p.x == 0) ? 0 : eh[p.x - 1];
    int hi = (p.x == a) ? path.end().y : eh[p.x];
    return p.y >= lo && p.y <= hi;
}
}  // namespace

bool Region::on_lower_boundary(const GridPoint& p) const { return on_path(lower_, a_, p); }
bool Region::on_upper_boundary(const GridPoint& p) const { return on_path(upper_, a_, p); }

bool Region::segment_on_lower_boundary(const GridPoint& p1, const GridPoint& p2) const {
    if (p1.x != p2.x) throw std::invalid_argument("segment endpoints must share a column");
    for (int y = std::min(p1.y, p2.y); y <= std::max(p1.y, p2.y); ++y)
        if (!on_lower_boundary({p1.x, y})) return false;
    return true;
}

bool Region::segment_on_upper_boundary(const GridPoint& p1, const GridPoint& p2) const {
    if (p1.x != p2.x) throw std::invalid_argument("segment endpoints must share a column");
    for (int y = std::min(p1.y, p2.y); y <= std::max(p1.y, p2.y); ++y)
        if (!on_upper_boundary({p1.x, y})) return false;
    return true;
}

namespace {
NEPath transpose_path(const NEPath& p) {
    std::string s = p.steps();
    for (char& c : s) c = (c == 'E') ? 'N' : 'E';
    return NEPath({p.start().y, p.start().x}, std::move(s));
}
}  // namespace

Region Region::transposed() const {
    // Reflection swaps the roles of the two boundaries.
    return Region(transpose_path(upper_), transpose_path(lower_));
}

Region region_of(const Poset& p, const ChainPartition& cp) {
    cp.validate(p);
    int a = cp.a(), b = cp.b();
    std::vector<int> lo(a, 0), hi(a, b);
    for (int h = 1; h <= a; ++h) {
        int alpha = cp.c1[h - 1];
        for (int k = 1; k <= b; ++k) {
            int beta = cp.c2[k - 1];
            if (p.less(alpha, beta)) hi[h - 1] = std::min(hi[h - 1], k - 1);
            if (p.less(beta, alpha)) lo[h - 1] = std::max(lo[h - 1], k);
        }
    }
    return Region::from_east_heights(a, b, lo, hi);
}

NEPath path_of_extension(const Poset& p, const ChainPartition& cp, const LinearExtension& L) {
    if (!L.respects(p)) throw std::invalid_argument("not a linear extension of the poset");
    int n = p.size();
    std::vector<char> in_c1(n + 1, 0);
    for (int u : cp.c1) in_c1[u] = 1;
    std::string steps(n, 'N');
    for (int u = 1; u <= n; ++u)
        if (in_c1[u]) steps[L.rank(u) - 1] = 'E';
    NEPath path({0, 0}, std::move(steps));
    assert(region_of(p, cp).contains_path(path));
    return path;
}

LinearExtension extension_of_path(const Poset& p, const ChainPartition& cp, const NEPath& path) {
    Region r = region_of(p, cp);
    if (path.start() != GridPoint{0, 0} || path.end() != GridPoint{r.a(), r.b()} ||
        !r.contains_path(path))
        throw std::invalid_argument("not an extension path");
    std::vector<int> ranks(p.size() + 1, 0);
    int i = 0, j = 0, t = 0;
    for (char c : path.steps()) {
        ++t;
        if (c == 'E') ranks[cp.c1[i++]] = t;
        else ranks[cp.c2[j++]] = t;
    }
    LinearExtension L(ranks);
    assert(L.respects(p));
    return L;
}

std::pair<Poset, ChainPartition> poset_of_region(const Region& r) {
    int a = r.a(), b = r.b(), n = a + b;
    auto lo = r.lower().east_heights(), hi = r.upper().east_heights();
    std::vector<std::pair<int, int>> rel;
    for (int i = 1; i < a; ++i) rel.emplace_back(i, i + 1);
    for (int j = 1; j < b; ++j) rel.emplace_back(a + j, a + j + 1);
    for (int h = 1; h <= a; ++h) {
        for (int k = 1; k <= b; ++k) {
            if (k > hi[h - 1]) rel.emplace_back(h, a + k);      // alpha_h below beta_k
            if (k <= lo[h - 1]) rel.emplace_back(a + k, h);     // beta_k below alpha_h
        }
    }
    Poset p = Poset::from_relations(n, rel);
    ChainPartition cp;
    for (int i = 1; i <= a; ++i) cp.c1.push_back(i);
    for (int j = 1; j <= b; ++j) cp.c2.push_back(a + j);
    return {std::move(p), std::move(cp)};
}

void enumerate_regions(int a, int b, const std::function<bool(const Region&)>& visit) {
    if (a < 0 || b < 0) throw std::invalid_argument("region dimensions must be nonnegative");
    std::vector<int> lo(a, 0);
    while (true) {
        std::vector<int> hi = lo;
        while (true) {
            if (!visit(Region::from_east_heights(a, b, lo, hi))) return;
            // next nondecreasing hi with hi[i] >= lo[i]
            int i = a - 1;
            for (; i >= 0; --i) {
                if (hi[i] < b) {
                    ++hi[i];
                    for (int j = i + 1; j < a; ++j) hi[j] = std::max(hi[i], lo[j]);
                    break;
                }
            }
            if (i < 0) break;
        }
        // next nondecreasing lo
        int i = a - 1;
        for (; i >= 0; --i) {
            if (lo[i] < b) {
                ++lo[i];
                for (int j = i + 1; j < a; ++j) lo[j] = lo[i];
                break;
            }
        }
        if (i < 0) break;
    }
}

long long count_regions(int a, int b) {
    long long c = 0;
    enumerate_regions(a, b, [&](const Region&) {
        ++c;
        return true;
    });
    return c;
}

std::string ascii_art(const Region& r, const NEPath* overlay) {
    int a = r.a(), b = r.b();
    auto lo = r.lower().east_heights(), hi = r.upper().east_heights();
    std::ostringstream os;
    // Cell (h,k), 1-based, drawn row b down to row 1; column 0 handled by paths.
    for (int k = b; k >= 1; --k) {
        for (int h = 1; h <= a; ++h) {
            char c;
            if (k > hi[h - 1]) c = '^';
            else if (k <= lo[h - 1]) c = 'v';
            else c = '#';
            os << c;
        }
        os << '\n';
    }
    if (a == 0) os << "(empty strip)\n";
    os << "lower: " << (a + b == 0 ? "" : r.lower().steps()) << '\n';
    os << "upper: " << (a + b == 0 ? "" : r.upper().steps()) << '\n';
    if (overlay) os << "path:  " << overlay->steps() << '\n';
    return os.str();
}

}  // namespace lepath
