#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "lepath/qpoly.hpp"

namespace lepath {

// Dense int64 polynomial in q for the exhaustive sweep engines, where every
// coefficient is a path/extension count far below 2^62.  Exactness is
// guarded, not assumed: arithmetic checks for overflow and throws.
class DensePoly {
public:
    DensePoly() = default;

    static DensePoly constant(long long v) {
        DensePoly p;
        if (v != 0) p.c_ = {v};
        return p;
    }
    static DensePoly monomial(long exp, long long v = 1) {
        DensePoly p;
        if (v != 0) {
            p.off_ = exp;
            p.c_ = {v};
        }
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    long min_exp() const { return off_; }
    long max_exp() const { return off_ + (long)c_.size() - 1; }
    long long coeff(long e) const {
        if (e < off_ || e > max_exp()) return 0;
        return c_[e - off_];
    }

    void add_term(long exp, long long v);
    DensePoly& operator+=(const DensePoly& o) { return axpy(o, 1); }
    DensePoly& operator-=(const DensePoly& o) { return axpy(o, -1); }
    friend DensePoly operator+(DensePoly a, const DensePoly& b) { a += b; return a; }
    friend DensePoly operator-(DensePoly a, const DensePoly& b) { a -= b; return a; }
    friend DensePoly operator*(const DensePoly& a, const DensePoly& b);

    bool operator==(const DensePoly& o) const { return off_ == o.off_ && c_ == o.c_; }
    bool operator!=(const DensePoly& o) const { return !(*this == o); }

    bool is_nonneg() const {
        for (long long v : c_)
            if (v < 0) return false;
        return true;
    }

    DensePoly shifted(long d) const {
        DensePoly r = *this;
        if (!r.c_.empty()) r.off_ += d;
        return r;
    }

    long long eval_one() const;

    // Exact halving; throws if any coefficient is odd.
    DensePoly half() const;

    QPoly to_qpoly() const;

private:
    DensePoly& axpy(const DensePoly& o, long long scale);
    void normalize();

    long off_ = 0;
    std::vector<long long> c_;
};

}  // namespace lepath
