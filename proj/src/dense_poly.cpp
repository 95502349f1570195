#include "lepath/dense_poly.hpp"

namespace lepath {

namespace {
constexpr long long kCoeffBound = (1ll << 62);

void check_fits(__int128 v) {
    if (v >= kCoeffBound || v <= -kCoeffBound)
        throw std::overflow_error("DensePoly coefficient exceeds the int64 budget");
}
}  // namespace

void DensePoly::add_term(long exp, long long v) {
    if (v == 0) return;
    if (c_.empty()) {
        off_ = exp;
        c_ = {v};
        return;
    }
    if (exp < off_) {
        c_.insert(c_.begin(), off_ - exp, 0);
        off_ = exp;
    } else if (exp > max_exp()) {
        c_.resize(exp - off_ + 1, 0);
    }
    check_fits((__int128)c_[exp - off_] + v);
    c_[exp - off_] += v;
    normalize();
}

DensePoly& DensePoly::axpy(const DensePoly& o, long long scale) {
    if (o.is_zero()) return *this;
    if (is_zero()) {
        *this = o;
        if (scale != 1)
            for (auto& v : c_) v *= scale;
        return *this;
    }
    long lo = std::min(off_, o.off_), hi = std::max(max_exp(), o.max_exp());
    std::vector<long long> out(hi - lo + 1, 0);
    for (size_t i = 0; i < c_.size(); ++i) out[off_ + (long)i - lo] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) {
        __int128 v = (__int128)out[o.off_ + (long)i - lo] + (__int128)scale * o.c_[i];
        check_fits(v);
        out[o.off_ + (long)i - lo] = (long long)v;
    }
    off_ = lo;
    c_ = std::move(out);
    normalize();
    return *this;
}

DensePoly operator*(const DensePoly& a, const DensePoly& b) {
    DensePoly r;
    if (a.is_zero() || b.is_zero()) return r;
    std::vector<__int128> acc(a.c_.size() + b.c_.size() - 1, 0);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j)
            acc[i + j] += (__int128)a.c_[i] * b.c_[j];
    }
    r.off_ = a.off_ + b.off_;
    r.c_.resize(acc.size());
    for (size_t i = 0; i < acc.size(); ++i) {
        check_fits(acc[i]);
        r.c_[i] = (long long)acc[i];
    }
    r.normalize();
    return r;
}

long long DensePoly::eval_one() const {
    __int128 s = 0;
    for (long long v : c_) s += v;
    check_fits(s);
    return (long long)s;
}

DensePoly DensePoly::half() const {
    DensePoly r = *this;
    for (auto& v : r.c_) {
        if (v % 2 != 0) throw std::logic_error("DensePoly::half on odd coefficient");
        v /= 2;
    }
    return r;
}

QPoly DensePoly::to_qpoly() const {
    QPoly q;
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) q.add_term(off_ + (long)i, mpz_class((long)c_[i]));
    return q;
}

void DensePoly::normalize() {
    size_t lead = 0;
    while (lead < c_.size() && c_[lead] == 0) ++lead;
    if (lead == c_.size()) {
        c_.clear();
        off_ = 0;
        return;
    }
    if (lead > 0) {
        c_.erase(c_.begin(), c_.begin() + lead);
        off_ += (long)lead;
    }
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

}  // namespace lepath
