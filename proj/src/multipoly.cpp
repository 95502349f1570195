#include "lepath/multipoly.hpp"

#include <sstream>

namespace lepath {

bool MultiPoly::is_nonneg() const {
    for (const auto& [e, c] : coeffs_)
        if (c < 0) return false;
    return true;
}

void MultiPoly::add_term(const std::vector<int>& exps, const mpz_class& coeff) {
    if ((int)exps.size() != arity_)
        throw std::invalid_argument("MultiPoly exponent arity mismatch");
    if (coeff == 0) return;
    auto it = coeffs_.find(exps);
    if (it == coeffs_.end()) {
        coeffs_.emplace(exps, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) coeffs_.erase(it);
    }
}

mpz_class MultiPoly::coeff(const std::vector<int>& exps) const {
    auto it = coeffs_.find(exps);
    return it == coeffs_.end() ? mpz_class{0} : it->second;
}

mpz_class MultiPoly::eval_all_ones() const {
    mpz_class s = 0;
    for (const auto& [e, c] : coeffs_) s += c;
    return s;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    if (arity_ != o.arity_) {
        if (is_zero()) arity_ = o.arity_;
        else if (!o.is_zero()) throw std::invalid_argument("MultiPoly arity mismatch");
    }
    for (const auto& [e, c] : o.coeffs_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    if (arity_ != o.arity_) {
        if (is_zero()) arity_ = o.arity_;
        else if (!o.is_zero()) throw std::invalid_argument("MultiPoly arity mismatch");
    }
    for (const auto& [e, c] : o.coeffs_) add_term(e, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    if (a.arity_ != b.arity_ && !a.is_zero() && !b.is_zero())
        throw std::invalid_argument("MultiPoly arity mismatch");
    MultiPoly r(a.is_zero() ? b.arity_ : a.arity_);
    std::vector<int> e(r.arity_);
    for (const auto& [ea, ca] : a.coeffs_) {
        for (const auto& [eb, cb] : b.coeffs_) {
            for (int i = 0; i < r.arity_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

QPoly MultiPoly::specialize(const std::vector<long>& weights) const {
    if ((int)weights.size() != arity_)
        throw std::invalid_argument("specialize: weight arity mismatch");
    QPoly q;
    for (const auto& [e, c] : coeffs_) {
        long exp = 0;
        for (int i = 0; i < arity_; ++i) exp += weights[i] * e[i];
        q.add_term(exp, c);
    }
    return q;
}

QPoly MultiPoly::to_qpoly() const {
    std::vector<long> w(arity_);
    for (int i = 0; i < arity_; ++i) w[i] = arity_ - i;
    return specialize(w);
}

std::string MultiPoly::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : coeffs_) {
        if (!first) os << " + ";
        first = false;
        os << c.get_str();
        for (int i = 0; i < arity_; ++i) {
            if (e[i] == 0) continue;
            os << "*q" << (i + 1);
            if (e[i] > 1) os << "^" << e[i];
        }
    }
    return os.str();
}

}  // namespace lepath
