#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "lepath/qpoly.hpp"

namespace lepath {

// Sparse polynomial in q_1..q_arity with big-integer coefficients.
// Exponent vectors are stored densely; arity is capped at 16 since every
// instance we handle has a small first chain.
class MultiPoly {
public:
    static constexpr int kMaxArity = 16;

    MultiPoly() : arity_(0) {}
    explicit MultiPoly(int arity) : arity_(arity) {
        if (arity < 0 || arity > kMaxArity)
            throw std::invalid_argument("MultiPoly arity out of range");
    }

    int arity() const { return arity_; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_nonneg() const;

    void add_term(const std::vector<int>& exps, const mpz_class& coeff);
    mpz_class coeff(const std::vector<int>& exps) const;
    mpz_class eval_all_ones() const;

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { a += b; return a; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { a -= b; return a; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);

    bool operator==(const MultiPoly& o) const {
        return arity_ == o.arity_ && coeffs_ == o.coeffs_;
    }
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    // Substitute q_i := q^{weights[i-1]}.  With weights (a, a-1, ..., 1) this
    // collapses the multivariate weight to the univariate statistic
    // sum_i L(alpha_i); see to_qpoly().
    QPoly specialize(const std::vector<long>& weights) const;

    // The substitution q_i := q^{arity+1-i}, which reproduces the q-weight
    // exactly (setting q_i := q instead would yield the statistic L(alpha_a),
    // not the weight).
    QPoly to_qpoly() const;

    const std::map<std::vector<int>, mpz_class>& terms() const { return coeffs_; }

    std::string str() const;

private:
    int arity_;
    std::map<std::vector<int>, mpz_class> coeffs_;
};

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);

}  // namespace lepath
