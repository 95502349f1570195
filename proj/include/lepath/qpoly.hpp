#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace lepath {

// Sparse univariate polynomial in q with arbitrary-precision integer
// coefficients.  Counting constructors only ever produce nonnegative
// coefficients; differences of counting polynomials may go negative,
// which is_nonneg() detects.
class QPoly {
public:
    QPoly() = default;
    explicit QPoly(mpz_class constant) {
        if (constant != 0) terms_.emplace_back(0, std::move(constant));
    }

    static QPoly zero() { return QPoly{}; }
    static QPoly one() { return QPoly{mpz_class{1}}; }
    static QPoly monomial(long exp, mpz_class coeff = 1);

    bool is_zero() const { return terms_.empty(); }
    bool is_nonneg() const;
    bool operator==(const QPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const QPoly& o) const { return !(*this == o); }

    // Exponent range; valid only when nonzero.
    long min_exp() const { return terms_.front().first; }
    long max_exp() const { return terms_.back().first; }

    mpz_class coeff(long exp) const;
    const std::vector<std::pair<long, mpz_class>>& terms() const { return terms_; }

    mpz_class eval_one() const;  // value at q = 1

    QPoly& operator+=(const QPoly& o);
    QPoly& operator-=(const QPoly& o);
    friend QPoly operator+(QPoly a, const QPoly& b) { a += b; return a; }
    friend QPoly operator-(QPoly a, const QPoly& b) { a -= b; return a; }
    friend QPoly operator*(const QPoly& a, const QPoly& b);

    void add_term(long exp, const mpz_class& coeff);

    // Multiply by q^shift.  shift may be negative; *ok reports whether all
    // exponents stayed nonnegative (if not, the result is unusable).
    QPoly shifted(long shift, bool* ok = nullptr) const;

    std::string str() const;  // e.g. "3*q^12 + q^11"

    // Decimal-string coefficient map keyed by exponent, for reports.
    std::map<long, std::string> coeff_strings() const;

private:
    // Sorted by exponent ascending, no zero coefficients.
    std::vector<std::pair<long, mpz_class>> terms_;
};

QPoly operator*(const QPoly& a, const QPoly& b);

}  // namespace lepath
