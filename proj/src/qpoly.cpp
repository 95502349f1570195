#include "lepath/qpoly.hpp"

#include <sstream>

namespace lepath {

QPoly QPoly::monomial(long exp, mpz_class coeff) {
    QPoly p;
    if (coeff != 0) p.terms_.emplace_back(exp, std::move(coeff));
    return p;
}

bool QPoly::is_nonneg() const {
    for (const auto& [e, c] : terms_)
        if (c < 0) return false;
    return true;
}

mpz_class QPoly::coeff(long exp) const {
    for (const auto& [e, c] : terms_)
        if (e == exp) return c;
    return 0;
}

mpz_class QPoly::eval_one() const {
    mpz_class s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
}

void QPoly::add_term(long exp, const mpz_class& coeff) {
    if (coeff == 0) return;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), exp,
                               [](const auto& t, long e) { return t.first < e; });
    if (it != terms_.end() && it->first == exp) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    } else {
        terms_.insert(it, {exp, coeff});
    }
}

QPoly& QPoly::operator+=(const QPoly& o) {
    std::vector<std::pair<long, mpz_class>> out;
    out.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.cbegin();
    auto b = o.terms_.cbegin();
    while (a != terms_.cend() || b != o.terms_.cend()) {
        if (b == o.terms_.cend() || (a != terms_.cend() && a->first < b->first)) {
            out.push_back(*a++);
        } else if (a == terms_.cend() || b->first < a->first) {
            out.push_back(*b++);
        } else {
            mpz_class c = a->second + b->second;
            if (c != 0) out.emplace_back(a->first, std::move(c));
            ++a; ++b;
        }
    }
    terms_ = std::move(out);
    return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
    std::vector<std::pair<long, mpz_class>> out;
    out.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.cbegin();
    auto b = o.terms_.cbegin();
    while (a != terms_.cend() || b != o.terms_.cend()) {
        if (b == o.terms_.cend() || (a != terms_.cend() && a->first < b->first)) {
            out.push_back(*a++);
        } else if (a == terms_.cend() || b->first < a->first) {
            out.emplace_back(b->first, -b->second);
            ++b;
        } else {
            mpz_class c = a->second - b->second;
            if (c != 0) out.emplace_back(a->first, std::move(c));
            ++a; ++b;
        }
    }
    terms_ = std::move(out);
    return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
    QPoly r;
    if (a.terms_.empty() || b.terms_.empty()) return r;
    std::map<long, mpz_class> acc;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            acc[ea + eb] += ca * cb;
    for (auto& [e, c] : acc)
        if (c != 0) r.terms_.emplace_back(e, std::move(c));
    return r;
}

QPoly QPoly::shifted(long shift, bool* ok) const {
    QPoly r;
    bool fine = true;
    r.terms_.reserve(terms_.size());
    for (const auto& [e, c] : terms_) {
        if (e + shift < 0) { fine = false; continue; }
        r.terms_.emplace_back(e + shift, c);
    }
    if (ok) *ok = fine;
    return r;
}

std::string QPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        first = false;
        mpz_class ac = abs(c);
        if (ac != 1 || e == 0) os << ac.get_str();
        if (e > 0) {
            if (ac != 1) os << "*";
            os << "q";
            if (e > 1) os << "^" << e;
        }
    }
    return os.str();
}

std::map<long, std::string> QPoly::coeff_strings() const {
    std::map<long, std::string> m;
    for (const auto& [e, c] : terms_) m[e] = c.get_str();
    return m;
}

}  // namespace lepath
