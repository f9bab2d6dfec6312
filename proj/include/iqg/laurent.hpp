#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "iqg/rational.hpp"

namespace iqg {

/** Laurent polynomial in one variable q with rational coefficients,
 *  stored sparsely as exponent -> coefficient with no zero entries.
 *  Equality of the maps is equality of the polynomials. */
class LaurentPoly {
    std::map<long, BigRational> c_;

    void put(long e, BigRational v) {
        if (v != 0) c_.emplace(e, std::move(v));
    }

public:
    LaurentPoly() = default;
    LaurentPoly(const BigRational& r) { put(0, r); }
    LaurentPoly(long n) { put(0, BigRational(n)); }
    LaurentPoly(int n) { put(0, BigRational(n)); }

    static LaurentPoly monomial(const BigRational& coeff, long exp) {
        LaurentPoly p;
        p.put(exp, coeff);
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_.begin()->first == 0 && c_.begin()->second == 1; }

    /* lowest and highest occurring exponent; only meaningful when nonzero */
    long lowest() const {
        if (is_zero()) throw std::domain_error("LaurentPoly: exponent range of zero");
        return c_.begin()->first;
    }
    long highest() const {
        if (is_zero()) throw std::domain_error("LaurentPoly: exponent range of zero");
        return c_.rbegin()->first;
    }

    const std::map<long, BigRational>& coeffs() const { return c_; }

    BigRational coeff(long e) const {
        auto it = c_.find(e);
        return it == c_.end() ? BigRational(0) : it->second;
    }

    BigRational leading_coeff() const { return coeff(highest()); }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (const auto& [e, v] : o.c_) {
            auto it = c_.find(e);
            if (it == c_.end()) {
                c_.emplace(e, v);
            } else {
                it->second += v;
                if (it->second == 0) c_.erase(it);
            }
        }
        return *this;
    }

    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (const auto& [e, v] : o.c_) {
            auto it = c_.find(e);
            if (it == c_.end()) {
                c_.emplace(e, -v);
            } else {
                it->second -= v;
                if (it->second == 0) c_.erase(it);
            }
        }
        return *this;
    }

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

    LaurentPoly operator-() const {
        LaurentPoly r;
        for (const auto& [e, v] : c_) r.c_.emplace(e, -v);
        return r;
    }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (const auto& [ea, va] : a.c_)
            for (const auto& [eb, vb] : b.c_) {
                auto it = r.c_.find(ea + eb);
                if (it == r.c_.end()) {
                    r.c_.emplace(ea + eb, va * vb);
                } else {
                    it->second += va * vb;
                    if (it->second == 0) r.c_.erase(it);
                }
            }
        return r;
    }

    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    /* multiply by the unit q^k */
    LaurentPoly shifted(long k) const {
        LaurentPoly r;
        for (const auto& [e, v] : c_) r.c_.emplace(e + k, v);
        return r;
    }

    LaurentPoly scaled(const BigRational& s) const {
        LaurentPoly r;
        if (s == 0) return r;
        for (const auto& [e, v] : c_) r.c_.emplace(e, v * s);
        return r;
    }

    /* the substitution q -> q^{-1} */
    LaurentPoly mirrored() const {
        LaurentPoly r;
        for (const auto& [e, v] : c_) r.c_.emplace(-e, v);
        return r;
    }

    LaurentPoly pow(unsigned n) const {
        LaurentPoly r(1), base = *this;
        while (n) {
            if (n & 1) r *= base;
            base = (n >>= 1) ? base * base : base;
        }
        return r;
    }

    /** Signed content: the rational c with (*this)/c integer-primitive and
     *  positive leading coefficient.  Zero for the zero polynomial. */
    BigRational content() const {
        BigRational g = 0;
        for (const auto& [e, v] : c_) g = rational_gcd(g, v);
        if (!is_zero() && leading_coeff() < 0) g = -g;
        return g;
    }

    bool operator==(const LaurentPoly&) const = default;
};

namespace detail {

/* Dense ordinary-polynomial helpers backing gcd and exact division.
 * Index k holds the coefficient of q^k; the vector carries no trailing
 * zeros, and the zero polynomial is the empty vector. */
using Dense = std::vector<BigRational>;

inline void dense_trim(Dense& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

inline Dense dense_of(const LaurentPoly& p, long drop) {
    Dense v;
    if (p.is_zero()) return v;
    v.assign(static_cast<size_t>(p.highest() - drop) + 1, BigRational(0));
    for (const auto& [e, c] : p.coeffs()) v[static_cast<size_t>(e - drop)] = c;
    return v;
}

inline LaurentPoly laurent_of(const Dense& v, long shift) {
    LaurentPoly p;
    for (size_t k = 0; k < v.size(); ++k)
        if (v[k] != 0) p += LaurentPoly::monomial(v[k], static_cast<long>(k) + shift);
    return p;
}

/* classic long division over the rationals: a = q*b + r with deg r < deg b */
inline void dense_divmod(const Dense& a, const Dense& b, Dense& quo, Dense& rem) {
    if (b.empty()) throw std::domain_error("polynomial division by zero");
    rem = a;
    quo.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, BigRational(0));
    while (rem.size() >= b.size()) {
        BigRational f = rem.back() / b.back();
        size_t shift = rem.size() - b.size();
        quo[shift] = f;
        for (size_t k = 0; k < b.size(); ++k) rem[shift + k] -= f * b[k];
        dense_trim(rem);
    }
    dense_trim(quo);
}

inline void dense_make_monic(Dense& v) {
    if (v.empty() || v.back() == 1) return;
    BigRational lead = v.back();
    for (auto& c : v) c /= lead;
}

}  // namespace detail

/** Greatest common divisor in the Laurent ring, where every c*q^k is a
 *  unit.  The representative returned is the monic ordinary polynomial
 *  with nonzero constant term, and gcd(0, p) normalizes p the same way. */
inline LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() && b.is_zero()) return LaurentPoly();
    auto normalize = [](const LaurentPoly& p) {
        detail::Dense v = detail::dense_of(p, p.lowest());
        detail::dense_make_monic(v);
        return detail::laurent_of(v, 0);
    };
    if (a.is_zero()) return normalize(b);
    if (b.is_zero()) return normalize(a);
    detail::Dense u = detail::dense_of(a, a.lowest());
    detail::Dense v = detail::dense_of(b, b.lowest());
    while (!v.empty()) {
        detail::Dense quo, rem;
        detail::dense_divmod(u, v, quo, rem);
        detail::dense_make_monic(rem);
        u = std::move(v);
        v = std::move(rem);
    }
    detail::dense_make_monic(u);
    return detail::laurent_of(u, 0);
}

/** Exact quotient a/b; throws when b is zero or does not divide a. */
inline LaurentPoly laurent_divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw std::domain_error("LaurentPoly: division by zero");
    if (a.is_zero()) return LaurentPoly();
    long sa = a.lowest(), sb = b.lowest();
    detail::Dense quo, rem;
    detail::dense_divmod(detail::dense_of(a, sa), detail::dense_of(b, sb), quo, rem);
    if (!rem.empty()) throw std::domain_error("LaurentPoly: inexact division");
    return detail::laurent_of(quo, sa - sb);
}

}  // namespace iqg
