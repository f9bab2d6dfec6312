#pragma once

#include <cctype>
#include <sstream>
#include <string>
#include <string_view>

#include "iqg/laurent.hpp"

namespace iqg {

/** Element of the field of rational functions in q, held as a reduced
 *  fraction of Laurent polynomials.  The canonical form fixes the unit
 *  ambiguity of the Laurent ring: the denominator is an ordinary monic
 *  polynomial with nonzero constant term, and numerator and denominator
 *  have no common factor.  Structural equality is then field equality. */
class RatFunc {
    LaurentPoly num_;
    LaurentPoly den_{1};

    /* move q-shifts and the leading coefficient of the denominator into
     * the numerator; assumes the fraction is already reduced */
    void normalize_units() {
        long s = den_.lowest();
        if (s != 0) {
            den_ = den_.shifted(-s);
            num_ = num_.shifted(-s);
        }
        BigRational lead = den_.leading_coeff();
        if (lead != 1) {
            den_ = den_.scaled(BigRational(1) / lead);
            num_ = num_.scaled(BigRational(1) / lead);
        }
    }

    void reduce() {
        if (num_.is_zero()) {
            den_ = LaurentPoly(1);
            return;
        }
        LaurentPoly g = laurent_gcd(num_, den_);
        if (!g.is_one()) {
            num_ = laurent_divide_exact(num_, g);
            den_ = laurent_divide_exact(den_, g);
        }
        normalize_units();
    }

public:
    RatFunc() = default;
    RatFunc(const BigRational& r) : num_(r) {}
    RatFunc(long n) : num_(n) {}
    RatFunc(int n) : num_(n) {}
    RatFunc(const LaurentPoly& p) : num_(p) {}

    RatFunc(const LaurentPoly& num, const LaurentPoly& den) : num_(num), den_(den) {
        if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
        reduce();
    }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        if (a.den_.is_one() && b.den_.is_one()) {
            RatFunc r;
            r.num_ = a.num_ + b.num_;
            return r;
        }
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }

    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
        if (a.den_.is_one() && b.den_.is_one()) {
            RatFunc r;
            r.num_ = a.num_ - b.num_;
            return r;
        }
        return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }

    RatFunc operator-() const {
        RatFunc r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        RatFunc r;
        if (a.is_zero() || b.is_zero()) return r;
        if (a.den_.is_one() && b.den_.is_one()) {
            r.num_ = a.num_ * b.num_;
            return r;
        }
        /* cross-reduce so the product needs no further gcd */
        LaurentPoly an = a.num_, bd = b.den_, bn = b.num_, ad = a.den_;
        if (!bd.is_one()) {
            LaurentPoly g = laurent_gcd(an, bd);
            if (!g.is_one()) {
                an = laurent_divide_exact(an, g);
                bd = laurent_divide_exact(bd, g);
            }
        }
        if (!ad.is_one()) {
            LaurentPoly g = laurent_gcd(bn, ad);
            if (!g.is_one()) {
                bn = laurent_divide_exact(bn, g);
                ad = laurent_divide_exact(ad, g);
            }
        }
        r.num_ = an * bn;
        r.den_ = ad * bd;
        r.normalize_units();
        return r;
    }

    RatFunc inverse() const {
        if (is_zero()) throw std::domain_error("RatFunc: inverse of zero");
        RatFunc r;
        r.num_ = den_;
        r.den_ = num_;
        r.normalize_units();
        return r;
    }

    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    /* the substitution q -> q^{-1}, an involutive field automorphism */
    RatFunc mirrored() const {
        RatFunc r;
        r.num_ = num_.mirrored();
        r.den_ = den_.mirrored();
        r.normalize_units();
        return r;
    }

    bool operator==(const RatFunc&) const = default;

    std::string to_string() const;
    static RatFunc parse(std::string_view text);
};

inline RatFunc qpow(long e) { return RatFunc(LaurentPoly::monomial(1, e)); }

/** [n] at q^eps: (q^{eps n} - q^{-eps n})/(q^{eps} - q^{-eps}), expanded
 *  as the balanced geometric sum so no division is performed.  Odd in n. */
inline RatFunc qint(long n, long eps) {
    LaurentPoly p;
    long m = n < 0 ? -n : n;
    for (long k = 0; k < m; ++k) p += LaurentPoly::monomial(1, eps * (m - 1 - 2 * k));
    return RatFunc(n < 0 ? -p : p);
}

/** [n]! at q^eps; n must be nonnegative */
inline RatFunc qfact(long n, long eps) {
    if (n < 0) throw std::domain_error("qfact: negative argument");
    RatFunc r(1);
    for (long k = 2; k <= n; ++k) r *= qint(k, eps);
    return r;
}

namespace detail {

inline void print_term(std::ostringstream& out, const BigRational& c, long e, bool first) {
    BigRational a = c;
    if (first) {
        if (a < 0) {
            out << '-';
            a = -a;
        }
    } else {
        out << (a < 0 ? '-' : '+');
        if (a < 0) a = -a;
    }
    if (e == 0) {
        out << a.str();
        return;
    }
    if (a != 1) out << a.str() << '*';
    out << 'q';
    if (e != 1) out << '^' << e;
}

inline std::string poly_string(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    /* highest power first */
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
        print_term(out, it->second, it->first, first);
        first = false;
    }
    return out.str();
}

/* Recursive-descent reader for the printed grammar:
 *   expr   := term (('+'|'-') term)*
 *   term   := factor (('*'|'/') factor)*
 *   factor := '-' factor | atom ('^' integer)?
 *   atom   := 'q' | integer | '(' expr ')'
 */
class RatFuncReader {
    std::string_view s_;
    size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("RatFunc parse error at position " + std::to_string(pos_) +
                                    ": " + what);
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    long read_integer() {
        skip_ws();
        size_t start = pos_;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
        size_t digits = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == digits) fail("expected integer");
        return std::stol(std::string(s_.substr(start, pos_ - start)));
    }

    RatFunc atom() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == 'q') {
            ++pos_;
            return qpow(1);
        }
        if (c == '(') {
            ++pos_;
            RatFunc inner = expr();
            if (!eat(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return RatFunc(read_integer());
        fail("expected 'q', integer or '('");
    }

    RatFunc factor() {
        if (eat('-')) return -factor();
        RatFunc base = atom();
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == '^') {
            ++pos_;
            long e = read_integer();
            RatFunc r(1);
            RatFunc b = e < 0 ? base.inverse() : base;
            for (long k = e < 0 ? -e : e; k > 0; --k) r *= b;
            return r;
        }
        return base;
    }

    RatFunc term() {
        RatFunc r = factor();
        for (;;) {
            if (eat('*')) {
                r *= factor();
            } else if (eat('/')) {
                r /= factor();
            } else {
                return r;
            }
        }
    }

    RatFunc expr() {
        RatFunc r = term();
        for (;;) {
            if (eat('+')) {
                r += term();
            } else if (eat('-')) {
                r -= term();
            } else {
                return r;
            }
        }
    }

public:
    explicit RatFuncReader(std::string_view s) : s_(s) {}

    RatFunc read_all() {
        RatFunc r = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("trailing input");
        return r;
    }
};

}  // namespace detail

inline std::string RatFunc::to_string() const {
    if (den_.is_one()) return detail::poly_string(num_);
    return "(" + detail::poly_string(num_) + ")/(" + detail::poly_string(den_) + ")";
}

inline RatFunc RatFunc::parse(std::string_view text) {
    return detail::RatFuncReader(text).read_all();
}

}  // namespace iqg
