#pragma once

#include <array>
#include <cstdlib>

#include "iqg/serre.hpp"

namespace iqg {

/** Normal-form monomial F_f Ktilde^k E_e: an F-word, an integer vector
 *  of Ktilde exponents, and an E-word. */
struct UTerm {
    Word f;
    std::vector<int> k;
    Word e;

    bool operator==(const UTerm&) const = default;
};

/* F-word deglex, then K-exponents lexicographically, then E-word deglex */
struct UTermOrder {
    bool operator()(const UTerm& a, const UTerm& b) const {
        if (a.f != b.f) return deglex_less(a.f, b.f);
        if (a.k != b.k) return a.k < b.k;
        return deglex_less(a.e, b.e);
    }
};

class UAlgebra;

/** Algebra element in triangular normal form: a finite combination of
 *  UTerm monomials with Serre-reduced words, tied to the UAlgebra that
 *  produced it (which must outlive it).  A default-constructed element
 *  is the zero of any algebra and combines with everything. */
class UElement {
    friend class UAlgebra;

    const UAlgebra* alg_ = nullptr;
    std::map<UTerm, RatFunc, UTermOrder> terms_;

public:
    UElement() = default;

    static const UAlgebra* common_algebra(const UElement& a, const UElement& b) {
        if (a.alg_ && b.alg_ && a.alg_ != b.alg_)
            throw std::logic_error("UElement: mixing elements of different algebras");
        return a.alg_ ? a.alg_ : b.alg_;
    }

    const UAlgebra* algebra() const { return alg_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<UTerm, RatFunc, UTermOrder>& terms() const { return terms_; }

    void add_term(const UTerm& t, const RatFunc& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(t);
        if (it == terms_.end()) {
            terms_.emplace(t, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    UElement& operator+=(const UElement& o) {
        alg_ = common_algebra(*this, o);
        for (const auto& [t, c] : o.terms_) add_term(t, c);
        return *this;
    }

    UElement& operator-=(const UElement& o) {
        alg_ = common_algebra(*this, o);
        for (const auto& [t, c] : o.terms_) add_term(t, -c);
        return *this;
    }

    friend UElement operator+(UElement a, const UElement& b) { return a += b; }
    friend UElement operator-(UElement a, const UElement& b) { return a -= b; }

    UElement operator-() const {
        UElement r = *this;
        for (auto& [t, c] : r.terms_) c = -c;
        return r;
    }

    friend UElement operator*(const RatFunc& s, const UElement& u) {
        UElement r;
        r.alg_ = u.alg_;
        if (s.is_zero()) return r;
        for (const auto& [t, c] : u.terms_) r.terms_.emplace(t, s * c);
        return r;
    }

    friend UElement operator*(const UElement& u, const RatFunc& s) { return s * u; }

    friend UElement operator*(const UElement& a, const UElement& b);

    bool operator==(const UElement& o) const {
        common_algebra(*this, o);
        return terms_ == o.terms_;
    }

    std::string to_string() const;
};

/** The quantized enveloping algebra of one Cartan datum together with
 *  its parameters: elements are produced from the generators and
 *  multiplied into triangular normal form.  All internal caches are
 *  compute-once, so a const algebra is safe to share across threads. */
class UAlgebra {
    CartanDatum datum_;
    IParams params_;
    int cap_;
    SerreIdeal ideal_;
    MemoTable<std::pair<Word, int>, UElement> emoves_;
    MemoTable<std::array<int, 3>, UElement> bpow_memo_;

    static std::string env_cache_dir() {
        const char* v = std::getenv("IQG_CACHE_DIR");
        return v ? v : "";
    }

    /* exponent s with Ktilde^mu E_i = q^s E_i Ktilde^mu (and q^{-s} for F_i) */
    long kmove_exponent(const std::vector<int>& mu, int i) const {
        long s = 0;
        for (int l = 0; l < datum_.rank(); ++l)
            s += static_cast<long>(mu[l]) * datum_.eps[l] * datum_.a(l, i);
        return s;
    }

    UElement raw_term(const Word& f, const std::vector<int>& k, const Word& e,
                      const RatFunc& c) const {
        UElement u;
        u.alg_ = this;
        if (!c.is_zero()) u.terms_.emplace(UTerm{f, k, e}, c);
        return u;
    }

    /* E^e F_j rewritten through the commutation relation, memoized */
    std::shared_ptr<const UElement> emove(const Word& e, int j) const {
        return emoves_.get({e, j}, [&]() -> UElement {
            UElement out;
            out.alg_ = this;
            if (e.empty()) return raw_term({j}, std::vector<int>(datum_.rank(), 0), {}, 1);
            const int head = e.front();
            const Word rest(e.begin() + 1, e.end());
            const auto tail = emove(rest, j);
            for (const auto& [t, c] : tail->terms_) {
                RatFunc moved = c * qpow(-kmove_exponent(t.k, head));
                Word e2;
                e2.reserve(t.e.size() + 1);
                e2.push_back(head);
                e2.insert(e2.end(), t.e.begin(), t.e.end());
                out.add_term(UTerm{t.f, t.k, e2}, moved);
                if (!t.f.empty() && head == j) {
                    /* E_i F_i - F_i E_i = (Ktilde_i - Ktilde_i^{-1})/(q_i - q_i^{-1}) */
                    RatFunc d = qi_pow(head, 1) - qi_pow(head, -1);
                    std::vector<int> up = t.k, dn = t.k;
                    ++up[head];
                    --dn[head];
                    out.add_term(UTerm{{}, up, t.e}, c / d);
                    out.add_term(UTerm{{}, dn, t.e}, -(c / d));
                }
            }
            return out;
        });
    }

    /* u * F_j without Serre reduction; words only concatenate here */
    UElement raw_mul_f(const UElement& u, int j) const {
        UElement out;
        out.alg_ = this;
        for (const auto& [t, c] : u.terms_) {
            const auto moved = emove(t.e, j);
            for (const auto& [m, cm] : moved->terms_) {
                long s = 0;
                for (int letter : m.f) s += kmove_exponent(t.k, letter);
                Word f = t.f;
                f.insert(f.end(), m.f.begin(), m.f.end());
                std::vector<int> k = t.k;
                for (int l = 0; l < datum_.rank(); ++l) k[l] += m.k[l];
                out.add_term(UTerm{f, k, m.e}, c * cm * qpow(-s));
            }
        }
        return out;
    }

    /* accumulate c * F_f K^k E_e into out, reducing both words */
    void add_reduced(UElement& out, const RatFunc& c, const Word& f, const std::vector<int>& k,
                     const Word& e) const {
        if (c.is_zero()) return;
        check_cap(f.size(), cap_);
        check_cap(e.size(), cap_);
        const auto rf = ideal_.reduce_word(f);
        const auto re = ideal_.reduce_word(e);
        for (const auto& [wf, cf] : rf)
            for (const auto& [we, ce] : re) out.add_term(UTerm{wf, k, we}, c * cf * ce);
    }

public:
    UAlgebra(CartanDatum datum, IParams params, int cap = 12, std::string cache_dir = env_cache_dir())
        : datum_(std::move(datum)), params_(std::move(params)), cap_(cap),
          ideal_(datum_, params_.serre_on, cap_, std::move(cache_dir)) {
        if (static_cast<int>(params_.varsigma.size()) != datum_.rank())
            throw std::invalid_argument("UAlgebra: one varsigma per index required");
        for (const auto& v : params_.varsigma)
            if (v.is_zero()) throw std::invalid_argument("UAlgebra: varsigma must be nonzero");
        if (cap_ < 1) throw std::invalid_argument("UAlgebra: degree cap must be positive");
    }

    UAlgebra(const UAlgebra&) = delete;
    UAlgebra& operator=(const UAlgebra&) = delete;

    const CartanDatum& datum() const { return datum_; }
    const IParams& params() const { return params_; }
    const SerreIdeal& ideal() const { return ideal_; }

    /* cache slot for the parameter-dependent divided powers, keyed by
     * (index, order, parity); the algebra fixes varsigma and the serre
     * switch, so the key is complete */
    const MemoTable<std::array<int, 3>, UElement>& divided_cache() const { return bpow_memo_; }
    int rank() const { return datum_.rank(); }
    int cap() const { return cap_; }
    bool serre_on() const { return params_.serre_on; }
    RatFunc qi_pow(int i, long e) const { return datum_.qi_pow(i, e); }
    const RatFunc& varsigma(int i) const { return params_.varsigma[i]; }

    UElement zero() const {
        UElement u;
        u.alg_ = this;
        return u;
    }
    UElement one() const { return scalar(1); }
    UElement scalar(const RatFunc& c) const {
        return raw_term({}, std::vector<int>(datum_.rank(), 0), {}, c);
    }

    UElement E(int i) const { return raw_term({}, std::vector<int>(datum_.rank(), 0), {i}, 1); }
    UElement F(int i) const { return raw_term({i}, std::vector<int>(datum_.rank(), 0), {}, 1); }

    UElement Kpow(const std::vector<int>& mu) const { return raw_term({}, mu, {}, 1); }
    UElement Kpow(int i, int n) const {
        std::vector<int> mu(datum_.rank(), 0);
        mu[i] = n;
        return Kpow(mu);
    }
    UElement Ktilde(int i) const { return Kpow(i, 1); }
    UElement Ktilde_inv(int i) const { return Kpow(i, -1); }

    /* Echeck_i = varsigma_i E_i Ktilde_i^{-1} */
    UElement Echeck(int i) const {
        std::vector<int> mu(datum_.rank(), 0);
        mu[i] = -1;
        return raw_term({}, mu, {i}, varsigma(i) * qpow(-kmove_exponent(mu, i)));
    }

    /* B_i = F_i + varsigma_i E_i Ktilde_i^{-1} */
    UElement B(int i) const { return F(i) + Echeck(i); }

    /* divided powers of the triangular generators */
    UElement F_divided(int i, int n) const {
        check_cap(static_cast<size_t>(n), cap_);
        return raw_term(Word(static_cast<size_t>(n), i), std::vector<int>(datum_.rank(), 0), {},
                        RatFunc(1) / qfact(n, datum_.eps[i]));
    }
    UElement E_divided(int i, int n) const {
        check_cap(static_cast<size_t>(n), cap_);
        return raw_term({}, std::vector<int>(datum_.rank(), 0), Word(static_cast<size_t>(n), i),
                        RatFunc(1) / qfact(n, datum_.eps[i]));
    }
    UElement Echeck_divided(int i, int n) const {
        UElement r = one();
        const UElement ec = Echeck(i);
        for (int k = 0; k < n; ++k) r = r * ec;
        return (RatFunc(1) / qfact(n, datum_.eps[i])) * r;
    }

    /** A single reduced monomial as an element; words are Serre-reduced
     *  on the way in, so any term of an existing element is accepted. */
    UElement element(const UTerm& t, const RatFunc& c) const {
        UElement out = zero();
        add_reduced(out, c, t.f, t.k, t.e);
        return out;
    }

    /** Re-normalize a term map coming from a compatible algebra (same
     *  datum and serre switch, possibly different parameters). */
    UElement import(const UElement& foreign) const {
        if (foreign.alg_ && foreign.alg_ != this) {
            const UAlgebra& o = *foreign.alg_;
            if (!(o.datum_ == datum_) || o.serre_on() != serre_on())
                throw std::logic_error("UAlgebra: import from an incompatible algebra");
        }
        UElement out = zero();
        for (const auto& [t, c] : foreign.terms_) out.add_term(t, c);
        return out;
    }

    UElement mul(const UElement& a, const UElement& b) const {
        UElement out = zero();
        for (const auto& [ta, ca] : a.terms_) {
            for (const auto& [tb, cb] : b.terms_) {
                /* F_{ta.f} K^{ta.k} (E^{ta.e} F_{tb.f}) K^{tb.k} E^{tb.e} */
                UElement mid = raw_term({}, std::vector<int>(datum_.rank(), 0), ta.e, 1);
                for (int j : tb.f) mid = raw_mul_f(mid, j);
                for (const auto& [tm, cm] : mid.terms_) {
                    long s = 0;
                    for (int letter : tm.f) s += kmove_exponent(ta.k, letter);
                    for (int letter : tm.e) s += kmove_exponent(tb.k, letter);
                    Word f = ta.f;
                    f.insert(f.end(), tm.f.begin(), tm.f.end());
                    Word e = tm.e;
                    e.insert(e.end(), tb.e.begin(), tb.e.end());
                    std::vector<int> k = ta.k;
                    for (int l = 0; l < datum_.rank(); ++l) k[l] += tm.k[l] + tb.k[l];
                    add_reduced(out, ca * cb * cm * qpow(-s), f, k, e);
                }
            }
        }
        return out;
    }
};

inline UElement operator*(const UElement& a, const UElement& b) {
    const UAlgebra* alg = UElement::common_algebra(a, b);
    if (!alg) return UElement();
    return alg->mul(a, b);
}

/* integer power of a nonzero scalar */
inline RatFunc ipow(const RatFunc& base, long e) {
    RatFunc b = e < 0 ? base.inverse() : base;
    RatFunc r(1);
    for (long k = e < 0 ? -e : e; k > 0; --k) r *= b;
    return r;
}

inline std::string UElement::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [t, c] : terms_) {
        std::string mono;
        for (int letter : t.f) mono += (mono.empty() ? "F" : "*F") + std::to_string(letter + 1);
        for (size_t l = 0; l < t.k.size(); ++l) {
            if (t.k[l] == 0) continue;
            mono += (mono.empty() ? "K" : "*K") + std::to_string(l + 1);
            if (t.k[l] != 1) mono += "^" + std::to_string(t.k[l]);
        }
        for (int letter : t.e) mono += (mono.empty() ? "E" : "*E") + std::to_string(letter + 1);

        std::string piece;
        bool negative = false;
        if (c.is_one()) {
            piece = mono.empty() ? "1" : mono;
        } else if ((-c).is_one()) {
            negative = true;
            piece = mono.empty() ? "1" : mono;
        } else {
            piece = "(" + c.to_string() + ")";
            if (!mono.empty()) piece += "*" + mono;
        }
        if (first) {
            out += negative ? "-" + piece : piece;
            first = false;
        } else {
            out += (negative ? " - " : " + ") + piece;
        }
    }
    return out;
}

}  // namespace iqg
