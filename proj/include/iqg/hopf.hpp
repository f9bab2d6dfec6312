#pragma once

#include "iqg/uelement.hpp"

namespace iqg {

struct UTermPairOrder {
    bool operator()(const std::pair<UTerm, UTerm>& a, const std::pair<UTerm, UTerm>& b) const {
        UTermOrder lt;
        if (lt(a.first, b.first)) return true;
        if (lt(b.first, a.first)) return false;
        return lt(a.second, b.second);
    }
};

/** Element of the two-fold tensor square, stored as a combination of
 *  pairs of normal-form monomials.  Multiplication is slotwise. */
class TensorElement {
    const UAlgebra* alg_ = nullptr;
    std::map<std::pair<UTerm, UTerm>, RatFunc, UTermPairOrder> terms_;

    static const UAlgebra* common_algebra(const TensorElement& a, const TensorElement& b) {
        if (a.alg_ && b.alg_ && a.alg_ != b.alg_)
            throw std::logic_error("TensorElement: mixing elements of different algebras");
        return a.alg_ ? a.alg_ : b.alg_;
    }

public:
    TensorElement() = default;
    explicit TensorElement(const UAlgebra& alg) : alg_(&alg) {}

    const UAlgebra* algebra() const { return alg_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const auto& terms() const { return terms_; }

    void add_term(const UTerm& l, const UTerm& r, const RatFunc& c) {
        if (c.is_zero()) return;
        auto key = std::make_pair(l, r);
        auto it = terms_.find(key);
        if (it == terms_.end()) {
            terms_.emplace(std::move(key), c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    /** a (x) b expanded bilinearly into monomial pairs. */
    static TensorElement of(const UElement& a, const UElement& b) {
        TensorElement t;
        t.alg_ = UElement::common_algebra(a, b);
        for (const auto& [ta, ca] : a.terms())
            for (const auto& [tb, cb] : b.terms()) t.add_term(ta, tb, ca * cb);
        return t;
    }

    TensorElement& operator+=(const TensorElement& o) {
        alg_ = common_algebra(*this, o);
        for (const auto& [p, c] : o.terms_) add_term(p.first, p.second, c);
        return *this;
    }

    TensorElement& operator-=(const TensorElement& o) {
        alg_ = common_algebra(*this, o);
        for (const auto& [p, c] : o.terms_) add_term(p.first, p.second, -c);
        return *this;
    }

    friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
    friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }

    friend TensorElement operator*(const RatFunc& s, const TensorElement& t) {
        TensorElement r;
        r.alg_ = t.alg_;
        if (s.is_zero()) return r;
        for (const auto& [p, c] : t.terms_) r.terms_.emplace(p, s * c);
        return r;
    }

    friend TensorElement operator*(const TensorElement& a, const TensorElement& b) {
        const UAlgebra* alg = common_algebra(a, b);
        TensorElement out;
        out.alg_ = alg;
        if (!alg) return out;
        for (const auto& [pa, ca] : a.terms_) {
            for (const auto& [pb, cb] : b.terms_) {
                UElement left = alg->element(pa.first, 1) * alg->element(pb.first, 1);
                UElement right = alg->element(pa.second, 1) * alg->element(pb.second, 1);
                out += (ca * cb) * TensorElement::of(left, right);
            }
        }
        return out;
    }

    bool operator==(const TensorElement& o) const {
        common_algebra(*this, o);
        return terms_ == o.terms_;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        auto mono = [](const UTerm& t) {
            UElement u;
            u.add_term(t, RatFunc(1));
            return u.to_string();
        };
        std::string out;
        for (const auto& [p, c] : terms_) {
            if (!out.empty()) out += " + ";
            out += "(" + c.to_string() + ")*[" + mono(p.first) + "](x)[" + mono(p.second) + "]";
        }
        return out;
    }
};

/** Coproduct on the algebra: K^mu -> K^mu (x) K^mu,
 *  E_i -> E_i (x) 1 + Ktilde_i (x) E_i,
 *  F_i -> F_i (x) Ktilde_i^{-1} + 1 (x) F_i,
 *  extended as an algebra map over each normal-form monomial. */
inline TensorElement comult(const UElement& u) {
    const UAlgebra* alg = u.algebra();
    TensorElement out;
    if (!alg) return out;
    out = TensorElement(*alg);
    const std::vector<int> zero_mu(static_cast<size_t>(alg->rank()), 0);

    auto delta_e = [&](int i) {
        TensorElement t(*alg);
        t.add_term(UTerm{{}, zero_mu, {i}}, UTerm{{}, zero_mu, {}}, 1);
        std::vector<int> mu = zero_mu;
        mu[i] = 1;
        t.add_term(UTerm{{}, mu, {}}, UTerm{{}, zero_mu, {i}}, 1);
        return t;
    };
    auto delta_f = [&](int i) {
        TensorElement t(*alg);
        std::vector<int> mu = zero_mu;
        mu[i] = -1;
        t.add_term(UTerm{{i}, zero_mu, {}}, UTerm{{}, mu, {}}, 1);
        t.add_term(UTerm{{}, zero_mu, {}}, UTerm{{i}, zero_mu, {}}, 1);
        return t;
    };

    for (const auto& [t, c] : u.terms()) {
        TensorElement acc(*alg);
        acc.add_term(UTerm{{}, zero_mu, {}}, UTerm{{}, zero_mu, {}}, c);
        for (int j : t.f) acc = acc * delta_f(j);
        if (t.k != zero_mu) {
            TensorElement dk(*alg);
            dk.add_term(UTerm{{}, t.k, {}}, UTerm{{}, t.k, {}}, 1);
            acc = acc * dk;
        }
        for (int i : t.e) acc = acc * delta_e(i);
        out += acc;
    }
    return out;
}

/** Antipode: S(K^mu) = K^{-mu}, S(E_i) = -Ktilde_i^{-1} E_i,
 *  S(F_i) = -F_i Ktilde_i, extended antimultiplicatively. */
inline UElement antipode(const UElement& u) {
    const UAlgebra* alg = u.algebra();
    if (!alg) return UElement();
    UElement out = alg->zero();
    for (const auto& [t, c] : u.terms()) {
        UElement acc = alg->one();
        for (auto it = t.e.rbegin(); it != t.e.rend(); ++it)
            acc = acc * (-(alg->Ktilde_inv(*it) * alg->E(*it)));
        bool ktrivial = true;
        for (int v : t.k) ktrivial &= v == 0;
        if (!ktrivial) {
            std::vector<int> neg = t.k;
            for (int& v : neg) v = -v;
            acc = acc * alg->Kpow(neg);
        }
        for (auto it = t.f.rbegin(); it != t.f.rend(); ++it)
            acc = acc * (-(alg->F(*it) * alg->Ktilde(*it)));
        out += c * acc;
    }
    return out;
}

/** Counit: 1 on K^mu, 0 on every monomial with letters. */
inline RatFunc counit(const UElement& u) {
    RatFunc r;
    for (const auto& [t, c] : u.terms())
        if (t.f.empty() && t.e.empty()) r += c;
    return r;
}

/** Rescaling automorphism: E_i -> lambda E_i, F_i -> lambda^{-1} F_i,
 *  K^mu fixed; a monomial scales by lambda^(#E - #F). */
inline UElement rescale(const RatFunc& lambda, const UElement& u) {
    if (lambda.is_zero()) throw std::domain_error("rescale: lambda must be nonzero");
    const UAlgebra* alg = u.algebra();
    if (!alg) return UElement();
    UElement out = alg->zero();
    for (const auto& [t, c] : u.terms())
        out.add_term(t, c * ipow(lambda, static_cast<long>(t.e.size()) -
                                             static_cast<long>(t.f.size())));
    return out;
}

/** The product over t = 1..n of
 *  (q_i^{4a+4t-4} Ktilde_i^{-2} - 1) / (q_i^{4t} - 1),
 *  a Laurent polynomial in Ktilde_i^{-2} used by the closed formulas. */
inline UElement k_bracket(const UAlgebra& alg, int i, long a, int n) {
    if (n < 0) throw std::invalid_argument("k_bracket: order must be nonnegative");
    UElement out = alg.one();
    for (int t = 1; t <= n; ++t) {
        UElement factor =
            alg.qi_pow(i, 4 * a + 4 * t - 4) * alg.Kpow(i, -2) - alg.one();
        RatFunc den = alg.qi_pow(i, 4 * t) - RatFunc(1);
        out = out * factor * den.inverse();
    }
    return out;
}

}  // namespace iqg
