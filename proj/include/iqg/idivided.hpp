#pragma once

#include "iqg/hopf.hpp"
#include "iqg/report.hpp"

namespace iqg {

/* residue class of an integer modulo 2 */
enum class Parity { even, odd };

inline Parity parity_of(long m) {
    return ((m % 2) + 2) % 2 ? Parity::odd : Parity::even;
}

inline long floor_div(long a, long b) {
    long q = a / b;
    if (a % b != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

/** n-th divided power of B_i at the given parity, built by the two-step
 *  recursion behind the defining products
 *    even:  B_i prod_j (B_i^2 - q_i vs_i [2j]_i^2)   resp.
 *           prod_j (B_i^2 - q_i vs_i [2j-2]_i^2)
 *    odd:   the same with [2j-1]_i^2 in both branches,
 *  each divided by [n]_i!.  Results are memoized in the algebra. */
inline UElement idivided_power(const UAlgebra& alg, int i, int n, Parity p) {
    if (n < 0) throw std::invalid_argument("idivided_power: negative order");
    check_cap(static_cast<size_t>(n), alg.cap());
    return *alg.divided_cache().get({i, n, p == Parity::odd}, [&]() -> UElement {
        if (n == 0) return alg.one();
        if (n == 1) return alg.B(i);
        /* the newest factor of the product uses [n-2] when n has the
         * parity label and [n-1] otherwise */
        const int m = parity_of(n) == p ? n - 2 : n - 1;
        const int eps = alg.datum().eps[i];
        const RatFunc corr = alg.qi_pow(i, 1) * alg.varsigma(i) * qint(m, eps) * qint(m, eps);
        const UElement prev = idivided_power(alg, i, n - 2, p);
        const UElement num = prev * (alg.B(i) * alg.B(i) - alg.scalar(corr));
        return (RatFunc(1) / (qint(n, eps) * qint(n - 1, eps))) * num;
    });
}

/** Closed triangular expansion of the even-parity divided power:
 *    B_{i,even}^{(n)} = sum_{a+2c<=n} k_{i,n,c,a}
 *        F_i^{(n-2c-a)} [h; 1-c+floor((n-1)/2); c]_i Echeck_i^{(a)},
 *    k = (-1)^c q_i^{3c+a(n-2c-a)} (q_i vs_i)^c   for even n,
 *        (-1)^c q_i^{c+a(n-2c-a)} (q_i vs_i)^c    for odd n. */
inline UElement idivided_power_closed(const UAlgebra& alg, int i, int n) {
    if (n < 0) throw std::invalid_argument("idivided_power_closed: negative order");
    check_cap(static_cast<size_t>(n), alg.cap());
    const RatFunc qvs = alg.qi_pow(i, 1) * alg.varsigma(i);
    const long bracket_a = 1 + floor_div(n - 1, 2);
    UElement out = alg.zero();
    for (int c = 0; 2 * c <= n; ++c) {
        for (int a = 0; a + 2 * c <= n; ++a) {
            long expo = (n % 2 == 0 ? 3L : 1L) * c + static_cast<long>(a) * (n - 2 * c - a);
            RatFunc k = alg.qi_pow(i, expo) * ipow(qvs, c);
            if (c % 2) k = -k;
            out += k * (alg.F_divided(i, n - 2 * c - a) *
                        k_bracket(alg, i, bracket_a - c, c) * alg.Echeck_divided(i, a));
        }
    }
    return out;
}

/** Right tensor factor T_{i,n,r} in the coproduct expansion
 *    Delta(B_{i,1-n}^{(n)}) = sum_{r+s=n} B_{i,1-n}^{(s)} (x) T_{i,n,r}:
 *    T = sum_{a+2c<=r} q_i^{c(2c+1)+(r-2c)(r-n)-a(r-2c-a)} (q_i vs_i)^c
 *        Echeck_i^{(a)} [h; -floor((r-1)/2); c]_i Ktilde_i^{r-n} F_i^{(r-2c-a)}. */
inline UElement coproduct_component(const UAlgebra& alg, int i, int n, int r) {
    if (r < 0 || r > n) throw std::invalid_argument("coproduct_component: need 0 <= r <= n");
    const RatFunc qvs = alg.qi_pow(i, 1) * alg.varsigma(i);
    const long bracket_a = -floor_div(r - 1, 2);
    UElement out = alg.zero();
    for (int c = 0; 2 * c <= r; ++c) {
        for (int a = 0; a + 2 * c <= r; ++a) {
            long expo = static_cast<long>(c) * (2 * c + 1) +
                        static_cast<long>(r - 2 * c) * (r - n) -
                        static_cast<long>(a) * (r - 2 * c - a);
            RatFunc t = alg.qi_pow(i, expo) * ipow(qvs, c);
            out += t * (alg.Echeck_divided(i, a) * k_bracket(alg, i, bracket_a, c) *
                        alg.Kpow(i, r - n) * alg.F_divided(i, r - 2 * c - a));
        }
    }
    return out;
}

/** Residual of the component-wise coproduct expansion at order n; the
 *  expansion holds exactly when this is zero. */
inline TensorElement coproduct_components_residual(const UAlgebra& alg, int i, int n) {
    const Parity par = parity_of(1 - n);
    TensorElement rhs(alg);
    for (int r = 0; r <= n; ++r)
        rhs += TensorElement::of(idivided_power(alg, i, n - r, par),
                                 coproduct_component(alg, i, n, r));
    return comult(idivided_power(alg, i, n, par)) - rhs;
}

/** Residual of the antipode form of the same coproduct:
 *    Delta(B_{i,1-n}^{(n)}) = sum_{r+s=n} (-1)^r B_{i,1-n}^{(s)} (x)
 *        Ktilde_i^{-n} xi_{q_i}^{n+1}(S(B_{i,even}^{(r)})). */
inline TensorElement coproduct_antipode_residual(const UAlgebra& alg, int i, int n) {
    const Parity par = parity_of(1 - n);
    const RatFunc lam = alg.qi_pow(i, n + 1);
    TensorElement rhs(alg);
    for (int r = 0; r <= n; ++r) {
        UElement right =
            alg.Kpow(i, -n) * rescale(lam, antipode(idivided_power(alg, i, r, Parity::even)));
        TensorElement part = TensorElement::of(idivided_power(alg, i, n - r, par), right);
        rhs += r % 2 ? -RatFunc(1) * part : part;
    }
    return comult(idivided_power(alg, i, n, par)) - rhs;
}

/** Antipode closed forms on the triangular divided powers and the
 *  Ktilde binomial, for orders up to nmax and binomial offsets
 *  -arange..arange:
 *    S(F^(n))      = (-1)^n q_i^{n(n+1)} Ktilde^n F^(n),
 *    S(Echeck^(n)) = (-1)^n q_i^{n(n-1)} Echeck^(n) Ktilde^n,
 *    S([h;a;n])    = (-1)^n q_i^{2n(n+2a-1)} Ktilde^{2n} [h;1-n-a;n]. */
inline VerificationReport verify_antipode_powers(const UAlgebra& alg, int i, int nmax,
                                                 int arange) {
    Stopwatch clock;
    std::string cp = "i=" + std::to_string(i + 1) + ",nmax=" + std::to_string(nmax);
    std::string witness;
    for (int n = 0; n <= nmax && witness.empty(); ++n) {
        const RatFunc sign(n % 2 ? -1 : 1);
        UElement f = antipode(alg.F_divided(i, n)) -
                     sign * alg.qi_pow(i, n * (n + 1)) * (alg.Kpow(i, n) * alg.F_divided(i, n));
        if (!f.is_zero()) {
            witness = "triangular F order " + std::to_string(n) + ": " + f.to_string();
            break;
        }
        UElement e = antipode(alg.Echeck_divided(i, n)) -
                     sign * alg.qi_pow(i, n * (n - 1)) *
                         (alg.Echeck_divided(i, n) * alg.Kpow(i, n));
        if (!e.is_zero()) {
            witness = "triangular E order " + std::to_string(n) + ": " + e.to_string();
            break;
        }
        for (int a = -arange; a <= arange; ++a) {
            UElement k = antipode(k_bracket(alg, i, a, n)) -
                         sign * alg.qi_pow(i, 2 * n * (n + 2 * a - 1)) *
                             (alg.Kpow(i, 2 * n) * k_bracket(alg, i, 1 - n - a, n));
            if (!k.is_zero()) {
                witness = "binomial a=" + std::to_string(a) + " order " + std::to_string(n) +
                          ": " + k.to_string();
                break;
            }
        }
    }
    return finish_report(alg, "antipode-powers", cp, std::move(witness), clock);
}

/** Both coproduct expansions of the order-n divided power: the
 *  component form and its antipode form. */
inline VerificationReport verify_coproduct_components(const UAlgebra& alg, int i, int n) {
    Stopwatch clock;
    std::string cp = "i=" + std::to_string(i + 1) + ",n=" + std::to_string(n);
    std::string witness;
    TensorElement comp = coproduct_components_residual(alg, i, n);
    if (!comp.is_zero()) witness = "component residual: " + comp.to_string();
    if (witness.empty()) {
        TensorElement anti = coproduct_antipode_residual(alg, i, n);
        if (!anti.is_zero()) witness = "antipode residual: " + anti.to_string();
    }
    return finish_report(alg, "coproduct-components", cp, std::move(witness), clock);
}

}  // namespace iqg
