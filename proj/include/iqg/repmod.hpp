#pragma once

#include "iqg/idivided.hpp"
#include "iqg/report.hpp"

namespace iqg {

/** Dense matrix over the coefficient field, just large enough for the
 *  finite-dimensional module checks. */
class QMatrix {
    int rows_ = 0, cols_ = 0;
    std::vector<RatFunc> a_;

public:
    QMatrix() = default;
    QMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

    static QMatrix identity(int n) {
        QMatrix m(n, n);
        for (int k = 0; k < n; ++k) m.at(k, k) = RatFunc(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    RatFunc& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    const RatFunc& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

    bool is_zero() const {
        for (const auto& v : a_)
            if (!v.is_zero()) return false;
        return true;
    }

    friend QMatrix operator+(const QMatrix& x, const QMatrix& y) {
        QMatrix r = x;
        for (size_t k = 0; k < r.a_.size(); ++k) r.a_[k] += y.a_[k];
        return r;
    }

    friend QMatrix operator-(const QMatrix& x, const QMatrix& y) {
        QMatrix r = x;
        for (size_t k = 0; k < r.a_.size(); ++k) r.a_[k] -= y.a_[k];
        return r;
    }

    friend QMatrix operator*(const QMatrix& x, const QMatrix& y) {
        if (x.cols_ != y.rows_) throw std::logic_error("QMatrix: shape mismatch");
        QMatrix r(x.rows_, y.cols_);
        for (int i = 0; i < x.rows_; ++i)
            for (int k = 0; k < x.cols_; ++k) {
                const RatFunc& v = x.at(i, k);
                if (v.is_zero()) continue;
                for (int j = 0; j < y.cols_; ++j) {
                    const RatFunc& w = y.at(k, j);
                    if (!w.is_zero()) r.at(i, j) += v * w;
                }
            }
        return r;
    }

    friend QMatrix operator*(const RatFunc& s, const QMatrix& x) {
        QMatrix r = x;
        for (auto& v : r.a_) v *= s;
        return r;
    }

    static QMatrix kron(const QMatrix& x, const QMatrix& y) {
        QMatrix r(x.rows_ * y.rows_, x.cols_ * y.cols_);
        for (int i = 0; i < x.rows_; ++i)
            for (int j = 0; j < x.cols_; ++j) {
                const RatFunc& v = x.at(i, j);
                if (v.is_zero()) continue;
                for (int k = 0; k < y.rows_; ++k)
                    for (int l = 0; l < y.cols_; ++l)
                        r.at(i * y.rows_ + k, j * y.cols_ + l) = v * y.at(k, l);
            }
        return r;
    }

    bool operator==(const QMatrix&) const = default;

    /* nonzero entries as "(r,c)=value", 1-based, for witnesses */
    std::string to_string() const {
        std::string s;
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                if (!at(i, j).is_zero()) {
                    if (!s.empty()) s += " ";
                    s += "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                         ")=" + at(i, j).to_string();
                }
        return s.empty() ? "0" : s;
    }
};

/** Matrix model of a weight module for the rank-one subalgebra at one
 *  index: actions of E_i, F_i and Ktilde_i^{+-1}, plus the character as
 *  a Laurent polynomial in the formal eigenvalue variable x = q_i. */
struct Rep {
    int index = 0;
    int dim = 0;
    QMatrix E, F, K, Kinv;
    LaurentPoly character;
};

namespace detail {

inline void validate_rep(const UAlgebra& alg, const Rep& m, const std::string& what) {
    const int i = m.index;
    const QMatrix id = QMatrix::identity(m.dim);
    if (!(m.K * m.Kinv == id) || !(m.Kinv * m.K == id))
        throw std::logic_error(what + ": Ktilde is not invertible");
    if (!(m.K * m.E * m.Kinv == alg.qi_pow(i, 2) * m.E))
        throw std::logic_error(what + ": Ktilde E Ktilde^{-1} != q_i^2 E");
    if (!(m.K * m.F * m.Kinv == alg.qi_pow(i, -2) * m.F))
        throw std::logic_error(what + ": Ktilde F Ktilde^{-1} != q_i^{-2} F");
    RatFunc d = alg.qi_pow(i, 1) - alg.qi_pow(i, -1);
    if (!(m.E * m.F - m.F * m.E == d.inverse() * (m.K - m.Kinv)))
        throw std::logic_error(what + ": commutator of E and F is wrong");
}

}  // namespace detail

/** The n+1 dimensional simple highest-weight module at index i, on the
 *  divided-power basis v_k = F_i^(k) v_0:
 *    Ktilde v_k = q_i^{n-2k} v_k, F v_k = [k+1] v_{k+1},
 *    E v_k = [n-k+1] v_{k-1}.
 *  The defining relations and the highest-weight structure are checked
 *  at construction. */
inline Rep module_L(const UAlgebra& alg, int i, int n) {
    if (n < 0) throw std::invalid_argument("module_L: negative highest weight");
    const int eps = alg.datum().eps[i];
    Rep m;
    m.index = i;
    m.dim = n + 1;
    m.E = QMatrix(m.dim, m.dim);
    m.F = QMatrix(m.dim, m.dim);
    m.K = QMatrix(m.dim, m.dim);
    m.Kinv = QMatrix(m.dim, m.dim);
    for (int k = 0; k <= n; ++k) {
        m.K.at(k, k) = alg.qi_pow(i, n - 2 * k);
        m.Kinv.at(k, k) = alg.qi_pow(i, 2 * k - n);
        if (k + 1 <= n) m.F.at(k + 1, k) = qint(k + 1, eps);
        if (k - 1 >= 0) m.E.at(k - 1, k) = qint(n - k + 1, eps);
        m.character += LaurentPoly::monomial(1, n - 2 * k);
    }
    detail::validate_rep(alg, m, "module_L");
    /* highest-weight structure: E kills v_0 and F^k v_0 = [k]! v_k */
    for (int r = 0; r < m.dim; ++r)
        if (!m.E.at(r, 0).is_zero()) throw std::logic_error("module_L: v_0 is not highest");
    QMatrix fk = QMatrix::identity(m.dim);
    for (int k = 1; k <= n; ++k) {
        fk = m.F * fk;
        for (int r = 0; r < m.dim; ++r) {
            RatFunc want = r == k ? qfact(k, eps) : RatFunc(0);
            if (!(fk.at(r, 0) == want))
                throw std::logic_error("module_L: divided-power basis is inconsistent");
        }
    }
    return m;
}

/** Tensor product along the coproduct:
 *    E -> E (x) 1 + Ktilde (x) E, F -> F (x) Ktilde^{-1} + 1 (x) F,
 *  with multiplicative characters. */
inline Rep tensor_rep(const UAlgebra& alg, const Rep& a, const Rep& b) {
    if (a.index != b.index) throw std::invalid_argument("tensor_rep: mixed indices");
    Rep m;
    m.index = a.index;
    m.dim = a.dim * b.dim;
    const QMatrix ia = QMatrix::identity(a.dim), ib = QMatrix::identity(b.dim);
    m.E = QMatrix::kron(a.E, ib) + QMatrix::kron(a.K, b.E);
    m.F = QMatrix::kron(a.F, b.Kinv) + QMatrix::kron(ia, b.F);
    m.K = QMatrix::kron(a.K, b.K);
    m.Kinv = QMatrix::kron(a.Kinv, b.Kinv);
    m.character = a.character * b.character;
    detail::validate_rep(alg, m, "tensor_rep");
    return m;
}

/** Evaluate an element on the module.  Every letter and every Ktilde
 *  exponent of the element must live at the module's index. */
inline QMatrix act(const UElement& u, const Rep& m) {
    QMatrix out(m.dim, m.dim);
    for (const auto& [t, c] : u.terms()) {
        for (int letter : t.f)
            if (letter != m.index) throw std::invalid_argument("act: letter off the module index");
        for (int letter : t.e)
            if (letter != m.index) throw std::invalid_argument("act: letter off the module index");
        for (size_t l = 0; l < t.k.size(); ++l)
            if (static_cast<int>(l) != m.index && t.k[l] != 0)
                throw std::invalid_argument("act: Ktilde exponent off the module index");
        QMatrix acc = QMatrix::identity(m.dim);
        for (size_t r = 0; r < t.f.size(); ++r) acc = acc * m.F;
        int ke = t.k[static_cast<size_t>(m.index)];
        const QMatrix& kmat = ke >= 0 ? m.K : m.Kinv;
        for (int r = 0; r < (ke >= 0 ? ke : -ke); ++r) acc = acc * kmat;
        for (size_t r = 0; r < t.e.size(); ++r) acc = acc * m.E;
        out = out + c * acc;
    }
    return out;
}

/** The divided power of order kn+1 with parity label kn kills the
 *  k-fold tensor power of the n+1 dimensional module. */
inline VerificationReport verify_annihilation(const UAlgebra& alg, int i, int n, int k) {
    Stopwatch clock;
    std::string cp = "i=" + std::to_string(i + 1) + ",n=" + std::to_string(n) +
                     ",k=" + std::to_string(k);
    Rep rep = module_L(alg, i, n);
    for (int t = 1; t < k; ++t) rep = tensor_rep(alg, rep, module_L(alg, i, n));
    const UElement u = idivided_power(alg, i, k * n + 1, parity_of(static_cast<long>(k) * n));
    QMatrix img = act(u, rep);
    std::string witness;
    if (!img.is_zero()) witness = "nonzero action: " + img.to_string();
    return finish_report(alg, "annihilation", cp, std::move(witness), clock);
}

/** Mixed version: the order sum(w)+1 divided power with parity label
 *  sum(w) kills L(w_1) (x) ... (x) L(w_k). */
inline VerificationReport verify_mixed_annihilation(const UAlgebra& alg, int i,
                                                    const std::vector<int>& weights) {
    Stopwatch clock;
    std::string cp = "i=" + std::to_string(i + 1) + ",w=";
    long n = 0;
    for (size_t t = 0; t < weights.size(); ++t) {
        cp += (t ? "+" : "") + std::to_string(weights[t]);
        n += weights[t];
    }
    if (weights.empty()) throw std::invalid_argument("verify_mixed_annihilation: empty weights");
    Rep rep = module_L(alg, i, weights[0]);
    for (size_t t = 1; t < weights.size(); ++t)
        rep = tensor_rep(alg, rep, module_L(alg, i, weights[t]));
    const UElement u = idivided_power(alg, i, static_cast<int>(n) + 1, parity_of(n));
    QMatrix img = act(u, rep);
    std::string witness;
    if (!img.is_zero()) witness = "nonzero action: " + img.to_string();
    return finish_report(alg, "mixed-annihilation", cp, std::move(witness), clock);
}

}  // namespace iqg
