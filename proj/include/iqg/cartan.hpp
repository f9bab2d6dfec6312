#pragma once

#include <string>
#include <vector>

#include "iqg/ratfunc.hpp"

namespace iqg {

/** Symmetrizable generalized Cartan datum of rank 1..4, given by the
 *  symmetric pairing matrix i.j on the index set.  The diagonal entries
 *  are positive even, so eps_i = (i.i)/2 and a_ij = 2(i.j)/(i.i) are
 *  integers with a_ii = 2, a_ij <= 0 off the diagonal, and
 *  a_ij eps_i = a_ji eps_j. */
struct CartanDatum {
    std::vector<std::vector<int>> pairing;
    std::vector<int> eps;
    std::vector<std::vector<int>> cartan;

    int rank() const { return static_cast<int>(eps.size()); }

    /* a_ij */
    int a(int i, int j) const { return cartan[i][j]; }

    /* q_i = q^{eps_i} */
    RatFunc qi(int i) const { return qpow(eps[i]); }
    RatFunc qi_pow(int i, long e) const { return qpow(eps[i] * e); }

    std::string summary() const {
        std::string s = "[";
        for (int i = 0; i < rank(); ++i) {
            s += i ? ";" : "";
            for (int j = 0; j < rank(); ++j)
                s += (j ? "," : "") + std::to_string(pairing[i][j]);
        }
        return s + "]";
    }

    bool operator==(const CartanDatum&) const = default;
};

struct CartanError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/** Validate a pairing matrix and derive eps and the Cartan matrix.
 *  Rejects in order: bad rank, non-square, asymmetry, bad diagonal,
 *  positive or fractional off-diagonal data.  Symmetry of the pairing
 *  already forces a_ij eps_i = a_ji eps_j and a_ij = 0 iff a_ji = 0. */
inline CartanDatum build_datum(const std::vector<std::vector<int>>& pairing) {
    const int n = static_cast<int>(pairing.size());
    if (n < 1 || n > 4)
        throw CartanError("pairing matrix rank " + std::to_string(n) + " outside 1..4");
    for (const auto& row : pairing)
        if (static_cast<int>(row.size()) != n) throw CartanError("pairing matrix is not square");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (pairing[i][j] != pairing[j][i])
                throw CartanError("pairing matrix is not symmetric at (" + std::to_string(i + 1) +
                                  "," + std::to_string(j + 1) + ")");
    CartanDatum d;
    d.pairing = pairing;
    for (int i = 0; i < n; ++i) {
        int ii = pairing[i][i];
        if (ii <= 0 || ii % 2 != 0)
            throw CartanError("diagonal entry " + std::to_string(ii) + " at index " +
                              std::to_string(i + 1) + " is not positive even");
        d.eps.push_back(ii / 2);
    }
    d.cartan.assign(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int num = 2 * pairing[i][j];
            if (num % pairing[i][i] != 0)
                throw CartanError("2(i.j)/(i.i) is not an integer at (" + std::to_string(i + 1) +
                                  "," + std::to_string(j + 1) + ")");
            int a = num / pairing[i][i];
            if (i != j && a > 0)
                throw CartanError("off-diagonal Cartan entry positive at (" +
                                  std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
            d.cartan[i][j] = a;
        }
    return d;
}

/** Parameters attached to the datum: one nonzero scalar per index and
 *  the switch deciding whether the two Serre presentations are imposed. */
struct IParams {
    std::vector<RatFunc> varsigma;
    bool serre_on = true;
};

/* default choice varsigma_i = q_i^{-1} */
inline IParams default_params(const CartanDatum& d) {
    IParams p;
    for (int i = 0; i < d.rank(); ++i) p.varsigma.push_back(d.qi_pow(i, -1));
    return p;
}

}  // namespace iqg
