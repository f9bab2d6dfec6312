#pragma once

#include <chrono>
#include <string>

#include "iqg/uelement.hpp"

namespace iqg {

/** Outcome of one machine-checked claim.  The witness is the full
 *  pretty-printed residual and is empty exactly when the claim holds. */
struct VerificationReport {
    std::string case_id;
    std::string datum;
    std::string params;
    std::string claim;
    bool verified = false;
    std::string witness;
    long long elapsed_ms = 0;
};

class Stopwatch {
    std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();

public:
    long long ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - t0_)
            .count();
    }
};

/* one-line echo of the algebra's parameters for report records */
inline std::string params_summary(const UAlgebra& alg) {
    std::string s = "vs=";
    for (int i = 0; i < alg.rank(); ++i) s += (i ? "," : "") + alg.varsigma(i).to_string();
    s += alg.serre_on() ? ";serre=on" : ";serre=off";
    return s;
}

inline VerificationReport finish_report(const UAlgebra& alg, std::string claim,
                                        std::string case_params, std::string witness,
                                        const Stopwatch& clock) {
    VerificationReport r;
    r.claim = std::move(claim);
    r.case_id = r.claim + "[" + case_params + "]";
    r.datum = alg.datum().summary();
    r.params = params_summary(alg) + (case_params.empty() ? "" : ";" + case_params);
    r.verified = witness.empty();
    r.witness = std::move(witness);
    r.elapsed_ms = clock.ms();
    return r;
}

}  // namespace iqg
