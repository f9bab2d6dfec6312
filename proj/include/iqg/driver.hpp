#pragma once

#include <algorithm>
#include <atomic>
#include <functional>
#include <set>
#include <thread>

#include "iqg/adjoint.hpp"
#include "iqg/config.hpp"
#include "iqg/repmod.hpp"

namespace iqg {

/** One line of the verification report. */
struct CaseRecord {
    std::string id;       // catalog id plus case parameters
    std::string claim;
    std::string datum;
    std::string params;
    std::string outcome;  // verified, refuted, or error
    std::string witness;
    long long elapsed_ms = 0;
};

namespace detail {

inline std::string record_field(std::string s) {
    for (char& c : s)
        if (c == '\t' || c == '\n' || c == '\r') c = ' ';
    const size_t limit = 2000;
    if (s.size() > limit) s = s.substr(0, limit) + "...";
    return s;
}

}  // namespace detail

/** Tab-separated name=value line; every record is self-contained. */
inline std::string format_record(const CaseRecord& r) {
    std::string s = "case=" + detail::record_field(r.id);
    s += "\tclaim=" + detail::record_field(r.claim);
    s += "\tdatum=" + detail::record_field(r.datum);
    s += "\tparams=" + detail::record_field(r.params);
    s += "\toutcome=" + r.outcome;
    s += "\telapsed_ms=" + std::to_string(r.elapsed_ms);
    s += "\twitness=" + detail::record_field(r.witness);
    return s;
}

/** One unit of verification work, named by catalog id plus parameters. */
struct CaseTask {
    std::string id;
    std::function<VerificationReport()> run;
};

/** The case catalog, in report order. */
inline const std::vector<std::string>& catalog_ids() {
    static const std::vector<std::string> ids = {
        "lemma31", "thm32", "prop33", "eq11",    "prop34", "thm35", "prop36",
        "thm37",   "thm42", "lemma41", "lemma43", "thm44",  "thm45"};
    return ids;
}

namespace detail {

inline std::string task_id(const std::string& cat, const std::string& cp) {
    return cat + "[" + cp + "]";
}

inline std::string index_params(int i) { return "i=" + std::to_string(i + 1); }

inline std::string pair_params(int i, int j) {
    return "i=" + std::to_string(i + 1) + ",j=" + std::to_string(j + 1);
}

/* the heavier order-two family is skipped where the divided-power order
 * would exceed this */
constexpr int kOrderTwoLimit = 6;

inline void expand_one(const UAlgebra& alg, const std::string& cat,
                       std::vector<CaseTask>& out) {
    const int rank = alg.rank();
    auto add = [&](const std::string& cp, std::function<VerificationReport()> fn) {
        out.push_back({task_id(cat, cp), std::move(fn)});
    };

    if (cat == "lemma31") {
        for (int i = 0; i < rank; ++i)
            add(index_params(i) + ",nmax=4",
                [&alg, i] { return verify_antipode_powers(alg, i, 4, 2); });
    } else if (cat == "thm32") {
        for (int i = 0; i < rank; ++i)
            for (int n = 0; n <= 3; ++n)
                add(index_params(i) + ",n=" + std::to_string(n),
                    [&alg, i, n] { return verify_coproduct_components(alg, i, n); });
    } else if (cat == "prop33") {
        for (int i = 0; i < rank; ++i) {
            std::vector<std::pair<std::string, int>> samples;
            if (rank == 1) {
                samples = {{"E", i}, {"FK", i}};
            } else {
                for (int j = 0; j < rank; ++j) {
                    if (j == i) continue;
                    samples.push_back({"E", j});
                    samples.push_back({"FK", j});
                    samples.push_back({"BK", j});
                }
            }
            for (int n = 0; n <= 2; ++n)
                for (const auto& [kind, j] : samples) {
                    std::string label = kind + std::to_string(j + 1);
                    add(index_params(i) + ",n=" + std::to_string(n) + ",u=" + label,
                        [&alg, i, n, kind = kind, j, label] {
                            UElement u = kind == "E"    ? alg.E(j)
                                         : kind == "FK" ? alg.F(j) * alg.Ktilde(j)
                                                        : alg.B(j) * alg.Ktilde(j);
                            return verify_adjoint_power(alg, i, n, u, label);
                        });
                }
        }
    } else if (cat == "eq11") {
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < rank; ++j) {
                if (i == j) continue;
                add(pair_params(i, j),
                    [&alg, i, j] { return verify_classical_serre_adjoint(alg, i, j); });
            }
    } else if (cat == "prop34" || cat == "prop36") {
        const int n = cat == "prop34" ? 1 : 2;
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < rank; ++j) {
                if (i == j || serre_order(alg, i, j, n) > kOrderTwoLimit) continue;
                add(pair_params(i, j) + ",n=" + std::to_string(n),
                    [&alg, i, j, n] { return verify_serre_bridge(alg, i, j, n); });
            }
    } else if (cat == "thm35" || cat == "thm37") {
        const int n = cat == "thm35" ? 1 : 2;
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < rank; ++j) {
                if (i == j || serre_order(alg, i, j, n) > kOrderTwoLimit) continue;
                add(pair_params(i, j) + ",n=" + std::to_string(n),
                    [&alg, i, j, n] { return verify_serre_equivalence(alg, i, j, n); });
            }
    } else if (cat == "thm42") {
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < rank; ++j) {
                if (i == j) continue;
                add(pair_params(i, j), [&alg, i, j] { return verify_iserre(alg, i, j); });
            }
    } else if (cat == "lemma41") {
        for (int i = 0; i < rank; ++i)
            for (int n = 0; n <= 3; ++n)
                add(index_params(i) + ",n=" + std::to_string(n) + ",k=1",
                    [&alg, i, n] { return verify_annihilation(alg, i, n, 1); });
    } else if (cat == "lemma43") {
        const std::vector<std::pair<int, int>> nk = {{1, 2}, {2, 2}};
        for (int i = 0; i < rank; ++i)
            for (const auto& [n, k] : nk)
                add(index_params(i) + ",n=" + std::to_string(n) + ",k=" + std::to_string(k),
                    [&alg, i, n, k] { return verify_annihilation(alg, i, n, k); });
    } else if (cat == "thm44") {
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < rank; ++j) {
                if (i == j || serre_order(alg, i, j, 2) > kOrderTwoLimit) continue;
                add(pair_params(i, j) + ",n=2",
                    [&alg, i, j] { return verify_serre_lusztig(alg, i, j, 2); });
            }
    } else if (cat == "thm45") {
        for (int i = 0; i < rank; ++i) {
            if (rank == 2) {
                const int j = 1 - i;
                add(index_params(i) + ",js=" + std::to_string(j + 1),
                    [&alg, i, j] { return verify_mixed(alg, i, {j}); });
                continue;
            }
            for (int j1 = 0; j1 < rank; ++j1)
                for (int j2 = 0; j2 < rank; ++j2) {
                    if (j1 == i || j2 == i || j1 == j2) continue;
                    long n = alg.datum().a(i, j1) + alg.datum().a(i, j2);
                    if (1 - n > kOrderTwoLimit) continue;
                    add(index_params(i) + ",js=" + std::to_string(j1 + 1) + "+" +
                            std::to_string(j2 + 1),
                        [&alg, i, j1, j2] { return verify_mixed(alg, i, {j1, j2}); });
                }
        }
    } else {
        throw std::invalid_argument("unknown case id '" + cat + "'");
    }
}

}  // namespace detail

/** Expand the selected catalog ids (empty selection means all) over the
 *  algebra's data into concrete tasks, in catalog order. */
inline std::vector<CaseTask> expand_catalog(const UAlgebra& alg,
                                            const std::vector<std::string>& selection) {
    std::set<std::string> wanted(selection.begin(), selection.end());
    for (const std::string& id : wanted)
        if (std::find(catalog_ids().begin(), catalog_ids().end(), id) == catalog_ids().end())
            throw std::invalid_argument("unknown case id '" + id + "'");
    std::vector<CaseTask> tasks;
    for (const std::string& cat : catalog_ids())
        if (wanted.empty() || wanted.count(cat)) detail::expand_one(alg, cat, tasks);
    return tasks;
}

/** Run the tasks on up to `jobs` worker threads.  Results keep the task
 *  order; a thrown exception becomes an error record. */
inline std::vector<CaseRecord> run_cases(std::vector<CaseTask> tasks, int jobs) {
    std::vector<CaseRecord> records(tasks.size());
    if (jobs < 1) jobs = 1;
    jobs = std::min<size_t>(jobs, tasks.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (;;) {
            size_t k = next.fetch_add(1);
            if (k >= tasks.size()) return;
            CaseRecord& rec = records[k];
            rec.id = tasks[k].id;
            try {
                VerificationReport rep = tasks[k].run();
                rec.claim = rep.claim;
                rec.datum = rep.datum;
                rec.params = rep.params;
                rec.outcome = rep.verified ? "verified" : "refuted";
                rec.witness = rep.witness;
                rec.elapsed_ms = rep.elapsed_ms;
            } catch (const std::exception& e) {
                rec.outcome = "error";
                rec.witness = e.what();
            }
        }
    };
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }
    return records;
}

inline bool all_verified(const std::vector<CaseRecord>& records) {
    for (const CaseRecord& r : records)
        if (r.outcome != "verified") return false;
    return true;
}

}  // namespace iqg
