#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>

#include "iqg/memo.hpp"
#include "iqg/words.hpp"

namespace iqg {

/** Homogeneous element of the free algebra on the index set: a finite
 *  coordinate vector over the words of one multidegree. */
struct GradedVector {
    Weight weight;
    std::map<Word, RatFunc> coords;

    bool is_zero() const { return coords.empty(); }

    void add(const Word& w, const RatFunc& c) {
        if (c.is_zero()) return;
        auto it = coords.find(w);
        if (it == coords.end()) {
            coords.emplace(w, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) coords.erase(it);
        }
    }

    GradedVector& axpy(const RatFunc& c, const GradedVector& o) {
        for (const auto& [w, v] : o.coords) add(w, c * v);
        return *this;
    }

    bool operator==(const GradedVector&) const = default;
};

/** The alternating sum over r+s = 1-a_ij of (-1)^r E_i^(r) E_j E_i^(s),
 *  written on words: the word i^r j i^s carries (-1)^r / ([r]_i! [s]_i!). */
inline GradedVector serre_element(const CartanDatum& d, int i, int j) {
    if (i == j) throw std::invalid_argument("serre_element: indices must differ");
    const int n = 1 - d.a(i, j);
    GradedVector v;
    v.weight.assign(d.rank(), 0);
    v.weight[i] = n;
    v.weight[j] = 1;
    for (int r = 0; r <= n; ++r) {
        const int s = n - r;
        Word w;
        w.insert(w.end(), r, i);
        w.push_back(j);
        w.insert(w.end(), s, i);
        RatFunc c = RatFunc(1) / (qfact(r, d.eps[i]) * qfact(s, d.eps[i]));
        v.add(w, r % 2 ? -c : c);
    }
    return v;
}

/** Reduced echelon basis of one graded piece of the two-sided ideal the
 *  Serre elements generate.  Rows are fully reduced against each other,
 *  each row's pivot (its deglex-greatest word) has coefficient 1, and
 *  rows are listed by descending pivot. */
struct IdealBasis {
    Weight weight;
    std::vector<GradedVector> rows;
    std::map<Word, size_t> pivot_row;
};

namespace detail {

/* dense working row over the word list of one weight */
using EchelonRow = std::vector<LaurentPoly>;

inline int row_pivot(const EchelonRow& r) {
    for (int k = static_cast<int>(r.size()) - 1; k >= 0; --k)
        if (!r[k].is_zero()) return k;
    return -1;
}

/* divide out the rational content and the common power of q, signing the
 * result so the cell at `pivot` has positive leading coefficient */
inline void row_normalize(EchelonRow& r, int pivot) {
    if (pivot < 0) return;
    BigRational content = 0;
    long shift = 0;
    bool have_shift = false;
    for (const auto& cell : r) {
        if (cell.is_zero()) continue;
        for (const auto& [e, c] : cell.coeffs()) content = rational_gcd(content, c);
        long lo = cell.lowest();
        shift = have_shift ? std::min(shift, lo) : lo;
        have_shift = true;
    }
    if (r[pivot].leading_coeff() < 0) content = -content;
    for (auto& cell : r) {
        if (cell.is_zero()) continue;
        cell = cell.scaled(BigRational(1) / content).shifted(-shift);
    }
}

/* r <- lead*r - c*other, fraction-free over the integer Laurent ring */
inline void row_combine(EchelonRow& r, const LaurentPoly& lead, const LaurentPoly& c,
                        const EchelonRow& other) {
    for (size_t k = 0; k < r.size(); ++k) {
        r[k] = lead * r[k] - c * other[k];
    }
}

}  // namespace detail

/** Graded basis cache for the Serre ideal of one datum.  Bases are
 *  computed at most once per weight and shared immutably, so concurrent
 *  readers agree; with serre imposition off every basis is empty.  An
 *  optional directory persists computed bases across runs. */
class SerreIdeal {
    CartanDatum datum_;
    bool serre_on_;
    int cap_;
    std::string cache_dir_;
    MemoTable<Weight, IdealBasis> bases_;

    /* every subweight mu <= nu, lexicographic order */
    static void subweights(const Weight& nu, std::vector<Weight>& out) {
        Weight mu(nu.size(), 0);
        for (;;) {
            out.push_back(mu);
            size_t k = 0;
            while (k < nu.size()) {
                if (mu[k] < nu[k]) {
                    ++mu[k];
                    break;
                }
                mu[k] = 0;
                ++k;
            }
            if (k == nu.size()) return;
        }
    }

    IdealBasis compute(const Weight& nu) const {
        IdealBasis out;
        out.weight = nu;
        if (!serre_on_) return out;
        const std::vector<Word> words = enumerate_words(nu, cap_);
        std::map<Word, int> index;
        for (size_t k = 0; k < words.size(); ++k) index.emplace(words[k], static_cast<int>(k));

        std::map<int, detail::EchelonRow> rows;  // pivot index -> reduced row

        auto insert = [&](detail::EchelonRow row) {
            int p = detail::row_pivot(row);
            while (p >= 0) {
                auto it = rows.find(p);
                if (it == rows.end()) break;
                detail::row_combine(row, it->second[p], row[p], it->second);
                p = detail::row_pivot(row);
                detail::row_normalize(row, p);
            }
            if (p < 0) return;
            /* clear the cells at pivot columns below the new pivot, so the
             * stored tail never meets another row's pivot */
            for (const auto& [rp, r] : rows) {
                if (row[rp].is_zero()) continue;
                detail::row_combine(row, r[rp], row[rp], r);
            }
            detail::row_normalize(row, p);
            for (auto& [rp, r] : rows) {
                if (r[p].is_zero()) continue;
                detail::row_combine(r, row[p], r[p], row);
                detail::row_normalize(r, rp);
            }
            rows.emplace(p, std::move(row));
        };

        for (int i = 0; i < datum_.rank(); ++i) {
            for (int j = 0; j < datum_.rank(); ++j) {
                if (i == j) continue;
                const GradedVector s = serre_element(datum_, i, j);
                Weight rest(nu.size());
                bool fits = true;
                for (size_t k = 0; k < nu.size(); ++k) {
                    rest[k] = nu[k] - s.weight[k];
                    if (rest[k] < 0) fits = false;
                }
                if (!fits) continue;
                /* clear the factorial denominators once, the placements
                 * below only move these integral cells around */
                const LaurentPoly cden = serre_common_den(s);
                std::vector<std::pair<Word, LaurentPoly>> cleared;
                for (const auto& [sw, sc] : s.coords)
                    cleared.emplace_back(sw, sc.num() * laurent_divide_exact(cden, sc.den()));
                std::vector<Weight> lefts;
                subweights(rest, lefts);
                for (const Weight& lw : lefts) {
                    Weight rw(nu.size());
                    for (size_t k = 0; k < nu.size(); ++k) rw[k] = rest[k] - lw[k];
                    for (const Word& w1 : enumerate_words(lw, cap_)) {
                        for (const Word& w2 : enumerate_words(rw, cap_)) {
                            detail::EchelonRow row(words.size());
                            for (const auto& [sw, cell] : cleared) {
                                Word w = w1;
                                w.insert(w.end(), sw.begin(), sw.end());
                                w.insert(w.end(), w2.begin(), w2.end());
                                row[index.at(w)] += cell;
                            }
                            insert(std::move(row));
                        }
                    }
                }
            }
        }

        for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
            const detail::EchelonRow& r = it->second;
            const LaurentPoly& lead = r[it->first];
            GradedVector g;
            g.weight = nu;
            for (size_t k = 0; k < r.size(); ++k)
                if (!r[k].is_zero()) g.coords.emplace(words[k], RatFunc(r[k], lead));
            out.pivot_row.emplace(words[static_cast<size_t>(it->first)], out.rows.size());
            out.rows.push_back(std::move(g));
        }
        return out;
    }

    /* least common denominator of a graded vector's coordinates */
    static LaurentPoly serre_common_den(const GradedVector& v) {
        LaurentPoly l(1);
        for (const auto& [w, c] : v.coords) {
            LaurentPoly g = laurent_gcd(l, c.den());
            l = l * laurent_divide_exact(c.den(), g);
        }
        return l;
    }

    std::string cache_path(const Weight& nu) const;
    bool load_cached(const Weight& nu, IdealBasis& out) const;
    void store_cached(const IdealBasis& basis) const;

public:
    SerreIdeal(CartanDatum datum, bool serre_on, int cap, std::string cache_dir = "")
        : datum_(std::move(datum)), serre_on_(serre_on), cap_(cap),
          cache_dir_(std::move(cache_dir)) {}

    const CartanDatum& datum() const { return datum_; }
    bool serre_on() const { return serre_on_; }
    int cap() const { return cap_; }

    std::shared_ptr<const IdealBasis> basis(const Weight& nu) const {
        return bases_.get(nu, [&] {
            if (serre_on_ && !cache_dir_.empty()) {
                IdealBasis cached;
                if (load_cached(nu, cached)) return cached;
            }
            IdealBasis fresh = compute(nu);
            if (serre_on_ && !cache_dir_.empty()) store_cached(fresh);
            return fresh;
        });
    }

    /** The word modulo the ideal, as a combination of non-pivot words.
     *  Words that are not pivots pass through untouched. */
    std::map<Word, RatFunc> reduce_word(const Word& w) const {
        std::map<Word, RatFunc> out;
        if (!serre_on_) {
            out.emplace(w, RatFunc(1));
            return out;
        }
        auto b = basis(weight_of(w, datum_.rank()));
        auto it = b->pivot_row.find(w);
        if (it == b->pivot_row.end()) {
            out.emplace(w, RatFunc(1));
            return out;
        }
        for (const auto& [u, c] : b->rows[it->second].coords)
            if (u != w) out.emplace(u, -c);
        return out;
    }

    /** Linear idempotent projection killing exactly the ideal's graded
     *  piece: subtract each row scaled by the coordinate at its pivot. */
    GradedVector reduce(const GradedVector& v) const {
        if (!serre_on_) return v;
        auto b = basis(v.weight);
        GradedVector out = v;
        for (const auto& [pw, rix] : b->pivot_row) {
            auto it = out.coords.find(pw);
            if (it == out.coords.end()) continue;
            RatFunc c = it->second;
            out.axpy(-c, b->rows[rix]);
        }
        return out;
    }

    long quotient_dimension(const Weight& nu) const {
        return static_cast<long>(enumerate_words(nu, cap_).size()) -
               static_cast<long>(basis(nu)->rows.size());
    }
};

/* ---- on-disk persistence of computed bases ---- */

inline std::string SerreIdeal::cache_path(const Weight& nu) const {
    std::string key = datum_.summary() + "|";
    for (size_t k = 0; k < nu.size(); ++k) key += (k ? "," : "") + std::to_string(nu[k]);
    unsigned long long h = 1469598103934665603ULL;
    for (char c : key) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ULL;
    }
    std::ostringstream name;
    name << std::hex << h;
    return cache_dir_ + "/serre-" + name.str() + ".txt";
}

inline bool SerreIdeal::load_cached(const Weight& nu, IdealBasis& out) const {
    std::ifstream in(cache_path(nu));
    if (!in) return false;
    try {
        std::string line;
        if (!std::getline(in, line) || line != "iqg-serre-basis v1") return false;
        if (!std::getline(in, line) || line != datum_.summary()) return false;
        out.weight = nu;
        out.rows.clear();
        out.pivot_row.clear();
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            GradedVector g;
            g.weight = nu;
            std::istringstream row(line);
            std::string entry;
            while (std::getline(row, entry, ';')) {
                size_t colon = entry.find(':');
                if (colon == std::string::npos) return false;
                Word w;
                for (char c : entry.substr(0, colon)) w.push_back(c - '1');
                g.coords.emplace(w, RatFunc::parse(entry.substr(colon + 1)));
            }
            if (g.coords.empty()) return false;
            out.pivot_row.emplace(g.coords.rbegin()->first, out.rows.size());
            out.rows.push_back(std::move(g));
        }
        return true;
    } catch (const std::exception&) {
        return false;
    }
}

inline void SerreIdeal::store_cached(const IdealBasis& basis) const {
    std::error_code ec;
    std::filesystem::create_directories(cache_dir_, ec);
    if (ec) return;
    std::ofstream out(cache_path(basis.weight), std::ios::trunc);
    if (!out) return;
    out << "iqg-serre-basis v1\n" << datum_.summary() << "\n";
    for (const auto& row : basis.rows) {
        bool first = true;
        for (const auto& [w, c] : row.coords) {
            out << (first ? "" : ";") << word_string(w) << ':' << c.to_string();
            first = false;
        }
        out << "\n";
    }
}

}  // namespace iqg
