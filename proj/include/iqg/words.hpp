#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "iqg/cartan.hpp"

namespace iqg {

/* A word in the free monoid on the index set, letters 0-based. */
using Word = std::vector<int>;

/* Multidegree over the index set: entry i counts the letter i. */
using Weight = std::vector<int>;

inline Weight weight_of(const Word& w, int rank) {
    Weight nu(rank, 0);
    for (int letter : w) ++nu[letter];
    return nu;
}

inline long total_degree(const Weight& nu) {
    return std::accumulate(nu.begin(), nu.end(), 0L);
}

/* degree first, then lexicographic in the index order */
inline bool deglex_less(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

struct DegreeCapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline void check_cap(size_t length, int cap) {
    if (length > static_cast<size_t>(cap))
        throw DegreeCapExceeded("word length " + std::to_string(length) +
                                " exceeds the degree cap " + std::to_string(cap));
}

/** All words of the given multidegree in ascending deglex order (they
 *  share one degree, so this is plain lexicographic order). */
inline std::vector<Word> enumerate_words(const Weight& nu, int cap) {
    check_cap(static_cast<size_t>(total_degree(nu)), cap);
    Word w;
    for (size_t i = 0; i < nu.size(); ++i)
        w.insert(w.end(), static_cast<size_t>(nu[i]), static_cast<int>(i));
    std::vector<Word> out;
    do {
        out.push_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

/* 1-based letter string, e.g. {0,1,0} -> "121"; used in diagnostics */
inline std::string word_string(const Word& w) {
    std::string s;
    for (int letter : w) s += std::to_string(letter + 1);
    return s;
}

}  // namespace iqg
