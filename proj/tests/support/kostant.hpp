#pragma once

#include <set>
#include <vector>

#include "iqg/cartan.hpp"

namespace iqg::testsupport {

/** Positive roots of the datum in simple-root coordinates, grown by
 *  root strings: alpha + alpha_i is a root iff the string through alpha
 *  reaches past it.  Only roots of height <= max_height are produced. */
inline std::vector<std::vector<int>> positive_roots(const CartanDatum& d, int max_height) {
    const int r = d.rank();
    std::set<std::vector<int>> roots;
    std::vector<std::vector<int>> frontier;
    for (int i = 0; i < r; ++i) {
        std::vector<int> e(r, 0);
        e[i] = 1;
        roots.insert(e);
        frontier.push_back(e);
    }
    for (int h = 1; h < max_height; ++h) {
        std::vector<std::vector<int>> next;
        for (const auto& al : frontier) {
            for (int i = 0; i < r; ++i) {
                long pair = 0;
                for (int j = 0; j < r; ++j) pair += static_cast<long>(al[j]) * d.a(i, j);
                int p = 0;
                std::vector<int> down = al;
                for (;;) {
                    down[i] -= 1;
                    if (down[i] < 0) break;
                    bool zero = true;
                    for (int j = 0; j < r; ++j)
                        if (down[j]) {
                            zero = false;
                            break;
                        }
                    if (zero || !roots.count(down)) break;
                    ++p;
                }
                if (p - pair >= 1) {
                    std::vector<int> up = al;
                    up[i] += 1;
                    if (roots.insert(up).second) next.push_back(up);
                }
            }
        }
        frontier = std::move(next);
        if (frontier.empty()) break;
    }
    return {roots.begin(), roots.end()};
}

inline long kostant_count(const std::vector<std::vector<int>>& roots, size_t idx,
                          std::vector<int> rest) {
    bool zero = true;
    for (int v : rest)
        if (v) {
            zero = false;
            break;
        }
    if (zero) return 1;
    if (idx == roots.size()) return 0;
    long total = 0;
    for (;;) {
        total += kostant_count(roots, idx + 1, rest);
        bool fits = true;
        for (size_t j = 0; j < rest.size(); ++j) {
            rest[j] -= roots[idx][j];
            if (rest[j] < 0) fits = false;
        }
        if (!fits) break;
    }
    return total;
}

/** Number of ways to write nu as a multiset of positive roots; the
 *  dimension of the nu-graded piece of the lower triangular part. */
inline long kostant_partitions(const CartanDatum& d, const std::vector<int>& nu) {
    int height = 0;
    for (int v : nu) height += v;
    return kostant_count(positive_roots(d, height), 0, nu);
}

}  // namespace iqg::testsupport
