#pragma once

#include "kleinq/poly.hpp"

#include <map>

namespace kleinq {

/// Column subsets of {0..m-1} of size k in lexicographic order.
std::vector<std::vector<int>> column_subsets(int m, int k);

/// Pluecker coordinates of F wedge F' wedge ... wedge F^(k-1): all k x k
/// minors of the k x m derivative matrix of the coordinate vector `curve`,
/// in lexicographic column-subset order. Division-free evaluation building
/// j-row minors from (j-1)-row minors by expansion along the last row.
template <class K>
std::vector<Poly<K>> wedge_minors(const std::vector<Poly<K>>& curve, int k) {
    int m = static_cast<int>(curve.size());
    if (k < 1 || k > m) throw Error("wedge order out of range");
    std::vector<std::vector<Poly<K>>> rows(1, curve);
    for (int j = 1; j < k; ++j) {
        std::vector<Poly<K>> d(curve.size());
        for (size_t c = 0; c < curve.size(); ++c) d[c] = rows.back()[c].derivative();
        rows.push_back(std::move(d));
    }
    std::map<std::vector<int>, Poly<K>> minors;
    for (int c = 0; c < m; ++c) minors[{c}] = rows[0][static_cast<size_t>(c)];
    for (int j = 2; j <= k; ++j) {
        std::map<std::vector<int>, Poly<K>> next;
        for (const auto& subset : column_subsets(m, j)) {
            Poly<K> det;
            for (int t = 0; t < j; ++t) {
                std::vector<int> reduced = subset;
                reduced.erase(reduced.begin() + t);
                const Poly<K>& entry = rows[static_cast<size_t>(j - 1)][static_cast<size_t>(subset[static_cast<size_t>(t)])];
                if (entry.is_zero()) continue;
                Poly<K> term = entry * minors.at(reduced);
                if ((j - 1 - t) % 2 == 0) det += term;
                else det -= term;
            }
            next[subset] = std::move(det);
        }
        minors = std::move(next);
    }
    std::vector<Poly<K>> out;
    for (const auto& subset : column_subsets(m, k)) out.push_back(minors.at(subset));
    return out;
}

} // namespace kleinq
