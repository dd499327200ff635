#pragma once

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "bondspan/multigraph.hpp"

namespace bondspan {

namespace detail {

using PairList = std::vector<std::pair<int, int>>; // sorted (u<v) edge multiset

// Lexicographically smallest edge list over all vertex relabelings.
inline PairList canonical_form(const PairList& edges, int n) {
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    PairList best;
    bool first = true;
    do {
        PairList mapped;
        mapped.reserve(edges.size());
        for (auto [u, v] : edges) {
            int a = perm[u], b = perm[v];
            mapped.push_back({std::min(a, b), std::max(a, b)});
        }
        std::sort(mapped.begin(), mapped.end());
        if (first || mapped < best) {
            best = std::move(mapped);
            first = false;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

inline bool pairs_connected(const PairList& edges, int n) {
    UnionFind uf(n);
    for (auto [u, v] : edges) uf.unite(u, v);
    return uf.components() == 1;
}

} // namespace detail

// All connected multigraphs with up to max_vertices vertices and up to
// max_edges edges, one representative per isomorphism class, in a
// deterministic order. Edge ids are 0..m-1 in canonical edge order.
// Exhaustive enumeration: keep max_vertices <= 6 or so.
inline std::vector<MultiGraph> connected_multigraphs_upto(int max_vertices, int max_edges) {
    std::vector<MultiGraph> out;
    out.push_back(MultiGraph(1, {})); // single vertex
    for (int n = 2; n <= max_vertices; ++n) {
        detail::PairList pairs;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) pairs.push_back({u, v});
        const int np = (int)pairs.size();
        std::set<detail::PairList> seen;
        for (int m = n - 1; m <= max_edges; ++m) {
            // multisets of m pairs = non-decreasing index sequences
            std::vector<int> idx(m, 0);
            while (true) {
                detail::PairList edges;
                edges.reserve(m);
                for (int i : idx) edges.push_back(pairs[i]);
                if (detail::pairs_connected(edges, n)) {
                    detail::PairList canon = detail::canonical_form(edges, n);
                    if (seen.insert(canon).second) {
                        std::vector<Edge> es;
                        for (int i = 0; i < m; ++i)
                            es.push_back({i, canon[i].first, canon[i].second});
                        out.push_back(MultiGraph(n, std::move(es)));
                    }
                }
                int i = m - 1;
                while (i >= 0 && idx[i] == np - 1) --i;
                if (i < 0) break;
                ++idx[i];
                for (int j = i + 1; j < m; ++j) idx[j] = idx[i];
            }
        }
    }
    return out;
}

} // namespace bondspan
