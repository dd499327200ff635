#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <queue>
#include <vector>

#include "bondspan/multigraph.hpp"

namespace bondspan {

// Strict total order on edge ids used to break weight ties deterministically.
// An empty function means ascending id order.
using TieBreak = std::function<bool(EdgeId, EdgeId)>;

inline bool tie_less(const TieBreak& tie, EdgeId a, EdgeId b) {
    return tie ? tie(a, b) : a < b;
}

// Kruskal's algorithm. Edges are processed in (weight, tie_break)
// lexicographic order, so the returned tree is deterministic even under
// weight ties. Weights are indexed by EdgeId.
inline std::vector<EdgeId> kruskal_mst(const MultiGraph& g, const std::vector<double>& weights,
                                       const TieBreak& tie = {}) {
    std::vector<EdgeId> order = g.edge_ids();
    std::sort(order.begin(), order.end(), [&](EdgeId a, EdgeId b) {
        double wa = weights.at(a), wb = weights.at(b);
        if (wa != wb) return wa < wb;
        return tie_less(tie, a, b);
    });
    UnionFind uf(g.vertex_count());
    std::vector<EdgeId> tree;
    for (EdgeId id : order) {
        const Edge& e = g.edge(id);
        if (uf.unite(e.u, e.v)) tree.push_back(id);
    }
    if ((int)tree.size() != g.vertex_count() - 1)
        throw DisconnectedError("kruskal_mst requires a connected graph");
    std::sort(tree.begin(), tree.end());
    return tree;
}

inline double subset_weight(const std::vector<EdgeId>& s, const std::vector<double>& weights) {
    double total = 0.0;
    for (EdgeId id : s) total += weights.at(id);
    return total;
}

inline bool contains_edge(const std::vector<EdgeId>& sorted_set, EdgeId id) {
    return std::binary_search(sorted_set.begin(), sorted_set.end(), id);
}

inline bool is_spanning_tree(const MultiGraph& g, const std::vector<EdgeId>& t) {
    if ((int)t.size() != g.vertex_count() - 1) return false;
    UnionFind uf(g.vertex_count());
    for (EdgeId id : t) {
        if (!g.has_edge(id)) return false;
        const Edge& e = g.edge(id);
        if (!uf.unite(e.u, e.v)) return false; // cycle
    }
    return uf.components() == 1;
}

// The unique cycle in tree + {e}: the tree path between e's endpoints plus e
// itself. The result is sorted by id and always contains e.
inline std::vector<EdgeId> fundamental_cycle(const MultiGraph& g, const std::vector<EdgeId>& tree,
                                             EdgeId id) {
    std::vector<EdgeId> sorted_tree = tree;
    std::sort(sorted_tree.begin(), sorted_tree.end());
    if (contains_edge(sorted_tree, id))
        throw ValidationError("fundamental_cycle: edge is part of the tree");
    if (!is_spanning_tree(g, tree))
        throw ValidationError("fundamental_cycle: not a spanning tree");
    const Edge& e = g.edge(id);

    // BFS through the tree from e.u to e.v, remembering the entering edge.
    const int n = g.vertex_count();
    std::vector<std::vector<std::pair<VertexId, EdgeId>>> adj(n);
    for (EdgeId t : sorted_tree) {
        const Edge& f = g.edge(t);
        adj[f.u].push_back({f.v, t});
        adj[f.v].push_back({f.u, t});
    }
    std::vector<EdgeId> via(n, -1);
    std::vector<VertexId> prev(n, -1);
    std::vector<bool> seen(n, false);
    std::queue<VertexId> q;
    q.push(e.u);
    seen[e.u] = true;
    while (!q.empty()) {
        VertexId w = q.front();
        q.pop();
        if (w == e.v) break;
        for (auto [x, t] : adj[w]) {
            if (seen[x]) continue;
            seen[x] = true;
            via[x] = t;
            prev[x] = w;
            q.push(x);
        }
    }
    std::vector<EdgeId> cycle{id};
    for (VertexId w = e.v; w != e.u; w = prev[w]) cycle.push_back(via[w]);
    std::sort(cycle.begin(), cycle.end());
    return cycle;
}

namespace detail {

inline long long subset_combinations(int m, int k) {
    if (k < 0 || k > m) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * (m - k + i) / i;
        if (r > (1LL << 40)) return r; // enough to trip the guard
    }
    return r;
}

} // namespace detail

// All spanning trees, each exactly once, by enumerating (n-1)-subsets of the
// edge list. Exponential; guarded to roughly two million candidate subsets.
inline std::vector<std::vector<EdgeId>> enumerate_spanning_trees(const MultiGraph& g) {
    const int n = g.vertex_count();
    const int m = g.edge_count();
    const int k = n - 1;
    if (detail::subset_combinations(m, k) > 2'000'000)
        throw SizeGuardError("enumerate_spanning_trees: too many edge subsets");
    std::vector<std::vector<EdgeId>> trees;
    if (k == 0) {
        trees.push_back({});
        return trees;
    }
    std::vector<int> pick(k);
    std::vector<EdgeId> t(k);
    // lexicographic combinations of edge positions
    for (int i = 0; i < k; ++i) pick[i] = i;
    if (k > m) return trees;
    while (true) {
        UnionFind uf(n);
        bool acyclic = true;
        for (int i = 0; i < k && acyclic; ++i) {
            const Edge& e = g.edges()[pick[i]];
            acyclic = uf.unite(e.u, e.v);
        }
        if (acyclic && uf.components() == 1) {
            for (int i = 0; i < k; ++i) t[i] = g.edges()[pick[i]].id;
            std::vector<EdgeId> sorted_t = t;
            std::sort(sorted_t.begin(), sorted_t.end());
            trees.push_back(sorted_t);
        }
        int i = k - 1;
        while (i >= 0 && pick[i] == m - k + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
    return trees;
}

} // namespace bondspan
