#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "bondspan/errors.hpp"
#include "bondspan/union_find.hpp"

namespace bondspan {

using VertexId = int;
using EdgeId = int;

struct Edge {
    EdgeId id;
    VertexId u;
    VertexId v;
};

// Loopless multigraph with stable edge identities.
//
// Vertices are dense indices [0, n). Edge ids are non-negative, unique, and
// survive minor operations on *other* edges unchanged; per-edge data (rates,
// weights, samples) is conventionally stored in vectors indexed by EdgeId.
// Values are immutable after construction; contract/without_edge return new
// graphs.
class MultiGraph {
public:
    MultiGraph() = default;

    MultiGraph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
        if (n_ < 1) throw ValidationError("multigraph needs at least one vertex");
        std::vector<bool> seen;
        for (const Edge& e : edges_) {
            if (e.u == e.v)
                throw ValidationError("loop on vertex " + std::to_string(e.u));
            if (e.u < 0 || e.u >= n_ || e.v < 0 || e.v >= n_)
                throw ValidationError("edge " + std::to_string(e.id) + " has endpoint out of range");
            if (e.id < 0) throw ValidationError("negative edge id");
            if ((size_t)e.id >= seen.size()) seen.resize(e.id + 1, false);
            if (seen[e.id])
                throw ValidationError("duplicate edge id " + std::to_string(e.id));
            seen[e.id] = true;
        }
    }

    // Two vertices joined by m parallel edges, ids 0..m-1.
    static MultiGraph parallel(int m) {
        std::vector<Edge> es;
        for (int i = 0; i < m; ++i) es.push_back({i, 0, 1});
        return MultiGraph(2, std::move(es));
    }

    // Complete graph K_n, edge ids assigned in (u, v) lexicographic order.
    static MultiGraph complete(int n) {
        std::vector<Edge> es;
        int id = 0;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) es.push_back({id++, u, v});
        return MultiGraph(n, std::move(es));
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return (int)edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }

    bool has_edge(EdgeId id) const {
        for (const Edge& e : edges_)
            if (e.id == id) return true;
        return false;
    }

    const Edge& edge(EdgeId id) const {
        for (const Edge& e : edges_)
            if (e.id == id) return e;
        throw ValidationError("unknown edge id " + std::to_string(id));
    }

    std::vector<EdgeId> edge_ids() const {
        std::vector<EdgeId> ids;
        ids.reserve(edges_.size());
        for (const Edge& e : edges_) ids.push_back(e.id);
        return ids;
    }

    struct Contraction;

    // Contract edge e: merge its endpoints, drop e, and delete any edge that
    // becomes a loop. All other edge ids are preserved. The returned map sends
    // old vertex indices to the dense renumbering of the result.
    Contraction contract(EdgeId id) const;

    // Delete edge e; vertices are unchanged (the result may be disconnected).
    MultiGraph without_edge(EdgeId id) const {
        edge(id); // validate
        std::vector<Edge> es;
        es.reserve(edges_.size() - 1);
        for (const Edge& f : edges_)
            if (f.id != id) es.push_back(f);
        return MultiGraph(n_, std::move(es));
    }

    // Delete several edges at once.
    MultiGraph without_edges(const std::vector<EdgeId>& ids) const {
        std::vector<Edge> es;
        for (const Edge& f : edges_)
            if (std::find(ids.begin(), ids.end(), f.id) == ids.end()) es.push_back(f);
        return MultiGraph(n_, std::move(es));
    }

    bool connected() const { return component_count() == 1; }

    int component_count() const {
        UnionFind uf(n_);
        for (const Edge& e : edges_) uf.unite(e.u, e.v);
        return uf.components();
    }

    // Component label per vertex, labels dense in first-occurrence order.
    std::vector<int> component_labels() const {
        UnionFind uf(n_);
        for (const Edge& e : edges_) uf.unite(e.u, e.v);
        std::vector<int> label(n_, -1);
        int next = 0;
        for (VertexId w = 0; w < n_; ++w) {
            int r = uf.find(w);
            if (label[r] < 0) label[r] = next++;
            label[w] = label[r];
        }
        return label;
    }

private:
    int n_ = 1;
    std::vector<Edge> edges_;
};

struct MultiGraph::Contraction {
    MultiGraph graph;
    std::vector<VertexId> vertex_map; // old index -> new index
};

inline MultiGraph::Contraction MultiGraph::contract(EdgeId id) const {
    const Edge& e = edge(id);
    const VertexId keep = std::min(e.u, e.v);
    const VertexId drop = std::max(e.u, e.v);
    std::vector<VertexId> map(n_);
    for (VertexId w = 0; w < n_; ++w) map[w] = (w == drop) ? keep : (w > drop ? w - 1 : w);
    std::vector<Edge> es;
    es.reserve(edges_.size() - 1);
    for (const Edge& f : edges_) {
        if (f.id == id) continue;
        Edge g{f.id, map[f.u], map[f.v]};
        if (g.u == g.v) continue; // loop: delete eagerly
        es.push_back(g);
    }
    return {MultiGraph(n_ - 1, std::move(es)), std::move(map)};
}

} // namespace bondspan
