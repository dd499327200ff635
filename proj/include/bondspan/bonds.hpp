#pragma once

#include <cstdint>
#include <vector>

#include "bondspan/multigraph.hpp"

namespace bondspan {

// Bond search enumerates the 2^(n-1) vertex bipartitions, so it is meant for
// desk-scale graphs only.
inline constexpr int kMaxBondVertices = 16;

namespace detail {

// If the bipartition given by side[] has both induced sides connected and
// non-empty, writes the crossing edges to out and returns true.
inline bool bipartition_bond(const MultiGraph& g, const std::vector<bool>& side,
                             std::vector<EdgeId>& out) {
    const int n = g.vertex_count();
    int size_b = 0;
    for (VertexId w = 0; w < n; ++w) size_b += side[w] ? 1 : 0;
    if (size_b == 0 || size_b == n) return false;
    UnionFind uf(n);
    out.clear();
    for (const Edge& e : g.edges()) {
        if (side[e.u] == side[e.v])
            uf.unite(e.u, e.v);
        else
            out.push_back(e.id);
    }
    // Both sides connected <=> exactly two components once the cut is removed.
    return uf.components() == 2;
}

} // namespace detail

// True iff s is an inclusion-wise minimal cut set of the connected graph g,
// i.e. the set of edges between some vertex bipartition with both induced
// sides connected.
inline bool is_bond(const MultiGraph& g, const std::vector<EdgeId>& s) {
    for (EdgeId id : s) g.edge(id); // validates membership
    if (!g.connected()) throw DisconnectedError("is_bond requires a connected graph");
    if (s.empty()) return false;
    MultiGraph cut = g.without_edges(s);
    if (cut.component_count() != 2) return false;
    std::vector<int> label = cut.component_labels();
    for (EdgeId id : s) {
        const Edge& e = g.edge(id);
        if (label[e.u] == label[e.v]) return false; // not minimal
    }
    return true;
}

struct BondResult {
    int size = 0;
    std::vector<EdgeId> witness;
    std::vector<bool> side; // bipartition of the witness, side[v] true = opposite vertex 0
};

// Maximum-cardinality bond, found by exhaustive bipartition enumeration.
// Ties are resolved by enumeration order (the witness of a maximum bond is
// not unique in general). A single-vertex graph has no bonds; size 0.
inline BondResult largest_bond(const MultiGraph& g) {
    if (!g.connected()) throw DisconnectedError("largest_bond requires a connected graph");
    const int n = g.vertex_count();
    if (n > kMaxBondVertices)
        throw SizeGuardError("largest_bond enumerates bipartitions; vertex count " +
                             std::to_string(n) + " exceeds " + std::to_string(kMaxBondVertices));
    BondResult best;
    best.side.assign(n, false);
    if (n == 1) return best;
    std::vector<bool> side(n, false);
    std::vector<EdgeId> cut;
    for (uint32_t mask = 1; mask < (1u << (n - 1)); ++mask) {
        for (VertexId w = 1; w < n; ++w) side[w] = (mask >> (w - 1)) & 1u;
        if (!detail::bipartition_bond(g, side, cut)) continue;
        if ((int)cut.size() > best.size) {
            best.size = (int)cut.size();
            best.witness = cut;
            best.side = side;
        }
    }
    return best;
}

// All bonds of a connected graph, one per vertex bipartition with connected
// sides, in bipartition enumeration order.
inline std::vector<std::vector<EdgeId>> all_bonds(const MultiGraph& g) {
    if (!g.connected()) throw DisconnectedError("all_bonds requires a connected graph");
    const int n = g.vertex_count();
    if (n > kMaxBondVertices)
        throw SizeGuardError("all_bonds: vertex count exceeds " + std::to_string(kMaxBondVertices));
    std::vector<std::vector<EdgeId>> bonds;
    if (n == 1) return bonds;
    std::vector<bool> side(n, false);
    std::vector<EdgeId> cut;
    for (uint32_t mask = 1; mask < (1u << (n - 1)); ++mask) {
        for (VertexId w = 1; w < n; ++w) side[w] = (mask >> (w - 1)) & 1u;
        if (detail::bipartition_bond(g, side, cut)) bonds.push_back(cut);
    }
    return bonds;
}

} // namespace bondspan
