#pragma once

#include <algorithm>
#include <cstdio>
#include <queue>
#include <string>
#include <vector>

#include "bondspan/bonds.hpp"
#include "bondspan/instance.hpp"
#include "bondspan/sam.hpp"

namespace bondspan {

// Rate assignment that drives alpha toward the largest bond size b as the
// scale grows: off-bond edges get steeply tiered rates so SAM contracts them
// first with probability approaching 1, reducing the instance to item
// selection over the bond edges with rates (scale, 1, ..., 1).
struct TightConstruction {
    std::vector<EdgeId> bond_witness;
    std::vector<EdgeId> contraction_order; // spanning forest of the two sides, BFS order
    double scale = 0.0;
    RateVector rates; // indexed by EdgeId
};

inline TightConstruction tight_rate_vector(const MultiGraph& g, double scale) {
    if (!(scale > 1.0)) throw ValidationError("tight_rate_vector needs scale > 1");
    if (!g.connected()) throw DisconnectedError("tight_rate_vector requires a connected graph");
    BondResult bond = largest_bond(g);

    TightConstruction tc;
    tc.bond_witness = bond.witness;
    tc.scale = scale;
    std::sort(tc.bond_witness.begin(), tc.bond_witness.end());

    // BFS forest over the non-bond edges, lowest-index roots first. Each side
    // of the witness bipartition is connected, so this collects exactly
    // (vertex count - 2) edges for a two-sided witness.
    const int n = g.vertex_count();
    std::vector<bool> visited(n, false);
    for (VertexId root = 0; root < n; ++root) {
        if (visited[root]) continue;
        visited[root] = true;
        std::queue<VertexId> q;
        q.push(root);
        while (!q.empty()) {
            VertexId w = q.front();
            q.pop();
            for (const Edge& e : g.edges()) {
                if (contains_edge(tc.bond_witness, e.id)) continue;
                VertexId other;
                if (e.u == w)
                    other = e.v;
                else if (e.v == w)
                    other = e.u;
                else
                    continue;
                if (visited[other]) continue;
                visited[other] = true;
                tc.contraction_order.push_back(e.id);
                q.push(other);
            }
        }
    }

    // Tier ladder over every off-bond edge: the BFS forest first, then the
    // off-bond edges that will become loops along the way (they still need
    // rates that dominate the bond edges). Lower tier index = higher rate.
    std::vector<EdgeId> tiered = tc.contraction_order;
    for (const Edge& e : g.edges())
        if (!contains_edge(tc.bond_witness, e.id) &&
            std::find(tiered.begin(), tiered.end(), e.id) == tiered.end())
            tiered.push_back(e.id);

    EdgeId max_id = -1;
    for (const Edge& e : g.edges()) max_id = std::max(max_id, e.id);
    tc.rates.assign(max_id + 1, 0.0);
    // tiers scale^(k+1), scale^k, ..., scale^2; one bond edge gets scale,
    // the rest of the bond gets 1
    const int k = (int)tiered.size();
    for (int i = 0; i < k; ++i) tc.rates.at(tiered[i]) = std::pow(scale, (double)(k - i + 1));
    for (size_t i = 0; i < tc.bond_witness.size(); ++i)
        tc.rates.at(tc.bond_witness[i]) = (i == 0) ? scale : 1.0;
    return tc;
}

struct SweepRow {
    double scale = 0.0;
    double alpha = 0.0;
};

// Exact alpha of the tight construction for each scale, rows sorted by scale.
inline std::vector<SweepRow> tight_sweep(const MultiGraph& g, std::vector<double> scales,
                                         int max_edges = kDefaultExactGuard) {
    std::sort(scales.begin(), scales.end());
    std::vector<SweepRow> rows;
    for (double scale : scales) {
        TightConstruction tc = tight_rate_vector(g, scale);
        Instance inst = make_exponential_instance(g, tc.rates, "tight");
        rows.push_back({scale, alpha_exact(inst, max_edges)});
    }
    return rows;
}

inline std::string format_sig12(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

// CSV header M,alpha,b,graph; floats with 12 significant digits.
inline std::string sweep_csv(const std::vector<SweepRow>& rows, int b, const std::string& graph_name) {
    std::string out = "M,alpha,b,graph\n";
    for (const SweepRow& r : rows) {
        out += format_sig12(r.scale);
        out += ',';
        out += format_sig12(r.alpha);
        out += ',';
        out += std::to_string(b);
        out += ',';
        out += graph_name;
        out += '\n';
    }
    return out;
}

} // namespace bondspan
