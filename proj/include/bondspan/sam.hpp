#pragma once

#include <cmath>
#include <limits>
#include <vector>

#include "bondspan/bonds.hpp"
#include "bondspan/instance.hpp"
#include "bondspan/mst.hpp"

namespace bondspan {

// Exact expected-cost recursion is memoized over subsets of contracted edges,
// so it is exponential in the edge count. 12 edges is plenty for desk work;
// callers may raise the guard up to the hard cap.
inline constexpr int kDefaultExactGuard = 12;
inline constexpr int kExactGuardCap = 22;

struct OptResult {
    std::vector<EdgeId> tree;
    double expected_cost = 0.0;
};

// The non-adaptive optimum: a minimum spanning tree of the expected weights.
inline OptResult opt_tree(const Instance& inst, const TieBreak& tie = {}) {
    std::vector<double> means = inst.means();
    OptResult r;
    r.tree = kruskal_mst(inst.graph, means, tie);
    r.expected_cost = subset_weight(r.tree, means);
    return r;
}

// SAM: a minimum spanning tree of one sampled weight per edge. Deterministic
// given the samples and the tie-break.
inline std::vector<EdgeId> sam_tree(const Instance& inst, const SampleVector& samples,
                                    const TieBreak& tie = {}) {
    for (const Edge& e : inst.graph.edges())
        if ((size_t)e.id >= samples.size())
            throw ValidationError("missing sample for edge id " + std::to_string(e.id));
    return kruskal_mst(inst.graph, samples, tie);
}

// P(edge e has the smallest sample) under independent exponentials.
inline double first_choice_prob(const Instance& inst, EdgeId e) {
    inst.graph.edge(e);
    RateVector rates = inst.rates();
    double total = 0.0;
    for (const Edge& f : inst.graph.edges()) total += rates.at(f.id);
    return rates.at(e) / total;
}

inline std::vector<double> first_choice_probs(const Instance& inst) {
    std::vector<double> p(inst.dist.size(), 0.0);
    for (const Edge& e : inst.graph.edges()) p.at(e.id) = first_choice_prob(inst, e.id);
    return p;
}

// Exact E[SAM] for exponential weights.
//
// Conditioning on the first edge picked (probability rate_e / total) and
// using memorylessness, the remainder behaves like a fresh run on the
// contraction:
//     E[SAM(G)] = sum_e (rate_e / total) * (1/rate_e + E[SAM(G/e)]),
// with E[SAM] = 0 once a single vertex remains. States are keyed by the set
// of contracted edges, which determines the minor regardless of order.
inline double exact_expected_sam(const Instance& inst, int max_edges = kDefaultExactGuard) {
    const MultiGraph& g = inst.graph;
    if (!g.connected()) throw DisconnectedError("exact_expected_sam requires a connected graph");
    const int m = g.edge_count();
    if (max_edges > kExactGuardCap) max_edges = kExactGuardCap;
    if (m > max_edges)
        throw SizeGuardError("exact_expected_sam: " + std::to_string(m) + " edges exceeds guard of " +
                             std::to_string(max_edges));
    RateVector rates = inst.rates();
    const int n = g.vertex_count();
    if (m == 0) return 0.0;

    const double unset = -1.0;
    std::vector<double> memo(size_t(1) << m, unset);
    std::vector<double> rate_of(m);
    for (int p = 0; p < m; ++p) rate_of[p] = rates.at(g.edges()[p].id);

    struct Eval {
        const MultiGraph& g;
        const std::vector<double>& rate_of;
        std::vector<double>& memo;
        int n, m;

        double operator()(uint32_t contracted) {
            double& slot = memo[contracted];
            if (slot >= 0.0) return slot;
            UnionFind uf(n);
            for (int p = 0; p < m; ++p)
                if (contracted & (1u << p)) uf.unite(g.edges()[p].u, g.edges()[p].v);
            double total = 0.0;
            for (int p = 0; p < m; ++p) {
                if (contracted & (1u << p)) continue;
                const Edge& e = g.edges()[p];
                if (uf.same(e.u, e.v)) continue; // loop in the minor
                total += rate_of[p];
            }
            double value = 0.0;
            if (total > 0.0) {
                for (int p = 0; p < m; ++p) {
                    if (contracted & (1u << p)) continue;
                    const Edge& e = g.edges()[p];
                    if (uf.same(e.u, e.v)) continue;
                    value += (rate_of[p] / total) * (1.0 / rate_of[p] + (*this)(contracted | (1u << p)));
                }
            }
            slot = value;
            return value;
        }
    } eval{g, rate_of, memo, n, m};

    return eval(0);
}

// E[SAM] for the two-vertex multigraph: picking one of m items from single
// samples costs m / sum(rates) in expectation.
inline double item_selection_expected_sam(const RateVector& rates) {
    if (rates.empty()) throw ValidationError("item selection needs at least one item");
    double total = 0.0;
    for (double r : rates) {
        if (!(r > 0.0)) throw ValidationError("item rates must be positive");
        total += r;
    }
    return (double)rates.size() / total;
}

inline double item_selection_expected_opt(const RateVector& rates) {
    if (rates.empty()) throw ValidationError("item selection needs at least one item");
    double best = 0.0;
    for (double r : rates) best = std::max(best, r);
    return 1.0 / best;
}

struct ExchangeEdge {
    EdgeId id = -1;
    // False when some other edge on the cycle ties e's expected weight, in
    // which case "the second largest" is ambiguous and we take the max over
    // the cycle without e.
    bool e_unique_cycle_max = true;
};

// The exchange edge e*: e itself when e is in the mean-weight MST, otherwise
// the maximum-mean edge on e's fundamental cycle excluding e (ties broken by
// tie_break).
inline ExchangeEdge exchange_edge_info(const Instance& inst, EdgeId e, const TieBreak& tie = {}) {
    inst.graph.edge(e);
    OptResult opt = opt_tree(inst, tie);
    if (contains_edge(opt.tree, e)) return {e, true};
    std::vector<EdgeId> cycle = fundamental_cycle(inst.graph, opt.tree, e);
    std::vector<double> means = inst.means();
    ExchangeEdge best;
    double best_mean = -1.0;
    for (EdgeId f : cycle) {
        if (f == e) continue;
        double mf = means.at(f);
        if (mf > best_mean || (mf == best_mean && tie_less(tie, f, best.id))) {
            best.id = f;
            best_mean = mf;
        }
    }
    if (best_mean >= means.at(e)) best.e_unique_cycle_max = false;
    return best;
}

inline EdgeId exchange_edge(const Instance& inst, EdgeId e, const TieBreak& tie = {}) {
    return exchange_edge_info(inst, e, tie).id;
}

// sum_e (1/b - rate_e / rate_{e*}) over all edges, where b is the largest
// bond size. Nonpositive on every exponential instance; this certifies the
// step that bounds alpha by b.
inline double exchange_inequality_sum(const Instance& inst, const TieBreak& tie = {}) {
    if (!inst.graph.connected())
        throw DisconnectedError("exchange_inequality_sum requires a connected graph");
    RateVector rates = inst.rates();
    if (inst.graph.edge_count() == 0) return 0.0;
    const int b = largest_bond(inst.graph).size;
    OptResult opt = opt_tree(inst, tie);
    std::vector<double> means = inst.means();
    double sum = 0.0;
    for (const Edge& e : inst.graph.edges()) {
        EdgeId star = e.id;
        if (!contains_edge(opt.tree, e.id)) {
            std::vector<EdgeId> cycle = fundamental_cycle(inst.graph, opt.tree, e.id);
            double best_mean = -1.0;
            star = -1;
            for (EdgeId f : cycle) {
                if (f == e.id) continue;
                if (means.at(f) > best_mean || (means.at(f) == best_mean && tie_less(tie, f, star))) {
                    star = f;
                    best_mean = means.at(f);
                }
            }
        }
        sum += 1.0 / b - rates.at(e.id) / rates.at(star);
    }
    return sum;
}

// E[SAM] / E[OPT] via the exact recursion. 1 by convention on the one-vertex
// graph (both costs are zero).
inline double alpha_exact(const Instance& inst, int max_edges = kDefaultExactGuard) {
    double e_opt = opt_tree(inst).expected_cost;
    double e_sam = exact_expected_sam(inst, max_edges);
    if (e_opt == 0.0) return 1.0;
    return e_sam / e_opt;
}

// The adaptive benchmark E[min_T w(T)] for instances where every edge has a
// discrete distribution, by exhausting the joint atom space.
inline double adaptive_expected_min(const Instance& inst) {
    const MultiGraph& g = inst.graph;
    if (!g.connected()) throw DisconnectedError("adaptive_expected_min requires a connected graph");
    for (const Edge& e : g.edges())
        if (inst.dist.at(e.id).is_exponential())
            throw ValidationError("adaptive_expected_min needs discrete distributions on every edge");
    std::vector<std::vector<EdgeId>> trees = enumerate_spanning_trees(g);

    const int m = g.edge_count();
    double combos = 1.0;
    for (const Edge& e : g.edges()) combos *= (double)inst.dist.at(e.id).atoms().size();
    if (combos > 2e6) throw SizeGuardError("adaptive_expected_min: joint atom space too large");

    std::vector<int> at(m, 0);
    std::vector<double> w(inst.dist.size(), 0.0);
    double expectation = 0.0;
    while (true) {
        double prob = 1.0;
        for (int p = 0; p < m; ++p) {
            const Edge& e = g.edges()[p];
            auto [value, pr] = inst.dist.at(e.id).atoms()[at[p]];
            w.at(e.id) = value;
            prob *= pr;
        }
        double best = std::numeric_limits<double>::infinity();
        for (const auto& t : trees) best = std::min(best, subset_weight(t, w));
        expectation += prob * best;
        int p = m - 1;
        while (p >= 0 && at[p] + 1 == (int)inst.dist.at(g.edges()[p].id).atoms().size()) --p;
        if (p < 0) break;
        ++at[p];
        for (int q = p + 1; q < m; ++q) at[q] = 0;
    }
    return expectation;
}

} // namespace bondspan
