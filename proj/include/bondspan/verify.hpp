#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "bondspan/bonds.hpp"
#include "bondspan/enumerate.hpp"
#include "bondspan/instance.hpp"
#include "bondspan/matroid_analysis.hpp"
#include "bondspan/montecarlo.hpp"
#include "bondspan/sam.hpp"

namespace bondspan {

// One named invariant checked over many cases. "worst" is the largest
// residual seen; a residual <= 0 satisfies the invariant, so pass means
// worst never exceeded the tolerance baked into the residual.
struct SuiteCheck {
    std::string name;
    long long cases = 0;
    long long failures = 0;
    double worst = -std::numeric_limits<double>::infinity();
    std::string counterexample; // serialized instance for the first failure

    void record(double residual, double tol, const std::string& witness) {
        ++cases;
        worst = std::max(worst, residual);
        if (residual > tol) {
            ++failures;
            if (counterexample.empty()) counterexample = witness;
        }
    }

    bool pass() const { return failures == 0; }
};

struct VerifyOptions {
    int max_edges = 6;
    long long trials = 1000;
    long long conditional_accepted = 20000; // accepted rejection samples per edge
    uint64_t seed = 0;
};

namespace detail {

inline constexpr uint64_t kDomainRates = 100;

inline RateVector log_uniform_rates(int m, SplitMix64& rng, double lo = 1e-2, double hi = 1e2) {
    RateVector r(m);
    for (double& x : r) x = rng.log_uniform(lo, hi);
    return r;
}

inline std::string witness_instance(const MultiGraph& g, const RateVector& rates,
                                    const std::string& name) {
    RateVector padded = rates;
    for (const Edge& e : g.edges())
        if ((size_t)e.id >= padded.size() || !(padded[e.id] > 0.0))
            padded.resize(std::max(padded.size(), (size_t)e.id + 1), 1.0);
    for (double& r : padded)
        if (!(r > 0.0)) r = 1.0;
    return instance_to_json(make_exponential_instance(g, padded, name)).dump();
}

inline std::string graph_signature(const MultiGraph& g) {
    std::string s = std::to_string(g.vertex_count()) + "v";
    for (const Edge& e : g.edges())
        s += "_" + std::to_string(e.u) + "-" + std::to_string(e.v);
    return s;
}

} // namespace detail

// Structural checks on bonds, contractions, and minimum spanning trees,
// exhaustive over connected multigraphs with <= 5 vertices and up to
// opts.max_edges edges.
inline std::vector<SuiteCheck> verify_graphs(const VerifyOptions& opts) {
    std::vector<MultiGraph> family = connected_multigraphs_upto(5, opts.max_edges);
    SplitMix64 rng = SplitMix64::stream(opts.seed, detail::kDomainRates, 1);

    SuiteCheck bond_monotone{"bond_contraction_monotone"};
    SuiteCheck off_bond{"off_bond_contraction_keeps_largest_bond"};
    SuiteCheck edge_bound{"edge_count_le_bond_times_tree"};
    SuiteCheck tied_mst{"tied_mst_cycle_max_weight_equal"};
    SuiteCheck witness_is_bond{"largest_bond_witness_is_bond"};
    SuiteCheck kruskal_oracle{"kruskal_matches_tree_enumeration"};

    for (const MultiGraph& g : family) {
        const int n = g.vertex_count();
        const int m = g.edge_count();
        std::string witness = detail::witness_instance(g, {}, detail::graph_signature(g));
        BondResult bond = largest_bond(g);

        if (n >= 2) {
            witness_is_bond.record(is_bond(g, bond.witness) ? 0.0 : 1.0, 0.5, witness);
            edge_bound.record((double)m - (double)bond.size * (n - 1), 0.0, witness);
        }
        for (const Edge& e : g.edges()) {
            int contracted_bond = largest_bond(g.contract(e.id).graph).size;
            bond_monotone.record((double)(contracted_bond - bond.size), 0.0, witness);
            if (n > 2 && !contains_edge(bond.witness, e.id))
                off_bond.record(std::abs(contracted_bond - bond.size), 0.0, witness);
        }

        if (n >= 2) {
            // MST vs exhaustive enumeration with real weights, and the
            // tied-MST cycle property with small integer weights.
            std::vector<std::vector<EdgeId>> trees = enumerate_spanning_trees(g);
            long long reps = std::min<long long>(opts.trials, 50);
            for (long long t = 0; t < reps; ++t) {
                std::vector<double> w(m);
                for (double& x : w) x = rng.uniform(0.0, 1.0);
                double best = std::numeric_limits<double>::infinity();
                for (const auto& tree : trees) best = std::min(best, subset_weight(tree, w));
                double got = subset_weight(kruskal_mst(g, w), w);
                kruskal_oracle.record(std::abs(got - best), 1e-12, witness);
            }
            for (long long t = 0; t < reps; ++t) {
                std::vector<double> w(m);
                for (double& x : w) x = (double)(1 + rng.next() % 3);
                double best = std::numeric_limits<double>::infinity();
                for (const auto& tree : trees) best = std::min(best, subset_weight(tree, w));
                std::vector<std::vector<EdgeId>> min_trees;
                for (const auto& tree : trees)
                    if (subset_weight(tree, w) == best) min_trees.push_back(tree);
                for (size_t i = 0; i < min_trees.size(); ++i)
                    for (size_t j = i + 1; j < min_trees.size(); ++j)
                        for (const Edge& e : g.edges()) {
                            if (contains_edge(min_trees[i], e.id) ||
                                contains_edge(min_trees[j], e.id))
                                continue;
                            auto max_on_cycle = [&](const std::vector<EdgeId>& tree) {
                                double mx = 0.0;
                                for (EdgeId f : fundamental_cycle(g, tree, e.id))
                                    if (f != e.id) mx = std::max(mx, w[f]);
                                return mx;
                            };
                            tied_mst.record(
                                std::abs(max_on_cycle(min_trees[i]) - max_on_cycle(min_trees[j])),
                                0.0, witness);
                        }
            }
        }
    }
    return {bond_monotone, off_bond, edge_bound, tied_mst, witness_is_bond, kruskal_oracle};
}

// Stochastic identities: the alpha <= b bound, the two contraction
// identities, the exchange-sum inequality, first-choice probabilities, and
// agreement between the exact recursion, Monte Carlo, and the item-selection
// closed form.
inline std::vector<SuiteCheck> verify_stochastic(const VerifyOptions& opts) {
    std::vector<MultiGraph> family = connected_multigraphs_upto(std::min(6, opts.max_edges + 1),
                                                                opts.max_edges);

    SuiteCheck alpha_bound{"alpha_le_largest_bond"};
    SuiteCheck alpha_floor{"alpha_ge_one"};
    SuiteCheck exchange{"exchange_inequality_nonpositive"};
    SuiteCheck conditional{"conditional_sam_contraction_identity"};
    SuiteCheck opt_identity{"opt_contraction_identity"};
    SuiteCheck estar_ties{"exchange_edge_mean_tie_invariant"};
    SuiteCheck first_choice{"first_choice_probs_sum_to_one"};
    SuiteCheck first_choice_mc{"first_choice_probs_match_frequency"};
    SuiteCheck exact_vs_mc{"exact_sam_matches_monte_carlo"};
    SuiteCheck items{"two_vertex_sam_matches_item_selection"};

    uint64_t graph_index = 0;
    for (const MultiGraph& g : family) {
        ++graph_index;
        const int n = g.vertex_count();
        const int m = g.edge_count();
        if (n < 2) continue;
        const int b = largest_bond(g).size;

        SplitMix64 rng = SplitMix64::stream(opts.seed, detail::kDomainRates, graph_index);
        for (long long t = 0; t < opts.trials; ++t) {
            RateVector rates = detail::log_uniform_rates(m, rng);
            Instance inst = make_exponential_instance(g, rates);
            std::string witness = detail::witness_instance(g, rates, "sweep");
            double alpha = alpha_exact(inst);
            alpha_bound.record(alpha - (double)b, 1e-9, witness);
            alpha_floor.record(1.0 - alpha, 1e-9, witness);
            exchange.record(exchange_inequality_sum(inst), 1e-9, witness);
        }

        // expected-cost identity under contraction, per edge
        for (long long t = 0; t < std::min<long long>(opts.trials, 200); ++t) {
            RateVector rates = detail::log_uniform_rates(m, rng);
            Instance inst = make_exponential_instance(g, rates);
            std::string witness = detail::witness_instance(g, rates, "opt_identity");
            double e_opt = opt_tree(inst).expected_cost;
            for (const Edge& e : g.edges()) {
                EdgeId star = exchange_edge(inst, e.id);
                double lhs = e_opt - 1.0 / rates.at(star);
                double rhs = opt_tree(inst.contracted(e.id)).expected_cost;
                opt_identity.record(std::abs(lhs - rhs), 1e-9, witness);
            }
        }

        // exchange-edge mean under opposing tie-breaks, rates chosen to tie
        for (long long t = 0; t < std::min<long long>(opts.trials, 100); ++t) {
            RateVector rates(m);
            for (double& r : rates) r = (double)(1 << (rng.next() % 3)); // 1, 2, or 4
            Instance inst = make_exponential_instance(g, rates);
            std::string witness = detail::witness_instance(g, rates, "estar_tie");
            TieBreak asc = {};
            TieBreak desc = [](EdgeId a, EdgeId b) { return a > b; };
            for (const Edge& e : g.edges()) {
                double ma = 1.0 / rates.at(exchange_edge(inst, e.id, asc));
                double mb = 1.0 / rates.at(exchange_edge(inst, e.id, desc));
                estar_ties.record(std::abs(ma - mb), 1e-12, witness);
            }
        }

        {
            RateVector rates = detail::log_uniform_rates(m, rng);
            Instance inst = make_exponential_instance(g, rates);
            std::string witness = detail::witness_instance(g, rates, "first_choice");
            std::vector<double> probs = first_choice_probs(inst);
            double total = 0.0;
            for (const Edge& e : g.edges()) total += probs.at(e.id);
            first_choice.record(std::abs(total - 1.0), 1e-12, witness);
        }
    }

    // Conditional identity: E[SAM | e sampled smallest] - 1/rate_e must match
    // E[SAM(G/e)], estimated by rejection sampling. Moderate rates keep the
    // acceptance probability workable.
    std::vector<MultiGraph> small = connected_multigraphs_upto(6, std::min(5, opts.max_edges));
    uint64_t small_index = 0;
    for (const MultiGraph& g : small) {
        ++small_index;
        if (g.vertex_count() < 2) continue;
        SplitMix64 rng = SplitMix64::stream(opts.seed, detail::kDomainRates + 1, small_index);
        RateVector rates(g.edge_count());
        for (double& r : rates) r = rng.uniform(0.5, 2.0);
        Instance inst = make_exponential_instance(g, rates);
        std::string witness = detail::witness_instance(g, rates, "conditional");
        for (const Edge& e : g.edges()) {
            McResult mc = conditional_expected_sam_mc(inst, e.id, opts.conditional_accepted,
                                                      opts.seed + 64 * small_index + e.id);
            double rhs = 1.0 / rates.at(e.id) + exact_expected_sam(inst.contracted(e.id));
            double z = std::abs(mc.estimate - rhs) / std::max(mc.stderror, 1e-300);
            conditional.record(z, 4.0, witness);
        }
    }

    // Exact recursion vs plain Monte Carlo on a spread of shapes.
    {
        std::vector<Instance> picks;
        picks.push_back(make_parallel_instance({1.0, 1.0}));
        picks.push_back(make_parallel_instance({3.0, 1.0}));
        picks.push_back(make_exponential_instance(MultiGraph::complete(3), {1.0, 2.0, 3.0}));
        picks.push_back(make_exponential_instance(MultiGraph::complete(4),
                                                  {0.5, 1.0, 2.0, 4.0, 8.0, 16.0}));
        SplitMix64 rng = SplitMix64::stream(opts.seed, detail::kDomainRates + 2, 0);
        MultiGraph path(4, {{0, 0, 1}, {1, 1, 2}, {2, 2, 3}});
        picks.push_back(make_exponential_instance(path, detail::log_uniform_rates(3, rng)));
        long long draws = std::max<long long>(opts.trials * 100, 100000);
        for (size_t i = 0; i < picks.size(); ++i) {
            double exact = exact_expected_sam(picks[i]);
            McResult mc = mc_expected_sam(picks[i], draws, opts.seed + i);
            double z = std::abs(mc.estimate - exact) / std::max(mc.stderror, 1e-300);
            exact_vs_mc.record(z, 4.0, instance_to_json(picks[i]).dump());
        }
    }

    // First-choice probabilities vs empirical argmin frequencies.
    {
        std::vector<Instance> picks;
        picks.push_back(make_parallel_instance({3.0, 1.0}));
        picks.push_back(make_exponential_instance(MultiGraph::complete(3), {1.0, 2.0, 3.0}));
        const long long draws = 1000000;
        for (size_t pi = 0; pi < picks.size(); ++pi) {
            const Instance& inst = picks[pi];
            const int m = inst.graph.edge_count();
            std::vector<long long> wins(m, 0);
            SampleVector s(m);
            for (long long i = 0; i < draws; ++i) {
                SplitMix64 rng = SplitMix64::stream(opts.seed, detail::kDomainRates + 3,
                                                    pi * draws + i);
                int argmin = -1;
                for (const Edge& e : inst.graph.edges()) {
                    s.at(e.id) = inst.dist.at(e.id).sample(rng);
                    if (argmin < 0 || s.at(e.id) < s.at(argmin)) argmin = e.id;
                }
                ++wins[argmin];
            }
            for (const Edge& e : inst.graph.edges()) {
                double p = first_choice_prob(inst, e.id);
                double freq = (double)wins[e.id] / (double)draws;
                double sigma = std::sqrt(p * (1.0 - p) / (double)draws);
                first_choice_mc.record(std::abs(freq - p) / sigma, 3.0,
                                       instance_to_json(inst).dump());
            }
        }
    }

    // Trees beyond the enumeration bound: only one spanning tree, so alpha
    // is exactly 1 and the largest bond is 1.
    {
        std::vector<Edge> path_edges, star_edges;
        for (int i = 0; i < 6; ++i) {
            path_edges.push_back({i, i, i + 1});
            star_edges.push_back({i, 0, i + 1});
        }
        SplitMix64 rng = SplitMix64::stream(opts.seed, detail::kDomainRates + 8, 0);
        for (const MultiGraph& tree :
             {MultiGraph(7, path_edges), MultiGraph(7, star_edges)}) {
            for (int t = 0; t < 50; ++t) {
                RateVector rates = detail::log_uniform_rates(6, rng);
                Instance inst = make_exponential_instance(tree, rates, "tree");
                double alpha = alpha_exact(inst);
                alpha_bound.record(alpha - (double)largest_bond(tree).size, 1e-9,
                                   instance_to_json(inst).dump());
                alpha_floor.record(1.0 - alpha, 1e-9, instance_to_json(inst).dump());
                exchange.record(exchange_inequality_sum(inst), 1e-9,
                                instance_to_json(inst).dump());
            }
        }
    }

    // Item-selection closed form on two-vertex multigraphs.
    for (int m = 1; m <= 6; ++m) {
        SplitMix64 rng = SplitMix64::stream(opts.seed, detail::kDomainRates + 4, m);
        for (long long t = 0; t < std::min<long long>(opts.trials, 100); ++t) {
            RateVector rates = detail::log_uniform_rates(m, rng);
            Instance inst = make_parallel_instance(rates);
            double via_recursion = exact_expected_sam(inst);
            double closed_form = item_selection_expected_sam(rates);
            items.record(std::abs(via_recursion - closed_form), 1e-12,
                         instance_to_json(inst).dump());
        }
    }

    return {alpha_bound,  alpha_floor,     exchange,    conditional, opt_identity,
            estar_ties,   first_choice,    first_choice_mc, exact_vs_mc, items};
}

namespace detail {

inline std::vector<MatroidOracle> registered_matroids(int max_graph_edges) {
    std::vector<MatroidOracle> out;
    for (const MultiGraph& g : connected_multigraphs_upto(5, std::min(5, max_graph_edges)))
        if (g.vertex_count() >= 2) out.push_back(MatroidOracle::graphic(g));
    for (int n = 1; n <= 5; ++n)
        for (int k = 1; k <= n; ++k) out.push_back(MatroidOracle::uniform(k, n));
    out.push_back(MatroidOracle::fano()); // non-graphic, non-uniform
    return out;
}

// Hyperplanes via closure: flats whose rank is rank(M) - 1. An independent
// route to cocircuits for the duality check.
inline std::vector<ElementSet> hyperplanes_by_closure(const MatroidOracle& m) {
    const ElementSet& ground = m.ground();
    const int g = (int)ground.size();
    const int r = m.rank();
    std::vector<ElementSet> out;
    for (uint32_t mask = 0; mask < (1u << g); ++mask) {
        ElementSet s;
        for (int i = 0; i < g; ++i)
            if (mask & (1u << i)) s.push_back(ground[i]);
        if (m.rank(s) != r - 1) continue;
        bool flat = true;
        for (ElementId e : ground) {
            if (std::binary_search(s.begin(), s.end(), e)) continue;
            ElementSet with = s;
            with.insert(std::lower_bound(with.begin(), with.end(), e), e);
            if (m.rank(with) == r - 1) {
                flat = false;
                break;
            }
        }
        if (flat) out.push_back(s);
    }
    return out;
}

inline std::string matroid_witness(const MatroidOracle& m) {
    std::string s = m.name() + " ground={";
    for (ElementId e : m.ground()) s += std::to_string(e) + ",";
    s += "}";
    return s;
}

inline std::string uniform_witness(int k, int n, const RateVector& rates) {
    nlohmann::ordered_json j;
    j["type"] = "uniform";
    j["k"] = k;
    j["n"] = n;
    j["rates"] = rates;
    return j.dump();
}

inline std::string graphic_witness(const MultiGraph& g, const RateVector& rates) {
    nlohmann::ordered_json j;
    j["type"] = "graphic";
    j["graph"] = nlohmann::ordered_json::parse(witness_instance(g, rates, "counterexample"));
    return j.dump();
}

} // namespace detail

// Matroid axioms, cocircuit structure, the generalized contraction lemmas,
// and agreement between the graphic-matroid and graph analyses.
inline std::vector<SuiteCheck> verify_matroids(const VerifyOptions& opts) {
    SuiteCheck axioms{"matroid_axioms"};
    SuiteCheck alpha_bound{"alpha_le_largest_cocircuit"};
    SuiteCheck cocircuit_monotone{"cocircuit_contraction_monotone"};
    SuiteCheck ground_bound{"ground_le_rank_times_cocircuit"};
    SuiteCheck circuit_weights{"tied_basis_circuit_max_weight_equal"};
    SuiteCheck duality{"hyperplane_cocircuit_duality"};
    SuiteCheck bonds_match{"graphic_cocircuits_are_bonds"};
    SuiteCheck cross_module{"graphic_sam_matches_graph_sam"};
    SuiteCheck uniform_size{"uniform_cocircuit_size"};

    std::vector<MatroidOracle> registered = detail::registered_matroids(opts.max_edges);

    for (size_t mi = 0; mi < registered.size(); ++mi) {
        const MatroidOracle& m = registered[mi];
        const ElementSet& ground = m.ground();
        const int g = (int)ground.size();
        std::string witness = detail::matroid_witness(m);

        // axioms: empty set, downward closure, exchange
        {
            bool ok = m.independent({});
            std::vector<ElementSet> indep_sets;
            for (uint32_t mask = 0; mask < (1u << g) && ok; ++mask) {
                ElementSet s;
                for (int i = 0; i < g; ++i)
                    if (mask & (1u << i)) s.push_back(ground[i]);
                if (!m.independent(s)) continue;
                indep_sets.push_back(s);
                for (size_t i = 0; i < s.size() && ok; ++i) {
                    ElementSet sub = s;
                    sub.erase(sub.begin() + i);
                    ok = m.independent(sub);
                }
            }
            for (size_t a = 0; a < indep_sets.size() && ok; ++a)
                for (size_t b = 0; b < indep_sets.size() && ok; ++b) {
                    if (indep_sets[a].size() >= indep_sets[b].size()) continue;
                    bool extended = false;
                    for (ElementId e : indep_sets[b]) {
                        if (std::binary_search(indep_sets[a].begin(), indep_sets[a].end(), e))
                            continue;
                        ElementSet with = indep_sets[a];
                        with.insert(std::lower_bound(with.begin(), with.end(), e), e);
                        if (m.independent(with)) {
                            extended = true;
                            break;
                        }
                    }
                    ok = extended;
                }
            axioms.record(ok ? 0.0 : 1.0, 0.5, witness);
        }

        bool loopless = true;
        for (ElementId e : ground) loopless = loopless && !m.is_loop(e);
        auto [cstar, cwitness] = m.largest_cocircuit();

        if (loopless && g > 0)
            ground_bound.record((double)g - (double)m.rank() * cstar, 0.0, witness);

        for (ElementId e : ground) {
            if (m.is_loop(e)) continue;
            int contracted = m.contracted(e).largest_cocircuit().first;
            cocircuit_monotone.record((double)(contracted - cstar), 0.0, witness);
        }

        // duality against the closure route
        {
            std::vector<ElementSet> from_hyperplanes;
            for (const ElementSet& h : detail::hyperplanes_by_closure(m)) {
                ElementSet c;
                for (ElementId e : ground)
                    if (!std::binary_search(h.begin(), h.end(), e)) c.push_back(e);
                from_hyperplanes.push_back(c);
            }
            std::sort(from_hyperplanes.begin(), from_hyperplanes.end());
            std::vector<ElementSet> direct = m.cocircuits();
            std::sort(direct.begin(), direct.end());
            duality.record(direct == from_hyperplanes ? 0.0 : 1.0, 0.5, witness);
        }

        // tied minimum bases: max circuit weights agree
        if (g > 0 && m.rank() > 0) {
            SplitMix64 rng = SplitMix64::stream(opts.seed, detail::kDomainRates + 5, mi);
            std::vector<ElementSet> basis_list = m.bases();
            for (int t = 0; t < 20; ++t) {
                std::vector<double> w(ground.back() + 1, 0.0);
                for (ElementId e : ground) w[e] = (double)(1 + rng.next() % 3);
                double best = std::numeric_limits<double>::infinity();
                for (const ElementSet& b : basis_list)
                    best = std::min(best, subset_weight(b, w));
                std::vector<ElementSet> min_bases;
                for (const ElementSet& b : basis_list)
                    if (subset_weight(b, w) == best) min_bases.push_back(b);
                for (size_t i = 0; i < min_bases.size(); ++i)
                    for (size_t j = i + 1; j < min_bases.size(); ++j)
                        for (ElementId e : ground) {
                            if (std::binary_search(min_bases[i].begin(), min_bases[i].end(), e) ||
                                std::binary_search(min_bases[j].begin(), min_bases[j].end(), e))
                                continue;
                            auto max_in = [&](const ElementSet& basis) {
                                double mx = 0.0;
                                for (ElementId f : m.fundamental_circuit(basis, e))
                                    if (f != e) mx = std::max(mx, w[f]);
                                return mx;
                            };
                            circuit_weights.record(
                                std::abs(max_in(min_bases[i]) - max_in(min_bases[j])), 0.0,
                                witness);
                        }
            }
        }
    }

    // Theorem-style bound over graphic and uniform instances.
    uint64_t graph_index = 0;
    for (const MultiGraph& g : connected_multigraphs_upto(6, opts.max_edges)) {
        ++graph_index;
        if (g.vertex_count() < 2) continue;
        MatroidOracle m = MatroidOracle::graphic(g);
        int cstar = m.largest_cocircuit().first;
        SplitMix64 rng = SplitMix64::stream(opts.seed, detail::kDomainRates + 6, graph_index);

        // cocircuits of the graphic matroid = bonds of the graph
        if (g.vertex_count() <= 5) {
            std::vector<ElementSet> coc = m.cocircuits();
            std::vector<std::vector<EdgeId>> bonds = all_bonds(g);
            std::sort(coc.begin(), coc.end());
            std::sort(bonds.begin(), bonds.end());
            bonds_match.record(coc == bonds ? 0.0 : 1.0, 0.5,
                               detail::witness_instance(g, {}, "bonds"));
        }

        for (long long t = 0; t < opts.trials; ++t) {
            RateVector rates = detail::log_uniform_rates(g.edge_count(), rng);
            MatroidInstance mi("graphic", m, rates);
            std::string witness = detail::graphic_witness(g, rates);
            alpha_bound.record(alpha_exact(mi) - (double)cstar, 1e-9, witness);
            if (t < 10) {
                Instance gi = make_exponential_instance(g, rates);
                cross_module.record(std::abs(exact_expected_sam(mi) - exact_expected_sam(gi)),
                                    1e-12, witness);
            }
        }
    }
    for (int n = 1; n <= 6; ++n)
        for (int k = 1; k <= n; ++k) {
            MatroidOracle m = MatroidOracle::uniform(k, n);
            auto [cstar, cw] = m.largest_cocircuit();
            for (const ElementSet& c : m.cocircuits())
                uniform_size.record(std::abs((double)c.size() - (double)(n - k + 1)), 0.0,
                                    detail::matroid_witness(m));
            SplitMix64 rng = SplitMix64::stream(opts.seed, detail::kDomainRates + 7,
                                                (uint64_t)(n * 10 + k));
            for (long long t = 0; t < opts.trials; ++t) {
                RateVector rates = detail::log_uniform_rates(n, rng);
                MatroidInstance mi("uniform", m, rates);
                alpha_bound.record(alpha_exact(mi) - (double)cstar, 1e-9,
                                   detail::uniform_witness(k, n, rates));
            }
        }

    return {axioms,        alpha_bound, cocircuit_monotone, ground_bound, circuit_weights,
            duality,       bonds_match, cross_module,       uniform_size};
}

} // namespace bondspan
