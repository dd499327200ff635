#include <catch2/catch_amalgamated.hpp>

#include "bondspan/enumerate.hpp"
#include "bondspan/rng.hpp"
#include "bondspan/sam.hpp"
#include "oracle_helpers.hpp"

using namespace bondspan;
using Catch::Approx;

namespace {

Instance separation_example(double big) {
    // two parallel edges: a deterministic unit weight vs a heavy-tailed coin
    MultiGraph g = MultiGraph::parallel(2);
    std::vector<WeightDistribution> dist{
        WeightDistribution::constant(1.0),
        WeightDistribution::discrete({{0.0, 1.0 - 1.0 / big}, {big * big, 1.0 / big}})};
    return {"separation", g, dist, {"unit", "coin"}};
}

Instance symmetric_example(double big) {
    MultiGraph g = MultiGraph::parallel(2);
    std::vector<WeightDistribution> dist{
        WeightDistribution::constant(1.0),
        WeightDistribution::discrete({{0.0, 0.5}, {big, 0.5}})};
    return {"symmetric", g, dist, {"unit", "coin"}};
}

} // namespace

TEST_CASE("distribution means") {
    CHECK(WeightDistribution::exponential(2.0).mean() == Approx(0.5));
    // value M^2 with probability 1/M has mean M
    CHECK(WeightDistribution::discrete({{0.0, 0.9}, {100.0, 0.1}}).mean() == Approx(10.0));
    CHECK(WeightDistribution::constant(1.0).mean() == Approx(1.0));
}

TEST_CASE("distribution validation") {
    CHECK_THROWS_AS(WeightDistribution::exponential(0.0), ValidationError);
    CHECK_THROWS_AS(WeightDistribution::exponential(-1.0), ValidationError);
    CHECK_THROWS_AS(WeightDistribution::discrete({{0.0, 0.5}, {1.0, 0.6}}), ValidationError);
    CHECK_THROWS_AS(WeightDistribution::discrete({{-1.0, 1.0}}), ValidationError);
    CHECK_THROWS_AS(WeightDistribution::discrete({}), ValidationError);
    // probabilities off by less than 1e-9 are accepted
    CHECK_NOTHROW(WeightDistribution::discrete({{0.0, 0.5}, {1.0, 0.5 + 5e-10}}));
}

TEST_CASE("opt tree minimizes expected weight") {
    Instance par = make_parallel_instance({3.0, 1.0});
    OptResult r = opt_tree(par);
    CHECK(r.tree == std::vector<EdgeId>{0}); // the rate-3 edge has the smaller mean
    CHECK(r.expected_cost == Approx(1.0 / 3.0));

    // misleading coin: the deterministic unit edge is optimal
    OptResult sep = opt_tree(separation_example(10.0));
    CHECK(sep.tree == std::vector<EdgeId>{0});
    CHECK(sep.expected_cost == Approx(1.0));

    MultiGraph path(3, {{0, 0, 1}, {1, 1, 2}});
    Instance tree_inst = make_exponential_instance(path, {2.0, 4.0});
    OptResult t = opt_tree(tree_inst);
    CHECK(t.tree == std::vector<EdgeId>{0, 1});
    CHECK(t.expected_cost == Approx(0.5 + 0.25));
}

TEST_CASE("sam tree follows the samples") {
    Instance k3 = make_exponential_instance(MultiGraph::complete(3), {1.0, 1.0, 1.0});
    CHECK(sam_tree(k3, {0.1, 0.2, 0.9}) == std::vector<EdgeId>{0, 1});
    Instance par = make_parallel_instance({1.0, 1.0});
    CHECK(sam_tree(par, {0.5, 0.4}) == std::vector<EdgeId>{1});
    CHECK(sam_tree(par, {0.5, 0.5}) == std::vector<EdgeId>{0}); // tie: id order
    TieBreak desc = [](EdgeId a, EdgeId b) { return a > b; };
    CHECK(sam_tree(par, {0.5, 0.5}, desc) == std::vector<EdgeId>{1});
    CHECK_THROWS_AS(sam_tree(par, {0.5}), ValidationError); // missing sample
}

TEST_CASE("first choice probabilities") {
    Instance even = make_parallel_instance({1.0, 1.0});
    CHECK(first_choice_prob(even, 0) == Approx(0.5));
    CHECK(first_choice_prob(even, 1) == Approx(0.5));
    Instance skew = make_parallel_instance({3.0, 1.0});
    CHECK(first_choice_prob(skew, 0) == Approx(0.75));
    Instance k3 = make_exponential_instance(MultiGraph::complete(3), {1.0, 2.0, 3.0});
    CHECK(first_choice_prob(k3, 0) == Approx(1.0 / 6.0));
    CHECK(first_choice_prob(k3, 1) == Approx(2.0 / 6.0));
    CHECK(first_choice_prob(k3, 2) == Approx(3.0 / 6.0));
    CHECK_THROWS_AS(first_choice_prob(separation_example(10.0), 0), ValidationError);
}

TEST_CASE("exact expected SAM cost on two parallel edges") {
    CHECK(exact_expected_sam(make_parallel_instance({1.0, 1.0})) == Approx(1.0));
    Instance skew = make_parallel_instance({3.0, 1.0});
    CHECK(exact_expected_sam(skew) == Approx(0.5));
    CHECK(alpha_exact(skew) == Approx(1.5));
}

TEST_CASE("exact expected SAM equals total mean on trees") {
    MultiGraph path(4, {{0, 0, 1}, {1, 1, 2}, {2, 2, 3}});
    SplitMix64 rng(7);
    for (int t = 0; t < 20; ++t) {
        RateVector rates{rng.log_uniform(1e-2, 1e2), rng.log_uniform(1e-2, 1e2),
                         rng.log_uniform(1e-2, 1e2)};
        Instance inst = make_exponential_instance(path, rates);
        double total_mean = 1.0 / rates[0] + 1.0 / rates[1] + 1.0 / rates[2];
        CHECK(exact_expected_sam(inst) == Approx(total_mean).epsilon(1e-12));
        CHECK(alpha_exact(inst) == Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("exact recursion honors its guards") {
    Instance big = make_parallel_instance(RateVector(13, 1.0));
    CHECK_THROWS_AS(exact_expected_sam(big), SizeGuardError);
    CHECK_NOTHROW(exact_expected_sam(big, 13));
    CHECK_THROWS_AS(exact_expected_sam(separation_example(10.0)), ValidationError);
    MultiGraph disconnected(2, {});
    Instance bad{"x", disconnected, {}, {}};
    CHECK_THROWS_AS(exact_expected_sam(bad), DisconnectedError);
}

TEST_CASE("instances need a rate for every edge") {
    CHECK_THROWS_AS(make_exponential_instance(MultiGraph::complete(3), {1.0, 2.0}),
                    ValidationError);
}

TEST_CASE("item selection closed form") {
    CHECK(item_selection_expected_sam({1.0, 1.0, 1.0}) == Approx(1.0));
    CHECK(item_selection_expected_opt({1.0, 1.0, 1.0}) == Approx(1.0));
    CHECK(item_selection_expected_sam({4.0}) == Approx(0.25));
    CHECK_THROWS_AS(item_selection_expected_sam({}), ValidationError);

    // with one dominant rate the ratio approaches the item count
    double k = 1e4;
    RateVector rates{k, 1.0, 1.0};
    double ratio = item_selection_expected_sam(rates) / item_selection_expected_opt(rates);
    CHECK(ratio == Approx(3.0 * k / (k + 2.0)));
    CHECK(ratio >= 2.99);
}

TEST_CASE("exchange edge") {
    Instance skew = make_parallel_instance({3.0, 1.0});
    CHECK(exchange_edge(skew, 1) == 0); // on the 2-cycle the partner is the exchange
    CHECK(exchange_edge(skew, 0) == 0); // in the optimal tree: e itself

    Instance k3 = make_exponential_instance(MultiGraph::complete(3), {1.0, 2.0, 3.0});
    // optimal tree is {1, 2}; edge 0 has mean 1, cycle partners have means 1/2 and 1/3
    CHECK(opt_tree(k3).tree == std::vector<EdgeId>{1, 2});
    CHECK(exchange_edge(k3, 0) == 1);
    CHECK(exchange_edge_info(k3, 0).e_unique_cycle_max);

    // equal rates: edge 0 ties the cycle maximum, which the info call flags
    Instance flat = make_exponential_instance(MultiGraph::complete(3), {1.0, 1.0, 1.0});
    CHECK_FALSE(exchange_edge_info(flat, 2).e_unique_cycle_max);
}

TEST_CASE("exchange inequality sum") {
    MultiGraph path(3, {{0, 0, 1}, {1, 1, 2}});
    Instance tree_inst = make_exponential_instance(path, {2.0, 5.0});
    CHECK(exchange_inequality_sum(tree_inst) == Approx(0.0).margin(1e-12));

    // two parallel edges, rates (3,1): terms -1/2 and 1/2 - 1/3
    Instance skew = make_parallel_instance({3.0, 1.0});
    CHECK(exchange_inequality_sum(skew) == Approx(-1.0 / 3.0));

    SplitMix64 rng(99);
    MultiGraph k4 = MultiGraph::complete(4);
    for (int t = 0; t < 1000; ++t) {
        RateVector rates(6);
        for (double& r : rates) r = rng.log_uniform(1e-2, 1e2);
        CHECK(exchange_inequality_sum(make_exponential_instance(k4, rates)) <= 1e-9);
    }
}

TEST_CASE("alpha stays within the bond bound") {
    double k = 1e3;
    Instance skew = make_parallel_instance({k, 1.0});
    CHECK(alpha_exact(skew) == Approx(2.0 * k / (k + 1.0)));

    Instance flat = make_exponential_instance(MultiGraph::complete(3), {1.0, 1.0, 1.0});
    double a = alpha_exact(flat);
    CHECK(a >= 1.0);
    CHECK(a <= 2.0);
}

TEST_CASE("adaptive expected minimum for the separation examples") {
    // E[min(1, coin)]: the coin is 0 with probability 0.9
    CHECK(adaptive_expected_min(separation_example(10.0)) == Approx(0.1));
    // symmetric coin: 0 or 10, each half
    CHECK(adaptive_expected_min(symmetric_example(10.0)) == Approx(0.5));

    // deterministic weights: adaptive = plain MST weight
    MultiGraph k3 = MultiGraph::complete(3);
    std::vector<WeightDistribution> dist{WeightDistribution::constant(1.0),
                                         WeightDistribution::constant(2.0),
                                         WeightDistribution::constant(3.0)};
    Instance det{"det", k3, dist, {"a", "b", "c"}};
    CHECK(adaptive_expected_min(det) == Approx(3.0));

    CHECK_THROWS_AS(adaptive_expected_min(make_parallel_instance({1.0, 1.0})), ValidationError);
}

TEST_CASE("contraction recursion matches the order-statistics oracle") {
    SplitMix64 rng(12);
    for (const MultiGraph& g : connected_multigraphs_upto(5, 5)) {
        if (g.vertex_count() < 2) continue;
        for (int t = 0; t < 20; ++t) {
            RateVector rates(g.edge_count());
            for (double& r : rates) r = rng.log_uniform(1e-2, 1e2);
            Instance inst = make_exponential_instance(g, rates);
            double via_orders = oracle::expected_sam_by_order_statistics(inst);
            CHECK(exact_expected_sam(inst) == Approx(via_orders).epsilon(1e-12));
        }
    }
    // one denser shape: the complete graph on four vertices
    for (int t = 0; t < 10; ++t) {
        RateVector rates(6);
        for (double& r : rates) r = rng.log_uniform(1e-1, 1e1);
        Instance inst = make_exponential_instance(MultiGraph::complete(4), rates);
        double via_orders = oracle::expected_sam_by_order_statistics(inst);
        CHECK(exact_expected_sam(inst) == Approx(via_orders).epsilon(1e-12));
    }
}

TEST_CASE("separation examples: exact values by sample-atom enumeration") {
    // decision draw misleads with probability 0.9, so SAM usually buys the coin
    Instance sep = separation_example(10.0);
    CHECK(oracle::expected_sam_by_enumeration(sep) == Approx(9.1));
    CHECK(opt_tree(sep).expected_cost == Approx(1.0));

    // symmetric coin: half the time SAM buys the coin at mean 5, else the unit
    Instance sym = symmetric_example(10.0);
    CHECK(oracle::expected_sam_by_enumeration(sym) == Approx(3.0));
    CHECK(opt_tree(sym).expected_cost == Approx(1.0));
}
