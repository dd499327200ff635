#include <catch2/catch_amalgamated.hpp>

#include "bondspan/verify.hpp"

using namespace bondspan;

// The suites are the workhorse checks behind `bondspan verify`; the unit run
// uses reduced trial counts, the acceptance binary runs the full settings.

TEST_CASE("suite checks keep the first failing witness") {
    SuiteCheck c{"demo"};
    c.record(-1.0, 0.0, "fine");
    CHECK(c.pass());
    c.record(2.0, 0.0, "first_bad");
    c.record(3.0, 0.0, "second_bad");
    CHECK_FALSE(c.pass());
    CHECK(c.cases == 3);
    CHECK(c.failures == 2);
    CHECK(c.worst == 3.0);
    CHECK(c.counterexample == "first_bad");
}

TEST_CASE("graph suite: contraction and bond lemmas hold exhaustively") {
    VerifyOptions opts;
    opts.max_edges = 7; // exhaustive family: <= 5 vertices, <= 7 edges
    opts.trials = 30;
    opts.seed = 1;
    for (const SuiteCheck& c : verify_graphs(opts)) {
        INFO(c.name << " worst residual " << c.worst << " over " << c.cases << " cases");
        CHECK(c.pass());
        CHECK(c.cases > 0);
    }
}

TEST_CASE("stochastic suite: bound, identities, and estimator agreement") {
    VerifyOptions opts;
    opts.max_edges = 6;
    opts.trials = 60;
    opts.conditional_accepted = 5000;
    opts.seed = 2;
    for (const SuiteCheck& c : verify_stochastic(opts)) {
        INFO(c.name << " worst residual " << c.worst << " over " << c.cases << " cases");
        CHECK(c.pass());
        CHECK(c.cases > 0);
    }
}

TEST_CASE("matroid suite: axioms, duality, and the cocircuit bound") {
    VerifyOptions opts;
    opts.max_edges = 6;
    opts.trials = 60;
    opts.seed = 3;
    for (const SuiteCheck& c : verify_matroids(opts)) {
        INFO(c.name << " worst residual " << c.worst << " over " << c.cases << " cases");
        CHECK(c.pass());
        CHECK(c.cases > 0);
    }
}
