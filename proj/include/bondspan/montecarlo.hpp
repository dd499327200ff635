#pragma once

#include <atomic>
#include <cmath>
#include <cstdint>
#include <thread>
#include <vector>

#include "bondspan/instance.hpp"
#include "bondspan/mst.hpp"
#include "bondspan/rng.hpp"
#include "bondspan/sam.hpp"

namespace bondspan {

struct McResult {
    double estimate = 0.0;
    double stderror = 0.0; // sample standard deviation / sqrt(n)
    long long n = 0;
    uint64_t seed = 0;
};

namespace detail {

inline constexpr uint64_t kDomainSamDraw = 1;
inline constexpr uint64_t kDomainConditional = 2;

inline constexpr long long kMcBlock = 1 << 16;

// Runs per_draw(index) for indices [0, n) split into fixed-size blocks that
// worker threads pick up dynamically. Each draw derives its own RNG stream
// from (seed, index) and block partial sums are combined in block order, so
// the result is bit-identical for fixed (seed, n) regardless of thread count.
// Every thread works on its own copy of per_draw; scratch buffers captured by
// value stay thread-local.
template <typename PerDraw>
McResult mc_accumulate(long long n, uint64_t seed, PerDraw per_draw) {
    if (n < 1) throw ValidationError("Monte Carlo draw count must be >= 1");
    const long long blocks = (n + kMcBlock - 1) / kMcBlock;
    std::vector<double> sums((size_t)blocks, 0.0), sumsqs((size_t)blocks, 0.0);

    auto run_block = [&](PerDraw& draw, long long b) {
        const long long lo = b * kMcBlock;
        const long long hi = std::min(n, lo + kMcBlock);
        double sum = 0.0, sumsq = 0.0;
        for (long long i = lo; i < hi; ++i) {
            double x = draw((uint64_t)i);
            sum += x;
            sumsq += x * x;
        }
        sums[(size_t)b] = sum;
        sumsqs[(size_t)b] = sumsq;
    };

    unsigned threads = std::min<unsigned>(std::thread::hardware_concurrency(), (unsigned)blocks);
    if (threads <= 1) {
        for (long long b = 0; b < blocks; ++b) run_block(per_draw, b);
    } else {
        std::atomic<long long> next{0};
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back([&, per_draw]() mutable {
                for (long long b = next++; b < blocks; b = next++) run_block(per_draw, b);
            });
        for (auto& t : pool) t.join();
    }

    double sum = 0.0, sumsq = 0.0;
    for (long long b = 0; b < blocks; ++b) {
        sum += sums[(size_t)b];
        sumsq += sumsqs[(size_t)b];
    }
    McResult r;
    r.n = n;
    r.seed = seed;
    r.estimate = sum / (double)n;
    if (n > 1) {
        double var = (sumsq - (double)n * r.estimate * r.estimate) / (double)(n - 1);
        r.stderror = std::sqrt(std::max(0.0, var) / (double)n);
    }
    return r;
}

} // namespace detail

// Monte Carlo estimate of E[w(T^SAM)]: per draw, sample the decision weights,
// build the SAM tree, then pay independently sampled true weights.
inline McResult mc_expected_sam(const Instance& inst, long long n, uint64_t seed,
                                const TieBreak& tie = {}) {
    if (!inst.graph.connected()) throw DisconnectedError("mc_expected_sam requires a connected graph");
    SampleVector samples(inst.dist.size(), 0.0);
    auto per_draw = [&, samples](uint64_t i) mutable {
        SplitMix64 rng = SplitMix64::stream(seed, detail::kDomainSamDraw, i);
        for (const Edge& e : inst.graph.edges()) samples.at(e.id) = inst.dist.at(e.id).sample(rng);
        std::vector<EdgeId> tree = sam_tree(inst, samples, tie);
        double cost = 0.0;
        for (EdgeId t : tree) cost += inst.dist.at(t).sample(rng);
        return cost;
    };
    return detail::mc_accumulate(n, seed, per_draw);
}

// Monte Carlo estimate of E[w(T^SAM) | edge e is sampled strictly smallest].
// Plain rejection sampling over the decision weights; does not rely on any
// contraction identity, so it can serve as an independent check of one.
inline McResult conditional_expected_sam_mc(const Instance& inst, EdgeId e, long long n_accepted,
                                            uint64_t seed, const TieBreak& tie = {}) {
    if (!inst.graph.connected())
        throw DisconnectedError("conditional_expected_sam_mc requires a connected graph");
    inst.graph.edge(e);
    if (!inst.all_exponential())
        throw ValidationError("conditional_expected_sam_mc expects exponential weights");
    SampleVector samples(inst.dist.size(), 0.0);
    auto per_draw = [&, samples](uint64_t i) mutable {
        SplitMix64 rng = SplitMix64::stream(seed, detail::kDomainConditional, i);
        while (true) {
            bool strict_min = true;
            for (const Edge& f : inst.graph.edges()) samples.at(f.id) = inst.dist.at(f.id).sample(rng);
            for (const Edge& f : inst.graph.edges())
                if (f.id != e && samples.at(f.id) <= samples.at(e)) {
                    strict_min = false;
                    break;
                }
            if (!strict_min) continue;
            std::vector<EdgeId> tree = sam_tree(inst, samples, tie);
            double cost = 0.0;
            for (EdgeId t : tree) cost += inst.dist.at(t).sample(rng);
            return cost;
        }
    };
    return detail::mc_accumulate(n_accepted, seed, per_draw);
}

// E[SAM] / E[OPT] with the numerator estimated by Monte Carlo.
inline McResult alpha_mc(const Instance& inst, long long n, uint64_t seed, const TieBreak& tie = {}) {
    double e_opt = opt_tree(inst, tie).expected_cost;
    McResult sam = mc_expected_sam(inst, n, seed, tie);
    if (e_opt == 0.0) return {1.0, 0.0, n, seed};
    return {sam.estimate / e_opt, sam.stderror / e_opt, n, seed};
}

} // namespace bondspan
