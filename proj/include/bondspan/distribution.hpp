#pragma once

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "bondspan/errors.hpp"
#include "bondspan/rng.hpp"

namespace bondspan {

// Per-edge weight distribution: Exponential(rate) or a finite list of
// non-negative atoms. Atom probabilities must sum to 1 within 1e-9.
class WeightDistribution {
public:
    static WeightDistribution exponential(double rate) {
        if (!(rate > 0.0) || !std::isfinite(rate))
            throw ValidationError("exponential rate must be positive and finite");
        WeightDistribution d;
        d.rate_ = rate;
        return d;
    }

    static WeightDistribution discrete(std::vector<std::pair<double, double>> atoms) {
        if (atoms.empty()) throw ValidationError("discrete distribution needs at least one atom");
        double total = 0.0;
        for (auto [value, prob] : atoms) {
            if (!(value >= 0.0) || !std::isfinite(value))
                throw ValidationError("atom value must be non-negative and finite");
            if (!(prob >= 0.0) || !std::isfinite(prob))
                throw ValidationError("atom probability must be non-negative");
            total += prob;
        }
        if (std::abs(total - 1.0) > 1e-9)
            throw ValidationError("atom probabilities sum to " + std::to_string(total) +
                                  ", expected 1");
        WeightDistribution d;
        d.atoms_ = std::move(atoms);
        return d;
    }

    // Point mass, handy for demo instances.
    static WeightDistribution constant(double value) { return discrete({{value, 1.0}}); }

    bool is_exponential() const { return atoms_.empty(); }

    double rate() const {
        if (!is_exponential()) throw ValidationError("distribution is not exponential");
        return rate_;
    }

    const std::vector<std::pair<double, double>>& atoms() const {
        if (is_exponential()) throw ValidationError("distribution is not discrete");
        return atoms_;
    }

    double mean() const {
        if (is_exponential()) return 1.0 / rate_;
        double m = 0.0;
        for (auto [value, prob] : atoms_) m += value * prob;
        return m;
    }

    double sample(SplitMix64& rng) const {
        if (is_exponential()) return rng.exponential(rate_);
        double u = rng.uniform01();
        double cdf = 0.0;
        for (auto [value, prob] : atoms_) {
            cdf += prob;
            if (u <= cdf) return value;
        }
        return atoms_.back().first;
    }

private:
    WeightDistribution() = default;
    double rate_ = 0.0;
    std::vector<std::pair<double, double>> atoms_;
};

} // namespace bondspan
