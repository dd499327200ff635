#pragma once

#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "bondspan/instance.hpp"
#include "bondspan/matroid.hpp"
#include "bondspan/sam.hpp"

namespace bondspan {

// A matroid with exponential element weights. Loops are rejected outright:
// a loop is in no basis, so a rate for it is meaningless.
struct MatroidInstance {
    std::string name;
    MatroidOracle matroid;
    RateVector rates;                // indexed by ElementId
    std::vector<std::string> labels; // indexed by ElementId

    MatroidInstance(std::string name_, MatroidOracle m, RateVector r,
                    std::vector<std::string> labels_ = {})
        : name(std::move(name_)), matroid(std::move(m)), rates(std::move(r)),
          labels(std::move(labels_)) {
        for (ElementId e : matroid.ground()) {
            if (matroid.is_loop(e)) throw ValidationError("matroid instance contains a loop");
            if ((size_t)e >= rates.size() || !(rates[e] > 0.0))
                throw ValidationError("missing or non-positive rate for element " +
                                      std::to_string(e));
        }
        if (labels.empty())
            for (size_t i = 0; i < rates.size(); ++i) labels.push_back(default_label((EdgeId)i));
    }

    std::vector<double> means() const {
        std::vector<double> m(rates.size(), 0.0);
        for (ElementId e : matroid.ground()) m[e] = 1.0 / rates[e];
        return m;
    }
};

// Minimum expected-weight basis and its cost.
inline OptResult opt_basis(const MatroidInstance& inst, const TieBreak& tie = {}) {
    std::vector<double> means = inst.means();
    OptResult r;
    r.tree = greedy_min_basis(inst.matroid, means, tie);
    r.expected_cost = subset_weight(r.tree, means);
    return r;
}

// Exact E[SAM] over a matroid: same conditioning on the first pick as for
// graphs, with contraction M/e and loop removal. Memoized over the set of
// contracted elements (an independent set, so order is irrelevant).
// Independence is tabulated per subset mask up front so the recursion itself
// is pure bit fiddling.
inline double exact_expected_sam(const MatroidInstance& inst, int max_elements = kDefaultExactGuard) {
    const ElementSet ground = inst.matroid.ground();
    const int g = (int)ground.size();
    if (max_elements > kExactGuardCap) max_elements = kExactGuardCap;
    if (g > max_elements)
        throw SizeGuardError("exact_expected_sam: ground set of " + std::to_string(g) +
                             " exceeds guard of " + std::to_string(max_elements));
    if (g == 0) return 0.0;

    std::vector<char> indep(size_t(1) << g, 0);
    {
        ElementSet s;
        for (uint32_t mask = 0; mask < (1u << g); ++mask) {
            s.clear();
            for (int i = 0; i < g; ++i)
                if (mask & (1u << i)) s.push_back(ground[i]);
            indep[mask] = inst.matroid.independent(s) ? 1 : 0;
        }
    }
    std::vector<double> rate_of(g);
    for (int i = 0; i < g; ++i) rate_of[i] = inst.rates.at(ground[i]);

    const double unset = -1.0;
    std::vector<double> memo(size_t(1) << g, unset);

    struct Eval {
        const std::vector<char>& indep;
        const std::vector<double>& rate_of;
        std::vector<double>& memo;
        int g;

        double operator()(uint32_t contracted) {
            double& slot = memo[contracted];
            if (slot >= 0.0) return slot;
            double total = 0.0;
            for (int i = 0; i < g; ++i)
                if (!(contracted & (1u << i)) && indep[contracted | (1u << i)])
                    total += rate_of[i];
            double value = 0.0;
            if (total > 0.0)
                for (int i = 0; i < g; ++i)
                    if (!(contracted & (1u << i)) && indep[contracted | (1u << i)])
                        value += (rate_of[i] / total) *
                                 (1.0 / rate_of[i] + (*this)(contracted | (1u << i)));
            slot = value;
            return value;
        }
    } eval{indep, rate_of, memo, g};

    return eval(0);
}

// E[SAM] / E[OPT]; at most the largest cocircuit size for every rate vector.
inline double alpha_exact(const MatroidInstance& inst, int max_elements = kDefaultExactGuard) {
    double e_opt = opt_basis(inst).expected_cost;
    double e_sam = exact_expected_sam(inst, max_elements);
    if (e_opt == 0.0) return 1.0;
    return e_sam / e_opt;
}

// Matroid instance file schema:
//   {"type": "graphic", "graph": <instance object>}      rates from edge dists
//   {"type": "uniform", "k": int, "n": int, "rates": [..]}
inline MatroidInstance matroid_instance_from_json(const nlohmann::json& j) {
    try {
        const std::string type = j.at("type").get<std::string>();
        if (type == "graphic") {
            Instance inst = instance_from_json(j.at("graph"));
            if (!inst.all_exponential())
                throw ValidationError("graphic matroid instance needs exponential edge weights");
            return MatroidInstance(inst.name, MatroidOracle::graphic(inst.graph), inst.rates(),
                                   inst.labels);
        }
        if (type == "uniform") {
            const int k = j.at("k").get<int>();
            const int n = j.at("n").get<int>();
            RateVector rates;
            for (const auto& r : j.at("rates")) rates.push_back(r.get<double>());
            if ((int)rates.size() != n)
                throw ValidationError("uniform matroid needs exactly n rates");
            return MatroidInstance("uniform_" + std::to_string(k) + "_" + std::to_string(n),
                                   MatroidOracle::uniform(k, n), std::move(rates));
        }
        throw ValidationError("unknown matroid type \"" + type + "\"");
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("matroid schema: ") + e.what());
    }
}

inline MatroidInstance load_matroid_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open matroid file: " + path);
    nlohmann::json j = nlohmann::json::parse(in);
    return matroid_instance_from_json(j);
}

} // namespace bondspan
