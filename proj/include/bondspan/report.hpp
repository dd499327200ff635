#pragma once

#include <map>
#include <optional>
#include <string>

#include <json.hpp>

#include "bondspan/bonds.hpp"
#include "bondspan/instance.hpp"
#include "bondspan/matroid_analysis.hpp"
#include "bondspan/montecarlo.hpp"
#include "bondspan/sam.hpp"

namespace bondspan {

struct LemmaCheck {
    bool pass = false;
    double residual = 0.0;
};

struct AnalysisReport {
    int b = 0; // largest bond (or cocircuit) size
    double e_opt = 0.0;
    std::optional<double> e_sam_exact;
    std::optional<McResult> e_sam_mc;
    double alpha = 0.0;
    std::map<std::string, LemmaCheck> lemma_checks;
};

// Full per-instance analysis. alpha uses the exact value when computed, the
// Monte Carlo estimate otherwise. The bound checks use a 1e-9 tolerance with
// the exact value and a 4-standard-error allowance with an estimate.
inline AnalysisReport analyze_instance(const Instance& inst, bool exact,
                                       std::optional<long long> mc_samples, uint64_t seed,
                                       int max_edges = kDefaultExactGuard) {
    AnalysisReport rep;
    rep.b = largest_bond(inst.graph).size;
    rep.e_opt = opt_tree(inst).expected_cost;
    if (exact) rep.e_sam_exact = exact_expected_sam(inst, max_edges);
    if (mc_samples) rep.e_sam_mc = mc_expected_sam(inst, *mc_samples, seed);

    double e_sam = rep.e_sam_exact   ? *rep.e_sam_exact
                   : rep.e_sam_mc    ? rep.e_sam_mc->estimate
                                     : 0.0;
    rep.alpha = rep.e_opt > 0.0 ? e_sam / rep.e_opt : 1.0;

    if (inst.all_exponential() && inst.graph.edge_count() > 0) {
        double tol = rep.e_sam_exact ? 1e-9
                                     : 4.0 * (rep.e_sam_mc ? rep.e_sam_mc->stderror : 0.0) /
                                           std::max(rep.e_opt, 1e-300);
        double residual = rep.alpha - (double)rep.b;
        rep.lemma_checks["alpha_le_largest_bond"] = {residual <= tol, residual};
        double slack = exchange_inequality_sum(inst);
        rep.lemma_checks["exchange_inequality"] = {slack <= 1e-9, slack};
    }
    return rep;
}

// Matroid analogue; b is the largest cocircuit size.
inline AnalysisReport analyze_matroid_instance(const MatroidInstance& inst,
                                               int max_elements = kDefaultExactGuard) {
    AnalysisReport rep;
    rep.b = inst.matroid.largest_cocircuit().first;
    rep.e_opt = opt_basis(inst).expected_cost;
    rep.e_sam_exact = exact_expected_sam(inst, max_elements);
    rep.alpha = rep.e_opt > 0.0 ? *rep.e_sam_exact / rep.e_opt : 1.0;
    double residual = rep.alpha - (double)rep.b;
    if (!inst.matroid.ground().empty())
        rep.lemma_checks["alpha_le_largest_cocircuit"] = {residual <= 1e-9, residual};
    return rep;
}

inline nlohmann::ordered_json report_to_json(const AnalysisReport& rep) {
    nlohmann::ordered_json j;
    j["b"] = rep.b;
    j["e_opt"] = rep.e_opt;
    if (rep.e_sam_exact) j["e_sam_exact"] = *rep.e_sam_exact;
    if (rep.e_sam_mc) {
        nlohmann::ordered_json mc;
        mc["estimate"] = rep.e_sam_mc->estimate;
        mc["stderr"] = rep.e_sam_mc->stderror;
        mc["n_samples"] = rep.e_sam_mc->n;
        mc["seed"] = rep.e_sam_mc->seed;
        j["e_sam_mc"] = mc;
    }
    j["alpha"] = rep.alpha;
    nlohmann::ordered_json checks = nlohmann::ordered_json::object();
    for (const auto& [name, check] : rep.lemma_checks) {
        nlohmann::ordered_json c;
        c["pass"] = check.pass;
        c["residual"] = check.residual;
        checks[name] = c;
    }
    j["lemma_checks"] = checks;
    return j;
}

} // namespace bondspan
