#pragma once

#include <algorithm>
#include <fstream>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "bondspan/distribution.hpp"
#include "bondspan/multigraph.hpp"

namespace bondspan {

using RateVector = std::vector<double>;   // indexed by EdgeId
using SampleVector = std::vector<double>; // indexed by EdgeId

// A multigraph together with one weight distribution per edge. Edge ids are
// dense over the *original* instance, so per-edge vectors (rates, means,
// samples) stay valid across minors; entries of removed edges are ignored.
struct Instance {
    std::string name;
    MultiGraph graph;
    std::vector<WeightDistribution> dist; // indexed by EdgeId
    std::vector<std::string> labels;      // file-facing edge names, indexed by EdgeId

    bool all_exponential() const {
        for (const Edge& e : graph.edges())
            if (!dist.at(e.id).is_exponential()) return false;
        return true;
    }

    bool all_discrete() const {
        for (const Edge& e : graph.edges())
            if (dist.at(e.id).is_exponential()) return false;
        return true;
    }

    RateVector rates() const {
        RateVector r(dist.size(), 0.0);
        for (const Edge& e : graph.edges()) r.at(e.id) = dist.at(e.id).rate();
        return r;
    }

    std::vector<double> means() const {
        std::vector<double> m(dist.size(), 0.0);
        for (const Edge& e : graph.edges()) m.at(e.id) = dist.at(e.id).mean();
        return m;
    }

    const std::string& label(EdgeId id) const {
        static const std::string unknown = "?";
        return id >= 0 && (size_t)id < labels.size() ? labels[id] : unknown;
    }

    // Same distributions on a minor of the graph.
    Instance with_graph(MultiGraph g) const { return {name, std::move(g), dist, labels}; }

    Instance contracted(EdgeId e) const { return with_graph(graph.contract(e).graph); }
};

inline std::string default_label(EdgeId id) { return "e" + std::to_string(id); }

inline Instance make_exponential_instance(MultiGraph g, RateVector rates,
                                          std::string name = "instance") {
    std::vector<WeightDistribution> dist;
    std::vector<std::string> labels;
    for (size_t i = 0; i < rates.size(); ++i) {
        dist.push_back(WeightDistribution::exponential(rates[i]));
        labels.push_back(default_label((EdgeId)i));
    }
    for (const Edge& e : g.edges())
        if ((size_t)e.id >= rates.size())
            throw ValidationError("missing rate for edge id " + std::to_string(e.id));
    return {std::move(name), std::move(g), std::move(dist), std::move(labels)};
}

// Two-vertex multigraph with one parallel edge per rate: the item-selection
// special case.
inline Instance make_parallel_instance(RateVector rates, std::string name = "items") {
    MultiGraph g = MultiGraph::parallel((int)rates.size());
    return make_exponential_instance(std::move(g), std::move(rates), std::move(name));
}

namespace detail {

inline WeightDistribution dist_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("type"))
        throw ValidationError("edge dist must be an object with a \"type\"");
    const std::string type = j.at("type").get<std::string>();
    if (type == "exp") return WeightDistribution::exponential(j.at("rate").get<double>());
    if (type == "discrete") {
        std::vector<std::pair<double, double>> atoms;
        for (const auto& a : j.at("atoms"))
            atoms.push_back({a.at(0).get<double>(), a.at(1).get<double>()});
        return WeightDistribution::discrete(std::move(atoms));
    }
    throw ValidationError("unknown dist type \"" + type + "\"");
}

inline nlohmann::ordered_json dist_to_json(const WeightDistribution& d) {
    nlohmann::ordered_json j;
    if (d.is_exponential()) {
        j["type"] = "exp";
        j["rate"] = d.rate();
    } else {
        j["type"] = "discrete";
        auto atoms = nlohmann::ordered_json::array();
        for (auto [value, prob] : d.atoms()) atoms.push_back({value, prob});
        j["atoms"] = atoms;
    }
    return j;
}

} // namespace detail

// Instance file schema:
//   { "name": str, "vertices": n,
//     "edges": [ { "id": str, "u": int, "v": int, "dist": {...} }, ... ] }
// Edge ids are assigned densely in lexicographic order of the edge names, so
// the default tie-break order matches the file's name order.
inline Instance instance_from_json(const nlohmann::json& j) {
    try {
        Instance inst;
        inst.name = j.value("name", "instance");
        const int n = j.at("vertices").get<int>();
        struct Raw {
            std::string label;
            int u, v;
            nlohmann::json dist;
        };
        std::vector<Raw> raw;
        for (const auto& je : j.at("edges"))
            raw.push_back({je.at("id").get<std::string>(), je.at("u").get<int>(),
                           je.at("v").get<int>(), je.at("dist")});
        std::sort(raw.begin(), raw.end(), [](const Raw& a, const Raw& b) { return a.label < b.label; });
        for (size_t i = 1; i < raw.size(); ++i)
            if (raw[i].label == raw[i - 1].label)
                throw ValidationError("duplicate edge id \"" + raw[i].label + "\"");
        std::vector<Edge> edges;
        for (size_t i = 0; i < raw.size(); ++i) {
            edges.push_back({(EdgeId)i, raw[i].u, raw[i].v});
            inst.labels.push_back(raw[i].label);
            inst.dist.push_back(detail::dist_from_json(raw[i].dist));
        }
        inst.graph = MultiGraph(n, std::move(edges));
        return inst;
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("instance schema: ") + e.what());
    }
}

inline nlohmann::ordered_json instance_to_json(const Instance& inst) {
    nlohmann::ordered_json j;
    j["name"] = inst.name;
    j["vertices"] = inst.graph.vertex_count();
    auto edges = nlohmann::ordered_json::array();
    for (const Edge& e : inst.graph.edges()) {
        nlohmann::ordered_json je;
        je["id"] = inst.label(e.id);
        je["u"] = e.u;
        je["v"] = e.v;
        je["dist"] = detail::dist_to_json(inst.dist.at(e.id));
        edges.push_back(je);
    }
    j["edges"] = edges;
    return j;
}

// Parses a file; JSON syntax errors propagate as nlohmann parse_error (with
// line and column), semantic problems as ValidationError.
inline Instance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open instance file: " + path);
    nlohmann::json j = nlohmann::json::parse(in); // may throw parse_error
    return instance_from_json(j);
}

inline void save_instance(const Instance& inst, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ValidationError("cannot write instance file: " + path);
    out << instance_to_json(inst).dump(2) << "\n";
}

} // namespace bondspan
