#include <catch2/catch_amalgamated.hpp>

#include "bondspan/instance.hpp"
#include "bondspan/matroid_analysis.hpp"

using namespace bondspan;
using nlohmann::json;

namespace {

json k3_json() {
    return json::parse(R"({
      "name": "k3",
      "vertices": 3,
      "edges": [
        {"id": "ab", "u": 0, "v": 1, "dist": {"type": "exp", "rate": 1.0}},
        {"id": "bc", "u": 1, "v": 2, "dist": {"type": "exp", "rate": 2.0}},
        {"id": "ac", "u": 0, "v": 2, "dist": {"type": "exp", "rate": 3.0}}
      ]
    })");
}

} // namespace

TEST_CASE("instance parsing assigns dense ids in label order") {
    Instance inst = instance_from_json(k3_json());
    CHECK(inst.name == "k3");
    CHECK(inst.graph.vertex_count() == 3);
    CHECK(inst.graph.edge_count() == 3);
    // labels sort ab < ac < bc
    CHECK(inst.labels == std::vector<std::string>{"ab", "ac", "bc"});
    CHECK(inst.dist.at(0).rate() == 1.0);
    CHECK(inst.dist.at(1).rate() == 3.0);
    CHECK(inst.dist.at(2).rate() == 2.0);
    CHECK(inst.all_exponential());
}

TEST_CASE("instance round trip preserves structure") {
    Instance inst = instance_from_json(k3_json());
    Instance again = instance_from_json(json::parse(instance_to_json(inst).dump()));
    CHECK(again.labels == inst.labels);
    CHECK(again.graph.edge_count() == inst.graph.edge_count());
    CHECK(again.rates() == inst.rates());
    for (int i = 0; i < 3; ++i) {
        CHECK(again.graph.edge(i).u == inst.graph.edge(i).u);
        CHECK(again.graph.edge(i).v == inst.graph.edge(i).v);
    }
}

TEST_CASE("discrete distributions round trip") {
    json j = json::parse(R"({
      "name": "coin",
      "vertices": 2,
      "edges": [
        {"id": "a", "u": 0, "v": 1, "dist": {"type": "discrete", "atoms": [[0.0, 0.5], [10.0, 0.5]]}},
        {"id": "b", "u": 0, "v": 1, "dist": {"type": "exp", "rate": 1.0}}
      ]
    })");
    Instance inst = instance_from_json(j);
    CHECK_FALSE(inst.all_exponential());
    CHECK_FALSE(inst.all_discrete());
    CHECK(inst.dist.at(0).atoms().size() == 2);
    CHECK(inst.dist.at(0).mean() == 5.0);
    Instance again = instance_from_json(json::parse(instance_to_json(inst).dump()));
    CHECK(again.dist.at(0).atoms() == inst.dist.at(0).atoms());
}

TEST_CASE("instance validation failures") {
    json j = k3_json();
    j["edges"][0]["dist"]["rate"] = 0.0;
    CHECK_THROWS_AS(instance_from_json(j), ValidationError);

    j = k3_json();
    j["edges"][0]["v"] = 0; // loop
    CHECK_THROWS_AS(instance_from_json(j), ValidationError);

    j = k3_json();
    j["edges"][0]["v"] = 5; // out of range
    CHECK_THROWS_AS(instance_from_json(j), ValidationError);

    j = k3_json();
    j["edges"][1]["id"] = "ab"; // duplicate label
    CHECK_THROWS_AS(instance_from_json(j), ValidationError);

    j = k3_json();
    j["edges"][0]["dist"] = {{"type", "weird"}};
    CHECK_THROWS_AS(instance_from_json(j), ValidationError);

    j = k3_json();
    j["edges"][0]["dist"] = {{"type", "discrete"},
                             {"atoms", json::array({json::array({0.0, 0.7}), json::array({1.0, 0.7})})}};
    CHECK_THROWS_AS(instance_from_json(j), ValidationError); // probs sum to 1.4

    j = k3_json();
    j.erase("vertices");
    CHECK_THROWS_AS(instance_from_json(j), ValidationError);
}

TEST_CASE("single vertex instances are valid") {
    json j = json::parse(R"({"name": "point", "vertices": 1, "edges": []})");
    Instance inst = instance_from_json(j);
    CHECK(inst.graph.vertex_count() == 1);
    CHECK(inst.graph.connected());
}

TEST_CASE("matroid instance files") {
    json g = json::parse(R"({"type": "graphic", "graph": {
      "name": "k3", "vertices": 3,
      "edges": [
        {"id": "a", "u": 0, "v": 1, "dist": {"type": "exp", "rate": 1.0}},
        {"id": "b", "u": 1, "v": 2, "dist": {"type": "exp", "rate": 2.0}},
        {"id": "c", "u": 0, "v": 2, "dist": {"type": "exp", "rate": 3.0}}
      ]}})");
    MatroidInstance mi = matroid_instance_from_json(g);
    CHECK(mi.matroid.ground().size() == 3);
    CHECK(mi.rates == RateVector{1.0, 2.0, 3.0});

    json u = json::parse(R"({"type": "uniform", "k": 2, "n": 4, "rates": [1, 2, 3, 4]})");
    MatroidInstance ui = matroid_instance_from_json(u);
    CHECK(ui.matroid.rank() == 2);
    CHECK(ui.rates.size() == 4);

    json bad = json::parse(R"({"type": "uniform", "k": 2, "n": 4, "rates": [1, 2]})");
    CHECK_THROWS_AS(matroid_instance_from_json(bad), ValidationError);
    json unknown = json::parse(R"({"type": "mystery"})");
    CHECK_THROWS_AS(matroid_instance_from_json(unknown), ValidationError);
}
