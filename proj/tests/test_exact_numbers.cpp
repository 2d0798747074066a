// Copyright 2026 The Pebbling Toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "naive_oracle.hpp"
#include "pebbling/exact_numbers.hpp"
#include "pebbling/families.hpp"
#include "pebbling/graph_io.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using namespace pebbling;

namespace {

std::vector<Graph> catalog(int max_n)
{
    std::vector<Graph> out;
    for (auto& g : read_graph6_file(std::string(TEST_DATA_DIR) + "/connected_n1-6.g6"))
        if (g.order() <= max_n)
            out.push_back(g);
    return out;
}

ExactOptions ascending()
{
    ExactOptions o;
    o.method = ScanMethod::ascending;
    return o;
}

} // namespace

TEST_CASE("named pebbling numbers")
{
    CHECK(pebbling_number(cycle_graph(5), 1).value == 5);
    CHECK(pebbling_number(cycle_graph(6), 2).value == 16);
    CHECK(pebbling_number(wheel_graph(4), 1).value == 5);
    CHECK(pebbling_number(wheel_graph(4), 2).value == 8);
    CHECK(rooted_pebbling_number(path_graph(4), 0, 1).value == 8);
    CHECK(rooted_pebbling_number(complete_graph(4), 2, 1).value == 4);
    CHECK(pebbling_number(Graph(1, {}), 3).value == 3);
}

TEST_CASE("optimal pebbling numbers")
{
    for (int n = 2; n <= 6; ++n)
        CHECK(optimal_pebbling_number(complete_graph(n), 1).value == 2);
    CHECK(optimal_pebbling_number(cycle_graph(4), 1).value == 3);
    CHECK(optimal_pebbling_number(path_graph(3), 1).value == 2);
    auto p3 = optimal_pebbling_number(path_graph(3), 2);
    CHECK(p3.value == naive::pi_star(path_graph(3), 2));
    CHECK(is_t_fold_solvable(path_graph(3), *p3.witness, 2));
}

TEST_CASE("arbitrary target numbers")
{
    auto c5 = cycle_graph(5);
    CHECK(arbitrary_target_number(c5, 1).value == pebbling_number(c5, 1).value);
    CHECK(arbitrary_target_number(cycle_graph(6), 2).value == 16);
    CHECK(arbitrary_target_number(complete_graph(3), 2).value == 5);
}

TEST_CASE("witnesses certify their values")
{
    auto c6 = pebbling_number(cycle_graph(6), 1);
    CHECK(c6.witness->size() == 7);
    CHECK(c6.witness->support().size() == 1);
    auto k3 = max_unsolvable_witness(complete_graph(3), 1);
    CHECK(k3.size() == 2);
    CHECK(k3.support().size() == 2);
    auto p3 = max_unsolvable_witness(path_graph(3), 1);
    CHECK(p3.size() == 3);
    CHECK(p3.support().size() == 1);
    CHECK(p3[1] == 0);
}

TEST_CASE("brute-force oracle agreement on every connected graph up to 4 vertices")
{
    for (const auto& g : catalog(4)) {
        for (int t = 1; t <= 2; ++t) {
            REQUIRE(pebbling_number(g, t).value == naive::pi(g, t));
            REQUIRE(optimal_pebbling_number(g, t).value == naive::pi_star(g, t));
            REQUIRE(arbitrary_target_number(g, t).value == naive::pi_arbitrary(g, t));
            for (Vertex r = 0; r < g.order(); ++r)
                REQUIRE(rooted_pebbling_number(g, r, t).value == naive::pi_rooted(g, r, t));
        }
    }
}

TEST_CASE("boundary search equals the ascending scan on n <= 5")
{
    for (const auto& g : catalog(5)) {
        for (int t = 1; t <= 2; ++t) {
            auto a = pebbling_number(g, t);
            auto b = pebbling_number(g, t, ascending());
            REQUIRE(a.value == b.value);
            REQUIRE_FALSE(is_t_fold_solvable(g, *a.witness, t));
            REQUIRE(a.witness->size() == a.value - 1);
        }
    }
}

TEST_CASE("symmetry reduction does not change values")
{
    ExactOptions plain;
    plain.use_symmetry = false;
    for (auto g : {cycle_graph(6), hypercube_graph(3), wheel_graph(5), star_graph(4)}) {
        CHECK(pebbling_number(g, 1).value == pebbling_number(g, 1, plain).value);
        CHECK(optimal_pebbling_number(g, 1).value == optimal_pebbling_number(g, 1, plain).value);
    }
}

TEST_CASE("adding an edge never raises pi_t")
{
    std::mt19937 rng(21);
    auto graphs = catalog(6);
    for (int trial = 0; trial < 60; ++trial) {
        const Graph& g = graphs[1 + rng() % (graphs.size() - 1)];
        std::vector<Edge> missing;
        for (Vertex u = 0; u < g.order(); ++u)
            for (Vertex v = u + 1; v < g.order(); ++v)
                if (!g.adjacent(u, v))
                    missing.emplace_back(u, v);
        if (missing.empty())
            continue;
        auto edges = g.edges();
        edges.push_back(missing[rng() % missing.size()]);
        Graph h(g.order(), edges);
        int t = 1 + static_cast<int>(rng() % 2);
        REQUIRE(pebbling_number(h, t).value <= pebbling_number(g, t).value);
        REQUIRE(optimal_pebbling_number(h, t).value <= optimal_pebbling_number(g, t).value);
    }
}

TEST_CASE("lower bound 2^D t and growth in t")
{
    for (const auto& g : catalog(5)) {
        if (g.order() < 2)
            continue;
        long prev = 0;
        for (int t = 1; t <= 3; ++t) {
            long v = pebbling_number(g, t).value;
            REQUIRE(v >= (1L << g.diameter()) * t);
            REQUIRE(v > prev);
            prev = v;
        }
    }
}

TEST_CASE("budgets refuse explicitly")
{
    ExactOptions small;
    small.budget.max_vertices = 5;
    CHECK_THROWS_AS(pebbling_number(path_graph(6), 1, small), Refusal);
    small.budget.max_t = 1;
    CHECK_THROWS_AS(pebbling_number(path_graph(3), 2, small), Refusal);
    ExactOptions tight;
    tight.budget.max_pebbles = 20;
    CHECK_THROWS_AS(pebbling_number(path_graph(7), 1, tight), Refusal);
    CHECK_THROWS_AS(pebbling_number(Graph(3, {{0, 1}}), 1), DisconnectedGraph);
    CHECK_THROWS_AS(pebbling_number(path_graph(3), 0), std::invalid_argument);
}

TEST_CASE("stat json")
{
    auto g = cycle_graph(5);
    auto j = to_json(g, pebbling_number(g, 1));
    CHECK(j["value"] == 5);
    CHECK(j["kind"] == "pi_t");
    CHECK(j["graph"] == serialize_graph6(g));
    CHECK(j["witness"].size() == 5);
    CHECK(j.contains("root"));
}

TEST_CASE("leaf-supported search on trees matches the general search")
{
    ExactOptions general;
    general.search.tree_fast_path = false;
    for (const auto& g : read_graph6_file(std::string(TEST_DATA_DIR) + "/trees_n1-8.g6")) {
        if (g.order() < 2 || g.order() > 6)
            continue;
        for (Vertex r = 0; r < g.order(); ++r)
            for (int t = 1; t <= 2; ++t)
                REQUIRE(rooted_pebbling_number(g, r, t).value == rooted_pebbling_number(g, r, t, general).value);
    }
}
