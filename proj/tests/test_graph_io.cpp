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

#include "pebbling/families.hpp"
#include "pebbling/graph_io.hpp"

#include <catch_amalgamated.hpp>

#include <random>
#include <sstream>

using namespace pebbling;

TEST_CASE("graph6 encodings match the reference encoder")
{
    CHECK(serialize_graph6(path_graph(3)) == "Bg");
    CHECK(serialize_graph6(complete_graph(4)) == "C~");
    CHECK(serialize_graph6(cycle_graph(5)) == "Dhc");
    CHECK(serialize_graph6(complete_graph(1)) == "@");
    CHECK(serialize_graph6(complete_graph(2)) == "A_");
    CHECK(serialize_graph6(Graph(3, {})) == "B?");
    auto petersen = parse_graph6("IheA@GUAo");
    CHECK(petersen.order() == 10);
    CHECK(petersen.edge_count() == 15);
    CHECK(petersen.diameter() == 2);
}

TEST_CASE("graph6 header and long-form sizes")
{
    CHECK(parse_graph6(">>graph6<<Bg") == path_graph(3));
    auto p70 = path_graph(70);
    auto text = serialize_graph6(p70);
    CHECK(text.substr(0, 4) == "~?@E");
    CHECK(text.size() == 407);
    CHECK(parse_graph6(text) == p70);
}

TEST_CASE("graph6 round trip on random graphs")
{
    std::mt19937 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        int n = trial % 80;
        std::bernoulli_distribution coin(0.15);
        std::vector<Edge> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin(rng))
                    edges.emplace_back(u, v);
        Graph g(n, edges);
        REQUIRE(parse_graph6(serialize_graph6(g)) == g);
    }
}

TEST_CASE("malformed graph6 is rejected")
{
    CHECK_THROWS_AS(parse_graph6(""), Graph6Error);
    CHECK_THROWS_AS(parse_graph6("B"), Graph6Error);       // truncated
    CHECK_THROWS_AS(parse_graph6("Bgg"), Graph6Error);     // trailing bytes
    CHECK_THROWS_AS(parse_graph6("Bh"), Graph6Error);      // nonzero padding
    CHECK_THROWS_AS(parse_graph6("B\x7f"), Graph6Error);   // out of range
    CHECK_THROWS_AS(parse_graph6("~??Bg"), Graph6Error);   // non-canonical long header
}

TEST_CASE("graph6 streams skip blank lines")
{
    std::istringstream in("Bg\n\nC~\r\nDhc\n");
    auto graphs = read_graph6_stream(in);
    REQUIRE(graphs.size() == 3);
    CHECK(graphs[2] == cycle_graph(5));
}

TEST_CASE("catalog files load")
{
    auto connected = read_graph6_file(std::string(TEST_DATA_DIR) + "/connected_n1-6.g6");
    CHECK(connected.size() == 143);
    for (const auto& g : connected)
        CHECK(g.connected());
    auto trees = read_graph6_file(std::string(TEST_DATA_DIR) + "/trees_n1-8.g6");
    CHECK(trees.size() == 48);
    for (const auto& g : trees)
        CHECK(g.is_tree());
}

TEST_CASE("json edge lists")
{
    auto g = wheel_graph(4);
    auto j = graph_to_json(g);
    CHECK(j["n"] == 5);
    CHECK(graph_from_json(j) == g);
    CHECK_THROWS(graph_from_json(nlohmann::json{{"n", 2}, {"edges", {{0, 2}}}}));
    CHECK_THROWS(graph_from_json(nlohmann::json{{"edges", nlohmann::json::array()}}));
}
