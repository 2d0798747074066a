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
#include "pebbling/families.hpp"
#include "pebbling/graph_io.hpp"
#include "pebbling/reachability.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using namespace pebbling;

TEST_CASE("search agrees with exhaustive closure on random instances")
{
    std::mt19937 rng(5);
    auto graphs = read_graph6_file(std::string(TEST_DATA_DIR) + "/connected_n1-6.g6");
    std::vector<Graph> small;
    for (auto& g : graphs)
        if (g.order() >= 2 && g.order() <= 5)
            small.push_back(g);
    std::uniform_int_distribution<int> cnt(0, 4);
    for (int trial = 0; trial < 1500; ++trial) {
        const Graph& g = small[trial % small.size()];
        std::vector<int> c(g.order()), t(g.order(), 0);
        for (auto& x : c)
            x = cnt(rng);
        t[rng() % g.order()] = 1 + static_cast<int>(rng() % 3);
        if (trial % 3 == 0)
            t[rng() % g.order()] += 1;
        PebbleDistribution d(c), target(t);
        MoveSequence moves;
        bool fast = is_reachable(g, d, target, &moves);
        REQUIRE(fast == naive::reachable(g, d, target));
        if (fast)
            REQUIRE(replay(g, d, moves).contains(target));
    }
}

TEST_CASE("pruning switches do not change answers")
{
    std::mt19937 rng(9);
    SearchOptions bare;
    bare.tree_fast_path = false;
    bare.weight_pruning = false;
    bare.domination_window = 0;
    for (auto g : {cycle_graph(5), path_graph(5), wheel_graph(4), hypercube_graph(2), star_graph(4)}) {
        std::uniform_int_distribution<int> cnt(0, 5);
        for (int trial = 0; trial < 150; ++trial) {
            std::vector<int> c(g.order());
            for (auto& x : c)
                x = cnt(rng);
            PebbleDistribution d(c);
            Vertex r = static_cast<Vertex>(rng() % g.order());
            int t = 1 + static_cast<int>(rng() % 3);
            auto target = PebbleDistribution::point(g.order(), r, t);
            REQUIRE(is_reachable(g, d, target, nullptr, bare) == is_reachable(g, d, target));
        }
    }
}

TEST_CASE("tree halving equals search on trees")
{
    std::mt19937 rng(13);
    auto trees = read_graph6_file(std::string(TEST_DATA_DIR) + "/trees_n1-8.g6");
    SearchOptions no_fast;
    no_fast.tree_fast_path = false;
    std::uniform_int_distribution<int> cnt(0, 5);
    for (int trial = 0; trial < 600; ++trial) {
        const Graph& g = trees[trial % trees.size()];
        if (g.order() > 7)
            continue;
        std::vector<int> c(g.order());
        for (auto& x : c)
            x = cnt(rng);
        PebbleDistribution d(c);
        Vertex r = static_cast<Vertex>(rng() % g.order());
        long fast = max_pebbles_to(g, d, r);
        REQUIRE(fast == max_pebbles_to(g, d, r, no_fast));
        auto res = tree_move_cost(g, d, r, fast);
        REQUIRE(res.success);
        REQUIRE(replay(g, d, res.moves)[r] >= fast);
        REQUIRE_FALSE(tree_move_cost(g, d, r, fast + 1).success);
    }
}

TEST_CASE("tree move cost charges 2^depth per delivered pebble at most")
{
    auto p = path_graph(4);
    auto res = tree_move_cost(p, PebbleDistribution({8, 0, 0, 0}), 3, 1);
    CHECK(res.success);
    CHECK(res.cost == 8);
    CHECK(res.moves.size() == 7);
    auto star = star_graph(3);
    auto s = tree_move_cost(star, PebbleDistribution({0, 2, 2, 3}), 3, 4);
    CHECK(s.success);
    CHECK(s.cost == 4);
}

TEST_CASE("t-fold solvability")
{
    auto c4 = cycle_graph(4);
    CHECK_FALSE(is_t_fold_solvable(c4, PebbleDistribution({2, 0, 0, 0}), 1));
    CHECK(is_t_fold_solvable(c4, PebbleDistribution({2, 0, 1, 0}), 1));
    CHECK(is_t_fold_solvable(complete_graph(3), PebbleDistribution({2, 2, 2}), 4));
    CHECK_FALSE(is_t_fold_solvable(complete_graph(3), PebbleDistribution({1, 1, 1}), 2));
    CHECK(is_t_fold_solvable(c4, PebbleDistribution({4, 4, 4, 4}), 9));
    CHECK_THROWS(is_t_fold_solvable(c4, PebbleDistribution({1, 1, 1, 1}), 0));
}

TEST_CASE("large states are refused")
{
    auto p = path_graph(17);
    SearchOptions opts;
    opts.tree_fast_path = false;
    CHECK_THROWS_AS(is_reachable(p, PebbleDistribution::point(17, 0, 4), PebbleDistribution::point(17, 16, 1),
                                 nullptr, opts),
                    Refusal);
}
