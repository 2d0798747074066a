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

#include "pebbling/distribution.hpp"
#include "pebbling/families.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using namespace pebbling;

TEST_CASE("moves")
{
    auto g = path_graph(3);
    PebbleDistribution d({4, 0, 0});
    auto e = apply_move(g, d, 0, 1);
    CHECK(e.counts() == std::vector<int>{2, 1, 0});
    CHECK(e.size() == 3);
    CHECK_THROWS_AS(apply_move(g, d, 0, 2), IllegalMove);
    CHECK_THROWS_AS(apply_move(g, e, 1, 2), IllegalMove);
    MoveSequence seq{{0, 1}, {0, 1}, {1, 2}};
    CHECK(replay(g, d, seq).counts() == std::vector<int>{0, 0, 1});
    CHECK_THROWS(PebbleDistribution({1, -1}));
}

TEST_CASE("weights")
{
    auto g = path_graph(4);
    PebbleDistribution d({8, 0, 0, 0});
    CHECK(weight(g, d, 3) == 1);
    CHECK(weight(g, d, 1) == 4);
    PebbleDistribution e({1, 1, 1, 1});
    CHECK(weight(g, e, 0) == make_rational(15, 8));
}

TEST_CASE("integer moves never raise the weight at any root")
{
    std::mt19937 rng(3);
    for (auto g : {cycle_graph(5), hypercube_graph(3), wheel_graph(5), path_graph(6)}) {
        std::uniform_int_distribution<int> cnt(0, 6);
        for (int trial = 0; trial < 100; ++trial) {
            std::vector<int> c(g.order());
            for (auto& x : c)
                x = cnt(rng);
            PebbleDistribution d(c);
            for (auto [u, v] : g.edges())
                for (auto [a, b] : {std::pair{u, v}, std::pair{v, u}}) {
                    if (d[a] < 2)
                        continue;
                    auto e = apply_move(g, d, a, b);
                    for (Vertex r = 0; r < g.order(); ++r) {
                        REQUIRE(weight(g, e, r) <= weight(g, d, r));
                        if (g.distance(b, r) < g.distance(a, r))
                            REQUIRE(weight(g, e, r) == weight(g, d, r));
                    }
                }
        }
    }
}

TEST_CASE("fractional reachability is the weight test")
{
    auto c = cycle_graph(4);
    auto d = FractionalDistribution::uniform(4, make_rational(4, 9));
    CHECK(weight(c, d, 0) == 1);
    CHECK(fractional_reachable(c, d, 0));
    auto e = FractionalDistribution::uniform(4, make_rational(2, 5));
    CHECK_FALSE(fractional_reachable(c, e, 0));
    // Concrete fractional schedule on C_4: both neighbours of 0 and the
    // antipode push toward 0.
    auto f = apply_fractional_move(c, d, {2, 1, make_rational(2, 9)});
    f = apply_fractional_move(c, f, {1, 0, make_rational(1, 3)});
    f = apply_fractional_move(c, f, {3, 0, make_rational(2, 9)});
    CHECK(f[0] == 1);
    CHECK_THROWS_AS(apply_fractional_move(c, d, {0, 1, 1}), IllegalMove);
}

TEST_CASE("json round trips")
{
    PebbleDistribution d({3, 0, 7});
    CHECK(distribution_from_json(to_json(d)) == d);
    auto f = FractionalDistribution::uniform(3, make_rational(1, 2));
    CHECK(to_json(f).dump() == R"(["1/2","1/2","1/2"])");
    CHECK(fractional_from_json(to_json(f)).amounts() == f.amounts());
    MoveSequence m{{0, 1}, {1, 2, make_rational(1, 3)}};
    CHECK(to_json(m).dump() == R"([[0,1],[1,2,"1/3"]])");
    CHECK(moves_from_json(to_json(m)) == m);
}
