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

#include "pebbling/constructions.hpp"
#include "pebbling/exact_numbers.hpp"
#include "pebbling/families.hpp"
#include "pebbling/formulas.hpp"

#include <catch_amalgamated.hpp>

using namespace pebbling;

TEST_CASE("G_{n,d} shapes")
{
    auto g94 = build_gnd(9, 4);
    CHECK(g94.order() == 9);
    CHECK(g94.diameter() == 4);
    CHECK(g94.is_tree());
    CHECK(g94.degree(0) == 4);
    auto g83 = build_gnd(8, 3);
    CHECK(g83.order() == 8);
    CHECK(g83.diameter() == 3);
    CHECK(g83.edge_count() == 6 + 4);
    for (int p = 2; p <= 8; ++p) {
        auto s = build_gnd(p + 1, 2);
        CHECK(s == star_graph(p));
    }
}

TEST_CASE("every admissible G_{n,d} has n vertices and diameter d")
{
    int built = 0;
    for (int n = 2; n <= 20; ++n) {
        for (int d = 1; d < n; ++d) {
            try {
                auto g = build_gnd(n, d);
                REQUIRE(g.order() == n);
                REQUIRE(g.diameter() == d);
                ++built;
                if (d % 2 == 0) {
                    REQUIRE(g.is_tree());
                    auto f = tree_pebbling_formula(maximal_path_partition(g), 1);
                    REQUIRE(Rational(f) >= gnd_lower_bound(n, d));
                }
            } catch (const InadmissibleParameters& e) {
                REQUIRE(std::string(e.what()).find("diameter") != std::string::npos);
            }
        }
    }
    CHECK(built > 100);
}

TEST_CASE("inadmissible parameters are rejected with the achieved diameter")
{
    for (auto [n, d, achieved] : std::vector<std::tuple<int, int, int>>{{4, 4, 3}, {3, 3, 2}}) {
        try {
            build_gnd(n, d);
            FAIL("expected rejection");
        } catch (const InadmissibleParameters& e) {
            CHECK(std::string(e.what()).find("diameter " + std::to_string(achieved)) != std::string::npos);
        }
    }
    CHECK_THROWS_AS(build_gnd(1, 1), InadmissibleParameters);
}

TEST_CASE("odd-diameter witness")
{
    auto w = unsolvable_witness_odd(8, 3);
    CHECK(w.distribution.size() == 13);
    auto sup = w.distribution.support();
    CHECK(sup.size() == 3);
    std::vector<int> piles;
    for (Vertex v : sup)
        piles.push_back(w.distribution[v]);
    std::sort(piles.begin(), piles.end());
    CHECK(piles == std::vector<int>{3, 3, 7});
    auto g = build_gnd(8, 3);
    CHECK(g.degree(w.root) == 1);
    CHECK_FALSE(is_reachable(g, w.distribution, PebbleDistribution::point(8, w.root, 1)));
    CHECK(Rational(w.distribution.size() + 1) >= gnd_lower_bound(8, 3));
    CHECK(pebbling_number(g, 1).value >= w.distribution.size() + 1);
    CHECK_THROWS_AS(unsolvable_witness_odd(9, 4), InadmissibleParameters);
    for (auto [n, d] : std::vector<std::pair<int, int>>{{6, 3}, {10, 3}, {9, 5}, {12, 5}}) {
        auto odd = unsolvable_witness_odd(n, d);
        CHECK(Rational(odd.distribution.size() + 1) >= gnd_lower_bound(n, d));
    }
}

TEST_CASE("antipodal witnesses")
{
    auto c6 = antipodal_witness(cycle_graph(6), 1);
    CHECK(c6.distribution.size() == 7);
    CHECK(cycle_graph(6).distance(c6.distribution.support().front(), c6.root) == 3);
    auto k2 = antipodal_witness(complete_graph(2), 2);
    CHECK(k2.distribution.size() == 3);
    auto q3 = antipodal_witness(hypercube_graph(3), 1);
    CHECK(q3.distribution[0] == 7);
    CHECK(q3.root == 7);
    CHECK_THROWS(antipodal_witness(Graph(1, {}), 1));
}
