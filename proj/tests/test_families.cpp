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

#include "pebbling/automorphism.hpp"
#include "pebbling/families.hpp"

#include <catch_amalgamated.hpp>

using namespace pebbling;

TEST_CASE("family sizes")
{
    CHECK(path_graph(6).edge_count() == 5);
    CHECK(cycle_graph(7).edge_count() == 7);
    CHECK(complete_graph(6).edge_count() == 15);
    CHECK(star_graph(4).order() == 5);
    CHECK(wheel_graph(4).edge_count() == 8);
    auto q3 = hypercube_graph(3);
    CHECK(q3.order() == 8);
    CHECK(q3.edge_count() == 12);
    CHECK(q3.name(0) == "000");
    CHECK(q3.name(7) == "111");
    CHECK(q3.distance(0, 7) == 3);
}

TEST_CASE("family parameter checks")
{
    CHECK_THROWS(path_graph(0));
    CHECK_THROWS(cycle_graph(2));
    CHECK_THROWS(star_graph(1));
    CHECK_THROWS(wheel_graph(2));
    CHECK_THROWS(hypercube_graph(0));
    CHECK_THROWS(tree_graph(4, {{0, 1}, {1, 2}, {2, 0}}));
}

TEST_CASE("family specs parse")
{
    CHECK(make_family(parse_family("cycle:7")) == cycle_graph(7));
    CHECK(make_family(parse_family("hypercube:2")) == hypercube_graph(2));
    CHECK(make_family(parse_family("wheel:4")) == wheel_graph(4));
    auto t = make_family(parse_family("tree:0-1,1-2,1-3"));
    CHECK(t.order() == 4);
    CHECK(t.degree(1) == 3);
    CHECK_THROWS_AS(parse_family("cycle"), std::invalid_argument);
    CHECK_THROWS_AS(parse_family("cycle:x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_family("blob:3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_family("tree:0-1,1"), std::invalid_argument);
}

TEST_CASE("vertex transitivity")
{
    CHECK(is_vertex_transitive(cycle_graph(7)));
    CHECK(is_vertex_transitive(hypercube_graph(3)));
    CHECK(is_vertex_transitive(complete_graph(5)));
    CHECK_FALSE(is_vertex_transitive(path_graph(3)));
    CHECK_FALSE(is_vertex_transitive(wheel_graph(4)));
    CHECK_FALSE(is_vertex_transitive(star_graph(3)));
    CHECK(vertex_orbits(star_graph(4)).size() == 2);
    CHECK(automorphism_group(cycle_graph(6)).size() == 12);
    CHECK(automorphism_group(hypercube_graph(3)).size() == 48);
    CHECK_THROWS_AS(is_vertex_transitive(cycle_graph(11)), SymmetryCapExceeded);
}
