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

#ifndef PEBBLING_FAMILIES_HPP
#define PEBBLING_FAMILIES_HPP

#include "pebbling/graph.hpp"

#include <charconv>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pebbling {

enum class Family { path, cycle, complete, star, wheel, hypercube, tree };

/// A named graph family with its size parameter. For Family::tree the
/// parameter is the vertex count and `edges` holds the edge list.
struct FamilySpec {
    Family family = Family::path;
    int param = 1;
    std::vector<Edge> edges;
};

namespace detail {

inline void require(bool ok, const std::string& what)
{
    if (!ok)
        throw std::invalid_argument(what);
}

} // namespace detail

inline Graph path_graph(int n)
{
    detail::require(n >= 1, "path needs n >= 1");
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i)
        e.emplace_back(i, i + 1);
    return Graph(n, e);
}

inline Graph cycle_graph(int n)
{
    detail::require(n >= 3, "cycle needs n >= 3");
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        e.emplace_back(i, (i + 1) % n);
    return Graph(n, e);
}

inline Graph complete_graph(int n)
{
    detail::require(n >= 1, "complete graph needs n >= 1");
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            e.emplace_back(i, j);
    return Graph(n, e);
}

/// K_{1p}: center 0, outer vertices 1..p.
inline Graph star_graph(int p)
{
    detail::require(p >= 2, "star needs p >= 2");
    std::vector<Edge> e;
    for (int i = 1; i <= p; ++i)
        e.emplace_back(0, i);
    return Graph(p + 1, e);
}

/// Hub 0 joined to every vertex of the rim cycle 1..p.
inline Graph wheel_graph(int p)
{
    detail::require(p >= 3, "wheel needs p >= 3");
    std::vector<Edge> e;
    for (int i = 1; i <= p; ++i) {
        e.emplace_back(0, i);
        e.emplace_back(i, i % p + 1);
    }
    return Graph(p + 1, e);
}

/// Q^k on the k-bit strings; label v is the bit string of v, MSB first.
inline Graph hypercube_graph(int k)
{
    detail::require(k >= 1 && k <= 16, "hypercube needs 1 <= k <= 16");
    const int n = 1 << k;
    std::vector<Edge> e;
    std::vector<std::string> names(n);
    for (int v = 0; v < n; ++v) {
        for (int b = 0; b < k; ++b) {
            int w = v ^ (1 << b);
            if (v < w)
                e.emplace_back(v, w);
            names[v].push_back(((v >> (k - 1 - b)) & 1) ? '1' : '0');
        }
    }
    return Graph(n, e, std::move(names));
}

inline Graph tree_graph(int n, const std::vector<Edge>& edges)
{
    Graph g(n, edges);
    detail::require(g.is_tree(), "edge list does not describe a tree");
    return g;
}

inline Graph make_family(const FamilySpec& spec)
{
    switch (spec.family) {
    case Family::path: return path_graph(spec.param);
    case Family::cycle: return cycle_graph(spec.param);
    case Family::complete: return complete_graph(spec.param);
    case Family::star: return star_graph(spec.param);
    case Family::wheel: return wheel_graph(spec.param);
    case Family::hypercube: return hypercube_graph(spec.param);
    case Family::tree: return tree_graph(spec.param, spec.edges);
    }
    throw std::invalid_argument("unknown family");
}

namespace detail {

inline int parse_int(std::string_view s)
{
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw std::invalid_argument("expected an integer, got '" + std::string(s) + "'");
    return v;
}

} // namespace detail

/// Parses "cycle:7", "star:4", "hypercube:3", "tree:0-1,1-2,1-3", ...
inline FamilySpec parse_family(std::string_view text)
{
    auto colon = text.find(':');
    if (colon == std::string_view::npos)
        throw std::invalid_argument("family spec must look like name:params, got '" + std::string(text) + "'");
    std::string_view name = text.substr(0, colon);
    std::string_view arg = text.substr(colon + 1);
    FamilySpec spec;
    if (name == "tree") {
        spec.family = Family::tree;
        int n = 1;
        std::size_t pos = 0;
        while (pos < arg.size()) {
            auto comma = arg.find(',', pos);
            std::string_view item = arg.substr(pos, comma == std::string_view::npos ? arg.size() - pos : comma - pos);
            auto dash = item.find('-');
            if (dash == std::string_view::npos)
                throw std::invalid_argument("tree edge must be u-v, got '" + std::string(item) + "'");
            int u = detail::parse_int(item.substr(0, dash));
            int v = detail::parse_int(item.substr(dash + 1));
            spec.edges.emplace_back(u, v);
            n = std::max({n, u + 1, v + 1});
            if (comma == std::string_view::npos)
                break;
            pos = comma + 1;
        }
        spec.param = n;
        return spec;
    }
    spec.param = detail::parse_int(arg);
    if (name == "path")
        spec.family = Family::path;
    else if (name == "cycle")
        spec.family = Family::cycle;
    else if (name == "complete")
        spec.family = Family::complete;
    else if (name == "star")
        spec.family = Family::star;
    else if (name == "wheel")
        spec.family = Family::wheel;
    else if (name == "hypercube")
        spec.family = Family::hypercube;
    else
        throw std::invalid_argument("unknown graph family '" + std::string(name) + "'");
    return spec;
}

} // namespace pebbling

#endif // PEBBLING_FAMILIES_HPP
