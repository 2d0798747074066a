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

#ifndef PEBBLING_CONSTRUCTIONS_HPP
#define PEBBLING_CONSTRUCTIONS_HPP

#include "pebbling/distribution.hpp"
#include "pebbling/graph.hpp"
#include "pebbling/reachability.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace pebbling {

/// Shape parameters of G_{n,d}.
///
/// Even d = 2k: `legs` paths of length k from a center, plus one shorter
/// path of length `extra` when the vertices do not divide evenly.
/// Odd d = 2k+1: a clique on `legs` vertices, a path of length k hanging
/// from each, plus a path of length `extra` hanging from clique vertex 0.
struct ExtremalSpec {
    int n = 0;
    int d = 0;
    int k = 0;
    bool odd = false;
    int legs = 0;
    int extra = 0;
};

class InadmissibleParameters : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline ExtremalSpec gnd_spec(int n, int d)
{
    if (n < 2 || d < 1)
        throw InadmissibleParameters("G_{n,d} needs n >= 2 and d >= 1");
    ExtremalSpec s;
    s.n = n;
    s.d = d;
    s.odd = d % 2 == 1;
    s.k = d / 2;
    if (!s.odd) {
        s.legs = (n - 1) / s.k;
        s.extra = n - s.k * s.legs - 1;
    } else {
        s.legs = n / (s.k + 1);
        s.extra = n - s.legs * (s.k + 1);
    }
    return s;
}

namespace detail {

/// Appends a path of `length` new vertices hanging from `from`; returns the
/// far endpoint (or `from` for an empty path).
inline Vertex hang_path(std::vector<Edge>& edges, int& next, Vertex from, int length)
{
    Vertex cur = from;
    for (int i = 0; i < length; ++i) {
        edges.emplace_back(cur, next);
        cur = next++;
    }
    return cur;
}

struct GndLayout {
    ExtremalSpec spec;
    Graph graph;
    std::vector<Vertex> leg_ends; // far endpoint of each regular leg
};

inline GndLayout layout_gnd(int n, int d)
{
    GndLayout out;
    out.spec = gnd_spec(n, d);
    const auto& s = out.spec;
    std::vector<Edge> edges;
    int next = 0;
    if (!s.odd) {
        Vertex center = next++;
        for (int j = 0; j < s.legs; ++j)
            out.leg_ends.push_back(hang_path(edges, next, center, s.k));
        if (s.extra > 0)
            hang_path(edges, next, center, s.extra);
    } else {
        next = s.legs;
        for (Vertex a = 0; a < s.legs; ++a)
            for (Vertex b = a + 1; b < s.legs; ++b)
                edges.emplace_back(a, b);
        for (Vertex j = 0; j < s.legs; ++j)
            out.leg_ends.push_back(hang_path(edges, next, j, s.k));
        if (s.extra > 0)
            hang_path(edges, next, 0, s.extra);
    }
    if (next != n)
        throw InadmissibleParameters("G_{" + std::to_string(n) + "," + std::to_string(d) + "} layout produced " +
                                     std::to_string(next) + " vertices");
    out.graph = Graph(n, edges);
    if (!out.graph.connected() || out.graph.diameter() != d) {
        std::string achieved = out.graph.connected() ? std::to_string(out.graph.diameter()) : "infinite";
        throw InadmissibleParameters("G_{" + std::to_string(n) + "," + std::to_string(d) +
                                     "} is not realizable: the construction has diameter " + achieved);
    }
    return out;
}

} // namespace detail

/// The extremal graph G_{n,d}; rejects (n, d) whose construction does not
/// come out with diameter exactly d.
inline Graph build_gnd(int n, int d)
{
    return detail::layout_gnd(n, d).graph;
}

struct RootedWitness {
    Vertex root = 0;
    PebbleDistribution distribution;
};

/// Odd-diameter unsolvable distribution on G_{n,2k+1}: 2^{2k+1} - 1 pebbles
/// on the far end of a longest induced path starting at leaf r, and
/// 2^{k+1} - 1 on the end of every other regular leg. Verified unsolvable
/// for r before returning.
inline RootedWitness unsolvable_witness_odd(int n, int d, const SearchOptions& opts = {})
{
    if (d % 2 == 0)
        throw InadmissibleParameters("odd-diameter witness needs odd d");
    auto layout = detail::layout_gnd(n, d);
    const auto& s = layout.spec;
    if (s.legs < 2)
        throw InadmissibleParameters("odd-diameter witness needs at least two clique vertices");
    RootedWitness w;
    w.root = layout.leg_ends[0];
    w.distribution = PebbleDistribution(n);
    w.distribution.set(layout.leg_ends[1], (1 << (2 * s.k + 1)) - 1);
    for (int j = 2; j < s.legs; ++j)
        w.distribution.set(layout.leg_ends[j], (1 << (s.k + 1)) - 1);
    if (is_reachable(layout.graph, w.distribution, PebbleDistribution::point(n, w.root, 1), nullptr, opts))
        throw std::logic_error("odd-diameter witness reaches its root");
    return w;
}

/// 2^{D(G)} t - 1 pebbles on v for the first diametral pair (v, r) in label
/// order; verified unable to put t pebbles on r.
inline RootedWitness antipodal_witness(const Graph& g, int t, const SearchOptions& opts = {})
{
    if (t < 1)
        throw std::invalid_argument("t must be at least 1");
    const int d = g.diameter();
    const int n = g.order();
    for (Vertex v = 0; v < n; ++v) {
        for (Vertex r = 0; r < n; ++r) {
            if (g.distance(v, r) != d || v == r)
                continue;
            RootedWitness w{r, PebbleDistribution::point(n, v, (1 << d) * t - 1)};
            if (is_reachable(g, w.distribution, PebbleDistribution::point(n, r, t), nullptr, opts))
                throw std::logic_error("antipodal witness reaches its root");
            return w;
        }
    }
    throw std::invalid_argument("antipodal witness needs at least two vertices");
}

} // namespace pebbling

#endif // PEBBLING_CONSTRUCTIONS_HPP
