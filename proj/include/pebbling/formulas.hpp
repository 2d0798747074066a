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

#ifndef PEBBLING_FORMULAS_HPP
#define PEBBLING_FORMULAS_HPP

#include "pebbling/distribution.hpp"
#include "pebbling/graph.hpp"
#include "pebbling/rational.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace pebbling {

// ---------------------------------------------------------------------------
// Path partitions of trees
// ---------------------------------------------------------------------------

/// Path lengths a_1 >= a_2 >= ... >= a_k of a partition of a tree's edges.
struct PathPartition {
    std::vector<int> lengths;

    int parts() const { return static_cast<int>(lengths.size()); }
    long edge_total() const
    {
        long s = 0;
        for (int a : lengths)
            s += a;
        return s;
    }
    friend bool operator==(const PathPartition&, const PathPartition&) = default;
};

namespace detail {

inline void require_tree(const Graph& g)
{
    if (!g.is_tree())
        throw std::invalid_argument("input graph is not a tree");
}

inline PathPartition sorted_partition(std::vector<int> lengths)
{
    std::sort(lengths.begin(), lengths.end(), std::greater<>());
    return PathPartition{std::move(lengths)};
}

/// Greedy for T_r^*: repeatedly take the longest chain of unused edges
/// running up toward r. Ties go to the lowest starting vertex.
inline PathPartition greedy_rooted_partition(const Graph& tree, Vertex r)
{
    RootedTree rt = hang_tree(tree, r);
    const int n = tree.order();
    std::vector<char> unused(n, 1); // edge v -> parent(v), indexed by v
    unused[r] = 0;
    std::vector<int> lengths;
    for (;;) {
        int best_len = 0;
        Vertex best_start = -1;
        for (Vertex v = 0; v < n; ++v) {
            int len = 0;
            for (Vertex x = v; x != r && unused[x]; x = rt.parent[x])
                ++len;
            if (len > best_len) {
                best_len = len;
                best_start = v;
            }
        }
        if (best_len == 0)
            break;
        for (Vertex x = best_start; x != r && unused[x]; x = rt.parent[x])
            unused[x] = 0;
        lengths.push_back(best_len);
    }
    return sorted_partition(std::move(lengths));
}

} // namespace detail

namespace detail {

/// Search over every path partition; exponential, for trees with a dozen
/// edges or so.
///
/// Undirected: at each vertex the incident edges are paired up (a pair is a
/// path passing through) or left as path ends. Rooted: at each non-root
/// vertex at most one child edge continues into the edge to the parent.
inline PathPartition exhaustive_search(const Graph& tree, std::optional<Vertex> root)
{
    const int n = tree.order();
    const auto edges = tree.edges();
    const int m = static_cast<int>(edges.size());
    std::map<std::pair<Vertex, Vertex>, int> edge_id;
    for (int i = 0; i < m; ++i) {
        edge_id[edges[i]] = i;
        edge_id[{edges[i].second, edges[i].first}] = i;
    }
    // link[e] lists the (up to two) edges continuing e's path.
    std::vector<std::vector<int>> link(m);
    std::optional<PathPartition> best;

    auto evaluate = [&]() {
        std::vector<char> seen(m, 0);
        std::vector<int> lengths;
        for (int e = 0; e < m; ++e) {
            if (seen[e] || link[e].size() == 2)
                continue;
            int len = 0;
            int prev = -1;
            for (int cur = e; cur != -1;) {
                seen[cur] = 1;
                ++len;
                int next = -1;
                for (int x : link[cur])
                    if (x != prev)
                        next = x;
                prev = cur;
                cur = next;
            }
            lengths.push_back(len);
        }
        auto p = detail::sorted_partition(std::move(lengths));
        if (!best || p.lengths > best->lengths)
            best = std::move(p);
    };

    std::vector<std::vector<int>> incident(n);
    for (Vertex v = 0; v < n; ++v)
        for (Vertex w : tree.neighbors(v))
            incident[v].push_back(edge_id[{v, w}]);

    if (root) {
        RootedTree rt = hang_tree(tree, *root);
        std::vector<Vertex> inner;
        for (Vertex v = 0; v < n; ++v)
            if (v != *root)
                inner.push_back(v);
        std::function<void(std::size_t)> rec = [&](std::size_t i) {
            if (i == inner.size()) {
                evaluate();
                return;
            }
            Vertex v = inner[i];
            int up = edge_id[{v, rt.parent[v]}];
            rec(i + 1);
            for (Vertex c : rt.children[v]) {
                int down = edge_id[{c, v}];
                link[up].push_back(down);
                link[down].push_back(up);
                rec(i + 1);
                link[up].pop_back();
                link[down].pop_back();
            }
        };
        rec(0);
        return *best;
    }

    std::function<void(Vertex, std::vector<int>)> rec = [&](Vertex v, std::vector<int> open) {
        if (v == n) {
            evaluate();
            return;
        }
        if (open.empty()) {
            if (v + 1 < n)
                rec(v + 1, v + 1 < n ? incident[v + 1] : std::vector<int>{});
            else
                rec(n, {});
            return;
        }
        // First open edge either ends here or pairs with a later open edge.
        int e = open.front();
        std::vector<int> rest(open.begin() + 1, open.end());
        rec(v, rest);
        for (std::size_t j = 0; j < rest.size(); ++j) {
            int f = rest[j];
            std::vector<int> remaining = rest;
            remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(j));
            link[e].push_back(f);
            link[f].push_back(e);
            rec(v, remaining);
            link[e].pop_back();
            link[f].pop_back();
        }
    };
    if (n == 1)
        return PathPartition{};
    rec(0, incident[0]);
    return *best;
}

template <class PerRoot>
PathPartition best_over_roots(const Graph& tree, PerRoot per_root)
{
    PathPartition best;
    for (Vertex r = 0; r < tree.order(); ++r) {
        auto p = per_root(r);
        if (p.lengths > best.lengths)
            best = std::move(p);
    }
    return best;
}

} // namespace detail

/// Lexicographically greatest path-size sequence of T_r^* (paths directed
/// toward r). Without a root: the greatest such sequence over all roots,
/// which is the sequence pi_t(T) = max_r pi_t(T, r) is evaluated on.
inline PathPartition maximal_path_partition(const Graph& tree, std::optional<Vertex> root = std::nullopt)
{
    detail::require_tree(tree);
    if (root) {
        tree.check_vertex(*root);
        return detail::greedy_rooted_partition(tree, *root);
    }
    return detail::best_over_roots(tree, [&](Vertex r) { return detail::greedy_rooted_partition(tree, r); });
}

/// Exhaustive counterpart of maximal_path_partition.
inline PathPartition exhaustive_path_partition(const Graph& tree, std::optional<Vertex> root = std::nullopt)
{
    detail::require_tree(tree);
    if (root) {
        tree.check_vertex(*root);
        return detail::exhaustive_search(tree, root);
    }
    return detail::best_over_roots(tree, [&](Vertex r) { return detail::exhaustive_search(tree, r); });
}

/// Greatest sequence over partitions into undirected paths, which may bend
/// at any vertex. On K_{1,4} this is [2,2], whose formula value 7 exceeds
/// pi(K_{1,4}) = 6; the tree formula needs the rooted partitions.
inline PathPartition undirected_path_partition(const Graph& tree)
{
    detail::require_tree(tree);
    return detail::exhaustive_search(tree, std::nullopt);
}

// ---------------------------------------------------------------------------
// Closed forms
// ---------------------------------------------------------------------------

/// 2^{a_1} t + 2^{a_2} + ... + 2^{a_k} - k + 1.
inline long tree_pebbling_formula(const PathPartition& partition, long t)
{
    if (partition.lengths.empty())
        throw std::invalid_argument("tree formula needs a nonempty path partition");
    if (t < 1)
        throw std::invalid_argument("t must be at least 1");
    if (!std::is_sorted(partition.lengths.begin(), partition.lengths.end(), std::greater<>()) ||
        partition.lengths.back() < 1)
        throw std::invalid_argument("path-size sequence must be positive and nonincreasing");
    long value = (1L << partition.lengths[0]) * t;
    for (std::size_t i = 1; i < partition.lengths.size(); ++i)
        value += 1L << partition.lengths[i];
    return value - partition.parts() + 1;
}

/// pi_t(C_n): 2^k t for n = 2k, (2^{k+2} - (-1)^k)/3 + 2^k (t-1) for n = 2k+1.
inline long cycle_pebbling_formula(long n, long t)
{
    if (n < 3)
        throw std::invalid_argument("cycle formula needs n >= 3");
    if (t < 1)
        throw std::invalid_argument("t must be at least 1");
    const long k = n / 2;
    if (n % 2 == 0)
        return (1L << k) * t;
    const long sign = (k % 2 == 0) ? 1 : -1;
    return ((1L << (k + 2)) - sign) / 3 + (1L << k) * (t - 1);
}

/// pi_t(K_n) = n + 2t - 2.
inline long complete_graph_formula(long n, long t)
{
    if (n < 1 || t < 1)
        throw std::invalid_argument("complete graph formula needs n, t >= 1");
    return n + 2 * t - 2;
}

/// (2^d - 1) / d, strictly increasing in d.
inline Rational coefficient(long d)
{
    if (d < 1)
        throw std::invalid_argument("coefficient needs d >= 1");
    return (pow2(d) - 1) / Rational(d);
}

/// (2^d - 1)/d (n - 1) + 2^d (t - 1) + 1, for roots of eccentricity <= d.
inline Rational radius_bound(long n, long d, long t)
{
    if (n < 1 || t < 1)
        throw std::invalid_argument("radius bound needs n, t >= 1");
    return coefficient(d) * Rational(n - 1) + pow2(d) * Rational(t - 1) + 1;
}

/// 2^D(G).
inline long fractional_pebbling_number(const Graph& g)
{
    return 1L << g.diameter();
}

/// ceil((n - 1) / d): from this t on, pi_{t+1} <= pi_t + 2^d is guaranteed.
inline long diambound_threshold(long n, long d)
{
    if (n < 2 || d < 1)
        throw std::invalid_argument("diambound threshold needs n >= 2 and d >= 1");
    return (n - 1 + d - 1) / d;
}

/// ((2^c - 1)/c) n + (2^d - 3(2^c - 1)) with c = ceil(d/2).
inline Rational gnd_lower_bound(long n, long d)
{
    if (n < 1 || d < 1)
        throw std::invalid_argument("G_{n,d} bound needs n, d >= 1");
    const long c = (d + 1) / 2;
    return coefficient(c) * Rational(n) + (pow2(d) - 3 * (pow2(c) - 1));
}

// ---------------------------------------------------------------------------
// Bound reports
// ---------------------------------------------------------------------------

struct BoundReport {
    std::string bound;
    std::map<std::string, long> params;
    Rational value;
    std::optional<long> exact;

    std::optional<Rational> slack() const
    {
        if (!exact)
            return std::nullopt;
        return value - Rational(*exact);
    }
    /// True when no exact value is attached or the bound holds for it.
    bool holds() const { return !exact || value >= Rational(*exact); }
};

inline nlohmann::json to_json(const BoundReport& b)
{
    nlohmann::json j{{"bound", b.bound}, {"params", b.params}, {"value", to_string(b.value)}};
    j["exact"] = b.exact ? nlohmann::json(*b.exact) : nlohmann::json(nullptr);
    auto s = b.slack();
    j["slack"] = s ? nlohmann::json(to_string(*s)) : nlohmann::json(nullptr);
    return j;
}

/// The diameter-2 bounds on pi_t: pi + 4t - 4 (when pi is known),
/// n + 4t - 3 and the older n + 7t - 6. `exact` is the computed pi_t to
/// compare against, if any.
inline std::vector<BoundReport> diam2_bounds(long n, long t, std::optional<long> pi = std::nullopt,
                                             std::optional<long> exact = std::nullopt)
{
    if (t < 1)
        throw std::invalid_argument("t must be at least 1");
    std::vector<BoundReport> out;
    if (pi)
        out.push_back({"pi+4t-4", {{"n", n}, {"t", t}, {"pi", *pi}}, Rational(*pi + 4 * t - 4), exact});
    out.push_back({"n+4t-3", {{"n", n}, {"t", t}}, Rational(n + 4 * t - 3), exact});
    out.push_back({"n+7t-6", {{"n", n}, {"t", t}}, Rational(n + 7 * t - 6), exact});
    return out;
}

inline BoundReport radius_bound_report(long n, long d, long t, std::optional<long> exact = std::nullopt)
{
    return {"radius", {{"n", n}, {"d", d}, {"t", t}}, radius_bound(n, d, t), exact};
}

inline BoundReport gnd_bound_report(long n, long d, std::optional<long> exact = std::nullopt)
{
    return {"gnd_lower", {{"n", n}, {"d", d}}, gnd_lower_bound(n, d), exact};
}

// ---------------------------------------------------------------------------
// Star helper
// ---------------------------------------------------------------------------

/// Result of delivering fourth pebbles on a star whose center holds i
/// pebbles and whose outer vertices hold three each.
struct StarSchedule {
    int quotient = 0;  // outer vertices that end with four pebbles
    int remainder = 0; // outer vertices left untouched with three
    PebbleDistribution initial;
    MoveSequence moves;
};

/// On K_{1p} (center 0, outer 1..p): move one pebble from each of the
/// first 2Q - i outer vertices to the center, then one pebble from the
/// center to each of the next Q outer vertices. Uses 3Q - i outer vertices.
inline StarSchedule star_fourth_pebble(int p, int i)
{
    if (p < 2)
        throw std::invalid_argument("star needs p >= 2");
    if (i < 0 || i > 2)
        throw std::invalid_argument("center load must be 0, 1 or 2");
    StarSchedule s;
    s.quotient = (p + i) / 3;
    s.remainder = (p + i) % 3;
    std::vector<int> counts(static_cast<std::size_t>(p) + 1, 3);
    counts[0] = i;
    s.initial = PebbleDistribution(counts);
    const int donors = 2 * s.quotient - i;
    if (s.quotient == 0)
        return s;
    for (int v = 1; v <= donors; ++v)
        s.moves.push_back({v, 0, Rational(1)});
    for (int k = 0; k < s.quotient; ++k)
        s.moves.push_back({0, donors + 1 + k, Rational(1)});
    return s;
}

} // namespace pebbling

#endif // PEBBLING_FORMULAS_HPP
