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

// Unpruned reference implementations used only by the tests.
#ifndef PEBBLING_TESTS_NAIVE_ORACLE_HPP
#define PEBBLING_TESTS_NAIVE_ORACLE_HPP

#include "pebbling/distribution.hpp"
#include "pebbling/graph.hpp"

#include <functional>
#include <set>
#include <vector>

namespace naive {

using pebbling::Graph;
using pebbling::PebbleDistribution;

// Exhaustive breadth-first closure of all moves, no pruning.
inline bool reachable(const Graph& g, const PebbleDistribution& start, const PebbleDistribution& target)
{
    std::set<std::vector<int>> seen{start.counts()};
    std::vector<std::vector<int>> frontier{start.counts()};
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& c : frontier) {
            bool ok = true;
            for (std::size_t v = 0; v < c.size(); ++v)
                ok = ok && c[v] >= target[static_cast<int>(v)];
            if (ok)
                return true;
            for (int u = 0; u < g.order(); ++u) {
                if (c[u] < 2)
                    continue;
                for (int w : g.neighbors(u)) {
                    auto d = c;
                    d[u] -= 2;
                    d[w] += 1;
                    if (seen.insert(d).second)
                        next.push_back(d);
                }
            }
        }
        frontier = std::move(next);
    }
    return false;
}

inline void compositions(int n, int k, const std::function<void(const std::vector<int>&)>& f)
{
    std::vector<int> c(n, 0);
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == n - 1) {
            c[i] = left;
            f(c);
            return;
        }
        for (int x = 0; x <= left; ++x) {
            c[i] = x;
            rec(i + 1, left - x);
        }
    };
    rec(0, k);
}

// Least k such that every size-k distribution reaches every target in `targets`.
inline long threshold(const Graph& g, const std::vector<PebbleDistribution>& targets)
{
    for (int k = 0;; ++k) {
        bool all = true;
        compositions(g.order(), k, [&](const std::vector<int>& c) {
            if (!all)
                return;
            for (const auto& t : targets)
                if (!reachable(g, PebbleDistribution(c), t)) {
                    all = false;
                    return;
                }
        });
        if (all)
            return k;
    }
}

inline std::vector<PebbleDistribution> points(const Graph& g, int t)
{
    std::vector<PebbleDistribution> out;
    for (int r = 0; r < g.order(); ++r)
        out.push_back(PebbleDistribution::point(g.order(), r, t));
    return out;
}

inline long pi(const Graph& g, int t) { return threshold(g, points(g, t)); }

inline long pi_rooted(const Graph& g, int r, int t) { return threshold(g, {PebbleDistribution::point(g.order(), r, t)}); }

inline long pi_star(const Graph& g, int t)
{
    for (int k = 0;; ++k) {
        bool found = false;
        compositions(g.order(), k, [&](const std::vector<int>& c) {
            if (found)
                return;
            bool all = true;
            for (const auto& target : points(g, t))
                all = all && reachable(g, PebbleDistribution(c), target);
            found = all;
        });
        if (found)
            return k;
    }
}

inline long pi_arbitrary(const Graph& g, int t)
{
    std::vector<PebbleDistribution> targets;
    compositions(g.order(), t, [&](const std::vector<int>& c) { targets.emplace_back(c); });
    return threshold(g, targets);
}

} // namespace naive

#endif
