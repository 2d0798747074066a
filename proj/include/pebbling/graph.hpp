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

#ifndef PEBBLING_GRAPH_HPP
#define PEBBLING_GRAPH_HPP

#include <algorithm>
#include <cstddef>
#include <deque>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pebbling {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Thrown when a metric query (or any pebbling routine) meets a graph with
/// more than one component. The message names one unreachable pair.
class DisconnectedGraph : public std::runtime_error {
public:
    DisconnectedGraph(Vertex u, Vertex v)
        : std::runtime_error("graph is disconnected: no path between vertices " +
                             std::to_string(u) + " and " + std::to_string(v)),
          u_(u), v_(v)
    {
    }
    Vertex first() const { return u_; }
    Vertex second() const { return v_; }

private:
    Vertex u_;
    Vertex v_;
};

/// Simple undirected graph on the dense labels 0..n-1.
///
/// Immutable after construction. All-pairs hop distances are computed once
/// by BFS in the constructor; disconnected graphs can be built (graph6 I/O
/// needs them) but every distance query on one throws DisconnectedGraph.
class Graph {
public:
    Graph() = default;

    Graph(int n, const std::vector<Edge>& edges, std::vector<std::string> names = {})
        : n_(n), adj_(static_cast<std::size_t>(n)), matrix_(static_cast<std::size_t>(n) * n, 0)
    {
        if (n < 0)
            throw std::invalid_argument("negative vertex count");
        for (auto [u, v] : edges) {
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                            ") out of range for n=" + std::to_string(n));
            if (u == v)
                throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
            if (matrix_[index(u, v)])
                continue;
            matrix_[index(u, v)] = matrix_[index(v, u)] = 1;
            adj_[u].push_back(v);
            adj_[v].push_back(u);
            ++edge_count_;
        }
        for (auto& row : adj_)
            std::sort(row.begin(), row.end());
        if (!names.empty()) {
            if (static_cast<int>(names.size()) != n)
                throw std::invalid_argument("vertex name table has wrong length");
            names_ = std::move(names);
        }
        compute_distances();
    }

    int order() const { return n_; }
    std::size_t edge_count() const { return edge_count_; }

    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_.at(v); }
    int degree(Vertex v) const { return static_cast<int>(adj_.at(v).size()); }
    bool adjacent(Vertex u, Vertex v) const
    {
        check_vertex(u);
        check_vertex(v);
        return matrix_[index(u, v)] != 0;
    }

    /// Edges as (u, v) with u < v, sorted.
    std::vector<Edge> edges() const
    {
        std::vector<Edge> out;
        out.reserve(edge_count_);
        for (Vertex u = 0; u < n_; ++u)
            for (Vertex v : adj_[u])
                if (u < v)
                    out.emplace_back(u, v);
        return out;
    }

    std::string name(Vertex v) const
    {
        check_vertex(v);
        return names_.empty() ? std::to_string(v) : names_[v];
    }
    const std::vector<std::string>& names() const { return names_; }

    bool connected() const { return !unreachable_; }

    void require_connected() const
    {
        if (unreachable_)
            throw DisconnectedGraph(unreachable_->first, unreachable_->second);
    }

    int distance(Vertex u, Vertex v) const
    {
        require_connected();
        check_vertex(u);
        check_vertex(v);
        return dist_[index(u, v)];
    }

    /// Row-major n*n hop distances.
    const std::vector<int>& distances() const
    {
        require_connected();
        return dist_;
    }

    int diameter() const
    {
        require_connected();
        return diameter_;
    }

    int eccentricity(Vertex v) const
    {
        require_connected();
        check_vertex(v);
        int e = 0;
        for (Vertex w = 0; w < n_; ++w)
            e = std::max(e, dist_[index(v, w)]);
        return e;
    }

    bool is_tree() const { return connected() && n_ >= 1 && edge_count_ == static_cast<std::size_t>(n_ - 1); }

    void check_vertex(Vertex v) const
    {
        if (v < 0 || v >= n_)
            throw std::out_of_range("vertex " + std::to_string(v) + " out of range for n=" +
                                    std::to_string(n_));
    }

    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.matrix_ == b.matrix_; }

private:
    std::size_t index(Vertex u, Vertex v) const { return static_cast<std::size_t>(u) * n_ + v; }

    void compute_distances()
    {
        dist_.assign(static_cast<std::size_t>(n_) * n_, -1);
        diameter_ = 0;
        std::deque<Vertex> queue;
        for (Vertex s = 0; s < n_; ++s) {
            dist_[index(s, s)] = 0;
            queue.assign(1, s);
            while (!queue.empty()) {
                Vertex u = queue.front();
                queue.pop_front();
                for (Vertex w : adj_[u]) {
                    if (dist_[index(s, w)] < 0) {
                        dist_[index(s, w)] = dist_[index(s, u)] + 1;
                        queue.push_back(w);
                    }
                }
            }
            for (Vertex w = 0; w < n_; ++w) {
                int d = dist_[index(s, w)];
                if (d < 0 && !unreachable_)
                    unreachable_ = Edge{s, w};
                diameter_ = std::max(diameter_, d);
            }
        }
    }

    int n_ = 0;
    std::size_t edge_count_ = 0;
    std::vector<std::vector<Vertex>> adj_;
    std::vector<char> matrix_;
    std::vector<int> dist_;
    int diameter_ = 0;
    std::optional<Edge> unreachable_;
    std::vector<std::string> names_;
};

/// All-pairs hop distances as a nested matrix.
inline std::vector<std::vector<int>> distance_matrix(const Graph& g)
{
    const auto& flat = g.distances();
    const int n = g.order();
    std::vector<std::vector<int>> out(n, std::vector<int>(n));
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            out[u][v] = flat[static_cast<std::size_t>(u) * n + v];
    return out;
}

inline int diameter(const Graph& g)
{
    return g.diameter();
}

/// BFS tree rooted at r, neighbours scanned in increasing label order.
/// Distances from r in the tree equal distances from r in g.
inline Graph bfs_spanning_tree(const Graph& g, Vertex r)
{
    g.require_connected();
    g.check_vertex(r);
    const int n = g.order();
    std::vector<int> seen(n, 0);
    std::vector<Edge> tree;
    std::deque<Vertex> queue{r};
    seen[r] = 1;
    while (!queue.empty()) {
        Vertex u = queue.front();
        queue.pop_front();
        for (Vertex w : g.neighbors(u)) {
            if (!seen[w]) {
                seen[w] = 1;
                tree.emplace_back(std::min(u, w), std::max(u, w));
                queue.push_back(w);
            }
        }
    }
    return Graph(n, tree, g.names());
}

/// Parent of each vertex when the tree is hung from r (-1 at r), and the
/// vertices in BFS order from r.
struct RootedTree {
    Vertex root = 0;
    std::vector<Vertex> parent;
    std::vector<Vertex> order;
    std::vector<std::vector<Vertex>> children;
};

inline RootedTree hang_tree(const Graph& tree, Vertex r)
{
    if (!tree.is_tree())
        throw std::invalid_argument("input graph is not a tree");
    tree.check_vertex(r);
    RootedTree rt;
    rt.root = r;
    rt.parent.assign(tree.order(), -1);
    rt.children.assign(tree.order(), {});
    rt.order.push_back(r);
    for (std::size_t i = 0; i < rt.order.size(); ++i) {
        Vertex u = rt.order[i];
        for (Vertex w : tree.neighbors(u)) {
            if (w != rt.parent[u]) {
                rt.parent[w] = u;
                rt.children[u].push_back(w);
                rt.order.push_back(w);
            }
        }
    }
    return rt;
}

} // namespace pebbling

#endif // PEBBLING_GRAPH_HPP
