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

#ifndef PEBBLING_REACHABILITY_HPP
#define PEBBLING_REACHABILITY_HPP

#include "pebbling/budget.hpp"
#include "pebbling/distribution.hpp"
#include "pebbling/graph.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

namespace pebbling {

struct SearchOptions {
    /// Decide point targets on trees by bottom-up halving instead of search.
    bool tree_fast_path = true;
    bool weight_pruning = true;
    /// Number of recent dead states checked for pointwise domination.
    std::size_t domination_window = 32;
    Budget budget{};
};

// ---------------------------------------------------------------------------
// Trees
// ---------------------------------------------------------------------------

/// Pebbles each non-root vertex of a tree can pass to its parent when every
/// move is directed toward the root; index r holds what r ends up with.
/// On a tree, moves away from a single root never help, so this is exact.
inline std::vector<long> tree_capacities(const RootedTree& rt, const PebbleDistribution& d)
{
    std::vector<long> cap(rt.parent.size(), 0);
    for (auto it = rt.order.rbegin(); it != rt.order.rend(); ++it) {
        Vertex v = *it;
        long total = d[v];
        for (Vertex c : rt.children[v])
            total += cap[c];
        cap[v] = (v == rt.root) ? total : total / 2;
    }
    return cap;
}

struct TreeMoveResult {
    bool success = false;
    /// Pebbles removed from vertices other than the root.
    long cost = 0;
    MoveSequence moves;
};

/// Demand-driven schedule delivering t pebbles to r on a tree. Every move
/// points toward r; each vertex uses its own pebbles before pulling from
/// its children, so a pebble delivered from depth i costs at most 2^i.
inline TreeMoveResult tree_move_cost(const Graph& tree, const PebbleDistribution& d, Vertex r, long t)
{
    if (!tree.is_tree())
        throw std::invalid_argument("tree_move_cost: input graph is not a tree");
    if (d.order() != tree.order())
        throw std::invalid_argument("tree_move_cost: distribution length does not match the graph");
    RootedTree rt = hang_tree(tree, r);
    std::vector<long> cap = tree_capacities(rt, d);
    TreeMoveResult out;
    if (cap[r] < t)
        return out;
    out.success = true;

    const int n = tree.order();
    std::vector<long> send(n, 0);
    std::vector<long> pull(n, 0);
    pull[r] = std::max(0L, t - d[r]);
    for (Vertex v : rt.order) {
        long want = pull[v];
        for (Vertex c : rt.children[v]) {
            long s = std::min(want, cap[c]);
            send[c] = s;
            want -= s;
            long own = std::min<long>(d[c], 2 * s);
            pull[c] = 2 * s - own;
            out.cost += own;
        }
    }
    for (auto it = rt.order.rbegin(); it != rt.order.rend(); ++it)
        for (long k = 0; k < send[*it]; ++k)
            out.moves.push_back({*it, rt.parent[*it], Rational(1)});
    return out;
}

// ---------------------------------------------------------------------------
// General search
// ---------------------------------------------------------------------------

namespace detail {

/// Packs a count vector into 128 bits: 16 bits per vertex for n <= 8,
/// 8 bits per vertex for n <= 16.
struct StateKey {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;
    friend bool operator==(const StateKey& a, const StateKey& b) { return a.lo == b.lo && a.hi == b.hi; }
};

struct StateKeyHash {
    std::size_t operator()(const StateKey& k) const noexcept
    {
        std::uint64_t h = k.lo * 0x9E3779B97F4A7C15ULL;
        h ^= (k.hi + 0x632BE59BD9B4E019ULL) + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h ^ (h >> 31));
    }
};

} // namespace detail

/// Depth-first search over the move DAG for one fixed target.
///
/// Every move lowers |D| by one, so the search terminates. Dead states are
/// memoized for the lifetime of the object, which makes repeated queries
/// against the same target (as in the pebbling-number scans) cheap.
/// Pruning: (a) memo of dead states, (b) a dead state pointwise above the
/// current one, (c) weight: sum_v D(v) 2^-dist(v,r) below the target amount
/// at some target vertex r. For point targets, pebbles never leave the
/// target vertex; such moves cannot help a single-root target.
class ReachabilitySearch {
public:
    ReachabilitySearch(const Graph& g, PebbleDistribution target, SearchOptions opts = {})
        : g_(g), target_(std::move(target)), opts_(std::move(opts)), n_(g.order())
    {
        g.require_connected();
        if (target_.order() != n_)
            throw std::invalid_argument("target length does not match the graph");
        if (target_.size() < 1)
            throw std::invalid_argument("target must hold at least one pebble");
        if (n_ > 16)
            throw Refusal("reachability search supports at most 16 vertices");
        bits_ = n_ <= 8 ? 16 : 8;
        support_ = target_.support();
        point_ = support_.size() == 1;
        scale_exp_ = g.diameter();
        for (Vertex r : support_)
            required_.push_back(static_cast<long long>(target_[r]) << scale_exp_);
    }

    const PebbleDistribution& target() const { return target_; }
    std::size_t memo_size() const { return dead_.size(); }
    std::uint64_t nodes() const { return nodes_; }

    bool reachable(const PebbleDistribution& start, MoveSequence* witness = nullptr)
    {
        if (start.order() != n_)
            throw std::invalid_argument("distribution length does not match the graph");
        const long limit = bits_ == 16 ? 65535 : 255;
        if (start.size() > limit)
            throw Refusal("reachability search: " + std::to_string(start.size()) +
                          " pebbles exceed the state-key width for n=" + std::to_string(n_));
        state_ = start.counts();
        size_ = start.size();
        path_.clear();
        bool ok = dfs();
        if (ok && witness)
            *witness = path_;
        return ok;
    }

private:
    detail::StateKey key() const
    {
        detail::StateKey k;
        for (int v = 0; v < n_; ++v) {
            int bit = v * bits_;
            auto c = static_cast<std::uint64_t>(state_[v]);
            if (bit < 64)
                k.lo |= c << bit;
            else
                k.hi |= c << (bit - 64);
        }
        return k;
    }

    bool contains_target() const
    {
        for (Vertex r : support_)
            if (state_[r] < target_[r])
                return false;
        return true;
    }

    bool weight_ok() const
    {
        for (std::size_t i = 0; i < support_.size(); ++i) {
            Vertex r = support_[i];
            long long w = 0;
            for (Vertex v = 0; v < n_; ++v)
                if (state_[v])
                    w += static_cast<long long>(state_[v]) << (scale_exp_ - g_.distance(v, r));
            if (w < required_[i])
                return false;
        }
        return true;
    }

    bool dominated_by_dead() const
    {
        for (const auto& dead : window_) {
            bool dominates = true;
            for (int v = 0; v < n_ && dominates; ++v)
                dominates = dead[v] >= state_[v];
            if (dominates)
                return true;
        }
        return false;
    }

    void record_dead(const detail::StateKey& k)
    {
        if (dead_.size() >= opts_.budget.memo_cap)
            throw Refusal("reachability memo exceeded " + std::to_string(opts_.budget.memo_cap) + " states");
        dead_.insert(k);
        if (opts_.domination_window == 0)
            return;
        if (window_.size() < opts_.domination_window)
            window_.push_back(state_);
        else
            window_[window_next_++ % opts_.domination_window] = state_;
    }

    bool dfs()
    {
        if (contains_target())
            return true;
        if (size_ < target_.size())
            return false;
        if ((++nodes_ & 0xFFF) == 0)
            opts_.budget.check_deadline();
        if (opts_.weight_pruning && !weight_ok())
            return false;
        auto k = key();
        if (dead_.count(k) || dominated_by_dead())
            return false;

        // Most deficient target vertex steers the move order.
        Vertex focus = support_.front();
        for (Vertex r : support_)
            if (target_[r] - state_[r] > target_[focus] - state_[focus])
                focus = r;

        std::array<std::pair<int, std::pair<Vertex, Vertex>>, 256> buf;
        std::size_t count = 0;
        for (Vertex v = 0; v < n_; ++v) {
            if (state_[v] < 2 || (point_ && v == support_.front()))
                continue;
            for (Vertex u : g_.neighbors(v)) {
                int toward = g_.distance(u, focus) - g_.distance(v, focus);
                if (count < buf.size())
                    buf[count++] = {toward, {v, u}};
            }
        }
        std::stable_sort(buf.begin(), buf.begin() + static_cast<std::ptrdiff_t>(count),
                         [](const auto& a, const auto& b) { return a.first < b.first; });

        for (std::size_t i = 0; i < count; ++i) {
            auto [v, u] = buf[i].second;
            state_[v] -= 2;
            state_[u] += 1;
            --size_;
            path_.push_back({v, u, Rational(1)});
            bool ok = dfs();
            if (ok)
                return true;
            path_.pop_back();
            ++size_;
            state_[u] -= 1;
            state_[v] += 2;
        }
        record_dead(k);
        return false;
    }

    const Graph& g_;
    PebbleDistribution target_;
    SearchOptions opts_;
    int n_;
    int bits_ = 16;
    std::vector<Vertex> support_;
    bool point_ = false;
    int scale_exp_ = 0;
    std::vector<long long> required_;

    std::vector<int> state_;
    long size_ = 0;
    MoveSequence path_;
    std::unordered_set<detail::StateKey, detail::StateKeyHash> dead_;
    std::vector<std::vector<int>> window_;
    std::size_t window_next_ = 0;
    std::uint64_t nodes_ = 0;
};

/// Reachability oracle for one graph that keeps a search object (and its
/// memo) per target, and answers point targets on trees directly.
class ReachabilityOracle {
public:
    explicit ReachabilityOracle(const Graph& g, SearchOptions opts = {}) : g_(g), opts_(std::move(opts))
    {
        g.require_connected();
        tree_ = opts_.tree_fast_path && g.is_tree();
    }

    const Graph& graph() const { return g_; }
    const SearchOptions& options() const { return opts_; }

    bool reachable(const PebbleDistribution& d, const PebbleDistribution& target, MoveSequence* witness = nullptr)
    {
        auto support = target.support();
        if (tree_ && support.size() == 1) {
            Vertex r = support.front();
            if (!witness)
                return tree_capacities(rooted(r), d)[r] >= target[r];
            auto res = tree_move_cost(g_, d, r, target[r]);
            if (res.success)
                *witness = std::move(res.moves);
            return res.success;
        }
        auto& search = searches_[target.counts()];
        if (!search)
            search = std::make_unique<ReachabilitySearch>(g_, target, opts_);
        return search->reachable(d, witness);
    }

    bool reaches_point(const PebbleDistribution& d, Vertex r, int t)
    {
        if (d[r] >= t)
            return true;
        return reachable(d, PebbleDistribution::point(g_.order(), r, t));
    }

    /// Largest t such that t pebbles can be placed on r.
    long max_pebbles_to(const PebbleDistribution& d, Vertex r)
    {
        if (tree_)
            return tree_capacities(rooted(r), d)[r];
        long lo = d[r];
        long hi = to_long(floor(weight(g_, d, r)));
        while (lo < hi) {
            long mid = lo + (hi - lo + 1) / 2;
            if (reaches_point(d, r, static_cast<int>(mid)))
                lo = mid;
            else
                hi = mid - 1;
        }
        return lo;
    }

    bool t_fold_solvable(const PebbleDistribution& d, int t)
    {
        for (Vertex r = 0; r < g_.order(); ++r)
            if (!reaches_point(d, r, t))
                return false;
        return true;
    }

    std::size_t memo_size() const
    {
        std::size_t total = 0;
        for (const auto& [key, s] : searches_)
            total += s->memo_size();
        return total;
    }

private:
    const RootedTree& rooted(Vertex r)
    {
        auto it = rooted_.find(r);
        if (it == rooted_.end())
            it = rooted_.emplace(r, hang_tree(g_, r)).first;
        return it->second;
    }

    const Graph& g_;
    SearchOptions opts_;
    bool tree_ = false;
    std::map<std::vector<int>, std::unique_ptr<ReachabilitySearch>> searches_;
    std::map<Vertex, RootedTree> rooted_;
};

inline bool is_reachable(const Graph& g, const PebbleDistribution& d, const PebbleDistribution& target,
                         MoveSequence* witness = nullptr, const SearchOptions& opts = {})
{
    ReachabilityOracle oracle(g, opts);
    return oracle.reachable(d, target, witness);
}

inline long max_pebbles_to(const Graph& g, const PebbleDistribution& d, Vertex r, const SearchOptions& opts = {})
{
    ReachabilityOracle oracle(g, opts);
    return oracle.max_pebbles_to(d, r);
}

inline bool is_t_fold_solvable(const Graph& g, const PebbleDistribution& d, int t, const SearchOptions& opts = {})
{
    if (t < 1)
        throw std::invalid_argument("t must be at least 1");
    ReachabilityOracle oracle(g, opts);
    return oracle.t_fold_solvable(d, t);
}

} // namespace pebbling

#endif // PEBBLING_REACHABILITY_HPP
