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

#ifndef PEBBLING_EXACT_NUMBERS_HPP
#define PEBBLING_EXACT_NUMBERS_HPP

#include "pebbling/automorphism.hpp"
#include "pebbling/budget.hpp"
#include "pebbling/distribution.hpp"
#include "pebbling/graph.hpp"
#include "pebbling/graph_io.hpp"
#include "pebbling/reachability.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace pebbling {

enum class StatKind { pi_t, pi_t_rooted, pi_star_t, pi_arbitrary_target };

inline std::string to_string(StatKind k)
{
    switch (k) {
    case StatKind::pi_t: return "pi_t";
    case StatKind::pi_t_rooted: return "pi_t_rooted";
    case StatKind::pi_star_t: return "pi_star_t";
    case StatKind::pi_arbitrary_target: return "pi_arbitrary_target";
    }
    return "?";
}

/// A computed pebbling invariant with its certificate.
///
/// For the worst-case kinds the witness is an unsolvable distribution of
/// size value - 1 (with the root or target it misses); for pi_star_t it is
/// a t-fold solvable distribution of size value.
struct PebblingStat {
    StatKind kind = StatKind::pi_t;
    int t = 1;
    long value = 0;
    std::optional<PebbleDistribution> witness;
    std::optional<Vertex> root;
    std::optional<PebbleDistribution> missed_target;
    std::uint64_t enumerated = 0;
    double elapsed_ms = 0;
};

enum class ScanMethod {
    /// Exhaustive walk of the boundary of the unsolvable down-set.
    boundary,
    /// Ascending k from the 2^D t lower bound, enumerating every distribution.
    ascending,
};

struct ExactOptions {
    Budget budget{};
    SearchOptions search{};
    ScanMethod method = ScanMethod::boundary;
    /// Reduce roots, targets and (ascending/optimal scans) distributions to
    /// automorphism-orbit representatives.
    bool use_symmetry = true;
};

namespace detail {

inline void check_instance(const Graph& g, int t, const Budget& budget)
{
    g.require_connected();
    if (t < 1)
        throw std::invalid_argument("t must be at least 1");
    if (g.order() > budget.max_vertices)
        throw Refusal("n=" + std::to_string(g.order()) + " exceeds the vertex budget " +
                      std::to_string(budget.max_vertices));
    if (t > budget.max_t)
        throw Refusal("t=" + std::to_string(t) + " exceeds the budget " + std::to_string(budget.max_t));
}

/// Weak compositions of k into n parts in colexicographic order (the last
/// coordinate is the most significant). Stops when `visit` returns false.
inline bool for_each_composition(int n, long k, const std::function<bool(const std::vector<int>&)>& visit)
{
    std::vector<int> parts(static_cast<std::size_t>(n), 0);
    std::function<bool(int, long)> rec = [&](int idx, long remaining) -> bool {
        if (idx == 0) {
            parts[0] = static_cast<int>(remaining);
            return visit(parts);
        }
        for (long c = 0; c <= remaining; ++c) {
            parts[idx] = static_cast<int>(c);
            if (!rec(idx - 1, remaining - c))
                return false;
        }
        parts[idx] = 0;
        return true;
    };
    if (n == 0)
        return k == 0 ? visit(parts) : true;
    return rec(n - 1, k);
}

inline std::vector<Permutation> symmetry_group(const Graph& g, bool enabled)
{
    if (!enabled || g.order() > 10)
        return {};
    try {
        return automorphism_group(g);
    } catch (const SymmetryCapExceeded&) {
        return {};
    }
}

inline bool is_representative(const std::vector<int>& counts, const std::vector<Permutation>& group)
{
    return group.empty() || orbit_representative(counts, group) == counts;
}

inline std::vector<Vertex> root_representatives(const Graph& g, bool enabled)
{
    std::vector<Vertex> roots;
    if (enabled && g.order() <= 10) {
        for (const auto& orbit : vertex_orbits(g))
            roots.push_back(orbit.front());
    } else {
        for (Vertex v = 0; v < g.order(); ++v)
            roots.push_back(v);
    }
    return roots;
}

/// Copy of the options with wall-time deadlines started now.
inline ExactOptions armed(ExactOptions opts)
{
    if (!opts.budget.seconds && opts.search.budget.seconds)
        opts.budget.seconds = opts.search.budget.seconds;
    opts.search.budget.seconds = opts.budget.seconds;
    opts.budget.arm();
    opts.search.budget.arm();
    return opts;
}

struct Clocked {
    Clock::time_point start = Clock::now();
    double ms() const { return std::chrono::duration<double, std::milli>(Clock::now() - start).count(); }
};

} // namespace detail

/// Largest unsolvable distribution for one target, found by walking the
/// boundary of the unsolvable down-set.
struct UnsolvableMax {
    long size = 0;
    PebbleDistribution witness;
    std::uint64_t probes = 0;
};

/// Smallest pile on v that alone reaches the target. Bracketed below by
/// the weight condition and above by routing each target pebble
/// separately along a geodesic.
inline long single_pile_threshold(ReachabilityOracle& oracle, const PebbleDistribution& target, Vertex v)
{
    const Graph& g = oracle.graph();
    long lo = 0;
    long hi = 0;
    for (Vertex r : target.support()) {
        long need = static_cast<long>(target[r]) << g.distance(v, r);
        lo = std::max(lo, need);
        hi += need;
    }
    const long cap = oracle.options().budget.max_pebbles;
    if (lo > cap + 1)
        throw Refusal("a single pile needs at least " + std::to_string(lo) + " pebbles; budget is " +
                      std::to_string(cap));
    while (lo < hi) {
        long mid = lo + (hi - lo) / 2;
        if (oracle.reachable(PebbleDistribution::point(g.order(), v, static_cast<int>(mid)), target))
            hi = mid;
        else
            lo = mid + 1;
    }
    return lo;
}

/// Exhaustive search for the maximum |D| such that D cannot reach target.
///
/// Unsolvable distributions form a down-set. Every vertex v has a single
/// pile threshold c_v, so unsolvable counts satisfy D(v) < c_v. The vertex
/// with the largest threshold is resolved last by binary search; every
/// other coordinate is scanned upward until the partial distribution
/// becomes solvable. The lexicographically least maximum witness wins.
inline UnsolvableMax max_unsolvable(ReachabilityOracle& oracle, const PebbleDistribution& target,
                                    const Budget& budget)
{
    const Graph& g = oracle.graph();
    const int n = g.order();
    std::vector<long> threshold(n);
    for (Vertex v = 0; v < n; ++v)
        threshold[v] = single_pile_threshold(oracle, target, v);
    // On a tree with a point target, a pebble pushed from v to a child never
    // raises any capacity toward the root, so some maximum unsolvable
    // distribution lives on the non-root leaves.
    if (oracle.options().tree_fast_path && target.support().size() == 1 && n > 1 && g.is_tree()) {
        const Vertex r = target.support().front();
        for (Vertex v = 0; v < n; ++v)
            if (v == r || g.degree(v) != 1)
                threshold[v] = 1;
    }

    for (Vertex v = 0; v < n; ++v)
        if (threshold[v] - 1 > budget.max_pebbles)
            throw Refusal("vertex " + std::to_string(v) + " may hold " + std::to_string(threshold[v] - 1) +
                          " pebbles in an unsolvable distribution; budget is " + std::to_string(budget.max_pebbles));

    Vertex last = 0;
    for (Vertex v = 1; v < n; ++v)
        if (threshold[v] > threshold[last])
            last = v;
    std::vector<Vertex> order;
    for (Vertex v = 0; v < n; ++v)
        if (v != last)
            order.push_back(v);
    // Slack each remaining prefix coordinate can still add, for pruning.
    std::vector<long> tail(order.size() + 1, 0);
    for (std::size_t i = order.size(); i-- > 0;)
        tail[i] = tail[i + 1] + threshold[order[i]] - 1;

    UnsolvableMax best;
    best.size = -1;
    std::vector<int> counts(static_cast<std::size_t>(n), 0);

    auto solvable = [&](const std::vector<int>& c) {
        if (++best.probes > budget.enumeration_cap)
            throw Refusal("enumeration cap of " + std::to_string(budget.enumeration_cap) + " probes exhausted");
        if ((best.probes & 0x3FF) == 0)
            budget.check_deadline();
        return oracle.reachable(PebbleDistribution(c), target);
    };

    auto consider = [&](long total) {
        if (total > best.size || (total == best.size && counts < best.witness.counts())) {
            best.size = total;
            best.witness = PebbleDistribution(counts);
        }
    };

    // Largest x < threshold[last] keeping the distribution unsolvable;
    // counts[last] == 0 is known to be unsolvable on entry.
    auto resolve_last = [&](long hi) {
        long lo = 0;
        while (lo < hi) {
            long mid = lo + (hi - lo + 1) / 2;
            counts[last] = static_cast<int>(mid);
            if (solvable(counts))
                hi = mid - 1;
            else
                lo = mid;
        }
        counts[last] = static_cast<int>(lo);
        return lo;
    };

    std::function<void(std::size_t, long, long)> rec = [&](std::size_t level, long partial, long last_hi) {
        if (partial + tail[level] + last_hi < best.size)
            return;
        if (level == order.size()) {
            long x = resolve_last(last_hi);
            consider(partial + x);
            counts[last] = 0;
            return;
        }
        Vertex v = order[level];
        long hi = last_hi;
        for (long c = 0; c < threshold[v]; ++c) {
            counts[v] = static_cast<int>(c);
            if (c > 0 && solvable(counts))
                break;
            // The last coordinate's maximum only shrinks as c grows.
            if (level + 1 == order.size()) {
                long x = resolve_last(hi);
                consider(partial + c + x);
                counts[last] = 0;
                hi = x;
            } else {
                rec(level + 1, partial + c, hi);
            }
        }
        counts[v] = 0;
    };

    if (solvable(counts))
        throw std::logic_error("empty distribution reaches a nonempty target");
    if (order.empty()) {
        long x = resolve_last(threshold[last] - 1);
        consider(x);
    } else {
        rec(0, 0, threshold[last] - 1);
    }
    return best;
}

namespace detail {

struct AscendingResult {
    long value = 0;
    PebbleDistribution witness;
    std::optional<Vertex> root;
    std::optional<PebbleDistribution> target;
    std::uint64_t enumerated = 0;
};

/// Ascending-k scan: the first k at which every size-k distribution is good
/// is the answer; the last bad distribution seen (size k-1) is the witness.
/// `bad` returns the missed root/target for an unsolvable distribution.
template <class Bad>
AscendingResult ascending_scan(const Graph& g, long start, const ExactOptions& opts, Bad bad)
{
    const auto group = symmetry_group(g, opts.use_symmetry);
    AscendingResult out;
    std::optional<PebbleDistribution> last_bad;
    for (long k = std::max(0L, start - 1);; ++k) {
        if (k > opts.budget.max_pebbles)
            throw Refusal("ascending scan reached " + std::to_string(k) + " pebbles without closing; value > " +
                          std::to_string(k - 1) + " proven, budget is " + std::to_string(opts.budget.max_pebbles));
        std::optional<PebbleDistribution> found;
        for_each_composition(g.order(), k, [&](const std::vector<int>& c) {
            if (++out.enumerated > opts.budget.enumeration_cap)
                throw Refusal("enumeration cap exhausted at k=" + std::to_string(k));
            if (!is_representative(c, group))
                return true;
            PebbleDistribution d(c);
            auto miss = bad(d);
            if (miss) {
                found = d;
                out.root = miss->first;
                out.target = miss->second;
                return false;
            }
            return true;
        });
        if (!found) {
            if (!last_bad)
                throw std::logic_error("lower bound " + std::to_string(start) + " is not a lower bound");
            out.value = k;
            out.witness = *last_bad;
            return out;
        }
        last_bad = found;
    }
}

} // namespace detail

/// pi_t(G, r): least k such that every size-k distribution puts t pebbles on r.
inline PebblingStat rooted_pebbling_number(const Graph& g, Vertex r, int t, const ExactOptions& options = {})
{
    const ExactOptions opts = detail::armed(options);
    detail::check_instance(g, t, opts.budget);
    g.check_vertex(r);
    detail::Clocked clock;
    ReachabilityOracle oracle(g, opts.search);
    PebblingStat stat;
    stat.kind = StatKind::pi_t_rooted;
    stat.t = t;
    stat.root = r;
    auto target = PebbleDistribution::point(g.order(), r, t);
    if (opts.method == ScanMethod::boundary) {
        auto best = max_unsolvable(oracle, target, opts.budget);
        stat.value = best.size + 1;
        stat.witness = best.witness;
        stat.enumerated = best.probes;
    } else {
        long lb = static_cast<long>(t) << g.eccentricity(r);
        ExactOptions plain = opts;
        plain.use_symmetry = false; // the root breaks the symmetry
        auto res = detail::ascending_scan(g, lb, plain, [&](const PebbleDistribution& d)
                                              -> std::optional<std::pair<Vertex, PebbleDistribution>> {
            if (oracle.reachable(d, target))
                return std::nullopt;
            return std::make_pair(r, target);
        });
        stat.value = res.value;
        stat.witness = res.witness;
        stat.enumerated = res.enumerated;
    }
    stat.elapsed_ms = clock.ms();
    return stat;
}

/// pi_t(G): the maximum over roots of pi_t(G, r).
inline PebblingStat pebbling_number(const Graph& g, int t, const ExactOptions& options = {})
{
    const ExactOptions opts = detail::armed(options);
    detail::check_instance(g, t, opts.budget);
    detail::Clocked clock;
    ReachabilityOracle oracle(g, opts.search);
    PebblingStat stat;
    stat.kind = StatKind::pi_t;
    stat.t = t;
    const int n = g.order();
    if (opts.method == ScanMethod::boundary) {
        long best = -1;
        for (Vertex r : detail::root_representatives(g, opts.use_symmetry)) {
            auto res = max_unsolvable(oracle, PebbleDistribution::point(n, r, t), opts.budget);
            stat.enumerated += res.probes;
            if (res.size > best || (res.size == best && res.witness < *stat.witness)) {
                best = res.size;
                stat.witness = res.witness;
                stat.root = r;
            }
        }
        stat.value = best + 1;
    } else {
        long lb = static_cast<long>(t) << g.diameter();
        auto res = detail::ascending_scan(g, lb, opts, [&](const PebbleDistribution& d)
                                              -> std::optional<std::pair<Vertex, PebbleDistribution>> {
            for (Vertex r = 0; r < n; ++r)
                if (!oracle.reaches_point(d, r, t))
                    return std::make_pair(r, PebbleDistribution::point(n, r, t));
            return std::nullopt;
        });
        stat.value = res.value;
        stat.witness = res.witness;
        stat.enumerated = res.enumerated;
        for (Vertex r = 0; r < n; ++r)
            if (!oracle.reaches_point(res.witness, r, t)) {
                stat.root = r;
                break;
            }
    }
    stat.elapsed_ms = clock.ms();
    return stat;
}

/// A size pi_t(G) - 1 distribution that is not t-fold solvable.
inline PebbleDistribution max_unsolvable_witness(const Graph& g, int t, const ExactOptions& opts = {})
{
    auto stat = pebbling_number(g, t, opts);
    if (!is_t_fold_solvable(g, *stat.witness, t, opts.search) && stat.witness->size() == stat.value - 1)
        return *stat.witness;
    throw std::logic_error("pebbling_number produced a witness that does not certify its value");
}

/// pi*_t(G): the least size of a t-fold solvable distribution.
inline PebblingStat optimal_pebbling_number(const Graph& g, int t, const ExactOptions& options = {})
{
    const ExactOptions opts = detail::armed(options);
    detail::check_instance(g, t, opts.budget);
    detail::Clocked clock;
    ReachabilityOracle oracle(g, opts.search);
    const auto group = detail::symmetry_group(g, opts.use_symmetry);
    PebblingStat stat;
    stat.kind = StatKind::pi_star_t;
    stat.t = t;
    for (long k = t;; ++k) {
        if (k > opts.budget.max_pebbles)
            throw Refusal("no t-fold solvable distribution with at most " + std::to_string(opts.budget.max_pebbles) +
                          " pebbles");
        detail::for_each_composition(g.order(), k, [&](const std::vector<int>& c) {
            if (++stat.enumerated > opts.budget.enumeration_cap)
                throw Refusal("enumeration cap exhausted at k=" + std::to_string(k));
            if (!detail::is_representative(c, group))
                return true;
            PebbleDistribution d(c);
            if (oracle.t_fold_solvable(d, t)) {
                stat.witness = d;
                return false;
            }
            return true;
        });
        if (stat.witness) {
            stat.value = k;
            break;
        }
    }
    stat.elapsed_ms = clock.ms();
    return stat;
}

/// Every target distribution of t pebbles, one per automorphism orbit when
/// symmetry is enabled.
inline std::vector<PebbleDistribution> target_distributions(const Graph& g, int t, bool use_symmetry)
{
    const auto group = detail::symmetry_group(g, use_symmetry);
    std::vector<PebbleDistribution> out;
    detail::for_each_composition(g.order(), t, [&](const std::vector<int>& c) {
        if (detail::is_representative(c, group))
            out.emplace_back(c);
        return true;
    });
    return out;
}

/// pi(G, t): least k such that every size-k distribution reaches every
/// target distribution of t pebbles.
inline PebblingStat arbitrary_target_number(const Graph& g, int t, const ExactOptions& options = {})
{
    const ExactOptions opts = detail::armed(options);
    detail::check_instance(g, t, opts.budget);
    detail::Clocked clock;
    ReachabilityOracle oracle(g, opts.search);
    PebblingStat stat;
    stat.kind = StatKind::pi_arbitrary_target;
    stat.t = t;
    const auto targets = target_distributions(g, t, opts.use_symmetry);
    if (opts.method == ScanMethod::boundary) {
        long best = -1;
        for (const auto& target : targets) {
            auto res = max_unsolvable(oracle, target, opts.budget);
            stat.enumerated += res.probes;
            if (res.size > best || (res.size == best && res.witness < *stat.witness)) {
                best = res.size;
                stat.witness = res.witness;
                stat.missed_target = target;
            }
        }
        stat.value = best + 1;
    } else {
        long lb = static_cast<long>(t) << g.diameter();
        ExactOptions plain = opts;
        plain.use_symmetry = false;
        auto res = detail::ascending_scan(g, lb, plain, [&](const PebbleDistribution& d)
                                              -> std::optional<std::pair<Vertex, PebbleDistribution>> {
            for (const auto& target : target_distributions(g, t, false))
                if (!oracle.reachable(d, target))
                    return std::make_pair(Vertex{-1}, target);
            return std::nullopt;
        });
        stat.value = res.value;
        stat.witness = res.witness;
        stat.enumerated = res.enumerated;
        for (const auto& target : target_distributions(g, t, false))
            if (!oracle.reachable(res.witness, target)) {
                stat.missed_target = target;
                break;
            }
    }
    stat.elapsed_ms = clock.ms();
    return stat;
}

inline nlohmann::json to_json(const Graph& g, const PebblingStat& s)
{
    nlohmann::json j{{"graph", serialize_graph6(g)},
                     {"kind", to_string(s.kind)},
                     {"t", s.t},
                     {"value", s.value},
                     {"witness", s.witness ? to_json(*s.witness) : nlohmann::json(nullptr)},
                     {"elapsed_ms", s.elapsed_ms},
                     {"enumerated_count", s.enumerated}};
    if (s.root)
        j["root"] = *s.root;
    if (s.missed_target)
        j["missed_target"] = to_json(*s.missed_target);
    return j;
}

} // namespace pebbling

#endif // PEBBLING_EXACT_NUMBERS_HPP
