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

#ifndef PEBBLING_OPT_MODEL_HPP
#define PEBBLING_OPT_MODEL_HPP

#include "pebbling/automorphism.hpp"
#include "pebbling/distribution.hpp"
#include "pebbling/graph.hpp"
#include "pebbling/lp.hpp"
#include "pebbling/rational.hpp"
#include "pebbling/reachability.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace pebbling {

/// Variable layout of the optimal-distribution model.
///
/// D_k is the pebble count placed on vertex k; p_i_j_k is the number of
/// moves from j to k used when vertex i is the target.
struct OptLayout {
    int n = 0;
    int t = 1;
    std::vector<Edge> arcs; // ordered adjacent pairs, (j, k) with j ~ k

    int d_index(Vertex k) const { return k; }
    int p_index(Vertex i, std::size_t arc) const { return n + i * static_cast<int>(arcs.size()) + static_cast<int>(arc); }
};

inline OptLayout opt_layout(const Graph& g, int t)
{
    OptLayout lay;
    lay.n = g.order();
    lay.t = t;
    for (Vertex j = 0; j < g.order(); ++j)
        for (Vertex k : g.neighbors(j))
            lay.arcs.emplace_back(j, k);
    return lay;
}

/// Builds OPT (integral) or its relaxation for target multiplicity t.
/// One row per (root i, vertex v): the net amount left on v after the
/// moves for root i is at least t when v == i and at least 0 otherwise.
inline LinearProgram build_opt_model(const Graph& g, int t, bool integral)
{
    g.require_connected();
    if (t < 1)
        throw std::invalid_argument("t must be at least 1");
    const auto lay = opt_layout(g, t);
    const int n = lay.n;
    LinearProgram lp;
    for (Vertex k = 0; k < n; ++k)
        lp.add_variable("D_" + std::to_string(k), 1, integral);
    for (Vertex i = 0; i < n; ++i)
        for (const auto& [j, k] : lay.arcs)
            lp.add_variable("p_" + std::to_string(i) + "_" + std::to_string(j) + "_" + std::to_string(k), 0, integral);

    for (Vertex i = 0; i < n; ++i) {
        for (Vertex v = 0; v < n; ++v) {
            LinearConstraint row;
            row.name = "r" + std::to_string(i) + "_" + std::to_string(v);
            row.terms.emplace_back(lay.d_index(v), 1);
            for (std::size_t a = 0; a < lay.arcs.size(); ++a) {
                const auto& [x, y] = lay.arcs[a];
                if (y == v)
                    row.terms.emplace_back(lay.p_index(i, a), 1);
                else if (x == v)
                    row.terms.emplace_back(lay.p_index(i, a), -2);
            }
            row.sense = Sense::ge;
            row.rhs = v == i ? t : 0;
            lp.constraints.push_back(std::move(row));
        }
    }
    return lp;
}

/// Every vertex holding its own t pebbles and no moves.
inline std::vector<Rational> trivial_opt_point(const Graph& g, const LinearProgram& lp, int t)
{
    std::vector<Rational> x(lp.variable_count(), Rational(0));
    for (Vertex k = 0; k < g.order(); ++k)
        x[k] = t;
    return x;
}

/// pi*_t via branch-and-bound on the OPT model.
inline LpSolution solve_opt(const Graph& g, int t, std::size_t node_budget = 1'000'000)
{
    auto lp = build_opt_model(g, t, true);
    return solve_ip(lp, node_budget, trivial_opt_point(g, lp, t));
}

/// Sum over v of 2^{-dist(v, r)}.
inline Rational vertex_transitive_m(const Graph& g, Vertex r)
{
    g.check_vertex(r);
    Rational m(0);
    for (Vertex v = 0; v < g.order(); ++v)
        m += pow2(-g.distance(v, r));
    return m;
}

/// Placement part of an OPT solution.
inline FractionalDistribution placement(const Graph& g, const LpSolution& sol)
{
    if (sol.status != LpStatus::optimal)
        throw std::invalid_argument("placement needs an optimal solution");
    std::vector<Rational> d(sol.values.begin(), sol.values.begin() + g.order());
    return FractionalDistribution(std::move(d));
}

struct FractionalOptimum {
    Rational value;
    LpSolution solution;
    std::optional<Rational> transitive_value; // n/m, when the graph is vertex-transitive
};

/// Exact optimum of the relaxation at t = 1. On vertex-transitive graphs the
/// result is checked against n/m and a mismatch throws.
inline FractionalOptimum optimal_fractional_pebbling_full(const Graph& g, int transitivity_cap = 10)
{
    auto lp = build_opt_model(g, 1, false);
    FractionalOptimum out;
    out.solution = solve_lp(lp);
    if (out.solution.status != LpStatus::optimal)
        throw std::logic_error("relaxation is " + to_string(out.solution.status));
    out.value = out.solution.objective;
    if (g.order() <= transitivity_cap && is_vertex_transitive(g, transitivity_cap)) {
        Rational expect = Rational(g.order()) / vertex_transitive_m(g, 0);
        out.transitive_value = expect;
        if (expect != out.value)
            throw std::logic_error("relaxation optimum " + to_string(out.value) + " differs from n/m = " +
                                   to_string(expect));
    }
    return out;
}

inline Rational optimal_fractional_pebbling(const Graph& g)
{
    return optimal_fractional_pebbling_full(g).value;
}

struct Rationalized {
    long t = 1;
    PebbleDistribution distribution;
};

/// Scales a relaxation optimum by the least common multiple of all its
/// denominators and checks with the search engine that the scaled
/// placement is t-fold solvable. Failure to verify is a hard error.
inline Rationalized rationalize_to_integer(const Graph& g, const LpSolution& sol, const SearchOptions& opts = {})
{
    if (sol.status != LpStatus::optimal)
        throw std::invalid_argument("rationalize_to_integer needs an optimal solution");
    BigInt l(1);
    for (const auto& x : sol.values)
        l = lcm(l, BigInt(x.get_den()));
    Rationalized out;
    out.t = to_long(l);
    if (out.t > 0xFFFF)
        throw Refusal("scaled multiplicity " + l.get_str() + " is beyond the search engine's range");
    std::vector<int> counts(g.order());
    for (Vertex v = 0; v < g.order(); ++v) {
        Rational scaled = sol.values[v] * Rational(l);
        counts[v] = static_cast<int>(to_long(scaled.get_num()));
    }
    out.distribution = PebbleDistribution(std::move(counts));
    if (make_rational(out.distribution.size(), out.t) != sol.objective)
        throw std::logic_error("scaled placement size does not match the optimum");
    if (!is_t_fold_solvable(g, out.distribution, static_cast<int>(out.t), opts))
        throw std::logic_error("scaled placement is not " + std::to_string(out.t) + "-fold solvable");
    return out;
}

inline nlohmann::json to_json(const Rationalized& r)
{
    return {{"t", r.t}, {"distribution", to_json(r.distribution)}};
}

} // namespace pebbling

#endif // PEBBLING_OPT_MODEL_HPP
