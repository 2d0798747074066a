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

#ifndef PEBBLING_VERIFY_HPP
#define PEBBLING_VERIFY_HPP

#include "pebbling/automorphism.hpp"
#include "pebbling/constructions.hpp"
#include "pebbling/exact_numbers.hpp"
#include "pebbling/families.hpp"
#include "pebbling/formulas.hpp"
#include "pebbling/graph_io.hpp"
#include "pebbling/opt_model.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace pebbling {

enum class RowStatus { pass, fail, refusal };

inline std::string to_string(RowStatus s)
{
    switch (s) {
    case RowStatus::pass: return "pass";
    case RowStatus::fail: return "fail";
    case RowStatus::refusal: return "refusal";
    }
    return "?";
}

/// One checked instance.
struct ReportRow {
    std::string id; // "<catalog index>:<graph6>"
    int n = 0;
    int diameter = 0;
    std::map<std::string, long> params;
    nlohmann::json values = nlohmann::json::object();
    std::vector<BoundReport> bounds;
    nlohmann::json witnesses = nlohmann::json::object();
    RowStatus status = RowStatus::pass;
    std::string note;
};

struct VerificationReport {
    std::string suite;
    std::vector<ReportRow> rows;
    double elapsed_ms = 0;

    std::size_t count(RowStatus s) const
    {
        return static_cast<std::size_t>(
            std::count_if(rows.begin(), rows.end(), [&](const ReportRow& r) { return r.status == s; }));
    }
    std::size_t instances() const { return rows.size(); }
    std::size_t passes() const { return count(RowStatus::pass); }
    std::size_t failures() const { return count(RowStatus::fail); }
    std::size_t refusals() const { return count(RowStatus::refusal); }

    /// 0 all pass, 1 any failure, 2 refusals only.
    int exit_code() const { return failures() ? 1 : refusals() ? 2 : 0; }
};

inline nlohmann::json to_json(const ReportRow& r)
{
    nlohmann::json bounds = nlohmann::json::array();
    for (const auto& b : r.bounds)
        bounds.push_back(to_json(b));
    nlohmann::json j{{"id", r.id},         {"n", r.n},           {"diameter", r.diameter},
                     {"params", r.params}, {"values", r.values}, {"bounds", bounds},
                     {"witnesses", r.witnesses}, {"status", to_string(r.status)}};
    if (!r.note.empty())
        j["note"] = r.note;
    return j;
}

inline nlohmann::json to_json(const VerificationReport& rep)
{
    nlohmann::json rows = nlohmann::json::array();
    nlohmann::json failures = nlohmann::json::array();
    for (const auto& r : rep.rows) {
        rows.push_back(to_json(r));
        if (r.status == RowStatus::fail)
            failures.push_back(to_json(r));
    }
    return {{"suite", rep.suite},
            {"summary",
             {{"instances", rep.instances()},
              {"passes", rep.passes()},
              {"failures", rep.failures()},
              {"refusals", rep.refusals()}}},
            {"elapsed_ms", rep.elapsed_ms},
            {"rows", rows},
            {"counterexamples", failures}};
}

struct SweepOptions {
    int max_n = 6;
    int max_t = 2;
    ExactOptions exact{};
    std::size_t node_budget = 1'000'000;
    /// Graphs to sweep; when absent the suite uses its built-in families.
    std::optional<std::vector<Graph>> catalog;
    unsigned threads = 0; // 0: hardware concurrency
};

namespace detail {

/// Runs job(i) for i in [0, count) on a worker pool; results land in slot i
/// so the merged order never depends on scheduling.
inline std::vector<std::vector<ReportRow>> parallel_rows(std::size_t count, unsigned threads,
                                                         const std::function<std::vector<ReportRow>(std::size_t)>& job)
{
    std::vector<std::vector<ReportRow>> out(count);
    if (threads == 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= count)
                return;
            try {
                out[i] = job(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error)
                    error = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned k = 1; k < threads; ++k)
        pool.emplace_back(worker);
    worker();
    for (auto& th : pool)
        th.join();
    if (error)
        std::rethrow_exception(error);
    return out;
}

inline ReportRow base_row(std::size_t index, const Graph& g)
{
    ReportRow row;
    row.id = std::to_string(index) + ":" + serialize_graph6(g);
    row.n = g.order();
    row.diameter = g.connected() ? g.diameter() : -1;
    return row;
}

/// Evaluates `check` into a row, turning refusals into refusal rows.
inline ReportRow checked(ReportRow row, const std::function<void(ReportRow&)>& check)
{
    try {
        check(row);
    } catch (const Refusal& e) {
        row.status = RowStatus::refusal;
        row.note = e.what();
    }
    return row;
}

inline void expect(ReportRow& row, bool ok, const std::string& why)
{
    if (!ok && row.status == RowStatus::pass) {
        row.status = RowStatus::fail;
        row.note = why;
    }
}

inline VerificationReport assemble(std::string suite, std::vector<std::vector<ReportRow>> parts, const Clocked& clock)
{
    VerificationReport rep;
    rep.suite = std::move(suite);
    for (auto& p : parts)
        for (auto& r : p)
            rep.rows.push_back(std::move(r));
    rep.elapsed_ms = clock.ms();
    return rep;
}

inline std::vector<Graph> connected_only(std::vector<Graph> graphs, int max_n)
{
    std::vector<Graph> out;
    for (auto& g : graphs)
        if (g.order() <= max_n && g.order() >= 1 && g.connected())
            out.push_back(std::move(g));
    return out;
}

/// Paths, cycles, complete graphs, stars, wheels and hypercubes on at most
/// max_n vertices.
inline std::vector<Graph> builtin_families(int max_n)
{
    std::vector<Graph> out;
    for (int n = 1; n <= max_n; ++n)
        out.push_back(path_graph(n));
    for (int n = 3; n <= max_n; ++n)
        out.push_back(cycle_graph(n));
    for (int n = 4; n <= max_n; ++n)
        out.push_back(complete_graph(n));
    for (int p = 3; p + 1 <= max_n; ++p)
        out.push_back(star_graph(p));
    for (int p = 3; p + 1 <= max_n; ++p)
        out.push_back(wheel_graph(p));
    for (int k = 2; (1 << k) <= max_n; ++k)
        out.push_back(hypercube_graph(k));
    return out;
}

inline std::vector<Graph> sweep_graphs(const SweepOptions& o)
{
    return connected_only(o.catalog ? *o.catalog : builtin_families(o.max_n), o.max_n);
}

inline nlohmann::json stat_witness(const PebblingStat& s)
{
    nlohmann::json j{{"distribution", s.witness ? to_json(*s.witness) : nlohmann::json(nullptr)}};
    if (s.root)
        j["root"] = *s.root;
    if (s.missed_target)
        j["missed_target"] = to_json(*s.missed_target);
    return j;
}

/// pi_1..pi_{upto}, index t.
inline std::vector<PebblingStat> pi_sequence(const Graph& g, int upto, const ExactOptions& opts)
{
    std::vector<PebblingStat> out(static_cast<std::size_t>(upto) + 1);
    for (int t = 1; t <= upto; ++t)
        out[t] = pebbling_number(g, t, opts);
    return out;
}

inline ExactOptions widened(ExactOptions o, int t)
{
    o.budget.max_t = std::max(o.budget.max_t, t);
    return o;
}

} // namespace detail

// ---------------------------------------------------------------------------
// Theorem suites
// ---------------------------------------------------------------------------

/// Brute-force pi_t(T, r) and pi_t(T) against the path-partition formula.
inline VerificationReport verify_trees(const SweepOptions& o)
{
    detail::Clocked clock;
    std::vector<Graph> trees;
    if (o.catalog) {
        for (const auto& g : *o.catalog)
            if (g.order() >= 2 && g.order() <= o.max_n && g.is_tree())
                trees.push_back(g);
    } else {
        for (int n = 2; n <= o.max_n; ++n) {
            trees.push_back(path_graph(n));
            if (n >= 3)
                trees.push_back(star_graph(n - 1));
        }
    }
    auto parts = detail::parallel_rows(trees.size(), o.threads, [&](std::size_t i) {
        const Graph& g = trees[i];
        std::vector<ReportRow> rows;
        for (int t = 1; t <= o.max_t; ++t) {
            for (Vertex r = 0; r < g.order(); ++r) {
                auto row = detail::base_row(i, g);
                row.params = {{"t", t}, {"root", r}};
                rows.push_back(detail::checked(row, [&](ReportRow& row) {
                    auto part = maximal_path_partition(g, r);
                    long formula = tree_pebbling_formula(part, t);
                    auto stat = rooted_pebbling_number(g, r, t, o.exact);
                    row.values = {{"exact", stat.value}, {"formula", formula}, {"partition", part.lengths}};
                    row.witnesses = detail::stat_witness(stat);
                    detail::expect(row, stat.value == formula, "rooted value differs from the tree formula");
                }));
            }
            auto row = detail::base_row(i, g);
            row.params = {{"t", t}};
            rows.push_back(detail::checked(row, [&](ReportRow& row) {
                auto part = maximal_path_partition(g);
                long formula = tree_pebbling_formula(part, t);
                auto stat = pebbling_number(g, t, o.exact);
                row.values = {{"exact", stat.value}, {"formula", formula}, {"partition", part.lengths}};
                row.witnesses = detail::stat_witness(stat);
                detail::expect(row, stat.value == formula, "pebbling number differs from the tree formula");
            }));
        }
        return rows;
    });
    return detail::assemble("trees", std::move(parts), clock);
}

/// Brute-force pi_t(C_n) against the cycle formulas, 3 <= n <= max_n.
inline VerificationReport verify_cycles(const SweepOptions& o)
{
    detail::Clocked clock;
    std::vector<Graph> cycles;
    for (int n = 3; n <= o.max_n; ++n)
        cycles.push_back(cycle_graph(n));
    auto parts = detail::parallel_rows(cycles.size(), o.threads, [&](std::size_t i) {
        const Graph& g = cycles[i];
        std::vector<ReportRow> rows;
        for (int t = 1; t <= o.max_t; ++t) {
            auto row = detail::base_row(i, g);
            row.params = {{"t", t}};
            rows.push_back(detail::checked(row, [&](ReportRow& row) {
                long formula = cycle_pebbling_formula(g.order(), t);
                auto stat = pebbling_number(g, t, o.exact);
                row.values = {{"exact", stat.value}, {"formula", formula}};
                row.witnesses = detail::stat_witness(stat);
                detail::expect(row, stat.value == formula, "cycle value differs from the formula");
            }));
        }
        return rows;
    });
    return detail::assemble("cycles", std::move(parts), clock);
}

/// pi_t(G, r) <= (2^e - 1)/e (n - 1) + 2^e (t - 1) + 1 for every root r of
/// eccentricity e.
inline VerificationReport verify_radius(const SweepOptions& o)
{
    detail::Clocked clock;
    auto graphs = detail::sweep_graphs(o);
    auto parts = detail::parallel_rows(graphs.size(), o.threads, [&](std::size_t i) {
        const Graph& g = graphs[i];
        std::vector<ReportRow> rows;
        if (g.order() < 2)
            return rows;
        for (int t = 1; t <= o.max_t; ++t) {
            for (Vertex r = 0; r < g.order(); ++r) {
                auto row = detail::base_row(i, g);
                row.params = {{"t", t}, {"root", r}};
                rows.push_back(detail::checked(row, [&](ReportRow& row) {
                    auto stat = rooted_pebbling_number(g, r, t, o.exact);
                    auto bound = radius_bound_report(g.order(), g.eccentricity(r), t, stat.value);
                    row.values = {{"exact", stat.value}};
                    row.bounds.push_back(bound);
                    row.witnesses = detail::stat_witness(stat);
                    detail::expect(row, bound.holds(), "radius bound violated");
                }));
            }
        }
        return rows;
    });
    return detail::assemble("radius", std::move(parts), clock);
}

/// Diameter-2 graphs: pi_t <= pi + 4t - 4 <= n + 4t - 3.
inline VerificationReport verify_diam2(const SweepOptions& o)
{
    detail::Clocked clock;
    std::vector<Graph> graphs;
    for (auto& g : detail::sweep_graphs(o))
        if (g.diameter() == 2)
            graphs.push_back(std::move(g));
    auto parts = detail::parallel_rows(graphs.size(), o.threads, [&](std::size_t i) {
        const Graph& g = graphs[i];
        std::vector<ReportRow> rows;
        std::optional<long> pi;
        for (int t = 1; t <= o.max_t; ++t) {
            auto row = detail::base_row(i, g);
            row.params = {{"t", t}};
            rows.push_back(detail::checked(row, [&](ReportRow& row) {
                auto stat = pebbling_number(g, t, o.exact);
                if (t == 1)
                    pi = stat.value;
                if (!pi)
                    throw Refusal("pi(G) unavailable");
                row.values = {{"exact", stat.value}, {"pi", *pi}};
                row.bounds = diam2_bounds(g.order(), t, pi, stat.value);
                row.witnesses = detail::stat_witness(stat);
                for (const auto& b : row.bounds)
                    detail::expect(row, b.holds(), b.bound + " violated");
                detail::expect(row, *pi + 4 * t - 4 <= g.order() + 4 * t - 3, "pi + 4t - 4 exceeds n + 4t - 3");
            }));
        }
        return rows;
    });
    return detail::assemble("diam2", std::move(parts), clock);
}

/// pi(G, t) = pi_t(G) on trees, cycles and complete graphs, and
/// pi(G, t) = 2^D t on even cycles and hypercubes.
inline VerificationReport verify_targets(const SweepOptions& o)
{
    detail::Clocked clock;
    struct Item {
        Graph g;
        bool power_form;
    };
    std::vector<Item> items;
    if (o.catalog) {
        for (auto& g : detail::connected_only(*o.catalog, o.max_n))
            if (g.order() >= 2)
                items.push_back({std::move(g), false});
    } else {
        for (int n = 2; n <= o.max_n; ++n) {
            items.push_back({path_graph(n), false});
            if (n >= 4)
                items.push_back({star_graph(n - 1), false});
            if (n >= 3)
                items.push_back({cycle_graph(n), false});
            items.push_back({complete_graph(n), false});
        }
        for (int n = 4; n <= std::max(6, o.max_n); n += 2)
            items.push_back({cycle_graph(n), true});
        for (int k = 2; k <= 3 && (1 << k) <= std::max(8, o.max_n); ++k)
            items.push_back({hypercube_graph(k), true});
    }
    auto parts = detail::parallel_rows(items.size(), o.threads, [&](std::size_t i) {
        const auto& [g, power_form] = items[i];
        std::vector<ReportRow> rows;
        for (int t = 1; t <= o.max_t; ++t) {
            if (power_form && t < 2)
                continue;
            auto row = detail::base_row(i, g);
            row.params = {{"t", t}};
            rows.push_back(detail::checked(row, [&](ReportRow& row) {
                auto arb = arbitrary_target_number(g, t, detail::widened(o.exact, t));
                row.witnesses = detail::stat_witness(arb);
                if (power_form) {
                    long expect = (1L << g.diameter()) * t;
                    row.values = {{"arbitrary", arb.value}, {"formula", expect}};
                    detail::expect(row, arb.value == expect, "pi(G,t) differs from 2^D t");
                } else {
                    auto pt = pebbling_number(g, t, detail::widened(o.exact, t));
                    row.values = {{"arbitrary", arb.value}, {"pi_t", pt.value}};
                    detail::expect(row, arb.value == pt.value, "pi(G,t) differs from pi_t(G)");
                }
            }));
        }
        return rows;
    });
    return detail::assemble("targets", std::move(parts), clock);
}

/// Closed-form optimal fractional values of the vertex-transitive families.
inline std::optional<Rational> fractional_closed_form(const std::string& family, int param)
{
    if (family == "complete")
        return make_rational(2L * param, param + 1);
    if (family == "hypercube") {
        Rational q(1);
        for (int i = 0; i < param; ++i)
            q *= make_rational(4, 3);
        return q;
    }
    if (family == "cycle") {
        const long k = param / 2;
        if (param % 2 == 0)
            return Rational(k) * pow2(k + 1) / Rational(3 * ((1L << k) - 1));
        return Rational(2 * k + 1) * pow2(k - 1) / (3 * pow2(k - 1) - 1);
    }
    return std::nullopt;
}

/// m = sum 2^{-dist(v, r)} is the same for every root of a vertex-transitive
/// graph, and the relaxation optimum equals n/m.
inline VerificationReport verify_vertex_transitive(const SweepOptions& o)
{
    detail::Clocked clock;
    std::vector<std::pair<std::string, int>> fams;
    for (int n = 2; n <= 6; ++n)
        fams.emplace_back("complete", n);
    for (int n = 3; n <= 8; ++n)
        fams.emplace_back("cycle", n);
    for (int k = 1; k <= 3; ++k)
        fams.emplace_back("hypercube", k);
    auto parts = detail::parallel_rows(fams.size(), o.threads, [&](std::size_t i) {
        const auto& [fam, param] = fams[i];
        Graph g = make_family(parse_family(fam + ":" + std::to_string(param)));
        auto row = detail::base_row(i, g);
        row.params = {{fam, param}};
        row = detail::checked(row, [&](ReportRow& row) {
            detail::expect(row, is_vertex_transitive(g), "family member is not vertex-transitive");
            Rational m = vertex_transitive_m(g, 0);
            for (Vertex r = 1; r < g.order(); ++r)
                detail::expect(row, vertex_transitive_m(g, r) == m, "m depends on the root");
            auto opt = optimal_fractional_pebbling_full(g);
            row.values = {{"m", to_string(m)},
                          {"n_over_m", to_string(Rational(g.order()) / m)},
                          {"lp", to_string(opt.value)}};
            detail::expect(row, opt.value == Rational(g.order()) / m, "relaxation optimum differs from n/m");
        });
        return std::vector<ReportRow>{row};
    });
    return detail::assemble("verttrans", std::move(parts), clock);
}

/// Relaxation optima against the closed forms for K_n, C_n and Q^k, with
/// the scaled integer placement engine-verified.
inline VerificationReport verify_fracopt(const SweepOptions& o)
{
    detail::Clocked clock;
    std::vector<std::pair<std::string, int>> fams;
    for (int n = 2; n <= 6; ++n)
        fams.emplace_back("complete", n);
    for (int n = 3; n <= 8; ++n)
        fams.emplace_back("cycle", n);
    for (int k = 1; k <= 3; ++k)
        fams.emplace_back("hypercube", k);
    auto parts = detail::parallel_rows(fams.size(), o.threads, [&](std::size_t i) {
        const auto& [fam, param] = fams[i];
        Graph g = make_family(parse_family(fam + ":" + std::to_string(param)));
        auto row = detail::base_row(i, g);
        row.params = {{fam, param}};
        row = detail::checked(row, [&](ReportRow& row) {
            auto opt = optimal_fractional_pebbling_full(g);
            auto closed = *fractional_closed_form(fam, param);
            row.values = {{"lp", to_string(opt.value)}, {"closed_form", to_string(closed)}};
            detail::expect(row, opt.value == closed, "relaxation optimum differs from the closed form");
            if (g.order() <= 8) {
                auto scaled = rationalize_to_integer(g, opt.solution, o.exact.search);
                row.witnesses = {{"scaled", to_json(scaled)}};
            }
        });
        return std::vector<ReportRow>{row};
    });
    return detail::assemble("fracopt", std::move(parts), clock);
}

/// Branch-and-bound on OPT equals the brute-force optimal pebbling number.
inline VerificationReport verify_opt(const SweepOptions& o)
{
    detail::Clocked clock;
    auto graphs = detail::sweep_graphs(o);
    auto parts = detail::parallel_rows(graphs.size(), o.threads, [&](std::size_t i) {
        const Graph& g = graphs[i];
        std::vector<ReportRow> rows;
        for (int t = 1; t <= o.max_t; ++t) {
            auto row = detail::base_row(i, g);
            row.params = {{"t", t}};
            rows.push_back(detail::checked(row, [&](ReportRow& row) {
                auto brute = optimal_pebbling_number(g, t, o.exact);
                auto ip = solve_opt(g, t, o.node_budget);
                row.values = {{"brute_force", brute.value},
                              {"ip", to_string(ip.objective)},
                              {"nodes", ip.nodes}};
                row.witnesses = detail::stat_witness(brute);
                detail::expect(row, ip.status == LpStatus::optimal && ip.objective == brute.value,
                               "integer optimum differs from brute force");
            }));
        }
        return rows;
    });
    return detail::assemble("opt", std::move(parts), clock);
}

/// pi_t/t is nonincreasing and stays at least 2^D; from t = ceil((n-1)/D)
/// on, consecutive values differ by exactly 2^D.
inline VerificationReport verify_ratio(const SweepOptions& o)
{
    detail::Clocked clock;
    std::vector<Graph> graphs =
        o.catalog ? detail::sweep_graphs(o)
                  : std::vector<Graph>{cycle_graph(4), cycle_graph(6), complete_graph(3), path_graph(3)};
    auto parts = detail::parallel_rows(graphs.size(), o.threads, [&](std::size_t i) {
        const Graph& g = graphs[i];
        auto row = detail::base_row(i, g);
        row.params = {{"max_t", o.max_t}};
        row = detail::checked(row, [&](ReportRow& row) {
            if (g.order() < 2)
                return;
            auto pis = detail::pi_sequence(g, o.max_t, detail::widened(o.exact, o.max_t));
            const long power = 1L << g.diameter();
            const long threshold = diambound_threshold(g.order(), g.diameter());
            nlohmann::json seq = nlohmann::json::array();
            for (int t = 1; t <= o.max_t; ++t) {
                seq.push_back(pis[t].value);
                detail::expect(row, pis[t].value >= power * t, "pi_t below 2^D t");
                if (t > 1)
                    detail::expect(row, pis[t].value * (t - 1) <= pis[t - 1].value * t, "pi_t/t increased");
                if (t > 1 && t - 1 >= threshold)
                    detail::expect(row, pis[t].value - pis[t - 1].value == power,
                                   "step differs from 2^D past the threshold");
            }
            row.values = {{"pi_t", seq}, {"two_pow_d", power}, {"threshold", threshold}};
        });
        return std::vector<ReportRow>{row};
    });
    return detail::assemble("ratio", std::move(parts), clock);
}

// ---------------------------------------------------------------------------
// Conjecture sweeps
// ---------------------------------------------------------------------------

/// pi_{t+1} <= pi_t + 2^D for t <= max_t. Inside the proven regime
/// t >= ceil((n-1)/D) a violation is reported as a theorem failure.
inline VerificationReport conjecture_diam(const SweepOptions& o)
{
    detail::Clocked clock;
    auto graphs = detail::sweep_graphs(o);
    auto parts = detail::parallel_rows(graphs.size(), o.threads, [&](std::size_t i) {
        const Graph& g = graphs[i];
        std::vector<ReportRow> rows;
        if (g.order() < 2)
            return rows;
        std::vector<PebblingStat> pis;
        std::optional<std::string> refused;
        try {
            pis = detail::pi_sequence(g, o.max_t + 1, detail::widened(o.exact, o.max_t + 1));
        } catch (const Refusal& e) {
            refused = e.what();
        }
        const long power = 1L << g.diameter();
        const long threshold = diambound_threshold(g.order(), g.diameter());
        for (int t = 1; t <= o.max_t; ++t) {
            auto row = detail::base_row(i, g);
            row.params = {{"t", t}};
            if (refused) {
                row.status = RowStatus::refusal;
                row.note = *refused;
                rows.push_back(row);
                continue;
            }
            row.values = {{"pi_t", pis[t].value}, {"pi_t_plus_1", pis[t + 1].value}, {"two_pow_d", power},
                          {"proven_regime", t >= threshold}};
            row.bounds.push_back({"pi_t+2^D", {{"t", t}, {"d", g.diameter()}}, Rational(pis[t].value + power),
                                  pis[t + 1].value});
            row.witnesses = detail::stat_witness(pis[t + 1]);
            detail::expect(row, pis[t + 1].value <= pis[t].value + power,
                           t >= threshold ? "theorem violated: pi_{t+1} > pi_t + 2^D in the proven regime"
                                          : "counterexample: pi_{t+1} > pi_t + 2^D");
            rows.push_back(row);
        }
        return rows;
    });
    return detail::assemble("diamconj", std::move(parts), clock);
}

/// pi_t <= pi + 2^D (t - 1).
inline VerificationReport conjecture_weak_diam(const SweepOptions& o)
{
    detail::Clocked clock;
    auto graphs = detail::sweep_graphs(o);
    auto parts = detail::parallel_rows(graphs.size(), o.threads, [&](std::size_t i) {
        const Graph& g = graphs[i];
        std::vector<ReportRow> rows;
        if (g.order() < 2)
            return rows;
        for (int t = 1; t <= o.max_t; ++t) {
            auto row = detail::base_row(i, g);
            row.params = {{"t", t}};
            rows.push_back(detail::checked(row, [&](ReportRow& row) {
                auto pi = pebbling_number(g, 1, o.exact);
                auto pt = pebbling_number(g, t, o.exact);
                const long bound = pi.value + (1L << g.diameter()) * (t - 1);
                row.values = {{"pi", pi.value}, {"pi_t", pt.value}};
                row.bounds.push_back({"pi+2^D(t-1)", {{"t", t}}, Rational(bound), pt.value});
                row.witnesses = detail::stat_witness(pt);
                detail::expect(row, pt.value <= bound, "counterexample: pi_t > pi + 2^D (t-1)");
            }));
        }
        return rows;
    });
    return detail::assemble("weakdiam", std::move(parts), clock);
}

/// pi(G, t) = pi_t(G).
inline VerificationReport conjecture_targets(const SweepOptions& o)
{
    detail::Clocked clock;
    auto graphs = detail::sweep_graphs(o);
    auto parts = detail::parallel_rows(graphs.size(), o.threads, [&](std::size_t i) {
        const Graph& g = graphs[i];
        std::vector<ReportRow> rows;
        for (int t = 1; t <= o.max_t; ++t) {
            auto row = detail::base_row(i, g);
            row.params = {{"t", t}};
            rows.push_back(detail::checked(row, [&](ReportRow& row) {
                auto arb = arbitrary_target_number(g, t, o.exact);
                auto pt = pebbling_number(g, t, o.exact);
                row.values = {{"arbitrary", arb.value}, {"pi_t", pt.value}};
                row.witnesses = detail::stat_witness(arb);
                detail::expect(row, arb.value == pt.value, "counterexample: pi(G,t) != pi_t(G)");
            }));
        }
        return rows;
    });
    return detail::assemble("targets", std::move(parts), clock);
}

/// pi(G) <= pi(G_{n,d}) with d = D(G); pairs (n, d) the construction cannot
/// realize are skipped.
inline VerificationReport conjecture_gnd(const SweepOptions& o)
{
    detail::Clocked clock;
    auto graphs = detail::sweep_graphs(o);
    std::map<std::pair<int, int>, std::optional<long>> extremal;
    for (const auto& g : graphs) {
        if (g.order() < 2)
            continue;
        auto key = std::make_pair(g.order(), g.diameter());
        if (extremal.count(key))
            continue;
        try {
            extremal[key] = pebbling_number(build_gnd(key.first, key.second), 1, o.exact).value;
        } catch (const InadmissibleParameters&) {
            extremal[key] = std::nullopt;
        }
    }
    auto parts = detail::parallel_rows(graphs.size(), o.threads, [&](std::size_t i) {
        const Graph& g = graphs[i];
        std::vector<ReportRow> rows;
        if (g.order() < 2)
            return rows;
        auto ext = extremal.at({g.order(), g.diameter()});
        if (!ext)
            return rows;
        auto row = detail::base_row(i, g);
        rows.push_back(detail::checked(row, [&](ReportRow& row) {
            auto pi = pebbling_number(g, 1, o.exact);
            row.values = {{"pi", pi.value}, {"pi_gnd", *ext}};
            row.bounds.push_back({"pi(G_nd)", {{"n", g.order()}, {"d", g.diameter()}}, Rational(*ext), pi.value});
            row.witnesses = detail::stat_witness(pi);
            detail::expect(row, pi.value <= *ext, "counterexample: pi(G) > pi(G_{n,d})");
        }));
        return rows;
    });
    return detail::assemble("gnd", std::move(parts), clock);
}

inline const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{"trees",     "cycles",  "radius", "diam2", "targets",
                                                "verttrans", "fracopt", "opt",    "ratio"};
    return names;
}

inline const std::vector<std::string>& conjecture_names()
{
    static const std::vector<std::string> names{"diamconj", "weakdiam", "targets", "gnd"};
    return names;
}

inline VerificationReport run_suite(const std::string& name, const SweepOptions& o)
{
    if (name == "trees") return verify_trees(o);
    if (name == "cycles") return verify_cycles(o);
    if (name == "radius") return verify_radius(o);
    if (name == "diam2") return verify_diam2(o);
    if (name == "targets") return verify_targets(o);
    if (name == "verttrans") return verify_vertex_transitive(o);
    if (name == "fracopt") return verify_fracopt(o);
    if (name == "opt") return verify_opt(o);
    if (name == "ratio") return verify_ratio(o);
    throw std::invalid_argument("unknown suite '" + name + "'");
}

inline VerificationReport run_conjecture(const std::string& name, const SweepOptions& o)
{
    if (name == "diamconj") return conjecture_diam(o);
    if (name == "weakdiam") return conjecture_weak_diam(o);
    if (name == "targets") return conjecture_targets(o);
    if (name == "gnd") return conjecture_gnd(o);
    throw std::invalid_argument("unknown conjecture '" + name + "'");
}

} // namespace pebbling

#endif // PEBBLING_VERIFY_HPP
