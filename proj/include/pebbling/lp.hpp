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

#ifndef PEBBLING_LP_HPP
#define PEBBLING_LP_HPP

#include "pebbling/budget.hpp"
#include "pebbling/rational.hpp"

#include <json.hpp>

#include <cstddef>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pebbling {

enum class Sense { ge, le, eq };

struct LinearConstraint {
    std::string name;
    std::vector<std::pair<int, long>> terms; // (variable index, coefficient)
    Sense sense = Sense::ge;
    long rhs = 0;
};

/// Minimize objective . x subject to integer-coefficient linear rows and
/// x >= 0. Variables flagged integral make it an integer program.
struct LinearProgram {
    std::vector<std::string> variables;
    std::vector<long> objective;
    std::vector<LinearConstraint> constraints;
    std::vector<bool> integral;

    int add_variable(std::string name, long cost, bool is_integral)
    {
        variables.push_back(std::move(name));
        objective.push_back(cost);
        integral.push_back(is_integral);
        return static_cast<int>(variables.size()) - 1;
    }
    std::size_t variable_count() const { return variables.size(); }
    bool any_integral() const
    {
        for (bool b : integral)
            if (b)
                return true;
        return false;
    }
};

enum class LpStatus { optimal, infeasible, unbounded };

inline std::string to_string(LpStatus s)
{
    switch (s) {
    case LpStatus::optimal: return "optimal";
    case LpStatus::infeasible: return "infeasible";
    case LpStatus::unbounded: return "unbounded";
    }
    return "?";
}

struct LpSolution {
    LpStatus status = LpStatus::infeasible;
    Rational objective;
    std::vector<Rational> values;
    std::size_t pivots = 0;
    std::size_t nodes = 0;
};

/// Extra variable bounds imposed by branch-and-bound.
struct VariableBound {
    int variable = 0;
    bool upper = true;
    long value = 0;
};

namespace detail {

/// Dense two-phase tableau simplex over exact rationals with Bland's rule.
class RationalSimplex {
public:
    RationalSimplex(const LinearProgram& lp, const std::vector<VariableBound>& bounds) : lp_(lp)
    {
        n_struct_ = static_cast<int>(lp.variable_count());
        struct Row {
            std::vector<std::pair<int, Rational>> terms;
            Sense sense;
            Rational rhs;
        };
        std::vector<Row> rows;
        for (const auto& c : lp.constraints) {
            Row r{{}, c.sense, Rational(c.rhs)};
            for (auto [j, a] : c.terms)
                if (a != 0)
                    r.terms.emplace_back(j, Rational(a));
            rows.push_back(std::move(r));
        }
        for (const auto& b : bounds)
            rows.push_back(Row{{{b.variable, Rational(1)}}, b.upper ? Sense::le : Sense::ge, Rational(b.value)});

        m_ = static_cast<int>(rows.size());
        int slacks = 0;
        for (const auto& r : rows)
            if (r.sense != Sense::eq)
                ++slacks;
        first_artificial_ = n_struct_ + slacks;
        cols_ = first_artificial_ + m_;
        tab_.assign(m_, std::vector<Rational>(cols_ + 1, Rational(0)));
        basis_.assign(m_, -1);

        int slack = n_struct_;
        for (int i = 0; i < m_; ++i) {
            auto& row = tab_[i];
            for (const auto& [j, a] : rows[i].terms)
                row[j] += a;
            if (rows[i].sense == Sense::ge)
                row[slack++] = -1;
            else if (rows[i].sense == Sense::le)
                row[slack++] = 1;
            row[cols_] = rows[i].rhs;
            if (row[cols_] < 0)
                for (auto& x : row)
                    x = -x;
            row[first_artificial_ + i] = 1;
            basis_[i] = first_artificial_ + i;
        }
    }

    LpSolution solve()
    {
        LpSolution sol;
        // Phase one: minimize the sum of artificials.
        std::vector<Rational> cost(cols_, Rational(0));
        for (int j = first_artificial_; j < cols_; ++j)
            cost[j] = 1;
        run(cost, cols_);
        Rational infeas(0);
        for (int i = 0; i < m_; ++i)
            if (basis_[i] >= first_artificial_)
                infeas += tab_[i][cols_];
        sol.pivots = pivots_;
        if (infeas > 0) {
            sol.status = LpStatus::infeasible;
            return sol;
        }
        drive_out_artificials();

        std::vector<Rational> cost2(cols_, Rational(0));
        for (int j = 0; j < n_struct_; ++j)
            cost2[j] = lp_.objective[j];
        bool bounded = run(cost2, first_artificial_);
        sol.pivots = pivots_;
        if (!bounded) {
            sol.status = LpStatus::unbounded;
            return sol;
        }
        sol.status = LpStatus::optimal;
        sol.values.assign(n_struct_, Rational(0));
        for (int i = 0; i < m_; ++i)
            if (basis_[i] < n_struct_)
                sol.values[basis_[i]] = tab_[i][cols_];
        sol.objective = 0;
        for (int j = 0; j < n_struct_; ++j)
            sol.objective += Rational(lp_.objective[j]) * sol.values[j];
        return sol;
    }

private:
    void pivot(int r, int c)
    {
        ++pivots_;
        auto& prow = tab_[r];
        Rational piv = prow[c];
        for (auto& x : prow)
            if (sgn(x) != 0)
                x /= piv;
        for (int i = 0; i < m_; ++i) {
            if (i == r)
                continue;
            auto& row = tab_[i];
            if (sgn(row[c]) == 0)
                continue;
            Rational f = row[c];
            for (int j = 0; j <= cols_; ++j)
                if (sgn(prow[j]) != 0)
                    row[j] -= f * prow[j];
        }
        basis_[r] = c;
    }

    /// Primal simplex on columns [0, allowed). Returns false if unbounded.
    bool run(const std::vector<Rational>& cost, int allowed)
    {
        std::vector<char> is_basic(cols_, 0);
        for (;;) {
            std::fill(is_basic.begin(), is_basic.end(), 0);
            for (int b : basis_)
                is_basic[b] = 1;
            // Bland: lowest-index column with negative reduced cost enters.
            int enter = -1;
            for (int j = 0; j < allowed && enter < 0; ++j) {
                if (is_basic[j])
                    continue;
                Rational rc = cost[j];
                for (int i = 0; i < m_; ++i)
                    if (sgn(tab_[i][j]) != 0 && sgn(cost[basis_[i]]) != 0)
                        rc -= cost[basis_[i]] * tab_[i][j];
                if (rc < 0)
                    enter = j;
            }
            if (enter < 0)
                return true;
            int leave = -1;
            Rational best;
            for (int i = 0; i < m_; ++i) {
                if (tab_[i][enter] <= 0)
                    continue;
                Rational ratio = tab_[i][cols_] / tab_[i][enter];
                if (leave < 0 || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave < 0)
                return false;
            pivot(leave, enter);
        }
    }

    void drive_out_artificials()
    {
        for (int i = 0; i < m_; ++i) {
            if (basis_[i] < first_artificial_)
                continue;
            int col = -1;
            for (int j = 0; j < first_artificial_ && col < 0; ++j)
                if (sgn(tab_[i][j]) != 0)
                    col = j;
            if (col >= 0) {
                pivot(i, col);
            } else {
                // Redundant row: drop it.
                tab_.erase(tab_.begin() + i);
                basis_.erase(basis_.begin() + i);
                --m_;
                --i;
            }
        }
    }

    const LinearProgram& lp_;
    int n_struct_ = 0;
    int m_ = 0;
    int first_artificial_ = 0;
    int cols_ = 0;
    std::vector<std::vector<Rational>> tab_;
    std::vector<int> basis_;
    std::size_t pivots_ = 0;
};

} // namespace detail

/// Exact check of a candidate assignment against every row and x >= 0.
/// Returns the name of the first violated row, or nullopt.
inline std::optional<std::string> first_violation(const LinearProgram& lp, const std::vector<Rational>& x)
{
    if (x.size() != lp.variable_count())
        return std::string("assignment length");
    for (std::size_t j = 0; j < x.size(); ++j)
        if (x[j] < 0)
            return "nonnegativity of " + lp.variables[j];
    for (const auto& c : lp.constraints) {
        Rational lhs(0);
        for (auto [j, a] : c.terms)
            lhs += Rational(a) * x[j];
        bool ok = c.sense == Sense::ge ? lhs >= c.rhs : c.sense == Sense::le ? lhs <= c.rhs : lhs == c.rhs;
        if (!ok)
            return c.name;
    }
    return std::nullopt;
}

namespace detail {

inline void certify(const LinearProgram& lp, const LpSolution& sol)
{
    if (sol.status != LpStatus::optimal)
        return;
    if (auto bad = first_violation(lp, sol.values))
        throw std::logic_error("simplex returned an assignment violating " + *bad);
    Rational dot(0);
    for (std::size_t j = 0; j < sol.values.size(); ++j)
        dot += Rational(lp.objective[j]) * sol.values[j];
    if (dot != sol.objective)
        throw std::logic_error("simplex objective disagrees with its assignment");
}

inline LpSolution solve_relaxation(const LinearProgram& lp, const std::vector<VariableBound>& bounds)
{
    RationalSimplex simplex(lp, bounds);
    return simplex.solve();
}

} // namespace detail

/// Continuous optimum (integrality flags must all be false).
inline LpSolution solve_lp(const LinearProgram& lp)
{
    if (lp.any_integral())
        throw std::invalid_argument("solve_lp: model has integral variables; use solve_ip");
    auto sol = detail::solve_relaxation(lp, {});
    detail::certify(lp, sol);
    return sol;
}

/// Integer optimum by depth-first branch-and-bound on the exact LP
/// relaxation, branching on the most fractional variable (down branch
/// first). Objective coefficients are integers, so a node whose relaxation
/// rounds up to the incumbent is pruned.
inline LpSolution solve_ip(const LinearProgram& lp, std::size_t node_budget = 1'000'000,
                           std::optional<std::vector<Rational>> incumbent_hint = std::nullopt)
{
    for (std::size_t j = 0; j < lp.variable_count(); ++j)
        if (!lp.integral[j])
            throw std::invalid_argument("solve_ip: variable " + lp.variables[j] + " is not integral");

    LpSolution best;
    best.status = LpStatus::infeasible;
    if (incumbent_hint && !first_violation(lp, *incumbent_hint)) {
        best.status = LpStatus::optimal;
        best.values = *incumbent_hint;
        best.objective = 0;
        for (std::size_t j = 0; j < best.values.size(); ++j)
            best.objective += Rational(lp.objective[j]) * best.values[j];
    }

    std::size_t nodes = 0;
    std::size_t pivots = 0;
    std::vector<std::vector<VariableBound>> stack{{}};
    while (!stack.empty()) {
        auto bounds = std::move(stack.back());
        stack.pop_back();
        if (++nodes > node_budget)
            throw Refusal("branch-and-bound node budget of " + std::to_string(node_budget) + " exhausted");
        auto relax = detail::solve_relaxation(lp, bounds);
        pivots += relax.pivots;
        if (relax.status == LpStatus::unbounded)
            throw std::runtime_error("integer program has an unbounded relaxation");
        if (relax.status == LpStatus::infeasible)
            continue;
        if (best.status == LpStatus::optimal && Rational(ceil(relax.objective)) >= best.objective)
            continue;

        int branch = -1;
        Rational best_gap(-1);
        for (std::size_t j = 0; j < relax.values.size(); ++j) {
            const Rational& x = relax.values[j];
            if (is_integer(x))
                continue;
            Rational frac = x - Rational(floor(x));
            Rational gap = frac < Rational(1, 2) ? frac : 1 - frac;
            if (gap > best_gap) {
                best_gap = gap;
                branch = static_cast<int>(j);
            }
        }
        if (branch < 0) {
            best = relax;
            continue;
        }
        long down = to_long(floor(relax.values[branch]));
        auto up_bounds = bounds;
        up_bounds.push_back({branch, false, down + 1});
        bounds.push_back({branch, true, down});
        stack.push_back(std::move(up_bounds));
        stack.push_back(std::move(bounds));
    }
    best.nodes = nodes;
    best.pivots = pivots;
    detail::certify(lp, best);
    return best;
}

/// Writes the model in LP text format (Minimize / Subject To / Bounds /
/// General / End).
inline void write_lp(const LinearProgram& lp, std::ostream& out)
{
    auto term = [&](std::ostringstream& line, bool first, long coef, const std::string& var) {
        if (coef < 0)
            line << (first ? "-" : " - ");
        else if (!first)
            line << " + ";
        long mag = coef < 0 ? -coef : coef;
        if (mag != 1)
            line << mag << ' ';
        line << var;
    };
    out << "\\ exported by the pebbling toolkit\n";
    out << "Minimize\n";
    {
        std::ostringstream line;
        line << " obj:";
        bool first = true;
        for (std::size_t j = 0; j < lp.variable_count(); ++j) {
            if (lp.objective[j] == 0)
                continue;
            line << (first ? " " : "");
            term(line, first, lp.objective[j], lp.variables[j]);
            first = false;
        }
        if (first)
            line << " 0 " << lp.variables.front();
        out << line.str() << '\n';
    }
    out << "Subject To\n";
    for (const auto& c : lp.constraints) {
        std::ostringstream line;
        line << ' ' << c.name << ": ";
        bool first = true;
        for (auto [j, a] : c.terms) {
            if (a == 0)
                continue;
            term(line, first, a, lp.variables[j]);
            first = false;
        }
        line << (c.sense == Sense::ge ? " >= " : c.sense == Sense::le ? " <= " : " = ") << c.rhs;
        out << line.str() << '\n';
    }
    out << "Bounds\n";
    for (const auto& v : lp.variables)
        out << ' ' << v << " >= 0\n";
    if (lp.any_integral()) {
        out << "General\n";
        for (std::size_t j = 0; j < lp.variable_count(); ++j)
            if (lp.integral[j])
                out << ' ' << lp.variables[j] << '\n';
    }
    out << "End\n";
}

inline void export_lp(const LinearProgram& lp, const std::string& path)
{
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot open '" + path + "' for writing");
    write_lp(lp, out);
    if (!out)
        throw std::runtime_error("write to '" + path + "' failed");
}

inline nlohmann::json to_json(const LinearProgram& lp, const LpSolution& sol)
{
    nlohmann::json values = nlohmann::json::object();
    for (std::size_t j = 0; j < sol.values.size(); ++j)
        if (sgn(sol.values[j]) != 0)
            values[lp.variables[j]] = to_string(sol.values[j]);
    nlohmann::json j{{"status", to_string(sol.status)}, {"values", values}};
    j["objective"] = sol.status == LpStatus::optimal ? nlohmann::json(to_string(sol.objective)) : nlohmann::json(nullptr);
    return j;
}

} // namespace pebbling

#endif // PEBBLING_LP_HPP
