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

#ifndef PEBBLING_DISTRIBUTION_HPP
#define PEBBLING_DISTRIBUTION_HPP

#include "pebbling/graph.hpp"
#include "pebbling/rational.hpp"

#include <json.hpp>

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace pebbling {

/// Nonnegative integer pebble count per vertex.
class PebbleDistribution {
public:
    PebbleDistribution() = default;
    explicit PebbleDistribution(int n) : counts_(static_cast<std::size_t>(n), 0) {}
    explicit PebbleDistribution(std::vector<int> counts) : counts_(std::move(counts))
    {
        for (int c : counts_)
            if (c < 0)
                throw std::invalid_argument("pebble counts must be nonnegative");
        size_ = std::accumulate(counts_.begin(), counts_.end(), 0L);
    }

    /// t pebbles on r, nothing elsewhere.
    static PebbleDistribution point(int n, Vertex r, int t)
    {
        PebbleDistribution d(n);
        d.set(r, t);
        return d;
    }

    int order() const { return static_cast<int>(counts_.size()); }
    long size() const { return size_; }
    int operator[](Vertex v) const { return counts_[static_cast<std::size_t>(v)]; }
    const std::vector<int>& counts() const { return counts_; }

    void set(Vertex v, int count)
    {
        if (count < 0)
            throw std::invalid_argument("pebble counts must be nonnegative");
        size_ += count - counts_.at(v);
        counts_[v] = count;
    }
    void add(Vertex v, int delta) { set(v, counts_.at(v) + delta); }

    /// Pointwise containment: every vertex holds at least other's count.
    bool contains(const PebbleDistribution& other) const
    {
        for (std::size_t v = 0; v < counts_.size(); ++v)
            if (counts_[v] < other.counts_[v])
                return false;
        return true;
    }

    std::vector<Vertex> support() const
    {
        std::vector<Vertex> out;
        for (std::size_t v = 0; v < counts_.size(); ++v)
            if (counts_[v] > 0)
                out.push_back(static_cast<Vertex>(v));
        return out;
    }

    friend bool operator==(const PebbleDistribution& a, const PebbleDistribution& b) { return a.counts_ == b.counts_; }
    friend bool operator<(const PebbleDistribution& a, const PebbleDistribution& b) { return a.counts_ < b.counts_; }

private:
    std::vector<int> counts_;
    long size_ = 0;
};

/// Nonnegative exact-rational pebble amount per vertex.
class FractionalDistribution {
public:
    FractionalDistribution() = default;
    explicit FractionalDistribution(int n) : amounts_(static_cast<std::size_t>(n), Rational(0)) {}
    explicit FractionalDistribution(std::vector<Rational> amounts) : amounts_(std::move(amounts))
    {
        for (const auto& a : amounts_)
            if (a < 0)
                throw std::invalid_argument("fractional amounts must be nonnegative");
    }
    static FractionalDistribution uniform(int n, const Rational& amount)
    {
        return FractionalDistribution(std::vector<Rational>(static_cast<std::size_t>(n), amount));
    }
    static FractionalDistribution from(const PebbleDistribution& d)
    {
        std::vector<Rational> a;
        for (int c : d.counts())
            a.emplace_back(c);
        return FractionalDistribution(std::move(a));
    }

    int order() const { return static_cast<int>(amounts_.size()); }
    Rational size() const
    {
        Rational s(0);
        for (const auto& a : amounts_)
            s += a;
        return s;
    }
    const Rational& operator[](Vertex v) const { return amounts_[static_cast<std::size_t>(v)]; }
    const std::vector<Rational>& amounts() const { return amounts_; }

private:
    std::vector<Rational> amounts_;
};

/// One pebbling move: two pebbles leave `from`, one arrives at `to`. For a
/// fractional move of size alpha, 2*alpha leave and alpha arrives.
struct Move {
    Vertex from = 0;
    Vertex to = 0;
    Rational amount = 1;

    friend bool operator==(const Move& a, const Move& b)
    {
        return a.from == b.from && a.to == b.to && a.amount == b.amount;
    }
};

using MoveSequence = std::vector<Move>;

class IllegalMove : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline PebbleDistribution apply_move(const Graph& g, PebbleDistribution d, Vertex from, Vertex to)
{
    if (!g.adjacent(from, to))
        throw IllegalMove("move " + std::to_string(from) + "->" + std::to_string(to) + ": vertices not adjacent");
    if (d[from] < 2)
        throw IllegalMove("move " + std::to_string(from) + "->" + std::to_string(to) + ": only " +
                          std::to_string(d[from]) + " pebble(s) on the source");
    d.add(from, -2);
    d.add(to, 1);
    return d;
}

inline PebbleDistribution replay(const Graph& g, PebbleDistribution d, const MoveSequence& moves)
{
    for (const auto& m : moves)
        d = apply_move(g, std::move(d), m.from, m.to);
    return d;
}

inline FractionalDistribution apply_fractional_move(const Graph& g, const FractionalDistribution& d, const Move& m)
{
    if (!g.adjacent(m.from, m.to))
        throw IllegalMove("fractional move between non-adjacent vertices");
    if (m.amount <= 0)
        throw IllegalMove("fractional move size must be positive");
    if (d[m.from] < 2 * m.amount)
        throw IllegalMove("fractional move larger than half the source amount");
    std::vector<Rational> a = d.amounts();
    a[m.from] -= 2 * m.amount;
    a[m.to] += m.amount;
    return FractionalDistribution(std::move(a));
}

/// Sum over v of D(v) * 2^-dist(v, r), exactly.
inline Rational weight(const Graph& g, const PebbleDistribution& d, Vertex r)
{
    Rational w(0);
    for (Vertex v = 0; v < g.order(); ++v)
        if (d[v] > 0)
            w += Rational(d[v]) * pow2(-g.distance(v, r));
    return w;
}

inline Rational weight(const Graph& g, const FractionalDistribution& d, Vertex r)
{
    Rational w(0);
    for (Vertex v = 0; v < g.order(); ++v)
        if (d[v] > 0)
            w += d[v] * pow2(-g.distance(v, r));
    return w;
}

/// A fractional distribution can put one pebble on r iff its weight at r is
/// at least one; moves toward r along geodesics preserve the weight.
inline bool fractional_reachable(const Graph& g, const FractionalDistribution& d, Vertex r)
{
    return weight(g, d, r) >= 1;
}

inline nlohmann::json to_json(const PebbleDistribution& d)
{
    return d.counts();
}

inline nlohmann::json to_json(const FractionalDistribution& d)
{
    nlohmann::json out = nlohmann::json::array();
    for (const auto& a : d.amounts())
        out.push_back(to_string(a));
    return out;
}

inline nlohmann::json to_json(const MoveSequence& moves)
{
    nlohmann::json out = nlohmann::json::array();
    for (const auto& m : moves) {
        if (m.amount == 1)
            out.push_back({m.from, m.to});
        else
            out.push_back({m.from, m.to, to_string(m.amount)});
    }
    return out;
}

inline PebbleDistribution distribution_from_json(const nlohmann::json& j)
{
    if (!j.is_array())
        throw std::invalid_argument("distribution JSON must be an array of integers");
    return PebbleDistribution(j.get<std::vector<int>>());
}

inline FractionalDistribution fractional_from_json(const nlohmann::json& j)
{
    if (!j.is_array())
        throw std::invalid_argument("fractional distribution JSON must be an array");
    std::vector<Rational> a;
    for (const auto& x : j)
        a.push_back(x.is_string() ? parse_rational(x.get<std::string>()) : Rational(x.get<long>()));
    return FractionalDistribution(std::move(a));
}

inline MoveSequence moves_from_json(const nlohmann::json& j)
{
    MoveSequence out;
    for (const auto& m : j) {
        if (!m.is_array() || m.size() < 2)
            throw std::invalid_argument("move JSON must be [from, to] or [from, to, \"p/q\"]");
        Move mv{m[0].get<int>(), m[1].get<int>(), Rational(1)};
        if (m.size() == 3)
            mv.amount = parse_rational(m[2].get<std::string>());
        out.push_back(mv);
    }
    return out;
}

} // namespace pebbling

#endif // PEBBLING_DISTRIBUTION_HPP
