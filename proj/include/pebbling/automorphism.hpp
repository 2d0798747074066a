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

#ifndef PEBBLING_AUTOMORPHISM_HPP
#define PEBBLING_AUTOMORPHISM_HPP

#include "pebbling/graph.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace pebbling {

using Permutation = std::vector<Vertex>;

/// Raised when a symmetry computation would exceed its configured cap.
class SymmetryCapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

/// Backtracking search for automorphisms. Candidates for the image of each
/// vertex must share its degree and sorted distance profile, and must keep
/// every distance to already-mapped vertices.
class AutomorphismSearch {
public:
    explicit AutomorphismSearch(const Graph& g) : g_(g), n_(g.order())
    {
        g.require_connected();
        profile_.resize(n_);
        for (Vertex v = 0; v < n_; ++v) {
            for (Vertex w = 0; w < n_; ++w)
                profile_[v].push_back(g.distance(v, w));
            std::sort(profile_[v].begin(), profile_[v].end());
        }
    }

    /// Visits automorphisms with image(first) == image_of_first (or all when
    /// unset) until the visitor returns false.
    void run(std::optional<std::pair<Vertex, Vertex>> fixed, const std::function<bool(const Permutation&)>& visit)
    {
        image_.assign(n_, -1);
        used_.assign(n_, 0);
        fixed_ = fixed;
        visit_ = &visit;
        stop_ = false;
        extend(0);
    }

private:
    bool compatible(Vertex v, Vertex img) const
    {
        if (used_[img] || profile_[v] != profile_[img])
            return false;
        if (fixed_ && fixed_->first == v && fixed_->second != img)
            return false;
        for (Vertex u = 0; u < v; ++u)
            if (g_.distance(u, v) != g_.distance(image_[u], img))
                return false;
        return true;
    }

    void extend(Vertex v)
    {
        if (stop_)
            return;
        if (v == n_) {
            if (!(*visit_)(image_))
                stop_ = true;
            return;
        }
        for (Vertex img = 0; img < n_ && !stop_; ++img) {
            if (!compatible(v, img))
                continue;
            image_[v] = img;
            used_[img] = 1;
            extend(v + 1);
            used_[img] = 0;
            image_[v] = -1;
        }
    }

    const Graph& g_;
    int n_;
    std::vector<std::vector<int>> profile_;
    Permutation image_;
    std::vector<char> used_;
    std::optional<std::pair<Vertex, Vertex>> fixed_;
    const std::function<bool(const Permutation&)>* visit_ = nullptr;
    bool stop_ = false;
};

inline void check_cap(const Graph& g, int cap)
{
    if (g.order() > cap)
        throw SymmetryCapExceeded("symmetry search refused: n=" + std::to_string(g.order()) + " exceeds cap " +
                                  std::to_string(cap));
}

} // namespace detail

/// True iff some automorphism of g maps u to v.
inline bool maps_to(const Graph& g, Vertex u, Vertex v, int cap = 10)
{
    detail::check_cap(g, cap);
    g.check_vertex(u);
    g.check_vertex(v);
    detail::AutomorphismSearch search(g);
    bool found = false;
    search.run(std::make_pair(u, v), [&](const Permutation&) {
        found = true;
        return false;
    });
    return found;
}

/// Vertex orbits under Aut(g), each sorted, ordered by smallest member.
inline std::vector<std::vector<Vertex>> vertex_orbits(const Graph& g, int cap = 10)
{
    detail::check_cap(g, cap);
    const int n = g.order();
    std::vector<int> orbit_of(n, -1);
    std::vector<std::vector<Vertex>> orbits;
    for (Vertex u = 0; u < n; ++u) {
        if (orbit_of[u] >= 0)
            continue;
        orbit_of[u] = static_cast<int>(orbits.size());
        orbits.push_back({u});
        for (Vertex v = u + 1; v < n; ++v) {
            if (orbit_of[v] < 0 && maps_to(g, u, v, cap)) {
                orbit_of[v] = orbit_of[u];
                orbits.back().push_back(v);
            }
        }
    }
    return orbits;
}

inline bool is_vertex_transitive(const Graph& g, int cap = 10)
{
    detail::check_cap(g, cap);
    for (Vertex v = 1; v < g.order(); ++v)
        if (!maps_to(g, 0, v, cap))
            return false;
    return true;
}

/// Every automorphism of g; refuses when the group is larger than max_group.
inline std::vector<Permutation> automorphism_group(const Graph& g, int cap = 10, std::size_t max_group = 50000)
{
    detail::check_cap(g, cap);
    std::vector<Permutation> out;
    detail::AutomorphismSearch search(g);
    bool overflow = false;
    search.run(std::nullopt, [&](const Permutation& p) {
        if (out.size() >= max_group) {
            overflow = true;
            return false;
        }
        out.push_back(p);
        return true;
    });
    if (overflow)
        throw SymmetryCapExceeded("automorphism group larger than " + std::to_string(max_group));
    return out;
}

/// Lexicographically greatest image of `values` under the group, where
/// the image of values is w with w[p[v]] = values[v].
template <class T>
std::vector<T> orbit_representative(const std::vector<T>& values, const std::vector<Permutation>& group)
{
    std::vector<T> best = values;
    std::vector<T> img(values.size());
    for (const auto& p : group) {
        for (std::size_t v = 0; v < values.size(); ++v)
            img[p[v]] = values[v];
        if (img > best)
            best = img;
    }
    return best;
}

} // namespace pebbling

#endif // PEBBLING_AUTOMORPHISM_HPP
