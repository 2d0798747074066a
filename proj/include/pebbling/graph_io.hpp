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

#ifndef PEBBLING_GRAPH_IO_HPP
#define PEBBLING_GRAPH_IO_HPP

#include "pebbling/graph.hpp"

#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pebbling {

class Graph6Error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

namespace detail {

inline int graph6_value(char c)
{
    auto b = static_cast<unsigned char>(c);
    if (b < 63 || b > 126)
        throw Graph6Error("graph6: byte " + std::to_string(b) + " outside the printable range 63..126");
    return b - 63;
}

} // namespace detail

/// Decodes one graph6 line (an optional ">>graph6<<" prefix is accepted).
inline Graph parse_graph6(std::string_view text)
{
    constexpr std::string_view kHeader = ">>graph6<<";
    if (text.substr(0, kHeader.size()) == kHeader)
        text.remove_prefix(kHeader.size());
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
        text.remove_suffix(1);
    if (text.empty())
        throw Graph6Error("graph6: empty input");

    std::size_t pos = 0;
    long n = 0;
    auto take = [&](int count) {
        long v = 0;
        for (int i = 0; i < count; ++i) {
            if (pos >= text.size())
                throw Graph6Error("graph6: truncated vertex-count header");
            v = (v << 6) | detail::graph6_value(text[pos++]);
        }
        return v;
    };
    if (text[0] != '~') {
        n = take(1);
    } else {
        ++pos;
        if (pos < text.size() && text[pos] == '~') {
            ++pos;
            n = take(6);
            if (n <= 258047)
                throw Graph6Error("graph6: non-canonical 8-byte header for n=" + std::to_string(n));
        } else {
            n = take(3);
            if (n <= 62)
                throw Graph6Error("graph6: non-canonical 4-byte header for n=" + std::to_string(n));
        }
    }
    if (n > 4096)
        throw Graph6Error("graph6: refusing graph with n=" + std::to_string(n));

    const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t bytes = (bits + 5) / 6;
    if (text.size() - pos != bytes)
        throw Graph6Error("graph6: expected " + std::to_string(bytes) + " adjacency bytes for n=" +
                          std::to_string(n) + ", found " + std::to_string(text.size() - pos));

    std::vector<Edge> edges;
    std::size_t k = 0;
    auto bit = [&](std::size_t index) {
        int byte = detail::graph6_value(text[pos + index / 6]);
        return (byte >> (5 - index % 6)) & 1;
    };
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k)
            if (bit(k))
                edges.emplace_back(i, j);
    for (; k < bytes * 6; ++k)
        if (bit(k))
            throw Graph6Error("graph6: nonzero padding bits");
    return Graph(static_cast<int>(n), edges);
}

inline std::string serialize_graph6(const Graph& g)
{
    const long n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else if (n <= 258047) {
        out.push_back('~');
        for (int s = 12; s >= 0; s -= 6)
            out.push_back(static_cast<char>(63 + ((n >> s) & 63)));
    } else {
        out.append("~~");
        for (int s = 30; s >= 0; s -= 6)
            out.push_back(static_cast<char>(63 + ((n >> s) & 63)));
    }
    int acc = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = filled = 0;
            }
        }
    }
    if (filled > 0)
        out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
    return out;
}

/// Reads every non-blank line of a graph6 stream.
inline std::vector<Graph> read_graph6_stream(std::istream& in)
{
    std::vector<Graph> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line == "\r")
            continue;
        out.push_back(parse_graph6(line));
    }
    return out;
}

inline std::vector<Graph> read_graph6_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open graph6 file '" + path + "'");
    return read_graph6_stream(in);
}

inline nlohmann::json graph_to_json(const Graph& g)
{
    nlohmann::json edges = nlohmann::json::array();
    for (auto [u, v] : g.edges())
        edges.push_back({u, v});
    return {{"n", g.order()}, {"edges", edges}};
}

/// {"n": int, "edges": [[u, v], ...]}
inline Graph graph_from_json(const nlohmann::json& j)
{
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw std::invalid_argument("graph JSON must be an object with \"n\" and \"edges\"");
    const int n = j.at("n").get<int>();
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2)
            throw std::invalid_argument("graph JSON edge must be a [u, v] pair");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return Graph(n, edges);
}

} // namespace pebbling

#endif // PEBBLING_GRAPH_IO_HPP
