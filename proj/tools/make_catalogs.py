#!/usr/bin/env python3
# Copyright 2026 The Pebbling Toolkit Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Write graph6 catalogs used by the verification sweeps.

Uses networkx as the external producer: the graph atlas covers every
graph on up to seven vertices, and nonisomorphic_trees covers trees.
"""
import argparse
import pathlib

import networkx as nx


def connected_graphs(max_n):
    for g in nx.graph_atlas_g():
        n = g.number_of_nodes()
        if 1 <= n <= max_n and nx.is_connected(g):
            yield g


def trees(max_n):
    yield nx.empty_graph(1)
    for n in range(2, max_n + 1):
        yield from nx.nonisomorphic_trees(n)


def write(path, graphs):
    with open(path, "w") as out:
        for g in graphs:
            g = nx.convert_node_labels_to_integers(g)
            out.write(nx.to_graph6_bytes(g, header=False).decode().strip() + "\n")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default="tests/data")
    args = ap.parse_args()
    out = pathlib.Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    write(out / "connected_n1-6.g6", connected_graphs(6))
    write(out / "trees_n1-8.g6", trees(8))
    write(out / "trees_n1-13.g6", trees(13))


if __name__ == "__main__":
    main()
