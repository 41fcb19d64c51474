#!/usr/bin/env python3
# Copyright 2026 The twoxtwo Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.


# Independent reference for CCE polytope vertex/edge counts and Nash points of
# small test games. Uses Python fractions and a brute-force LP-free vertex
# search; used once to freeze expected values in the C++ tests.
import itertools
import sys
from fractions import Fraction as F

CELLS = [(0, 0), (0, 1), (1, 0), (1, 1)]


def payoff(g, p, r, c):
    return g[4 * p + 2 * r + c]


def constraints(g):
    rows = []
    for p in (0, 1):
        for dev in (0, 1):
            row = []
            for r, c in CELLS:
                if p == 0:
                    row.append(payoff(g, 0, dev, c) - payoff(g, 0, r, c))
                else:
                    row.append(payoff(g, 1, r, dev) - payoff(g, 1, r, c))
            rows.append(row)
    for i in range(4):
        rows.append([F(-1) if j == i else F(0) for j in range(4)])
    return rows


def solve(a, b):
    n = len(a)
    m = [list(map(F, row)) + [F(x)] for row, x in zip(a, b)]
    for col in range(n):
        piv = next((i for i in range(col, n) if m[i][col] != 0), None)
        if piv is None:
            return None
        m[col], m[piv] = m[piv], m[col]
        for i in range(n):
            if i != col and m[i][col] != 0:
                f = m[i][col] / m[col][col]
                m[i] = [x - f * y for x, y in zip(m[i], m[col])]
    return [m[i][n] / m[i][i] for i in range(n)]


def rank(vectors):
    m = [list(v) for v in vectors]
    r = 0
    for col in range(4):
        piv = next((i for i in range(r, len(m)) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(len(m)):
            if i != r and m[i][col] != 0:
                f = m[i][col] / m[r][col]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        r += 1
    return r


def polytope(g):
    cons = constraints(g)
    verts = set()
    for combo in itertools.combinations(range(8), 3):
        x = solve([cons[i] for i in combo] + [[1, 1, 1, 1]], [0, 0, 0, 1])
        if x is None:
            continue
        if all(sum(a * b for a, b in zip(row, x)) <= 0 for row in cons):
            verts.add(tuple(x))
    verts = sorted(verts)
    tight = [frozenset(i for i, row in enumerate(cons)
                       if sum(a * b for a, b in zip(row, v)) == 0) for v in verts]
    edges = []
    for a, b in itertools.combinations(range(len(verts)), 2):
        common = tight[a] & tight[b]
        if sum(1 for t in tight if common <= t) == 2:
            edges.append((a, b))
    dim = rank([[x - y for x, y in zip(v, verts[0])] for v in verts[1:]]) if verts else -1
    return verts, edges, dim


GAMES = {
    "prisoners_dilemma": [-1, -3, 0, -2, -1, 0, -3, -2],
    "matching_pennies": [1, -1, -1, 1, -1, 1, 1, -1],
    "coordination": [2, 0, 0, 1, 2, 0, 0, 1],
    "zero": [0] * 8,
    "fig5_coordination": [0, 1, 1, 0, 0, 1, 1, 0],
    "fig5_safety": [1, -1, -1, 1, 1, -1, 0, 0],
    "fig5_horseplay": [1, -1, -1, 1, 0, 0, 0, 0],
    "traffic_lights": [-9, 1, 0, 0, -9, 0, 1, 0],
}

if __name__ == "__main__":
    for name, flat in GAMES.items():
        v, e, d = polytope([F(x) for x in flat])
        print(name, "vertices", len(v), "edges", len(e), "dim", d)
        for x in v:
            print("   ", " ".join(str(c) for c in x))
