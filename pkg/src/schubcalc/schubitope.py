"""Newton polytopes of Schubert polynomials: the parenthesis-matching
inequality oracle, lattice membership, coefficient vanishing via perfect
tableaux (integral flow), and the zero-one classification.
"""
from __future__ import annotations

import itertools
from typing import Iterable, Sequence

from . import perm, schub
from .perm import Perm

Cell = tuple[int, int]

ZERO_ONE_PATTERNS = [
    (1, 2, 5, 4, 3), (1, 3, 2, 5, 4), (1, 3, 5, 2, 4), (1, 3, 5, 4, 2),
    (2, 1, 5, 4, 3), (1, 2, 5, 3, 6, 4), (1, 2, 5, 6, 3, 4),
    (2, 1, 5, 3, 6, 4), (2, 1, 5, 6, 3, 4), (3, 1, 5, 2, 6, 4),
    (3, 1, 5, 6, 2, 4), (3, 1, 5, 6, 4, 2),
]


def column_sets(D: Iterable[Cell], n: int) -> list[set[int]]:
    """D_j = rows of the cells in column j, for j = 1..n."""
    cols: list[set[int]] = [set() for _ in range(n)]
    for (i, j) in D:
        cols[j - 1].add(i)
    return cols


def theta_column(col: set[int], I: set[int], n: int) -> int:
    """Paired ()'s plus *'s in the column word read top to bottom:
    '(' at empty rows of I, ')' at cells outside I, '*' at cells in I."""
    depth = 0
    pairs = 0
    stars = 0
    for i in range(1, n + 1):
        in_d = i in col
        in_i = i in I
        if in_d and in_i:
            stars += 1
        elif not in_d and in_i:
            depth += 1
        elif in_d and not in_i:
            if depth > 0:
                depth -= 1
                pairs += 1
    return pairs + stars


def theta(D: Iterable[Cell], I: Iterable[int], n: int) -> int:
    cols = column_sets(D, n)
    I = set(I)
    return sum(theta_column(col, I, n) for col in cols)


def schubitope_member(alpha: Sequence[int], w: Perm,
                      n: int | None = None) -> bool:
    """alpha lies in the Newton polytope of the Schubert polynomial:
    coordinates sum to l(w) and every subset inequality holds."""
    if n is None:
        n = max(len(w), len(alpha), 1)
    if len(alpha) > n or any(a < 0 for a in alpha):
        raise ValueError(f"bad exponent vector {alpha}")
    alpha = tuple(alpha) + (0,) * (n - len(alpha))
    if sum(alpha) != perm.length(w):
        return False
    D = perm.rothe_diagram(w)
    cols = column_sets(D, n)
    for r in range(1, n + 1):
        for I in itertools.combinations(range(1, n + 1), r):
            bound = sum(theta_column(col, set(I), n) for col in cols)
            if sum(alpha[i - 1] for i in I) > bound:
                return False
    return True


def lattice_points(w: Perm, n: int | None = None) -> set[tuple[int, ...]]:
    """All lattice points of the Newton polytope (desk scale)."""
    if n is None:
        n = max(len(w), 1)
    ell = perm.length(w)
    out = set()
    for alpha in _compositions(ell, n):
        if schubitope_member(alpha, w, n):
            out.add(alpha)
    return out


def _compositions(total: int, parts: int) -> Iterable[tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


# ---------------------------------------------------------------------------
# coefficient vanishing


def coefficient_nonzero(w: Perm, alpha: Sequence[int]) -> bool:
    """Feasibility of the perfect-tableau system by max flow.

    Source -> row i with capacity alpha_i; cell arcs (i, j) of capacity 1;
    column chains encode the flagged suffix bounds (totally unimodular, so
    feasibility over the rationals is integral feasibility).
    """
    n = max(len(w), len(alpha), 1)
    alpha = tuple(alpha) + (0,) * (n - len(alpha))
    if any(a < 0 for a in alpha):
        raise ValueError(f"bad exponent vector {alpha}")
    if sum(alpha) != perm.length(w):
        return False
    D = perm.rothe_diagram(w)
    cols = column_sets(D, n)

    # node ids: 0 source, 1 sink, rows 2..n+1, chain (j, k) after that
    source, sink = 0, 1
    base_rows = 2
    base_chain = base_rows + n

    def chain(j: int, k: int) -> int:  # j in 1..n, k in 0..n
        return base_chain + (j - 1) * (n + 1) + k

    nodes = base_chain + n * (n + 1)
    graph: dict[int, dict[int, int]] = {u: {} for u in range(nodes)}

    def add_edge(u: int, v: int, cap: int) -> None:
        graph[u][v] = graph[u].get(v, 0) + cap
        graph[v].setdefault(u, 0)

    need = 0
    for i in range(1, n + 1):
        if alpha[i - 1]:
            add_edge(source, base_rows + i - 1, alpha[i - 1])
            need += alpha[i - 1]
    for j in range(1, n + 1):
        col = cols[j - 1]
        if not col:
            continue
        for i in range(1, n + 1):
            add_edge(base_rows + i - 1, chain(j, i), 1)
        for k in range(n, 0, -1):
            capacity = sum(1 for s in col if s >= k)
            add_edge(chain(j, k), chain(j, k - 1), capacity)
        add_edge(chain(j, 0), sink, len(col))

    # Dinic-style BFS/DFS max flow (graphs are tiny)
    def bfs() -> list[int] | None:
        level = [-1] * nodes
        level[source] = 0
        queue = [source]
        while queue:
            u = queue.pop(0)
            for v, cap in graph[u].items():
                if cap > 0 and level[v] < 0:
                    level[v] = level[u] + 1
                    queue.append(v)
        return level if level[sink] >= 0 else None

    def dfs(u: int, limit: int, level: list[int], it: dict[int, list[int]]
            ) -> int:
        if u == sink:
            return limit
        while it[u]:
            v = it[u][-1]
            if graph[u][v] > 0 and level[v] == level[u] + 1:
                pushed = dfs(v, min(limit, graph[u][v]), level, it)
                if pushed:
                    graph[u][v] -= pushed
                    graph[v][u] += pushed
                    return pushed
            it[u].pop()
        return 0

    flow = 0
    while True:
        level = bfs()
        if level is None:
            break
        it = {u: list(graph[u].keys()) for u in range(nodes)}
        while True:
            pushed = dfs(source, 10 ** 9, level, it)
            if not pushed:
                break
            flow += pushed
    return flow == need


def coefficient_nonzero_backtracking(w: Perm, alpha: Sequence[int]) -> bool:
    """Column-filling oracle for the same feasibility question."""
    n = max(len(w), len(alpha), 1)
    alpha = list(alpha) + [0] * (n - len(alpha))
    if sum(alpha) != perm.length(w):
        return False
    cols = column_sets(perm.rothe_diagram(w), n)
    remaining = list(alpha)

    def fill(j: int) -> bool:
        if j == n:
            return all(r == 0 for r in remaining)
        col = sorted(cols[j])
        if not col:
            return fill(j + 1)

        def choose(idx: int, used: set[int]) -> bool:
            if idx == len(col):
                return fill(j + 1)
            row = col[idx]
            for v in range(1, row + 1):
                if v in used or remaining[v - 1] == 0:
                    continue
                remaining[v - 1] -= 1
                if choose(idx + 1, used | {v}):
                    remaining[v - 1] += 1
                    return True
                remaining[v - 1] += 1
            return False

        return choose(0, set())

    return fill(0)


def zero_one(w: Perm) -> bool:
    """All coefficients in {0, 1}, by avoidance of the twelve patterns."""
    return perm.avoids(w, *[tuple(p) for p in ZERO_ONE_PATTERNS])


def zero_one_direct(w: Perm) -> bool:
    return all(c in (0, 1) for c in schub.schubert(w).terms.values())
