"""Dot arrays in [n]^d: rankability, redundancy and covering, the
antichain/downsizing generation algorithm for permutation arrays,
transverse arrays, and the multi-flag rank-table recurrence.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from . import perm
from .perm import Perm

Dot = tuple[int, ...]


@dataclass(frozen=True)
class DotArray:
    n: int
    d: int
    dots: frozenset[Dot]

    @staticmethod
    def of(n: int, d: int, dots: Iterable[Sequence[int]]) -> "DotArray":
        ds = frozenset(tuple(int(x) for x in dot) for dot in dots)
        for dot in ds:
            if len(dot) != d or not all(1 <= x <= n for x in dot):
                raise ValueError(f"dot {dot} outside [{n}]^{d}")
        return DotArray(n, d, ds)

    def principal(self, y: Dot) -> frozenset[Dot]:
        """P[y]: dots dominated by y coordinatewise."""
        return frozenset(x for x in self.dots
                         if all(a <= b for a, b in zip(x, y)))

    def number_array(self) -> dict[tuple[int, int], int]:
        """d = 3 display: (i, j) -> k for each dot (i, j, k)."""
        if self.d != 3:
            raise ValueError("number arrays are for d = 3")
        out: dict[tuple[int, int], int] = {}
        for (i, j, k) in self.dots:
            if (i, j) in out:
                raise ValueError("two dots in one column of the display")
            out[(i, j)] = k
        return out

    def ascii(self) -> str:
        if self.d == 2:
            return "\n".join(
                "".join("*" if (i, j) in self.dots else "."
                        for j in range(1, self.n + 1))
                for i in range(1, self.n + 1))
        if self.d == 3:
            na = self.number_array()
            return "\n".join(
                "".join(str(na.get((i, j), ".")) for j in range(1, self.n + 1))
                for i in range(1, self.n + 1))
        return "\n".join(",".join(str(x) for x in dot)
                         for dot in sorted(self.dots))

    def to_json_dict(self) -> dict:
        return {"n": self.n, "d": self.d,
                "dots": [list(dot) for dot in sorted(self.dots)]}


def ranks_of(dots: Iterable[Dot], d: int) -> list[int]:
    """Per-axis counts of occupied values."""
    vals = [set() for _ in range(d)]
    for dot in dots:
        for j, x in enumerate(dot):
            vals[j].add(x)
    return [len(v) for v in vals]


def rank_of(P: DotArray, y: Dot) -> int | None:
    """Common axis rank of P[y], or None when not rankable."""
    sub = P.principal(y)
    if not sub:
        return 0
    rs = ranks_of(sub, P.d)
    return rs[0] if len(set(rs)) == 1 else None


def is_rankable(P: DotArray) -> bool:
    return len(set(ranks_of(P.dots, P.d))) <= 1


def is_totally_rankable(P: DotArray) -> bool:
    return all(rank_of(P, y) is not None
               for y in itertools.product(range(1, P.n + 1), repeat=P.d))


def position_status(P: DotArray, y: Dot) -> str:
    """"plain", "redundant", or "covered" per the maximal witness set."""
    witnesses = [x for x in P.dots if x != y
                 and all(a <= b for a, b in zip(x, y))
                 and any(a == b for a, b in zip(x, y))]
    if len(witnesses) < 2:
        return "plain"
    join = tuple(max(x[j] for x in witnesses) for j in range(P.d))
    if join != tuple(y):
        return "plain"
    if all(any(x[j] < y[j] for x in witnesses) for j in range(P.d)):
        return "covered"
    return "redundant"


def redundant_positions(P: DotArray) -> set[Dot]:
    return {y for y in itertools.product(range(1, P.n + 1), repeat=P.d)
            if position_status(P, y) != "plain"}


def covered_positions(dots: frozenset[Dot], n: int, d: int) -> set[Dot]:
    A = DotArray(n, d, dots)
    return {y for y in itertools.product(range(1, n + 1), repeat=d)
            if position_status(A, y) == "covered"}


def is_permutation_array(P: DotArray) -> bool:
    """Totally rankable of rank n with no redundant dots."""
    if rank_of(P, (P.n,) * P.d) != P.n:
        return False
    if not is_totally_rankable(P):
        return False
    return all(position_status(P, dot) == "plain" for dot in P.dots)


def antichains(dots: frozenset[Dot]) -> Iterator[frozenset[Dot]]:
    """Nonempty antichains under dominance order, lexicographic growth."""
    items = sorted(dots)

    def dominates(x: Dot, y: Dot) -> bool:
        return all(a >= b for a, b in zip(x, y)) or \
            all(a <= b for a, b in zip(x, y))

    def grow(start: int, chosen: list[Dot]) -> Iterator[frozenset[Dot]]:
        for k in range(start, len(items)):
            x = items[k]
            if any(dominates(x, c) for c in chosen):
                continue
            chosen.append(x)
            yield frozenset(chosen)
            yield from grow(k + 1, chosen)
            chosen.pop()

    yield from grow(0, [])


def downsize(A: frozenset[Dot], P: DotArray) -> DotArray:
    """Remove the antichain, add the positions it covers, then delete
    dots sitting at redundant positions (a single pass)."""
    q1 = P.dots - A
    q2 = q1 | covered_positions(A, P.n, P.d)
    Q2 = DotArray(P.n, P.d, q2)
    redundant = {y for y in q2 if position_status(Q2, y) != "plain"}
    return DotArray(P.n, P.d, q2 - redundant)


def downsize_successful(A: frozenset[Dot], P: DotArray,
                        prev_rank: int) -> DotArray | None:
    Q = downsize(A, P)
    if not is_totally_rankable(Q):
        return None
    if rank_of(Q, (Q.n,) * Q.d) != prev_rank - 1:
        return None
    return Q


def el_generate(n: int, d: int, roots: Iterable[DotArray] | None = None,
                max_arrays: int | None = 200000) -> list[DotArray]:
    """All permutation arrays in [n]^d by the antichain recursion.

    Each array in [n]^d comes from a unique array in [n]^{d-1} and a
    unique sequence of nonempty antichains, so no deduplication is done.
    """
    if n < 1 or d < 1:
        raise ValueError("n and d must be positive")
    if d == 1:
        return [DotArray.of(n, 1, [(i,) for i in range(1, n + 1)])]
    if roots is None:
        roots = el_generate(n, d - 1, max_arrays=max_arrays)
    out: list[DotArray] = []

    def descend(chain: list[frozenset[Dot]], current: DotArray,
                rank: int) -> None:
        if max_arrays is not None and len(out) > max_arrays:
            raise ResourceWarning("permutation array bound exceeded")
        if rank == 1:
            layers = chain + [current.dots]
            dots = [x + (idx,) for idx, layer in
                    enumerate(reversed(layers), start=1) for x in layer]
            out.append(DotArray.of(n, d, dots))
            return
        for A in antichains(current.dots):
            Q = downsize_successful(A, current, rank)
            if Q is not None:
                descend(chain + [A], Q, rank - 1)

    for root in roots:
        descend([], root, n)
    return out


def transverse(n: int, d: int) -> DotArray:
    """Dots with coordinate sum (d-1) n + 1: the generic relative
    position of d flags."""
    if d < 2:
        raise ValueError("transverse arrays need d >= 2")
    target = (d - 1) * n + 1
    dots = [x for x in itertools.product(range(1, n + 1), repeat=d)
            if sum(x) == target]
    return DotArray.of(n, d, dots)


def transverse_rank(n: int, d: int, x: Dot) -> int:
    return max(0, n - sum(n - xi for xi in x))


def schubert_problem_table(ws: Sequence[Perm], n: int
                           ) -> dict[Dot, int]:
    """The (d+1)-dimensional rank table of a zero-dimensional problem.

    Keys are (x_1, ..., x_d, j); the recurrence takes the max of the
    subspace-intersection bound and the previous-level value, with
    single-flag slices read off permutation rank tables.
    """
    d = len(ws)
    total = sum(perm.coinv(w, n) for w in ws)
    if total != n * (n - 1) // 2:
        raise ValueError(
            f"codimensions sum to {total}, expected {n * (n - 1) // 2}")
    tables = []
    for w in ws:
        ww = perm.pad(w, n)
        tables.append(tuple(
            tuple(sum(1 for h in range(j + 1) if ww[h] <= i)
                  for j in range(n)) for i in range(1, n + 1)))

    cache: dict[tuple[tuple[int, ...], int], int] = {}

    def dval(xs: tuple[int, ...], j: int) -> int:
        support = tuple(a for a, x in enumerate(xs) if x < n)
        if j == 0:
            return 0
        if not support:
            return j
        if len(support) == 1:
            a = support[0]
            return tables[a][xs[a] - 1][j - 1]
        key = (xs, j)
        hit = cache.get(key)
        if hit is not None:
            return hit
        a = support[0]
        first = tuple(xs[t] if t == a else n for t in range(d))
        rest = tuple(n if t == a else xs[t] for t in range(d))
        val = max(dval(first, j) + dval(rest, j) - j, dval(xs, j - 1))
        cache[key] = val
        return val

    out = {}
    for xs in itertools.product(range(1, n + 1), repeat=d):
        for j in range(0, n + 1):
            out[xs + (j,)] = dval(xs, j)
    return out
