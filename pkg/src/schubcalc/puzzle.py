"""Triangular puzzles for Grassmannian structure constants, plus Horn
inequality generation and membership.

Edge labels are 0, 1, and 2 (the composite "10" label).  The boundary of
a size-n puzzle reads the binary words of three k-subsets: the left side
bottom-to-top, the right side top-to-bottom, and the bottom left-to-right,
an orientation pinned by the two-puzzle count for c with both slanted
sides 0101.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

TEN = 2  # the "10" edge label

# upward triangle labelings (south, northeast, northwest)
UP_TILES = [(0, 0, 0), (1, 1, 1), (0, 1, TEN), (TEN, 0, 1), (1, TEN, 0)]
# downward triangle labelings (north, southwest, southeast)
DOWN_TILES = [(0, 0, 0), (1, 1, 1), (0, 1, TEN), (TEN, 0, 1), (1, TEN, 0)]

Partition = tuple[int, ...]


def subset_to_word(I: Iterable[int], n: int) -> tuple[int, ...]:
    """b(I): 0 exactly at the positions in I."""
    s = set(I)
    if not s <= set(range(1, n + 1)):
        raise ValueError(f"subset {sorted(s)} not inside [{n}]")
    return tuple(0 if i in s else 1 for i in range(1, n + 1))


def word_to_subset(word: Sequence[int]) -> tuple[int, ...]:
    return tuple(i for i, b in enumerate(word, start=1) if b == 0)


def subset_to_partition(I: Sequence[int]) -> Partition:
    """lambda(I): sorted descending minus the staircase k, k-1, ..., 1."""
    vals = sorted(I, reverse=True)
    k = len(vals)
    lam = tuple(vals[t] - (k - t) for t in range(k))
    return tuple(p for p in lam if p)


def partition_to_subset(lam: Sequence[int], k: int, n: int
                        ) -> tuple[int, ...]:
    lam = tuple(lam) + (0,) * (k - len(lam))
    if len(lam) > k or (lam and lam[0] > n - k):
        raise ValueError(f"{lam} does not fit in a {k} x {n - k} box")
    vals = sorted(lam[t] + (k - t) for t in range(k))
    return tuple(vals)


@dataclass(frozen=True)
class Puzzle:
    """A filled size-n puzzle: up[r][c] and down[r][c] triangle labels."""
    n: int
    up: tuple[tuple[tuple[int, int, int], ...], ...]
    down: tuple[tuple[tuple[int, int, int], ...], ...]


def fill_puzzles(bI: Sequence[int], bJ: Sequence[int], bK: Sequence[int],
                 collect: bool = False) -> tuple[int, list[Puzzle]]:
    """Count (and optionally collect) fillings with the given boundary.

    bI labels the northwest side read bottom-to-top, bJ the northeast side
    top-to-bottom, bK the south side left-to-right.
    """
    n = len(bI)
    if len(bJ) != n or len(bK) != n:
        return 0, []
    if (bI.count(0), bJ.count(0)) != (bK.count(0), bK.count(0)):
        return 0, []

    count = 0
    found: list[Puzzle] = []
    up_rows: list[list[tuple[int, int, int]]] = [[] for _ in range(n)]
    down_rows: list[list[tuple[int, int, int]]] = [[] for _ in range(n)]

    def place(r: int, c: int) -> None:
        """Fill row r cells left to right: up(r,1), down(r,1), ..., up(r,r).

        up(r,i).NW is shared with down(r,i-1).SE (or the left boundary),
        up(r,i).NE with down(r,i).SW (or the right boundary), and
        down(r,i).N with up(r-1,i).S.
        """
        nonlocal count
        if c > 2 * r - 1:
            if r == n:
                count += 1
                if collect:
                    found.append(Puzzle(
                        n,
                        tuple(tuple(row) for row in up_rows),
                        tuple(tuple(row) for row in down_rows)))
                return
            place(r + 1, 1)
            return
        if c % 2 == 1:  # upward triangle up(r, (c+1)//2)
            idx = (c + 1) // 2
            nw_need = bI[n - r] if idx == 1 else down_rows[r - 1][idx - 2][2]
            for (s, ne, nw) in UP_TILES:
                if nw != nw_need:
                    continue
                if idx == r and ne != bJ[r - 1]:
                    continue
                if r == n and s != bK[idx - 1]:
                    continue
                up_rows[r - 1].append((s, ne, nw))
                place(r, c + 1)
                up_rows[r - 1].pop()
            return
        idx = c // 2  # downward triangle down(r, c//2)
        for (no, sw, se) in DOWN_TILES:
            if no != up_rows[r - 2][idx - 1][0]:
                continue
            if sw != up_rows[r - 1][idx - 1][1]:
                continue
            down_rows[r - 1].append((no, sw, se))
            place(r, c + 1)
            down_rows[r - 1].pop()

    place(1, 1)
    return count, found


def count_puzzles(bI: Sequence[int], bJ: Sequence[int],
                  bK: Sequence[int]) -> int:
    """Number of puzzles with the given boundary words; equals the
    Littlewood-Richardson coefficient c_{I J}^{K}."""
    count, _ = fill_puzzles(bI, bJ, bK)
    return count


def lr_coefficient_subsets(I: Sequence[int], J: Sequence[int],
                           K: Sequence[int], n: int) -> int:
    return count_puzzles(subset_to_word(I, n), subset_to_word(J, n),
                         subset_to_word(K, n))


# ---------------------------------------------------------------------------
# Horn inequalities


@dataclass(frozen=True)
class HornFacet:
    k: int
    I: tuple[int, ...]
    J: tuple[int, ...]
    K: tuple[int, ...]

    def __str__(self) -> str:
        fmt = lambda S: "{" + ",".join(str(i) for i in S) + "}"
        return (f"sum a[i], i in {fmt(self.I)}  +  sum b[j], j in "
                f"{fmt(self.J)}  >=  sum c[k], k in {fmt(self.K)}")


@dataclass(frozen=True)
class HornSystem:
    n: int
    facets: tuple[HornFacet, ...]

    def to_json_dict(self) -> dict:
        return {"n": self.n,
                "trace": "sum(alpha) + sum(beta) == sum(gamma)",
                "facets": [{"k": f.k, "I": list(f.I), "J": list(f.J),
                            "K": list(f.K)} for f in self.facets]}


def horn_facets(n: int, parallel: bool = False) -> HornSystem:
    """All triples (I, J, K) of k-subsets with puzzle count exactly 1,
    over k = 1..n-1, plus the trace equality."""
    if n < 1:
        raise ValueError("n must be positive")
    triples = []
    for k in range(1, n):
        subs = list(combinations(range(1, n + 1), k))
        jobs = [(I, J, K, n) for I in subs for J in subs for K in subs]
        if parallel:
            import concurrent.futures
            with concurrent.futures.ProcessPoolExecutor() as pool:
                results = list(pool.map(_facet_worker, jobs, chunksize=64))
        else:
            results = [_facet_worker(job) for job in jobs]
        for (I, J, K, _), c in zip(jobs, results):
            if c == 1:
                triples.append(HornFacet(k, I, J, K))
    return HornSystem(n, tuple(triples))


def _facet_worker(job) -> int:
    I, J, K, n = job
    return lr_coefficient_subsets(I, J, K, n)


def horn_member(alpha: Sequence, beta: Sequence, gamma: Sequence,
                system: HornSystem | None = None) -> bool:
    """Eigenvalue-triple membership: trace equality plus facet checks."""
    n = len(alpha)
    if len(beta) != n or len(gamma) != n:
        raise ValueError("sequences must have equal lengths")
    seqs = [[Fraction(x) for x in s] for s in (alpha, beta, gamma)]
    for s in seqs:
        if any(s[i] < s[i + 1] for i in range(n - 1)):
            raise ValueError("sequences must be weakly decreasing")
    a, b, c = seqs
    if sum(a) + sum(b) != sum(c):
        return False
    if system is None or system.n != n:
        system = horn_facets(n)
    for f in system.facets:
        lhs = sum(a[i - 1] for i in f.I) + sum(b[j - 1] for j in f.J)
        rhs = sum(c[k - 1] for k in f.K)
        if lhs < rhs:
            return False
    return True
