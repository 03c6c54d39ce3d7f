"""Exact linear algebra for flags: canonical matrices, flag minors,
Plucker coordinates and relations, Sylvester's identity, matrix Schubert
membership, and Fulton's essential minors.

Matrices are tuples of row tuples over Fraction.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from . import perm
from .perm import Perm

Matrix = tuple[tuple[Fraction, ...], ...]


def matrix(rows: Iterable[Iterable]) -> Matrix:
    out = tuple(tuple(Fraction(x) for x in row) for row in rows)
    if out and any(len(r) != len(out[0]) for r in out):
        raise ValueError("ragged matrix")
    return out


def parse_csv(text: str) -> Matrix:
    """Rows of comma-separated rationals like 2, -1/3, 0."""
    rows = []
    for line in text.strip().splitlines():
        line = line.strip()
        if line:
            rows.append([Fraction(tok.strip()) for tok in line.split(",")])
    return matrix(rows)


def identity_matrix(n: int) -> Matrix:
    return tuple(tuple(Fraction(int(i == j)) for j in range(n))
                 for i in range(n))


def perm_matrix(w: Perm, n: int | None = None) -> Matrix:
    """M_w with a 1 in position (w_j, j) for each column j."""
    if n is None:
        n = max(len(w), 1)
    ww = perm.pad(w, n)
    return tuple(tuple(Fraction(int(ww[j] == i + 1)) for j in range(n))
                 for i in range(n))


def det(m: Matrix) -> Fraction:
    """Fraction-free-ish Gaussian elimination determinant."""
    n = len(m)
    if n == 0:
        return Fraction(1)
    a = [list(row) for row in m]
    sign = 1
    out = Fraction(1)
    for c in range(n):
        pivot = next((r for r in range(c, n) if a[r][c]), None)
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            a[c], a[pivot] = a[pivot], a[c]
            sign = -sign
        out *= a[c][c]
        inv = 1 / a[c][c]
        for r in range(c + 1, n):
            if a[r][c]:
                f = a[r][c] * inv
                for cc in range(c, n):
                    a[r][cc] -= f * a[c][cc]
    return sign * out


def rank(m: Matrix) -> int:
    rows = [list(r) for r in m]
    nr, nc = len(rows), len(rows[0]) if rows else 0
    rk = 0
    col = 0
    for col in range(nc):
        pivot = next((r for r in range(rk, nr) if rows[r][col]), None)
        if pivot is None:
            continue
        rows[rk], rows[pivot] = rows[pivot], rows[rk]
        inv = 1 / rows[rk][col]
        for r in range(nr):
            if r != rk and rows[r][col]:
                f = rows[r][col] * inv
                for cc in range(col, nc):
                    rows[r][cc] -= f * rows[rk][cc]
        rk += 1
    return rk


def submatrix(m: Matrix, rows: Sequence[int], cols: Sequence[int]) -> Matrix:
    return tuple(tuple(m[i - 1][j - 1] for j in cols) for i in rows)


def minor(m: Matrix, rows: Sequence[int], cols: Sequence[int]) -> Fraction:
    return det(submatrix(m, rows, cols))


def flag_minor(m: Matrix, I: Sequence[int]) -> Fraction:
    """Delta_I: rows I against the first |I| columns."""
    return minor(m, I, range(1, len(I) + 1))


def canonical_matrix(m: Matrix) -> Matrix:
    """Column reduction: pivot 1s with zeros below and to the right.

    Invariant under right multiplication by invertible upper triangular
    matrices, so canonical forms classify flags.
    """
    n = len(m)
    if det(m) == 0:
        raise ValueError("matrix is singular")
    cols = [[m[i][j] for i in range(n)] for j in range(n)]
    used_pivots: list[int] = []
    for j in range(n):
        col = cols[j]
        pivot = max(i for i in range(n) if col[i] != 0)
        scale = 1 / col[pivot]
        cols[j] = [x * scale for x in col]
        for jj in range(j + 1, n):
            f = cols[jj][pivot]
            if f:
                cols[jj] = [a - f * b for a, b in zip(cols[jj], cols[j])]
        used_pivots.append(pivot)
    return tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))


def plucker(m: Matrix) -> list[list[Fraction]]:
    """For k = 1..n-1, all flag minors over k-subsets in lex order.

    Computed on the canonical matrix so the projective coordinates come
    out in a canonical scaling.
    """
    n = len(m)
    c = canonical_matrix(m)
    out = []
    for k in range(1, n):
        out.append([flag_minor(c, I)
                    for I in combinations(range(1, n + 1), k)])
    return out


def position_of(m: Matrix) -> Perm:
    """The permutation whose NW rank table matches dim(E_i ^ F_j).

    dim(E_i ^ F_j) = j - rank of the bottom (n - i) rows of the first j
    columns.
    """
    n = len(m)
    if det(m) == 0:
        raise ValueError("matrix is singular")
    table = []
    for i in range(1, n + 1):
        row = []
        for j in range(1, n + 1):
            if i == n:
                row.append(j)
            else:
                sub = submatrix(m, range(i + 1, n + 1), range(1, j + 1))
                row.append(j - rank(sub))
        table.append(row)
    return perm.from_rank_table(table)


def sw_rank_table(m: Matrix) -> tuple[tuple[int, ...], ...]:
    n = len(m)
    return tuple(
        tuple(rank(submatrix(m, range(i, n + 1), range(1, j + 1)))
              for j in range(1, n + 1))
        for i in range(1, n + 1))


def matrix_schubert_member(a: Matrix, w: Perm) -> bool:
    """Entrywise domination of southwest rank tables."""
    n = len(a)
    ww = perm.pad(w, n)
    if len(ww) != n:
        raise ValueError(f"matrix size {n} too small for {w}")
    wt = tuple(tuple(sum(1 for h in range(j + 1) if ww[h] >= i + 1)
                     for j in range(n)) for i in range(n))
    at = sw_rank_table(a)
    return all(at[i][j] <= wt[i][j] for i in range(n) for j in range(n))


@dataclass(frozen=True)
class MinorSpec:
    rows: tuple[int, ...]
    cols: tuple[int, ...]

    def __str__(self) -> str:
        r = ",".join(str(i) for i in self.rows)
        c = ",".join(str(j) for j in self.cols)
        return f"rows{{{r}}} cols{{{c}}}"


def essential_set(w: Perm, n: int | None = None) -> list[tuple[int, int]]:
    """Northeasternmost cells of the southwest diagram built on the dots
    (w(k), k): cells not weakly right of or above a dot."""
    if n is None:
        n = max(len(w), 1)
    ww = perm.pad(w, n)
    dots = {(ww[k - 1], k) for k in range(1, n + 1)}

    def in_dsw(i: int, j: int) -> bool:
        if not (1 <= i <= n and 1 <= j <= n):
            return False
        for (a, b) in dots:
            if a == i and b <= j:
                return False
            if b == j and a >= i:
                return False
        return True

    return sorted((i, j) for i in range(1, n + 1) for j in range(1, n + 1)
                  if in_dsw(i, j)
                  and not in_dsw(i - 1, j) and not in_dsw(i, j + 1))


def essential_minors(w: Perm, n: int | None = None
                     ) -> tuple[list[tuple[int, int]],
                                list[tuple[MinorSpec, int]]]:
    """Essential cells plus, for each, the vanishing minors: all size
    rk_SW(w)[i,j] + 1 choices of rows >= i and cols <= j."""
    if n is None:
        n = max(len(w), 1)
    ww = perm.pad(w, n)
    cells = essential_set(w, n)
    specs: list[tuple[MinorSpec, int]] = []
    for (i, j) in cells:
        r = sum(1 for k in range(1, j + 1) if ww[k - 1] >= i)
        size = r + 1
        for rows in combinations(range(i, n + 1), size):
            for cols in combinations(range(1, j + 1), size):
                specs.append((MinorSpec(rows, cols), r))
    return cells, specs


def sylvester_verify(a: Matrix, b: Matrix, t_set: Sequence[int]) -> bool:
    """det(A)det(B) = sum over |T|-subsets S of det(A_S)det(B_S), where
    A_S swaps in B's T-columns at positions S and vice versa."""
    n = len(a)
    if len(b) != n:
        raise ValueError("matrices must have equal sizes")
    t_set = sorted(t_set)
    r = len(t_set)
    if not 0 <= r < n:
        raise ValueError("T must be a proper subset of the columns")
    lhs = det(a) * det(b)
    rhs = Fraction(0)
    for s_set in combinations(range(1, n + 1), r):
        a_cols = [[a[i][j - 1] for i in range(n)] for j in range(1, n + 1)]
        b_cols = [[b[i][j - 1] for i in range(n)] for j in range(1, n + 1)]
        a_new = [col[:] for col in a_cols]
        b_new = [col[:] for col in b_cols]
        for s, t in zip(s_set, t_set):
            a_new[s - 1] = b_cols[t - 1][:]
            b_new[t - 1] = a_cols[s - 1][:]
        det_a = det(tuple(tuple(a_new[j][i] for j in range(n))
                          for i in range(n)))
        det_b = det(tuple(tuple(b_new[j][i] for j in range(n))
                          for i in range(n)))
        rhs += det_a * det_b
    return lhs == rhs


def random_invertible(n: int, prime: int, rng) -> Matrix:
    """Random matrix over a prime field lifted to the rationals."""
    while True:
        m = matrix([[rng.randrange(prime) for _ in range(n)]
                    for _ in range(n)])
        if det(m) != 0:
            return m
