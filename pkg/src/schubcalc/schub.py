"""Schubert and double Schubert polynomials, products, basis expansion.

The production algorithm is the transition recurrence on the lex largest
inversion; divided differences, pipe dreams, and bumpless pipe dreams are
kept as independent backends and cross-checked in the test suite.
"""
from __future__ import annotations

import json
import os
import threading
from typing import Iterator

from . import perm
from .perm import Perm
from .poly import IntPolynomial, e_poly, h_poly, x_vars, y_vars, det

_schubert_cache: dict[Perm, IntPolynomial] = {}
_cache_lock = threading.Lock()
_persist_path: str | None = None


def configure_cache(path: str | None) -> None:
    """Optional append-only on-disk record of computed polynomials."""
    global _persist_path
    _persist_path = path
    if path and os.path.exists(path):
        with open(path) as fh:
            for line in fh:
                line = line.strip()
                if not line:
                    continue
                rec = json.loads(line)
                w = perm.parse(rec["perm"])
                terms = {(tuple(t["x"]), ()): int(t["c"])
                         for t in rec["terms"]}
                _schubert_cache.setdefault(w, IntPolynomial(terms))


def _persist(w: Perm, f: IntPolynomial) -> None:
    if not _persist_path:
        return
    rec = {"perm": perm.pretty(w),
           "terms": [{"x": list(xe), "c": c}
                     for (xe, _), c in f.sorted_terms()]}
    with open(_persist_path, "a") as fh:
        fh.write(json.dumps(rec) + "\n")


def lex_largest_inversion(w: Perm) -> tuple[int, int]:
    """(r, s): r the last descent position, s the largest with w(r) > w(s)."""
    if perm.length(w) == 0:
        raise ValueError("identity has no inversions")
    r = max(perm.descents(w))
    n = len(w)
    s = max(j for j in range(r + 1, n + 1) if w[j - 1] < w[r - 1])
    return r, s


def transition_terms(w: Perm) -> tuple[int, Perm, list[Perm]]:
    """The data (r, v, [v t_{hr} ...]) of the transition recurrence."""
    r, s = lex_largest_inversion(w)
    v = perm.times_t(w, r, s)
    lw = perm.length(w)
    ups = [perm.times_t(v, h, r) for h in range(1, r)
           if perm.length(perm.times_t(v, h, r)) == lw]
    return r, v, ups


def schubert(w: Perm) -> IntPolynomial:
    """Schubert polynomial via the transition recurrence (memoized)."""
    hit = _schubert_cache.get(w)
    if hit is not None:
        return hit
    # iterative worklist to avoid deep recursion on long permutations
    stack = [w]
    while stack:
        u = stack[-1]
        if u in _schubert_cache:
            stack.pop()
            continue
        if perm.length(u) == 0:
            _schubert_cache[u] = IntPolynomial.const(1)
            stack.pop()
            continue
        r, v, ups = transition_terms(u)
        missing = [z for z in [v] + ups if z not in _schubert_cache]
        if missing:
            stack.extend(missing)
            continue
        f = IntPolynomial.x(r) * _schubert_cache[v]
        for z in ups:
            f = f + _schubert_cache[z]
        with _cache_lock:
            _schubert_cache[u] = f
        _persist(u, f)
        stack.pop()
    return _schubert_cache[w]


def schubert_via_dd(w: Perm, n: int) -> IntPolynomial:
    """Divided-difference backend, from the staircase monomial of S_n.

    Walk w0 = u_0 > u_0 s_{a_1} > ... down to w along any reduced word
    (a_1, ..., a_k) of w0 w, applying one divided difference per step.
    """
    if len(w) > n:
        raise ValueError(f"{w} is not in S_{n}")
    w0 = perm.longest(n)
    f = IntPolynomial.monomial([n - i for i in range(1, n)])
    for a in perm.reduced_word(perm.compose(w0, w)):
        f = f.divided_difference(a)
    return f


def double_schubert(w: Perm) -> IntPolynomial:
    """Sum over reduced pipe dreams of the products (x_i - y_j)."""
    from . import pipedream
    total = IntPolynomial.zero()
    for D in pipedream.enumerate_pipe_dreams(w):
        term = IntPolynomial.const(1)
        for (i, j) in sorted(D.crossings):
            term = term * (IntPolynomial.x(i) - IntPolynomial.y(j))
        total = total + term
    return total


class SchubertExpansion(dict):
    """Map Permutation -> integer coefficient, zero values dropped."""

    def __init__(self, terms=None):
        super().__init__()
        if terms:
            for w, c in dict(terms).items():
                if c:
                    self[w] = c

    def sorted_items(self) -> list[tuple[Perm, int]]:
        return sorted(self.items(), key=lambda kv: (perm.length(kv[0]), kv[0]))

    def to_json_dict(self) -> dict:
        return {"basis": "schubert",
                "terms": [{"perm": perm.pretty(w), "coeff": str(c)}
                          for w, c in self.sorted_items()]}

    def __str__(self) -> str:
        if not self:
            return "0"
        parts = []
        for w, c in self.sorted_items():
            body = f"S({perm.pretty(w)})"
            if abs(c) != 1:
                body = f"{abs(c)}*{body}"
            parts.append(("- " if c < 0 else "+ ") + body)
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]


def expand_in_schubert_basis(f: IntPolynomial) -> SchubertExpansion:
    """Peel leading terms: subtract coeff * S_{code^{-1}(leading)} until 0."""
    if not f.is_y_free():
        raise ValueError("expansion requires a y-free polynomial")
    out: dict[Perm, int] = {}
    g = f
    while g:
        alpha = g.leading_exponent_revlex()
        c = g.coeff(alpha)
        w = perm.code_inverse(alpha)
        out[w] = out.get(w, 0) + c
        g = g - schubert(w) * c
    return SchubertExpansion(out)


def monk_product(r: int, w: Perm) -> SchubertExpansion:
    """S_{s_r} * S_w = sum of S_{w t_{kl}} over covers with k <= r < l."""
    n = max(len(w), r) + 1
    out: dict[Perm, int] = {}
    lw = perm.length(w)
    for k in range(1, r + 1):
        for l in range(r + 1, n + 1):
            u = perm.times_t(perm.pad(w, n), k, l)
            u = perm.trim(u)
            if perm.length(u) == lw + 1:
                out[u] = 1
    return SchubertExpansion(out)


def one_row_perm(b: int, d: int) -> Perm:
    """r[b,d] = s_{b+d-1} ... s_{b+1} s_b, with S-polynomial h_d(x_1..x_b)."""
    return perm.from_word(tuple(range(b + d - 1, b - 1, -1)))


def one_column_perm(b: int, d: int) -> Perm:
    """c[b,d] = s_{b-d+1} ... s_{b-1} s_b, with S-polynomial e_d(x_1..x_b)."""
    if b < d:
        raise ValueError("column case needs b >= d")
    return perm.from_word(tuple(range(b - d + 1, b + 1)))


def pieri_product(kind: str, b: int, d: int, w: Perm) -> SchubertExpansion:
    """Multiplicity-free Pieri expansion of h_d (row) or e_d (column).

    Chains w -> w t_{k1 l1} -> ... of length d with every k_i <= b < l_i,
    increasing length at each step; the l's are distinct for the row kind
    and the k's are distinct for the column kind.
    """
    if kind not in ("row", "column"):
        raise ValueError(f"kind must be row or column, got {kind}")
    if d < 1:
        raise ValueError("d must be positive")
    if kind == "column" and b < d:
        raise ValueError("column kind requires b >= d")
    n = max(len(w), b) + d
    found: set[Perm] = set()

    def grow(u: Perm, used_k: frozenset[int], used_l: frozenset[int],
             steps: int) -> None:
        if steps == d:
            found.add(u)
            return
        lu = perm.length(u)
        for k in range(1, b + 1):
            if kind == "column" and k in used_k:
                continue
            for l in range(b + 1, n + 1):
                if kind == "row" and l in used_l:
                    continue
                u2 = perm.trim(perm.times_t(perm.pad(u, n), k, l))
                if perm.length(u2) == lu + 1:
                    grow(u2, used_k | {k}, used_l | {l}, steps + 1)

    grow(w, frozenset(), frozenset(), 0)
    return SchubertExpansion({u: 1 for u in found})


def multiply(u: Perm, v: Perm) -> SchubertExpansion:
    """Product of two Schubert polynomials in the Schubert basis."""
    return expand_in_schubert_basis(schubert(u) * schubert(v))


def structure_constant(u: Perm, v: Perm, w: Perm) -> int:
    """Coefficient of S_w in S_u S_v (zero unless lengths add up)."""
    if perm.length(u) + perm.length(v) != perm.length(w):
        return 0
    return multiply(u, v).get(w, 0)


def w_pqr(p: int, q: int, r: int) -> Perm:
    """The q-Grassmannian permutation whose transposed diagram is the
    rectangle [r+1,p] x [r+1,q]."""
    if not 0 <= r <= min(p, q):
        raise ValueError("need 0 <= r <= min(p, q)")
    one_line = list(range(1, r + 1)) + list(range(p + 1, p + q - r + 1)) + \
        list(range(r + 1, p + 1))
    return perm.make(one_line + list(range(p + q - r + 1,
                                           len(one_line) + 1)))


def double_e(d: int, xs: list[IntPolynomial], ys: list[IntPolynomial]
             ) -> IntPolynomial:
    """e_d(X;Y) = sum_i (-1)^(d-i) e_i(X) h_{d-i}(Y)."""
    total = IntPolynomial.zero()
    for i in range(d + 1):
        sign = 1 if (d - i) % 2 == 0 else -1
        total = total + sign * (e_poly(i, xs) * h_poly(d - i, ys))
    return total


def thom_porteous_check(p: int, q: int, r: int) -> bool:
    """Check S_{w(p,q,r)}(X;Y) against the determinant of double
    elementary symmetric functions of sizes q-r+j-i."""
    w = w_pqr(p, q, r)
    lhs = double_schubert(w)
    xs, ys = x_vars(q), y_vars(p)
    m = p - r
    mat = [[double_e(q - r + j - i, xs, ys) for j in range(1, m + 1)]
           for i in range(1, m + 1)]
    return lhs == det(mat)


def all_schubert(n: int) -> Iterator[tuple[Perm, IntPolynomial]]:
    for w in perm.all_perms(n):
        yield w, schubert(w)
