"""Bruhat order: comparisons, covers, intervals, Poincare polynomials."""
from __future__ import annotations

import threading
from dataclasses import dataclass

from . import perm
from .perm import Perm
from .poly import LaurentHalfQ

_leq_cache: dict[tuple[Perm, Perm], bool] = {}
_interval_cache: dict[tuple[Perm, Perm], "BruhatInterval"] = {}
_lower_cache: dict[Perm, frozenset[Perm]] = {}
_cache_lock = threading.Lock()


def bruhat_leq(v: Perm, w: Perm) -> bool:
    """Tableau criterion, checked only at descent rows of v.

    v <= w iff {v_1..v_j} is dominated entrywise (after sorting) by
    {w_1..w_j} whenever v_j > v_{j+1}.
    """
    key = (v, w)
    hit = _leq_cache.get(key)
    if hit is not None:
        return hit
    n = max(len(v), len(w))
    vv, ww = perm.pad(v, n), perm.pad(w, n)
    result = True
    for j in perm.descents(v):
        a = sorted(vv[:j])
        b = sorted(ww[:j])
        if any(x > y for x, y in zip(a, b)):
            result = False
            break
    with _cache_lock:
        _leq_cache[key] = result
    return result


def covers(v: Perm, w: Perm) -> bool:
    """True iff w covers v: w = v t_{ij} with one more inversion."""
    if perm.length(w) != perm.length(v) + 1:
        return False
    n = max(len(v), len(w))
    vv, ww = perm.pad(v, n), perm.pad(w, n)
    diff = [i for i in range(n) if vv[i] != ww[i]]
    if len(diff) != 2:
        return False
    i, j = diff
    return vv[i] == ww[j] and vv[j] == ww[i]


def lower_covers(w: Perm) -> list[Perm]:
    """All v covered by w (v = w t_{ij} with one fewer inversion)."""
    n = len(w)
    out = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if perm.act(w, i) > perm.act(w, j):
                v = perm.times_t(w, i, j)
                if perm.length(v) == perm.length(w) - 1:
                    out.append(v)
    return out


def upper_covers(w: Perm, n: int) -> list[Perm]:
    """All covers of w inside S_n."""
    out = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if perm.act(w, i) < perm.act(w, j):
                u = perm.times_t(w, i, j)
                if perm.length(u) == perm.length(w) + 1:
                    out.append(u)
    return out


def lower_interval_elements(w: Perm) -> frozenset[Perm]:
    """All v <= w, by BFS downward through transposition moves."""
    hit = _lower_cache.get(w)
    if hit is not None:
        return hit
    seen = {w}
    frontier = [w]
    while frontier:
        nxt = []
        for u in frontier:
            n = len(u)
            for i in range(1, n + 1):
                for j in range(i + 1, n + 1):
                    if u[i - 1] > u[j - 1]:
                        v = perm.times_t(u, i, j)
                        if v not in seen:
                            seen.add(v)
                            nxt.append(v)
        frontier = nxt
    result = frozenset(seen)
    with _cache_lock:
        _lower_cache[w] = result
    return result


@dataclass(frozen=True)
class BruhatInterval:
    bottom: Perm
    top: Perm
    elements: frozenset[Perm]
    cover_edges: frozenset[tuple[Perm, Perm]]

    def rank_sizes(self) -> list[int]:
        base = perm.length(self.bottom)
        top = perm.length(self.top)
        sizes = [0] * (top - base + 1)
        for v in self.elements:
            sizes[perm.length(v) - base] += 1
        return sizes

    def to_json_dict(self) -> dict:
        n = max(len(self.top), 1)
        nodes = sorted(self.elements, key=lambda v: (perm.length(v), v))
        return {
            "bottom": perm.pretty(self.bottom, n),
            "top": perm.pretty(self.top, n),
            "nodes": [{"perm": perm.pretty(v, n), "length": perm.length(v)}
                      for v in nodes],
            "edges": [{"from": perm.pretty(a, n), "to": perm.pretty(b, n)}
                      for a, b in sorted(self.cover_edges)],
        }


def interval(u: Perm, w: Perm) -> BruhatInterval:
    """The interval [u, w], with its cover edges."""
    if not bruhat_leq(u, w):
        raise ValueError(f"empty interval: {u} is not below {w}")
    key = (u, w)
    hit = _interval_cache.get(key)
    if hit is not None:
        return hit
    elements = {v for v in lower_interval_elements(w) if bruhat_leq(u, v)}
    edges = set()
    for v in elements:
        for c in lower_covers(v):
            if c in elements:
                edges.add((c, v))
    result = BruhatInterval(u, w, frozenset(elements), frozenset(edges))
    with _cache_lock:
        _interval_cache[key] = result
    return result


def poincare_polynomial(w: Perm) -> LaurentHalfQ:
    """P_w(t) = sum over v <= w of t^(length of v)."""
    coeffs: dict[int, int] = {}
    for v in lower_interval_elements(w):
        k = perm.length(v)
        coeffs[2 * k] = coeffs.get(2 * k, 0) + 1
    return LaurentHalfQ(coeffs)


def mobius(v: Perm, w: Perm) -> int:
    """Mobius function of the interval [v, w], computed recursively."""
    if v == w:
        return 1
    if not bruhat_leq(v, w):
        return 0
    elems = sorted(interval(v, w).elements, key=perm.length)
    mu = {v: 1}
    for z in elems[1:]:
        mu[z] = -sum(mu[u] for u in elems if u != z and bruhat_leq(u, z))
    return mu[w]
