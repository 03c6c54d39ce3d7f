"""Stanley symmetric functions as finite Schur expansions, transition
trees, Edelman-Greene insertion, and Littlewood-Richardson coefficients
computed through the transition recurrence.
"""
from __future__ import annotations

import threading
from math import factorial
from typing import Iterator, Sequence

from . import perm, schub
from .perm import Perm
from .poly import IntPolynomial

Partition = tuple[int, ...]

_stanley_cache: dict[Perm, "SchurExpansion"] = {}
_cache_lock = threading.Lock()


def normalize_partition(parts: Sequence[int]) -> Partition:
    ps = [p for p in parts if p]
    if any(p < 0 for p in ps) or any(ps[i] < ps[i + 1]
                                     for i in range(len(ps) - 1)):
        raise ValueError(f"not a partition: {parts}")
    return tuple(ps)


class SchurExpansion(dict):
    """Map partition -> integer coefficient, zero values dropped."""

    def __init__(self, terms=None):
        super().__init__()
        if terms:
            for lam, c in dict(terms).items():
                if c:
                    self[normalize_partition(lam)] = c

    def __add__(self, other: "SchurExpansion") -> "SchurExpansion":
        out = dict(self)
        for lam, c in other.items():
            out[lam] = out.get(lam, 0) + c
        return SchurExpansion(out)

    def sorted_items(self) -> list[tuple[Partition, int]]:
        return sorted(self.items(), key=lambda kv: (sum(kv[0]), kv[0]))

    def to_json_dict(self) -> dict:
        return {"basis": "schur",
                "terms": [{"shape": list(lam), "coeff": str(c)}
                          for lam, c in self.sorted_items()]}

    def __str__(self) -> str:
        if not self:
            return "0"
        parts = []
        for lam, c in self.sorted_items():
            body = "s(" + ",".join(str(p) for p in lam) + ")"
            if abs(c) != 1:
                body = f"{abs(c)}*{body}"
            parts.append(("- " if c < 0 else "+ ") + body)
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]


def is_grassmannian(w: Perm) -> bool:
    return len(perm.descents(w)) <= 1


def shape_of(w: Perm) -> Partition:
    """Code sorted into weakly decreasing order."""
    return tuple(sorted(perm.lehmer_code(w), reverse=True))


def grassmannian_perm(lam: Sequence[int], k: int) -> Perm:
    """The unique k-Grassmannian permutation with the given shape."""
    lam = normalize_partition(lam)
    if len(lam) > k:
        raise ValueError(f"{lam} has more than {k} parts")
    padded = tuple(lam) + (0,) * (k - len(lam))
    head = [i + padded[k - i] for i in range(1, k + 1)]
    rest = [v for v in range(1, max(head, default=0) + 1) if v not in head]
    return perm.trim(tuple(head) + tuple(rest))


def transition_set(w: Perm) -> set[Perm]:
    """{v t_{ir} : i < r, same length as w} for v = w t_{rs}."""
    if perm.length(w) == 0:
        raise ValueError("identity has no transition set")
    _, _, ups = schub.transition_terms(w)
    return set(ups)


def stanley(w: Perm) -> SchurExpansion:
    """Schur expansion through the transition tree.

    Grassmannian leaves contribute single Schur functions; an empty
    transition set is escaped by shifting with a leading fixed point.
    """
    hit = _stanley_cache.get(w)
    if hit is not None:
        return hit
    if is_grassmannian(w):
        lam = shape_of(w)
        result = SchurExpansion({lam: 1} if lam else {(): 1})
    else:
        ts = transition_set(w)
        if not ts:
            ts = transition_set(perm.shift(w))
        result = SchurExpansion()
        for u in ts:
            result = result + stanley(u)
    with _cache_lock:
        _stanley_cache[w] = result
    return result


def schur_polynomial(lam: Sequence[int], k: int) -> IntPolynomial:
    """s_lambda(x_1..x_k): the Schubert polynomial of the k-Grassmannian
    permutation of that shape, or 0 for more than k parts."""
    lam = normalize_partition(lam)
    if len(lam) > k:
        return IntPolynomial.zero()
    if not lam:
        return IntPolynomial.const(1)
    return schub.schubert(grassmannian_perm(lam, k))


def hook_lengths(lam: Partition) -> list[int]:
    conj = conjugate(lam)
    return [lam[i] - (j + 1) + conj[j] - (i + 1) + 1
            for i in range(len(lam)) for j in range(lam[i])]


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > j) for j in range(lam[0]))


def count_syt(lam: Partition) -> int:
    """Standard Young tableaux via the hook length formula."""
    n = sum(lam)
    denom = 1
    for h in hook_lengths(lam):
        denom *= h
    return factorial(n) // denom


def count_reduced_words(w: Perm) -> int:
    """Sum of a_lambda |SYT(lambda)| over the Schur expansion."""
    return sum(c * count_syt(lam) for lam, c in stanley(w).items())


def lr_via_transition(lam: Sequence[int], mu: Sequence[int]
                      ) -> SchurExpansion:
    """Schur expansion of s_lambda s_mu through the split permutation."""
    lam = normalize_partition(lam)
    mu = normalize_partition(mu)
    if not lam:
        return SchurExpansion({mu: 1} if mu else {(): 1})
    if not mu:
        return SchurExpansion({lam: 1})
    u = grassmannian_perm(lam, len(lam))
    v = grassmannian_perm(mu, len(mu))
    return stanley(perm.direct_sum(u, v))


def lr_coefficient(lam: Sequence[int], mu: Sequence[int],
                   nu: Sequence[int]) -> int:
    return lr_via_transition(lam, mu).get(normalize_partition(nu), 0)


def is_vexillary(w: Perm) -> bool:
    return perm.avoids(w, (2, 1, 4, 3))


# ---------------------------------------------------------------------------
# Edelman-Greene insertion

Tableau = tuple[tuple[int, ...], ...]


def eg_insert(a: Sequence[int]) -> tuple[Tableau, Tableau]:
    """Insertion and recording tableaux for a reduced word.

    Like row insertion, except that inserting i into a row that already
    contains i bumps i+1 to the next row with the row left unchanged.
    Letters enter from the right end of the word, so that reading the
    columns of P bottom to top, left to right, and reversing recovers a
    reduced word for the same permutation.
    """
    if not perm.is_reduced(a):
        raise ValueError(f"{a} is not reduced")
    p: list[list[int]] = []
    q: list[list[int]] = []
    for step, letter in enumerate(reversed(a), start=1):
        x = letter
        row = 0
        while True:
            if row == len(p):
                p.append([x])
                q.append([step])
                break
            current = p[row]
            bigger = [idx for idx, v in enumerate(current) if v > x]
            if not bigger:
                current.append(x)
                q[row].append(step)
                break
            idx = bigger[0]
            y = current[idx]
            if x in current and y == x + 1:
                x = x + 1  # skip this row unchanged
            else:
                current[idx] = x
                x = y
            row += 1
    return (tuple(tuple(r) for r in p), tuple(tuple(r) for r in q))


def eg_tableaux(w: Perm) -> set[Tableau]:
    """The insertion tableaux over all reduced words of w."""
    return {eg_insert(a)[0] for a in perm.all_reduced_words(w)}


def standard_tableaux(lam: Partition) -> Iterator[Tableau]:
    """All SYT of the given shape (desk scale)."""
    n = sum(lam)
    rows = len(lam)
    shape = list(lam)

    def build(k: int, filled: list[list[int]], heights: list[int]
              ) -> Iterator[Tableau]:
        if k > n:
            yield tuple(tuple(r) for r in filled)
            return
        for r in range(rows):
            c = heights[r]
            if c < shape[r] and (r == 0 or heights[r - 1] > c):
                filled[r].append(k)
                heights[r] += 1
                yield from build(k + 1, filled, heights)
                heights[r] -= 1
                filled[r].pop()

    yield from build(1, [[] for _ in range(rows)], [0] * rows)
