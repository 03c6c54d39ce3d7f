"""Smoothness and singular-locus computations, Poincare-polynomial
criteria, the double-Schubert smoothness test, and isomorphism-class
counting via Cartan equivalence.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import comb

from . import bruhat, perm, schub
from .perm import Perm
from .poly import IntPolynomial

PATTERN_3412 = (3, 4, 1, 2)
PATTERN_4231 = (4, 2, 3, 1)


def tangent_dimension(v: Perm, w: Perm) -> int:
    """#{(i < j) : v t_{ij} <= w}, the tangent space dimension at v.

    Inversions of v contribute automatically (v t_{ij} < v <= w), so only
    non-inversions need a Bruhat test.
    """
    if not bruhat.bruhat_leq(v, w):
        raise ValueError(f"{v} is not below {w}")
    n = max(len(v), len(w), 1)
    vv = perm.pad(v, n)
    count = perm.length(v)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if vv[i - 1] < vv[j - 1] and \
                    bruhat.bruhat_leq(perm.times_t(v, i, j), w):
                count += 1
    return count


def is_smooth(w: Perm) -> bool:
    """Avoidance of 3412 and 4231."""
    return perm.avoids(w, PATTERN_3412, PATTERN_4231)


@dataclass(frozen=True)
class SingularLocusReport:
    w: Perm
    maximal_singular: frozenset[Perm]

    @property
    def smooth(self) -> bool:
        return not self.maximal_singular

    def to_json_dict(self) -> dict:
        return {"perm": perm.pretty(self.w),
                "smooth": self.smooth,
                "maximal_singular": [perm.pretty(v) for v in
                                     sorted(self.maximal_singular)]}


def singular_locus(w: Perm) -> SingularLocusReport:
    """Bruhat-maximal v <= w where the tangent dimension exceeds l(w)."""
    lw = perm.length(w)
    singular: list[Perm] = []
    elements = sorted(bruhat.lower_interval_elements(w),
                      key=perm.length, reverse=True)
    maximal: list[Perm] = []
    for v in elements:
        if any(bruhat.bruhat_leq(v, m) for m in maximal):
            continue
        if tangent_dimension(v, w) > lw:
            maximal.append(v)
    return SingularLocusReport(w, frozenset(maximal))


def max_singular_cycle_form(w: Perm, v: Perm) -> bool:
    """Cross-check for the structure of a maximal singular stratum.

    Each maximal singular v arises as w times a single cycle
    (a_1, ..., a_m, b_k, ..., b_1) on two disjoint increasing position
    sequences with w decreasing along each; this checks that shape.
    """
    n = max(len(v), len(w))
    c = perm.compose(perm.inverse(w), v)
    cc = perm.pad(c, n)
    support = [i for i in range(1, n + 1) if cc[i - 1] != i]
    if not support:
        return False
    # must be a single cycle on its support
    cycle = [support[0]]
    while True:
        nxt = cc[cycle[-1] - 1]
        if nxt == cycle[0]:
            break
        cycle.append(nxt)
    if len(cycle) != len(support):
        return False
    ww = perm.pad(w, n)
    for shift in range(len(cycle)):
        rot = cycle[shift:] + cycle[:shift]
        for m in range(1, len(rot)):
            alpha, rev_beta = rot[:m], rot[m:]
            beta = list(reversed(rev_beta))
            if all(alpha[t] < alpha[t + 1] for t in range(m - 1)) and \
                    all(beta[t] < beta[t + 1]
                        for t in range(len(beta) - 1)) and \
                    all(ww[alpha[t] - 1] > ww[alpha[t + 1] - 1]
                        for t in range(m - 1)) and \
                    all(ww[beta[t] - 1] > ww[beta[t + 1] - 1]
                        for t in range(len(beta) - 1)):
                return True
    return False


def count_smooth(n: int) -> int:
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return 1
    return sum(1 for w in perm.all_perms(n) if is_smooth(w))


def bk_smooth_test(v: Perm, w: Perm) -> bool:
    """Smoothness of the w-indexed variety at the point v, by comparing a
    specialized double Schubert polynomial with a product of y-roots."""
    if not bruhat.bruhat_leq(v, w):
        raise ValueError(f"{v} is not below {w}")
    n = max(len(v), len(w), 2)
    w0 = perm.longest(n)
    ww0 = perm.compose(w, w0)
    vw0 = perm.compose(v, w0)
    f = schub.double_schubert(ww0)
    spec = f.substitute(
        x_map={i: IntPolynomial.y(perm.act(vw0, i)) for i in range(1, n + 1)})
    target = IntPolynomial.const(1)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if not bruhat.bruhat_leq(perm.t_times(v, i, j), w):
                target = target * (IntPolynomial.y(j) - IntPolynomial.y(i))
    return spec == target


def poincare_coeffs(w: Perm) -> list[int]:
    p = bruhat.poincare_polynomial(w)
    return [p.coeff_q(k) for k in range(p.q_degree() + 1)]


def poincare_factor(w: Perm) -> list[int] | None:
    """Exponents e with P_w(t) = prod (1 + t + ... + t^e), or None."""
    coeffs = poincare_coeffs(w)
    return _qint_factor(coeffs)


def _qint_factor(coeffs: list[int]) -> list[int] | None:
    if coeffs == [1]:
        return []
    deg = len(coeffs) - 1
    for e in range(deg, 0, -1):
        quot = _exact_div(coeffs, [1] * (e + 1))
        if quot is not None:
            rest = _qint_factor(quot)
            if rest is not None:
                return sorted(rest + [e])
    return None


def _exact_div(num: list[int], den: list[int]) -> list[int] | None:
    """Exact polynomial division over the integers, or None."""
    num = list(num)
    dd = len(den) - 1
    nd = len(num) - 1
    if nd < dd:
        return None
    quot = [0] * (nd - dd + 1)
    for k in range(nd - dd, -1, -1):
        c = num[k + dd]
        if c % den[dd]:
            return None
        quot[k] = c // den[dd]
        for t, d in enumerate(den):
            num[k + t] -= quot[k] * d
    if any(num):
        return None
    return quot


def is_palindromic(coeffs: list[int]) -> bool:
    return coeffs == coeffs[::-1]


# ---------------------------------------------------------------------------
# Cartan equivalence and isomorphism classes


def _adjacency(s: frozenset[int]) -> dict[tuple[int, int], int]:
    return {(i, j): 1 if abs(i - j) == 1 else 0
            for i in s for j in s if i != j}


def cartan_equivalent(v: Perm, w: Perm) -> bool:
    """Search support bijections satisfying the two defining conditions:
    one reduced word maps to a reduced word, and adjacency is preserved
    on pairs i, j with s_i s_j below v."""
    sv, sw = perm.support(v), perm.support(w)
    if len(sv) != len(sw):
        return False
    if perm.length(v) != perm.length(w):
        return False
    word = perm.reduced_word(v)
    av, aw = _adjacency(sv), _adjacency(sw)
    pairs = [(i, j) for i in sv for j in sv if i != j
             and bruhat.bruhat_leq(perm.compose(perm.simple(i),
                                                perm.simple(j)), v)]
    sv_list = sorted(sv)
    for image in itertools.permutations(sorted(sw)):
        sigma = dict(zip(sv_list, image))
        if any(av[(i, j)] != aw[(sigma[i], sigma[j])] for i, j in pairs):
            continue
        if perm.is_reduced(tuple(sigma[a] for a in word)) and \
                perm.from_word(tuple(sigma[a] for a in word)) == w:
            return True
    return False


def is_connected(w: Perm) -> bool:
    """Support equals [n-1] for w canonically in S_n."""
    if w == ():
        return True
    return perm.support(w) == frozenset(range(1, len(w)))


def connected_of_length(d: int) -> list[Perm]:
    """All connected permutations with d inversions (support <= d)."""
    if d == 0:
        return [()]
    out = []
    for n in range(2, d + 2):
        for w in perm.all_perms(n):
            if len(w) == n and perm.length(w) == d and is_connected(w):
                out.append(w)
    return out


def _class_rep(w: Perm) -> Perm:
    """Lex-max of {w, w0 w w0} inside its own S_n."""
    n = len(w)
    w0 = perm.longest(n)
    other = perm.compose(w0, perm.compose(w, w0))
    return max(w, other)


@lru_cache(maxsize=None)
def connected_class_reps(d: int) -> list[Perm]:
    reps = {_class_rep(w) for w in connected_of_length(d)}
    return sorted(reps)


def isomorphism_counts(d: int) -> tuple[int, int]:
    """(I(d), CI(d)): classes of dimension-d varieties, and the connected
    classes; I(d) is assembled from CI by multisets over partitions of d."""
    if d < 0:
        raise ValueError("d must be nonnegative")
    if d == 0:
        return 1, 1
    ci = [0] * (d + 1)
    ci[0] = 1
    for j in range(1, d + 1):
        ci[j] = len(connected_class_reps(j))
    total = 0
    for lam in partitions_of(d):
        mult: dict[int, int] = {}
        for part in lam:
            mult[part] = mult.get(part, 0) + 1
        prod = 1
        for j, m in mult.items():
            prod *= comb(ci[j] + m - 1, m)
        total += prod
    return total, ci[d]


def partitions_of(d: int, largest: int | None = None):
    if largest is None:
        largest = d
    if d == 0:
        yield ()
        return
    for first in range(min(d, largest), 0, -1):
        for rest in partitions_of(d - first, first):
            yield (first,) + rest
