"""The Hecke algebra of the symmetric group, R-polynomials, and
Kazhdan-Lusztig polynomials.

Elements are finite sums of basis vectors T_w with LaurentHalfQ
coefficients; the quadratic relation is (T_i)^2 = (q-1) T_i + q.

R-polynomials follow the normalization that makes them monic integer
polynomials of degree l(w) - l(v):

    (T_{w^{-1}})^{-1} = q^{-l(w)} sum_v (-1)^{l(w)-l(v)} R_{v,w}(q) T_v,

validated against counts of the open Richardson cells over small finite
fields in the test suite.
"""
from __future__ import annotations

import threading

from . import bruhat, perm
from .perm import Perm
from .poly import LaurentHalfQ

_r_cache: dict[tuple[Perm, Perm], LaurentHalfQ] = {}
_kl_cache: dict[tuple[Perm, Perm], LaurentHalfQ] = {}
_lock = threading.Lock()


class HeckeElement(dict):
    """Map Permutation -> LaurentHalfQ, zero coefficients dropped."""

    def __init__(self, terms=None):
        super().__init__()
        if terms:
            for w, c in dict(terms).items():
                if isinstance(c, int):
                    c = LaurentHalfQ({0: c})
                if c:
                    self[w] = c

    @staticmethod
    def t(w: Perm) -> "HeckeElement":
        return HeckeElement({w: LaurentHalfQ.one()})

    def __add__(self, other: "HeckeElement") -> "HeckeElement":
        out = dict(self)
        for w, c in other.items():
            out[w] = out.get(w, LaurentHalfQ.zero()) + c
        return HeckeElement(out)

    def __sub__(self, other: "HeckeElement") -> "HeckeElement":
        out = dict(self)
        for w, c in other.items():
            out[w] = out.get(w, LaurentHalfQ.zero()) - c
        return HeckeElement(out)

    def scale(self, c: LaurentHalfQ | int) -> "HeckeElement":
        if isinstance(c, int):
            c = LaurentHalfQ({0: c})
        return HeckeElement({w: coeff * c for w, coeff in self.items()})

    def coeff(self, w: Perm) -> LaurentHalfQ:
        return self.get(w, LaurentHalfQ.zero())

    def __str__(self) -> str:
        if not self:
            return "0"
        parts = []
        for w, c in sorted(self.items(),
                           key=lambda kv: (perm.length(kv[0]), kv[0])):
            parts.append(f"({c})*T[{perm.pretty(w)}]")
        return " + ".join(parts)


def t_multiply(h: HeckeElement, s: int) -> HeckeElement:
    """Right multiplication by T_s:

    T_w T_s = T_{ws} if l(ws) > l(w), else (q-1) T_w + q T_{ws}.
    """
    out: dict[Perm, LaurentHalfQ] = {}

    def add(w: Perm, c: LaurentHalfQ) -> None:
        out[w] = out.get(w, LaurentHalfQ.zero()) + c

    qm1 = LaurentHalfQ({2: 1, 0: -1})
    q1 = LaurentHalfQ.q(1)
    for w, c in h.items():
        ws = perm.times_t(w, s, s + 1)
        if perm.length(ws) > perm.length(w):
            add(ws, c)
        else:
            add(w, c * qm1)
            add(ws, c * q1)
    return HeckeElement(out)


def t_of(w: Perm) -> HeckeElement:
    """T_w as a product of generators along a reduced word."""
    h = HeckeElement.t(())
    for s in perm.reduced_word(w):
        h = t_multiply(h, s)
    return h


def multiply(a: HeckeElement, b: HeckeElement) -> HeckeElement:
    """Product in the Hecke algebra (expands b through reduced words)."""
    out = HeckeElement()
    for w, c in b.items():
        term = a.scale(c)
        for s in perm.reduced_word(w):
            term = t_multiply(term, s)
        out = out + term
    return out


def _t_inverse_gen(s: int) -> HeckeElement:
    """(T_s)^{-1} = q^{-1} T_s - (1 - q^{-1}) T_id."""
    return HeckeElement({
        perm.simple(s): LaurentHalfQ.q(-1),
        (): LaurentHalfQ.q(-1) - LaurentHalfQ.one(),
    })


def t_inverse(w: Perm) -> HeckeElement:
    """(T_w)^{-1}: generator inverses along the reversed reduced word."""
    word = perm.reduced_word(w)
    h = HeckeElement.t(())
    for s in reversed(word):
        # multiply on the right by (T_s)^{-1}
        h = h.scale(LaurentHalfQ.q(-1) - LaurentHalfQ.one()) + \
            t_multiply(h, s).scale(LaurentHalfQ.q(-1))
    return h


def r_polynomial(v: Perm, w: Perm) -> LaurentHalfQ:
    """Monic-normalized R_{v,w}(q), extracted from (T_{w^{-1}})^{-1}."""
    key = (v, w)
    hit = _r_cache.get(key)
    if hit is not None:
        return hit
    lw = perm.length(w)
    inv = t_inverse(perm.inverse(w))
    for u, c in inv.items():
        lu = perm.length(u)
        sign = 1 if (lw - lu) % 2 == 0 else -1
        r = c.shift_v(2 * lw) * sign
        with _lock:
            _r_cache[(u, w)] = r
    return _r_cache.get(key, LaurentHalfQ.zero())


def kl_polynomial(v: Perm, w: Perm) -> LaurentHalfQ:
    """P_{v,w}(q) from the triangular bar-invariance system.

    Writing d = l(w) - l(v), the sum over v < u <= w of R_{v,u} P_{u,w}
    equals q^d P_{v,w}(1/q) - P_{v,w}(q); the degree bound d-1 over 2
    lets the top half of that sum be read off as P_{v,w} reversed.
    """
    key = (v, w)
    hit = _kl_cache.get(key)
    if hit is not None:
        return hit
    if v == w:
        result = LaurentHalfQ.one()
    elif not bruhat.bruhat_leq(v, w):
        result = LaurentHalfQ.zero()
    else:
        d = perm.length(w) - perm.length(v)
        total = LaurentHalfQ.zero()
        for u in bruhat.lower_interval_elements(w):
            if u == v or not bruhat.bruhat_leq(v, u):
                continue
            total = total + r_polynomial(v, u) * kl_polynomial(u, w)
        coeffs: dict[int, int] = {}
        for p, c in total.coeffs.items():
            k = p // 2  # power of q
            if 2 * k > d:
                coeffs[2 * (d - k)] = coeffs.get(2 * (d - k), 0) + c
        result = LaurentHalfQ(coeffs)
    with _lock:
        _kl_cache[key] = result
    return result


def c_prime(w: Perm) -> HeckeElement:
    """C'_w = q^{-l(w)/2} sum over v <= w of P_{v,w}(q) T_v."""
    ell = perm.length(w)
    terms: dict[Perm, LaurentHalfQ] = {}
    for v in bruhat.lower_interval_elements(w):
        p = kl_polynomial(v, w)
        if p:
            terms[v] = p.shift_v(-ell)
    return HeckeElement(terms)


def bar(h: HeckeElement) -> HeckeElement:
    """The involution sending T_w to (T_{w^{-1}})^{-1} and q to 1/q."""
    out = HeckeElement()
    for w, c in h.items():
        out = out + t_inverse(perm.inverse(w)).scale(c.bar())
    return out


def kl_table(n: int) -> dict[Perm, LaurentHalfQ]:
    """P_{id,w} for every w in S_n."""
    return {w: kl_polynomial((), w) for w in perm.all_perms(n)}
