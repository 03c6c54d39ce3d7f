"""Sparse exact polynomials in x1,x2,... and y1,y2,... over the integers.

Terms map a pair of exponent tuples (x-part, y-part, trailing zeros
trimmed) to an unbounded int coefficient.  Values are immutable by
convention: every operation returns a fresh polynomial.

Also hosts LaurentHalfQ, Laurent polynomials in v = q^(1/2) used for
Poincare, R-, and Kazhdan-Lusztig polynomials.
"""
from __future__ import annotations

from typing import Iterable, Mapping

Expt = tuple[int, ...]
Key = tuple[Expt, Expt]


def _trim(e: Iterable[int]) -> Expt:
    e = list(e)
    while e and e[-1] == 0:
        e.pop()
    return tuple(e)


def _get(e: Expt, i: int) -> int:
    return e[i - 1] if i <= len(e) else 0


def _set(e: Expt, i: int, v: int) -> Expt:
    ee = list(e) + [0] * max(0, i - len(e))
    ee[i - 1] = v
    return _trim(ee)


class IntPolynomial:
    """Polynomial in x- and y-variables with integer coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Key, int] | None = None):
        clean: dict[Key, int] = {}
        if terms:
            for (xe, ye), c in terms.items():
                if c:
                    clean[(_trim(xe), _trim(ye))] = c
        self.terms = clean

    # -- constructors ------------------------------------------------
    @staticmethod
    def zero() -> "IntPolynomial":
        return IntPolynomial()

    @staticmethod
    def const(c: int) -> "IntPolynomial":
        return IntPolynomial({((), ()): c})

    @staticmethod
    def x(i: int, power: int = 1) -> "IntPolynomial":
        return IntPolynomial({(_set((), i, power), ()): 1})

    @staticmethod
    def y(j: int, power: int = 1) -> "IntPolynomial":
        return IntPolynomial({((), _set((), j, power)): 1})

    @staticmethod
    def monomial(xe: Iterable[int], ye: Iterable[int] = (), c: int = 1
                 ) -> "IntPolynomial":
        return IntPolynomial({(_trim(xe), _trim(ye)): c})

    # -- ring structure ----------------------------------------------
    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = IntPolynomial.const(other)
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "IntPolynomial | int") -> "IntPolynomial":
        if isinstance(other, int):
            other = IntPolynomial.const(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return IntPolynomial(out)

    __radd__ = __add__

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial({k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "IntPolynomial | int") -> "IntPolynomial":
        return self + (-other if isinstance(other, IntPolynomial)
                       else IntPolynomial.const(-other))

    def __rsub__(self, other: int) -> "IntPolynomial":
        return IntPolynomial.const(other) - self

    def __mul__(self, other: "IntPolynomial | int") -> "IntPolynomial":
        if isinstance(other, int):
            if other == 0:
                return IntPolynomial()
            return IntPolynomial({k: c * other for k, c in self.terms.items()})
        out: dict[Key, int] = {}
        for (xa, ya), ca in self.terms.items():
            for (xb, yb), cb in other.terms.items():
                nx = tuple(_get(xa, i) + _get(xb, i)
                           for i in range(1, max(len(xa), len(xb)) + 1))
                ny = tuple(_get(ya, j) + _get(yb, j)
                           for j in range(1, max(len(ya), len(yb)) + 1))
                k = (nx, ny)
                out[k] = out.get(k, 0) + ca * cb
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "IntPolynomial":
        if n < 0:
            raise ValueError("negative power")
        out = IntPolynomial.const(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- queries -----------------------------------------------------
    def coeff(self, xe: Iterable[int], ye: Iterable[int] = ()) -> int:
        return self.terms.get((_trim(xe), _trim(ye)), 0)

    def degree(self) -> int:
        return max((sum(xe) + sum(ye) for xe, ye in self.terms), default=0)

    def is_y_free(self) -> bool:
        return all(not ye for _, ye in self.terms)

    def x_support(self) -> set[Expt]:
        return {xe for xe, _ in self.terms}

    def nvars_x(self) -> int:
        return max((len(xe) for xe, _ in self.terms), default=0)

    # -- operators ----------------------------------------------------
    def swap_x(self, i: int) -> "IntPolynomial":
        """Apply s_i to the x-variables."""
        out: dict[Key, int] = {}
        for (xe, ye), c in self.terms.items():
            a, b = _get(xe, i), _get(xe, i + 1)
            nk = (_set(_set(xe, i, b), i + 1, a), ye)
            out[nk] = out.get(nk, 0) + c
        return IntPolynomial(out)

    def divided_difference(self, i: int) -> "IntPolynomial":
        """(f - s_i f)/(x_i - x_{i+1}); y-variables act as scalars."""
        out: dict[Key, int] = {}
        for (xe, ye), c in self.terms.items():
            p, q = _get(xe, i), _get(xe, i + 1)
            if p == q:
                continue
            sign = 1 if p > q else -1
            lo, hi = min(p, q), max(p, q)
            # exact division: partial_i(x_i^p x_{i+1}^q)
            #   = sign * sum_{j=lo}^{hi-1} x_i^j x_{i+1}^{p+q-1-j}
            for j in range(lo, hi):
                nk = (_set(_set(xe, i, j), i + 1, p + q - 1 - j), ye)
                out[nk] = out.get(nk, 0) + sign * c
        return IntPolynomial(out)

    def partial_derivative(self, i: int) -> "IntPolynomial":
        """Formal d/dx_i."""
        out: dict[Key, int] = {}
        for (xe, ye), c in self.terms.items():
            p = _get(xe, i)
            if p == 0:
                continue
            nk = (_set(xe, i, p - 1), ye)
            out[nk] = out.get(nk, 0) + p * c
        return IntPolynomial(out)

    def substitute(self,
                   x_map: Mapping[int, "IntPolynomial"] | None = None,
                   y_map: Mapping[int, "IntPolynomial"] | None = None
                   ) -> "IntPolynomial":
        """Simultaneous substitution; unassigned variables stay fixed."""
        x_map = x_map or {}
        y_map = y_map or {}
        total = IntPolynomial()
        for (xe, ye), c in self.terms.items():
            term = IntPolynomial.const(c)
            for i, e in enumerate(xe, start=1):
                if not e:
                    continue
                base = x_map.get(i, IntPolynomial.x(i))
                term = term * base ** e
            for j, e in enumerate(ye, start=1):
                if not e:
                    continue
                base = y_map.get(j, IntPolynomial.y(j))
                term = term * base ** e
            total = total + term
        return total

    def eval_ints(self, xs: Mapping[int, int] | None = None,
                  ys: Mapping[int, int] | None = None) -> int:
        """Evaluate at integer points (all unassigned variables -> 0)."""
        xs = xs or {}
        ys = ys or {}
        total = 0
        for (xe, ye), c in self.terms.items():
            v = c
            for i, e in enumerate(xe, start=1):
                if e:
                    v *= xs.get(i, 0) ** e
            for j, e in enumerate(ye, start=1):
                if e:
                    v *= ys.get(j, 0) ** e
            total += v
        return total

    def set_y_zero(self) -> "IntPolynomial":
        out: dict[Key, int] = {}
        for (xe, ye), c in self.terms.items():
            if not ye:
                out[(xe, ())] = out.get((xe, ()), 0) + c
        return IntPolynomial(out)

    def leading_exponent_revlex(self) -> Expt:
        """Distinguished x-exponent: at the rightmost position where two
        exponent vectors differ, the larger entry wins.  Oriented so the
        leading exponent of a Schubert polynomial is the Lehmer code."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        if not self.is_y_free():
            raise ValueError("leading exponent requires a y-free polynomial")
        best = None
        n = max(len(xe) for xe, _ in self.terms)
        for xe, _ in self.terms:
            padded = xe + (0,) * (n - len(xe))
            cand = tuple(reversed(padded))
            if best is None or cand > best:
                best = cand
        return _trim(reversed(best))

    # -- rendering ----------------------------------------------------
    def sorted_terms(self) -> list[tuple[Key, int]]:
        """Deterministic order: x-exponents lex-descending, then y."""
        pad = max((max(len(xe), len(ye)) for xe, ye in self.terms),
                  default=0)

        def key(item):
            (xe, ye), _ = item
            return (tuple(-v for v in xe + (0,) * (pad - len(xe))),
                    tuple(-v for v in ye + (0,) * (pad - len(ye))))
        return sorted(self.terms.items(), key=key)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (xe, ye), c in self.sorted_terms():
            factors = []
            for i, e in enumerate(xe, start=1):
                if e == 1:
                    factors.append(f"x{i}")
                elif e > 1:
                    factors.append(f"x{i}^{e}")
            for j, e in enumerate(ye, start=1):
                if e == 1:
                    factors.append(f"y{j}")
                elif e > 1:
                    factors.append(f"y{j}^{e}")
            body = "*".join(factors)
            if not body:
                body = str(abs(c))
                mag = ""
            else:
                mag = "" if abs(c) == 1 else f"{abs(c)}*"
            parts.append(("- " if c < 0 else "+ ") + mag + body)
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    def __repr__(self) -> str:
        return f"IntPolynomial({self})"


def e_poly(d: int, xs: list[IntPolynomial]) -> IntPolynomial:
    """Elementary symmetric polynomial e_d of the given variables."""
    if d < 0:
        return IntPolynomial.zero()
    if d == 0:
        return IntPolynomial.const(1)
    if d > len(xs):
        return IntPolynomial.zero()
    # dynamic program over prefixes
    rows: list[IntPolynomial] = [IntPolynomial.const(1)] + \
        [IntPolynomial.zero()] * d
    for x in xs:
        for k in range(d, 0, -1):
            rows[k] = rows[k] + rows[k - 1] * x
    return rows[d]


def h_poly(d: int, xs: list[IntPolynomial]) -> IntPolynomial:
    """Complete homogeneous symmetric polynomial h_d."""
    if d < 0:
        return IntPolynomial.zero()
    if d == 0:
        return IntPolynomial.const(1)
    if not xs:
        return IntPolynomial.zero()
    # h_d(x1..xk) = h_d(x1..x_{k-1}) + x_k h_{d-1}(x1..xk)
    prev = [IntPolynomial.const(1)] + [IntPolynomial.zero()] * d
    for idx in range(len(xs)):
        cur = [IntPolynomial.const(1)] + [IntPolynomial.zero()] * d
        for k in range(1, d + 1):
            cur[k] = prev[k] + xs[idx] * cur[k - 1]
        prev = cur
    return prev[d]


def x_vars(n: int) -> list[IntPolynomial]:
    return [IntPolynomial.x(i) for i in range(1, n + 1)]


def y_vars(n: int) -> list[IntPolynomial]:
    return [IntPolynomial.y(j) for j in range(1, n + 1)]


def det(mat: list[list[IntPolynomial]]) -> IntPolynomial:
    """Determinant by cofactor expansion (small matrices only)."""
    n = len(mat)
    if n == 0:
        return IntPolynomial.const(1)
    if n == 1:
        return mat[0][0]
    total = IntPolynomial.zero()
    for j in range(n):
        minor = [row[:j] + row[j + 1:] for row in mat[1:]]
        term = mat[0][j] * det(minor)
        total = total + (term if j % 2 == 0 else -term)
    return total


class LaurentHalfQ:
    """Laurent polynomial in v = q^(1/2) with integer coefficients.

    Stored as a map from the integer power of v to the coefficient, so
    q^k is v-power 2k.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        self.coeffs = {k: c for k, c in (coeffs or {}).items() if c}

    @staticmethod
    def zero() -> "LaurentHalfQ":
        return LaurentHalfQ()

    @staticmethod
    def one() -> "LaurentHalfQ":
        return LaurentHalfQ({0: 1})

    @staticmethod
    def q(power: int = 1, coeff: int = 1) -> "LaurentHalfQ":
        return LaurentHalfQ({2 * power: coeff})

    @staticmethod
    def v(power: int = 1, coeff: int = 1) -> "LaurentHalfQ":
        return LaurentHalfQ({power: coeff})

    @staticmethod
    def from_q_coeffs(cs: Iterable[int]) -> "LaurentHalfQ":
        """Polynomial in q from its coefficient list, constant first."""
        return LaurentHalfQ({2 * k: c for k, c in enumerate(cs)})

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = LaurentHalfQ({0: other})
        if not isinstance(other, LaurentHalfQ):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other: "LaurentHalfQ | int") -> "LaurentHalfQ":
        if isinstance(other, int):
            other = LaurentHalfQ({0: other})
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, 0) + c
        return LaurentHalfQ(out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentHalfQ":
        return LaurentHalfQ({k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other: "LaurentHalfQ | int") -> "LaurentHalfQ":
        if isinstance(other, int):
            other = LaurentHalfQ({0: other})
        return self + (-other)

    def __mul__(self, other: "LaurentHalfQ | int") -> "LaurentHalfQ":
        if isinstance(other, int):
            return LaurentHalfQ({k: c * other for k, c in self.coeffs.items()})
        out: dict[int, int] = {}
        for ka, ca in self.coeffs.items():
            for kb, cb in other.coeffs.items():
                out[ka + kb] = out.get(ka + kb, 0) + ca * cb
        return LaurentHalfQ(out)

    __rmul__ = __mul__

    def bar(self) -> "LaurentHalfQ":
        """The involution v -> v^{-1}."""
        return LaurentHalfQ({-k: c for k, c in self.coeffs.items()})

    def coeff_q(self, k: int) -> int:
        return self.coeffs.get(2 * k, 0)

    def is_q_polynomial(self) -> bool:
        return all(k >= 0 and k % 2 == 0 for k in self.coeffs)

    def q_degree(self) -> int:
        """Degree in q (coeffs must be a polynomial in q)."""
        if not self.coeffs:
            return -1
        return max(self.coeffs) // 2

    def eval_q(self, q: int) -> int:
        if not self.is_q_polynomial():
            raise ValueError("not a polynomial in q")
        return sum(c * q ** (k // 2) for k, c in self.coeffs.items())

    def shift_v(self, k: int) -> "LaurentHalfQ":
        return LaurentHalfQ({p + k: c for p, c in self.coeffs.items()})

    def __str__(self) -> str:
        return self.format()

    def format(self, var: str = "q", ascending: bool = False) -> str:
        """Render, e.g. "q^2+2q+1"; half powers appear as q^(k/2)."""
        if not self.coeffs:
            return "0"
        items = sorted(self.coeffs.items(), reverse=not ascending)
        parts = []
        for k, c in items:
            if k == 0:
                body = str(abs(c))
            else:
                if k % 2 == 0:
                    p = k // 2
                    vs = var if p == 1 else f"{var}^{p}"
                else:
                    vs = f"{var}^({k}/2)"
                body = vs if abs(c) == 1 else f"{abs(c)}{vs}"
            parts.append(("-" if c < 0 else "+") + body)
        text = "".join(parts)
        return text[1:] if text.startswith("+") else text

    def __repr__(self) -> str:
        return f"LaurentHalfQ({self})"


def q_int(a: int) -> LaurentHalfQ:
    """[a]_q = 1 + q + ... + q^{a-1}."""
    return LaurentHalfQ({2 * k: 1 for k in range(a)})


def q_factorial(m: int) -> LaurentHalfQ:
    out = LaurentHalfQ.one()
    for a in range(1, m + 1):
        out = out * q_int(a)
    return out
