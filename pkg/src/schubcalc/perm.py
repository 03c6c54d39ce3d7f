"""Permutations of the positive integers with finite support.

A permutation is stored in one-line notation as a tuple of 1-based values
with trailing fixed points trimmed, so every element of S_n embeds in
S_{n+1} without changing its representation.  The identity is the empty
tuple.  All binary operations pad their arguments to a common size.

Inversion sets are indexed by positions throughout: (i, j) with i < j and
w(i) > w(j).  The by-value indexing some formulas prefer is the position
indexing of the inverse, so pass inverse(w) where values are wanted.

>>> compose((1,3,2), (2,1,3))
(3, 1, 2)
>>> lehmer_code((2,3,4,1))
(1, 1, 1)
>>> length((4,3,1,5,2))
6
"""
from __future__ import annotations

import itertools
from typing import Iterable, Iterator, Sequence

# one-line notation, 1-based, trailing fixed points trimmed
Perm = tuple[int, ...]

IDENTITY: Perm = ()


def trim(seq: Sequence[int]) -> Perm:
    """Canonical representative: drop trailing fixed points."""
    n = len(seq)
    while n > 0 and seq[n - 1] == n:
        n -= 1
    return tuple(seq[:n])


def is_perm(seq: Sequence[int]) -> bool:
    return sorted(seq) == list(range(1, len(seq) + 1))


def make(seq: Iterable[int]) -> Perm:
    """Validate and canonicalize one-line notation."""
    w = tuple(seq)
    if not is_perm(w):
        raise ValueError(f"not a permutation in one-line notation: {w}")
    return trim(w)


def pad(w: Perm, n: int) -> tuple[int, ...]:
    """Extend with fixed points to length at least n."""
    if len(w) >= n:
        return w
    return w + tuple(range(len(w) + 1, n + 1))


def size(w: Perm) -> int:
    """Smallest n with w in S_n (0 for the identity)."""
    return len(w)


def act(w: Perm, i: int) -> int:
    return w[i - 1] if i <= len(w) else i


def compose(u: Perm, v: Perm) -> Perm:
    """The product uv mapping i to u(v(i))."""
    n = max(len(u), len(v))
    uu, vv = pad(u, n), pad(v, n)
    return trim(tuple(uu[vv[i] - 1] for i in range(n)))


def inverse(w: Perm) -> Perm:
    inv = [0] * len(w)
    for i, wi in enumerate(w):
        inv[wi - 1] = i + 1
    return tuple(inv)


def identity(n: int = 0) -> Perm:
    return ()


def transposition(i: int, j: int) -> Perm:
    """t_{ij}, swapping values i and j."""
    if i == j:
        raise ValueError("transposition needs distinct values")
    if i > j:
        i, j = j, i
    w = list(range(1, j + 1))
    w[i - 1], w[j - 1] = j, i
    return trim(tuple(w))


def simple(i: int) -> Perm:
    return transposition(i, i + 1)


def times_t(w: Perm, i: int, j: int) -> Perm:
    """Right multiplication w t_{ij}: swap positions i and j."""
    if i > j:
        i, j = j, i
    ww = list(pad(w, j))
    ww[i - 1], ww[j - 1] = ww[j - 1], ww[i - 1]
    return trim(tuple(ww))


def t_times(w: Perm, i: int, j: int) -> Perm:
    """Left multiplication t_{ij} w: swap values i and j."""
    ww = list(pad(w, max(i, j, len(w))))
    pi, pj = ww.index(i), ww.index(j)
    ww[pi], ww[pj] = j, i
    return trim(tuple(ww))


def longest(n: int) -> Perm:
    return tuple(range(n, 0, -1))


def inversions(w: Perm) -> list[tuple[int, int]]:
    """Inversion set by positions: pairs (i, j), i < j, w(i) > w(j)."""
    n = len(w)
    return [(i + 1, j + 1) for i in range(n) for j in range(i + 1, n)
            if w[i] > w[j]]


def length(w: Perm) -> int:
    return sum(1 for i in range(len(w)) for j in range(i + 1, len(w))
               if w[i] > w[j])


def coinv(w: Perm, n: int) -> int:
    """Number of non-inversions of w viewed in S_n."""
    return n * (n - 1) // 2 - length(w)


def descents(w: Perm) -> list[int]:
    """Positions i with w(i) > w(i+1)."""
    ww = pad(w, len(w) + 1)
    return [i + 1 for i in range(len(ww) - 1) if ww[i] > ww[i + 1]]


def lehmer_code(w: Perm) -> tuple[int, ...]:
    """c(w)_i = number of inversions (i, j) with first coordinate i."""
    n = len(w)
    code = [sum(1 for j in range(i + 1, n) if w[i] > w[j]) for i in range(n)]
    while code and code[-1] == 0:
        code.pop()
    return tuple(code)


def code_inverse(code: Sequence[int]) -> Perm:
    """Inverse of lehmer_code on finitely supported nonnegative sequences."""
    code = list(code)
    if any(c < 0 for c in code):
        raise ValueError(f"code entries must be nonnegative: {code}")
    while code and code[-1] == 0:
        code.pop()
    n = max([code[i] + i + 1 for i in range(len(code))] + [len(code)],
            default=0)
    # place the i-th value by skipping c_i unused slots
    avail = list(range(1, n + 1))
    out = []
    for i in range(n):
        c = code[i] if i < len(code) else 0
        out.append(avail.pop(c))
    return trim(tuple(out))


def reduced_word(w: Perm) -> tuple[int, ...]:
    """One reduced word for w (lex smallest, by repeated first descents)."""
    ww = list(w)
    word = []
    i = 0
    while i < len(ww) - 1:
        if ww[i] > ww[i + 1]:
            word.append(i + 1)
            ww[i], ww[i + 1] = ww[i + 1], ww[i]
            i = max(i - 1, 0)
        else:
            i += 1
    return tuple(reversed(word))


def from_word(word: Sequence[int]) -> Perm:
    """Product s_{a_1} s_{a_2} ... s_{a_k} of simple transpositions.

    Multiplying on the right by s_a swaps positions a and a+1, so the
    product accumulates by position swaps read left to right.
    """
    n = max(word, default=0) + 1
    ww = list(range(1, n + 1))
    for a in word:
        ww[a - 1], ww[a] = ww[a], ww[a - 1]
    return trim(tuple(ww))


def is_reduced(word: Sequence[int]) -> bool:
    return length(from_word(word)) == len(word)


def all_reduced_words(w: Perm) -> Iterator[tuple[int, ...]]:
    """Enumerate R(w) by peeling descents from the right."""
    if length(w) == 0:
        yield ()
        return
    for i in descents(w):
        for word in all_reduced_words(times_t(w, i, i + 1)):
            yield word + (i,)


def rank_table(w: Perm, corner: str = "NW") -> tuple[tuple[int, ...], ...]:
    """Rank table of the permutation matrix M_w (1 at (w_j, j)).

    Entry (i, j) counts the 1s of M_w weakly NW (resp. SW) of (i, j).
    """
    n = len(w)
    if corner == "NW":
        return tuple(
            tuple(sum(1 for h in range(j + 1) if w[h] <= i + 1)
                  for j in range(n))
            for i in range(n))
    if corner == "SW":
        return tuple(
            tuple(sum(1 for h in range(j + 1) if w[h] >= i + 1)
                  for j in range(n))
            for i in range(n))
    raise ValueError(f"corner must be NW or SW, got {corner}")


def from_rank_table(table: Sequence[Sequence[int]]) -> Perm:
    """Reconstruct w from its NW rank table."""
    n = len(table)
    w = []
    for j in range(n):
        for i in range(n):
            prev_col = table[i][j - 1] if j > 0 else 0
            prev_row = table[i - 1][j] if i > 0 else 0
            prev_diag = table[i - 1][j - 1] if i > 0 and j > 0 else 0
            if table[i][j] == prev_col + 1 and prev_row == prev_diag:
                w.append(i + 1)
                break
    return make(w)


def rothe_diagram(w: Perm, corner: str = "NW") -> frozenset[tuple[int, int]]:
    """D(w) = {(i,j) : j < w(i), i < w^{-1}(j)}; the SW variant flips the
    second condition to w^{-1}(j) < i."""
    n = len(w)
    wi = inverse(w)
    if corner == "NW":
        return frozenset((i, j) for i in range(1, n + 1)
                         for j in range(1, n + 1)
                         if j < w[i - 1] and i < wi[j - 1])
    if corner == "SW":
        return frozenset((i, j) for i in range(1, n + 1)
                         for j in range(1, n + 1)
                         if j < w[i - 1] and wi[j - 1] < i)
    raise ValueError(f"corner must be NW or SW, got {corner}")


def contains_pattern(w: Perm, p: Perm) -> bool:
    """Naive subsequence scan for the pattern p inside w."""
    n, k = len(w), len(p)
    if k == 0:
        return True
    if k > n:
        return False
    for positions in itertools.combinations(range(n), k):
        vals = [w[i] for i in positions]
        if all((vals[a] < vals[b]) == (p[a] < p[b])
               for a in range(k) for b in range(a + 1, k)):
            return True
    return False


def avoids(w: Perm, *patterns: Perm) -> bool:
    return not any(contains_pattern(w, p) for p in patterns)


def flatten(seq: Sequence[int]) -> Perm:
    """The unique permutation with the same relative order as seq."""
    if len(set(seq)) != len(seq):
        raise ValueError(f"entries must be distinct: {seq}")
    order = sorted(seq)
    return trim(tuple(order.index(x) + 1 for x in seq))


def lex_index(w: Perm, n: int) -> int:
    """Position of w in the lex listing of S_n, via j = sum c_i (n-i)!."""
    if len(w) > n:
        raise ValueError(f"{w} is not in S_{n}")
    code = lehmer_code(w)
    fact = [1] * (n + 1)
    for k in range(2, n + 1):
        fact[k] = fact[k - 1] * k
    return sum(c * fact[n - i - 1] for i, c in enumerate(code))


def lex_unrank(j: int, n: int) -> Perm:
    fact = [1] * (n + 1)
    for k in range(2, n + 1):
        fact[k] = fact[k - 1] * k
    if not 0 <= j < fact[n]:
        raise ValueError(f"index {j} out of range for S_{n}")
    code = []
    for i in range(n):
        f = fact[n - i - 1]
        code.append(j // f)
        j %= f
    return code_inverse(code)


def shift(w: Perm, k: int = 1) -> Perm:
    """1^k x w: prepend k fixed points."""
    return trim(tuple(range(1, k + 1)) + tuple(v + k for v in w))


def direct_sum(u: Perm, v: Perm) -> Perm:
    """u x v acting on disjoint blocks."""
    m = len(u)
    return trim(tuple(u) + tuple(x + m for x in v))


def support(w: Perm) -> frozenset[int]:
    """S(w) = {i : s_i <= w}; s_i <= w iff max(w_1..w_i) > i."""
    out = set()
    mx = 0
    for i in range(1, len(w)):
        mx = max(mx, w[i - 1])
        if mx > i:
            out.add(i)
    return frozenset(out)


def support_graph(w: Perm) -> tuple[frozenset[int], frozenset[tuple[int, int]]]:
    """Support plus edges between non-commuting generators |i-j| = 1."""
    s = support(w)
    edges = frozenset((i, i + 1) for i in s if i + 1 in s)
    return s, edges


def all_perms(n: int) -> Iterator[Perm]:
    for p in itertools.permutations(range(1, n + 1)):
        yield trim(p)


def parse(text: str) -> Perm:
    """Parse "2413" (digits, n <= 9) or "2,4,1,3" (comma form)."""
    text = text.strip()
    if not text:
        raise ValueError("empty permutation")
    if "," in text:
        try:
            vals = [int(tok) for tok in text.split(",")]
        except ValueError as exc:
            raise ValueError(f"bad permutation {text!r}") from exc
    else:
        if not text.isdigit():
            raise ValueError(f"bad permutation {text!r}")
        vals = [int(ch) for ch in text]
    return make(vals)


def pretty(w: Perm, n: int | None = None) -> str:
    """Compact digits for n <= 9, comma form otherwise."""
    ww = pad(w, n) if n is not None else (w if w else (1,))
    if max(ww) <= 9:
        return "".join(str(v) for v in ww)
    return ",".join(str(v) for v in ww)
