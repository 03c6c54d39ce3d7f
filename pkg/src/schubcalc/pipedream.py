"""Reduced pipe dreams, moves, bumps, the transition map, mitosis,
balanced labellings, and reduced-word statistics.

A pipe dream is a finite set of crossings (row, col) in the positive
quadrant drawn with '+' on the staircase.  Wires enter at the top edge
(labeled 1, 2, ... left to right) and exit on the left edge; reading the
exit labels top to bottom gives the permutation.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from . import perm
from .perm import Perm
from .poly import IntPolynomial, LaurentHalfQ, q_int, q_factorial

Cell = tuple[int, int]


@dataclass(frozen=True)
class PipeDream:
    crossings: frozenset[Cell]

    @staticmethod
    def of(cells: Iterable[Cell]) -> "PipeDream":
        return PipeDream(frozenset((int(i), int(j)) for i, j in cells))

    def reading_cells(self) -> list[Cell]:
        """Rows top to bottom, right to left within each row."""
        return sorted(self.crossings, key=lambda c: (c[0], -c[1]))

    def words(self) -> tuple[tuple[int, ...], tuple[int, ...],
                             tuple[int, ...]]:
        """(r, i, j) sequences in reading order; r = i + j - 1."""
        cells = self.reading_cells()
        i = tuple(c[0] for c in cells)
        j = tuple(c[1] for c in cells)
        r = tuple(a + b - 1 for a, b in cells)
        return r, i, j

    def permutation(self) -> Perm:
        r, _, _ = self.words()
        return perm.from_word(r)

    def is_reduced(self) -> bool:
        return perm.length(self.permutation()) == len(self.crossings)

    def weight(self) -> tuple[int, ...]:
        """Row multiplicities: exponent of x_i is the number of crossings
        in row i."""
        rows: dict[int, int] = {}
        for i, _ in self.crossings:
            rows[i] = rows.get(i, 0) + 1
        n = max(rows, default=0)
        return tuple(rows.get(i, 0) for i in range(1, n + 1))

    def monomial(self) -> IntPolynomial:
        return IntPolynomial.monomial(self.weight())

    def ascii(self, n: int | None = None) -> str:
        """Staircase rendering with '+' and '.'."""
        if n is None:
            w = self.permutation()
            n = max(len(w), max((i + j for i, j in self.crossings),
                                default=1))
        lines = []
        for i in range(1, n + 1):
            row = "".join("+" if (i, j) in self.crossings else "."
                          for j in range(1, n + 2 - i))
            lines.append(row)
        return "\n".join(lines)

    @staticmethod
    def parse(text: str) -> "PipeDream":
        cells = []
        for i, line in enumerate(text.strip().splitlines(), start=1):
            for j, ch in enumerate(line.strip(), start=1):
                if ch == "+":
                    cells.append((i, j))
                elif ch != ".":
                    raise ValueError(f"bad pipe dream glyph {ch!r}")
        return PipeDream.of(cells)


def bottom(w: Perm) -> PipeDream:
    """c_i(w) left-justified crossings in row i."""
    code = perm.lehmer_code(w)
    return PipeDream.of((i + 1, j + 1)
                        for i, c in enumerate(code) for j in range(c))


def top(w: Perm) -> PipeDream:
    """Transpose of the bottom pipe dream of the inverse."""
    return PipeDream.of((j, i) for i, j in bottom(perm.inverse(w)).crossings)


def bottom_top(w: Perm) -> tuple[PipeDream, PipeDream]:
    return bottom(w), top(w)


def ladder_moves(D: PipeDream) -> Iterator[PipeDream]:
    """(i+k+1, j) -> (i, j+1): the two-column strip above the moving
    cross has full rungs up to an empty pair, and the cell right of the
    cross is empty."""
    cells = D.crossings
    for (a, j) in cells:
        if (a, j + 1) in cells:
            continue
        for i in range(a - 1, 0, -1):
            left, right = (i, j) in cells, (i, j + 1) in cells
            if not left and not right:
                yield PipeDream(cells - {(a, j)} | {(i, j + 1)})
                break
            if not (left and right):
                break


def chute_moves(D: PipeDream) -> Iterator[PipeDream]:
    """(i, j+k+1) -> (i+1, j): mirror image of the ladder move on a
    two-row strip extending left of the moving cross."""
    cells = D.crossings
    for (i, b) in cells:
        if (i + 1, b) in cells:
            continue
        for j in range(b - 1, 0, -1):
            up, down = (i, j) in cells, (i + 1, j) in cells
            if not up and not down:
                yield PipeDream(cells - {(i, b)} | {(i + 1, j)})
                break
            if not (up and down):
                break


def enumerate_pipe_dreams(w: Perm, moves: str = "ladder") -> set[PipeDream]:
    """RP(w): closure of the bottom pipe dream under ladder moves (or of
    the top pipe dream under chute moves)."""
    if moves == "ladder":
        start, step = bottom(w), ladder_moves
    elif moves == "chute":
        start, step = top(w), chute_moves
    else:
        raise ValueError(f"moves must be ladder or chute, got {moves}")
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for D in frontier:
            for E in step(D):
                if E not in seen:
                    seen.add(E)
                    nxt.append(E)
        frontier = nxt
    return seen


# ---------------------------------------------------------------------------
# words and bumps


def push(word: Sequence[int], t: int, direction: int) -> tuple[int, ...]:
    """Increment or decrement position t (1-based) by direction."""
    out = list(word)
    out[t - 1] += direction
    return tuple(out)


def delete(word: Sequence[int], t: int) -> tuple[int, ...]:
    return tuple(word[:t - 1]) + tuple(word[t:])


def insert(word: Sequence[int], t: int, x: int) -> tuple[int, ...]:
    return tuple(word[:t - 1]) + (x,) + tuple(word[t - 1:])


def nearly_reduced_at(word: Sequence[int], t: int) -> bool:
    return perm.is_reduced(delete(word, t))


def defect(word: Sequence[int], t: int) -> int:
    """For a non-reduced word nearly reduced at t: the unique other column
    t' where the two wires crossing at t cross again."""
    pair = crossing_positions(word, t)
    for tp in range(1, len(word) + 1):
        if tp != t and crossing_positions(word, tp) == pair:
            if perm.is_reduced(delete(word, tp)):
                return tp
    raise ValueError(f"no defect for {word} at {t}")


def crossing_positions(word: Sequence[int], t: int) -> frozenset[int]:
    """The pair of final positions whose wires cross in column t of the
    right-labeled wiring diagram: {sigma^{-1}(a_t), sigma^{-1}(a_t + 1)}
    for the suffix product sigma = s_{a_{t+1}} ... s_{a_p}."""
    suffix = perm.from_word(word[t:])
    si = perm.inverse(suffix)
    a = word[t - 1]
    return frozenset((perm.act(si, a), perm.act(si, a + 1)))


@dataclass(frozen=True)
class BumpResult:
    word: tuple[int, ...]
    bound: tuple[int, ...]
    row: int
    col: int
    outcome: str  # "bumped" | "deleted"


def bounded_bump(word: Sequence[int], bound: Sequence[int], t0: int,
                 direction: int) -> BumpResult:
    """Push at t0, then chase defects; delete when the bound hits zero.

    Each position is pushed at most once, and the last pushed position is
    reported as (row, col) for reversibility.
    """
    if len(word) != len(bound):
        raise ValueError("word and bound must have equal lengths")
    # zero entries are permitted only as the transient state built by the
    # reversal recipe, which pushes them up immediately
    if not all(0 <= b <= a for a, b in zip(word, bound)):
        raise ValueError("bound must satisfy 0 <= b_t <= a_t")
    if direction not in (+1, -1):
        raise ValueError("direction must be +1 or -1")
    if not nearly_reduced_at(word, t0):
        raise ValueError(f"{word} is not nearly reduced at {t0}")
    a = tuple(word)
    b = tuple(bound)
    t = t0
    while True:
        a = push(a, t, direction)
        b = push(b, t, direction)
        if b[t - 1] == 0:
            return BumpResult(delete(a, t), delete(b, t), a[t - 1], t,
                              "deleted")
        if perm.is_reduced(a):
            return BumpResult(a, b, a[t - 1], t, "bumped")
        t = defect(a, t)


def little_bump(word: Sequence[int], t0: int, direction: int
                ) -> tuple[int, ...]:
    """The original bump: on reaching zero, shift the whole word up by 1."""
    if not nearly_reduced_at(word, t0):
        raise ValueError(f"{word} is not nearly reduced at {t0}")
    a = tuple(word)
    t = t0
    while True:
        a = push(a, t, direction)
        if a[t - 1] == 0:
            return tuple(x + 1 for x in a)
        if perm.is_reduced(a):
            return a
        t = defect(a, t)


def pipe_dream_from_biword(r: Sequence[int], j: Sequence[int]) -> PipeDream:
    """Rebuild a pipe dream from its diagonal and column words."""
    cells = [(rr - jj + 1, jj) for rr, jj in zip(r, j)]
    return PipeDream.of(cells)


def transition_map(D: PipeDream) -> PipeDream:
    """Weight-bookkeeping bijection behind the transition recurrence.

    Runs the decrementing bounded bump at the crossing of the lex largest
    inversion.  A deletion lands in RP(v) (weight loses x_r); a bump lands
    in RP(v t_{hr}) for some h < r (weight preserved).
    """
    from . import schub
    w = D.permutation()
    if perm.length(w) == 0:
        raise ValueError("transition map needs a nonempty pipe dream")
    r, s = schub.lex_largest_inversion(w)
    rw, _, jw = D.words()
    t0 = next(t for t in range(1, len(rw) + 1)
              if crossing_positions(rw, t) == frozenset((r, s)))
    res = bounded_bump(rw, jw, t0, -1)
    return pipe_dream_from_biword(res.word, res.bound)


# ---------------------------------------------------------------------------
# mitosis


def start_row(D: PipeDream, i: int) -> int:
    """Column of the leftmost non-crossing in row i."""
    q = 1
    while (i, q) in D.crossings:
        q += 1
    return q


def mitosis(D: PipeDream, i: int) -> set[PipeDream]:
    """Offspring D_{i,q} over q in C_i(D): delete (i, q), then push the
    row-i crossings at columns in C_i(D) left of q down to row i+1."""
    cells = D.crossings
    start = start_row(D, i)
    columns = [q for q in range(1, start)
               if (i + 1, q) not in cells]
    out = set()
    for q in columns:
        new_cells = set(cells)
        new_cells.discard((i, q))
        for p in columns:
            if p < q:
                new_cells.discard((i, p))
                new_cells.add((i + 1, p))
        out.add(PipeDream(frozenset(new_cells)))
    return out


# ---------------------------------------------------------------------------
# BB-insertion


def wires_at(D: PipeDream, n: int) -> dict[Cell, tuple[int, int]]:
    """For each non-crossing cell, the labels (left_wire, below_wire) of
    the two pipes bumping there; wires are labeled 1..n down the left.

    The pipe on the W-N arc is "from the left", the one on the S-E arc is
    "from below".  Cells outside the n-staircase see a virtual wire n+1.
    """
    size = n + 1
    left_wire: dict[Cell, int] = {}
    below_wire: dict[Cell, int] = {}
    for label in range(1, size + 1):
        i, j = label, 1
        heading = "E"
        while i >= 1 and j >= 1 and i <= size and j <= size:
            crossed = (i, j) in D.crossings
            if crossed:
                i, j = (i, j + 1) if heading == "E" else (i - 1, j)
            else:
                if heading == "E":
                    left_wire[(i, j)] = label
                    heading = "N"
                    i -= 1
                else:
                    below_wire[(i, j)] = label
                    heading = "E"
                    j += 1
        # wire exits at the top edge
    return {cell: (left_wire.get(cell, 0), below_wire.get(cell, 0))
            for cell in set(left_wire) | set(below_wire)}


def bb_insert(D: PipeDream, i: int, r: int) -> PipeDream:
    """Insertion realizing Monk's rule: multiply the weight by x_i and
    land in RP(w t_{kl}) for a cover with k <= r < l."""
    if not 1 <= i <= r:
        raise ValueError("need 1 <= i <= r")
    w = D.permutation()
    n = max(len(w), r, max((a + b for a, b in D.crossings), default=1))
    cells = set(D.crossings)

    def bump_labels(cs: set[Cell]) -> dict[Cell, tuple[int, int]]:
        return wires_at(PipeDream(frozenset(cs)), n)

    labels = bump_labels(cells)
    row, col = i, None
    for j in range(1, n + 2):
        if (row, j) in cells:
            continue
        k, l = labels.get((row, j), (0, 0))
        if k and l and k <= r < l:
            col = j
            break
    if col is None:
        raise RuntimeError("no insertable bump tile found")
    cells.add((row, col))
    while True:
        E = PipeDream(frozenset(cells))
        if E.is_reduced():
            return E
        # the two wires at the last added crossing cross twice; remove the
        # higher crossing and reinsert further left on its row
        labels = bump_labels(cells - {(row, col)})
        k, l = labels[(row, col)]
        dup = find_double_crossing(cells, n, k, l, exclude=(row, col))
        cells.discard(dup)
        row2, col2 = dup
        labels = bump_labels(cells)
        new_col = None
        for j in range(col2 - 1, 0, -1):
            if (row2, j) in cells:
                continue
            kk, ll = labels.get((row2, j), (0, 0))
            if kk and ll and kk <= r < ll:
                new_col = j
                break
        if new_col is None:
            raise RuntimeError("no reinsertion point found")
        cells.add((row2, new_col))
        row, col = row2, new_col


def find_double_crossing(cells: set[Cell], n: int, k: int, l: int,
                         exclude: Cell) -> Cell:
    """The other cell where wires k and l cross."""
    size = n + 1
    # trace wire k and record the crossings it passes with the wire label
    # met there; simplest is to trace both wires and intersect.
    def path_crossings(label: int) -> set[Cell]:
        i, j = label, 1
        heading = "E"
        out = set()
        while 1 <= i <= size and 1 <= j <= size:
            if (i, j) in cells:
                out.add((i, j))
                i, j = (i, j + 1) if heading == "E" else (i - 1, j)
            else:
                if heading == "E":
                    heading = "N"
                    i -= 1
                else:
                    heading = "E"
                    j += 1
        return out
    shared = path_crossings(k) & path_crossings(l) - {exclude}
    if len(shared) != 1:
        raise RuntimeError(f"wires {k},{l} cross {len(shared)} extra times")
    return next(iter(shared))


# ---------------------------------------------------------------------------
# balanced labellings


def hook_cells(D: frozenset[Cell], cell: Cell) -> tuple[list[Cell],
                                                        list[Cell]]:
    """(arm, leg) of the hook at cell inside the diagram D."""
    i, j = cell
    arm = [(i, j2) for (i2, j2) in D if i2 == i and j2 > j]
    leg = [(i2, j) for (i2, j2) in D if j2 == j and i2 > i]
    return arm, leg


def is_balanced(D: frozenset[Cell], T: dict[Cell, int]) -> bool:
    """Every hook balanced: sorting the hook so values increase weakly
    right-to-left then top-to-bottom can keep the corner entry fixed."""
    for cell in D:
        arm, leg = hook_cells(D, cell)
        vals = [T[c] for c in arm] + [T[c] for c in leg] + [T[cell]]
        c = T[cell]
        below = sum(1 for v in vals if v < c)
        upto = sum(1 for v in vals if v <= c)
        pos = len(arm) + 1
        if not (below < pos <= upto):
            return False
    return True


def canonical_labelling(a: Sequence[int]) -> dict[Cell, int]:
    """The bijective balanced labelling of D(w) recording the order in
    which each inversion is created by the word a."""
    if not perm.is_reduced(a):
        raise ValueError(f"{a} is not reduced")
    w = perm.from_word(a)
    wi = perm.inverse(w)
    n = max(len(w), max(a, default=0) + 1)
    cur = list(range(1, n + 1))
    T: dict[Cell, int] = {}
    for k, letter in enumerate(a, start=1):
        small, large = cur[letter - 1], cur[letter]
        cur[letter - 1], cur[letter] = large, small
        T[(perm.act(wi, large), small)] = k
    return T


def labelling_to_word(w: Perm, T: dict[Cell, int]) -> tuple[int, ...]:
    """Inverse of canonical_labelling."""
    ell = len(T)
    order = sorted(T, key=T.get)
    u = list(perm.pad(w, max(len(w), 1)))
    word = [0] * ell
    for k in range(ell, 0, -1):
        i, j = order[k - 1]
        large = perm.act(w, i)
        p = u.index(large) + 1
        if p >= len(u) or u[p] != j:
            raise ValueError("not a canonical labelling")
        word[k - 1] = p
        u[p - 1], u[p] = u[p], u[p - 1]
    return tuple(word)


def bijective_balanced_labellings(D: frozenset[Cell]) -> list[dict[Cell, int]]:
    """Brute-force BBL(D) (desk scale)."""
    import itertools
    cells = sorted(D)
    out = []
    for vals in itertools.permutations(range(1, len(cells) + 1)):
        T = dict(zip(cells, vals))
        if is_balanced(D, T):
            out.append(T)
    return out


def cfbl(w: Perm) -> list[dict[Cell, int]]:
    """Column-injective flagged balanced labellings of D(w)."""
    D = perm.rothe_diagram(w)
    cells = sorted(D)
    out: list[dict[Cell, int]] = []

    def fill(idx: int, T: dict[Cell, int]) -> None:
        if idx == len(cells):
            if is_balanced(D, T):
                out.append(dict(T))
            return
        i, j = cells[idx]
        for v in range(1, i + 1):
            if any(T.get((i2, j)) == v for (i2, j2) in T if j2 == j):
                continue
            T[(i, j)] = v
            fill(idx + 1, T)
            del T[(i, j)]

    fill(0, {})
    return out


# ---------------------------------------------------------------------------
# word statistics


@dataclass(frozen=True)
class WordStats:
    reduced_words: int
    pipe_dreams: int
    product_identity_ok: bool
    q_identity_ok: bool


def word_stats(w: Perm) -> WordStats:
    """|R(w)|, |RP(w)|, and the two specialization identities.

    The first: ell! * S_w(1,..,1) equals the sum over reduced words of the
    products a_1...a_ell.  The second is its q-analog with q-integers and
    an ascent statistic.
    """
    from . import schub
    ell = perm.length(w)
    n = max(len(w), 1)
    words = list(perm.all_reduced_words(w))
    rp = enumerate_pipe_dreams(w)
    f = schub.schubert(w)

    fact = 1
    for k in range(2, ell + 1):
        fact *= k
    lhs = fact * f.eval_ints({i: 1 for i in range(1, n + 1)})
    rhs = 0
    for a in words:
        prod = 1
        for x in a:
            prod *= x
        rhs += prod
    product_identity_ok = lhs == rhs

    # q-analog: S_w(1, q, ..., q^{n-1}) * [ell]_q! ==
    #   sum over words of prod [a_t]_q * q^{sum of ascent positions}
    lhs_q = LaurentHalfQ.zero()
    for (xe, _), c in f.terms.items():
        power = sum(e * (i) for i, e in enumerate(xe))  # x_i -> q^{i-1}
        lhs_q = lhs_q + LaurentHalfQ.q(power, c)
    lhs_q = lhs_q * q_factorial(ell)
    rhs_q = LaurentHalfQ.zero()
    for a in words:
        term = LaurentHalfQ.one()
        for x in a:
            term = term * q_int(x)
        asc = sum(t for t in range(1, len(a)) if a[t - 1] < a[t])
        rhs_q = rhs_q + term * LaurentHalfQ.q(asc)
    q_ok = lhs_q == rhs_q

    return WordStats(len(words), len(rp), product_identity_ok, q_ok)


def nil_coxeter_schubert_table(n: int) -> dict[Perm, IntPolynomial]:
    """Expand the product of (1 + x_i u_j) factors in the u_w basis.

    Factors are ordered by rows i = 1..n-1, with u-indices descending
    n-1..i within row i; the coefficient of u_w is the Schubert polynomial
    of w for every w in S_n at once.
    """
    table: dict[Perm, IntPolynomial] = {(): IntPolynomial.const(1)}
    for i in range(1, n):
        for j in range(n - 1, i - 1, -1):
            new: dict[Perm, IntPolynomial] = dict(table)
            for w, coeff in table.items():
                u = perm.times_t(w, j, j + 1)
                if perm.length(u) == perm.length(w) + 1:
                    add = coeff * IntPolynomial.x(i)
                    new[u] = new.get(u, IntPolynomial.zero()) + add
            table = new
    return table
