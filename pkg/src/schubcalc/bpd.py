"""Bumpless pipe dreams: droop generation, the alternating-sign-matrix
bijection, and the pop/compatible-pair bijection.

Tiles on the n x n grid, one of six kinds; pipes enter at the south edge
and travel north/east to the east edge.  Glyphs follow the tile names:

    '.' blank   '+' cross   '-' horizontal   '|' vertical
    'r' up elbow (south->east)   'j' down elbow (west->north)

The permutation is read down the east edge: w(row) is the south starting
column of the pipe exiting at that row.  The up elbows of the Rothe
bumpless pipe dream then sit at the cells (i, w(i)) and the blank tiles
fill the Rothe diagram of w, so the blank rows carry the monomial weight.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from . import perm
from .perm import Perm
from .poly import IntPolynomial

BLANK, CROSS, HORIZ, VERT, RTILE, JTILE = ".", "+", "-", "|", "r", "j"
GLYPHS = {BLANK, CROSS, HORIZ, VERT, RTILE, JTILE}

# strand content per tile: subsets of {"H", "V", "SE", "WN"}
_STRANDS = {
    BLANK: frozenset(),
    HORIZ: frozenset({"H"}),
    VERT: frozenset({"V"}),
    CROSS: frozenset({"H", "V"}),
    RTILE: frozenset({"SE"}),
    JTILE: frozenset({"WN"}),
}
_TILE_OF = {v: k for k, v in _STRANDS.items()}
_BUMP = frozenset({"SE", "WN"})  # only as a transient state inside pop


@dataclass(frozen=True)
class BumplessPipeDream:
    tiles: tuple[str, ...]  # row-major n*n glyphs
    n: int

    @staticmethod
    def from_rows(rows: Iterable[str]) -> "BumplessPipeDream":
        rows = [r.strip() for r in rows if r.strip()]
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValueError("tile grid must be square")
        flat = "".join(rows)
        if any(ch not in GLYPHS for ch in flat):
            raise ValueError(f"bad tile glyph in {flat!r}")
        return BumplessPipeDream(tuple(flat), n)

    @staticmethod
    def parse(text: str) -> "BumplessPipeDream":
        return BumplessPipeDream.from_rows(text.strip().splitlines())

    def tile(self, i: int, j: int) -> str:
        return self.tiles[(i - 1) * self.n + (j - 1)]

    def ascii(self) -> str:
        return "\n".join(
            "".join(self.tile(i, j) for j in range(1, self.n + 1))
            for i in range(1, self.n + 1))

    def blanks(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(1, self.n + 1)
                for j in range(1, self.n + 1) if self.tile(i, j) == BLANK]

    def crosses(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(1, self.n + 1)
                for j in range(1, self.n + 1) if self.tile(i, j) == CROSS]

    def weight(self) -> tuple[int, ...]:
        rows = [0] * self.n
        for i, _ in self.blanks():
            rows[i - 1] += 1
        return tuple(rows)

    def monomial(self) -> IntPolynomial:
        return IntPolynomial.monomial(self.weight())

    def double_monomial(self) -> IntPolynomial:
        total = IntPolynomial.const(1)
        for i, j in sorted(self.blanks()):
            total = total * (IntPolynomial.x(i) - IntPolynomial.y(j))
        return total

    # -- pipes ---------------------------------------------------------
    def trace(self, start_col: int) -> tuple[int, list[tuple[int, int]]]:
        """Follow the pipe entering at the south edge of start_col.

        Returns (exit_row, list of cells where it sits on a cross).
        """
        i, j = self.n, start_col
        heading = "N"
        crossings = []
        while True:
            t = self.tile(i, j)
            if t == CROSS:
                crossings.append((i, j))
            elif t == VERT:
                if heading != "N":
                    raise ValueError(f"broken pipe at {(i, j)}")
            elif t == HORIZ:
                if heading != "E":
                    raise ValueError(f"broken pipe at {(i, j)}")
            elif t == RTILE:
                if heading != "N":
                    raise ValueError(f"broken pipe at {(i, j)}")
                heading = "E"
            elif t == JTILE:
                if heading != "E":
                    raise ValueError(f"broken pipe at {(i, j)}")
                heading = "N"
            else:
                raise ValueError(f"pipe ran into a blank at {(i, j)}")
            if heading == "N":
                i -= 1
                if i == 0:
                    raise ValueError("pipe escaped through the north edge")
            else:
                j += 1
                if j > self.n:
                    return i, crossings

    def permutation(self) -> Perm:
        exit_of = {}
        for c in range(1, self.n + 1):
            row, _ = self.trace(c)
            exit_of[row] = c
        return perm.trim(tuple(exit_of[r] for r in range(1, self.n + 1)))

    def crossing_pairs(self) -> dict[tuple[int, int], list[int]]:
        """Map each cross cell to the two starting columns through it."""
        at: dict[tuple[int, int], list[int]] = {}
        for c in range(1, self.n + 1):
            _, crossings = self.trace(c)
            for cell in crossings:
                at.setdefault(cell, []).append(c)
        return at

    def is_reduced(self) -> bool:
        pairs = set()
        for cell, cols in self.crossing_pairs().items():
            key = tuple(sorted(cols))
            if key in pairs:
                return False
            pairs.add(key)
        return True


def rothe_bpd(w: Perm, n: int | None = None) -> BumplessPipeDream:
    """Each pipe turns exactly once; blanks fill the Rothe diagram."""
    if n is None:
        n = max(len(w), 1)
    ww = perm.pad(w, n)
    turn = {(i, ww[i - 1]) for i in range(1, n + 1)}
    grid = []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            has_v = i > dict_row(turn, j)  # below the turn in column j
            has_h = j > ww[i - 1]          # right of the turn in row i
            if (i, j) in turn:
                grid.append(RTILE)
            elif has_v and has_h:
                grid.append(CROSS)
            elif has_v:
                grid.append(VERT)
            elif has_h:
                grid.append(HORIZ)
            else:
                grid.append(BLANK)
    return BumplessPipeDream(tuple(grid), n)


def dict_row(turn: set[tuple[int, int]], col: int) -> int:
    for i, j in turn:
        if j == col:
            return i
    raise ValueError(f"no turn in column {col}")


# ---------------------------------------------------------------------------
# strand-level editing

Strands = frozenset


def _to_strands(D: BumplessPipeDream) -> list[list[frozenset]]:
    return [[_STRANDS[D.tile(i, j)] for j in range(1, D.n + 1)]
            for i in range(1, D.n + 1)]


def _from_strands(grid: list[list[frozenset]], n: int) -> BumplessPipeDream:
    flat = []
    for row in grid:
        for s in row:
            if s not in _TILE_OF:
                raise ValueError(f"invalid strand set {set(s)}")
            flat.append(_TILE_OF[s])
    return BumplessPipeDream(tuple(flat), n)


def _swap(grid, i, j, old, new) -> None:
    s = grid[i - 1][j - 1]
    if old not in s or (new in s and new != old):
        raise ValueError(f"cannot rewrite {set(s)} at {(i, j)}")
    grid[i - 1][j - 1] = (s - {old}) | {new}


def _add(grid, i, j, strand, allow_bump: bool = False) -> None:
    s = grid[i - 1][j - 1]
    if strand in s or (not allow_bump and s & _BUMP
                       and strand in ("SE", "WN")):
        raise ValueError(f"cannot add {strand} at {(i, j)}")
    grid[i - 1][j - 1] = s | {strand}


def _remove(grid, i, j, strand) -> None:
    s = grid[i - 1][j - 1]
    if strand not in s:
        raise ValueError(f"cannot remove {strand} at {(i, j)}")
    grid[i - 1][j - 1] = s - {strand}


def droop(D: BumplessPipeDream, i: int, j: int, a: int, b: int
          ) -> BumplessPipeDream:
    """Move the up elbow at (i, j) to the blank at (i+a, j+b), rerouting
    the pipe along the lower path."""
    if D.tile(i, j) != RTILE or D.tile(i + a, j + b) != BLANK:
        raise ValueError("droop needs an up elbow and a blank corner")
    grid = _to_strands(D)
    # corner rewrites
    _remove(grid, i, j, "SE")
    if "V" in grid[i + a - 1][j - 1]:
        _swap(grid, i + a, j, "V", "SE")
    else:
        _swap(grid, i + a, j, "WN", "H")
    if "H" in grid[i - 1][j + b - 1]:
        _swap(grid, i, j + b, "H", "SE")
    else:
        _swap(grid, i, j + b, "WN", "V")
    _add(grid, i + a, j + b, "WN")
    # shifted runs
    for r in range(i + 1, i + a):
        _remove(grid, r, j, "V")
        _add(grid, r, j + b, "V")
    for c in range(j + 1, j + b):
        _remove(grid, i, c, "H")
        _add(grid, i + a, c, "H")
    return _from_strands(grid, D.n)


def droop_targets(D: BumplessPipeDream) -> Iterator[BumplessPipeDream]:
    """All valid droops that keep the diagram reduced."""
    for i in range(1, D.n + 1):
        for j in range(1, D.n + 1):
            if D.tile(i, j) != RTILE:
                continue
            for a in range(1, D.n - i + 1):
                for b in range(1, D.n - j + 1):
                    if D.tile(i + a, j + b) != BLANK:
                        continue
                    try:
                        E = droop(D, i, j, a, b)
                    except ValueError:
                        continue
                    if E.is_reduced():
                        yield E


def enumerate_bpds(w: Perm, n: int | None = None) -> set[BumplessPipeDream]:
    """BPD(w): droop closure of the Rothe bumpless pipe dream."""
    start = rothe_bpd(w, n)
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for D in frontier:
            for E in droop_targets(D):
                if E not in seen:
                    seen.add(E)
                    nxt.append(E)
        frontier = nxt
    return seen


def all_bpds(n: int, reduced_only: bool = False
             ) -> Iterator[BumplessPipeDream]:
    """Exhaustive tiling search with pipe-continuity constraints."""
    # edge occupancy per tile: (N, S, E, W)
    occ = {BLANK: (0, 0, 0, 0), HORIZ: (0, 0, 1, 1), VERT: (1, 1, 0, 0),
           CROSS: (1, 1, 1, 1), RTILE: (0, 1, 1, 0), JTILE: (1, 0, 0, 1)}
    by_nw: dict[tuple[int, int], list[str]] = {}
    for t, (N, S, E, W) in occ.items():
        by_nw.setdefault((N, W), []).append(t)

    grid: list[str] = []

    def place(idx: int) -> Iterator[BumplessPipeDream]:
        if idx == n * n:
            yield BumplessPipeDream(tuple(grid), n)
            return
        i, j = divmod(idx, n)
        north = occ[grid[(i - 1) * n + j]][1] if i > 0 else 0
        west = occ[grid[i * n + (j - 1)]][2] if j > 0 else 0
        for t in by_nw[(north, west)]:
            N, S, E, W = occ[t]
            if i == n - 1 and S != 1:
                continue
            if j == n - 1 and E != 1:
                continue
            grid.append(t)
            yield from place(idx + 1)
            grid.pop()

    for D in place(0):
        if not reduced_only or D.is_reduced():
            yield D


# ---------------------------------------------------------------------------
# alternating sign matrices

ASM = tuple[tuple[int, ...], ...]


def to_asm(D: BumplessPipeDream) -> ASM:
    """Up elbow -> +1, down elbow -> -1, else 0."""
    return tuple(
        tuple(1 if D.tile(i, j) == RTILE else
              -1 if D.tile(i, j) == JTILE else 0
              for j in range(1, D.n + 1))
        for i in range(1, D.n + 1))


def is_asm(m: ASM) -> bool:
    n = len(m)
    if any(len(row) != n for row in m):
        return False
    for line in list(m) + [tuple(r[j] for r in m) for j in range(n)]:
        nz = [v for v in line if v]
        if not nz:
            return False
        if nz[0] != 1 or nz[-1] != 1 or sum(nz) != 1:
            return False
        if any(nz[k] == nz[k + 1] for k in range(len(nz) - 1)):
            return False
    return True


def from_asm(m: ASM) -> BumplessPipeDream:
    """Reconstruct the tiling from row and column partial sums."""
    if not is_asm(m):
        raise ValueError("not an alternating sign matrix")
    n = len(m)
    grid = []
    for i in range(n):
        for j in range(n):
            v = m[i][j]
            if v == 1:
                grid.append(RTILE)
            elif v == -1:
                grid.append(JTILE)
            else:
                row_sum = sum(m[i][:j + 1])
                col_sum = sum(m[r][j] for r in range(i + 1))
                if row_sum and col_sum:
                    grid.append(CROSS)
                elif row_sum:
                    grid.append(HORIZ)
                elif col_sum:
                    grid.append(VERT)
                else:
                    grid.append(BLANK)
    return BumplessPipeDream(tuple(grid), n)


# ---------------------------------------------------------------------------
# pop and the compatible-pair bijection


def undroop(grid, i: int, j: int, a: int) -> None:
    """Move the down elbow at (i+a, j+1) of the pipe through column j+1 to
    the blank at (i, j), shifting the pipe one column left.

    Rows strictly between the corners see four situations: a plain
    vertical shift, a parallel pair of verticals that swap pipe
    ownership only, and the top/bottom of another pipe's zigzag in the
    left column, which shifts right into the vacated column.
    """
    _add(grid, i, j, "SE")
    if "SE" in grid[i + a - 1][j - 1]:
        _swap(grid, i + a, j, "SE", "V")
    else:
        _swap(grid, i + a, j, "H", "WN")
    if "SE" in grid[i - 1][j]:
        _swap(grid, i, j + 1, "SE", "H")
    else:
        _swap(grid, i, j + 1, "V", "WN")
    _remove(grid, i + a, j + 1, "WN")
    for r in range(i + 1, i + a):
        s1, s2 = grid[r - 1][j - 1], grid[r - 1][j]
        if "SE" in s1:
            # zigzag top: the other pipe now turns in the right column
            if s2 != frozenset({"H", "V"}):
                raise ValueError(f"bad zigzag top at {(r, j)}")
            grid[r - 1][j - 1] = frozenset({"V"})
            grid[r - 1][j] = frozenset({"SE"})
        elif "WN" in s1:
            # zigzag bottom: the other pipe enters one column later
            if s2 != frozenset({"V"}):
                raise ValueError(f"bad zigzag bottom at {(r, j)}")
            grid[r - 1][j - 1] = frozenset({"H", "V"})
            grid[r - 1][j] = frozenset({"WN"})
        elif "V" in s1:
            # parallel verticals swap ownership; tiles unchanged
            if "V" not in s2:
                raise ValueError(f"missing parallel strand at {(r, j + 1)}")
        else:
            _add(grid, r, j, "V")
            _remove(grid, r, j + 1, "V")


def pop(D: BumplessPipeDream) -> tuple[BumplessPipeDream, int, int]:
    """One step of the compatible-pair bijection.

    Marks the rightmost blank in the first blank row i, repeatedly
    undroops the pipe just right of the marker, and finally removes one
    crossing; returns (new diagram, r, i) with perm(new) = s_r * perm(D).
    """
    w = D.permutation()
    if perm.length(w) == 0:
        raise ValueError("pop needs a non-identity diagram")
    n = D.n
    blanks = D.blanks()
    i0 = min(b[0] for b in blanks)
    y = max(b[1] for b in blanks if b[0] == i0)
    x = i0
    grid = _to_strands(D)

    def tile_at(r, c):
        return grid[r - 1][c - 1]

    while True:
        col = y + 1
        if not ({"V", "SE"} & tile_at(x, col)):
            raise ValueError(f"no pipe right of marker at {(x, y)}")
        # Walk down the pipe's run in this column to where it entered:
        # either a down elbow (it came from the west) or the south edge.
        entry_row = None
        r = x + 1
        while r <= n:
            s = tile_at(r, col)
            if "WN" in s:
                entry_row = r
                break
            if "V" not in s:
                raise ValueError(f"pipe run broke at {(r, col)}")
            r += 1
        if entry_row is None:
            # The pipe is y+1 itself, straight from the south edge: cut
            # its crossing with pipe y and absorb the marker, so the
            # weight in the marked row drops by one.
            xp = _find_crossing_of_neighbor(grid, n, x, y)
            _remove(grid, xp, col, "H")
            _remove(grid, xp, col, "V")
            _add(grid, xp, col, "SE")
            _add(grid, xp, col, "WN", allow_bump=True)
            undroop(grid, x, y, xp - x)
            return _from_strands(grid, n), y, i0
        undroop(grid, x, y, entry_row - x)
        # marker moves to the freed cell, then to the right end of its
        # horizontally contiguous blank block
        x, y = entry_row, col
        while y + 1 <= n and tile_at(x, y + 1) == frozenset():
            y += 1


def _find_crossing_of_neighbor(grid, n: int, x: int, y: int) -> int:
    """Row of the crossing between pipes y and y+1 (pipe y+1 runs straight
    up column y+1 from the south edge past row x)."""
    col = y + 1
    # candidate crossings on column y+1 below x
    for r in range(x + 1, n + 1):
        if {"H", "V"} <= grid[r - 1][col - 1]:
            # is the horizontal pipe through (r, col) the pipe from column y?
            if _horizontal_pipe_start(grid, n, r, col) == y:
                return r
    raise ValueError("no crossing with the neighbor pipe found")


def _horizontal_pipe_start(grid, n: int, r: int, c: int) -> int:
    """South starting column of the pipe crossing cell (r, c) horizontally."""
    i, j = r, c
    # walk west along the horizontal strand to the pipe's turning point
    while True:
        j -= 1
        s = grid[i - 1][j - 1]
        if "SE" in s:
            # pipe turns here; continue straight down its vertical run
            break
        if "WN" in s or "H" in s:
            if "WN" in s:
                raise ValueError("unexpected down elbow while walking west")
            continue
        raise ValueError("horizontal strand broke while walking west")
    while True:
        if i == n:
            return j
        i += 1
        s = grid[i - 1][j - 1]
        if "V" in s:
            continue
        if "WN" in s:
            # entered from the west: keep walking west along row i
            while True:
                j -= 1
                s = grid[i - 1][j - 1]
                if "SE" in s:
                    break
                if "H" in s:
                    continue
                raise ValueError("pipe walk failed")
            continue
        raise ValueError("pipe walk failed")


def phi(D: BumplessPipeDream) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Iterate pop to a reduced compatible pair (r, i) for perm(D)."""
    w = D.permutation()
    ell = perm.length(w)
    rs, iis = [], []
    cur = D
    for _ in range(ell):
        cur, r, i = pop(cur)
        rs.append(r)
        iis.append(i)
    return tuple(rs), tuple(iis)
