"""Super column insertion, recording data, and rectification by jeu de taquin."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

from .alphabet import STANDARD, GroundData, check_order
from .tableaux import Tableau, TensorElement, is_valid, reading_positions, reading_word


@dataclass(frozen=True)
class InsertionResult:
    p_tableau: Tableau
    # per inserted letter: (column, row) of the new cell, 1-based
    bump_trace: tuple[tuple[int, int], ...]


def _insert(cols: list[list[int]], x: int, rank, M: int) -> int:
    """Column-insert x in place; return the 0-based column that grew.

    An even letter bumps the topmost entry weakly above it, an odd letter
    the topmost entry strictly above it; the bumped entry moves one column
    to the right.
    """
    c = 0
    while True:
        if c == len(cols):
            cols.append([x])
            return c
        col = cols[c]
        rx = rank[x]
        k = 0
        if x > M:
            for y in col:
                if rank[y] > rx:
                    break
                k += 1
        else:
            for y in col:
                if rank[y] >= rx:
                    break
                k += 1
        if k == len(col):
            col.append(x)
            return c
        col[k], x = x, col[k]
        c += 1


def _columns(T: Tableau) -> list[list[int]]:
    if not T.is_straight:
        raise ValueError("insertion needs a straight-shape tableau")
    return T.columns()


def _from_columns(cols: list[list[int]], order: str) -> Tableau:
    height = len(cols[0]) if cols else 0
    rows = [tuple(col[i] for col in cols if i < len(col)) for i in range(height)]
    return Tableau(tuple(rows), order)


def insert_word(g: GroundData, order: str, word: Sequence[int], T: Tableau | None = None) -> InsertionResult:
    """Column-insert ``word`` (first letter first) into T (default: empty)."""
    check_order(order)
    cols = _columns(T) if T is not None else []
    rank = g.rank_table(order)
    trace = []
    for x in word:
        c = _insert(cols, x, rank, g.M)
        trace.append((c + 1, len(cols[c])))
    P = _from_columns(cols, order)
    if not is_valid(g, P):
        raise RuntimeError(f"insertion produced an invalid tableau {P}")
    return InsertionResult(P, tuple(trace))


def column_insert_letter(g: GroundData, order: str, T: Tableau, x: int) -> Tableau:
    return insert_word(g, order, (x,), T).p_tableau


def p_tableau(g: GroundData, x) -> InsertionResult:
    """col(T_k) -> ... -> col(T_2) -> T_1 for a tensor element; a tableau or word
    is inserted into the empty tableau."""
    if isinstance(x, TensorElement):
        first, rest = x.factors[0], x.factors[1:]
        word = [a for T in rest for a in reading_word(T)]
        return insert_word(g, x.order, word, first)
    if isinstance(x, Tableau):
        return insert_word(g, x.order, reading_word(x))
    return insert_word(g, STANDARD, tuple(x))


def recording_tableau(g: GroundData, x: TensorElement) -> tuple[tuple[int, ...], ...]:
    """For T_1 (x) T_2: at each cell of T_2, the column (1-based) that grew when
    that cell's letter was inserted into T_1."""
    if len(x.factors) != 2:
        raise ValueError("recording tableau needs a two-factor element")
    T1, T2 = x.factors
    pos = reading_positions(T2)
    res = insert_word(g, x.order, [T2.rows[i][j] for i, j in pos], T1)
    grid = [[0] * len(r) for r in T2.rows]
    for (i, j), (c, _) in zip(pos, res.bump_trace):
        grid[i][j] = c
    return tuple(tuple(r) for r in grid)


def knuth_equivalent(g: GroundData, order: str, w1: Sequence[int], w2: Sequence[int]) -> bool:
    return insert_word(g, order, w1).p_tableau == insert_word(g, order, w2).p_tableau


# ------------------------------------------------------------ jeu de taquin

def _block_parity(g: GroundData, T: Tableau) -> int:
    parities = {g.parity(a) for _, _, a in T.cells()}
    if len(parities) > 1:
        raise ValueError("rectification is only defined here for single-parity tableaux")
    return parities.pop() if parities else 0


def _transpose(rows: list[list]) -> list[list]:
    width = max((len(r) for r in rows), default=0)
    return [[r[j] for r in rows if j < len(r)] for j in range(width)]


def _slide_all(rows: list[list], rng: random.Random | None) -> list[list]:
    """Classical rectification: columns strict, rows weak."""
    rows = [list(r) for r in rows]
    while True:
        inner = [sum(1 for x in r if x is None) for r in rows]
        corners = [i for i in range(len(rows)) if inner[i] and (i + 1 == len(rows) or inner[i + 1] < inner[i])]
        if not corners:
            break
        i = rng.choice(corners) if rng is not None else corners[-1]
        j = inner[i] - 1
        while True:
            right = rows[i][j + 1] if j + 1 < len(rows[i]) else None
            below = rows[i + 1][j] if i + 1 < len(rows) and j < len(rows[i + 1]) else None
            if right is None and below is None:
                break
            if below is not None and (right is None or below <= right):
                rows[i][j] = below
                i += 1
            else:
                rows[i][j] = right
                j += 1
        if j != len(rows[i]) - 1:
            raise RuntimeError("slide ended inside a row")
        rows[i].pop()
    return [r for r in rows if r]


def _rectify_rows(rows: list[list], odd: bool, rng) -> list[list]:
    if odd:
        return _transpose(_slide_all(_transpose(rows), rng))
    return _slide_all(rows, rng)


def rectify(g: GroundData, T: Tableau, rng: random.Random | None = None) -> Tableau:
    """Straight tableau Knuth-equivalent to a single-parity skew tableau."""
    odd = _block_parity(g, T) == 1
    return Tableau.from_rows(_rectify_rows([list(r) for r in T.rows], odd, rng), T.order)


def _rotate(rows: Sequence[Sequence], r: int, s: int) -> list[list]:
    """Rotate by 180 degrees inside r x s and negate letters (reverses the order)."""
    grid = [[None] * s for _ in range(r)]
    for i, row in enumerate(rows):
        for j, x in enumerate(row):
            if x is not None:
                grid[r - 1 - i][s - 1 - j] = -x
    out = []
    for row in grid:
        k = 0
        while k < s and row[k] is None:
            k += 1
        if any(x is None for x in row[k:]):
            raise ValueError("rotated shape is not skew")
        out.append(row)
    return out


def anti_rectify(g: GroundData, T: Tableau, r: int, s: int, rng: random.Random | None = None) -> Tableau:
    """Tableau of rotated-straight shape in the r x s frame, Knuth-equivalent to T."""
    odd = _block_parity(g, T) == 1
    if len(T.rows) > r or max(T.outer, default=0) > s:
        raise ValueError(f"tableau does not fit in a {r}x{s} frame")
    rect = _rectify_rows(_rotate(T.rows, r, s), odd, rng)
    return Tableau(tuple(tuple(row) for row in _rotate(rect, r, s)), T.order)


def rectify_by_insertion(g: GroundData, T: Tableau) -> Tableau:
    """Independent route: column-insert the reading word into the empty tableau."""
    _block_parity(g, T)
    return insert_word(g, T.order, reading_word(T)).p_tableau


def anti_rectify_by_insertion(g: GroundData, T: Tableau, r: int, s: int) -> Tableau:
    """Independent route for anti_rectify, inserting with the reversed letter order."""
    _block_parity(g, T)
    rot = Tableau(tuple(tuple(None if x is None else -x for x in row) for row in _rotate(T.rows, r, s)), T.order)
    # letters are back to positive; insert in reversed order then rotate back
    base = g.rank_table(T.order)
    rank = {a: -base[a] for a in g.letters}
    cols: list[list[int]] = []
    for x in reading_word(rot):
        _insert(cols, x, rank, g.M)
    rows = [[col[i] for col in cols if i < len(col)] for i in range(len(cols[0]) if cols else 0)]
    back = _rotate(rows, r, s)
    return Tableau(tuple(tuple(None if x is None else -x for x in row) for row in back), T.order)
