"""Hook partitions, graded semistandard tableaux, reading words and enumeration.

A tableau is stored row by row.  Row ``i`` is a tuple whose length is the
outer row length; cells of the inner shape hold ``None``.  Letters are
integers 1..n and validity is relative to an alphabet order (standard or
sigma).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Iterator, Sequence

from .alphabet import SIGMA, STANDARD, GroundData, Weight, check_order

DEFAULT_CELL_CAP = 24


class CapExceeded(RuntimeError):
    """A configured size limit would be exceeded."""


# ---------------------------------------------------------------- partitions

def partition(parts: Iterable[int]) -> tuple[int, ...]:
    """Normalize to a weakly decreasing tuple with trailing zeros removed."""
    p = tuple(int(x) for x in parts)
    if any(x < 0 for x in p) or any(a < b for a, b in zip(p, p[1:])):
        raise ValueError(f"not a partition: {list(p)}")
    while p and p[-1] == 0:
        p = p[:-1]
    return p


def conjugate(lam: Sequence[int]) -> tuple[int, ...]:
    lam = partition(lam)
    if not lam:
        return ()
    return tuple(sum(1 for x in lam if x > j) for j in range(lam[0]))


def size(lam: Sequence[int]) -> int:
    return sum(lam)


def contains(outer: Sequence[int], inner: Sequence[int]) -> bool:
    if len(inner) > len(outer):
        return all(x == 0 for x in inner[len(outer):]) and contains(outer, inner[: len(outer)])
    return all(a >= b for a, b in zip(outer, inner))


def rectangle(r: int, s: int) -> tuple[int, ...]:
    if r < 1 or s < 1:
        raise ValueError(f"rectangle needs r, s >= 1, got ({r}, {s})")
    return (s,) * r


def partitions_of(k: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    if max_part is None:
        max_part = k
    if k == 0:
        yield ()
        return
    for first in range(min(k, max_part), 0, -1):
        for rest in partitions_of(k - first, first):
            yield (first,) + rest


def is_hook(g: GroundData, lam: Sequence[int]) -> bool:
    lam = partition(lam)
    return len(lam) <= g.M or lam[g.M] <= g.N


def hook_violation(g: GroundData, lam: Sequence[int]) -> str:
    lam = partition(lam)
    return f"lambda_{g.M + 1} <= N fails: lambda_{g.M + 1} = {lam[g.M]} > N = {g.N}"


def require_hook(g: GroundData, lam: Sequence[int]) -> tuple[int, ...]:
    lam = partition(lam)
    if not is_hook(g, lam):
        raise ValueError(f"shape {list(lam)} is not an (M|N)-hook partition: {hook_violation(g, lam)}")
    return lam


def hw_weight(g: GroundData, lam: Sequence[int]) -> Weight:
    """Lambda_lambda: first M rows, then the conjugate of the rows below."""
    lam = require_hook(g, lam)
    top = list(lam[: g.M]) + [0] * (g.M - len(lam[: g.M]))
    low = list(conjugate(lam[g.M:]))
    low += [0] * (g.N - len(low))
    return Weight(top + low)


def rotate180(lam: Sequence[int], r: int, s: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """(outer, inner) of the 180-degree rotation of ``lam`` inside the r x s frame."""
    lam = partition(lam)
    if len(lam) > r or (lam and lam[0] > s):
        raise ValueError(f"{list(lam)} does not fit in a {r}x{s} frame")
    padded = list(lam) + [0] * (r - len(lam))
    inner = tuple(s - padded[r - 1 - i] for i in range(r))
    return (s,) * r, inner


def complement_in_rectangle(lam: Sequence[int], r: int, s: int) -> tuple[int, ...]:
    """The 180-degree rotation of (s^r)/lam, as a straight partition."""
    lam = partition(lam)
    padded = list(lam) + [0] * (r - len(lam))
    return partition(s - padded[r - 1 - i] for i in range(r))


# ------------------------------------------------------------------ tableaux

@dataclass(frozen=True)
class Tableau:
    rows: tuple[tuple[int | None, ...], ...]
    order: str = STANDARD

    def __post_init__(self):
        check_order(self.order)
        for row in self.rows:
            seen = False
            for x in row:
                if x is None and seen:
                    raise ValueError("inner cells must form a left-justified prefix of each row")
                seen = seen or x is not None

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int | None]], order: str = STANDARD) -> "Tableau":
        rs = [tuple(r) for r in rows]
        while rs and not rs[-1]:
            rs.pop()
        return cls(tuple(rs), order)

    @cached_property
    def outer(self) -> tuple[int, ...]:
        return tuple(len(r) for r in self.rows)

    @cached_property
    def inner(self) -> tuple[int, ...]:
        return partition(sum(1 for x in r if x is None) for r in self.rows)

    @property
    def is_straight(self) -> bool:
        return not self.inner

    @property
    def num_cells(self) -> int:
        return sum(self.outer) - sum(self.inner)

    def cells(self) -> Iterator[tuple[int, int, int]]:
        """(row, col, letter), 0-based, row-major."""
        for i, row in enumerate(self.rows):
            for j, x in enumerate(row):
                if x is not None:
                    yield i, j, x

    def columns(self) -> list[list[int]]:
        width = max(self.outer, default=0)
        return [[row[j] for row in self.rows if j < len(row) and row[j] is not None] for j in range(width)]

    def entry(self, i: int, j: int) -> int | None:
        return self.rows[i][j]

    def with_order(self, order: str) -> "Tableau":
        return Tableau(self.rows, order)

    def replace(self, i: int, j: int, letter: int) -> "Tableau":
        row = list(self.rows[i])
        row[j] = letter
        return Tableau(self.rows[:i] + (tuple(row),) + self.rows[i + 1:], self.order)

    def to_lists(self) -> list[list[int | None]]:
        return [list(r) for r in self.rows]

    def __str__(self):
        return "/".join("".join("." if x is None else _glyph(x) for x in r) for r in self.rows) or "()"


def _glyph(x: int) -> str:
    return str(x) if x < 10 else f"({x})"


def is_valid(g: GroundData, T: Tableau) -> bool:
    """Semistandard condition in T's order: weak rows/columns, even letters strict in
    columns, odd letters strict in rows."""
    rank = g.rank_table(T.order)
    M = g.M
    rows = T.rows
    for i, row in enumerate(rows):
        if i and len(row) > len(rows[i - 1]):
            return False
        prev = None
        for j, x in enumerate(row):
            if x is None:
                continue
            if not 1 <= x <= g.n:
                return False
            if prev is not None:
                if rank[prev] > rank[x] or (prev == x and x > M):
                    return False
            prev = x
            if i and j < len(rows[i - 1]):
                up = rows[i - 1][j]
                if up is None:
                    continue
                if rank[up] > rank[x] or (up == x and x <= M):
                    return False
    return True


def require_valid(g: GroundData, T: Tableau) -> Tableau:
    if not is_valid(g, T):
        raise ValueError(f"tableau {T} is not semistandard for (M,N)=({g.M},{g.N}) in {T.order} order")
    return T


def reading_positions(T: Tableau) -> list[tuple[int, int]]:
    """Cells in reading order: columns right to left, each column top to bottom."""
    width = max(T.outer, default=0)
    out = []
    for j in range(width - 1, -1, -1):
        for i, row in enumerate(T.rows):
            if j < len(row) and row[j] is not None:
                out.append((i, j))
    return out


def reading_word(T: Tableau) -> tuple[int, ...]:
    return tuple(T.rows[i][j] for i, j in reading_positions(T))


def weight_of(g: GroundData, x) -> Weight:
    """Letter multiplicities of a tableau, a tensor element or a word."""
    v = [0] * g.n
    for a in _letters(x):
        v[a - 1] += 1
    return Weight(v)


def _letters(x) -> Iterator[int]:
    if isinstance(x, Tableau):
        for _, _, a in x.cells():
            yield a
    elif isinstance(x, TensorElement):
        for T in x.factors:
            yield from _letters(T)
    else:
        yield from x


def genuine_highest_tableau(g: GroundData, lam: Sequence[int]) -> Tableau:
    """H_lambda: row i holds i for i <= M; below row M, column j holds M+j."""
    lam = require_hook(g, lam)
    rows = []
    for i, length in enumerate(lam, start=1):
        if i <= g.M:
            rows.append((i,) * length)
        else:
            rows.append(tuple(g.M + j for j in range(1, length + 1)))
    return Tableau(tuple(rows))


def genuine_lowest_rectangle(g: GroundData, r: int, s: int) -> Tableau:
    """Lowest weight element of SST((s^r)) for r > M: each row is n-s+1..n."""
    lam = require_hook(g, rectangle(r, s))
    if r <= g.M:
        raise ValueError("closed form only for r > M; use lowest_by_search")
    row = tuple(range(g.n - s + 1, g.n + 1))
    return Tableau((row,) * len(lam))


@dataclass(frozen=True)
class TensorElement:
    """b_1 (x) b_2 (x) ... ; factors are listed left to right."""

    factors: tuple[Tableau, ...]

    def __post_init__(self):
        if not self.factors:
            raise ValueError("tensor element needs at least one factor")
        if len({T.order for T in self.factors}) != 1:
            raise ValueError("all factors must share one alphabet order")

    @classmethod
    def of(cls, *factors: Tableau) -> "TensorElement":
        return cls(tuple(factors))

    @property
    def order(self) -> str:
        return self.factors[0].order

    def __str__(self):
        return " (x) ".join(str(T) for T in self.factors)


def tensor_reading(x: TensorElement) -> tuple[tuple[int, ...], list[tuple[int, int, int]]]:
    """Concatenated reading word (left factor first) and (factor, row, col) per letter."""
    word: list[int] = []
    where: list[tuple[int, int, int]] = []
    for k, T in enumerate(x.factors):
        for i, j in reading_positions(T):
            word.append(T.rows[i][j])
            where.append((k, i, j))
    return tuple(word), where


# --------------------------------------------------------------- enumeration

def _strip_extensions(cur: tuple[int, ...], target: tuple[int, ...], horizontal: bool) -> Iterator[tuple[int, ...]]:
    """Shapes nu with cur <= nu <= target, nu/cur a horizontal (or vertical) strip."""
    k = len(target)
    out = [0] * k

    def rec(i: int):
        if i == k:
            yield tuple(out)
            return
        lo = cur[i]
        hi = target[i]
        if i:
            hi = min(hi, out[i - 1])
        if horizontal:
            if i:
                hi = min(hi, cur[i - 1])
        else:
            hi = min(hi, cur[i] + 1)
        for v in range(lo, hi + 1):
            out[i] = v
            yield from rec(i + 1)

    yield from rec(0)


def _chains(g: GroundData, outer: tuple[int, ...], inner: tuple[int, ...], order: str):
    """Yield sequences of shapes inner = nu_0 <= nu_1 <= ... <= nu_n = outer, one step
    per letter in order: even letters add horizontal strips, odd ones vertical strips."""
    letters = g.letters_in_order(order)
    start = tuple(inner) + (0,) * (len(outer) - len(inner))

    def rec(k: int, cur: tuple[int, ...], acc: list):
        if k == len(letters):
            if cur == outer:
                yield list(acc)
            return
        horizontal = not g.is_odd(letters[k])
        for nxt in _strip_extensions(cur, outer, horizontal):
            acc.append(nxt)
            yield from rec(k + 1, nxt, acc)
            acc.pop()

    yield from rec(0, start, [])


def enumerate_sst(g: GroundData, shape, order: str = STANDARD, cap: int = DEFAULT_CELL_CAP) -> list[Tableau]:
    """All semistandard tableaux of a straight shape (partition) or skew shape
    ``(outer, inner)``, sorted by rows."""
    check_order(order)
    outer, inner = _shape_pair(shape)
    if sum(outer) - sum(inner) > cap:
        raise CapExceeded(f"shape has {sum(outer) - sum(inner)} cells, cap is {cap}")
    letters = g.letters_in_order(order)
    result = []
    for chain in _chains(g, outer, inner, order):
        rows = [[None] * o for o in outer]
        prev = tuple(inner) + (0,) * (len(outer) - len(inner))
        for a, nu in zip(letters, chain):
            for i, (p, q) in enumerate(zip(prev, nu)):
                for j in range(p, q):
                    rows[i][j] = a
            prev = nu
        result.append(Tableau(tuple(tuple(r) for r in rows), order))
    result.sort(key=lambda T: T.rows)
    return result


def count_sst(g: GroundData, shape, order: str = STANDARD) -> int:
    """|SST| of a straight or skew shape, by dynamic programming over strip chains."""
    check_order(order)
    outer, inner = _shape_pair(shape)
    letters = g.letters_in_order(order)
    horiz = tuple(not g.is_odd(a) for a in letters)
    start = tuple(inner) + (0,) * (len(outer) - len(inner))
    return _count(horiz, outer, 0, start)


@lru_cache(maxsize=None)
def _count(horiz: tuple[bool, ...], outer: tuple[int, ...], k: int, cur: tuple[int, ...]) -> int:
    if k == len(horiz):
        return int(cur == outer)
    return sum(_count(horiz, outer, k + 1, nxt) for nxt in _strip_extensions(cur, outer, horiz[k]))


def _shape_pair(shape) -> tuple[tuple[int, ...], tuple[int, ...]]:
    if shape and isinstance(shape[0], (tuple, list)):
        outer, inner = partition(shape[0]), partition(shape[1])
        if not contains(outer, inner):
            raise ValueError(f"inner shape {list(inner)} not contained in {list(outer)}")
        return outer, inner
    return partition(shape), ()


# ----------------------------------------------------------------- encoding

def tableau_to_json(T: Tableau) -> dict:
    return {
        "shape_outer": list(T.outer),
        "shape_inner": list(T.inner),
        "rows": [[x for x in r if x is not None] for r in T.rows],
        "order": T.order,
    }


def tableau_from_json(data: dict) -> Tableau:
    """Inverse of ``tableau_to_json``; raises ValueError on malformed input."""
    if not isinstance(data, dict):
        raise ValueError("tableau must be a JSON object")
    try:
        outer = partition(data["shape_outer"])
        inner = partition(data.get("shape_inner", []))
        rows = data["rows"]
        order = data.get("order", STANDARD)
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed tableau object: {exc}") from exc
    check_order(order)
    if not isinstance(rows, list) or len(rows) != len(outer):
        raise ValueError("rows do not match shape_outer")
    inner = tuple(inner) + (0,) * (len(outer) - len(inner))
    if len(inner) > len(outer):
        raise ValueError("shape_inner longer than shape_outer")
    out = []
    for row, o, p in zip(rows, outer, inner):
        if not isinstance(row, list) or len(row) != o - p or not all(isinstance(x, int) and not isinstance(x, bool) for x in row):
            raise ValueError(f"row {row!r} does not fill {o - p} cells with integers")
        out.append((None,) * p + tuple(row))
    return Tableau(tuple(out), order)


def letter_label(x: int, order: str) -> str:
    return f"{x}'" if order == SIGMA else str(x)
