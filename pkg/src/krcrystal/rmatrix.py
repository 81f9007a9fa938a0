"""Genuine highest weight vectors of B^{r1,s1} (x) B^{r2,s2}, the combinatorial
R matrix, the energy function, raising-sequence witnesses and Yang-Baxter."""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterable, Iterator, Sequence

from .affine import TensorCrystal, apply_e0_tensor, node0_target
from .alphabet import STANDARD, GroundData
from .crystal import apply_e
from .insertion import _insert
from .tableaux import (
    Tableau,
    TensorElement,
    complement_in_rectangle,
    conjugate,
    genuine_highest_tableau,
    is_hook,
    partition,
    rectangle,
    require_hook,
)

Label = tuple[int, int]


# ------------------------------------------------------------------- shapes

def lambda_hat(lam: Sequence[int], r1: int, s1: int, r2: int, s2: int) -> tuple[int, ...]:
    """Place lam to the right of (s2^r2), then the rotated complement of lam in
    (s1^r1) below it."""
    lam = partition(lam)
    r = min(r1, r2)
    if len(lam) > r or (lam and lam[0] > s1):
        raise ValueError(f"{list(lam)} must sit inside ({s1}^{r})")
    top = [s2 + (lam[i] if i < len(lam) else 0) for i in range(r2)]
    rows = top + list(complement_in_rectangle(lam, r1, s1))
    if any(a < b for a, b in zip(rows, rows[1:])):
        raise ValueError(f"placing {list(lam)} gives rows {rows}, which is not a partition")
    return partition(rows)


def _sub_partitions(width: int, height: int, lower: Sequence[int] = ()) -> Iterator[tuple[int, ...]]:
    """Partitions nu with lower <= nu <= (width^height)."""
    lower = list(lower) + [0] * height

    def rec(i: int, cap: int, acc: list[int]):
        if i == height:
            yield partition(acc)
            return
        for v in range(lower[i], cap + 1):
            acc.append(v)
            yield from rec(i + 1, v, acc)
            acc.pop()

    yield from rec(0, width, [])


def _part(lam: Sequence[int], i: int) -> int:
    """lam_i with 1-based i, zero past the end."""
    return lam[i - 1] if 1 <= i <= len(lam) else 0


def nu_bar(nu: Sequence[int], r1: int, s1: int, r2: int, s2: int, M: int) -> tuple[int, ...]:
    """Add s2-s1 columns of height min(r1, M) on the left (s1 <= s2) or remove the
    leftmost s1-s2 columns (s1 >= s2); rows beyond r2 are dropped."""
    h = min(r1, M)
    if s1 <= s2:
        rows = [_part(nu, i) + (s2 - s1 if i <= h else 0) for i in range(1, max(h, len(nu)) + 1)]
    else:
        rows = [max(_part(nu, i) - (s1 - s2), 0) for i in range(1, len(nu) + 1)]
    return partition(rows[:r2])


@dataclass(frozen=True)
class HwvDatum:
    lam: tuple[int, ...]
    case: str  # "both_large", "both_small" or "mixed"
    mu: tuple[int, ...]
    nu: tuple[int, ...]
    pair: TensorElement
    lam_hat: tuple[int, ...]


def _t2_horizontal(g: GroundData, nub: Sequence[int], r2: int, s2: int) -> Tableau:
    rows = []
    for i in range(1, r2 + 1):
        k = _part(nub, i)
        rows.append((i,) * k + tuple(g.M + j for j in range(1, s2 - k + 1)))
    return Tableau(tuple(rows))


def _t2_with_column_run(g: GroundData, nub: Sequence[int], r1: int, r2: int, s2: int) -> Tableau:
    grid = [[0] * s2 for _ in range(r2)]
    colh = list(conjugate(nub)) + [0] * s2
    for i in range(r2):
        for j in range(_part(nub, i + 1)):
            grid[i][j] = i + 1
    eta = []
    for j in range(s2):
        top = colh[j]
        bottom = min(top + g.M - r1, r2)
        for t, i in enumerate(range(top, bottom)):
            grid[i][j] = r1 + 1 + t
        eta.append(max(bottom, top))
    for i in range(r2):
        start = sum(1 for j in range(s2) if eta[j] > i)
        for t, j in enumerate(range(start, s2)):
            grid[i][j] = g.M + 1 + t
    return Tableau(tuple(tuple(r) for r in grid))


def _t1_both_large(g: GroundData, mu: Sequence[int], r1: int, s1: int, s2: int) -> Tableau:
    rows = [(i,) * s1 for i in range(1, g.M + 1)]
    k = r1 - g.M
    for p in range(k):
        m = _part(mu, k - p)
        left = s1 - m
        rows.append(tuple(g.M + j for j in range(1, left + 1)) + tuple(g.M + s2 + j for j in range(1, m + 1)))
    return Tableau(tuple(rows))


def genuine_hwv_pairs(g: GroundData, r1: int, s1: int, r2: int, s2: int) -> list[HwvDatum]:
    """Closed-form list of the genuine highest weight vectors of
    B^{r1,s1} (x) B^{r2,s2}, one per component."""
    require_hook(g, rectangle(r1, s1))
    require_hook(g, rectangle(r2, s2))
    M, N = g.M, g.N
    r = min(r1, r2)
    d = max(s1 - s2, 0)
    out = []

    def emit(lam, case, mu, nu, T1, T2):
        try:
            hat = lambda_hat(lam, r1, s1, r2, s2)
        except ValueError:
            return
        if is_hook(g, hat):
            out.append(HwvDatum(partition(lam), case, partition(mu), partition(nu), TensorElement((T1, T2)), hat))

    if r1 > M and r2 > M:
        for nu in _sub_partitions(s1, M):
            cap = min(_part(nu, M), N - s2)
            if cap < d and r - M > 0:
                continue
            for mu in _sub_partitions(min(s1, max(cap, 0)), r - M, [d] * (r - M)):
                lam = tuple(nu) + (0,) * (M - len(nu)) + tuple(mu)
                T1 = _t1_both_large(g, mu, r1, s1, s2)
                T2 = _t2_horizontal(g, nu_bar(nu, r1, s1, r2, s2, M), r2, s2)
                emit(lam, "both_large", mu, nu, T1, T2)
        return out
    T1 = genuine_highest_tableau(g, rectangle(r1, s1))
    case = "both_small" if r1 <= M and r2 <= M else "mixed"
    for nu in _sub_partitions(s1, r, [d] * r):
        nub = nu_bar(nu, r1, s1, r2, s2, M)
        if r1 > M:
            T2 = _t2_horizontal(g, nub, r2, s2)
        else:
            T2 = _t2_with_column_run(g, nub, r1, r2, s2)
        emit(nu, case, (), nu, T1, T2)
    return out


# ------------------------------------------------- engine-level computations

@lru_cache(maxsize=None)
def tensor_crystal(g: GroundData, labels: tuple[Label, ...]) -> TensorCrystal:
    return TensorCrystal(g, labels)


def insertion_columns(tc: TensorCrystal, x: Sequence[int]) -> list[list[int]]:
    """Columns of col(T_k) -> ... -> col(T_2) -> T_1 for an engine element."""
    g = tc.g
    cols = [list(c) for c in tc.factors[0].cols[x[0]]]
    rank = _identity_rank(g.n)
    for F, k in zip(tc.factors[1:], x[1:]):
        for a in F.words[k]:
            _insert(cols, a, rank, g.M)
    return cols


@lru_cache(maxsize=None)
def _identity_rank(n: int) -> tuple[int, ...]:
    return tuple(range(n + 1))


def insertion_rows(tc: TensorCrystal, x: Sequence[int]) -> tuple[tuple[int, ...], ...]:
    cols = insertion_columns(tc, x)
    height = len(cols[0]) if cols else 0
    return tuple(tuple(c[i] for c in cols if i < len(c)) for i in range(height))


def raising_stuck(tc: TensorCrystal, x: Sequence[int]) -> bool:
    return all(tc.e(i, x) is None for i in range(1, tc.g.n))


def genuine_shape(tc: TensorCrystal, x: Sequence[int]) -> tuple[int, ...] | None:
    rows = insertion_rows(tc, x)
    shape = tuple(len(r) for r in rows)
    if rows == genuine_highest_tableau(tc.g, shape).rows:
        return shape
    return None


def brute_force_genuine(tc: TensorCrystal) -> dict[tuple[int, ...], list[tuple[int, ...]]]:
    """Every genuine highest weight vector, grouped by highest weight.  Being
    raising-stuck is necessary, so only stuck elements are inserted."""
    found: dict[tuple[int, ...], list] = {}
    for x in tc.elements():
        if raising_stuck(tc, x):
            shape = genuine_shape(tc, x)
            if shape is not None:
                found.setdefault(shape, []).append(x)
    return found


def _hook_shapes(g: GroundData, size: int, max_rows: int, max_cols: int) -> list[tuple[int, ...]]:
    from .tableaux import partitions_of

    return [lam for lam in partitions_of(size, max_cols) if len(lam) <= max_rows and is_hook(g, lam)]


def genuine_by_weight(tc: TensorCrystal, shapes: Iterable[tuple[int, ...]] | None = None
                      ) -> dict[tuple[int, ...], list[tuple[int, ...]]]:
    """Exhaustive genuine highest weight vectors of a two-factor product without
    walking the product: a genuine vector of shape lam has weight hw_weight(lam),
    so the factors are joined on weight before the raising and insertion tests."""
    from .tableaux import hw_weight

    if len(tc.labels) != 2:
        raise ValueError("two factors expected")
    g = tc.g
    (r1, s1), (r2, s2) = tc.labels
    if shapes is None:
        shapes = _hook_shapes(g, r1 * s1 + r2 * s2, r1 + r2, s1 + s2)
    A, B = tc.factors
    by_weight: dict[tuple[int, ...], list[int]] = {}
    for k, w in enumerate(B.weights):
        by_weight.setdefault(w, []).append(k)
    found: dict = {}
    for lam in shapes:
        target = tuple(hw_weight(g, lam))
        for i, w in enumerate(A.weights):
            need = tuple(t - a for t, a in zip(target, w))
            for j in by_weight.get(need, ()):
                x = (i, j)
                if raising_stuck(tc, x) and genuine_shape(tc, x) == tuple(lam):
                    found.setdefault(tuple(lam), []).append(x)
    return found


def ibar_components(tc: TensorCrystal) -> list[set]:
    seen: set = set()
    comps = []
    fin = range(1, tc.g.n)
    for x in tc.elements():
        if x not in seen:
            comp = tc.component(x, fin)
            seen |= comp
            comps.append(comp)
    return comps


def decompose_tensor(tc: TensorCrystal) -> list[tuple[int, ...]]:
    """Highest weights of the Ibar-components, in discovery order; raises if a
    component does not have exactly one genuine highest weight vector."""
    shapes = []
    for comp in ibar_components(tc):
        found = [s for s in (genuine_shape(tc, x) for x in comp if raising_stuck(tc, x)) if s is not None]
        if len(found) != 1:
            raise RuntimeError(f"component of size {len(comp)} has {len(found)} genuine highest weight vectors")
        shapes.append(found[0])
    return shapes


# ------------------------------------------------------------------ R matrix

class RMatrix:
    """R : B^a (x) B^b -> B^b (x) B^a as a table on engine elements."""

    def __init__(self, g: GroundData, a: Label, b: Label, method: str = "fast"):
        self.g = g
        self.a, self.b = tuple(a), tuple(b)
        self.src = tensor_crystal(g, (self.a, self.b))
        self.dst = tensor_crystal(g, (self.b, self.a))
        if method == "fast":
            self.table = _r_by_transport(self.src, self.dst)
        elif method == "oracle":
            self.table = _r_by_insertion(self.src, self.dst)
        else:
            raise ValueError(f"unknown method {method!r}")

    def __call__(self, x: Sequence[int]) -> tuple[int, ...]:
        return self.table[tuple(x)]

    def apply(self, x: TensorElement) -> TensorElement:
        return self.dst.decode(self.table[self.src.encode(x)])


def _r_by_insertion(src: TensorCrystal, dst: TensorCrystal) -> dict:
    index: dict = {}
    for y in dst.elements():
        key = insertion_rows(dst, y)
        if key in index:
            raise RuntimeError("two elements of the flipped product share an insertion tableau")
        index[key] = y
    table = {}
    for x in src.elements():
        key = insertion_rows(src, x)
        if key not in index:
            raise RuntimeError(f"no preimage for {src.decode(x)}")
        table[x] = index[key]
    return table


def _r_by_transport(src: TensorCrystal, dst: TensorCrystal) -> dict:
    """Match genuine highest weight vectors by highest weight, then carry every
    Ibar-path from them across."""
    hs, hd = brute_force_genuine(src), brute_force_genuine(dst)
    if set(hs) != set(hd) or any(len(v) != 1 for v in list(hs.values()) + list(hd.values())):
        raise RuntimeError("genuine highest weight vectors do not match up one-to-one")
    fin = range(1, src.g.n)
    table: dict = {}
    for shape, (h,) in hs.items():
        table[h] = hd[shape][0]
        queue = deque([h])
        while queue:
            x = queue.popleft()
            rx = table[x]
            for i in fin:
                for raising in (False, True):
                    y = src.act(i, x, raising)
                    if y is None:
                        continue
                    ry = dst.act(i, rx, raising)
                    if ry is None:
                        raise RuntimeError("transport hit a killed operator")
                    if y in table:
                        if table[y] != ry:
                            raise RuntimeError("inconsistent transport")
                        continue
                    table[y] = ry
                    queue.append(y)
    if len(table) != src.size():
        raise RuntimeError("transport did not reach every element")
    return table


@lru_cache(maxsize=None)
def r_matrix(g: GroundData, a: Label, b: Label, method: str = "fast") -> RMatrix:
    return RMatrix(g, a, b, method)


def _reverse_insert(cols: list[list[int]], c: int, M: int) -> int:
    """Undo one column insertion whose new cell ended at the bottom of column
    c; return the letter that was inserted into the first column."""
    y = cols[c].pop()
    if not cols[c]:
        cols.pop(c)
    for j in range(c - 1, -1, -1):
        col = cols[j]
        k = max(i for i, w in enumerate(col) if w < y or (w == y and w <= M))
        col[k], y = y, col[k]
    return y


def reverse_insertion(g: GroundData, P: Tableau, growth: Sequence[int], rect: Label) -> tuple[Tableau, Tableau]:
    """Split P into (base, T) with T of rectangular shape ``rect`` whose reading word,
    inserted into base, grows the columns listed in ``growth`` (1-based)."""
    cols = P.columns()
    word = [_reverse_insert(cols, c - 1, g.M) for c in reversed(growth)]
    word.reverse()
    r, s = rect
    if len(word) != r * s:
        raise ValueError("growth data does not match the rectangle")
    base = Tableau(tuple(tuple(c[i] for c in cols if i < len(c)) for i in range(len(cols[0]) if cols else 0)))
    grid = [[0] * s for _ in range(r)]
    it = iter(word)
    for j in range(s - 1, -1, -1):
        for i in range(r):
            grid[i][j] = next(it)
    return base, Tableau(tuple(tuple(row) for row in grid))


@lru_cache(maxsize=None)
def _growth_of_genuine(g: GroundData, a: Label, b: Label) -> dict[tuple[int, ...], tuple[int, ...]]:
    """lam-hat -> growth columns of the genuine highest weight vector of B^a (x) B^b."""
    from .insertion import insert_word
    from .tableaux import reading_word

    out = {}
    for d in genuine_hwv_pairs(g, a[0], a[1], b[0], b[1]):
        T1, T2 = d.pair.factors
        res = insert_word(g, STANDARD, reading_word(T2), T1)
        out[d.lam_hat] = tuple(c for c, _ in res.bump_trace)
    return out


def r_by_reverse_insertion(g: GroundData, x: TensorElement) -> TensorElement:
    """R for one element: keep the insertion tableau, take the recording data of
    the genuine highest weight vector of the same shape in the flipped product."""
    from .insertion import p_tableau

    T1, T2 = x.factors
    a, b = _label(T1), _label(T2)
    P = p_tableau(g, x).p_tableau
    growth = _growth_of_genuine(g, b, a).get(P.outer)
    if growth is None:
        raise RuntimeError(f"no genuine highest weight vector of shape {list(P.outer)}")
    base, U = reverse_insertion(g, P, growth, a)
    if base.outer != rectangle(*b):
        raise RuntimeError("reverse insertion left a non-rectangular tableau")
    y = TensorElement((base, U))
    if p_tableau(g, y).p_tableau != P:
        raise RuntimeError("reverse insertion is not consistent")
    return y


def _label(T: Tableau) -> Label:
    if not T.is_straight or len(set(T.outer)) != 1:
        raise ValueError("factors must be rectangular")
    return (len(T.rows), T.outer[0])


def combinatorial_R(g: GroundData, x: TensorElement, method: str = "reverse") -> TensorElement:
    """Image of T_1 (x) T_2 under the combinatorial R matrix.  ``reverse`` works on
    the single element; ``fast`` and ``oracle`` build the whole table."""
    if method == "reverse":
        return r_by_reverse_insertion(g, x)
    T1, T2 = x.factors
    return r_matrix(g, _label(T1), _label(T2), method).apply(x)


def r_oracle_sample(g: GroundData, a: Label, b: Label, fraction: float = 0.01, seed: int = 0) -> list[str]:
    """Compare the fast table with the insertion-tableau oracle on a sample."""
    R = r_matrix(g, tuple(a), tuple(b))
    src, dst = R.src, R.dst
    elems = list(src.elements())
    rng = random.Random(seed)
    k = max(1, int(len(elems) * fraction))
    bad = []
    for x in rng.sample(elems, min(k, len(elems))):
        if insertion_rows(src, x) != insertion_rows(dst, R(x)):
            bad.append(f"R disagrees with insertion at {src.decode(x)}")
    return bad


# -------------------------------------------------------------------- energy

def energy_of(tc: TensorCrystal, x: Sequence[int]) -> int:
    s1, s2 = tc.labels[0][1], tc.labels[1][1]
    cols = insertion_columns(tc, x)
    return sum(len(c) for c in cols[max(s1, s2):])


def energy(g: GroundData, x: TensorElement) -> int:
    """Number of cells of the insertion tableau right of column max(s1, s2)."""
    from .insertion import p_tableau

    s = max(x.factors[0].outer[0], x.factors[1].outer[0])
    P = p_tableau(g, x).p_tableau
    return sum(max(0, len(row) - s) for row in P.rows)


def energy_recurrence_check(g: GroundData, a: Label, b: Label) -> list[str]:
    """H constant on Ibar-components and H(e_0 b) - H(b) = +1, 0, 0, -1 in the
    cases LL, LR, RL, RR."""
    R = r_matrix(g, tuple(a), tuple(b))
    src, dst = R.src, R.dst
    H = {x: energy_of(src, x) for x in src.elements()}
    bad = []
    for comp in ibar_components(src):
        if len({H[x] for x in comp}) != 1:
            bad.append(f"energy not constant on a component of size {len(comp)}")
    delta = {(0, 0): 1, (0, 1): 0, (1, 0): 0, (1, 1): -1}
    for x in src.elements():
        y = src.e(0, x)
        if y is None:
            continue
        rx = R(x)
        ry = dst.e(0, rx)
        if ry != R(y):
            bad.append(f"R does not commute with e_0 at {src.decode(x)}")
            continue
        case = (src.target(0, x, True), dst.target(0, rx, True))
        if H[y] - H[x] != delta[case]:
            name = "LR"[case[0]] + "LR"[case[1]]
            bad.append(f"case {name}: H changes by {H[y] - H[x]} at {src.decode(x)}")
    return bad


# ------------------------------------------------------- raising sequences

def zeta_of(lam: Sequence[int]) -> tuple[int, ...]:
    """Remove the bottom cell of the last column of lam."""
    lam = list(partition(lam))
    if not lam:
        raise ValueError("empty partition has no corner")
    k = max(i for i, x in enumerate(lam) if x == lam[0])
    lam[k] -= 1
    return partition(lam)


def is_case_e(g: GroundData, datum: HwvDatum) -> bool:
    nu = datum.nu
    return (datum.case == "both_large" and len(nu) == g.M and len(set(nu)) == 1
            and bool(datum.mu) and nu[-1] == datum.mu[0])


def raising_sequence(g: GroundData, datum: HwvDatum) -> list[int]:
    (T1, T2) = datum.pair.factors
    r1, s1 = _label(T1)
    r2, s2 = _label(T2)
    lam = datum.lam
    if not lam:
        raise ValueError("empty lambda has no raising sequence")
    n, M = g.n, g.M
    if max(r1, r2) > M:
        nu = datum.nu
        height = sum(1 for x in nu if x == nu[0]) if nu else 0
        return [0] + list(range(n - 1, M + s1 - lam[0], -1)) + list(range(1, height))
    if r1 + r2 <= M:
        height = sum(1 for x in lam if x == lam[0])
        return [0] + list(range(n - 1, r1 + r2 - height, -1)) + list(range(1, height))
    raise ValueError("no raising sequence for r1, r2 <= M < r1 + r2")


@dataclass(frozen=True)
class Witness:
    sequence: tuple[int, ...]
    element: TensorElement
    target: tuple[int, ...]  # zeta-hat
    p_tableau: Tableau
    differences: tuple[tuple[int, int, int, int], ...]  # (row, col, found, expected), 1-based


def raising_sequence_witness(g: GroundData, datum: HwvDatum) -> Witness:
    """Apply the raising sequence to the genuine highest weight vector; every
    step must act on the second factor."""
    from .insertion import p_tableau

    T1, T2 = datum.pair.factors
    r1, s1 = _label(T1)
    r2, s2 = _label(T2)
    zeta = zeta_of(datum.lam)
    d, r = max(s1 - s2, 0), min(r1, r2)
    if d and (len(zeta) < r or zeta[r - 1] < d):
        raise ValueError(f"lambda = {list(datum.lam)} is already minimal; zeta must contain ({d}^{r})")
    target = lambda_hat(zeta, r1, s1, r2, s2)
    if not is_hook(g, target):
        raise ValueError("zeta-hat is not a hook partition")
    seq = raising_sequence(g, datum)
    elem = datum.pair
    for i in seq:
        if i == 0:
            if node0_target(g, elem, raising=True) != 1:
                raise RuntimeError("e_0 does not act on the second factor")
            y = apply_e0_tensor(g, elem)
        else:
            y = apply_e(g, STANDARD, i, elem)
        if y is None:
            raise RuntimeError(f"e_{i} kills the element")
        if y.factors[0] != elem.factors[0]:
            raise RuntimeError(f"e_{i} does not act on the second factor")
        elem = y
    P = p_tableau(g, elem).p_tableau
    diffs = []
    if P.outer == target:
        H = genuine_highest_tableau(g, target)
        for i, (pr, hr) in enumerate(zip(P.rows, H.rows)):
            for j, (p, h) in enumerate(zip(pr, hr)):
                if p != h:
                    diffs.append((i + 1, j + 1, p, h))
    else:
        diffs.append((0, 0, -1, -1))
    return Witness(tuple(seq), elem, target, P, tuple(diffs))


# ----------------------------------------------------------- global checks

def r_properties_check(g: GroundData, a: Label, b: Label) -> list[str]:
    """Bijectivity, inverse composition and commutation with every e_i, f_i."""
    R = r_matrix(g, tuple(a), tuple(b))
    Rinv = r_matrix(g, tuple(b), tuple(a))
    src, dst = R.src, R.dst
    bad = []
    if len(set(R.table.values())) != dst.size():
        bad.append("R is not a bijection")
    for x in src.elements():
        rx = R(x)
        if Rinv(rx) != x:
            bad.append(f"R' R != id at {src.decode(x)}")
        for i in range(g.n):
            for raising in (False, True):
                y = src.act(i, x, raising)
                ry = dst.act(i, rx, raising)
                if (y is None) != (ry is None) or (y is not None and R(y) != ry):
                    bad.append(f"R does not commute with {'ef'[not raising]}_{i} at {src.decode(x)}")
    return bad


def yang_baxter_check(g: GroundData, a: Label, b: Label, c: Label) -> list[str]:
    """(R (x) 1)(1 (x) R)(R (x) 1) = (1 (x) R)(R (x) 1)(1 (x) R) on B^a (x) B^b (x) B^c."""
    a, b, c = tuple(a), tuple(b), tuple(c)

    def left(p, q):
        R = r_matrix(g, p, q)
        return lambda x: R(x[:2]) + x[2:]

    def right(p, q):
        R = r_matrix(g, p, q)
        return lambda x: x[:1] + R(x[1:])

    sizes = [len(tensor_crystal(g, (l,)).factors[0]) for l in (a, b, c)]
    lhs = (left(a, b), right(a, c), left(b, c))
    rhs = (right(b, c), left(a, c), right(a, b))
    bad = []
    for x in product(*(range(k) for k in sizes)):
        u = x
        for op in lhs:
            u = op(u)
        v = x
        for op in rhs:
            v = op(v)
        if u != v:
            bad.append(f"Yang-Baxter fails at {tensor_crystal(g, (a, b, c)).decode(x)}")
    return bad


def hlm_set(g: GroundData, l: int, m: int) -> set[int]:
    require_hook(g, (l,))
    require_hook(g, (m,))
    return {t for t in range(min(l, m) + 1) if is_hook(g, (l + m - t, t))}


def pair_labels(g: GroundData, max_r: int = 3, max_s: int = 3) -> list[Label]:
    return [(r, s) for r in range(1, max_r + 1) for s in range(1, max_s + 1) if is_hook(g, rectangle(r, s))]
