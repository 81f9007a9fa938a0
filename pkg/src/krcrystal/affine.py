"""The sigma bijection on rectangles, the affine node 0, and KR crystal graphs.

``KRCrystal`` tabulates every operator on one rectangle B^{r,s}.
``TensorCrystal`` combines tabulated factors with the factor-level tensor
rules, which keeps large products cheap; the slower reading-word route in
``crystal`` is used to cross-check it.
"""

from __future__ import annotations

import json
import os
import tempfile
from collections import deque
from functools import lru_cache
from pathlib import Path
from typing import Iterable, Sequence

from .alphabet import SIGMA, STANDARD, GroundData, NodeKind, coroot_pairing, node_kind
from .crystal import (
    DEFAULT_NODE_CAP,
    CrystalGraph,
    action_position,
    element_key,
    tensor_rule_target,
)
from .insertion import anti_rectify, anti_rectify_by_insertion, rectify, rectify_by_insertion
from .tableaux import (
    CapExceeded,
    Tableau,
    TensorElement,
    enumerate_sst,
    is_valid,
    reading_positions,
    rectangle,
    require_hook,
    weight_of,
)

FORMAT_VERSION = 1


# --------------------------------------------------------------------- sigma

def _rect_dims(T: Tableau) -> tuple[int, int]:
    if not T.is_straight or not T.rows or len(set(T.outer)) != 1:
        raise ValueError(f"expected a rectangular tableau, got shape {list(T.outer)}")
    return len(T.rows), T.outer[0]


def _split(g: GroundData, T: Tableau, low_is_odd: bool) -> tuple[Tableau, Tableau]:
    """(top-left block, rest) where the top-left block holds the letters that
    come first in T's order."""
    first = [tuple(x for x in row if g.is_odd(x) == low_is_odd) for row in T.rows]
    rest = [tuple(None if g.is_odd(x) == low_is_odd else x for x in row) for row in T.rows]
    return Tableau.from_rows(first, T.order), Tableau(tuple(rest), T.order)


def _assemble(top: Tableau, bottom: Tableau, r: int, s: int, order: str) -> Tableau:
    rows = []
    for i in range(r):
        left = top.rows[i] if i < len(top.rows) else ()
        right = tuple(x for x in bottom.rows[i] if x is not None) if i < len(bottom.rows) else ()
        if len(left) + len(right) != s:
            raise RuntimeError("rectified blocks do not tile the rectangle")
        rows.append(tuple(left) + right)
    return Tableau(tuple(rows), order)


def sigma(g: GroundData, T: Tableau, by_insertion: bool = False) -> Tableau:
    """SST((s^r)) -> SST^sigma((s^r)): rectify the odd part to the top left and
    anti-rectify the even part to the bottom right."""
    if T.order != STANDARD:
        raise ValueError("sigma expects a standard-order tableau")
    r, s = _rect_dims(T)
    even, odd = _split(g, T, low_is_odd=False)
    if by_insertion:
        top = rectify_by_insertion(g, odd)
        bottom = anti_rectify_by_insertion(g, even, r, s)
    else:
        top = rectify(g, odd)
        bottom = anti_rectify(g, even, r, s)
    S = _assemble(top.with_order(SIGMA), bottom.with_order(SIGMA), r, s, SIGMA)
    if not is_valid(g, S):
        raise RuntimeError(f"sigma produced an invalid tableau {S}")
    return S


def sigma_inverse(g: GroundData, S: Tableau, by_insertion: bool = False) -> Tableau:
    if S.order != SIGMA:
        raise ValueError("sigma_inverse expects a sigma-order tableau")
    r, s = _rect_dims(S)
    odd, even = _split(g, S, low_is_odd=True)
    if by_insertion:
        top = rectify_by_insertion(g, even)
        bottom = anti_rectify_by_insertion(g, odd, r, s)
    else:
        top = rectify(g, even)
        bottom = anti_rectify(g, odd, r, s)
    T = _assemble(top.with_order(STANDARD), bottom.with_order(STANDARD), r, s, STANDARD)
    if not is_valid(g, T):
        raise RuntimeError(f"sigma inverse produced an invalid tableau {T}")
    return T


def sigma_violations(g: GroundData, r: int, s: int, limit: int = 20) -> list[str]:
    """sigma against its insertion route, round trips, weights, and bijectivity
    onto the sigma-order tableaux of the same rectangle."""
    from .tableaux import count_sst, enumerate_sst

    shape = rectangle(r, s)
    require_hook(g, shape)
    out: list[str] = []
    images = set()
    for T in enumerate_sst(g, shape):
        S = sigma(g, T)
        if sigma(g, T, by_insertion=True) != S:
            out.append(f"sigma routes disagree at {T.rows}")
        if sigma_inverse(g, S) != T or sigma_inverse(g, S, by_insertion=True) != T:
            out.append(f"sigma inverse fails at {T.rows}")
        if weight_of(g, S) != weight_of(g, T):
            out.append(f"sigma changes the weight at {T.rows}")
        images.add(S)
        if len(out) >= limit:
            return out
    if len(images) != count_sst(g, shape, SIGMA):
        out.append(f"sigma hits {len(images)} of {count_sst(g, shape, SIGMA)} sigma-order tableaux")
    return out


# ------------------------------------------------------------ node 0 on B^{r,s}

def _node0_sigma(g: GroundData, S: Tableau, raising: bool) -> Tableau | None:
    pos = reading_positions(S)
    word = [S.rows[i][j] for i, j in pos]
    t = action_position(g, 0, word, raising)
    if t is None:
        return None
    i, j = pos[t]
    return S.replace(i, j, 1 if not raising else g.n)


def apply_f0_kr(g: GroundData, T: Tableau) -> Tableau | None:
    """f_0 = sigma^{-1} o f_0^sigma o sigma."""
    S = _node0_sigma(g, sigma(g, T), raising=False)
    return None if S is None else sigma_inverse(g, S)


def apply_e0_kr(g: GroundData, T: Tableau) -> Tableau | None:
    S = _node0_sigma(g, sigma(g, T), raising=True)
    return None if S is None else sigma_inverse(g, S)


def node0_target(g: GroundData, x: TensorElement, raising: bool = False) -> int | None:
    """Factor index node 0 acts on: the rightmost factor whose weight pairs
    nontrivially with alpha_0^vee (None if there is none)."""
    for k in range(len(x.factors) - 1, -1, -1):
        if coroot_pairing(g, weight_of(g, x.factors[k]), 0) > 0:
            return k
    return None


def _apply0_tensor(g: GroundData, x: TensorElement, raising: bool) -> TensorElement | None:
    k = node0_target(g, x, raising)
    if k is None:
        return None
    op = apply_e0_kr if raising else apply_f0_kr
    y = op(g, x.factors[k])
    if y is None:
        return None
    return TensorElement(x.factors[:k] + (y,) + x.factors[k + 1:])


def apply_f0_tensor(g: GroundData, x: TensorElement) -> TensorElement | None:
    return _apply0_tensor(g, x, raising=False)


def apply_e0_tensor(g: GroundData, x: TensorElement) -> TensorElement | None:
    return _apply0_tensor(g, x, raising=True)


# --------------------------------------------------------- tabulated crystals

class KRCrystal:
    """All of B^{r,s} = SST((s^r)) with operator tables for every node.

    Elements are indexed 0..size-1 in canonical (row-major) order; ``f[i][k]``
    and ``e[i][k]`` are target indices or -1.
    """

    def __init__(self, g: GroundData, r: int, s: int):
        require_hook(g, rectangle(r, s))
        self.g, self.r, self.s = g, r, s
        self.elements: list[Tableau] = enumerate_sst(g, rectangle(r, s))
        self.index = {T: k for k, T in enumerate(self.elements)}
        self.rows = [T.rows for T in self.elements]
        self.cols = [tuple(tuple(c) for c in T.columns()) for T in self.elements]
        self.words = []
        for T in self.elements:
            self.words.append(tuple(T.rows[i][j] for i, j in reading_positions(T)))
        n = g.n
        self.weights = [tuple(weight_of(g, T)) for T in self.elements]
        self.pairing = [[coroot_pairing(g, w, i) for w in self.weights] for i in range(n)]
        self.f = [[-1] * len(self) for _ in range(n)]
        self.e = [[-1] * len(self) for _ in range(n)]
        pos = reading_positions(self.elements[0])
        for i in range(1, n):
            a, b = g.node_letters(i)
            for k, T in enumerate(self.elements):
                for raising, table, new in ((False, self.f, b), (True, self.e, a)):
                    t = action_position(g, i, self.words[k], raising)
                    if t is not None:
                        ri, ci = pos[t]
                        table[i][k] = self.index[T.replace(ri, ci, new)]
        for k, T in enumerate(self.elements):
            y = apply_f0_kr(g, T)
            if y is not None:
                self.f[0][k] = self.index[y]
            z = apply_e0_kr(g, T)
            if z is not None:
                self.e[0][k] = self.index[z]
        self.eps = [[0] * len(self) for _ in range(n)]
        self.phi = [[0] * len(self) for _ in range(n)]
        for i in range(n):
            for k in range(len(self)):
                self.eps[i][k] = self._run(self.e[i], k)
                self.phi[i][k] = self._run(self.f[i], k)
        # (eps, phi) packed into one int, used as a cache key by tensor products
        if max(max(row, default=0) for row in self.eps + self.phi) >= 1 << 10:
            raise CapExceeded("string length too large to pack")
        self.code = [[(self.eps[i][k] << 10) | self.phi[i][k] for k in range(len(self))] for i in range(n)]

    @staticmethod
    def _run(table: list[int], k: int) -> int:
        c = 0
        k = table[k]
        while k >= 0:
            c += 1
            k = table[k]
        return c

    def __len__(self):
        return len(self.elements)

    @property
    def label(self) -> tuple[int, int]:
        return (self.r, self.s)


@lru_cache(maxsize=None)
def kr_crystal(g: GroundData, r: int, s: int) -> KRCrystal:
    return KRCrystal(g, r, s)


class TensorCrystal:
    """B^{r_1,s_1} (x) ... (x) B^{r_k,s_k}; elements are tuples of factor indices."""

    def __init__(self, g: GroundData, labels: Sequence[tuple[int, int]]):
        self.g = g
        self.labels = tuple(tuple(l) for l in labels)
        self.factors = [kr_crystal(g, r, s) for r, s in self.labels]
        self.kinds = [node_kind(g, i) for i in range(g.n)]
        self._rule: dict = {}

    def size(self) -> int:
        out = 1
        for F in self.factors:
            out *= len(F)
        return out

    def elements(self) -> Iterable[tuple[int, ...]]:
        from itertools import product

        return product(*(range(len(F)) for F in self.factors))

    def target(self, i: int, x: Sequence[int], raising: bool) -> int | None:
        kind = self.kinds[i]
        F = self.factors
        if kind is NodeKind.ODD_PLUS:
            for k, F_k in enumerate(F):
                if F_k.pairing[i][x[k]] > 0:
                    return k
            return None
        if kind is NodeKind.ODD_MINUS:
            for k in range(len(F) - 1, -1, -1):
                if F[k].pairing[i][x[k]] > 0:
                    return k
            return None
        key = i * 2 + raising
        for k in range(len(F)):
            key = (key << 20) | F[k].code[i][x[k]]
        hit = self._rule.get(key, -1)
        if hit == -1:
            stats = [(F[k].eps[i][x[k]], F[k].phi[i][x[k]], 0) for k in range(len(F))]
            hit = self._rule[key] = tensor_rule_target(self.g, i, stats, raising)
        return hit

    def act(self, i: int, x: tuple[int, ...], raising: bool) -> tuple[int, ...] | None:
        k = self.target(i, x, raising)
        if k is None:
            return None
        table = self.factors[k].e[i] if raising else self.factors[k].f[i]
        y = table[x[k]]
        if y < 0:
            return None
        return x[:k] + (y,) + x[k + 1:]

    def f(self, i: int, x):
        return self.act(i, x, False)

    def e(self, i: int, x):
        return self.act(i, x, True)

    def decode(self, x: Sequence[int]) -> TensorElement:
        return TensorElement(tuple(F.elements[k] for F, k in zip(self.factors, x)))

    def encode(self, y: TensorElement) -> tuple[int, ...]:
        return tuple(F.index[T] for F, T in zip(self.factors, y.factors))

    def word(self, x: Sequence[int]) -> tuple[int, ...]:
        return tuple(a for F, k in zip(self.factors, x) for a in F.words[k])

    def component(self, seed, index_set: Iterable[int], cap: int = DEFAULT_NODE_CAP) -> set:
        index_set = tuple(index_set)
        seen = {tuple(seed)}
        queue = deque(seen)
        while queue:
            x = queue.popleft()
            for i in index_set:
                for raising in (False, True):
                    y = self.act(i, x, raising)
                    if y is not None and y not in seen:
                        if len(seen) >= cap:
                            raise CapExceeded(f"component exceeds {cap} nodes")
                        seen.add(y)
                        queue.append(y)
        return seen

    def axiom_violations(self, index_set: Iterable[int] | None = None, limit: int = 20) -> list[str]:
        """f_i b = b' iff e_i b' = b, and the changed factor moves by -alpha_i."""
        from .alphabet import simple_root

        index_set = tuple(range(self.g.n)) if index_set is None else tuple(index_set)
        roots = {i: tuple(simple_root(self.g, i)) for i in index_set}
        out: list[str] = []
        for x in self.elements():
            for i in index_set:
                y = self.act(i, x, False)
                if y is not None:
                    if self.act(i, y, True) != x:
                        out.append(f"e_{i} f_{i} != id at {x}")
                    k = next(k for k in range(len(x)) if x[k] != y[k])
                    wx, wy = self.factors[k].weights[x[k]], self.factors[k].weights[y[k]]
                    if any(a - b != c for a, b, c in zip(wx, wy, roots[i])):
                        out.append(f"f_{i} weight shift wrong at {x}")
                z = self.act(i, x, True)
                if z is not None and self.act(i, z, False) != x:
                    out.append(f"f_{i} e_{i} != id at {x}")
                if len(out) >= limit:
                    return out
        return out

    def is_connected(self, index_set: Iterable[int] | None = None) -> bool:
        index_set = tuple(range(self.g.n)) if index_set is None else tuple(index_set)
        seed = tuple(0 for _ in self.factors)
        return len(self.component(seed, index_set, cap=self.size() + 1)) == self.size()

    def graph(self, index_set: Iterable[int] | None = None) -> CrystalGraph:
        index_set = tuple(range(self.g.n)) if index_set is None else tuple(sorted(index_set))
        elems = sorted(self.elements(), key=lambda x: element_key(self.decode(x)))
        pos = {x: k for k, x in enumerate(elems)}
        edges = []
        for x in elems:
            for i in index_set:
                y = self.f(i, x)
                if y is not None:
                    edges.append((pos[x], i, pos[y]))
        edges.sort()
        nodes = [self.decode(x) for x in elems]
        if len(self.factors) == 1:
            nodes = [y.factors[0] for y in nodes]
        return CrystalGraph(index_set, nodes, edges, self.g.M)


# ----------------------------------------------------------------- kr_graph

def cache_dir() -> Path:
    return Path(os.environ.get("KRC_CACHE_DIR", "./.krc-cache"))


def kr_graph(g: GroundData, r: int, s: int, use_cache: bool = True, cap: int = DEFAULT_NODE_CAP) -> CrystalGraph:
    """The I-colored crystal graph of B^{r,s}, cached on disk as canonical JSON."""
    require_hook(g, rectangle(r, s))
    path = cache_dir() / f"kr-v{FORMAT_VERSION}-M{g.M}-N{g.N}-r{r}-s{s}.json"
    if use_cache and path.exists():
        graph = CrystalGraph.from_json(json.loads(path.read_text()))
        graph.M = g.M
        return graph
    from .tableaux import count_sst

    if count_sst(g, rectangle(r, s)) > cap:
        raise CapExceeded(f"B^{{{r},{s}}} has more than {cap} elements")
    graph = TensorCrystal(g, [(r, s)]).graph()
    if use_cache:
        write_atomic(path, graph.dumps())
    return graph


def write_atomic(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
