"""Kashiwara operators on words, tableaux and tensor elements.

An operator is computed once, on the reading word.  It changes exactly one
letter, so the result is mapped back by rewriting the matching cell.
``None`` means the operator kills the element.
"""

from __future__ import annotations

import json
from collections import Counter, deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .alphabet import SIGMA, STANDARD, GroundData, NodeKind, check_order, coroot_pairing, node_kind
from .tableaux import (
    CapExceeded,
    Tableau,
    TensorElement,
    genuine_highest_tableau,
    reading_positions,
    tableau_from_json,
    tableau_to_json,
    tensor_reading,
    weight_of,
)

DEFAULT_NODE_CAP = 2_000_000


# --------------------------------------------------------------- word rules

def action_position(g: GroundData, i: int, word: Sequence[int], raising: bool) -> int | None:
    """Index of the letter changed by e_i (raising) or f_i on ``word``; None if killed."""
    a, b = g.node_letters(i)
    kind = node_kind(g, i)
    if kind is NodeKind.EVEN_PLUS or kind is NodeKind.EVEN_MINUS:
        idx = range(len(word)) if kind is NodeKind.EVEN_PLUS else range(len(word) - 1, -1, -1)
        # bracket + (letter a) against a later - (letter b)
        open_plus: list[int] = []
        free_minus: list[int] = []
        for t in idx:
            x = word[t]
            if x == a:
                open_plus.append(t)
            elif x == b:
                if open_plus:
                    open_plus.pop()
                else:
                    free_minus.append(t)
        if raising:
            return free_minus[-1] if free_minus else None
        return open_plus[0] if open_plus else None
    if kind is NodeKind.ODD_PLUS:
        idx = range(len(word))
    else:
        idx = range(len(word) - 1, -1, -1)
    for t in idx:
        x = word[t]
        if x == a or x == b:
            if raising:
                return t if x == b else None
            return t if x == a else None
    return None


def f_word(g: GroundData, i: int, word: Sequence[int]) -> tuple[int, ...] | None:
    t = action_position(g, i, word, raising=False)
    if t is None:
        return None
    _, b = g.node_letters(i)
    w = list(word)
    w[t] = b
    return tuple(w)


def e_word(g: GroundData, i: int, word: Sequence[int]) -> tuple[int, ...] | None:
    t = action_position(g, i, word, raising=True)
    if t is None:
        return None
    a, _ = g.node_letters(i)
    w = list(word)
    w[t] = a
    return tuple(w)


# ------------------------------------------------------ tableaux and tensors

def _allowed(g: GroundData, order: str, i: int, x) -> None:
    g.check_node(i)
    check_order(order)
    if i in g.finite_nodes(order):
        return
    if order == STANDARD and i == 0 and _is_kr(x):
        return
    raise ValueError(f"node {i} is not available for {order} order on this element")


def _is_kr(x) -> bool:
    factors = x.factors if isinstance(x, TensorElement) else (x,) if isinstance(x, Tableau) else ()
    return bool(factors) and all(T.is_straight and len(set(T.outer)) == 1 for T in factors)


def _apply(g: GroundData, order: str, i: int, x, raising: bool):
    _allowed(g, order, i, x)
    if isinstance(x, (Tableau, TensorElement)) and x.order != order:
        raise ValueError(f"element is in {x.order} order, operator requested in {order} order")
    if order == STANDARD and i == 0:
        from . import affine

        if isinstance(x, Tableau):
            return affine.apply_e0_kr(g, x) if raising else affine.apply_f0_kr(g, x)
        return affine.apply_e0_tensor(g, x) if raising else affine.apply_f0_tensor(g, x)
    target = g.node_letters(i)[0 if raising else 1]
    if isinstance(x, Tableau):
        pos = reading_positions(x)
        word = tuple(x.rows[r][c] for r, c in pos)
        t = action_position(g, i, word, raising)
        if t is None:
            return None
        r, c = pos[t]
        return x.replace(r, c, target)
    if isinstance(x, TensorElement):
        word, where = tensor_reading(x)
        t = action_position(g, i, word, raising)
        if t is None:
            return None
        k, r, c = where[t]
        factors = list(x.factors)
        factors[k] = factors[k].replace(r, c, target)
        return TensorElement(tuple(factors))
    word = tuple(x)
    return e_word(g, i, word) if raising else f_word(g, i, word)


def apply_f(g: GroundData, order: str, i: int, x):
    """f_i on a word, tableau or tensor element (None when killed)."""
    return _apply(g, order, i, x, raising=False)


def apply_e(g: GroundData, order: str, i: int, x):
    """e_i on a word, tableau or tensor element (None when killed)."""
    return _apply(g, order, i, x, raising=True)


def eps_phi(g: GroundData, order: str, i: int, x) -> tuple[int, int]:
    """(eps_i, phi_i): how many times e_i, respectively f_i, can be applied."""
    counts = []
    for op in (apply_e, apply_f):
        k, y = 0, op(g, order, i, x)
        while y is not None:
            k += 1
            y = op(g, order, i, y)
        counts.append(k)
    return counts[0], counts[1]


# ------------------------------------------------ direct tensor-rule oracle

def tensor_rule_target(g: GroundData, i: int, stats: Sequence[tuple[int, int, int]], raising: bool) -> int | None:
    """Factor index acted on by e_i/f_i in b_1 (x) ... (x) b_k, computed from the
    per-factor data (eps_i, phi_i, <wt, alpha_i^vee>) with the two-factor rules
    applied recursively; None when the operator kills the product."""
    kind = node_kind(g, i)
    if kind is NodeKind.ODD_PLUS:
        for k, (_, _, p) in enumerate(stats):
            if p > 0:
                return k
        return None
    if kind is NodeKind.ODD_MINUS:
        for k in range(len(stats) - 1, -1, -1):
            if stats[k][2] > 0:
                return k
        return None
    order = list(range(len(stats)))
    if kind is NodeKind.EVEN_MINUS:
        order.reverse()
    # signature: factor k contributes eps minuses then phi pluses
    open_plus: list[int] = []
    free_minus: list[int] = []
    for k in order:
        e, f, _ = stats[k]
        for _ in range(e):
            if open_plus:
                open_plus.pop()
            else:
                free_minus.append(k)
        open_plus.extend([k] * f)
    if raising:
        return free_minus[-1] if free_minus else None
    return open_plus[0] if open_plus else None


def apply_tensor_rule(g: GroundData, order: str, i: int, x: TensorElement, raising: bool):
    """Route e_i/f_i to a factor with the factor-level tensor rules (test oracle)."""
    stats = []
    for T in x.factors:
        e, f = eps_phi(g, order, i, T)
        stats.append((e, f, coroot_pairing(g, weight_of(g, T), i)))
    k = tensor_rule_target(g, i, stats, raising)
    if k is None:
        return None
    op = apply_e if raising else apply_f
    y = op(g, order, i, x.factors[k])
    if y is None:
        return None
    return TensorElement(x.factors[:k] + (y,) + x.factors[k + 1:])


# -------------------------------------------------------------------- graphs

@dataclass
class CrystalGraph:
    """Nodes in canonical order; edge (u, i, v) means f_i(nodes[u]) = nodes[v]."""

    index_set: tuple[int, ...]
    nodes: list
    edges: list[tuple[int, int, int]] = field(default_factory=list)
    M: int | None = field(default=None, compare=False)

    def __len__(self):
        return len(self.nodes)

    def index(self) -> dict:
        return {x: k for k, x in enumerate(self.nodes)}

    def to_json(self) -> dict:
        return {
            "index_set": list(self.index_set),
            "nodes": [element_to_json(x) for x in self.nodes],
            "edges": [list(e) for e in self.edges],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, separators=(",", ":")) + "\n"

    @classmethod
    def from_json(cls, data: dict) -> "CrystalGraph":
        return cls(
            tuple(data["index_set"]),
            [element_from_json(x) for x in data["nodes"]],
            [tuple(e) for e in data["edges"]],
        )

    def to_dot(self) -> str:
        lines = ["digraph crystal {", "  node [shape=box, style=filled];"]
        for k, x in enumerate(self.nodes):
            color = "lightblue" if element_parity(x, self.M) == 0 else "lightsalmon"
            lines.append(f'  n{k} [label="{element_label(x)}", fillcolor={color}];')
        for u, i, v in self.edges:
            lines.append(f'  n{u} -> n{v} [label="{i}", color="{_edge_color(i)}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def components(self, index_set: Iterable[int] | None = None) -> list[list[int]]:
        allowed = set(self.index_set if index_set is None else index_set)
        adj: list[list[int]] = [[] for _ in self.nodes]
        for u, i, v in self.edges:
            if i in allowed:
                adj[u].append(v)
                adj[v].append(u)
        seen = [False] * len(self.nodes)
        comps = []
        for s in range(len(self.nodes)):
            if seen[s]:
                continue
            seen[s] = True
            comp, stack = [s], [s]
            while stack:
                u = stack.pop()
                for v in adj[u]:
                    if not seen[v]:
                        seen[v] = True
                        comp.append(v)
                        stack.append(v)
            comps.append(sorted(comp))
        return comps


_PALETTE = ("black", "red", "blue", "darkgreen", "purple", "orange", "brown", "magenta", "cyan", "gray")


def _edge_color(i: int) -> str:
    return _PALETTE[i % len(_PALETTE)]


def element_key(x):
    """Canonical sort key: row-major contents."""
    if isinstance(x, Tableau):
        return (x.rows,)
    if isinstance(x, TensorElement):
        return tuple(T.rows for T in x.factors)
    return (tuple(x),)


def element_to_json(x):
    if isinstance(x, Tableau):
        return tableau_to_json(x)
    if isinstance(x, TensorElement):
        return {"factors": [tableau_to_json(T) for T in x.factors]}
    return {"word": list(x)}


def element_from_json(data):
    if isinstance(data, dict) and "factors" in data:
        return TensorElement(tuple(tableau_from_json(t) for t in data["factors"]))
    if isinstance(data, dict) and "word" in data:
        return tuple(data["word"])
    return tableau_from_json(data)


def element_label(x) -> str:
    if isinstance(x, Tableau):
        suffix = "'" if x.order == SIGMA else ""
        return "[" + ",".join("[" + ",".join(f"{a}{suffix}" for a in r if a is not None) + "]" for r in x.rows) + "]"
    if isinstance(x, TensorElement):
        return " ⊗ ".join(element_label(T) for T in x.factors)
    return " ".join(str(a) for a in x)


def element_parity(x, M: int | None) -> int:
    """Z/2 degree: number of odd letters mod 2 (0 when M is unknown)."""
    if M is None:
        return 0
    if isinstance(x, TensorElement):
        return sum(element_parity(T, M) for T in x.factors) % 2
    letters = [a for _, _, a in x.cells()] if isinstance(x, Tableau) else list(x)
    return sum(1 for a in letters if a > M) % 2


def component_bfs(g: GroundData, order: str, seed, index_set: Iterable[int], cap: int = DEFAULT_NODE_CAP) -> CrystalGraph:
    """Closure of ``seed`` under e_i, f_i for i in ``index_set``, with all f-edges."""
    index_set = tuple(sorted(set(index_set)))
    seen = {seed}
    queue = deque([seed])
    edges = set()
    while queue:
        x = queue.popleft()
        for i in index_set:
            for raising in (False, True):
                y = _apply(g, order, i, x, raising)
                if y is None:
                    continue
                edges.add((y, i, x) if raising else (x, i, y))
                if y not in seen:
                    if len(seen) >= cap:
                        raise CapExceeded(f"component exceeds {cap} nodes")
                    seen.add(y)
                    queue.append(y)
    return _graph(g, index_set, seen, edges)


def _graph(g: GroundData, index_set, nodes, edges) -> CrystalGraph:
    ordered = sorted(nodes, key=element_key)
    pos = {x: k for k, x in enumerate(ordered)}
    es = sorted((pos[u], i, pos[v]) for u, i, v in edges)
    return CrystalGraph(index_set, ordered, es, g.M)


def graph_from_elements(g: GroundData, order: str, elements: Iterable, index_set: Iterable[int]) -> CrystalGraph:
    """Graph on a given finite set closed under the operators."""
    index_set = tuple(sorted(set(index_set)))
    nodes = set(elements)
    edges = set()
    for x in nodes:
        for i in index_set:
            y = _apply(g, order, i, x, False)
            if y is not None:
                if y not in nodes:
                    raise ValueError(f"element set not closed under f_{i}")
                edges.add((x, i, y))
    return _graph(g, index_set, nodes, edges)


def check_axioms(g: GroundData, order: str, graph: CrystalGraph) -> list[str]:
    """Violations of: f_i b = b' iff e_i b' = b, and weight shifts by alpha_i."""
    from .alphabet import simple_root

    out = []
    for x in graph.nodes:
        wx = weight_of(g, x)
        for i in graph.index_set:
            y = _apply(g, order, i, x, False)
            if y is not None:
                if _apply(g, order, i, y, True) != x:
                    out.append(f"e_{i} f_{i} != id at {element_label(x)}")
                if weight_of(g, y) != wx - simple_root(g, i):
                    out.append(f"f_{i} weight shift wrong at {element_label(x)}")
            z = _apply(g, order, i, x, True)
            if z is not None and _apply(g, order, i, z, False) != x:
                out.append(f"f_{i} e_{i} != id at {element_label(x)}")
    return out


# ------------------------------------------------------- genuine hw vectors

def is_genuine_hw(g: GroundData, x) -> tuple[int, ...] | None:
    """Shape lambda if the insertion tableau of x equals H_lambda, else None."""
    from .insertion import p_tableau

    P = p_tableau(g, x).p_tableau
    shape = P.outer
    if P.rows == genuine_highest_tableau(g, shape).rows:
        return shape
    return None


def decompose(g: GroundData, graph: CrystalGraph, index_set: Iterable[int] | None = None) -> Counter:
    """Multiset of highest weights of the components (restricted to ``index_set``,
    default Ibar) read off their genuine highest weight vectors."""
    if index_set is None:
        index_set = g.finite_nodes(STANDARD)
    shapes: Counter = Counter()
    for comp in graph.components(index_set):
        found = [s for s in (is_genuine_hw(g, graph.nodes[k]) for k in comp) if s is not None]
        if len(found) != 1:
            raise RuntimeError(f"component of size {len(comp)} has {len(found)} genuine highest weight vectors")
        shapes[found[0]] += 1
    return shapes


def lowest_by_search(g: GroundData, lam: Sequence[int]) -> Tableau:
    """Genuine lowest weight element of SST(lam): the unique element whose weight is
    furthest below Lambda_lambda (largest sum_j j*mu_j), found by a BFS over Ibar."""
    H = genuine_highest_tableau(g, lam)
    graph = component_bfs(g, STANDARD, H, g.finite_nodes(STANDARD))

    def depth(T):
        return sum(j * m for j, m in enumerate(weight_of(g, T), start=1))

    best = max(depth(T) for T in graph.nodes)
    low = [T for T in graph.nodes if depth(T) == best]
    if len(low) != 1:
        raise RuntimeError(f"{len(low)} elements of maximal depth")
    return low[0]

