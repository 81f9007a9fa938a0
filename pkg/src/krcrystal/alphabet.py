"""Graded alphabet, weights, simple roots and coroot pairings for eps_{M|N}."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Sequence

STANDARD = "standard"
SIGMA = "sigma"
ORDERS = (STANDARD, SIGMA)


class NodeKind(Enum):
    """Parity pattern (eps_i, eps_{i+1}) of a node of the affine diagram."""

    EVEN_PLUS = (0, 0)
    EVEN_MINUS = (1, 1)
    ODD_PLUS = (0, 1)
    ODD_MINUS = (1, 0)


@dataclass(frozen=True)
class GroundData:
    """Alphabet {1..n}, n = M+N, with letters 1..M even and M+1..n odd.

    ``allow_small`` lifts the default n >= 4 requirement.
    """

    M: int
    N: int
    allow_small: bool = field(default=False, compare=False)

    def __post_init__(self):
        if self.M < 1 or self.N < 1:
            raise ValueError(f"need M >= 1 and N >= 1, got M={self.M}, N={self.N}")
        if self.n < (2 if self.allow_small else 4):
            raise ValueError(f"alphabet size n={self.n} too small (pass allow_small=True for n >= 2)")

    @property
    def n(self) -> int:
        return self.M + self.N

    @property
    def letters(self) -> range:
        return range(1, self.n + 1)

    def parity(self, a: int) -> int:
        return 0 if a <= self.M else 1

    def is_odd(self, a: int) -> bool:
        return a > self.M

    @property
    def nodes(self) -> range:
        return range(self.n)

    def finite_nodes(self, order: str = STANDARD) -> tuple[int, ...]:
        """Ibar = I minus {0} for the standard order, I minus {M} for sigma."""
        skip = 0 if order == STANDARD else self.M
        return tuple(i for i in range(self.n) if i != skip)

    def letters_in_order(self, order: str = STANDARD) -> tuple[int, ...]:
        if order == STANDARD:
            return tuple(self.letters)
        return tuple(range(self.M + 1, self.n + 1)) + tuple(range(1, self.M + 1))

    def rank(self, order: str, a: int) -> int:
        """Position of letter ``a`` (1-based) in the given order."""
        if order == STANDARD:
            return a
        return a - self.M if a > self.M else a + self.N

    def rank_table(self, order: str) -> tuple[int, ...]:
        """Tuple indexed by letter (index 0 unused)."""
        return (0,) + tuple(self.rank(order, a) for a in self.letters)

    def node_letters(self, i: int) -> tuple[int, int]:
        """The letters (a, b) with f_i: a -> b."""
        i = self.check_node(i)
        return (self.n, 1) if i == 0 else (i, i + 1)

    def check_node(self, i: int) -> int:
        if not 0 <= i < self.n:
            raise ValueError(f"node index {i} outside 0..{self.n - 1}")
        return i

    def to_json(self) -> dict:
        return {"M": self.M, "N": self.N}


def check_order(order: str) -> str:
    if order not in ORDERS:
        raise ValueError(f"unknown alphabet order {order!r}")
    return order


def _eps(g: GroundData, i: int) -> int:
    # eps_i with i taken mod n on 1..n
    i = (i - 1) % g.n + 1
    return g.parity(i)


def node_kind(g: GroundData, i: int) -> NodeKind:
    i = g.check_node(i)
    a = g.n if i == 0 else i
    return NodeKind((_eps(g, a), _eps(g, a + 1)))


def is_even_node(g: GroundData, i: int) -> bool:
    return node_kind(g, i) in (NodeKind.EVEN_PLUS, NodeKind.EVEN_MINUS)


class Weight(tuple):
    """Integer vector (mu_1..mu_n); coefficient of delta_i sits at index i-1."""

    def __new__(cls, coeffs: Sequence[int] = ()):
        return super().__new__(cls, (int(c) for c in coeffs))

    @classmethod
    def zero(cls, g: GroundData) -> "Weight":
        return cls([0] * g.n)

    @classmethod
    def delta(cls, g: GroundData, i: int) -> "Weight":
        v = [0] * g.n
        v[i - 1] = 1
        return cls(v)

    def __add__(self, other):
        if len(self) != len(other):
            raise ValueError("weights of different length")
        return Weight(a + b for a, b in zip(self, other))

    def __sub__(self, other):
        if len(self) != len(other):
            raise ValueError("weights of different length")
        return Weight(a - b for a, b in zip(self, other))

    def __neg__(self):
        return Weight(-a for a in self)

    def __mul__(self, k: int):
        return Weight(k * a for a in self)

    __rmul__ = __mul__

    def __repr__(self):
        return f"Weight({list(self)})"


def simple_root(g: GroundData, i: int) -> Weight:
    """alpha_i = delta_i - delta_{i+1}, indices mod n (alpha_0 = delta_n - delta_1)."""
    a, b = g.node_letters(i)
    v = [0] * g.n
    v[a - 1] += 1
    v[b - 1] -= 1
    return Weight(v)


def coroot_pairing(g: GroundData, mu: Sequence[int], i: int) -> int:
    """<mu, alpha_i^vee> = mu_a - (-1)^(eps_a + eps_b) mu_b for the node letters (a, b)."""
    a, b = g.node_letters(i)
    sign = -1 if (g.parity(a) + g.parity(b)) % 2 == 0 else 1
    return mu[a - 1] + sign * mu[b - 1]


def bilinear_form(g: GroundData, mu: Sequence[int], nu: Sequence[int]) -> int:
    """(mu|nu) = sum (-1)^eps_i mu_i nu_i."""
    return sum((-1) ** g.parity(k + 1) * x * y for k, (x, y) in enumerate(zip(mu, nu)))


def sigma_compare(g: GroundData, a: int, b: int) -> int:
    """Three-way comparison in the order M+1 < ... < n < 1 < ... < M."""
    for x in (a, b):
        if not 1 <= x <= g.n:
            raise ValueError(f"letter {x} outside 1..{g.n}")
    ra, rb = g.rank(SIGMA, a), g.rank(SIGMA, b)
    return (ra > rb) - (ra < rb)
