"""Exact Laurent polynomials and rational functions, q-integers, spectral
coefficients of the quantum R matrix on symmetric powers, and the polarization
norms on W_s.  Polynomials are generic over a coefficient field, so the second
variable z is handled with rational functions in q as coefficients."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

Coeff = object  # Fraction, or RationalFn for polynomials in z


def _is_zero(c) -> bool:
    return c == 0


class LaurentPoly:
    """Finite sum of c_k x^k with k in Z; zero coefficients are never stored."""

    __slots__ = ("terms", "var", "_hash")

    def __init__(self, terms: Mapping[int, Coeff] | None = None, var: str = "q"):
        self.terms = {int(k): (Fraction(c) if isinstance(c, int) else c)
                      for k, c in (terms or {}).items() if not _is_zero(c)}
        self.var = var
        self._hash = None

    @classmethod
    def const(cls, c, var: str = "q") -> "LaurentPoly":
        return cls({0: c}, var)

    @classmethod
    def monomial(cls, k: int, c=1, var: str = "q") -> "LaurentPoly":
        return cls({k: c}, var)

    # -- structure
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def low(self) -> int:
        return min(self.terms)

    @property
    def high(self) -> int:
        return max(self.terms)

    def coeff(self, k: int):
        return self.terms.get(k, 0)

    def shift(self, k: int) -> "LaurentPoly":
        return LaurentPoly({e + k: c for e, c in self.terms.items()}, self.var)

    def _lift(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            if other.var != self.var and other.terms and self.terms:
                raise ValueError(f"mixing variables {self.var} and {other.var}")
            return other
        return LaurentPoly.const(other, self.var)

    # -- arithmetic
    def __add__(self, other):
        other = self._lift(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out[k] + c if k in out else c
        return LaurentPoly(out, self.var)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({k: -c for k, c in self.terms.items()}, self.var)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, LaurentPoly):
            return LaurentPoly({k: c * other for k, c in self.terms.items()}, self.var)
        other = self._lift(other)
        out: dict = {}
        for a, c in self.terms.items():
            for b, d in other.terms.items():
                out[a + b] = out[a + b] + c * d if a + b in out else c * d
        return LaurentPoly(out, self.var)

    def __rmul__(self, other):
        return LaurentPoly({k: other * c for k, c in self.terms.items()}, self.var)

    def __pow__(self, e: int):
        if e < 0:
            if len(self.terms) != 1:
                raise ValueError("only monomials have Laurent inverses")
            (k, c), = self.terms.items()
            return LaurentPoly({k * e: (1 / c) ** (-e)}, self.var)
        out = LaurentPoly.const(1, self.var)
        for _ in range(e):
            out = out * self
        return out

    def __truediv__(self, other):
        """Exact division; raises if the quotient is not a Laurent polynomial."""
        if not isinstance(other, LaurentPoly):
            return LaurentPoly({k: c / other for k, c in self.terms.items()}, self.var)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return self
        a, b = self.shift(-self.low), other.shift(-other.low)
        quo, rem = _poly_divmod(a, b)
        if not rem.is_zero():
            raise ValueError("division is not exact")
        return quo.shift(self.low - other.low)

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.terms == other.terms
        return self.terms == LaurentPoly.const(other, self.var).terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def evaluate(self, x):
        """Substitute the variable by x (any ring element with inverse when needed)."""
        total = 0
        for k, c in self.terms.items():
            total = total + c * (x ** k if k >= 0 else (1 / x) ** (-k))
        return total

    def mirror(self) -> "LaurentPoly":
        """x -> 1/x."""
        return LaurentPoly({-k: c for k, c in self.terms.items()}, self.var)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for k in sorted(self.terms, reverse=True):
            c = self.terms[k]
            if isinstance(c, Fraction):
                sign = "-" if c < 0 else "+"
                mag = abs(c)
                coef = "" if (mag == 1 and k != 0) else str(mag)
            elif c == 1 and k != 0:
                sign, coef = "+", ""
            elif c == -1 and k != 0:
                sign, coef = "-", ""
            else:
                text = str(c)
                if " " in text or "/" in text:
                    sign, coef = "+", f"({text})"
                elif text.startswith("-"):
                    sign, coef = "-", text[1:]
                else:
                    sign, coef = "+", text
            mono = "" if k == 0 else (self.var if k == 1 else f"{self.var}^{k}")
            body = coef + ("*" if coef and mono and not coef.startswith("(") else "") + mono
            parts.append((sign, body or "1"))
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    __repr__ = __str__


def _poly_divmod(a: LaurentPoly, b: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
    """Division of ordinary polynomials (all exponents >= 0) over a field."""
    quo: dict = {}
    rem = a
    db, lb = b.high, b.coeff(b.high)
    while not rem.is_zero() and rem.high >= db:
        k = rem.high - db
        c = rem.coeff(rem.high) / lb
        quo[k] = c
        rem = rem - b * LaurentPoly({k: c}, a.var)
    return LaurentPoly(quo, a.var), rem


def _poly_gcd(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    while not b.is_zero():
        a, b = b, _poly_divmod(a, b)[1]
    return a


class RationalFn:
    """num/den with polynomial parts coprime, stored as x^k A(x)/B(x) where A, B
    have nonzero constant terms and B(0) = 1."""

    __slots__ = ("shift", "num", "den", "var")

    def __init__(self, num, den=None, var: str | None = None):
        if not isinstance(num, LaurentPoly):
            num = LaurentPoly.const(num, var or "q")
        var = num.var if var is None else var
        if den is None:
            den = LaurentPoly.const(1, var)
        elif not isinstance(den, LaurentPoly):
            den = LaurentPoly.const(den, var)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        self.var = var
        if num.is_zero():
            self.shift, self.num, self.den = 0, LaurentPoly({}, var), LaurentPoly.const(1, var)
            return
        k = num.low - den.low
        a, b = num.shift(-num.low), den.shift(-den.low)
        g = _poly_gcd(a, b)
        if g.high > 0:
            a, b = _poly_divmod(a, g)[0], _poly_divmod(b, g)[0]
        c = b.coeff(0)
        self.shift, self.num, self.den = k, a * (1 / c), b * (1 / c)

    @classmethod
    def of(cls, x, var: str = "q") -> "RationalFn":
        if isinstance(x, RationalFn):
            if x.var != var:
                raise ValueError(f"mixing variables {x.var} and {var}")
            return x
        if isinstance(x, LaurentPoly) and x.terms and x.var != var:
            raise ValueError(f"mixing variables {x.var} and {var}")
        return cls(x, var=var)

    @property
    def numerator(self) -> LaurentPoly:
        return self.num.shift(self.shift)

    @property
    def denominator(self) -> LaurentPoly:
        return self.den

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __add__(self, other):
        o = RationalFn.of(other, self.var)
        return RationalFn(self.numerator * o.den + o.numerator * self.den, self.den * o.den, self.var)

    __radd__ = __add__

    def __neg__(self):
        return RationalFn(-self.numerator, self.den, self.var)

    def __sub__(self, other):
        return self + (-RationalFn.of(other, self.var))

    def __rsub__(self, other):
        return RationalFn.of(other, self.var) - self

    def __mul__(self, other):
        o = RationalFn.of(other, self.var)
        return RationalFn(self.numerator * o.numerator, self.den * o.den, self.var)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = RationalFn.of(other, self.var)
        if o.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RationalFn(self.numerator * o.den, self.den * o.numerator, self.var)

    def __rtruediv__(self, other):
        return RationalFn.of(other, self.var) / self

    def __pow__(self, e: int):
        if e < 0:
            return (1 / self) ** (-e)
        out = RationalFn(1, var=self.var)
        for _ in range(e):
            out = out * self
        return out

    def _key(self):
        return (self.shift, self.num, self.den)

    def __eq__(self, other):
        if isinstance(other, RationalFn):
            return self._key() == other._key()
        if isinstance(other, (int, Fraction, LaurentPoly)):
            return self._key() == RationalFn(other, var=self.var)._key()
        return NotImplemented

    def __hash__(self):
        return hash(self._key())

    def evaluate(self, x):
        d = self.den.evaluate(x)
        if d == 0:
            raise ZeroDivisionError(f"pole at {self.var} = {x}")
        return self.numerator.evaluate(x) / d

    def mirror(self) -> "RationalFn":
        return RationalFn(self.numerator.mirror(), self.den.mirror(), self.var)

    def __str__(self) -> str:
        num = str(self.numerator)
        if self.den == 1:
            return num
        return f"({num})/({self.den})"

    __repr__ = __str__


def q_poly(terms: Mapping[int, int]) -> LaurentPoly:
    return LaurentPoly(terms, "q")


Q = LaurentPoly.monomial(1)


def a0_regular(f: RationalFn | LaurentPoly) -> bool:
    """Regular at q = 0: after clearing common powers of q, no negative power remains."""
    f = RationalFn.of(f)
    return f.is_zero() or f.shift >= 0


def value_at_0(f: RationalFn | LaurentPoly) -> Fraction:
    f = RationalFn.of(f)
    if not a0_regular(f):
        raise ValueError(f"{f} has a pole at q = 0")
    if f.is_zero() or f.shift > 0:
        return Fraction(0)
    return f.num.coeff(0)


# ---------------------------------------------------------------- q-numbers

def q_int(m: int) -> LaurentPoly:
    """(q^m - q^-m)/(q - q^-1)."""
    if m < 0:
        raise ValueError(f"q_int needs m >= 0, got {m}")
    return q_poly({m - 1 - 2 * j: 1 for j in range(m)})


@lru_cache(maxsize=None)
def q_factorial(m: int) -> LaurentPoly:
    if m < 0:
        raise ValueError(f"q_factorial needs m >= 0, got {m}")
    out = LaurentPoly.const(1)
    for j in range(1, m + 1):
        out = out * q_int(j)
    return out


_binom_cache: dict[tuple[int, int], LaurentPoly] = {}


def q_binom(m: int, k: int) -> LaurentPoly:
    """Symmetric q-binomial by the recursion q^-k [m-1,k] + q^(m-k) [m-1,k-1]."""
    if not 0 <= k <= m:
        raise ValueError(f"q_binom needs 0 <= k <= m, got ({m}, {k})")
    if k in (0, m):
        return LaurentPoly.const(1)
    key = (m, k)
    if key not in _binom_cache:
        _binom_cache[key] = q_binom(m - 1, k).shift(-k) + q_binom(m - 1, k - 1).shift(m - k)
    return _binom_cache[key]


# ------------------------------------------------- spectral decomposition

def _check_mn(M: int, N: int) -> int:
    if M < 0 or N < 0 or M + N < 1:
        raise ValueError(f"need M, N >= 0 with M + N >= 1, got ({M}, {N})")
    return M + N


def _hook(M: int, N: int, lam: Iterable[int]) -> bool:
    lam = [x for x in lam if x > 0]
    return len(lam) <= M or lam[M] <= N


def h_range(M: int, N: int, l: int, m: int) -> list[int]:
    """t with (l+m-t, t) an (M|N)-hook partition."""
    _check_mn(M, N)
    return [t for t in range(min(l, m) + 1) if _hook(M, N, (l + m - t, t))]


def rho_range(M: int, N: int, l: int, m: int) -> range:
    n = _check_mn(M, N)
    if M == 0:
        return range(max(l + m - n, 0), min(l, m) + 1)
    if M == 1:
        return range(0, min(l, m, n - 1) + 1)
    return range(0, min(l, m) + 1)


def _z_const(c) -> LaurentPoly:
    return LaurentPoly.const(RationalFn.of(c), "z")


Z = LaurentPoly.monomial(1, RationalFn(1), "z")


def _zfactor(a: LaurentPoly, inverted: bool) -> RationalFn:
    """(z - a)/(1 - a z), or its reciprocal."""
    A = RationalFn.of(a)
    top = Z - _z_const(A)
    bot = _z_const(1) - Z * A
    return RationalFn(bot, top, "z") if inverted else RationalFn(top, bot, "z")


@lru_cache(maxsize=None)
def _zproduct(exponents: tuple[int, ...], inverted: bool) -> RationalFn:
    out = RationalFn(_z_const(1), var="z")
    for e in exponents:
        out = out * _zfactor(Q ** e, inverted)
    return out


def rho_coeff(M: int, N: int, l: int, m: int, t: int) -> RationalFn:
    """Coefficient of the t-th projector in PR(z) on W_l (x) W_m."""
    rng = rho_range(M, N, l, m)
    if t not in rng:
        raise ValueError(f"t = {t} outside {rng.start}..{rng.stop - 1}")
    if M == 0:
        return _zproduct(tuple(l + m - 2 * i + 2 for i in range(t + 1, min(l, m) + 1)), True)
    return _zproduct(tuple(l + m - 2 * i + 2 for i in range(1, t + 1)), False)


def rhat_is_hook(M: int, N: int, s: int) -> bool:
    return _hook(M, N, (s, s))


def rhat_coeff(M: int, N: int, s: int, t: int) -> RationalFn:
    """Coefficient of the t-th projector in the normalized R matrix on W_s (x) W_s."""
    n = _check_mn(M, N)
    if M < 1:
        raise ValueError("the normalized R matrix is taken for M >= 1")
    top = s if rhat_is_hook(M, N, s) else n - 1
    if not 0 <= t <= top:
        raise ValueError(f"t = {t} outside 0..{top}")
    return _zproduct(tuple(2 * s - 2 * i + 2 for i in range(t + 1, s + 1)), True)


def rhat_by_normalization(M: int, N: int, s: int, t: int) -> RationalFn:
    """Same coefficient, as the normalizing product times rho_t(z)."""
    norm = _zproduct(tuple(2 * s - 2 * i + 2 for i in range(1, s + 1)), True)
    return norm * rho_coeff(M, N, s, s, t)


@lru_cache(maxsize=None)
def substitute_z(f: RationalFn, zval: RationalFn) -> RationalFn:
    """f(z) at z = zval, a rational function in q; raises at a pole."""
    d = f.den.evaluate(zval)
    if RationalFn.of(d).is_zero():
        raise ZeroDivisionError(f"pole at z = {zval}")
    return RationalFn.of(f.numerator.evaluate(zval)) / d


def rhat_pole_check(M: int, N: int, s: int, k_max: int) -> dict:
    """Substitute z = q^(-2k), 0 <= k <= k_max, in every coefficient of the
    normalized R matrix; also compare the product form with normalization x rho."""
    if s < 1:
        raise ValueError("s >= 1 required")
    hook = rhat_is_hook(M, N, s)
    ts = range(0, (s if hook else M + N - 1) + 1)
    violations = []
    values = {}
    for t in ts:
        f = rhat_coeff(M, N, s, t)
        if t in rho_range(M, N, s, s) and f != rhat_by_normalization(M, N, s, t):
            violations.append(f"t={t}: product form differs from normalization times rho")
        for k in range(k_max + 1):
            try:
                v = substitute_z(f, RationalFn(Q ** (-2 * k)))
            except ZeroDivisionError:
                violations.append(f"t={t}: pole at z=q^{-2 * k}")
                continue
            values[(t, k)] = v
    return {"check": "rhat_poles", "params": {"M": M, "N": N, "s": s, "k_max": k_max, "hook": hook},
            "violations": violations, "values": values}


# ------------------------------------------------------------ polarization

def polarization_norm(M: int, N: int, m: Iterable[int]) -> RationalFn:
    """(|m>, |m>) = q^(-sum_{i<j} m_i m_j) prod [m_i]! / [|m|]!."""
    n = _check_mn(M, N)
    m = list(m)
    if len(m) != n:
        raise ValueError(f"occupation vector needs {n} entries")
    for i, x in enumerate(m, start=1):
        if x < 0 or (i > M and x > 1):
            raise ValueError(f"invalid occupation m_{i} = {x}")
    cross = sum(m[i] * m[j] for i in range(n) for j in range(i + 1, n))
    # [|m|]! / prod [m_i]! as a product of q-binomials
    multinomial = LaurentPoly.const(1)
    total = 0
    for x in m:
        total += x
        multinomial = multinomial * q_binom(total, x)
    return RationalFn(LaurentPoly.monomial(-cross), multinomial)


def occupation_vectors(M: int, N: int, max_boxes: int) -> Iterable[tuple[int, ...]]:
    n = _check_mn(M, N)

    def rec(i, left, acc):
        if i == n:
            yield tuple(acc)
            return
        top = left if i < M else min(left, 1)
        for x in range(top + 1):
            acc.append(x)
            yield from rec(i + 1, left - x, acc)
            acc.pop()

    yield from rec(0, max_boxes, [])


def in_one_plus_qA0(f: RationalFn) -> bool:
    return a0_regular(f) and value_at_0(f) == 1
