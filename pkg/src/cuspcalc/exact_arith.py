"""Exact integer and real-quadratic arithmetic kernel.

Provides 2x2 integer matrices with Smith normal form, exact numbers
(p + q*sqrt(D))/r in a real quadratic field, minus (Hirzebruch-Jung)
continued fractions, and oriented rank-2 modules used by the lattice
quotient computations.  Everything is immutable and pure.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import (
    NotHyperbolic,
    NotStable,
    ParabolicCycle,
    RationalInput,
)

# ---------------------------------------------------------------------------
# 2x2 integer matrices
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class IntMat2:
    """Row-major 2x2 integer matrix [[a, b], [c, d]] with exact arithmetic."""

    a: int
    b: int
    c: int
    d: int

    @staticmethod
    def identity() -> "IntMat2":
        return IntMat2(1, 0, 0, 1)

    @property
    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    @property
    def trace(self) -> int:
        return self.a + self.d

    def __mul__(self, other: "IntMat2") -> "IntMat2":
        return IntMat2(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def __add__(self, other: "IntMat2") -> "IntMat2":
        return IntMat2(self.a + other.a, self.b + other.b,
                       self.c + other.c, self.d + other.d)

    def __sub__(self, other: "IntMat2") -> "IntMat2":
        return IntMat2(self.a - other.a, self.b - other.b,
                       self.c - other.c, self.d - other.d)

    def __neg__(self) -> "IntMat2":
        return IntMat2(-self.a, -self.b, -self.c, -self.d)

    def transpose(self) -> "IntMat2":
        return IntMat2(self.a, self.c, self.b, self.d)

    def rows(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return ((self.a, self.b), (self.c, self.d))

    def __repr__(self) -> str:
        return f"[[{self.a},{self.b}],[{self.c},{self.d}]]"


def _rowop(m: list[list[int]], i: int, j: int, k: int) -> None:
    m[i][0] += k * m[j][0]
    m[i][1] += k * m[j][1]


def snf_transforms(m: IntMat2) -> tuple[IntMat2, IntMat2, IntMat2]:
    """Return unimodular (U, S, V) with U * m * V = S = diag(s1, s2), s1 | s2.

    Works for singular input; zero invariant factors come last.
    """
    a = [[m.a, m.b], [m.c, m.d]]
    u = [[1, 0], [0, 1]]
    v = [[1, 0], [0, 1]]

    def row(i, j, k):  # row_i += k * row_j  (left transform)
        _rowop(a, i, j, k)
        _rowop(u, i, j, k)

    def col(i, j, k):  # col_i += k * col_j  (right transform)
        a[0][i] += k * a[0][j]
        a[1][i] += k * a[1][j]
        v[0][i] += k * v[0][j]
        v[1][i] += k * v[1][j]

    def swap_rows():
        a[0], a[1] = a[1], a[0]
        u[0], u[1] = u[1], u[0]

    def swap_cols():
        a[0][0], a[0][1] = a[0][1], a[0][0]
        a[1][0], a[1][1] = a[1][1], a[1][0]
        v[0][0], v[0][1] = v[0][1], v[0][0]
        v[1][0], v[1][1] = v[1][1], v[1][0]

    # Bring the pivot to a nonzero position if possible.
    if a[0][0] == 0:
        if a[1][0] != 0:
            swap_rows()
        elif a[0][1] != 0:
            swap_cols()
        elif a[1][1] != 0:
            swap_rows()
            swap_cols()
    # Euclid on row/column until the off-pivot entries vanish.
    while a[0][0] != 0 and (a[1][0] != 0 or a[0][1] != 0):
        if a[1][0] != 0:
            q = a[1][0] // a[0][0]
            row(1, 0, -q)
            if a[1][0] != 0:
                swap_rows()
            continue
        q = a[0][1] // a[0][0]
        col(1, 0, -q)
        if a[0][1] != 0:
            swap_cols()
    # Divisibility fix: fold s2 into column 0 and re-run one Euclid pass.
    if a[0][0] != 0 and a[1][1] != 0 and a[1][1] % a[0][0] != 0:
        col(0, 1, 1)
        while a[1][0] != 0:
            q = a[1][0] // a[0][0]
            row(1, 0, -q)
            if a[1][0] != 0:
                swap_rows()
        q = a[0][1] // a[0][0]
        col(1, 0, -q)
    # Sign normalization.
    if a[0][0] < 0:
        row(0, 0, -2)  # negate row 0: row0 += -2*row0
    if a[1][1] < 0:
        row(1, 1, -2)
    return (
        IntMat2(u[0][0], u[0][1], u[1][0], u[1][1]),
        IntMat2(a[0][0], a[0][1], a[1][0], a[1][1]),
        IntMat2(v[0][0], v[0][1], v[1][0], v[1][1]),
    )


def snf_diagonal(m: IntMat2) -> tuple[int, int]:
    """Invariant factors (s1, s2) of m with s1 | s2; zeros for infinite summands."""
    _, s, _ = snf_transforms(m)
    return (s.a, s.d)


@dataclass(frozen=True)
class AbelianInvariants:
    """Finitely generated abelian group as invariant factors s1 | s2 | ...

    Factors equal to 1 are dropped; a factor 0 denotes an infinite cyclic
    summand.  The empty tuple is the trivial group.
    """

    factors: tuple[int, ...]

    def __post_init__(self):
        fin = [f for f in self.factors if f != 0]
        for x, y in zip(fin, fin[1:]):
            if y % x != 0:
                raise ValueError(f"invariant factors must divide in order: {self.factors}")
        if any(f < 0 or f == 1 for f in self.factors):
            raise ValueError(f"factors must be 0 or > 1: {self.factors}")

    @staticmethod
    def from_diagonal(diag: Iterable[int]) -> "AbelianInvariants":
        kept = tuple(f for f in diag if f != 1)
        fin = tuple(sorted(f for f in kept if f != 0))
        inf = tuple(f for f in kept if f == 0)
        return AbelianInvariants(fin + inf)

    @property
    def order(self) -> int | None:
        """Group order, or None for an infinite group."""
        if any(f == 0 for f in self.factors):
            return None
        n = 1
        for f in self.factors:
            n *= f
        return n

    def is_cyclic(self) -> bool:
        return len(self.factors) <= 1

    def __str__(self) -> str:
        if not self.factors:
            return "trivial"
        return " + ".join("Z" if f == 0 else f"Z/{f}" for f in self.factors)


def smith_normal_form(m: IntMat2) -> AbelianInvariants:
    """Cokernel of m acting on Z^2, via Smith normal form.

    The product of the finite invariant factors equals |det m| when m is
    nonsingular.
    """
    return AbelianInvariants.from_diagonal(snf_diagonal(m))


# ---------------------------------------------------------------------------
# Quadratic surds
# ---------------------------------------------------------------------------

@functools.lru_cache(maxsize=65536)
def _square_split(n: int) -> tuple[int, int]:
    """Write n = f*f * m with m square-reduced; returns (f, m).

    Trial division up to 10^4 plus a perfect-square test of the cofactor.
    That keeps every radicand appearing in this calculus square-free; a
    residual square prime factor above the bound is harmless because value
    equality and hashing never rely on square-freeness.
    """
    f = 1
    p = 2
    while p * p <= n and p <= 10_000:
        while n % (p * p) == 0:
            n //= p * p
            f *= p
        p += 1 if p == 2 else 2
    s = math.isqrt(n)
    if s * s == n:
        return f * s, 1
    return f, n


def _sign3(x: int) -> int:
    return (x > 0) - (x < 0)


def _sign_p_plus_q_sqrtD(p: int, q: int, d: int) -> int:
    """Exact sign of p + q*sqrt(d), d >= 0."""
    if q == 0 or d == 0:
        return _sign3(p)
    if p == 0:
        return _sign3(q)
    if p > 0 and q > 0:
        return 1
    if p < 0 and q < 0:
        return -1
    lhs, rhs = p * p, q * q * d
    if lhs == rhs:
        return 0
    # exactly one of p, q is negative
    if p > 0:
        return 1 if lhs > rhs else -1
    return -1 if lhs > rhs else 1


@dataclass(frozen=True)
class QuadSurd:
    """Exact value (p + q*sqrt(D))/r with integer p, q, r and D > 0.

    Stored with r > 0 and gcd(p, q, r) = 1; the square part of D is folded
    into q.  Rational values use q = 0, D = 1.  Equality and hashing are by
    value, so two representations of the same number always compare equal.
    """

    p: int
    q: int
    r: int = 1
    D: int = 1

    def __post_init__(self):
        p, q, r, d = self.p, self.q, self.r, self.D
        if r == 0:
            raise ZeroDivisionError("denominator r must be nonzero")
        if q != 0 and d <= 0:
            raise ValueError("radicand D must be positive (real quadratic only)")
        if q != 0:
            f, d = _square_split(d)
            q *= f
            if d == 1:
                p, q = p + q, 0
        if q == 0:
            d = 1
        if r < 0:
            p, q, r = -p, -q, -r
        g = math.gcd(math.gcd(abs(p), abs(q)), r)
        if g > 1:
            p, q, r = p // g, q // g, r // g
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "D", d)

    # -- basic structure ----------------------------------------------------

    @property
    def is_rational(self) -> bool:
        return self.q == 0

    def as_fraction(self) -> Fraction:
        if not self.is_rational:
            raise RationalInput(f"{self} is irrational")
        return Fraction(self.p, self.r)

    def parts(self) -> tuple[Fraction, Fraction]:
        """(rational part, coefficient of sqrt(D)) as exact fractions."""
        return Fraction(self.p, self.r), Fraction(self.q, self.r)

    def conjugate(self) -> "QuadSurd":
        return QuadSurd(self.p, -self.q, self.r, self.D)

    def norm(self) -> Fraction:
        """Field norm x * conj(x)."""
        return Fraction(self.p * self.p - self.q * self.q * self.D,
                        self.r * self.r)

    def field_trace(self) -> Fraction:
        return Fraction(2 * self.p, self.r)

    # -- field compatibility -------------------------------------------------

    def _rebased(self, d: int) -> tuple[int, int, int]:
        """(p, q, r) of self rewritten over sqrt(d); raises on field mismatch."""
        if self.q == 0:
            return self.p, 0, self.r
        if self.D == d:
            return self.p, self.q, self.r
        prod = self.D * d
        s = math.isqrt(prod)
        if s * s != prod:
            raise NotStable(f"sqrt({self.D}) does not lie in Q(sqrt({d}))")
        # sqrt(D) = (s/d) * sqrt(d)
        return self.p * d, self.q * s, self.r * d

    @staticmethod
    def _coerce(x) -> "QuadSurd":
        if isinstance(x, QuadSurd):
            return x
        if isinstance(x, int):
            return QuadSurd(x, 0, 1, 1)
        if isinstance(x, Fraction):
            return QuadSurd(x.numerator, 0, x.denominator, 1)
        return NotImplemented  # type: ignore[return-value]

    def _common(self, other) -> tuple[int, "QuadSurd", "QuadSurd"]:
        o = self._coerce(other)
        if o is NotImplemented:
            raise TypeError(f"cannot combine QuadSurd with {type(other)}")
        d = self.D if not self.is_rational else o.D
        p1, q1, r1 = self._rebased(d)
        p2, q2, r2 = o._rebased(d)
        return d, QuadSurd(p1, q1, r1, d), QuadSurd(p2, q2, r2, d)

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other):
        d, x, y = self._common(other)
        return QuadSurd(x.p * y.r + y.p * x.r, x.q * y.r + y.q * x.r,
                        x.r * y.r, d)

    __radd__ = __add__

    def __neg__(self):
        return QuadSurd(-self.p, -self.q, self.r, self.D)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        d, x, y = self._common(other)
        return QuadSurd(x.p * y.p + x.q * y.q * d, x.p * y.q + x.q * y.p,
                        x.r * y.r, d)

    __rmul__ = __mul__

    def inverse(self) -> "QuadSurd":
        n = self.p * self.p - self.q * self.q * self.D
        if n == 0:
            raise ZeroDivisionError("inverse of zero surd")
        return QuadSurd(self.r * self.p, -self.r * self.q, n, self.D)

    def __truediv__(self, other):
        o = self._coerce(other)
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    # -- order and integer parts ----------------------------------------------

    def sign(self) -> int:
        return _sign_p_plus_q_sqrtD(self.p, self.q, self.D)

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        a1, b1 = self.parts()
        a2, b2 = o.parts()
        return (a1 == a2 and b1 * b1 * self.D == b2 * b2 * o.D
                and (b1 > 0) == (b2 > 0))

    def __hash__(self):
        a, b = self.parts()
        return hash((a, b * b * self.D, b > 0))

    def floor(self) -> int:
        # |q|*sqrt(D) lies in [s, s+1); adjust the candidate exactly.
        s = math.isqrt(self.q * self.q * self.D)
        lo = self.p + (s if self.q >= 0 else -s - 1)
        n = lo // self.r - 1
        while _sign_p_plus_q_sqrtD(self.p - (n + 1) * self.r, self.q, self.D) >= 0:
            n += 1
        return n

    def ceil(self) -> int:
        n = self.floor()
        if self.is_rational and self.r == 1:
            return n
        return n + 1 if self != n else n

    def __float__(self) -> float:
        return (self.p + self.q * math.sqrt(self.D)) / self.r

    def __repr__(self) -> str:
        if self.is_rational:
            return f"{self.p}" if self.r == 1 else f"{self.p}/{self.r}"
        qs = "" if abs(self.q) == 1 else f"{abs(self.q)}"
        core = f"{self.p}{'+' if self.q > 0 else '-'}{qs}sqrt({self.D})"
        return f"({core})" if self.r == 1 else f"({core})/{self.r}"


# ---------------------------------------------------------------------------
# Minus continued fractions
# ---------------------------------------------------------------------------


def _digit_product(period: Sequence[int]) -> IntMat2:
    """Product [[d0,1],[-1,0]] convention transposed for fixed points: the
    matrix T(d0)*...*T(dn-1) with T(d) = [[d,-1],[1,0]], whose attracting
    fixed point is the purely periodic minus continued fraction."""
    m = IntMat2.identity()
    for d in period:
        m = m * IntMat2(d, -1, 1, 0)
    return m


def surd_from_cycle(period: Sequence[int]) -> QuadSurd:
    """Root > 1 of x = d0 - 1/(d1 - 1/(... - 1/x)) for the given period.

    Entries must be >= 2 with some entry >= 3; an all-2 period gives a
    parabolic equation and raises ParabolicCycle.
    """
    word = [int(d) for d in period]
    if not word:
        raise ValueError("empty period")
    if any(d < 2 for d in word):
        raise ValueError(f"period entries must be >= 2: {word}")
    if all(d == 2 for d in word):
        raise ParabolicCycle(f"period {word} is all 2s")
    m = _digit_product(word)
    t = m.trace
    disc = t * t - 4
    if disc <= 0:
        raise ParabolicCycle(f"period {word} is not hyperbolic (trace {t})")
    # fixed points of x -> (p x + q)/(r x + s); r > 0 for these products
    return QuadSurd(m.a - m.d, 1, 2 * m.c, disc)


def hj_expansion(x: QuadSurd, max_steps: int = 10**6) -> tuple[list[int], list[int]]:
    """Minus continued fraction digits of a real quadratic irrational.

    Digits are a_k = ceil(x_k), x_{k+1} = 1/(a_k - x_k).  Returns
    (preperiod, period); the period is minimal and starts at the first
    repeated iterate, so surd_from_cycle(period) equals that iterate.
    """
    if x.is_rational:
        raise RationalInput(f"{x} is rational; expansion does not terminate periodically")
    seen: dict[QuadSurd, int] = {}
    digits: list[int] = []
    cur = x
    for _ in range(max_steps):
        if cur in seen:
            k = seen[cur]
            return digits[:k], digits[k:]
        seen[cur] = len(digits)
        a = cur.ceil()
        digits.append(a)
        cur = (QuadSurd(a, 0, 1, 1) - cur).inverse()
    raise RuntimeError("period not detected within the iteration cap")


def eigen_unit(t: int) -> QuadSurd:
    """The eigenvalue (t + sqrt(t^2 - 4))/2, satisfying x + 1/x = t exactly."""
    if abs(t) <= 2:
        raise NotHyperbolic(f"|trace| must exceed 2, got {t}")
    return QuadSurd(t, 1, 2, t * t - 4)


# ---------------------------------------------------------------------------
# Oriented rank-2 modules
# ---------------------------------------------------------------------------


def _orientation(g1: QuadSurd, g2: QuadSurd) -> int:
    """Sign of g1*conj(g2) - g2*conj(g1) under the real embedding sqrt(D) > 0."""
    w = g1 * g2.conjugate() - g2 * g1.conjugate()
    return w.sign()


@dataclass(frozen=True)
class QuadModule:
    """Rank-2 Z-module Z*g1 + Z*g2 inside a real quadratic field.

    Generators are stored in positively oriented order, meaning
    g1*conj(g2) - g2*conj(g1) > 0.  The orientation matters: scaling by an
    element of negative norm swaps the two real embeddings, which is what
    sends a cusp to its dual.
    """

    g1: QuadSurd
    g2: QuadSurd

    def __post_init__(self):
        g1, g2 = self.g1, self.g2
        if g1.is_rational and g2.is_rational:
            raise ValueError("generators span a rank-1 module")
        d = g1.D if not g1.is_rational else g2.D
        p1, q1, r1 = g1._rebased(d)
        p2, q2, r2 = g2._rebased(d)
        g1 = QuadSurd(p1, q1, r1, d)
        g2 = QuadSurd(p2, q2, r2, d)
        s = _orientation(g1, g2)
        if s == 0:
            raise ValueError("generators are Q-linearly dependent")
        if s < 0:
            g1, g2 = g2, g1
        object.__setattr__(self, "g1", g1)
        object.__setattr__(self, "g2", g2)

    @property
    def field_radicand(self) -> int:
        return self.g1.D if not self.g1.is_rational else self.g2.D

    def coords(self, x: QuadSurd) -> tuple[Fraction, Fraction]:
        """Exact (alpha, beta) with x = alpha*g1 + beta*g2."""
        d = self.field_radicand
        xp, xq, xr = x._rebased(d)
        a1, b1 = Fraction(self.g1.p, self.g1.r), Fraction(self.g1.q, self.g1.r)
        a2, b2 = Fraction(self.g2.p, self.g2.r), Fraction(self.g2.q, self.g2.r)
        xa, xb = Fraction(xp, xr), Fraction(xq, xr)
        det = a1 * b2 - a2 * b1
        alpha = (xa * b2 - xb * a2) / det
        beta = (a1 * xb - b1 * xa) / det
        return alpha, beta

    def contains(self, x: QuadSurd) -> bool:
        try:
            a, b = self.coords(x)
        except NotStable:
            return False
        return a.denominator == 1 and b.denominator == 1

    def element(self, m: int, n: int) -> QuadSurd:
        return self.g1 * m + self.g2 * n

    def scaled(self, u: QuadSurd) -> "QuadModule":
        return QuadModule(self.g1 * u, self.g2 * u)

    def multiplication_matrix(self, u: QuadSurd) -> IntMat2:
        """Integer matrix of x -> u*x in the oriented basis; rows are the
        coordinates of u*g1 and u*g2.  Raises NotStable unless u*M <= M."""
        rows = []
        for g in (self.g1, self.g2):
            try:
                a, b = self.coords(u * g)
            except NotStable as exc:
                raise NotStable(f"{u} does not act on the module: {exc}") from exc
            if a.denominator != 1 or b.denominator != 1:
                raise NotStable(f"{u} * {g} leaves the module")
            rows.append((int(a), int(b)))
        return IntMat2(rows[0][0], rows[0][1], rows[1][0], rows[1][1])

    def with_generator(self, v: QuadSurd) -> "QuadModule":
        """Module generated by g1, g2 and v (Hermite reduction of the span)."""
        d = self.field_radicand
        triples = [g._rebased(d) for g in (self.g1, self.g2, v)]
        den = 1
        for _, _, r in triples:
            den = den * r // math.gcd(den, r)
        rows = [(p * (den // r), q * (den // r)) for p, q, r in triples]
        basis = _lattice_basis(rows)
        gens = [QuadSurd(x, y, den, d) for x, y in basis]
        return QuadModule(gens[0], gens[1])

    def basis_matrix_in(self, other: "QuadModule") -> IntMat2:
        """Integer coordinates of this module's basis inside a larger module."""
        rows = []
        for g in (self.g1, self.g2):
            a, b = other.coords(g)
            if a.denominator != 1 or b.denominator != 1:
                raise ValueError("module is not contained in the target")
            rows.append((int(a), int(b)))
        return IntMat2(rows[0][0], rows[0][1], rows[1][0], rows[1][1])

    def __eq__(self, other):
        if not isinstance(other, QuadModule):
            return NotImplemented
        return (self.contains(other.g1) and self.contains(other.g2)
                and other.contains(self.g1) and other.contains(self.g2))

    def __hash__(self):
        raise TypeError("QuadModule is unhashable; compare with ==")

    def __repr__(self) -> str:
        return f"Z*{self.g1!r} + Z*{self.g2!r}"


def _lattice_basis(rows: list[tuple[int, int]]) -> list[tuple[int, int]]:
    """Basis of the sublattice of Z^2 spanned by the given rows (rank 2)."""
    work = [list(r) for r in rows if r != (0, 0)]
    # eliminate first coordinates down to one row by gcd steps
    while sum(1 for r in work if r[0] != 0) > 1:
        nz = sorted((r for r in work if r[0] != 0), key=lambda r: abs(r[0]))
        r0, r1 = nz[0], nz[1]
        q = r1[0] // r0[0]
        r1[0] -= q * r0[0]
        r1[1] -= q * r0[1]
    first = next((r for r in work if r[0] != 0), None)
    if first is None:
        raise ValueError("rows do not span a rank-2 lattice")
    rest = [r[1] for r in work if r[0] == 0]
    g = 0
    for y in rest:
        g = math.gcd(g, y)
    if g == 0:
        raise ValueError("rows do not span a rank-2 lattice")
    x0, y0 = first
    if x0 < 0:
        x0, y0 = -x0, -y0
    y0 %= g
    return [(x0, y0), (0, g)]


def mult_matrix(mod: QuadModule, u: QuadSurd) -> IntMat2:
    """Matrix of multiplication by u on mod; det equals the field norm of u."""
    return mod.multiplication_matrix(u)
