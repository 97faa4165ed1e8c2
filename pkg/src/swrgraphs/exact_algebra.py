"""Exact integer matrices, integer polynomials, and exact adjacency spectra.

Everything here is arbitrary-precision: matrices hold Python ints, polynomial
division happens only by monic divisors (so quotients stay integral), and
rational intermediate results use fractions.Fraction. No floating point
touches any value a decision depends on.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Iterable, Sequence, Union

from .graphs import Graph


class ExactnessError(RuntimeError):
    """An identity that exact arithmetic guarantees failed; signals a bug."""


# ---------------------------------------------------------------------------
# Integer matrices
# ---------------------------------------------------------------------------

class IntMatrix:
    """Square matrix of Python ints."""

    __slots__ = ("n", "rows")

    def __init__(self, rows: Sequence[Sequence[int]]):
        self.rows = tuple(tuple(int(x) for x in row) for row in rows)
        self.n = len(self.rows)
        if any(len(row) != self.n for row in self.rows):
            raise ValueError("matrix must be square")

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, n: int) -> "IntMatrix":
        return cls([[0] * n for _ in range(n)])

    @classmethod
    def ones(cls, n: int) -> "IntMatrix":
        return cls([[1] * n for _ in range(n)])

    def __getitem__(self, ij: tuple[int, int]) -> int:
        return self.rows[ij[0]][ij[1]]

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        return IntMatrix([[a + b for a, b in zip(ra, rb)]
                          for ra, rb in zip(self.rows, other.rows)])

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        return IntMatrix([[a - b for a, b in zip(ra, rb)]
                          for ra, rb in zip(self.rows, other.rows)])

    def __mul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.n != other.n:
            raise ValueError("dimension mismatch")
        cols = list(zip(*other.rows))
        return IntMatrix([[sum(a * b for a, b in zip(row, col)) for col in cols]
                          for row in self.rows])

    def scale(self, c: int) -> "IntMatrix":
        return IntMatrix([[c * x for x in row] for row in self.rows])

    def trace(self) -> int:
        return sum(self.rows[i][i] for i in range(self.n))

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"IntMatrix({[list(r) for r in self.rows]!r})"


def adjacency_matrix(g: Graph) -> IntMatrix:
    rows = [[0] * g.n for _ in range(g.n)]
    for u in range(g.n):
        for v in g.neighbors(u):
            rows[u][v] = 1
    return IntMatrix(rows)


def mat_pow(a: IntMatrix, ell: int) -> IntMatrix:
    """a**ell by binary powering; mat_pow(a, 0) is the identity."""
    if ell < 0:
        raise ValueError("exponent must be nonnegative")
    result = IntMatrix.identity(a.n)
    base = a
    while ell:
        if ell & 1:
            result = result * base
        base = base * base if ell > 1 else base
        ell >>= 1
    return result


def mat_powers(a: IntMatrix, ell: int) -> list[IntMatrix]:
    """[a^0, a^1, ..., a^ell] by iterated multiplication.

    Used where the whole ladder of powers is needed; must agree with mat_pow
    entry for entry (tested).
    """
    out = [IntMatrix.identity(a.n)]
    for _ in range(ell):
        out.append(out[-1] * a)
    return out


# ---------------------------------------------------------------------------
# Integer polynomials (coefficients ascending by degree)
# ---------------------------------------------------------------------------

class IntPoly:
    """Integer-coefficient univariate polynomial.

    coeffs[i] is the coefficient of x^i; no trailing zeros are stored, and the
    zero polynomial has an empty coefficient tuple (degree -1).
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def constant(cls, c: int) -> "IntPoly":
        return cls((c,))

    @classmethod
    def x_power(cls, k: int) -> "IntPoly":
        return cls([0] * k + [1])

    @classmethod
    def from_roots(cls, roots: Iterable[int]) -> "IntPoly":
        p = cls((1,))
        for r in roots:
            p = p * cls((-r, 1))
        return p

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def coeff(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __neg__(self) -> "IntPoly":
        return IntPoly(-c for c in self.coeffs)

    def __add__(self, other: "IntPoly") -> "IntPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return IntPoly([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return self + (-other)

    def __mul__(self, other: "IntPoly") -> "IntPoly":
        if not self.coeffs or not other.coeffs:
            return IntPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly(out)

    def divmod_monic(self, q: "IntPoly") -> tuple["IntPoly", "IntPoly"]:
        """Exact division by a monic divisor: self = q*quot + rem, deg rem < deg q."""
        if not q.is_monic:
            raise ValueError("divisor must be monic and nonzero")
        dq = q.degree
        rem = list(self.coeffs)
        quot = [0] * max(0, len(rem) - dq)
        for i in range(len(rem) - dq - 1, -1, -1):
            c = rem[i + dq]
            if c:
                quot[i] = c
                for j, qc in enumerate(q.coeffs):
                    rem[i + j] -= c * qc
        return IntPoly(quot), IntPoly(rem[:dq])

    def derivative(self) -> "IntPoly":
        return IntPoly(i * c for i, c in enumerate(self.coeffs) if i > 0)

    def __call__(self, x):
        """Horner evaluation; works for int, Fraction, and similar rings."""
        acc = 0 * x
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def at_matrix(self, a: IntMatrix) -> IntMatrix:
        acc = IntMatrix.zero(a.n)
        for c in reversed(self.coeffs):
            acc = acc * a + IntMatrix.identity(a.n).scale(c)
        return acc

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            if i == 0:
                term = str(abs(c))
            else:
                mag = "" if abs(c) == 1 else f"{abs(c)}*"
                term = f"{mag}x" if i == 1 else f"{mag}x^{i}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if c > 0 else f"- {term}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)!r})"


def char_poly(a: IntMatrix) -> IntPoly:
    """Monic characteristic polynomial det(xI - A), exactly.

    Division-controlled recurrence (Faddeev-LeVerrier): every division by the
    step index is exact over the integers; a failed division would mean a bug
    and raises.
    """
    n = a.n
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    m = IntMatrix.identity(n)
    for k in range(1, n + 1):
        am = a * m
        t = -am.trace()
        if t % k:
            raise ExactnessError("characteristic polynomial trace division failed")
        c = t // k
        coeffs[n - k] = c
        if k < n:
            m = am + IntMatrix.identity(n).scale(c)
    return IntPoly(coeffs)


# --- rational-coefficient helpers (internal) -------------------------------

def _q(p: IntPoly) -> list[Fraction]:
    return [Fraction(c) for c in p.coeffs]


def _q_trim(cs: list[Fraction]) -> list[Fraction]:
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


def _q_rem(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a = a[:]
    while len(a) >= len(b) and a:
        f = a[-1] / b[-1]
        shift = len(a) - len(b)
        for i, c in enumerate(b):
            a[shift + i] -= f * c
        _q_trim(a)
    return a


def _q_div_exact(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a = a[:]
    out = [Fraction(0)] * (len(a) - len(b) + 1)
    while len(a) >= len(b) and a:
        f = a[-1] / b[-1]
        out[len(a) - len(b)] = f
        shift = len(a) - len(b)
        for i, c in enumerate(b):
            a[shift + i] -= f * c
        _q_trim(a)
    if a:
        raise ExactnessError("expected exact polynomial division")
    return out


def _q_to_intpoly(cs: Sequence[Fraction]) -> IntPoly:
    if any(c.denominator != 1 for c in cs):
        raise ExactnessError("polynomial expected to have integer coefficients")
    return IntPoly(c.numerator for c in cs)


def poly_gcd_monic(p: IntPoly, q: IntPoly) -> IntPoly:
    """Monic gcd over the rationals, returned with integer coefficients.

    For the monic inputs this library feeds it (characteristic polynomials and
    their derivatives), Gauss's lemma makes the monic gcd integral.
    """
    a, b = _q(p), _q(q)
    while b:
        a, b = b, _q_rem(a, b)
    if not a:
        raise ValueError("gcd of zero polynomials")
    lead = a[-1]
    return _q_to_intpoly([c / lead for c in a])


def squarefree_part(p: IntPoly) -> IntPoly:
    """p / gcd(p, p'), monic: the product of p's distinct irreducible factors."""
    if not p:
        raise ValueError("zero polynomial has no squarefree part")
    if not p.is_monic:
        raise ValueError("squarefree part expects a monic polynomial")
    if p.degree == 0:
        return IntPoly((1,))
    g = poly_gcd_monic(p, p.derivative())
    quot, rem = p.divmod_monic(g)
    if rem:
        raise ExactnessError("gcd does not divide its polynomial")
    return quot


def _q_sub(a: Sequence[Fraction], b: Sequence[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] -= c
    return _q_trim(out)


def _deriv_q(cs: Sequence[Fraction]) -> list[Fraction]:
    return [i * c for i, c in enumerate(cs) if i > 0]


def _q_gcd_monic(a: Sequence[Fraction], b: Sequence[Fraction]) -> list[Fraction]:
    x, y = list(a), list(b)
    while y:
        x, y = y, _q_rem(x, y)
    if not x:
        raise ValueError("gcd of zero polynomials")
    lead = x[-1]
    return [c / lead for c in x]


def squarefree_decomposition(p: IntPoly) -> list[tuple[IntPoly, int]]:
    """Yun's algorithm: monic p = product of f_i^i, f_i squarefree and pairwise coprime.

    Returns the nontrivial (f_i, i) pairs in increasing i; the factors are
    monic with integer coefficients.
    """
    if not p.is_monic:
        raise ValueError("squarefree decomposition expects a monic polynomial")
    out: list[tuple[IntPoly, int]] = []
    if p.degree == 0:
        return out
    a = _q(p)
    da = _deriv_q(a)
    g = _q_gcd_monic(a, da)
    c = _q_div_exact(a, g)
    d = _q_sub(_q_div_exact(da, g), _deriv_q(c))
    i = 1
    while len(c) > 1:
        f = _q_gcd_monic(c, d) if d else c[:]
        if len(f) > 1:
            out.append((_q_to_intpoly(f), i))
        c = _q_div_exact(c, f)
        d = _q_sub(_q_div_exact(d, f) if d else [], _deriv_q(c))
        i += 1
    return out


def x_pow_mod(ell: int, h: IntPoly) -> IntPoly:
    """Remainder of x^ell modulo monic h, by repeated squaring; ell=0 gives 1."""
    if h.degree < 1 or not h.is_monic:
        raise ValueError("modulus must be monic of degree >= 1")
    if ell < 0:
        raise ValueError("exponent must be nonnegative")
    result = IntPoly((1,))
    base = IntPoly.x_power(1).divmod_monic(h)[1]
    e = ell
    while e:
        if e & 1:
            result = (result * base).divmod_monic(h)[1]
        e >>= 1
        if e:
            base = (base * base).divmod_monic(h)[1]
    return result


# ---------------------------------------------------------------------------
# Quadratic surds and exact value comparison
# ---------------------------------------------------------------------------

def squarefree_split(m: int) -> tuple[int, int]:
    """m = s*s*d with d squarefree; returns (s, d). Requires m >= 1."""
    if m < 1:
        raise ValueError("argument must be positive")
    s, d = 1, 1
    p = 2
    while p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            s *= p ** (e // 2)
            if e % 2:
                d *= p
        p += 1 if p == 2 else 2
    d *= m
    return s, d


@dataclass(frozen=True)
class QuadraticSurd:
    """a + b*sqrt(d) with exact rational a, b and squarefree integer d >= 2, b != 0."""

    a: Fraction
    b: Fraction
    d: int

    def __post_init__(self):
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))
        if self.b == 0:
            raise ValueError("surd coefficient must be nonzero (use a plain rational)")
        if self.d < 2:
            raise ValueError("radicand must be at least 2")
        _, sf = squarefree_split(self.d)
        if sf != self.d:
            raise ValueError(f"radicand {self.d} is not squarefree")

    def conjugate(self) -> "QuadraticSurd":
        return QuadraticSurd(self.a, -self.b, self.d)

    def approx(self) -> float:
        return float(self.a) + float(self.b) * self.d ** 0.5

    def __str__(self) -> str:
        b = self.b
        op = "+" if b > 0 else "-"
        mag = abs(b)
        bpart = f"sqrt({self.d})" if mag == 1 else f"{mag}*sqrt({self.d})"
        return f"{self.a} {op} {bpart}"


EigenValue = Union[Fraction, QuadraticSurd]


def _sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


def surd_sign(r: Fraction, b: Fraction, d: int) -> int:
    """Exact sign of r + b*sqrt(d) for rational r, b and squarefree d >= 2."""
    if b == 0:
        return _sign(r)
    if r == 0:
        return _sign(b)
    if r > 0 and b > 0:
        return 1
    if r < 0 and b < 0:
        return -1
    # Opposite signs: compare r*r against b*b*d; equality would make sqrt(d) rational.
    lhs, rhs = r * r, b * b * d
    if lhs == rhs:
        raise ExactnessError(f"sqrt({d}) compared equal to a rational")
    return _sign(b) if rhs > lhs else _sign(r)


def _sqrt_bounds(d: int, prec: int) -> tuple[Fraction, Fraction]:
    scale = 1 << prec
    lo = isqrt(d * scale * scale)
    return Fraction(lo, scale), Fraction(lo + 1, scale)


def value_cmp(x: EigenValue, y: EigenValue) -> int:
    """Exact three-way comparison of rationals and quadratic surds."""
    ra, ba, da = (x, Fraction(0), 0) if isinstance(x, Fraction) else (x.a, x.b, x.d)
    rb, bb, db = (y, Fraction(0), 0) if isinstance(y, Fraction) else (y.a, y.b, y.d)
    r = ra - rb
    if ba == 0 or bb == 0 or da == db:
        if ba == 0 and bb == 0:
            return _sign(r)
        if da == db:
            return surd_sign(r, ba - bb, da)
        if bb == 0:
            return surd_sign(r, ba, da)
        return surd_sign(r, -bb, db)
    # Distinct radicands: r + ba*sqrt(da) - bb*sqrt(db) is never zero, so
    # interval refinement with integer square roots terminates.
    prec = 16
    while True:
        lo_a, hi_a = _sqrt_bounds(da, prec)
        lo_b, hi_b = _sqrt_bounds(db, prec)
        lo = r + (ba * lo_a if ba > 0 else ba * hi_a) - (bb * hi_b if bb > 0 else bb * lo_b)
        hi = r + (ba * hi_a if ba > 0 else ba * lo_a) - (bb * lo_b if bb > 0 else bb * hi_b)
        if lo > 0:
            return 1
        if hi < 0:
            return -1
        prec *= 2
        if prec > 1 << 16:
            raise ExactnessError("surd comparison failed to separate values")


# ---------------------------------------------------------------------------
# Spectra
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Spectrum:
    """Exact eigenvalues with multiplicities, distinct and sorted descending.

    Entries are (value, multiplicity) with value a Fraction or QuadraticSurd;
    anything this library does not resolve stays as a monic squarefree
    IntPoly factor in `unresolved` together with its multiplicity (each such
    factor stands for deg-many distinct eigenvalues).
    """

    n: int
    entries: tuple[tuple[EigenValue, int], ...]
    unresolved: tuple[tuple[IntPoly, int], ...] = ()

    @property
    def distinct_count(self) -> int:
        return len(self.entries) + sum(f.degree for f, _ in self.unresolved)

    def multiplicity_total(self) -> int:
        return (sum(m for _, m in self.entries)
                + sum(f.degree * m for f, m in self.unresolved))

    def rational_entries(self) -> list[tuple[Fraction, int]]:
        return [(v, m) for v, m in self.entries if isinstance(v, Fraction)]

    def __str__(self) -> str:
        parts = [f"{v} (x{m})" for v, m in self.entries]
        parts.extend(f"roots of {f} (each x{m})" for f, m in self.unresolved)
        return ", ".join(parts) if parts else "(no eigenvalues)"


def _integer_roots_bounded(p: IntPoly, bound: int) -> tuple[list[tuple[int, int]], IntPoly]:
    """Integer roots of monic p with |root| <= bound, with multiplicities.

    Candidates must divide the constant term, which serves as an early-exit
    filter before each Horner evaluation. Returns (roots, deflated remainder).
    """
    roots: list[tuple[int, int]] = []
    # Root 0 first: strip the power of x.
    mult0 = 0
    while p.degree > 0 and p.coeff(0) == 0:
        p = p.divmod_monic(IntPoly.x_power(1))[0]
        mult0 += 1
    if mult0:
        roots.append((0, mult0))
    for r in range(-bound, bound + 1):
        if r == 0 or p.degree == 0:
            continue
        if p.coeff(0) % r:
            continue
        mult = 0
        while p.degree > 0 and p(r) == 0:
            p = p.divmod_monic(IntPoly((-r, 1)))[0]
            mult += 1
        if mult:
            roots.append((r, mult))
    return roots, p


def _quadratic_to_surds(u: int, v: int) -> tuple[QuadraticSurd, QuadraticSurd]:
    """Roots of x^2 + u*x + v as a conjugate surd pair (requires nonsquare disc > 0)."""
    disc = u * u - 4 * v
    if disc <= 0:
        raise ExactnessError("adjacency quadratic factor with nonpositive discriminant")
    s, d = squarefree_split(disc)
    if d == 1:
        raise ExactnessError("quadratic factor with rational roots escaped root extraction")
    hi = QuadraticSurd(Fraction(-u, 2), Fraction(s, 2), d)
    return hi, hi.conjugate()


def _find_monic_quadratic_factor(f: IntPoly, rho: int) -> IntPoly | None:
    """Search for a monic integer quadratic factor x^2 + u*x + v of f.

    All roots in play are adjacency eigenvalues, so |u| <= 2*rho and
    |v| <= rho^2 where rho bounds the spectral radius; within those bounds the
    scan (with divisibility filters at 0, 1, -1) is exhaustive.
    """
    f0, f1, fm1 = f.coeff(0), f(1), f(-1)
    if f0 == 0 or f1 == 0 or fm1 == 0:
        raise ExactnessError("rational root escaped extraction before quadratic search")
    for v in range(-rho * rho, rho * rho + 1):
        if v == 0 or f0 % v:
            continue
        for u in range(-2 * rho, 2 * rho + 1):
            s1 = 1 + u + v
            if s1 == 0 or f1 % s1:
                continue
            s2 = 1 - u + v
            if s2 == 0 or fm1 % s2:
                continue
            cand = IntPoly((v, u, 1))
            quot, rem = f.divmod_monic(cand)
            if not rem:
                return cand
    return None


def spectrum_of(g: Graph) -> Spectrum:
    """Exact spectrum of the adjacency matrix of g.

    Factors the characteristic polynomial over the integers: integer roots by
    bounded scan, then Yun's squarefree decomposition of the remainder, then
    quadratic factors split into conjugate surd pairs. Squarefree factors of
    degree >= 3 that resist the bounded quadratic search are carried
    symbolically, never approximated.
    """
    if g.n == 0:
        return Spectrum(0, ())
    p = char_poly(adjacency_matrix(g))
    rho = max((g.degree(v) for v in range(g.n)), default=0)
    int_roots, rest = _integer_roots_bounded(p, rho)
    resolved: list[tuple[EigenValue, int]] = [(Fraction(r), m) for r, m in int_roots]
    unresolved: list[tuple[IntPoly, int]] = []
    if rest.degree > 0:
        for factor, mult in squarefree_decomposition(rest):
            f = factor
            while f.degree >= 2:
                if f.degree == 2:
                    quad, f = f, IntPoly((1,))
                else:
                    quad = _find_monic_quadratic_factor(f, rho)
                    if quad is None:
                        unresolved.append((f, mult))
                        f = IntPoly((1,))
                        break
                    f = f.divmod_monic(quad)[0]
                for surd in _quadratic_to_surds(quad.coeff(1), quad.coeff(0)):
                    resolved.append((surd, mult))
            if f.degree == 1:
                raise ExactnessError("linear factor survived integer root extraction")
    resolved.sort(key=_descending_key)
    unresolved.sort(key=lambda fm: (fm[0].degree, fm[0].coeffs))
    spec = Spectrum(g.n, tuple(resolved), tuple(unresolved))
    if spec.multiplicity_total() != g.n:
        raise ExactnessError("spectrum multiplicities do not sum to the vertex count")
    return spec


class _DescWrap:
    """Sort key wrapper: orders eigenvalues descending via exact comparison."""

    __slots__ = ("v",)

    def __init__(self, v: EigenValue):
        self.v = v

    def __lt__(self, other: "_DescWrap") -> bool:
        return value_cmp(self.v, other.v) > 0


def _descending_key(entry: tuple[EigenValue, int]) -> _DescWrap:
    return _DescWrap(entry[0])


def distinct_eigenvalue_count(g: Graph) -> int:
    """Number of distinct adjacency eigenvalues: degree of the minimal polynomial."""
    if g.n == 0:
        return 0
    return squarefree_part(char_poly(adjacency_matrix(g))).degree
