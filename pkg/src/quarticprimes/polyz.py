"""Exact arithmetic over Z and Q for the trinomial quartic X^4 + aX + b.

Integer polynomials are plain tuples of ints in ascending degree.  No
floating point is used anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, isqrt, lcm
from typing import Sequence

from sympy import divisors, factorint

from .arith import vp

IRREDUCIBILITY_BOUND = 10**12
"""Largest |b| accepted by the divisor-pair irreducibility search."""

ZPoly = tuple


class ReducibleQuarticError(ValueError):
    pass


# -- integer polynomial helpers -------------------------------------------------


def ztrim(f: Sequence[int]) -> ZPoly:
    f = list(f)
    while f and f[-1] == 0:
        f.pop()
    return tuple(f)


def zadd(f, g) -> ZPoly:
    n = max(len(f), len(g))
    return ztrim((f[i] if i < len(f) else 0) + (g[i] if i < len(g) else 0) for i in range(n))


def zsub(f, g) -> ZPoly:
    return zadd(f, tuple(-c for c in g))


def zscale(f, c) -> ZPoly:
    return ztrim(c * x for x in f)


def zmul(f, g) -> ZPoly:
    if not f or not g:
        return ()
    out = [0] * (len(f) + len(g) - 1)
    for i, x in enumerate(f):
        if x:
            for j, y in enumerate(g):
                out[i + j] += x * y
    return ztrim(out)


def zpow(f, n: int) -> ZPoly:
    out: ZPoly = (1,)
    for _ in range(n):
        out = zmul(out, f)
    return out


def zdivmod_monic(f, g) -> tuple[ZPoly, ZPoly]:
    """Euclidean division by a monic integer polynomial."""
    g = ztrim(g)
    if not g or g[-1] != 1:
        raise ValueError(f"divisor must be monic: {g}")
    r = list(ztrim(f))
    d = len(g) - 1
    if len(r) <= d:
        return (), tuple(r)
    q = [0] * (len(r) - d)
    for k in range(len(r) - 1, d - 1, -1):
        c = r[k]
        if c:
            q[k - d] = c
            for j, y in enumerate(g):
                r[k - d + j] -= c * y
    return ztrim(q), ztrim(r[:d])


def zcompose(f, g) -> ZPoly:
    """f(g(X))."""
    out: ZPoly = ()
    for c in reversed(ztrim(f)):
        out = zadd(zmul(out, g), (c,))
    return out


def ztaylor(f, s: int) -> ZPoly:
    """f(X + s)."""
    return zcompose(f, (s, 1))


def zeval(f, x):
    acc = 0
    for c in reversed(f):
        acc = acc * x + c
    return acc


def zderiv(f) -> ZPoly:
    return ztrim(i * c for i, c in enumerate(f) if i)


def zhensel_root(f, r: int, p: int, k: int) -> int:
    """Lift a simple root r of f mod p to a root mod p**k (least nonnegative)."""
    df = zderiv(f)
    if zeval(f, r) % p:
        raise ValueError(f"{r} is not a root mod {p}")
    if zeval(df, r) % p == 0:
        raise ArithmeticError(f"{r} is a multiple root mod {p}")
    mod = p
    r %= p
    while mod < p**k:
        mod = min(mod * mod, p**k)
        r = (r - zeval(f, r) * pow(zeval(df, r), -1, mod)) % mod
    return r


def zcontent(f) -> int:
    g = 0
    for c in f:
        g = gcd(g, c)
    return g


def zpoly_vp(f, p: int):
    """v_p of an integer polynomial (minimum over coefficients)."""
    return vp(zcontent(f), p)


def zformat(f, var: str = "X") -> str:
    f = ztrim(f)
    if not f:
        return "0"
    parts = []
    for i in range(len(f) - 1, -1, -1):
        c = f[i]
        if c == 0:
            continue
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        mag = abs(c)
        body = str(mag) if not mono else (mono if mag == 1 else f"{mag}{mono}")
        sign = "-" if c < 0 else "+"
        parts.append((sign, body))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += f"{sign}{body}"
    return out


# -- determinants and resultants ----------------------------------------------


def bareiss_det(M: list[list[int]]) -> int:
    """Determinant of an integer matrix by fraction-free elimination."""
    A = [list(row) for row in M]
    n = len(A)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for i in range(k + 1, n):
                if A[i][k]:
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def sylvester(f, g) -> list[list[int]]:
    f, g = ztrim(f), ztrim(g)
    m, n = len(f) - 1, len(g) - 1
    size = m + n
    rows = []
    for i in range(n):
        row = [0] * size
        for j, c in enumerate(reversed(f)):
            row[i + j] = c
        rows.append(row)
    for i in range(m):
        row = [0] * size
        for j, c in enumerate(reversed(g)):
            row[i + j] = c
        rows.append(row)
    return rows


def resultant(f, g) -> int:
    f, g = ztrim(f), ztrim(g)
    if not f or not g:
        return 0
    m, n = len(f) - 1, len(g) - 1
    if m == 0:
        return f[0] ** n
    if n == 0:
        return g[0] ** m
    return bareiss_det(sylvester(f, g))


def discriminant(a: int, b: int) -> int:
    return 256 * b**3 - 27 * a**4


def discriminant_via_resultant(a: int, b: int) -> int:
    """Disc of X^4+aX+b as (-1)^(n(n-1)/2) Res(P, P'), n = 4."""
    P = (b, a, 0, 0, 1)
    return resultant(P, zderiv(P))


# -- irreducibility and normalization -----------------------------------------


def reducibility_certificate(a: int, b: int):
    """A witness that X^4+aX+b is reducible over Q, or None.

    Returns ``("root", r)`` or ``("quadratics", (d, c), (e, -c))`` meaning
    (X^2 + cX + d)(X^2 - cX + e).
    """
    if b == 0:
        return ("root", 0)
    if abs(b) > IRREDUCIBILITY_BOUND:
        return _certificate_by_factoring(a, b)
    pos = divisors(abs(b))
    for r in pos:
        for x in (r, -r):
            if x**4 + a * x + b == 0:
                return ("root", x)
    for d in pos + [-x for x in pos]:
        e = b // d
        c2 = d + e
        if c2 < 0 or isqrt(c2) ** 2 != c2:
            continue
        c = isqrt(c2)
        for cc in {c, -c}:
            if cc * (e - d) == a:
                return ("quadratics", (d, cc), (e, -cc))
    return None


def _certificate_by_factoring(a: int, b: int):
    # divisor search would need |b| factored; sympy's factorization over Z does not
    from sympy import Poly, symbols

    X = symbols("X")
    facs = [f for f, _ in Poly(X**4 + a * X + b, X).factor_list()[1]]
    if len(facs) == 1 and Poly(facs[0]).degree() == 4:
        return None
    for f in facs:
        co = Poly(f, X).all_coeffs()
        if len(co) == 2:
            return ("root", int(-co[1] / co[0]))
    c, d = (int(x) for x in Poly(facs[0], X).all_coeffs()[1:])
    return ("quadratics", (d, c), (b // d, -c))


def is_irreducible_quartic(a: int, b: int) -> bool:
    return reducibility_certificate(a, b) is None


@dataclass(frozen=True)
class Normalization:
    """Result of replacing alpha by alpha / scale."""

    a: int
    b: int
    scale: int = 1
    log: tuple[tuple[int, int], ...] = ()


def normalize(a: int, b: int) -> Normalization:
    """Divide out every p with v_p(a) >= 3 and v_p(b) >= 4."""
    if b == 0:
        raise ReducibleQuarticError("b = 0 gives a reducible polynomial")
    log = []
    scale = 1
    for p in sorted(factorint(gcd(a, b))):
        va, vb = vp(a, p), vp(b, p)
        if va >= 3 and vb >= 4:
            q = vb // 4 if a == 0 else min(va // 3, vb // 4)
            a //= p ** (3 * q)
            b //= p ** (4 * q)
            scale *= p**q
            log.append((p, q))
    return Normalization(a, b, scale, tuple(log))


@dataclass(frozen=True)
class QuarticField:
    """K = Q(alpha), alpha a root of the irreducible X^4 + aX + b."""

    a: int
    b: int
    irreducible: bool = field(default=True, init=False)

    def __post_init__(self):
        cert = reducibility_certificate(self.a, self.b)
        if cert is not None:
            raise ReducibleQuarticError(f"X^4{self.a:+d}X{self.b:+d} is reducible: {cert}")

    @property
    def discriminant(self) -> int:
        return discriminant(self.a, self.b)

    @property
    def poly(self) -> ZPoly:
        return (self.b, self.a, 0, 0, 1)

    def shifted(self, s: int) -> ShiftedQuartic:
        return ShiftedQuartic(self.a, self.b, s)


# -- phi-adic development -------------------------------------------------------


def phi_adic_development(F, phi) -> list[ZPoly]:
    """Coefficients a_i with F = sum a_i * phi**i and deg a_i < deg phi."""
    phi = ztrim(phi)
    if len(phi) < 2 or phi[-1] != 1:
        raise ValueError(f"phi must be monic of degree >= 1: {phi}")
    out = []
    F = ztrim(F)
    while F:
        F, r = zdivmod_monic(F, phi)
        out.append(r)
    return out or [()]


# -- shifted quartics and elements of K ----------------------------------------


@dataclass(frozen=True)
class ShiftedQuartic:
    """F(X) = P(X + s) = X^4 + 4sX^3 + 6s^2X^2 + AX + B, root theta = alpha - s."""

    a: int
    b: int
    s: int

    @property
    def A(self) -> int:
        return 4 * self.s**3 + self.a

    @property
    def B(self) -> int:
        return self.s**4 + self.a * self.s + self.b

    @property
    def poly(self) -> ZPoly:
        s = self.s
        return (self.B, self.A, 6 * s * s, 4 * s, 1)

    # elements of Q(theta) for building generators

    def element(self, coeffs) -> Element:
        return Element(self, coeffs)

    @property
    def theta(self) -> Element:
        return Element(self, (0, 1))

    def const(self, c) -> Element:
        return Element(self, (c,))


class Element:
    """An element of Q(theta) stored as rational coefficients in 1, θ, θ², θ³."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: ShiftedQuartic, coeffs):
        cs = [Fraction(c) for c in coeffs]
        F = ring.poly
        # reduce modulo the monic quartic F
        for k in range(len(cs) - 1, 3, -1):
            c = cs[k]
            if c:
                for j in range(5):
                    cs[k - 4 + j] -= c * F[j]
        cs = (cs + [Fraction(0)] * 4)[:4]
        self.ring = ring
        self.coeffs = tuple(cs)

    def _coerce(self, other) -> Element:
        if isinstance(other, Element):
            if other.ring != self.ring:
                raise ValueError("elements of different shifted quartics")
            return other
        return Element(self.ring, (other,))

    def __add__(self, other):
        other = self._coerce(other)
        return Element(self.ring, [x + y for x, y in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return Element(self.ring, [-x for x in self.coeffs])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        out = [Fraction(0)] * 7
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    out[i + j] += x * y
        return Element(self.ring, out)

    __rmul__ = __mul__

    def __truediv__(self, n):
        return Element(self.ring, [x / n for x in self.coeffs])

    def __pow__(self, n: int):
        out = Element(self.ring, (1,))
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        return isinstance(other, Element) and other.ring == self.ring and other.coeffs == self.coeffs

    def __hash__(self):
        return hash((self.ring, self.coeffs))

    def to_algebraic(self, p: int) -> AlgebraicElement:
        den = 1
        for c in self.coeffs:
            den = lcm(den, c.denominator)
        h = vp(den, p)
        if p**h != den:
            raise ValueError(f"denominator {den} is not a power of {p}")
        num = tuple(int(c * den) for c in self.coeffs)
        return AlgebraicElement(p, self.ring.s, num, h)


@dataclass(frozen=True)
class AlgebraicElement:
    """w = g(θ) / p^h with θ = α - s and deg g <= 3.

    The numerator and the p-power denominator share no factor p.
    """

    p: int
    shift: int
    numerator: tuple[int, ...]
    denom_exp: int = 0

    def __post_init__(self):
        num = ztrim(self.numerator)
        h = self.denom_exp
        if len(num) > 4:
            raise ValueError("numerator degree must be at most 3")
        if h < 0:
            raise ValueError("denominator exponent must be nonnegative")
        while h > 0 and num and all(c % self.p == 0 for c in num):
            num = tuple(c // self.p for c in num)
            h -= 1
        if not num:
            h = 0
        object.__setattr__(self, "numerator", tuple(num))
        object.__setattr__(self, "denom_exp", h)

    @classmethod
    def constant(cls, p: int, c: int) -> AlgebraicElement:
        return cls(p, 0, (c,), 0)

    @property
    def is_zero(self) -> bool:
        return not self.numerator

    def in_alpha(self) -> AlgebraicElement:
        """The same element written in α (shift 0)."""
        if self.shift == 0:
            return self
        num = ztaylor(self.numerator, -self.shift)
        return AlgebraicElement(self.p, 0, num, self.denom_exp)

    def with_shift(self, s: int) -> AlgebraicElement:
        num = ztaylor(self.in_alpha().numerator, s)
        return AlgebraicElement(self.p, s, num, self.denom_exp)

    def format(self, var: str | None = None) -> str:
        if var is None:
            var = "α" if self.shift == 0 else "θ"
        body = zformat(self.numerator, var)
        if self.denom_exp == 0:
            return body
        if len([c for c in self.numerator if c]) > 1:
            body = f"({body})"
        return f"{body}/{self.p ** self.denom_exp}"

    def __str__(self):
        return self.format()


def multiplication_matrix(g, F) -> list[list[int]]:
    """Matrix of multiplication by g(θ) on the basis 1, θ, θ², θ³ of Z[θ]."""
    cols = []
    col = zdivmod_monic(g, F)[1] if len(ztrim(g)) > 4 else ztrim(g)
    for _ in range(4):
        cols.append(list(col) + [0] * (4 - len(col)))
        col = zdivmod_monic(zmul(col, (0, 1)), F)[1]
    return [[cols[j][i] for j in range(4)] for i in range(4)]


def _charpoly_int(M: list[list[int]]) -> list[int]:
    """Characteristic polynomial det(Y - M), ascending, by Faddeev-LeVerrier."""
    n = len(M)
    ident = [[int(i == j) for j in range(n)] for i in range(n)]
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    Mk = [[0] * n for _ in range(n)]
    for k in range(1, n + 1):
        # Mk = M (M_{k-1} + c_{n-k+1} I)
        inner = [
            [Mk[i][j] + coeffs[n - k + 1] * ident[i][j] for j in range(n)] for i in range(n)
        ]
        Mk = [[sum(M[i][t] * inner[t][j] for t in range(n)) for j in range(n)] for i in range(n)]
        tr = sum(Mk[i][i] for i in range(n))
        if tr % k:
            raise ArithmeticError("non-exact trace division")
        coeffs[n - k] = -tr // k
    return coeffs


def char_poly_of_element(w: AlgebraicElement, field_: QuarticField) -> list[Fraction]:
    """Monic characteristic polynomial of w over Q, ascending coefficients."""
    F = field_.shifted(w.shift).poly
    M = multiplication_matrix(w.numerator or (0,), F)
    c = _charpoly_int(M)
    ph = w.p**w.denom_exp
    return [Fraction(c[k], ph ** (4 - k)) for k in range(5)]


def is_integral(w: AlgebraicElement, field_: QuarticField) -> bool:
    return all(c.denominator == 1 for c in char_poly_of_element(w, field_))


def norm(w: AlgebraicElement, field_: QuarticField) -> Fraction:
    F = field_.shifted(w.shift).poly
    return Fraction(resultant(F, w.numerator), w.p ** (4 * w.denom_exp))


def norm_valuation(w: AlgebraicElement, field_: QuarticField) -> int:
    """v_p(N(w)) computed from Res_X(P(X+s), g(X))."""
    if w.is_zero:
        raise ValueError("the zero element has no norm valuation")
    r = resultant(field_.shifted(w.shift).poly, w.numerator)
    return vp(r, w.p) - 4 * w.denom_exp
