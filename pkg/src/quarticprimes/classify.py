"""Explicit factorization of pZ_K for K = Q(alpha), alpha^4 + a*alpha + b = 0.

Dispatch goes to one of four top-level tables according to which of a, b
are divisible by p:

    A   v_p(a) >= 1, v_p(b) >= 1   (sub-table A8)
    B   v_p(a) = 0,  v_p(b) >= 1   (sub-tables B6, B11, B11.4)
    C   v_p(a) >= 1, v_p(b) = 0    (sub-table C14)
    D   v_p(ab) = 0                (sub-table D8)

Each table is an ordered tuple of :class:`TableRow`; the first matching
row wins.  Rows whose printed guard or output had to be corrected carry
both forms in ``printed`` / ``erratum``.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from functools import cached_property
from types import MappingProxyType
from typing import Callable, Mapping

from sympy import factorint

from .arith import INF, legendre, mod_root, mod_roots, nth_power_residue, unit_part, vp
from .newton import is_p_regular
from .polyfp import PrimeField, factor_quartic_modp
from .polyz import (AlgebraicElement, Element, Normalization, QuarticField, ShiftedQuartic, normalize, zeval,
                    zhensel_root)

# discriminants with a cofactor above this are not factored
FACTOR_BOUND = 10**40


class NoRowMatched(ArithmeticError):
    """No table row accepts the input.  Carries the full condition vector."""

    def __init__(self, table: str, conditions: Mapping[str, object]):
        self.table = table
        self.conditions = dict(conditions)
        detail = ", ".join(f"{k}={v}" for k, v in self.conditions.items())
        super().__init__(f"no row of table {table} matched: {detail}")


class NotNormalizedError(ValueError):
    pass


class DedekindNotApplicable(ValueError):
    """p divides the index of Z[alpha]; the mod-p factorization is not the ideal one."""


class UnfactoredDiscriminant(ArithmeticError):
    def __init__(self, cofactor: int):
        self.cofactor = cofactor
        super().__init__(f"unfactored discriminant: cofactor {cofactor} exceeds the bound")


@dataclass(frozen=True)
class PrimeIdealFactor:
    e: int
    f: int
    generator: AlgebraicElement
    generator_is_whole_ideal: bool = False
    # True when the row asserts v_P(w) = 1 and v_Q(w) = 0 for Q != P
    exact: bool = False

    def __post_init__(self):
        if self.e * self.f > 4 or self.e < 1 or self.f < 1:
            raise ValueError(f"impossible prime shape e={self.e}, f={self.f}")


@dataclass(frozen=True)
class TableTrace:
    row: str
    path: tuple[str, ...]
    auxiliaries: Mapping[str, int] = field(default_factory=dict)


@dataclass(frozen=True)
class PrimeFactorization:
    p: int
    field: QuarticField
    factors: tuple[PrimeIdealFactor, ...]
    table_trace: TableTrace
    # set by factor(): how the caller's (a, b) was reduced to field.(a, b)
    normalization: Normalization | None = None

    @property
    def shapes(self) -> list[tuple[int, int]]:
        return sorted((F.e, F.f) for F in self.factors)

    @property
    def degree(self) -> int:
        return sum(F.e * F.f for F in self.factors)

    def render(self, alpha: bool = False) -> str:
        parts = []
        for F in self.factors:
            w = F.generator.in_alpha() if alpha else F.generator
            ideal = f"({self.p})" if F.generator_is_whole_ideal else f"({self.p}, {w})"
            parts.append(ideal + (f"^{F.e}" if F.e > 1 else "") + (f" [f={F.f}]" if F.f > 1 else ""))
        return " ".join(parts)


# -- per-input context ---------------------------------------------------------


class Case:
    """Everything a guard or recipe may look at.  Auxiliaries are recorded."""

    def __init__(self, a: int, b: int, p: int):
        self.a, self.b, self.p = a, b, p
        self.field = QuarticField(a, b)
        self.va = vp(a, p)
        self.vb = vp(b, p)
        self.delta = self.field.discriminant
        self.vD = vp(self.delta, p)
        self.aux: dict[str, int] = {}

    # residues and symbols

    @property
    def a_p(self) -> int:
        return unit_part(self.a, self.p)

    @property
    def b_p(self) -> int:
        return unit_part(self.b, self.p)

    def leg(self, x: int) -> int:
        return legendre(x, self.p)

    def power(self, x: int, n: int) -> bool:
        return nth_power_residue(x, n, self.p)

    def mod(self, x: int, m: int) -> int:
        return x % m

    # elements

    def ring(self, s: int) -> ShiftedQuartic:
        return ShiftedQuartic(self.a, self.b, s)

    @property
    def alpha(self) -> Element:
        return self.ring(0).theta

    def note(self, name: str, value: int) -> int:
        self.aux[name] = value
        return value

    def prime(self, e: int, f: int, w: Element, exact: bool = False) -> PrimeIdealFactor:
        return PrimeIdealFactor(e, f, w.to_algebraic(self.p), exact=exact)

    def inert(self) -> PrimeIdealFactor:
        return PrimeIdealFactor(1, 4, AlgebraicElement.constant(self.p, self.p), True)

    # shifted data used by several sub-tables

    def shifted(self, s: int) -> ShiftedQuartic:
        R = self.ring(s)
        self.note("s", s)
        self.note("A", R.A)
        self.note("B", R.B)
        return R

    @cached_property
    def b11_s(self) -> int:
        # a*s == -4*b_3 (mod 3^(v3(D)+1))
        m = 3 ** (self.vD + 1)
        return -4 * (self.b // 3) * pow(self.a, -1, m) % m

    @cached_property
    def d_s(self) -> int:
        # 3*a*s + 4*b == 0 (mod p^(v_p(D)+1)): one extra digit also serves D6/D7
        m = self.p ** (self.vD + 1)
        return -4 * self.b * pow(3 * self.a, -1, m) % m

    @cached_property
    def c14_s(self) -> int:
        """Smallest odd s < 2^(v2(D)+1) making P(X+s) X-regular and landing in C14."""
        bound = 2 ** (self.vD + 1)
        for s in range(1, bound, 2):
            R = ShiftedQuartic(self.a, self.b, s)
            vA, vB = vp(R.A, 2), vp(R.B, 2)
            if vA == 1 and vB >= 2 or vB >= 3 and vA >= 2:
                if is_p_regular(R.poly, 2)[0]:
                    return s
        raise NoRowMatched("C14", {"reason": "no regular shift below 2^(v2(D)+1)", **self.conditions()})

    def conditions(self) -> dict[str, object]:
        p = self.p
        out: dict[str, object] = {"a": self.a, "b": self.b, "p": p, "v_p(a)": self.va,
                                  "v_p(b)": self.vb, "v_p(D)": self.vD}
        if p == 2:
            out["a mod 64"] = self.a % 64
            out["b mod 64"] = self.b % 64
        elif p == 3:
            out["a mod 9"] = self.a % 9
            out["b mod 9"] = self.b % 9
        return out


def exact_root(F, r: int, p: int) -> int:
    """Replace a simple root r of F mod p by r or r + p so that v_p(F(r)) = 1."""
    if zeval(F, r) % (p * p) == 0:
        r += p
    return r


def quadratic_root_exact(c: int, p: int) -> int:
    """A root t of T^2 + c mod p with v_p(t^2 + c) = 1 exactly."""
    t = mod_root(-c, 2, p)
    if t is None:
        raise ArithmeticError(f"{-c} is not a square mod {p}")
    return exact_root((c, 0, 1), t, p)


# -- rows ----------------------------------------------------------------------


Guard = Callable[[Case], bool]
Recipe = Callable[[Case], list[PrimeIdealFactor]]


@dataclass(frozen=True)
class TableRow:
    id: str
    guard: Guard
    shape: str
    build: Recipe | None = None
    redirect: str | None = None
    # the printed guard / output where it differs from what is implemented
    printed: str | None = None
    erratum: str | None = None
    quarantined: bool = False

    def matches(self, c: Case) -> bool:
        return bool(self.guard(c))


def _row(id, guard, shape, build=None, **kw) -> TableRow:
    return TableRow(id, guard, shape, build, **kw)


# Table A --------------------------------------------------------------------


def _a1(c: Case):
    al = c.alpha
    return [c.prime(4, 1, al**3 / c.p**2)]


def _a2(c: Case):
    al = c.alpha
    w = al**3 / c.p**2
    w2 = w + c.note("a_p", c.a_p)
    if c.vb >= 4:
        # v_P2(w + a_p) = 3 v_p(b) - 8 >= 4; alpha^2/p has v_P2 = 1 and vanishes at P1
        w2 = w2 + al**2 / c.p
    return [c.prime(1, 1, w), c.prime(3, 1, w2)]


def _a3(c: Case):
    al = c.alpha
    w = al**3 / c.p
    # v_P2(w + a_p) = 3 v_p(b) - 4 >= 2, so alpha (v_P2 = 1) is added
    return [c.prime(1, 1, w), c.prime(3, 1, w + c.note("a_p", c.a_p) + al)]


def _a4(c: Case):
    return [c.prime(2, 2, c.alpha**3 / c.p)]


def _a5(c: Case):
    t = c.note("t", quadratic_root_exact(c.b_p, c.p))
    w = c.alpha**2 / c.p
    return [c.prime(2, 1, w + t), c.prime(2, 1, w - t)]


def _a6(c: Case):
    t = c.note("t", mod_root(-c.b_p, 2, c.p))
    al = c.alpha
    w = (al**3 + al**2) / c.p
    return [c.prime(2, 1, w + t), c.prime(2, 1, w - t)]


def _a7(c: Case):
    return [c.prime(4, 1, c.alpha)]


TABLE_A = (
    _row("A1", lambda c: c.vb == 3 and c.va >= 3, "P^4", _a1),
    _row("A2", lambda c: c.vb >= 3 and c.va == 2, "P1 P2^3", _a2),
    _row("A3", lambda c: c.vb >= 2 and c.va == 1, "P1 P2^3", _a3),
    _row("A4", lambda c: c.p != 2 and c.vb == 2 and c.va >= 2 and c.leg(-c.b_p) == -1, "P^2", _a4),
    _row("A5", lambda c: c.p != 2 and c.vb == 2 and c.va == 2 and c.leg(-c.b_p) == 1, "P1^2 P2^2", _a5),
    _row("A6", lambda c: c.p != 2 and c.vb == 2 and c.va >= 3 and c.leg(-c.b_p) == 1, "P1^2 P2^2", _a6),
    _row("A7", lambda c: c.vb == 1, "P^4", _a7),
    _row("A8", lambda c: c.p == 2 and c.vb == 2 and c.va >= 2, "", redirect="A8"),
)


# Table A8 (p = 2, v2(b) = 2, v2(a) >= 2) ---------------------------------------


def _a8(num, den, shape):
    """phi_2 = num(alpha)/den; shape 'P4', 'P2' (f=2) or 'P2P2'."""

    def build(c: Case):
        al = c.alpha
        phi = sum((k * al**i for i, k in enumerate(num)), c.ring(0).const(0)) / den
        if shape == "P4":
            return [c.prime(4, 1, phi)]
        if shape == "P2":
            return [c.prime(2, 2, phi)]
        return [c.prime(2, 1, phi), c.prime(2, 1, phi + 1)]

    return build


TABLE_A8 = (
    _row("A8.1", lambda c: c.va == 2, "P^4", _a8((2, 0, 1), 2, "P4")),
    _row("A8.2", lambda c: c.b % 16 == 12 and c.va == 3, "P^4", _a8((0, 2, 0, 1), 4, "P4")),
    _row("A8.3", lambda c: c.b % 16 == 4 and c.va == 3, "P^4", _a8((0, 2, 2, 1), 4, "P4")),
    _row("A8.4", lambda c: c.b % 32 == 4 and c.va == 4, "P^4", _a8((2, 2, 1), 4, "P4")),
    _row("A8.5", lambda c: c.b % 64 == 20 and c.va == 4, "P^2", _a8((-2, 2, 1), 4, "P2")),
    _row("A8.6", lambda c: c.b % 64 == 52 and c.a % 64 == 16, "P1^2 P2^2", _a8((0, -2, -2, 1), 8, "P2P2")),
    _row("A8.7", lambda c: c.b % 64 == 52 and c.a % 64 == 48, "P1^2 P2^2", _a8((0, 6, -2, 1), 8, "P2P2")),
    _row("A8.8", lambda c: c.b % 32 == 12 and c.va >= 4, "P^2", _a8((0, 2, 0, 1), 4, "P2")),
    _row("A8.9", lambda c: c.b % 32 == 28 and c.va == 4, "P1^2 P2^2", _a8((2, 0, 1), 4, "P2P2")),
    _row("A8.10", lambda c: c.b % 32 == 28 and c.va >= 5, "P1^2 P2^2", _a8((2, 12, 1), 4, "P2P2")),
    _row("A8.11", lambda c: c.b % 32 == 20 and c.va >= 5, "P^4", _a8((-2, 2, 1), 4, "P4")),
    _row("A8.12", lambda c: c.b % 64 == 36 and c.va >= 5, "P^2", _a8((2, 2, 1), 4, "P2")),
    _row("A8.13", lambda c: c.b % 64 == 4 and c.va == 5, "P1^2 P2^2", _a8((-4, -2, 0, 1), 8, "P2P2")),
    _row("A8.14", lambda c: c.b % 64 == 4 and c.va >= 6, "P1^2 P2^2", _a8((4, -2, 4, 1), 8, "P2P2")),
)


# Table B (v_p(a) = 0, v_p(b) >= 1) ---------------------------------------------


def _b1(c: Case):
    al = c.alpha
    return [c.prime(1, 1, al), c.prime(1, 1, al + 1), c.prime(1, 2, al**2 + al + 1)]


def _b2(c: Case):
    al = c.alpha
    return [c.prime(1, 1, al), c.prime(1, 3, al**3 + c.a)]


def _b3(c: Case):
    al = c.alpha
    u = c.note("u", mod_root(-c.a, 3, c.p))
    return [c.prime(1, 1, al), c.prime(1, 1, al - u), c.prime(1, 2, al**2 + u * al + u * u)]


def _b4(c: Case):
    p, al = c.p, c.alpha
    u = c.note("u", mod_root(-c.a, 3, p))
    v = c.note("v", mod_root(-3, 2, p))
    v1 = c.note("v1", -u * (1 + v) * pow(2, -1, p) % p)
    return [c.prime(1, 1, al), c.prime(1, 1, al - u), c.prime(1, 1, al - v1),
            c.prime(1, 1, al + u + v1)]


def _b_ram3(c: Case):
    # P1^3 P2 with theta = alpha + a
    th = c.shifted(-c.a).theta
    return [c.prime(3, 1, th), c.prime(1, 1, c.alpha)]


def _b5(c: Case):
    th = c.shifted(-c.a).theta
    return [c.prime(1, 1, c.alpha), c.prime(3, 1, th)]


def _b10(c: Case):
    a = c.a
    th = c.shifted(-a).theta
    return [c.prime(1, 1, th - 4 * a), c.prime(3, 1, (th**3 - 4 * a * th**2) / 3)]


def _bap(c: Case) -> int:
    return c.a * c.a % 9


def _v3_B(c: Case):
    return vp(c.a**4 - c.a**2 + c.b, 3)


_B_THETA = ("printed theta = alpha - a; the shift that makes the cubic factor Eisenstein "
            "is alpha + a (F(X) = P(X - a))")

TABLE_B = (
    _row("B1", lambda c: c.p == 2, "P1 P2 P3", _b1),
    _row("B2", lambda c: c.p >= 5 and not c.power(-c.a, 3), "P1 P2", _b2),
    _row("B3", lambda c: c.p >= 5 and c.leg(-3) == -1 and c.power(-c.a, 3), "P1 P2 P3", _b3),
    _row("B4", lambda c: c.p >= 5 and c.leg(-3) == 1 and c.power(-c.a, 3), "P1 P2 P3 P4", _b4,
         printed="P3 = (p, v1 + alpha), P4 = (p, -(u + v1) + alpha)",
         erratum="with 2 v1 = -u(1+v) the roots of X^2+uX+u^2 are v1 and -u-v1; "
                 "generators are alpha - v1 and alpha + u + v1"),
    _row("B5", lambda c: c.p == 3 and c.vb >= 2 and _bap(c) != 1, "P1 P2^3", _b5,
         printed="P2 = (3, alpha - a)", erratum=_B_THETA),
    _row("B6", lambda c: c.p == 3 and c.vb >= 2 and _bap(c) == 1, "", redirect="B6"),
    _row("B7", lambda c: c.p == 3 and c.b % 9 == 6 and _bap(c) != 4, "P1^3 P2", _b_ram3,
         printed="P1 = (3, alpha - a)", erratum=_B_THETA),
    _row("B8", lambda c: c.p == 3 and c.b % 9 == 6 and _bap(c) == 4, "", redirect="B6"),
    _row("B9", lambda c: c.p == 3 and c.b % 9 == 3 and _bap(c) != 7, "P1^3 P2", _b_ram3,
         printed="P1 = (3, alpha - a)", erratum=_B_THETA),
    _row("B10", lambda c: c.p == 3 and c.b % 9 == 3 and _bap(c) == 7 and _v3_B(c) == 2, "P1 P2^3",
         _b10, printed="theta = alpha - a", erratum=_B_THETA),
    _row("B11", lambda c: c.p == 3 and c.b % 9 == 3 and _bap(c) == 7 and _v3_B(c) >= 3, "",
         redirect="B11"),
)


# Table B6 (p = 3, theta = alpha + a, B = a^4 - a^2 + b, A = -4a^3 + a) --------------
#
# Primes: P1 (theta = 4a, e=1), P2 (v(theta) = 1, e=2), P3 (v(theta) = v3(B)-1).
# Note (theta^3 - 4a theta^2 + 6a^2 theta + A) = -B/theta.


def _b6(extra3, tail):
    def build(c: Case):
        a = c.a
        R = c.shifted(-a)
        th = R.theta
        # theta - c1 has v_P1 = 1 exactly; the printed 4a only agrees mod 3
        c1 = c.note("c", exact_root(R.poly, 4 * a, 3))
        b3 = th**2 * (th - c1) / 3 + extra3
        b2 = (th**3 - 4 * a * th**2 + 6 * a * a * th + R.A) / 3 + th**tail
        return [c.prime(1, 1, th - c1, exact=True), c.prime(2, 1, b2, exact=True),
                c.prime(1, 1, b3, exact=True)]

    return build


def _b6_A(c: Case):
    return vp(c.ring(-c.a).A, 3)


def _b6_B(c: Case):
    return vp(c.ring(-c.a).B, 3)


_B6_ROOT = "theta - 4a replaced by theta - c, c = 4a or 4a + 3 with v3(F(c)) = 1"

TABLE_B6 = (
    _row("B6.1", lambda c: _b6_B(c) == 2 and _b6_A(c) == 1, "P1 P2^2 P3", _b6(0, 2),
         printed="beta_2 = (theta^3 - 4a theta^2 + 6 s a^2 theta + A)/3 + theta^2; beta_1 = theta - 4a",
         erratum="s is undefined in this table, the term is 6 a^2 theta; " + _B6_ROOT),
    _row("B6.2", lambda c: _b6_B(c) >= 3 and _b6_A(c) == 1, "P1 P2^2 P3", _b6(3, 1),
         printed="v3(B) = 3 + k; beta_1 = theta - 4a",
         erratum="read as v3(B) >= 3; " + _B6_ROOT),
)


# Table B11 (p = 3, a s == -4 b_3 mod 3^(v3(D)+1), theta = alpha - s) --------------


def _b11_phi(c: Case):
    R = c.shifted(c.b11_s)
    s, th = R.s, R.theta
    return R, (th**3 + 4 * s * th**2 + 6 * s * s * th + R.A) / 9


def _b11_B3(c: Case) -> int:
    B = c.ring(c.b11_s).B
    return unit_part(B, 3) % 3


def _b11_1(c: Case):
    R, phi = _b11_phi(c)
    return [c.prime(1, 1, phi), c.prime(1, 3, phi**3 - phi - R.s)]


def _b11_2(c: Case):
    _, phi = _b11_phi(c)
    return [c.prime(1, 1, phi), c.prime(1, 2, phi**2 - phi - 1), c.prime(1, 1, phi + 1)]


def _b11_3(c: Case):
    _, phi = _b11_phi(c)
    return [c.prime(1, 1, phi), c.prime(1, 2, phi**2 + phi - 1), c.prime(1, 1, phi - 1)]


TABLE_B11 = (
    _row("B11.1", lambda c: c.vD == 6 and _b11_B3(c) == 1, "P1 P2", _b11_1),
    _row("B11.2", lambda c: c.vD == 6 and _b11_B3(c) == 2 and c.b11_s % 3 == 1, "P1 P2 P3", _b11_2),
    _row("B11.3", lambda c: c.vD == 6 and _b11_B3(c) == 2 and c.b11_s % 3 == 2, "P1 P2 P3", _b11_3),
    _row("B11.4", lambda c: c.vD >= 7, "", redirect="B11.4",
         printed="otherwise", erratum="only v3(D) >= 7 remains once v3(D) = 6 is exhausted"),
)


# Table B11.4 -------------------------------------------------------------------
#
# F = P(X+s) = X^3 (X + 4s) + 6s^2 X^2 + AX + B with v3(A) = v3(B) = v3(D) - 3.
# P1: theta = -4s (e=1); P2: v(theta) = 1 (e=1); the remaining side gives
# P3^2 (v3(D) odd) or one or two primes (v3(D) even).
# psi_k = (theta^3 + 4s theta^2 + 6s^2 theta + A)/3^k = -B/(3^k theta).


def _b114_setup(c: Case):
    R = c.shifted(c.b11_s)
    s, th = R.s, R.theta
    cc = c.note("c", exact_root(R.poly, -4 * s, 3))
    return R, s, th, cc


def _psi(R: ShiftedQuartic, th: Element, k: int) -> Element:
    s = R.s
    return (th**3 + 4 * s * th**2 + 6 * s * s * th + R.A) / 3**k


def _b114_odd(c: Case):
    # v3(D) = 2r + 1: P1 P2 P3^2
    R, s, th, cc = _b114_setup(c)
    r = c.note("r", (c.vD - 1) // 2)
    psi = _psi(R, th, r - 1)
    b3 = psi + (th * (th - cc) / 3) ** 2
    b2 = th + (psi**2 / 3) ** 2
    return [c.prime(1, 1, th - cc, exact=True), c.prime(1, 1, b2, exact=True),
            c.prime(2, 1, b3, exact=True)]


def _b114_6(c: Case):
    R, s, th, cc = _b114_setup(c)
    r = c.note("r", c.vD // 2)
    b3 = _psi(R, th, r - 2) + (th * (th - cc) / 3) ** 2
    b2 = th + _psi(R, th, r - 1) ** 2
    return [c.prime(1, 1, th - cc, exact=True), c.prime(1, 1, b2, exact=True),
            c.prime(1, 2, b3, exact=True)]


def _scaled(F, p: int, k: int, m: int):
    """G(Y) = F(p^k Y) / p^m, which must be integral."""
    out = []
    for i, c in enumerate(F):
        num = c * p ** (k * i)
        if num % p**m:
            raise ArithmeticError("scaled polynomial is not integral")
        out.append(num // p**m)
    return tuple(out)


def _b114_7(c: Case):
    R, s, th, cc = _b114_setup(c)
    r = c.note("r", c.vD // 2)
    m = 2 * r - 3
    A1, B1 = R.A // 3**m, R.B // 3**m
    # theta / 3^(r-2) at P3, P4 are the roots of G lifting those of 2 s^2 Y^2 + B'
    G = _scaled(R.poly, 3, r - 2, m)
    t0 = next(y for y in (1, 2) if (2 * s * s * y * y + B1) % 3 == 0)
    y_plus, y_minus = zhensel_root(G, t0, 3, 2), zhensel_root(G, -t0, 3, 2)
    # beta_4 vanishes to order v3(t - t*) at the prime with Y = y_minus; take t = t* + 3
    k = 3 ** (r - 2)
    t4 = (B1 + k * A1 * y_minus) * pow(2 * s * s * y_minus, -1, 9) % 9
    t3 = -(B1 + k * A1 * y_plus) * pow(2 * s * s * y_plus, -1, 9) % 9
    t4, t3 = c.note("t", (t4 + 3) % 9), c.note("t'", (t3 + 3) % 9)
    g = th**3 + 4 * s * th**2
    b4 = (g + 6 * s * s * (th + k * t4)) / 3 ** (r - 1)
    b3 = (g + 6 * s * s * (th - k * t3)) / 3 ** (r - 1)
    b2 = th + _psi(R, th, r - 1) ** 2
    return [c.prime(1, 1, th - cc, exact=True), c.prime(1, 1, b2, exact=True),
            c.prime(1, 1, b3, exact=True), c.prime(1, 1, b4, exact=True)]


def _b114_B3_symbol(c: Case) -> int:
    return legendre(-2 * unit_part(c.ring(c.b11_s).B, 3), 3)


_B114_BETA = ("beta_1 uses theta - c with v3(F(c)) = 1; the printed beta_2 and beta_3 lie in a "
              "second prime and are replaced by elements built from psi_k = -B/(3^k theta)")

TABLE_B114 = (
    _row("B11.4 row 4", lambda c: c.vD % 2 == 1 and c.vD >= 9, "P1 P2 P3^2", _b114_odd,
         erratum=_B114_BETA),
    _row("B11.4 row 5", lambda c: c.vD == 7, "P1 P2 P3^2", _b114_odd,
         erratum="r is unstated; v3(D) = 7 = 2r + 1 gives r = 3, and row 4's corrected "
                 "recipe applies. " + _B114_BETA, quarantined=True),
    _row("B11.4 row 6", lambda c: c.vD % 2 == 0 and c.vD >= 8 and _b114_B3_symbol(c) == -1,
         "P1 P2 P3", _b114_6, printed="r >= 5",
         erratum="v3(D) = 8 (r = 4) is otherwise uncovered. " + _B114_BETA),
    _row("B11.4 row 7", lambda c: c.vD % 2 == 0 and c.vD >= 8 and _b114_B3_symbol(c) == 1,
         "P1 P2 P3 P4", _b114_7, printed="2 s^2 t^2 + B_3 = 3 mod 9",
         erratum="t is fixed from the 9-adic root of the scaled polynomial so that v(beta) = 1. "
                 + _B114_BETA),
)


# Table C (v_p(b) = 0, v_p(a) >= 1) ---------------------------------------------


def _c1(c: Case):
    p, al = c.p, c.alpha
    u = c.note("u", mod_root(4 * c.b, 4, p))
    t = c.note("t", u * u * pow(2, -1, p) % p)
    return [c.prime(1, 2, al**2 + u * al + t), c.prime(1, 2, al**2 - u * al + t)]


def _c2(c: Case):
    p, al = c.p, c.alpha
    t = c.note("t", mod_root(-c.b, 4, p))
    u = c.note("u", mod_root(-1, 2, p))
    return [c.prime(1, 1, al + t), c.prime(1, 1, al - t), c.prime(1, 1, al + u * t),
            c.prime(1, 1, al - u * t)]


def _c3(c: Case):
    al = c.alpha
    t = c.note("t", mod_root(-c.b, 4, c.p))
    return [c.prime(1, 1, al + t), c.prime(1, 1, al - t), c.prime(1, 2, al**2 + t * t)]


def _c4(c: Case):
    al = c.alpha
    t = c.note("t", mod_root(-c.b, 2, c.p))
    return [c.prime(1, 2, al**2 + t), c.prime(1, 2, al**2 - t)]


def _c7(c: Case):
    al = c.alpha
    return [c.prime(1, 2, al**2 + al - 1), c.prime(1, 2, al**2 - al - 1)]


def _c8(c: Case):
    al = c.alpha
    return [c.prime(1, 2, al**2 + 1), c.prime(1, 1, al - 1), c.prime(1, 1, al + 1)]


def _c_alpha_minus_1(e, f):
    def build(c: Case):
        return [c.prime(e, f, c.alpha - 1)]

    return build


def _c13(c: Case):
    th = c.shifted(1).theta
    phi = (th**3 + 4 * th**2 + 6 * th) / 4
    return [c.prime(2, 1, phi + 1), c.prime(1, 2, phi**2 + phi + 1)]


TABLE_C = (
    _row("C2", lambda c: c.p >= 5 and c.leg(-1) == 1 and c.power(-c.b, 4), "P1 P2 P3 P4", _c2),
    _row("C3", lambda c: c.p >= 5 and c.leg(-1) == -1 and c.power(-c.b, 4), "P1 P2 P3", _c3),
    _row("C4", lambda c: c.p >= 5 and c.leg(-c.b) == 1 and not c.power(-c.b, 4), "P1 P2", _c4),
    _row("C1", lambda c: c.p >= 5 and c.leg(2) == 1 and c.power(c.b, 4) and not c.power(-c.b, 4),
         "P1 P2", _c1, printed="(2/p) = 1, (b/p)_4 = 1",
         erratum="without (-b/p)_4 != 1 the guard overlaps C2/C3; with it the row is a special "
                 "case of C5; t is taken as u^2/2"),
    _row("C5", lambda c: c.p >= 5 and c.power(4 * c.b, 4) and not c.power(-c.b, 4), "P1 P2", _c1,
         printed="u^4 = 4b, t^2 = b", erratum="t must be the root u^2/2 of t^2 = b"),
    _row("C6", lambda c: c.p >= 5 and not c.power(-c.b, 4) and not c.power(4 * c.b, 4)
         and c.leg(-c.b) == -1, "P", lambda c: [c.inert()]),
    _row("C7", lambda c: c.p == 3 and c.b % 3 == 1, "P1 P2", _c7),
    _row("C8", lambda c: c.p == 3 and c.b % 3 == 2, "P1 P2 P3", _c8,
         printed="P1^2 P2 P3", erratum="X^4 - 1 is square-free mod 3; all e = 1"),
    _row("C9", lambda c: c.p == 2 and c.b % 4 == 1 and c.a % 4 == 0, "P^4", _c_alpha_minus_1(4, 1)),
    _row("C10", lambda c: c.p == 2 and c.b % 4 == 3 and c.a % 4 == 2, "P^4", _c_alpha_minus_1(4, 1)),
    _row("C11", lambda c: c.p == 2 and c.b % 4 == 1 and c.a % 4 == 2, "", redirect="C14",
         printed="go to table 8", erratum="no such table; C14 row 1 covers v2(A) = 1"),
    _row("C12", lambda c: c.p == 2 and (c.b % 8 == 7 and c.a % 8 == 4 or c.b % 8 == 3 and c.a % 8 == 0),
         "P^2", _c_alpha_minus_1(2, 2), printed="b = 7 mod 8, a = 4 mod 8",
         erratum="b = 3 mod 8, a = 0 mod 8 was unassigned and has the same polygon"),
    _row("C13", lambda c: c.p == 2 and c.b % 8 == 7 and c.a % 8 == 0 and (1 + a_b(c)) % 16 == 8,
         "P1^2 P2", _c13),
    _row("C14", lambda c: c.p == 2 and c.b % 8 == 7 and c.a % 8 == 0 and (1 + a_b(c)) % 16 == 0,
         "", redirect="C14"),
    _row("C15", lambda c: c.p == 2 and c.b % 8 == 3 and c.a % 8 == 4, "", redirect="C14"),
)


def a_b(c: Case) -> int:
    return c.a + c.b


# Table C14 (p = 2, theta = alpha - s with P(X+s) X-regular) ------------------------


def _c14_data(c: Case):
    R = c.shifted(c.c14_s)
    return R, R.s, R.theta, vp(R.A, 2), vp(R.B, 2)


def _c14_beta1(th: Element) -> Element:
    # (theta^2+6)/2 has v_P1 = min(2r - 3, 3) or more, so it is squared
    # before theta (v_P1 = 1) is added
    return th + ((th**2 + 6) / 2) ** 2


def _c14_1(c: Case):
    R, s, th, _, _ = _c14_data(c)
    return [c.prime(3, 1, (th**3 + R.A) / 2, exact=True),
            c.prime(1, 1, th**3 / 2 + 2, exact=True)]


def _c14_2(c: Case):
    R, s, th, vA, _ = _c14_data(c)
    c.note("r", vA)
    return [c.prime(2, 1, _c14_beta1(th), exact=True),
            c.prime(1, 2, th**2 / 2 + 2, exact=True)]


def _c14_34(plus):
    def build(c: Case):
        R, s, th, vA, _ = _c14_data(c)
        r = c.note("r", vA)
        # theta / 2^(r-1) at P2 is a 2-adic root of G; t is chosen 2 away from it mod 4
        G = _scaled(R.poly, 2, r - 1, 2 * r - 1)
        t = c.note("t", (2 - zhensel_root(G, 1, 2, 2)) % 4)
        g = th**2 + 4 * s * th + 6 * s * s
        b3 = th * g / 2**r + (2 if plus else 0)
        b2 = g * (th + 2 ** (r - 1) * t) / 2**r
        return [c.prime(2, 1, _c14_beta1(th), exact=True), c.prime(1, 1, b2, exact=True),
                c.prime(1, 1, b3, exact=True)]

    return build


def _c14_5(c: Case):
    R, s, th, _, vB = _c14_data(c)
    r = c.note("r", vB // 2)
    b2 = th**2 / 2 + (th**3 + 4 * s * th**2 + 6 * s * s * th + R.A) / 2**r
    return [c.prime(2, 1, _c14_beta1(th), exact=True), c.prime(2, 1, b2, exact=True)]


def _c14_v(c: Case):
    R = c.ring(c.c14_s)
    return vp(R.A, 2), vp(R.B, 2)


_C14_HEADER = "header A = 4s + a read as A = 4s^3 + a"

TABLE_C14 = (
    _row("C14 row 1", lambda c: _c14_v(c)[0] == 1 and _c14_v(c)[1] >= 2, "P1^3 P2", _c14_1,
         erratum=_C14_HEADER),
    _row("C14 row 2", lambda c: (lambda vA, vB: vA >= 2 and vB == 2 * vA - 1)(*_c14_v(c)), "P1^2 P2",
         _c14_2, erratum=_C14_HEADER),
    _row("C14 row 3", lambda c: (lambda vA, vB: vA >= 2 and vB > 2 * vA)(*_c14_v(c)), "P1^2 P2 P3",
         _c14_34(True), erratum=_C14_HEADER),
    _row("C14 row 4", lambda c: (lambda vA, vB: vA >= 2 and vB == 2 * vA)(*_c14_v(c)), "P1^2 P2 P3",
         _c14_34(False), erratum=_C14_HEADER),
    _row("C14 row 5", lambda c: (lambda vA, vB: vB % 2 == 0 and vA >= vB // 2 + 1 and vB >= 2)(*_c14_v(c)),
         "P1^2 P2^2", _c14_5, erratum=_C14_HEADER),
)


# Table D (v_p(ab) = 0) --------------------------------------------------------


def _d3(c: Case):
    al = c.alpha
    return [c.prime(1, 1, al - 1), c.prime(1, 3, al**3 + al**2 + al - 1)]


def _d4(c: Case):
    al = c.alpha
    return [c.prime(1, 1, al + 1), c.prime(1, 3, al**3 - al**2 + al + 1)]


def _d_quadratic_roots(c: Case, R: ShiftedQuartic):
    """Roots v1, v2 of X^2 + 4sX + 6s^2 mod p with v_p(F(v_i)) = 1."""
    p, s = c.p, R.s
    u = c.note("u", mod_root(-2, 2, p))
    v1 = exact_root(R.poly, -s * (2 + u) % p, p)
    v2 = exact_root(R.poly, -s * (2 - u) % p, p)
    return c.note("v1", v1), c.note("v2", v2)


def _d6(c: Case):
    R = c.shifted(c.d_s % c.p)
    th = R.theta
    v1, v2 = _d_quadratic_roots(c, R)
    return [c.prime(1, 1, th - v1), c.prime(1, 1, th - v2), c.prime(2, 1, th)]


def _d7(c: Case):
    R = c.shifted(c.d_s % c.p)
    th, s = R.theta, R.s
    return [c.prime(1, 2, th**2 + 4 * s * th + 6 * s * s), c.prime(2, 1, th)]


def dedekind_factors(c: Case) -> list[PrimeIdealFactor]:
    Fp = PrimeField(c.p)
    out = []
    for g, m in factor_quartic_modp(Fp.poly(c.field.poly)):
        w = c.ring(0).element(list(g.coeffs))
        out.append(c.prime(m, g.degree, w))
    if len(out) == 1 and out[0].e == 1:
        return [c.inert()]
    return out


TABLE_D = (
    _row("D1", lambda c: c.p == 2, "P", lambda c: [c.inert()]),
    _row("D2", lambda c: c.p == 3 and c.b % 3 == 2, "P", lambda c: [c.inert()]),
    _row("D3", lambda c: c.p == 3 and c.a % 3 == 1 and c.b % 3 == 1, "P1 P2", _d3),
    _row("D4", lambda c: c.p == 3 and c.a % 3 == 2 and c.b % 3 == 1, "P1 P2", _d4,
         printed="a = b = 1 mod 3", erratum="the root -1 needs 1 - a + b = 0 mod 3: a = -1, b = 1",
         quarantined=True),
    _row("D5", lambda c: c.p >= 5 and c.vD == 0, "p-analogous", dedekind_factors),
    _row("D6", lambda c: c.p >= 5 and c.vD == 1 and c.leg(-2) == 1, "P1 P2 P3^2", _d6),
    _row("D7", lambda c: c.p >= 5 and c.vD == 1 and c.leg(-2) == -1, "P1 P2^2", _d7),
    _row("D8", lambda c: c.p >= 5 and c.vD >= 2, "", redirect="D8"),
)


# Table D8 (p >= 5, v_p(D) >= 2, theta = alpha - s) ---------------------------------


def _d8_setup(c: Case):
    R = c.shifted(c.d_s)
    s, th = R.s, R.theta
    g = th**2 + 4 * s * th + 6 * s * s
    return R, s, th, g


def _d8_Bp(c: Case) -> int:
    return unit_part(c.ring(c.d_s).B, c.p) % c.p


def _d8_t(c: Case, R: ShiftedQuartic, r: int) -> tuple[int, int]:
    """t, t' for the two simple residual roots, kept at exact distance p from them.

    theta / p^r at P3, P4 are the p-adic roots Y+, Y- of G(Y) = F(p^r Y)/p^(2r),
    lifting the roots of 6 s^2 Y^2 + B_p mod p.
    """
    p, s = c.p, R.s
    Bp = unit_part(R.B, p)
    G = _scaled(R.poly, p, r, 2 * r)
    t0 = mod_root(-Bp * pow(6 * s * s, -1, p) % p, 2, p)
    y_plus, y_minus = zhensel_root(G, t0, p, 2), zhensel_root(G, -t0, p, 2)
    return c.note("t", (y_plus + p) % p**2), c.note("t'", (p - y_minus) % p**2)


def _d8_1(c: Case):
    R, s, th, g = _d8_setup(c)
    p = c.p
    r = c.note("r", (c.vD - 1) // 2)
    v1, v2 = _d_quadratic_roots(c, R)
    return [c.prime(1, 1, th - v2, exact=True), c.prime(1, 1, th - v1, exact=True),
            c.prime(2, 1, th * g / p**r + th**2, exact=True)]


def _d8_2(c: Case):
    R, s, th, g = _d8_setup(c)
    p = c.p
    r = c.note("r", (c.vD - 1) // 2)
    return [c.prime(1, 2, g + p, exact=True), c.prime(2, 1, th * g / p**r + th**2, exact=True)]


def _d8_3(c: Case):
    R, s, th, g = _d8_setup(c)
    p = c.p
    r = c.note("r", c.vD // 2)
    v1, v2 = _d_quadratic_roots(c, R)
    return [c.prime(1, 1, th - v2, exact=True), c.prime(1, 1, th - v1, exact=True),
            c.prime(1, 2, th * g / p ** (r - 1) + th**2, exact=True)]


def _d8_residual_pair(c: Case, R, th, g):
    p = c.p
    r = c.note("r", c.vD // 2)
    t3, t4 = _d8_t(c, R, r)
    tail = th**2 if r == 1 else th
    b4 = g * (th + p**r * t4) / p**r + tail
    b3 = g * (th - p**r * t3) / p**r + tail
    return [c.prime(1, 1, b3, exact=True), c.prime(1, 1, b4, exact=True)]


def _d8_45(c: Case):
    R, s, th, g = _d8_setup(c)
    v1, v2 = _d_quadratic_roots(c, R)
    return [c.prime(1, 1, th - v2, exact=True), c.prime(1, 1, th - v1, exact=True)] + \
        _d8_residual_pair(c, R, th, g)


def _d8_6(c: Case):
    R, s, th, g = _d8_setup(c)
    p = c.p
    r = c.note("r", c.vD // 2)
    return [c.prime(1, 2, g + p, exact=True), c.prime(1, 2, th * g / p ** (r - 1) + th**2, exact=True)]


def _d8_78(c: Case):
    R, s, th, g = _d8_setup(c)
    return [c.prime(1, 2, g + c.p, exact=True)] + _d8_residual_pair(c, R, th, g)


_D8_T = ("t and t' need more than one p-adic digit: they are the roots Y+, Y- of F(p^r Y)/p^(2r) "
         "lifted mod p^2 and moved by p, so that each beta has valuation exactly 1 at its own prime")


def _d8_sym(c: Case) -> int:
    return legendre(-6 * _d8_Bp(c), c.p)


TABLE_D8 = (
    _row("D8 row 1", lambda c: c.vD % 2 == 1 and c.leg(-2) == 1, "P1 P2 P3^2", _d8_1),
    _row("D8 row 2", lambda c: c.vD % 2 == 1 and c.leg(-2) == -1, "P1 P2^2", _d8_2),
    _row("D8 row 3", lambda c: c.vD % 2 == 0 and c.leg(-2) == 1 and _d8_sym(c) == -1, "P1 P2 P3", _d8_3),
    _row("D8 row 4", lambda c: c.vD == 2 and c.leg(-2) == 1 and _d8_sym(c) == 1, "P1 P2 P3 P4", _d8_45,
         erratum=_D8_T, quarantined=True),
    _row("D8 row 5", lambda c: c.vD >= 4 and c.vD % 2 == 0 and c.leg(-2) == 1 and _d8_sym(c) == 1,
         "P1 P2 P3 P4", _d8_45, erratum=_D8_T, quarantined=True),
    _row("D8 row 6", lambda c: c.vD % 2 == 0 and c.leg(-2) == -1 and _d8_sym(c) == -1, "P1 P2", _d8_6),
    _row("D8 row 7", lambda c: c.vD == 2 and c.leg(-2) == -1 and _d8_sym(c) == 1, "P1 P2 P3", _d8_78,
         erratum=_D8_T, quarantined=True),
    _row("D8 row 8", lambda c: c.vD >= 4 and c.vD % 2 == 0 and c.leg(-2) == -1 and _d8_sym(c) == 1,
         "P1 P2 P3", _d8_78, erratum=_D8_T, quarantined=True),
)


TABLES: Mapping[str, tuple[TableRow, ...]] = MappingProxyType({
    "A": TABLE_A, "A8": TABLE_A8,
    "B": TABLE_B, "B6": TABLE_B6, "B11": TABLE_B11, "B11.4": TABLE_B114,
    "C": TABLE_C, "C14": TABLE_C14,
    "D": TABLE_D, "D8": TABLE_D8,
})


def all_rows() -> list[TableRow]:
    return [row for rows in TABLES.values() for row in rows]


def top_table(c: Case) -> str:
    if c.va >= 1 and c.vb >= 1:
        return "A"
    if c.vb >= 1:
        return "B"
    if c.va >= 1:
        return "C"
    return "D"


def matching_rows(table: str, c: Case) -> list[TableRow]:
    return [row for row in TABLES[table] if row.matches(c)]


def _check_input(a: int, b: int, p: int) -> None:
    if p < 2:
        raise ValueError(f"{p} is not a prime")
    if vp(a, p) >= 3 and vp(b, p) >= 4:
        raise NotNormalizedError(f"v_{p}(a) >= 3 and v_{p}(b) >= 4: normalize first")


def resolve(c: Case) -> tuple[TableRow, tuple[str, ...]]:
    """Follow redirects from the top-level table to the row that builds."""
    table = top_table(c)
    path = []
    while True:
        hits = matching_rows(table, c)
        if not hits:
            raise NoRowMatched(table, c.conditions())
        row = hits[0]
        path.append(row.id)
        if row.redirect is None:
            return row, tuple(path)
        table = row.redirect


def classify(a: int, b: int, p: int) -> PrimeFactorization:
    """Factor pZ_K by the tables.  (a, b) must already be normalized."""
    _check_input(a, b, p)
    c = Case(a, b, p)
    row, path = resolve(c)
    factors = tuple(row.build(c))
    result = PrimeFactorization(p, c.field, factors, TableTrace(row.id, path, MappingProxyType(dict(c.aux))))
    if result.degree != 4:
        raise AssertionError(f"row {row.id} produced sum ef = {result.degree}")
    return result


def dedekind_factorization(a: int, b: int, p: int) -> PrimeFactorization:
    """The factorization read off P mod p; valid only when p does not divide the index."""
    from .verify import dedekind_criterion

    if not dedekind_criterion(a, b, p):
        raise DedekindNotApplicable(f"{p} divides the index of Z[alpha] for X^4{a:+d}X{b:+d}")
    c = Case(a, b, p)
    return PrimeFactorization(p, c.field, tuple(dedekind_factors(c)), TableTrace("dedekind", ("dedekind",)))


def factor(a: int, b: int, p: int) -> PrimeFactorization:
    """Normalize (a, b), then classify at p.  The normalization is kept on the result."""
    nz = normalize(a, b)
    return replace(classify(nz.a, nz.b, p), normalization=nz)


def factor_discriminant(delta: int, bound: int = FACTOR_BOUND) -> dict[int, int]:
    """Prime factorization of |delta|; refuses when an unsplit cofactor exceeds ``bound``."""
    n = abs(delta)
    small = factorint(n, limit=10**6)
    from sympy import isprime

    out = {}
    for q, k in small.items():
        if isprime(q):
            out[q] = k
        elif q > bound:
            raise UnfactoredDiscriminant(q)
        else:
            for r, j in factorint(q).items():
                out[r] = out.get(r, 0) + j * k
    return dict(sorted(out.items()))


def factor_all_ramified(a: int, b: int, bound: int = FACTOR_BOUND) -> dict[int, PrimeFactorization]:
    """factor() at every prime dividing the discriminant of the normalized polynomial."""
    nz = normalize(a, b)
    field_ = QuarticField(nz.a, nz.b)
    return {p: replace(classify(nz.a, nz.b, p), normalization=nz)
            for p in factor_discriminant(field_.discriminant, bound)}


# -- guard audit ------------------------------------------------------------------


@dataclass
class GuardAudit:
    """Which rows fire together, table by table, over a set of inputs."""

    inputs: int = 0
    unmatched: list[tuple[str, dict]] = field(default_factory=list)
    overlaps: dict[tuple[str, tuple[str, ...]], int] = field(default_factory=dict)
    hits: dict[str, int] = field(default_factory=dict)

    def unlisted_overlaps(self) -> list[tuple[str, tuple[str, ...]]]:
        return sorted(k for k in self.overlaps if k[1] not in KNOWN_OVERLAPS)


# Overlaps that first-match order resolves.  Each entry names the rows firing
# together; the first one listed is the one that applies.
KNOWN_OVERLAPS: Mapping[tuple[str, ...], str] = MappingProxyType({
    # 2 a square makes 4 a fourth power, so C1's guard implies C5's; both
    # rows build the same two f = 2 primes
    ("C1", "C5"): "C1 is the (2/p) = 1 special case of C5, same recipe",
})


def audit_guards(inputs) -> GuardAudit:
    """Evaluate every guard of every table visited, for each (a, b, p)."""
    out = GuardAudit()
    for a, b, p in inputs:
        out.inputs += 1
        c = Case(a, b, p)
        table = top_table(c)
        while True:
            fired = tuple(row.id for row in matching_rows(table, c))
            if not fired:
                out.unmatched.append((table, c.conditions()))
                break
            if len(fired) > 1:
                key = (table, fired)
                out.overlaps[key] = out.overlaps.get(key, 0) + 1
            row = TABLES[table][[r.id for r in TABLES[table]].index(fired[0])]
            if row.redirect is None:
                out.hits[row.id] = out.hits.get(row.id, 0) + 1
                break
            table = row.redirect
    return out


def enumerate_condition_inputs(primes=(2, 3, 5, 7, 11, 13, 17), max_i: int = 6, max_j: int = 7,
                               units: int = 24, shifts: int = 12):
    """A finite, deterministic input family covering the guard conditions.

    For each p: a = p^i u and b = p^j w (i = -1 means a = 0) over the first
    ``units`` signed p-units u, w; and the shifted inputs a = A - 4s^3,
    b = B - s^4 - a s with v_p(A), v_p(B) <= 10 that produce large v_p(D).
    Inputs with reducible X^4 + aX + b or needing normalization are skipped.
    """
    from .polyz import is_irreducible_quartic

    def unit_list(p):
        out, k = [], 1
        while len(out) < units:
            if k % p:
                out += [k, -k]
            k += 1
        return out[:units]

    seen = set()
    for p in primes:
        us = unit_list(p)
        cand = []
        for i in range(-1, max_i + 1):
            for j in range(0, max_j + 1):
                for u in us[: units // 2 if i > 2 else units]:
                    for w in us:
                        cand.append((0 if i < 0 else p**i * u, p**j * w))
        for kA in range(1, 11):
            for kB in range(1, 11):
                for s in range(1, shifts + 1):
                    for u, w in ((1, 1), (1, -1), (-1, 2), (2, -3)):
                        if p in (2, 3) and (u % p == 0 or w % p == 0):
                            continue
                        A, B = p**kA * u, p**kB * w
                        a = A - 4 * s**3
                        cand.append((a, B - s**4 - a * s))
        for a, b in cand:
            if b == 0 or (p, a, b) in seen or (vp(a, p) >= 3 and vp(b, p) >= 4):
                continue
            seen.add((p, a, b))
            if is_irreducible_quartic(a, b):
                yield a, b, p
