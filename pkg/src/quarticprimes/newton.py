"""First-order phi-Newton polygons and residual polynomials.

Sides are stored with positive ``(h, e)`` and an implicit negative slope
``-h/e``; a horizontal side has ``h = 0, e = 1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .arith import INF, vp
from .polyfp import Poly, PrimeField, ResidueField, factor, factor_residual
from .polyz import ZPoly, phi_adic_development, zcontent, zformat, ztrim


class RegularityError(ArithmeticError):
    """Some residual polynomial is not square-free."""


@dataclass(frozen=True)
class PolygonPoint:
    i: int
    u: object  # int or INF


@dataclass(frozen=True)
class Side:
    start: int
    end: int
    y_start: int
    y_end: int
    h: int
    e: int
    residual: Poly | None = None

    @property
    def length(self) -> int:
        return self.end - self.start

    @property
    def degree(self) -> int:
        return self.length // self.e

    @property
    def slope(self) -> Fraction:
        return Fraction(-self.h, self.e)

    @property
    def is_principal(self) -> bool:
        return self.h > 0


@dataclass(frozen=True)
class NewtonPolygon:
    p: int
    phi: ZPoly
    points: tuple[PolygonPoint, ...]
    sides: tuple[Side, ...]

    @property
    def principal(self) -> tuple[Side, ...]:
        return tuple(s for s in self.sides if s.is_principal)

    @property
    def residue_field(self) -> ResidueField:
        return ResidueField(PrimeField(self.p).poly(self.phi))

    def render(self) -> str:
        lines = [f"phi = {zformat(self.phi)}, p = {self.p}", "  i  u_i"]
        for pt in self.points:
            lines.append(f"{pt.i:3d}  {'inf' if pt.u is INF else pt.u}")
        for k, s in enumerate(self.sides):
            kind = "principal" if s.is_principal else "horizontal"
            lines.append(
                f"S{k}: ({s.start},{s.y_start})-({s.end},{s.y_end}) slope -{s.h}/{s.e} "
                f"length {s.length} degree {s.degree} [{kind}] residual {s.residual}"
            )
        return "\n".join(lines)


def _lower_hull(pts: list[tuple[int, int]]) -> list[tuple[int, int]]:
    hull: list[tuple[int, int]] = []
    for pt in pts:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            # drop the middle point unless it turns strictly counter-clockwise
            if (x2 - x1) * (pt[1] - y1) - (y2 - y1) * (pt[0] - x1) <= 0:
                hull.pop()
            else:
                break
        hull.append(pt)
    return hull


def _reduce_coeff(a_i: ZPoly, u: int, p: int, field: ResidueField):
    q = p**u
    return field([c // q for c in a_i])


def build_polygon(F, phi, p: int) -> NewtonPolygon:
    """The phi-Newton polygon of F with respect to p, with residual polynomials."""
    F, phi = ztrim(F), ztrim(phi)
    if zcontent(F) % p == 0:
        raise ValueError("F vanishes modulo p")
    dev = phi_adic_development(F, phi)
    points = tuple(PolygonPoint(i, vp(zcontent(c), p) if c else INF) for i, c in enumerate(dev))
    finite = [(pt.i, pt.u) for pt in points if pt.u is not INF]
    hull = _lower_hull(finite)
    field = ResidueField(PrimeField(p).poly(phi))
    sides = []
    for (x0, y0), (x1, y1) in zip(hull, hull[1:]):
        dy, dx = y0 - y1, x1 - x0
        g = gcd(dy, dx)
        h, e = dy // g, dx // g
        coeffs = []
        for j in range(dx // e + 1):
            i = x0 + j * e
            u = points[i].u
            if u is not INF and u == y0 - j * h:
                coeffs.append(_reduce_coeff(dev[i], u, p, field))
            else:
                coeffs.append(field.zero)
        sides.append(Side(x0, x1, y0, y1, h, e, Poly(field, coeffs)))
    return NewtonPolygon(p, phi, points, tuple(sides))


def residual_polynomial(side: Side) -> Poly:
    return side.residual


def lifted_factors(F, p: int):
    Fp = PrimeField(p)
    for g, mult in factor(Fp.poly(F).monic()):
        phi = tuple(int(c) for c in g.coeffs)
        if phi == ztrim(F):
            # a lift equal to F gives a_0 = 0 and no finite side; any other lift will do
            phi = (phi[0] + p,) + phi[1:]
        yield phi, mult


@dataclass(frozen=True)
class SideReport:
    phi: ZPoly
    side: Side
    squarefree: bool


def is_p_regular(F, p: int) -> tuple[bool, list[SideReport]]:
    """Check every residual polynomial of every principal polygon."""
    reports = []
    for phi, _ in lifted_factors(F, p):
        for side in build_polygon(F, phi, p).principal:
            fac = factor_residual(side.residual)
            reports.append(SideReport(phi, side, all(m == 1 for _, m in fac)))
    return all(r.squarefree for r in reports), reports


@dataclass(frozen=True)
class RegularPrime:
    """A prime ideal attached to (phi, side, psi) by the regular factorization."""

    e: int
    f: int
    phi: ZPoly
    side: Side
    psi: Poly
    phi_valuation: int  # v_P(phi(alpha)) = h


def regular_factorization(F, p: int) -> list[RegularPrime]:
    """Shapes of pZ_K when F is p-regular.  Raises RegularityError otherwise."""
    out = []
    for phi, _ in lifted_factors(F, p):
        m = len(phi) - 1
        for side in build_polygon(F, phi, p).principal:
            for psi, mult in factor_residual(side.residual):
                if mult > 1:
                    raise RegularityError(
                        f"residual {side.residual} of phi = {zformat(phi)} is not square-free"
                    )
                out.append(RegularPrime(side.e, m * psi.degree, phi, side, psi, side.h))
    return out
