"""Checks on a PrimeFactorization that do not trust the tables.

Six checks run on every result:

1. sum of e*f is 4
2. when p does not divide the index, the shapes equal those of P mod p and
   each generator reduces into exactly its own Dedekind prime
3. every generator has an integral characteristic polynomial
4. v_p(N(w)) = f for exact generators, >= f for the others
5. for p >= 5 (tame), v_p(D) and sum (e-1)f agree in parity and v_p(D) >= sum
6. if p does not divide D, every e is 1
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import asdict, dataclass, field

from .arith import vp
from .polyfp import PrimeField, Poly, factor_quartic_modp, gcd
from .polyz import QuarticField, char_poly_of_element, norm_valuation, zsub, zmul, zpow, ztrim


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class VerificationReport:
    a: int
    b: int
    p: int
    checks: list[Check] = field(default_factory=list)

    @property
    def overall(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, passed: bool, detail: str = "") -> None:
        self.checks.append(Check(name, bool(passed), detail))

    def failed(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def to_text(self) -> str:
        lines = [f"verify a={self.a} b={self.b} p={self.p} overall={'PASS' if self.overall else 'FAIL'}"]
        for c in self.checks:
            lines.append(f"  {'PASS' if c.passed else 'FAIL'} {c.name}" + (f": {c.detail}" if c.detail else ""))
        return "\n".join(lines)

    def to_dict(self) -> dict:
        return {
            "input": {"a": self.a, "b": self.b, "p": self.p},
            "checks": [asdict(c) for c in self.checks],
            "overall": self.overall,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


# -- Dedekind -------------------------------------------------------------------


def _lift(g: Poly) -> tuple[int, ...]:
    return tuple(int(c) for c in g.coeffs)


def dedekind_criterion(a: int, b: int, p: int) -> bool:
    """True iff p does not divide [Z_K : Z[alpha]].

    Write P = prod g_i^e_i + p F with monic lifts g_i of the irreducible
    factors mod p.  Then p divides the index iff some g_i with e_i >= 2
    divides F mod p.
    """
    P = (b, a, 0, 0, 1)
    Fp = PrimeField(p)
    facs = factor_quartic_modp(Fp.poly(P))
    prod: tuple[int, ...] = (1,)
    for g, e in facs:
        prod = zmul(prod, zpow(_lift(g), e))
    diff = zsub(P, prod)
    if any(c % p for c in diff):
        raise ArithmeticError("lifted factorization does not reduce to P mod p")
    F = Fp.poly([c // p for c in ztrim(diff)])
    for g, e in facs:
        if e >= 2 and (F % g).is_zero():
            return False
    return True


def dedekind_generator_problems(result) -> list[str]:
    """Check generators against the Dedekind primes P_i = (p, g_i(alpha)).

    Only meaningful when p does not divide the index, so that
    Z_K/pZ_K = F_p[X]/(P).  Then w lies in P_i iff g_i divides w mod p,
    and for e_i >= 2, w lies in P_i^2 iff g_i^2 divides w mod p.
    """
    field_: QuarticField = result.field
    p = result.p
    Fp = PrimeField(p)
    facs = factor_quartic_modp(Fp.poly((field_.b, field_.a, 0, 0, 1)))
    problems, used = [], set()
    for F in result.factors:
        if F.generator_is_whole_ideal:
            if len(facs) != 1 or facs[0][1] != 1:
                problems.append("generator p claims the whole ideal but p is not inert")
            continue
        w = F.generator.in_alpha()
        if w.denom_exp:
            problems.append(f"{w} is not in Z[alpha] localized at p")
            continue
        wbar = Fp.poly(w.numerator)
        inside = [i for i, (g, _) in enumerate(facs) if (wbar % g).is_zero()]
        if len(inside) != 1:
            problems.append(f"{w} lies in {len(inside)} of the Dedekind primes")
            continue
        i = inside[0]
        g, e = facs[i]
        if (e, g.degree) != (F.e, F.f):
            problems.append(f"{w} lies in a prime of shape {(e, g.degree)}, not {(F.e, F.f)}")
        elif e >= 2 and (wbar % (g * g)).is_zero():
            problems.append(f"{w} lies in the square of its prime")
        elif i in used:
            problems.append(f"{w} repeats a prime")
        used.add(i)
    return problems


def mod_p_shapes(a: int, b: int, p: int) -> list[tuple[int, int]]:
    Fp = PrimeField(p)
    return sorted((e, g.degree) for g, e in factor_quartic_modp(Fp.poly((b, a, 0, 0, 1))))


# -- the check suite --------------------------------------------------------------


def check_factorization(result) -> VerificationReport:
    field_: QuarticField = result.field
    a, b, p = field_.a, field_.b, result.p
    rep = VerificationReport(a, b, p)
    shapes = sorted((F.e, F.f) for F in result.factors)

    total = sum(e * f for e, f in shapes)
    rep.add("sum_ef", total == 4, f"sum e*f = {total}")

    if dedekind_criterion(a, b, p):
        want = mod_p_shapes(a, b, p)
        probs = [] if Counter(shapes) != Counter(want) else dedekind_generator_problems(result)
        ok = Counter(shapes) == Counter(want) and not probs
        rep.add("dedekind_agreement", ok, "; ".join([f"got {shapes}, mod p gives {want}"] + probs))
    else:
        rep.add("dedekind_agreement", True, "p divides the index; not applicable")

    bad_int, bad_norm = [], []
    for F in result.factors:
        w = F.generator
        if not all(c.denominator == 1 for c in char_poly_of_element(w, field_)):
            bad_int.append(str(w))
            continue
        if F.generator_is_whole_ideal:
            continue
        if w.is_zero:
            bad_norm.append(f"{w} is zero")
            continue
        v = norm_valuation(w, field_)
        if (v != F.f) if F.exact else (v < F.f):
            bad_norm.append(f"v_p(N({w})) = {v}, f = {F.f}{' (exact)' if F.exact else ''}")
    rep.add("integrality", not bad_int, "; ".join(bad_int))
    rep.add("norm_valuation", not bad_norm, "; ".join(bad_norm))

    vD = vp(field_.discriminant, p)
    if p >= 5:
        tame = sum((e - 1) * f for e, f in shapes)
        ok = vD % 2 == tame % 2 and vD >= tame
        rep.add("tame_parity", ok, f"v_p(D) = {vD}, sum (e-1)f = {tame}")
    if vD == 0:
        rep.add("unramified", all(e == 1 for e, _ in shapes), f"e values {[e for e, _ in shapes]}")
    return rep


def residual_root_check(element, field_: QuarticField, residual_coeffs, p: int) -> bool:
    """Whether a side element alpha_S = phi(alpha)^e / p^h is a p-unit whose
    reduction is a root of the residual polynomial.

    ``element`` is alpha_S; the residual polynomial is given by its
    coefficients over F_p.  Checked as v_p(N(alpha_S)) = 0 together with
    v_p(N(R(alpha_S))) > 0, where R is a monic integer lift of the residual
    polynomial.
    """
    from .polyz import Element, ShiftedQuartic

    if norm_valuation(element, field_) != 0:
        return False
    R = ShiftedQuartic(field_.a, field_.b, element.shift)
    w = Element(R, element.numerator) / p**element.denom_exp
    acc = R.const(0)
    for k, c in enumerate(residual_coeffs):
        acc = acc + w**k * int(c)
    val = acc.to_algebraic(p)
    if val.is_zero:
        return True
    return norm_valuation(val, field_) > 0
