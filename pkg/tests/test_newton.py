from __future__ import annotations

from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st
from sympy import primerange

from quarticprimes.arith import INF, vp
from quarticprimes.classify import classify
from quarticprimes.newton import (RegularityError, build_polygon, is_p_regular, regular_factorization,
                                  residual_polynomial)
from quarticprimes.polyfp import PrimeField, factor_quartic_modp
from quarticprimes.polyz import QuarticField, ShiftedQuartic, discriminant, normalize
from quarticprimes.verify import residual_root_check

from synth import usable


def flat(poly):
    """Residual coefficients over F_phi with deg phi = 1, as plain residues."""
    return tuple(int(c.coeffs[0]) if c.coeffs else 0 for c in poly.coeffs)


def test_polygon_80_30_at_2():
    N = build_polygon((30, 80, 0, 0, 1), (0, 1), 2)
    assert [(pt.i, pt.u) for pt in N.points] == [(0, 1), (1, 4), (2, INF), (3, INF), (4, 0)]
    (S,) = N.principal
    assert (S.h, S.e, S.length, S.degree) == (1, 4, 4, 1)


def test_polygon_slope_three_quarters():
    N = build_polygon((27 * 5, 27 * 2, 0, 0, 1), (0, 1), 3)
    (S,) = N.principal
    assert (S.h, S.e) == (3, 4)


def test_polygon_no_principal_part_when_b_is_a_unit():
    assert build_polygon((7, 3, 0, 0, 1), (0, 1), 5).principal == ()


def test_polygon_rejects_zero_mod_p():
    with pytest.raises(ValueError):
        build_polygon((5, 10, 0, 0, 5), (0, 1), 5)


def test_residual_case_vb_2():
    # v_p(b) = 2, v_p(a) >= 2: side of slope -1/2 with residual Y^2 + b_p
    p, b_p = 5, 3
    N = build_polygon((25 * b_p, 125, 0, 0, 1), (0, 1), p)
    (S,) = N.principal
    assert (S.h, S.e) == (1, 2)
    assert flat(residual_polynomial(S)) == (b_p, 0, 1)


def test_residual_shifted_d8_side():
    # P(X + s) with v_p(A) > r, v_p(B) = 2r: the side has residual 6 s^2 Y^2 + B_p
    p, s, r = 7, 2, 2
    A, B = p ** (r + 1) * 3, p ** (2 * r) * 5
    a = A - 4 * s**3
    b = B - s**4 - a * s
    R = ShiftedQuartic(a, b, s)
    N = build_polygon(R.poly, (0, 1), p)
    (S,) = N.principal
    assert (S.h, S.e, S.length) == (r, 1, 2)
    assert flat(S.residual) == (5 % p, 0, 6 * s * s % p)


def test_regularity_examples():
    assert is_p_regular((30, 80, 0, 0, 1), 2)[0]
    ok, reports = is_p_regular((25 * 3, 125, 0, 0, 1), 5)
    assert ok and all(r.squarefree for r in reports)
    # Y^2 + b_p with -b_p a nonzero square splits into distinct roots mod odd p: still regular
    assert is_p_regular((25 * 1, 125 * 2, 0, 0, 1), 5)[0]


def test_regular_factorization_examples():
    assert [(q.e, q.f) for q in regular_factorization((30, 80, 0, 0, 1), 2)] == [(4, 1)]
    assert sorted((q.e, q.f) for q in regular_factorization((30, 80, 0, 0, 1), 3)) == [(1, 1), (3, 1)]


def test_irregular_raises():
    # X^4 + 4 * 7: v_2(b) = 2 with 2 | a-free part gives a double residual root at p = 2
    with pytest.raises(RegularityError):
        regular_factorization((4 * 7, 8, 0, 0, 1), 2)


PRIMES = list(primerange(2, 40))


@settings(max_examples=300)
@given(st.integers(-3000, 3000), st.integers(-3000, 3000).filter(bool), st.sampled_from(PRIMES))
def test_polygon_invariants_and_regular_shapes(a, b, p):
    if not usable(a, b, p):
        return
    F = (b, a, 0, 0, 1)
    for g, _ in factor_quartic_modp(PrimeField(p).poly(F)):
        N = build_polygon(F, tuple(int(c) for c in g.coeffs), p)
        slopes = [s.h / s.e for s in N.sides]
        assert all(x > y for x, y in zip(slopes, slopes[1:]))  # -h/e strictly increases
        for s in N.sides:
            assert s.length == s.e * s.degree
            assert s.residual.degree == s.degree
    ok, _ = is_p_regular(F, p)
    if ok:
        shapes = Counter((q.e, q.f) for q in regular_factorization(F, p))
        assert sum(e * f for (e, f), k in shapes.items() for _ in range(k)) == 4
        assert shapes == Counter(classify(a, b, p).shapes)
    if vp(discriminant(a, b), p) == 0:
        assert ok
        assert Counter((q.e, q.f) for q in regular_factorization(F, p)) == Counter(
            (e, g.degree) for g, e in factor_quartic_modp(PrimeField(p).poly(F)))


@settings(max_examples=200)
@given(st.integers(-3000, 3000), st.integers(-3000, 3000).filter(bool), st.sampled_from(PRIMES))
def test_side_elements_are_units_with_residual_roots(a, b, p):
    # alpha_S = alpha^e / p^h when one side of the X-polygon carries every prime above p,
    # so that a norm computation sees only that side
    if not usable(a, b, p):
        return
    nz = normalize(a, b)
    K = QuarticField(nz.a, nz.b)
    _check_single_side(K, p)


def _check_single_side(K, p) -> bool:
    principal = build_polygon(K.poly, (0, 1), p).principal
    if len(principal) != 1 or principal[0].length != 4:
        return False
    S = principal[0]
    w = (ShiftedQuartic(K.a, K.b, 0).theta ** S.e / p**S.h).to_algebraic(p)
    assert residual_root_check(w, K, flat(S.residual), p)
    return True


@pytest.mark.parametrize("p", [2, 3, 5, 7])
@pytest.mark.parametrize("i,j", [(1, 1), (2, 2), (3, 2), (3, 3), (4, 3), (0, 2)])
def test_single_side_elements_targeted(p, i, j):
    import random

    from synth import adic

    rng = random.Random(p * 100 + i * 10 + j)
    checked = 0
    for _ in range(200):
        pair = adic(rng, p, i, j)
        if pair is None:
            continue
        nz = normalize(*pair)
        checked += _check_single_side(QuarticField(nz.a, nz.b), p)
    assert checked > 0 or (i, j) == (0, 2)
