from __future__ import annotations

import pytest
from hypothesis import given, strategies as st
from sympy import primerange

from quarticprimes.arith import (INF, NonLiftableRoot, hensel_lift_quadratic, legendre, mod_root, mod_roots,
                                 nth_power_residue, unit_part, valuation, vp)

SMALL_ODD = list(primerange(3, 50))
SMALL = [2] + SMALL_ODD
nonzero = st.integers(min_value=-10**30, max_value=10**30).filter(bool)


@pytest.mark.parametrize("x,p,want", [(66, 3, (1, 22)), (1, 7, (0, 1)), (40953630, 3, (1, 13651210))])
def test_valuation_examples(x, p, want):
    assert tuple(valuation(x, p)) == want


def test_valuation_of_zero_is_infinite():
    v = valuation(0, 5)
    assert v.is_infinite and v.valuation is INF
    assert INF > 10**100 and not INF < 3 and INF + 1 is INF and 2 * INF is INF
    with pytest.raises(ArithmeticError):
        INF - INF
    with pytest.raises(ValueError):
        unit_part(0, 3)


@given(nonzero, st.sampled_from(SMALL))
def test_valuation_reconstructs(x, p):
    v, u = valuation(x, p)
    assert p**v * u == x and u % p != 0
    assert vp(x, p) == v and unit_part(x, p) == u


@pytest.mark.parametrize("x,p,want", [(-1, 5, 1), (-2, 5, -1), (2, 7, 1)])
def test_legendre_examples(x, p, want):
    assert legendre(x, p) == want


def test_legendre_rejects_two():
    with pytest.raises(ValueError):
        legendre(3, 2)


@pytest.mark.parametrize("p", SMALL_ODD)
def test_legendre_matches_exhaustive_squares(p):
    squares = {t * t % p for t in range(1, p)}
    for x in range(p):
        want = 0 if x == 0 else (1 if x in squares else -1)
        assert legendre(x, p) == want


@pytest.mark.parametrize("x,n,p,want", [(1, 4, 13, True), (-1, 4, 5, False), (16, 4, 7, True)])
def test_power_residue_examples(x, n, p, want):
    assert nth_power_residue(x, n, p) is want


def test_power_residue_needs_unit():
    with pytest.raises(ValueError):
        nth_power_residue(10, 2, 5)


@pytest.mark.parametrize("p", SMALL)
@pytest.mark.parametrize("n", [2, 3, 4])
def test_power_residue_and_roots_match_exhaustive_search(p, n):
    for x in range(p):
        roots = sorted({t for t in range(p) if pow(t, n, p) == x % p})
        if x % p:
            assert nth_power_residue(x, n, p) is bool(roots)
        assert mod_roots(x, n, p) == roots
        assert mod_root(x, n, p) == (roots[0] if roots else None)


@pytest.mark.parametrize("x,n,p,want", [(4, 2, 7, 2), (-1, 2, 13, 5), (6, 3, 5, 1)])
def test_mod_root_examples(x, n, p, want):
    # (6, 3, 5): 6 = 1 mod 5 and cubing is a bijection of F_5, so 1 is the only cube root
    assert mod_root(x, n, p) == want


def test_mod_root_none_and_bad_degree():
    assert mod_root(2, 2, 5) is None
    with pytest.raises(ValueError):
        mod_root(2, 5, 11)


@pytest.mark.parametrize("t,c,p,k,want", [(5, 1, 13, 2, 70), (1, -1, 7, 1, 1), (2, -4, 5, 3, 2)])
def test_hensel_examples(t, c, p, k, want):
    assert hensel_lift_quadratic(t, c, p, k) == want


def test_hensel_errors():
    with pytest.raises(ValueError):
        hensel_lift_quadratic(2, 1, 13, 2)
    with pytest.raises(NonLiftableRoot):
        hensel_lift_quadratic(0, 0, 7, 2)


@given(st.sampled_from(SMALL_ODD[1:]), st.integers(1, 10**6), st.integers(1, 6))
def test_hensel_lift_property(p, c0, k):
    c = -(c0 * c0)  # T^2 + c has the root c0 mod p
    if c0 % p == 0:
        return
    t = hensel_lift_quadratic(c0 % p, c, p, k)
    assert t % p == c0 % p and 0 <= t < p**k
    assert (t * t + c) % p**k == 0
