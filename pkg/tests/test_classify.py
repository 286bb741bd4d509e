from __future__ import annotations

import random

import pytest
from hypothesis import given, settings, strategies as st

from quarticprimes.classify import (KNOWN_OVERLAPS, TABLES, Case, DedekindNotApplicable, NoRowMatched,
                                    NotNormalizedError, UnfactoredDiscriminant, all_rows, audit_guards, classify,
                                    dedekind_factorization, factor, factor_all_ramified, factor_discriminant,
                                    matching_rows, resolve)
from quarticprimes.polyz import AlgebraicElement, QuarticField, discriminant, is_integral
from quarticprimes.verify import check_factorization, dedekind_criterion

from oracles import alpha_gen, gens, matches, same_ideal
from synth import targeted, uniform

EX1 = (2**10 * 5, 2**9 * 3 * 5)
EX6 = (3**6 * 5**5 * 139, 2**2 * 3**5 * 5**5 * 139)


# -- worked examples ------------------------------------------------------------


def test_worked_example_80_30():
    r2 = factor(*EX1, 2)
    assert (r2.field.a, r2.field.b) == (80, 30) and r2.normalization.log == ((2, 2),)
    assert r2.table_trace.row == "A7" and gens(r2) == [(4, 1, "α")]
    r3 = factor(*EX1, 3)
    assert matches(r3, [(1, 1, alpha_gen(3, (0, 1))), (3, 1, alpha_gen(3, (-1, 1)))])
    r5 = factor(*EX1, 5)
    assert gens(r5) == [(4, 1, "α")]
    assert set(factor_all_ramified(*EX1)) == {2, 3, 5, 53}


def test_worked_example_48_188():
    r = factor(48, 188, 2)
    assert r.table_trace.row == "A8.9"
    assert gens(r) == [(2, 1, "(α^2+2)/4"), (2, 1, "(α^2+6)/4")]


def test_worked_example_144_36():
    assert discriminant(144, 36) == -(2**14) * 3**6 * 971
    r2 = factor(144, 36, 2)
    assert r2.table_trace.row == "A8.4" and gens(r2) == [(4, 1, "(α^2+2α+2)/4")]
    r3 = factor(144, 36, 3)
    assert r3.table_trace.row == "A4" and gens(r3) == [(2, 2, "α^3/3")]
    assert set(factor_all_ramified(144, 36)) == {2, 3, 971}


def test_worked_example_28_189():
    r = factor(28, 189, 2)
    assert r.table_trace.row == "C9" and gens(r) == [(4, 1, "α-1")]


def test_worked_example_22_66():
    out = factor_all_ramified(22, 66)
    assert set(out) == {2, 3, 11, 13}
    assert gens(out[2]) == [(4, 1, "α")] and gens(out[11]) == [(4, 1, "α")]
    r3 = out[3]
    assert r3.table_trace.row == "B10" and r3.shapes == [(1, 1), (3, 1)]
    # theta = alpha + a; the e = 3 generator is (theta^3 - 4a theta^2)/3
    assert gens(r3, alpha=False) == [(1, 1, "θ-88"), (3, 1, "(θ^3-88θ^2)/3")]
    assert r3.factors[0].generator.shift == -22
    # 13 divides the discriminant exactly once, so 13 ramifies (odd valuation, tame)
    r13 = out[13]
    assert r13.shapes == [(1, 2), (2, 1)]
    assert matches(r13, [(2, 1, alpha_gen(13, (4, 1))), (1, 2, alpha_gen(13, (9, 5, 1)))])
    assert matches(dedekind_factorization(22, 66, 13), [(F.e, F.f, F.generator) for F in r13.factors])


def test_worked_example_22_66_b10_first_prime():
    # alpha - 110 = alpha - 5a lies in the e = 3 prime (alpha = -1 there), not in P1
    K = QuarticField(22, 66)
    r3 = factor(22, 66, 3)
    P1 = r3.factors[0].generator
    assert not same_ideal(P1, alpha_gen(3, (-110, 1)), K, 3)
    assert same_ideal(P1, alpha_gen(3, (0, 1)), K, 3)


def test_worked_example_139():
    nz = factor(*EX6, 3).normalization
    assert nz.scale == 15 and (nz.a, nz.b) == (3**3 * 5**2 * 139, 2**2 * 3 * 5 * 139)
    r2 = factor(*EX6, 2)
    assert matches(r2, [(1, 1, alpha_gen(2, (1, 1))), (1, 2, alpha_gen(2, (1, 1, 1))), (1, 1, alpha_gen(2, (0, 1)))])
    for p in (3, 5, 139):
        assert gens(factor(*EX6, p)) == [(4, 1, "α")]
    # 256 B^3 < 27 A^4 here, so the discriminant is negative
    assert discriminant(nz.a, nz.b) == -2092367789117959822875
    assert 2092367789117959822875 == 202317851 * 7 * 3**3 * 5**3 * 139**3 * 163


# -- entry points and errors ------------------------------------------------------


def test_classify_requires_normalized_input():
    with pytest.raises(NotNormalizedError):
        classify(*EX1, 2)


def test_classify_rejects_bad_prime():
    with pytest.raises(ValueError):
        classify(1, 3, 1)


def test_no_row_matched_carries_conditions():
    c = Case(22, 66, 3)
    exc = NoRowMatched("B", c.conditions())
    assert "B" in str(exc) and exc.conditions["p"] == 3


def test_dedekind_factorization():
    r = dedekind_factorization(80, 30, 7)
    assert r.shapes == [(1, 1), (1, 3)]
    assert r.table_trace.row == "dedekind"
    with pytest.raises(DedekindNotApplicable):
        dedekind_factorization(48, 188, 2)


def test_inert_rows():
    # D1: p = 2 with a, b odd; D2: p = 3, b = 2 mod 3
    for a, b, p, row in [(1, 1, 2, "D1"), (1, 2, 3, "D2")]:
        res = factor(a, b, p)
        assert res.table_trace.row == row and res.shapes == [(1, 4)]
        (F,) = res.factors
        assert F.generator_is_whole_ideal and str(F.generator) == str(p)
        assert res.render() == f"({p}) [f=4]"


def test_factor_all_ramified_small():
    out = factor_all_ramified(0, 2)
    assert list(out) == [2] and out[2].table_trace.row == "A7"


def test_factor_discriminant_bound():
    assert factor_discriminant(-(2**14) * 3**6 * 971) == {2: 14, 3: 6, 971: 1}
    big = (2**89 - 1) * (2**107 - 1)
    with pytest.raises(UnfactoredDiscriminant):
        factor_discriminant(big, bound=10**20)


# -- table metadata ---------------------------------------------------------------


def test_row_ids_unique_and_redirects_resolve():
    ids = [r.id for r in all_rows()]
    assert len(ids) == len(set(ids))
    for r in all_rows():
        if r.redirect:
            assert r.redirect in TABLES and r.build is None
        else:
            assert r.build is not None


def test_quarantined_rows_carry_a_resolution():
    q = [r for r in all_rows() if r.quarantined]
    assert {r.id for r in q} >= {"D4", "B11.4 row 5", "D8 row 4", "D8 row 5", "D8 row 7", "D8 row 8"}
    for r in q:
        assert r.erratum, r.id


def test_known_overlaps_are_documented():
    for rows, why in KNOWN_OVERLAPS.items():
        assert len(rows) >= 2 and why


@settings(max_examples=200)
@given(st.integers(0, 2**32), st.sampled_from([2, 3, 5, 7, 11, 13]))
def test_trace_conditions_re_evaluate(seed, p):
    a, b = uniform(random.Random(seed))
    res = factor(a, b, p)
    c = Case(res.field.a, res.field.b, p)
    row, path = resolve(c)
    assert row.id == res.table_trace.row and path == res.table_trace.path
    table = path[-2] if len(path) > 1 else None
    owner = next(t for t, rows in TABLES.items() if any(r.id == row.id for r in rows))
    assert row in matching_rows(owner, c)
    assert table is None or any(r.id == table for r in all_rows())


def test_targeted_rows_are_reached():
    rng = random.Random(5)
    for rid in ("A8.6", "B11.4 row 7", "C14 row 4", "D8 row 5"):
        got = targeted(rng, rid, 2)
        assert len(got) == 2
        for a, b, p in got:
            assert classify(a, b, p).table_trace.row == rid


def test_guard_audit_small_enumeration():
    rng = random.Random(0)
    inputs = []
    for p in (2, 3, 5, 7):
        for _ in range(300):
            a, b = uniform(rng, 2000)
            from quarticprimes.polyz import normalize

            nz = normalize(a, b)
            inputs.append((nz.a, nz.b, p))
    g = audit_guards(inputs)
    assert g.inputs == len(inputs) and not g.unmatched and not g.unlisted_overlaps()


@settings(max_examples=150)
@given(st.integers(0, 2**32), st.sampled_from([2, 3, 5, 7, 11, 13, 17, 19]))
def test_classify_is_deterministic_and_consistent(seed, p):
    a, b = uniform(random.Random(seed))
    r1, r2 = factor(a, b, p), factor(a, b, p)
    assert gens(r1, alpha=False) == gens(r2, alpha=False)
    assert r1.degree == 4
    rep = check_factorization(r1)
    assert rep.overall, rep.to_text()
    if dedekind_criterion(r1.field.a, r1.field.b, p):
        dk = dedekind_factorization(r1.field.a, r1.field.b, p)
        assert sorted(dk.shapes) == sorted(r1.shapes)
