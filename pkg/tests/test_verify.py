from __future__ import annotations

import dataclasses
import json
import random

import pytest
from sympy import primerange

from quarticprimes.classify import factor, factor_all_ramified
from quarticprimes.polyz import AlgebraicElement, QuarticField, discriminant, is_integral, norm_valuation
from quarticprimes.verify import (VerificationReport, check_factorization, dedekind_criterion,
                                  dedekind_generator_problems, mod_p_shapes, residual_root_check)

from synth import uniform


def test_dedekind_criterion_examples():
    assert dedekind_criterion(1, 1, 7)  # 7 does not divide the discriminant 229
    assert not dedekind_criterion(48, 188, 2)
    assert dedekind_criterion(80, 30, 3)
    assert mod_p_shapes(80, 30, 3) == [(1, 1), (3, 1)]


# Ramified primes dividing the index [Z_K : Z[alpha]], obtained with PARI (nfdisc) and frozen.
INDEX_DIVISORS = {
    (48, 188): ({2, 5}, {2, 5}),
    (80, 30): (set(), {2, 3, 5}),
    (22, 66): ({3}, {2, 3, 11, 13}),
    (28, 189): ({3, 19}, {2, 3, 7, 19}),
    (144, 36): ({2, 3}, {2, 3}),
    (-8, 12): ({2}, {2, 3}),
}


@pytest.mark.parametrize("a,b", sorted(INDEX_DIVISORS))
def test_dedekind_criterion_matches_index_oracle(a, b):
    index_primes, disc_primes = INDEX_DIVISORS[(a, b)]
    assert {p for p in primerange(2, 20) if discriminant(a, b) % p == 0} == disc_primes
    for p in disc_primes:
        assert dedekind_criterion(a, b, p) == (p not in index_primes), p


def test_unramified_primes_are_dedekind():
    rng = random.Random(3)
    for _ in range(200):
        a, b = uniform(rng, 500)
        for p in (2, 3, 5, 7, 11):
            if discriminant(a, b) % p:
                assert dedekind_criterion(a, b, p)


def test_full_sweep_22_66_passes():
    for p, res in factor_all_ramified(22, 66).items():
        rep = check_factorization(res)
        assert rep.overall, rep.to_text()
    assert set(factor_all_ramified(22, 66)) == {2, 3, 11, 13}


def test_parity_check_runs_only_when_tame():
    names = [c.name for c in check_factorization(factor(144, 36, 3)).checks]
    assert "tame_parity" not in names  # p = 3 with a cube of a prime possible: wild
    rep = check_factorization(factor(80, 30, 5))
    (par,) = [c for c in rep.checks if c.name == "tame_parity"]
    assert par.passed and "v_p(D) = 3" in par.detail
    res = factor(80, 30, 5)
    F = res.factors[0]
    bad = dataclasses.replace(res, factors=(dataclasses.replace(F, e=2, f=2),))
    assert "tame_parity" in [c.name for c in check_factorization(bad).failed()]


def test_corrupted_e_fails_sum():
    res = factor(22, 66, 3)
    F = res.factors[1]
    bad = dataclasses.replace(res, factors=(res.factors[0], dataclasses.replace(F, e=F.e + 1 - 2 * (F.e == 4))))
    rep = check_factorization(bad)
    assert not rep.overall and "sum_ef" in [c.name for c in rep.failed()]


def test_report_serialization():
    rep = check_factorization(factor(48, 188, 2))
    d = rep.to_dict()
    assert d["input"] == {"a": 48, "b": 188, "p": 2} and d["overall"] is True
    assert json.loads(rep.to_json()) == d
    assert rep.to_text().startswith("verify a=48 b=188 p=2 overall=PASS")
    empty = VerificationReport(1, 1, 2)
    empty.add("x", False, "boom")
    assert not empty.overall and empty.failed()[0].detail == "boom"


def test_dedekind_generator_problems_detects_wrong_prime():
    res = factor(80, 30, 7)
    assert dedekind_generator_problems(res) == []
    F = res.factors[0]
    moved = dataclasses.replace(F, generator=AlgebraicElement(7, 0, (2, 1)))
    bad = dataclasses.replace(res, factors=(moved,) + res.factors[1:])
    assert dedekind_generator_problems(bad)
    assert not check_factorization(bad).overall


def test_residual_root_check_case_vb_2():
    # v_p(b) = 2, v_p(a) >= 2: alpha^2/p reduces to a root of Y^2 + b_p
    K = QuarticField(125, 25 * 3)
    w = AlgebraicElement(5, 0, (0, 0, 1), 1)
    assert residual_root_check(w, K, (3, 0, 1), 5)
    assert not residual_root_check(w, K, (1, 0, 1), 5)


def test_residual_root_check_degree_one_side():
    K = QuarticField(25, 5)  # one side of slope 1/4: alpha^4 / 5 = -1 - 5 alpha, residual Y + 1
    from quarticprimes.polyz import ShiftedQuartic

    w = (ShiftedQuartic(25, 5, 0).theta ** 4 / 5).to_algebraic(5)
    assert norm_valuation(w, K) == 0
    assert residual_root_check(w, K, (1, 1), 5)
    assert not residual_root_check(w, K, (2, 1), 5)


def test_residual_root_check_a1_instance():
    from quarticprimes.polyz import ShiftedQuartic

    K = QuarticField(27, 54)
    w = (ShiftedQuartic(27, 54, 0).theta ** 4 / 27).to_algebraic(3)
    assert is_integral(w, K) and norm_valuation(w, K) == 0


def _mutate(rng, res):
    i = rng.randrange(len(res.factors))
    F = res.factors[i]
    kind = rng.choice("efg")
    if kind in "ef":
        # another admissible value: 1 <= e, f and e f <= 4
        other = F.f if kind == "e" else F.e
        choices = [v for v in range(1, 4 // other + 1) if v != (F.e if kind == "e" else F.f)]
        if not choices:
            kind, choices = ("f", [v for v in range(1, 4 // F.e + 1) if v != F.f]) if kind == "e" else \
                ("e", [v for v in range(1, 4 // F.f + 1) if v != F.e])
        G = dataclasses.replace(F, **{kind: rng.choice(choices)})
    else:
        w = F.generator
        num = list(w.numerator) + [0] * (4 - len(w.numerator))
        num[rng.randrange(4)] += rng.choice([-1, 1])
        G = dataclasses.replace(F, generator=AlgebraicElement(res.p, w.shift, tuple(num), w.denom_exp),
                                generator_is_whole_ideal=False)
    fs = list(res.factors)
    fs[i] = G
    return kind, F, G, dataclasses.replace(res, factors=tuple(fs))


def test_mutation_robustness():
    rng = random.Random(11)
    total = caught = blind = 0
    for _ in range(1000):
        a, b = uniform(rng)
        D = discriminant(a, b)
        p = rng.choice([q for q in primerange(2, 100) if D % q == 0] or [2])
        res = factor(a, b, p)
        kind, F, G, bad = _mutate(rng, res)
        total += 1
        if not check_factorization(bad).overall:
            caught += 1
        elif kind == "g" and is_integral(G.generator, res.field) and \
                norm_valuation(G.generator, res.field) == norm_valuation(F.generator, res.field):
            blind += 1  # same integrality and norm valuation: invisible to these checks by design
    assert caught / (total - blind) >= 0.99, (caught, blind, total)
