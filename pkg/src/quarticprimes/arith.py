"""Exact integer and modular arithmetic primitives.

Everything here works on Python ints.  Roots are always returned as
least nonnegative residues so that results are reproducible.
"""

from __future__ import annotations

from math import gcd
from typing import NamedTuple


class _Infinity:
    """The valuation of zero.  Compares greater than every integer."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INF"

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("quarticprimes.INF")

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is self

    def __gt__(self, other):
        return other is not self

    def __ge__(self, other):
        return True

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __sub__(self, other):
        if other is self:
            raise ArithmeticError("INF - INF is undefined")
        return self

    def __mul__(self, other):
        if other is self or (isinstance(other, int) and other > 0):
            return self
        raise ArithmeticError(f"INF * {other!r} is undefined")

    __rmul__ = __mul__


INF = _Infinity()


class PAdicValue(NamedTuple):
    """``x = p**valuation * unit`` with ``p`` not dividing ``unit``."""

    valuation: int | _Infinity
    unit: int

    @property
    def is_infinite(self) -> bool:
        return self.valuation is INF


def valuation(x: int, p: int) -> PAdicValue:
    """Split ``x`` into its ``p``-power and ``p``-free part.

    ``valuation(0, p)`` has ``valuation`` equal to :data:`INF` and unit 0.
    """
    if p < 2:
        raise ValueError(f"p must be a prime, got {p}")
    if x == 0:
        return PAdicValue(INF, 0)
    v = 0
    while x % p == 0:
        x //= p
        v += 1
    return PAdicValue(v, x)


def vp(x: int, p: int) -> int | _Infinity:
    return valuation(x, p).valuation


def unit_part(x: int, p: int) -> int:
    """The p-free part x_p of a nonzero integer."""
    if x == 0:
        raise ValueError("zero has no p-free part")
    return valuation(x, p).unit


def legendre(x: int, p: int) -> int:
    if p == 2:
        raise ValueError("Legendre symbol needs an odd prime")
    r = pow(x % p, (p - 1) // 2, p)
    return -1 if r == p - 1 else r


def nth_power_residue(x: int, n: int, p: int) -> bool:
    """True iff ``x`` is an ``n``-th power modulo ``p``."""
    if x % p == 0:
        raise ValueError(f"{x} is divisible by {p}")
    g = gcd(n, p - 1)
    return pow(x % p, (p - 1) // g, p) == 1


def _prime_factors_small(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _prime_root(x: int, r: int, p: int) -> int | None:
    """One r-th root of x mod p for a prime r (generalized Tonelli-Shanks)."""
    x %= p
    if x == 0:
        return 0
    if (p - 1) % r:
        # r-th powering is a bijection
        return pow(x, pow(r, -1, p - 1), p)
    if pow(x, (p - 1) // r, p) != 1:
        return None
    e, m = 0, p - 1
    while m % r == 0:
        m //= r
        e += 1
    c = 2
    while pow(c, (p - 1) // r, p) == 1:
        c += 1
    g = pow(c, m, p)  # generates the Sylow r-subgroup, order r**e
    d = pow(r, -1, m) if m > 1 else 0
    root = pow(x, d, p)
    err = pow(root, r, p) * pow(x, -1, p) % p
    target = pow(err, -1, p)
    # discrete log of target in <g>, one base-r digit at a time
    gamma = pow(g, r ** (e - 1), p)
    table = {pow(gamma, j, p): j for j in range(r)}
    k = 0
    for i in range(e):
        h = pow(target * pow(g, -k, p) % p, r ** (e - 1 - i), p)
        k += table[h] * r**i
    return root * pow(g, k // r, p) % p


def _roots_of_unity(n: int, p: int) -> list[int]:
    g = gcd(n, p - 1)
    if g == 1:
        return [1]
    qs = _prime_factors_small(g)
    c = 2
    while True:
        z = pow(c, (p - 1) // g, p)
        if all(pow(z, g // q, p) != 1 for q in qs):
            return [pow(z, j, p) for j in range(g)]
        c += 1


def mod_roots(x: int, n: int, p: int) -> list[int]:
    """All t in [0, p) with t**n == x (mod p), sorted."""
    x %= p
    if x == 0:
        return [0]
    if p == 2:
        return [1]
    if n == 1:
        return [x]
    if n == 4:
        out = set()
        for s in mod_roots(x, 2, p):
            out.update(mod_roots(s, 2, p))
        return sorted(out)
    if n not in (2, 3):
        raise ValueError(f"unsupported root degree {n}")
    r = _prime_root(x, n, p)
    if r is None:
        return []
    return sorted({r * z % p for z in _roots_of_unity(n, p)})


def mod_root(x: int, n: int, p: int) -> int | None:
    """Smallest t in [0, p) with t**n == x (mod p), or None."""
    if n not in (2, 3, 4):
        raise ValueError("n must be 2, 3 or 4")
    roots = mod_roots(x, n, p)
    return roots[0] if roots else None


class NonLiftableRoot(ArithmeticError):
    pass


def hensel_lift_quadratic(t: int, c: int, p: int, k: int) -> int:
    """Lift a root of ``T**2 + c`` mod p to one mod ``p**k``.

    Returns the least nonnegative ``t'`` with ``t' == t (mod p)`` and
    ``v_p(t'**2 + c) >= k``.
    """
    if (t * t + c) % p:
        raise ValueError(f"{t} is not a root of T^2 + {c} mod {p}")
    if (2 * t) % p == 0:
        raise NonLiftableRoot(f"{t} is a multiple root mod {p}")
    mod = p
    t %= p
    while mod < p**k:
        mod = min(mod * mod, p**k)
        t = (t - (t * t + c) * pow(2 * t, -1, mod)) % mod
    return t % p**k


def crt_pair(r1: int, m1: int, r2: int, m2: int) -> int:
    """Solve x = r1 (mod m1), x = r2 (mod m2) for coprime moduli."""
    return (r1 + m1 * ((r2 - r1) * pow(m1, -1, m2) % m2)) % (m1 * m2)


def is_square(n: int) -> bool:
    from math import isqrt

    return n >= 0 and isqrt(n) ** 2 == n
