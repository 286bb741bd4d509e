"""Polynomials over F_p and over residue fields F_p[X]/(phi).

A :class:`Poly` carries its coefficient field and an immutable tuple of
coefficients in ascending degree, with no trailing zeros.  Two fields are
provided, :class:`PrimeField` (elements are ints in ``[0, p)``) and
:class:`ResidueField` (elements are :class:`Poly` over the prime field of
degree below ``deg phi``).  Factorization is square-free decomposition,
distinct-degree splitting and a deterministic equal-degree splitting, so
repeated calls give identical output.
"""

from __future__ import annotations

from itertools import count


class PrimeField:
    def __init__(self, p: int):
        self.p = p
        self.q = p
        self.degree = 1
        self.zero = 0
        self.one = 1

    def __repr__(self):
        return f"F_{self.p}"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("F", self.p))

    def __call__(self, x) -> int:
        return x % self.p

    def add(self, x, y):
        return (x + y) % self.p

    def sub(self, x, y):
        return (x - y) % self.p

    def neg(self, x):
        return -x % self.p

    def mul(self, x, y):
        return x * y % self.p

    def inv(self, x):
        if x % self.p == 0:
            raise ZeroDivisionError(f"0 has no inverse in F_{self.p}")
        return pow(x, -1, self.p)

    def is_zero(self, x) -> bool:
        return x == 0

    def from_int(self, n: int):
        return n % self.p

    def element(self, index: int):
        """The index-th element in a fixed enumeration of the field."""
        return index % self.p

    def key(self, x):
        return (x,)

    def pth_root(self, x):
        return x

    def poly(self, coeffs) -> Poly:
        return Poly(self, [c % self.p for c in coeffs])

    def X(self) -> Poly:
        return Poly(self, [0, 1])


class ResidueField:
    """F_p[X]/(phi) for a monic irreducible ``phi`` over a prime field."""

    def __init__(self, phi: Poly):
        if not isinstance(phi.field, PrimeField):
            raise TypeError("phi must be a polynomial over a prime field")
        if phi.degree < 1 or phi.lc != 1:
            raise ValueError(f"phi must be monic of positive degree: {phi}")
        self.phi = phi
        self.base = phi.field
        self.p = phi.field.p
        self.degree = phi.degree
        self.q = self.p**self.degree
        self.zero = Poly(self.base, [])
        self.one = Poly(self.base, [1])

    def __repr__(self):
        return f"F_{self.p}[X]/({self.phi})"

    def __eq__(self, other):
        return isinstance(other, ResidueField) and other.phi == self.phi

    def __hash__(self):
        return hash(("R", self.phi))

    def __call__(self, x) -> Poly:
        if isinstance(x, int):
            return Poly(self.base, [x % self.p])
        if isinstance(x, Poly):
            return x % self.phi
        return self.base.poly(x) % self.phi

    def add(self, x, y):
        return x + y

    def sub(self, x, y):
        return x - y

    def neg(self, x):
        return -x

    def mul(self, x, y):
        return (x * y) % self.phi

    def inv(self, x):
        if x.is_zero():
            raise ZeroDivisionError("0 has no inverse in the residue field")
        g, s, _ = xgcd(x, self.phi)
        return s * self.base.inv(g.coeffs[0])

    def is_zero(self, x) -> bool:
        return x.is_zero()

    def from_int(self, n: int):
        return Poly(self.base, [n % self.p])

    def element(self, index: int):
        digits = []
        index %= self.q
        for _ in range(self.degree):
            index, r = divmod(index, self.p)
            digits.append(r)
        return Poly(self.base, digits)

    def key(self, x):
        c = x.coeffs
        return tuple(c) + (0,) * (self.degree - len(c))

    def pth_root(self, x):
        return pow_mod(x, self.p ** (self.degree - 1), self.phi)

    def poly(self, coeffs) -> Poly:
        return Poly(self, [self(c) for c in coeffs])

    def X(self) -> Poly:
        return Poly(self, [self.zero, self.one])


class Poly:
    """Univariate polynomial over a finite field, coefficients ascending."""

    def __init__(self, field, coeffs):
        cs = list(coeffs)
        while cs and field.is_zero(cs[-1]):
            cs.pop()
        self.field = field
        self.coeffs = tuple(cs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else self.field.zero

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return len(self.coeffs) == 1 and self.coeffs[0] == self.field.one

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.field == other.field and self.coeffs == other.coeffs
        if isinstance(other, int):
            return self == Poly(self.field, [self.field.from_int(other)])
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __repr__(self):
        return f"Poly({self})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if self.field.is_zero(c):
                continue
            cs = str(c)
            if isinstance(c, Poly) and len(c.coeffs) > 1:
                cs = f"({cs})"
            mono = "" if i == 0 else ("X" if i == 1 else f"X^{i}")
            if not mono:
                terms.append(cs)
            elif c == self.field.one:
                terms.append(mono)
            else:
                terms.append(f"{cs}*{mono}")
        return " + ".join(terms)

    def sort_key(self):
        return (self.degree, tuple(self.field.key(c) for c in reversed(self.coeffs)))

    def _lift(self, other) -> Poly:
        if isinstance(other, Poly) and other.field == self.field:
            return other
        if isinstance(other, int):
            return Poly(self.field, [self.field.from_int(other)])
        # a bare field element
        return Poly(self.field, [other])

    def __add__(self, other):
        other = self._lift(other)
        F = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = F.add(out[i], c)
        return Poly(F, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.field, [self.field.neg(c) for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        F = self.field
        if not (isinstance(other, Poly) and other.field == F):
            c = F.from_int(other) if isinstance(other, int) else other
            return Poly(F, [F.mul(x, c) for x in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly(F, [])
        out = [F.zero] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if F.is_zero(x):
                continue
            for j, y in enumerate(b):
                out[i + j] = F.add(out[i + j], F.mul(x, y))
        return Poly(F, out)

    __rmul__ = __mul__

    def __divmod__(self, other):
        other = self._lift(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        F = self.field
        r = list(self.coeffs)
        d = other.degree
        inv = F.inv(other.lc)
        if len(r) <= d:
            return Poly(F, []), self
        q = [F.zero] * (len(r) - d)
        for k in range(len(r) - 1, d - 1, -1):
            c = r[k]
            if F.is_zero(c):
                continue
            c = F.mul(c, inv)
            q[k - d] = c
            for j, y in enumerate(other.coeffs):
                r[k - d + j] = F.sub(r[k - d + j], F.mul(c, y))
        return Poly(F, q), Poly(F, r[:d])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __pow__(self, n: int):
        out = Poly(self.field, [self.field.one])
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __call__(self, x):
        F = self.field
        acc = F.zero
        for c in reversed(self.coeffs):
            acc = F.add(F.mul(acc, x), c)
        return acc

    def monic(self) -> Poly:
        if self.is_zero():
            return self
        return self * self.field.inv(self.lc)

    def derivative(self) -> Poly:
        F = self.field
        return Poly(F, [F.mul(F.from_int(i), c) for i, c in enumerate(self.coeffs) if i])


def gcd(f: Poly, g: Poly) -> Poly:
    while not g.is_zero():
        f, g = g, f % g
    return f.monic()


def xgcd(f: Poly, g: Poly):
    """Return (d, s, t) with d = s*f + t*g, d a gcd (not normalized)."""
    F = f.field
    r0, r1 = f, g
    s0, s1 = Poly(F, [F.one]), Poly(F, [])
    t0, t1 = Poly(F, []), Poly(F, [F.one])
    while not r1.is_zero():
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    return r0, s0, t0


def pow_mod(f: Poly, n: int, m: Poly) -> Poly:
    out = Poly(f.field, [f.field.one]) % m
    base = f % m
    while n:
        if n & 1:
            out = (out * base) % m
        base = (base * base) % m
        n >>= 1
    return out


def _pth_root_poly(f: Poly) -> Poly:
    F, p = f.field, f.field.p
    return Poly(F, [F.pth_root(c) for c in f.coeffs[::p]])


def squarefree_decomposition(f: Poly) -> list[tuple[Poly, int]]:
    """Pairs (g, i) with f = lc * prod g**i and each g square-free, coprime."""
    f = f.monic()
    p = f.field.p
    out = []
    c = gcd(f, f.derivative())
    w = f // c
    i = 1
    while not w.is_one():
        y = gcd(w, c)
        fac = w // y
        if not fac.is_one():
            out.append((fac, i))
        w, c = y, c // y
        i += 1
    if not c.is_one():
        for g, j in squarefree_decomposition(_pth_root_poly(c)):
            out.append((g, j * p))
    return out


def distinct_degree(f: Poly) -> list[tuple[Poly, int]]:
    """Split a monic square-free f into products of equal-degree irreducibles."""
    F = f.field
    X = F.X()
    out = []
    h = X % f
    i = 1
    while f.degree >= 2 * i:
        h = pow_mod(h, F.q, f)
        d = gcd(f, h - X)
        if not d.is_one():
            out.append((d, i))
            f = f // d
            h = h % f
        i += 1
    if f.degree > 0:
        out.append((f, f.degree))
    return out


def _trial_polys(field, max_degree: int):
    """Deterministic stream of candidate splitting polynomials.

    First X + c for the first elements c of the field, then every
    polynomial of degree < max_degree in index order.
    """
    X = field.X()
    for j in range(min(field.q, 64)):
        yield X + Poly(field, [field.element(j)])
    for n in count(field.q):
        digits, k = [], n
        while k:
            k, r = divmod(k, field.q)
            digits.append(field.element(r))
        if len(digits) > max_degree:
            return
        yield Poly(field, digits)


def _split_once(f: Poly, d: int, T: Poly) -> Poly:
    F = f.field
    if F.p == 2:
        # trace map down to F_2
        k = F.degree * d
        acc = T % f
        t = acc
        for _ in range(k - 1):
            t = (t * t) % f
            acc = acc + t
        return gcd(f, acc)
    e = (F.q**d - 1) // 2
    return gcd(f, pow_mod(T, e, f) - 1)


def equal_degree(f: Poly, d: int) -> list[Poly]:
    """Irreducible factors of a monic f that is a product of degree-d irreducibles."""
    if f.degree == d:
        return [f]
    for T in _trial_polys(f.field, f.degree):
        g = _split_once(f, d, T)
        if 0 < g.degree < f.degree:
            return equal_degree(g, d) + equal_degree(f // g, d)
    raise ArithmeticError(f"equal-degree splitting failed for {f}")


def factor(f: Poly) -> list[tuple[Poly, int]]:
    """Monic irreducible factors with multiplicities, sorted by (degree, coefficients)."""
    if f.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    out = []
    for g, mult in squarefree_decomposition(f):
        for h, d in distinct_degree(g):
            for irr in equal_degree(h, d):
                out.append((irr, mult))
    out.sort(key=lambda pair: (pair[0].sort_key(), pair[1]))
    return out


def factor_quartic_modp(P: Poly) -> list[tuple[Poly, int]]:
    if not isinstance(P.field, PrimeField):
        raise TypeError("expected a polynomial over a prime field")
    if P.degree > 4:
        raise ValueError("degree must be at most 4")
    if P.is_zero() or P.lc != 1:
        raise ValueError(f"polynomial must be monic: {P}")
    return factor(P)


def factor_residual(R: Poly) -> list[tuple[Poly, int]]:
    """Factor a polynomial over a residue field; factors are monic."""
    if R.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    if R.degree > 4:
        raise ValueError("residual polynomials have degree at most 4")
    if R.degree == 0:
        return []
    return factor(R)


def is_irreducible(f: Poly) -> bool:
    if f.degree < 1:
        return False
    fac = factor(f)
    return len(fac) == 1 and fac[0][1] == 1


def is_squarefree(f: Poly) -> bool:
    if f.degree < 1:
        return True
    return all(m == 1 for _, m in factor(f))


def residue_field(phi: Poly) -> ResidueField:
    """Arithmetic context for F_phi.  ``phi`` must be monic irreducible."""
    if not is_irreducible(phi):
        raise ValueError(f"{phi} is not irreducible over F_{phi.field.p}")
    return ResidueField(phi)
