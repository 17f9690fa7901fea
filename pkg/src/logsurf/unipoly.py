"""Univariate polynomials over any Field, with finite-field factorization.

Coefficients are stored as raw field representations in ascending order with
no trailing zeros; the zero polynomial is the empty tuple.  Factorization is
squarefree decomposition + distinct-degree + randomized equal-degree splitting
(odd characteristic); the factor set is independent of the seed.
"""

from __future__ import annotations

import random

from .fields import ExtensionField, Field, FieldElement, FieldError, PrimeField, QQ

DEFAULT_SEED = 0


class UniPoly:
    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs):
        cs = [field.coerce(c) if not _is_raw(field, c) else c for c in coeffs]
        while cs and field.is_zero(cs[-1]):
            cs.pop()
        self.field = field
        self.coeffs = tuple(cs)

    @classmethod
    def from_ints(cls, field, ints):
        return cls(field, [field.from_int(k) for k in ints])

    @classmethod
    def zero(cls, field):
        return cls(field, [])

    @classmethod
    def constant(cls, field, value):
        return cls(field, [field.coerce(value)])

    @classmethod
    def x(cls, field):
        return cls(field, [field.zero, field.one])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    def is_zero(self) -> bool:
        return not self.coeffs

    def lc(self):
        if not self.coeffs:
            return self.field.zero
        return self.coeffs[-1]

    def coefficient(self, i: int) -> FieldElement:
        rep = self.coeffs[i] if i < len(self.coeffs) else self.field.zero
        return FieldElement(self.field, rep)

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == self.field.one

    def monic(self) -> "UniPoly":
        if self.is_zero() or self.is_monic():
            return self
        inv = self.field.inv(self.coeffs[-1])
        return UniPoly(self.field, [self.field.mul(c, inv) for c in self.coeffs])

    def _check(self, other):
        if self.field != other.field:
            raise FieldError("field mismatch")

    def __add__(self, other):
        self._check(other)
        F = self.field
        n = max(len(self.coeffs), len(other.coeffs))
        out = []
        for i in range(n):
            a = self.coeffs[i] if i < len(self.coeffs) else F.zero
            b = other.coeffs[i] if i < len(other.coeffs) else F.zero
            out.append(F.add(a, b))
        return UniPoly(F, out)

    def __sub__(self, other):
        self._check(other)
        F = self.field
        n = max(len(self.coeffs), len(other.coeffs))
        out = []
        for i in range(n):
            a = self.coeffs[i] if i < len(self.coeffs) else F.zero
            b = other.coeffs[i] if i < len(other.coeffs) else F.zero
            out.append(F.sub(a, b))
        return UniPoly(F, out)

    def __neg__(self):
        return UniPoly(self.field, [self.field.neg(c) for c in self.coeffs])

    def __mul__(self, other):
        self._check(other)
        F = self.field
        if self.is_zero() or other.is_zero():
            return UniPoly.zero(F)
        out = [F.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if F.is_zero(a):
                continue
            for j, b in enumerate(other.coeffs):
                if not F.is_zero(b):
                    out[i + j] = F.add(out[i + j], F.mul(a, b))
        return UniPoly(F, out)

    def scale(self, c) -> "UniPoly":
        F = self.field
        c = F.coerce(c)
        return UniPoly(F, [F.mul(c, v) for v in self.coeffs])

    def shift(self, k: int) -> "UniPoly":
        """Multiply by x^k."""
        if self.is_zero():
            return self
        return UniPoly(self.field, (self.field.zero,) * k + self.coeffs)

    def divmod_poly(self, other):
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        F = self.field
        rem = list(self.coeffs)
        dd = other.degree
        inv_lead = F.inv(other.coeffs[-1])
        quot = [F.zero] * max(len(rem) - dd, 0)
        while len(rem) - 1 >= dd and rem:
            c = F.mul(rem[-1], inv_lead)
            k = len(rem) - 1 - dd
            quot[k] = c
            for i, oc in enumerate(other.coeffs):
                rem[k + i] = F.sub(rem[k + i], F.mul(c, oc))
            while rem and F.is_zero(rem[-1]):
                rem.pop()
        return UniPoly(F, quot), UniPoly(F, rem)

    def __floordiv__(self, other):
        return self.divmod_poly(other)[0]

    def __mod__(self, other):
        return self.divmod_poly(other)[1]

    def derivative(self) -> "UniPoly":
        F = self.field
        out = []
        for i in range(1, len(self.coeffs)):
            out.append(F.mul(F.from_int(i), self.coeffs[i]))
        return UniPoly(F, out)

    def evaluate(self, value):
        """Horner evaluation; accepts and returns raw representations."""
        F = self.field
        value = F.coerce(value) if isinstance(value, (int, FieldElement)) else value
        acc = F.zero
        for c in reversed(self.coeffs):
            acc = F.add(F.mul(acc, value), c)
        return acc

    def __call__(self, element: FieldElement) -> FieldElement:
        return FieldElement(self.field, self.evaluate(element.rep))

    def __eq__(self, other):
        return (isinstance(other, UniPoly) and other.field == self.field
                and other.coeffs == self.coeffs)

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def sort_key(self):
        return (self.degree, tuple(self.field.sort_key(c) for c in self.coeffs))

    def __repr__(self):
        if self.is_zero():
            return "0"
        F = self.field
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if F.is_zero(c):
                continue
            cs = F.fmt(c)
            if i == 0:
                parts.append(cs)
                continue
            xs = "x" if i == 1 else f"x^{i}"
            cs = "" if cs == "1" else f"({cs})*" if ("+" in cs or " " in cs) else f"{cs}*"
            parts.append(cs + xs)
        return " + ".join(parts)


def _is_raw(field, c):
    if isinstance(field, PrimeField):
        return isinstance(c, int)
    if isinstance(field, ExtensionField):
        return isinstance(c, tuple)
    return not isinstance(c, (FieldElement, int))


def lift_unipoly(f: UniPoly, F: Field) -> UniPoly:
    """Reinterpret f over F when its field is F itself or F's prime subfield."""
    if f.field == F:
        return f
    if isinstance(F, ExtensionField) and isinstance(f.field, PrimeField) and f.field.p == F.p:
        return UniPoly(F, [F.from_base(c) for c in f.coeffs])
    if isinstance(F, ExtensionField) and isinstance(f.field, ExtensionField) \
            and f.field.p == F.p and f.field.n == 1:
        return UniPoly(F, [F.from_base(c[0]) for c in f.coeffs])
    raise FieldError("field mismatch")


def poly_gcd(f: UniPoly, g: UniPoly) -> UniPoly:
    """Monic greatest common divisor; gcd(0, 0) = 0."""
    if f.field != g.field:
        raise FieldError("field mismatch")
    while not g.is_zero():
        f, g = g, f % g
    return f.monic()


def pow_mod(base: UniPoly, exponent: int, modulus: UniPoly) -> UniPoly:
    """base^exponent mod modulus by binary powering."""
    if exponent < 0:
        raise ValueError("negative exponent")
    result = UniPoly.constant(base.field, base.field.one)
    base = base % modulus
    while exponent:
        if exponent & 1:
            result = (result * base) % modulus
        base = (base * base) % modulus
        exponent >>= 1
    return result


def squarefree_check(f: UniPoly) -> bool:
    """True iff gcd(f, f') is constant.  In characteristic p a nonconstant f
    with f' = 0 is a p-th power, hence not squarefree."""
    if f.is_zero():
        raise ValueError("zero polynomial")
    if f.degree == 0:
        return True
    d = f.derivative()
    if d.is_zero():
        return False
    return poly_gcd(f, d).degree == 0


def _pth_root(f: UniPoly) -> UniPoly:
    """For f(x) = g(x^p) over F_q return g; coefficient p-th roots are c^(q/p)."""
    F = f.field
    p = F.char
    q = F.size
    out = []
    for i in range(0, len(f.coeffs), p):
        out.append(F.pow_(f.coeffs[i], q // p))
    return UniPoly(F, out)


def squarefree_decomposition(f: UniPoly) -> list[tuple[UniPoly, int]]:
    """Monic squarefree pairwise-coprime g_i with f = lc(f) * prod g_i^i."""
    F = f.field
    if F.size is None:
        raise FieldError("finite-field polynomials only")
    f = f.monic()
    out: list[tuple[UniPoly, int]] = []

    def recurse(g: UniPoly, outer: int):
        if g.degree < 1:
            return
        d = g.derivative()
        if d.is_zero():
            recurse(_pth_root(g), outer * F.char)
            return
        c = poly_gcd(g, d)
        w = g // c
        i = 1
        while w.degree > 0:
            y = poly_gcd(w, c)
            z = w // y
            if z.degree > 0:
                out.append((z.monic(), outer * i))
            w, c = y, c // y
            i += 1
        if c.degree > 0:
            recurse(_pth_root(c), outer * F.char)

    recurse(f, 1)
    out.sort(key=lambda pair: (pair[1], pair[0].sort_key()))
    return out


def _distinct_degree(f: UniPoly) -> list[tuple[UniPoly, int]]:
    """Split a squarefree monic f into (product of degree-d irreducibles, d)."""
    F = f.field
    q = F.size
    out = []
    h = UniPoly.x(F)
    x = UniPoly.x(F)
    d = 0
    while f.degree > 0 and 2 * (d + 1) <= f.degree:
        d += 1
        h = pow_mod(h, q, f)
        g = poly_gcd(h - x, f)
        if g.degree > 0:
            out.append((g, d))
            f = f // g
            h = h % f
    if f.degree > 0:
        out.append((f, f.degree))
    return out


def _equal_degree_split(f: UniPoly, d: int, rng: random.Random) -> list[UniPoly]:
    """Cantor-Zassenhaus: fully factor a squarefree product of degree-d
    irreducibles (odd field size)."""
    F = f.field
    q = F.size
    if f.degree == d:
        return [f.monic()]
    if q % 2 == 0:
        raise FieldError("even characteristic unsupported")
    exponent = (q ** d - 1) // 2
    one = UniPoly.constant(F, F.one)
    while True:
        r = UniPoly(F, [F.random(rng) for _ in range(f.degree)])
        if r.degree < 1:
            continue
        g = poly_gcd(r, f)
        if 0 < g.degree < f.degree:
            pass  # lucky split by a common factor
        else:
            w = pow_mod(r, exponent, f) - one
            g = poly_gcd(w, f)
            if not (0 < g.degree < f.degree):
                continue
        left = _equal_degree_split(g, d, rng)
        right = _equal_degree_split(f // g, d, rng)
        return left + right


def factor_univariate(f: UniPoly, seed: int | None = None) -> list[tuple[UniPoly, int]]:
    """Factor f over a finite field into (monic irreducible, multiplicity),
    sorted canonically; the product times lc(f) re-expands to f exactly."""
    if f.is_zero():
        raise ValueError("zero polynomial")
    F = f.field
    if F.size is None:
        raise FieldError("finite-field polynomials only")
    rng = random.Random(DEFAULT_SEED if seed is None else seed)
    factors: list[tuple[UniPoly, int]] = []
    for g, mult in squarefree_decomposition(f):
        for part, d in _distinct_degree(g):
            for irr in _equal_degree_split(part, d, rng):
                factors.append((irr, mult))
    factors.sort(key=lambda pair: (pair[0].sort_key(), pair[1]))
    return factors


def roots_in_field(f: UniPoly, F: Field, seed: int | None = None) -> list[FieldElement]:
    """All roots of f lying in the finite field F, canonically sorted.

    Computed as gcd(f, x^q - x) via modular Frobenius powering, then complete
    splitting of the (squarefree, totally split) gcd into linear factors.
    """
    if f.is_zero():
        raise ValueError("zero polynomial")
    if F.size is None:
        raise FieldError("finite-field roots only")
    f = lift_unipoly(f, F)
    if f.degree < 1:
        return []
    x = UniPoly.x(F)
    g = poly_gcd(pow_mod(x, F.size, f) - x, f)
    if g.degree < 1:
        return []
    rng = random.Random(DEFAULT_SEED if seed is None else seed)
    roots = []
    for lin in _equal_degree_split(g, 1, rng):
        roots.append(F.neg(lin.coeffs[0]))
    roots.sort(key=F.sort_key)
    return [FieldElement(F, r) for r in roots]


def is_irreducible(f: UniPoly) -> bool:
    """Rabin test over a finite field."""
    F = f.field
    if F.size is None:
        raise FieldError("finite-field polynomials only")
    n = f.degree
    if n < 1:
        return False
    if n == 1:
        return True
    f = f.monic()
    x = UniPoly.x(F)
    q = F.size
    divisors = set()
    m = n
    d = 2
    while d * d <= m:
        if m % d == 0:
            divisors.add(d)
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        divisors.add(m)
    for prime in divisors:
        if poly_gcd(pow_mod(x, q ** (n // prime), f) - x, f).degree != 0:
            return False
    return ((pow_mod(x, q ** n, f) - x) % f).is_zero()
