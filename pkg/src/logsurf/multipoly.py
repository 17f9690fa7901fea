"""Sparse multivariate polynomials with lexicographic term order.

Terms map exponent tuples to raw field representations; tuple comparison is
exactly lex order with the first variable most significant, so ``max(terms)``
is the leading monomial.
"""

from __future__ import annotations

from .fields import ExtensionField, Field, FieldError, PrimeField
from .unipoly import UniPoly

LEX = "lex"  # the one implemented monomial order


def mono_mul(a: tuple, b: tuple) -> tuple:
    return tuple(x + y for x, y in zip(a, b))


def mono_divide(a: tuple, b: tuple):
    """a / b, or None when b does not divide a."""
    out = []
    for x, y in zip(a, b):
        if x < y:
            return None
        out.append(x - y)
    return tuple(out)


def mono_lcm(a: tuple, b: tuple) -> tuple:
    return tuple(max(x, y) for x, y in zip(a, b))


class MultiPoly:
    __slots__ = ("field", "nvars", "terms")

    def __init__(self, field: Field, nvars: int, terms: dict):
        self.field = field
        self.nvars = nvars
        self.terms = {m: c for m, c in terms.items() if not field.is_zero(c)}

    @classmethod
    def zero(cls, field, nvars):
        return cls(field, nvars, {})

    @classmethod
    def constant(cls, field, nvars, value):
        return cls(field, nvars, {(0,) * nvars: field.coerce(value)})

    @classmethod
    def variable(cls, field, nvars, index):
        exp = tuple(1 if i == index else 0 for i in range(nvars))
        return cls(field, nvars, {exp: field.one})

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(all(e == 0 for e in m) for m in self.terms)

    def constant_value(self):
        return self.terms.get((0,) * self.nvars, self.field.zero)

    def lm(self):
        return max(self.terms) if self.terms else None

    def lc(self):
        return self.terms[max(self.terms)]

    def total_degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def degree_in(self, i: int) -> int:
        return max((m[i] for m in self.terms), default=-1)

    def _check(self, other):
        if self.field != other.field or self.nvars != other.nvars:
            raise FieldError("polynomial ring mismatch")

    def __add__(self, other):
        self._check(other)
        F = self.field
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = F.add(out.get(m, F.zero), c)
            if F.is_zero(s):
                out.pop(m, None)
            else:
                out[m] = s
        return MultiPoly(F, self.nvars, out)

    def __sub__(self, other):
        self._check(other)
        F = self.field
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = F.sub(out.get(m, F.zero), c)
            if F.is_zero(s):
                out.pop(m, None)
            else:
                out[m] = s
        return MultiPoly(F, self.nvars, out)

    def __neg__(self):
        F = self.field
        return MultiPoly(F, self.nvars, {m: F.neg(c) for m, c in self.terms.items()})

    def __mul__(self, other):
        self._check(other)
        F = self.field
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                s = F.add(out.get(m, F.zero), F.mul(c1, c2))
                if F.is_zero(s):
                    out.pop(m, None)
                else:
                    out[m] = s
        return MultiPoly(F, self.nvars, out)

    def scale(self, c) -> "MultiPoly":
        F = self.field
        c = F.coerce(c)
        return MultiPoly(F, self.nvars, {m: F.mul(c, v) for m, v in self.terms.items()})

    def monic(self) -> "MultiPoly":
        if self.is_zero():
            return self
        return self.scale(self.field.inv(self.lc()))

    def evaluate(self, values) -> object:
        """Evaluate at a full point of raw representations."""
        F = self.field
        maxdeg = [self.degree_in(i) for i in range(self.nvars)]
        powers = []
        for i, v in enumerate(values):
            row = [F.one]
            for _ in range(max(maxdeg[i], 0)):
                row.append(F.mul(row[-1], v))
            powers.append(row)
        acc = F.zero
        for m, c in self.terms.items():
            term = c
            for i, e in enumerate(m):
                if e:
                    term = F.mul(term, powers[i][e])
            acc = F.add(acc, term)
        return acc

    def substitute_last(self, value) -> "MultiPoly":
        """Substitute a raw value for the last variable; drops one variable."""
        F = self.field
        top = self.degree_in(self.nvars - 1)
        powers = [F.one]
        for _ in range(max(top, 0)):
            powers.append(F.mul(powers[-1], value))
        out = {}
        for m, c in self.terms.items():
            e = m[-1]
            key = m[:-1]
            v = F.mul(c, powers[e]) if e else c
            s = F.add(out.get(key, F.zero), v)
            if F.is_zero(s):
                out.pop(key, None)
            else:
                out[key] = s
        return MultiPoly(F, self.nvars - 1, out)

    def substitute(self, polys: list["MultiPoly"]) -> "MultiPoly":
        """Substitute a polynomial for every variable."""
        if len(polys) != self.nvars:
            raise ValueError("substitution needs one polynomial per variable")
        nv = polys[0].nvars
        F = self.field
        acc = MultiPoly.zero(F, nv)
        for m, c in self.terms.items():
            term = MultiPoly.constant(F, nv, c)
            for i, e in enumerate(m):
                for _ in range(e):
                    term = term * polys[i]
            acc = acc + term
        return acc

    def permute_vars(self, perm) -> "MultiPoly":
        """Reorder variables: new variable j is old variable perm[j]."""
        out = {}
        for m, c in self.terms.items():
            out[tuple(m[perm[j]] for j in range(self.nvars))] = c
        return MultiPoly(self.field, self.nvars, out)

    def lift_to(self, F: Field) -> "MultiPoly":
        """Reinterpret over F (same field, or embed from the prime subfield)."""
        if self.field == F:
            return self
        if isinstance(F, ExtensionField) and isinstance(self.field, PrimeField) \
                and self.field.p == F.p:
            return MultiPoly(F, self.nvars, {m: F.from_base(c) for m, c in self.terms.items()})
        if isinstance(F, ExtensionField) and isinstance(self.field, ExtensionField) \
                and self.field.p == F.p and self.field.n == 1:
            return MultiPoly(F, self.nvars, {m: F.from_base(c[0]) for m, c in self.terms.items()})
        raise FieldError("field mismatch")

    def univariate_variable(self):
        """Index of the single variable occurring, or None (constants: None)."""
        seen = None
        for m in self.terms:
            for i, e in enumerate(m):
                if e:
                    if seen is None:
                        seen = i
                    elif seen != i:
                        return None
        return seen

    def to_unipoly(self, index: int) -> UniPoly:
        """Convert a polynomial involving only variable ``index``."""
        F = self.field
        coeffs = [F.zero] * (self.degree_in(index) + 1)
        for m, c in self.terms.items():
            if any(e and i != index for i, e in enumerate(m)):
                raise ValueError("polynomial is not univariate in that variable")
            coeffs[m[index]] = c
        return UniPoly(F, coeffs)

    def __eq__(self, other):
        return (isinstance(other, MultiPoly) and other.field == self.field
                and other.nvars == self.nvars and other.terms == self.terms)

    def __hash__(self):
        return hash((self.field, self.nvars, tuple(sorted(self.terms.items()))))

    def sort_key(self):
        F = self.field
        return tuple(sorted((m, F.sort_key(c)) for m, c in self.terms.items()))

    def __repr__(self):
        if not self.terms:
            return "0"
        F = self.field
        parts = []
        for m in sorted(self.terms, reverse=True):
            c = self.terms[m]
            factors = []
            for i, e in enumerate(m):
                if e == 1:
                    factors.append(f"x{i}")
                elif e > 1:
                    factors.append(f"x{i}^{e}")
            cs = F.fmt(c)
            if factors:
                head = "" if cs == "1" else (f"({cs})*" if ("+" in cs or " " in cs) else f"{cs}*")
                parts.append(head + "*".join(factors))
            else:
                parts.append(cs)
        return " + ".join(parts)
