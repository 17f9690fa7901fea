"""Exact field arithmetic: Q, prime fields F_p and extensions F_{p^n} = F_p[t]/(m).

Each field object works on lightweight raw representations (Fraction for Q,
int for F_p, coefficient tuple for F_{p^n}); FieldElement wraps a raw value
together with its field for the operator-based public API.  All values are
canonical after every operation, so raw equality is field equality.
"""

from __future__ import annotations

from fractions import Fraction


class FieldError(ValueError):
    pass


_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for n < 3.3e24."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _SMALL_PRIMES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class FieldElement:
    """A field element: raw representation plus the field it lives in."""

    __slots__ = ("field", "rep")

    def __init__(self, field, rep):
        self.field = field
        self.rep = rep

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldError("field mismatch")
            return other.rep
        if isinstance(other, int):
            return self.field.from_int(other)
        raise TypeError(f"cannot combine field element with {type(other).__name__}")

    def __add__(self, other):
        return FieldElement(self.field, self.field.add(self.rep, self._coerce(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElement(self.field, self.field.sub(self.rep, self._coerce(other)))

    def __rsub__(self, other):
        return FieldElement(self.field, self.field.sub(self._coerce(other), self.rep))

    def __mul__(self, other):
        return FieldElement(self.field, self.field.mul(self.rep, self._coerce(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return FieldElement(self.field, self.field.div(self.rep, self._coerce(other)))

    def __rtruediv__(self, other):
        return FieldElement(self.field, self.field.div(self._coerce(other), self.rep))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.rep))

    def __pow__(self, exponent: int):
        return FieldElement(self.field, self.field.pow_(self.rep, exponent))

    def inverse(self):
        return FieldElement(self.field, self.field.inv(self.rep))

    def frobenius(self):
        return FieldElement(self.field, self.field.frobenius(self.rep))

    def is_zero(self) -> bool:
        return self.field.is_zero(self.rep)

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.rep == other.rep
        if isinstance(other, int):
            return self.rep == self.field.from_int(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.rep))

    def __repr__(self):
        return f"{self.field.fmt(self.rep)}"


class Field:
    """Base class; subclasses implement arithmetic on raw representations."""

    char: int
    size: int | None  # None for infinite fields

    def element(self, value) -> FieldElement:
        return FieldElement(self, self.coerce(value))

    def coerce(self, value):
        if isinstance(value, FieldElement):
            if value.field != self:
                raise FieldError("field mismatch")
            return value.rep
        if isinstance(value, int):
            return self.from_int(value)
        raise TypeError(f"cannot coerce {value!r} into {self}")

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow_(self, a, exponent: int):
        if exponent < 0:
            a = self.inv(a)
            exponent = -exponent
        result = self.one
        base = a
        while exponent:
            if exponent & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            exponent >>= 1
        return result

    def is_zero(self, a) -> bool:
        return a == self.zero


class RationalField(Field):
    """The rational numbers, raw representation fractions.Fraction."""

    char = 0
    size = None
    zero = Fraction(0)
    one = Fraction(1)

    def from_int(self, k):
        return Fraction(k)

    def coerce(self, value):
        if isinstance(value, Fraction):
            return value
        return super().coerce(value)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("division by zero")
        return 1 / a

    def div(self, a, b):
        if b == 0:
            raise ZeroDivisionError("division by zero")
        return a / b

    def frobenius(self, a):
        raise FieldError("frobenius undefined in characteristic 0")

    def sort_key(self, a):
        return a

    def fmt(self, a) -> str:
        return str(a)

    def random(self, rng, bound=50):
        return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


QQ = RationalField()


class PrimeField(Field):
    """F_p, raw representation ints in [0, p)."""

    def __init__(self, p: int):
        if not is_prime(p):
            raise FieldError("not prime")
        self.p = p
        self.char = p
        self.size = p
        self.zero = 0
        self.one = 1 % p

    def from_int(self, k):
        return k % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return -a % self.p

    def mul(self, a, b):
        return a * b % self.p

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("division by zero")
        return pow(a, self.p - 2, self.p)

    def pow_(self, a, exponent: int):
        if exponent < 0:
            return pow(self.inv(a), -exponent, self.p)
        return pow(a, exponent, self.p)

    def frobenius(self, a):
        return a

    def sort_key(self, a):
        return a

    def fmt(self, a) -> str:
        return str(a)

    def random(self, rng):
        return rng.randrange(self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))

    def __repr__(self):
        return f"GF({self.p})"


# --- dense univariate helpers over F_p (internal: modulus search, inverses) ---
# polynomials as lists of ints mod p, ascending powers, no trailing zeros


def _trim(c):
    while c and c[-1] == 0:
        c.pop()
    return c


def _pmul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return _trim([v % p for v in out])


def _pmod(a, m, p):
    a = list(a)
    dm = len(m) - 1
    inv_lead = pow(m[-1], p - 2, p)
    while len(a) - 1 >= dm and a:
        coef = a[-1] * inv_lead % p
        shift = len(a) - 1 - dm
        for i, mi in enumerate(m):
            a[shift + i] = (a[shift + i] - coef * mi) % p
        _trim(a)
    return a


def _pdivmod(a, m, p):
    a = list(a)
    dm = len(m) - 1
    inv_lead = pow(m[-1], p - 2, p)
    q = [0] * max(len(a) - dm, 0)
    while len(a) - 1 >= dm and a:
        coef = a[-1] * inv_lead % p
        shift = len(a) - 1 - dm
        q[shift] = coef
        for i, mi in enumerate(m):
            a[shift + i] = (a[shift + i] - coef * mi) % p
        _trim(a)
    return _trim(q), a


def _psub(a, b, p):
    out = list(a) + [0] * (len(b) - len(a))
    for i, v in enumerate(b):
        out[i] = (out[i] - v) % p
    return _trim([v % p for v in out])


def _pgcd(a, b, p):
    a, b = list(a), list(b)
    while b:
        a, b = b, _pmod(a, b, p)
    if a:
        inv = pow(a[-1], p - 2, p)
        a = [v * inv % p for v in a]
    return a


def _ppowmod(base, exponent, m, p):
    result = [1]
    base = _pmod(base, m, p)
    while exponent:
        if exponent & 1:
            result = _pmod(_pmul(result, base, p), m, p)
        base = _pmod(_pmul(base, base, p), m, p)
        exponent >>= 1
    return result


def _prime_divisors(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _is_irreducible_modp(m, p):
    """Rabin irreducibility test for a monic polynomial over F_p."""
    n = len(m) - 1
    if n < 1:
        return False
    if n == 1:
        return True
    x = [0, 1]
    for q in _prime_divisors(n):
        h = _ppowmod(x, p ** (n // q), m, p)
        if len(_pgcd(_psub(h, x, p), m, p)) != 1:
            return False
    h = _ppowmod(x, p ** n, m, p)
    return _psub(h, x, p) == []


class ExtensionField(Field):
    """F_{p^n} = F_p[t]/(m(t)); raw representation: tuple of n ints, c0 first."""

    def __init__(self, p: int, n: int, modulus: tuple[int, ...]):
        if not is_prime(p):
            raise FieldError("not prime")
        if n < 1:
            raise FieldError("degree must be >= 1")
        if len(modulus) != n + 1 or modulus[-1] % p != 1:
            raise FieldError("modulus must be monic of the stated degree")
        modulus = tuple(c % p for c in modulus)
        if not _is_irreducible_modp(list(modulus), p):
            raise FieldError("modulus is reducible")
        self.base = PrimeField(p)
        self.p = p
        self.n = n
        self.modulus = modulus
        self.char = p
        self.size = p ** n
        self.zero = (0,) * n
        self.one = (1 % p,) + (0,) * (n - 1)
        # x^k mod m for k in [n, 2n-2], used to fold products back below degree n
        first = [(-modulus[i]) % p for i in range(n)]  # x^n mod m
        red = [tuple(first)]
        cur = first
        for _ in range(n - 2):
            top = cur[n - 1]
            nxt = [0] + cur[: n - 1]
            if top:
                for i in range(n):
                    nxt[i] = (nxt[i] + top * first[i]) % p
            red.append(tuple(nxt))
            cur = nxt
        self._red = red
        self._frob_matrix = None

    def from_int(self, k):
        return (k % self.p,) + (0,) * (self.n - 1)

    def from_base(self, rep: int):
        """Embed an F_p raw value."""
        return (rep % self.p,) + (0,) * (self.n - 1)

    def coerce(self, value):
        if isinstance(value, tuple):
            if len(value) != self.n:
                raise FieldError("wrong representation length")
            return tuple(c % self.p for c in value)
        return super().coerce(value)

    def in_prime_subfield(self, a) -> bool:
        return all(c == 0 for c in a[1:])

    def to_base(self, a) -> int:
        if not self.in_prime_subfield(a):
            raise FieldError("element not in the prime subfield")
        return a[0]

    def generator(self):
        """The class of t."""
        if self.n == 1:
            # t is congruent to the negated constant term of the modulus
            return ((-self.modulus[0]) % self.p,)
        return (0, 1) + (0,) * (self.n - 2)

    def add(self, a, b):
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def sub(self, a, b):
        p = self.p
        return tuple((x - y) % p for x, y in zip(a, b))

    def neg(self, a):
        p = self.p
        return tuple(-x % p for x in a)

    def mul(self, a, b):
        p = self.p
        n = self.n
        if n == 1:
            return (a[0] * b[0] % p,)
        buf = [0] * (2 * n - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        buf[i + j] += ai * bj
        red = self._red
        for k in range(2 * n - 2, n - 1, -1):
            c = buf[k] % p
            if c:
                row = red[k - n]
                for idx in range(n):
                    m = row[idx]
                    if m:
                        buf[idx] += c * m
        return tuple(v % p for v in buf[:n])

    def inv(self, a):
        if a == self.zero:
            raise ZeroDivisionError("division by zero")
        p = self.p
        # extended Euclid on dense lists over F_p: s*a = gcd (mod modulus)
        r0, r1 = list(self.modulus), _trim(list(a))
        s0, s1 = [], [1]
        while r1:
            q, rem = _pdivmod(r0, r1, p)
            r0, r1, s0, s1 = r1, rem, s1, _psub(s0, _pmul(q, s1, p), p)
        lead_inv = pow(r0[-1], p - 2, p)
        s0 = _pmod([v * lead_inv % p for v in s0], list(self.modulus), p)
        return tuple(s0 + [0] * (self.n - len(s0)))

    def frobenius(self, a):
        if self._frob_matrix is None:
            cols = []
            for i in range(self.n):
                basis = tuple(1 if j == i else 0 for j in range(self.n))
                cols.append(self.pow_(basis, self.p))
            self._frob_matrix = cols
        p = self.p
        out = [0] * self.n
        for i, ai in enumerate(a):
            if ai:
                col = self._frob_matrix[i]
                for j in range(self.n):
                    out[j] += ai * col[j]
        return tuple(v % p for v in out)

    def sort_key(self, a):
        return a

    def fmt(self, a) -> str:
        parts = []
        for i in range(self.n - 1, -1, -1):
            c = a[i]
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            elif i == 1:
                parts.append("t" if c == 1 else f"{c}*t")
            else:
                parts.append(f"t^{i}" if c == 1 else f"{c}*t^{i}")
        return " + ".join(parts) if parts else "0"

    def random(self, rng):
        return tuple(rng.randrange(self.p) for _ in range(self.n))

    def __eq__(self, other):
        return (isinstance(other, ExtensionField) and other.p == self.p
                and other.n == self.n and other.modulus == self.modulus)

    def __hash__(self):
        return hash(("Fpn", self.p, self.n, self.modulus))

    def __repr__(self):
        return f"GF({self.p}^{self.n})"


_extension_cache: dict[tuple[int, int], ExtensionField] = {}


def make_extension(p: int, n: int) -> ExtensionField:
    """Canonical F_{p^n}: modulus is the lexicographically smallest monic
    irreducible of degree n over F_p, comparing coefficient tuples
    (c0, c1, ..., c_{n-1}) with residues ordered 0 < 1 < ... < p-1."""
    if not is_prime(p):
        raise FieldError("not prime")
    if n < 1:
        raise FieldError("degree must be >= 1")
    key = (p, n)
    cached = _extension_cache.get(key)
    if cached is not None:
        return cached
    # a zero constant term means t divides the candidate, so for n >= 2 the
    # whole c0 = 0 block is reducible and can be skipped
    start = p ** (n - 1) if n >= 2 else 0
    for code in range(start, p ** n):
        coeffs = []
        rest = code
        for i in range(n - 1, -1, -1):
            coeffs.append(rest // p ** i)  # c0 is the most significant digit
            rest %= p ** i
        m = coeffs + [1]
        if _is_irreducible_modp(m, p):
            field = ExtensionField(p, n, tuple(m))
            _extension_cache[key] = field
            return field
    raise FieldError("no irreducible modulus found")  # unreachable


_ARITH_OPS = {
    "add": lambda a, b: a + b,
    "sub": lambda a, b: a - b,
    "mul": lambda a, b: a * b,
    "div": lambda a, b: a / b,
    "inv": lambda a: a.inverse(),
    "pow": lambda a, k: a ** k,
    "frobenius": lambda a: a.frobenius(),
}


def field_arith(op: str, *operands):
    """Named exact field operation on FieldElements (pow takes an int exponent)."""
    if op not in _ARITH_OPS:
        raise FieldError(f"unknown operation {op!r}")
    return _ARITH_OPS[op](*operands)
